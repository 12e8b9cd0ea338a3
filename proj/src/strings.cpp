#include "pcb/strings.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>
#include <utility>

#include "pcb/errors.hpp"

namespace pcb {

namespace {
constexpr int kBitsPerBlock = 64;

int block_count(int width) { return (width + kBitsPerBlock - 1) / kBitsPerBlock; }
} // namespace

BitString::BitString(int width) : width_(width) {
    if (width < 1) throw InvalidInputError("bit-string width must be >= 1");
    blocks_.assign(block_count(width), 0);
}

BitString BitString::parse(const std::string& text) {
    BitString s(static_cast<int>(text.size()));
    for (int i = 0; i < static_cast<int>(text.size()); ++i) {
        const char c = text[i];
        if (c != '0' && c != '1')
            throw ParseError("bit-string may contain only 0/1, got '" +
                             std::string(1, c) + "'");
        if (c == '1') s.set(i + 1, true);
    }
    return s;
}

BitString BitString::ones(int width) {
    BitString s(width);
    for (int i = 1; i <= width; ++i) s.set(i, true);
    return s;
}

bool BitString::get(int i) const {
    if (i < 1 || i > width_) throw InvalidInputError("bit index out of range");
    const int k = i - 1;
    return (blocks_[k / kBitsPerBlock] >> (k % kBitsPerBlock)) & 1u;
}

void BitString::set(int i, bool value) {
    if (i < 1 || i > width_) throw InvalidInputError("bit index out of range");
    const int k = i - 1;
    const uint64_t mask = uint64_t{1} << (k % kBitsPerBlock);
    if (value)
        blocks_[k / kBitsPerBlock] |= mask;
    else
        blocks_[k / kBitsPerBlock] &= ~mask;
}

int BitString::popcount() const {
    int count = 0;
    for (uint64_t b : blocks_) count += std::popcount(b);
    return count;
}

std::vector<int> BitString::one_indices() const {
    std::vector<int> out;
    for (int i = 1; i <= width_; ++i)
        if (get(i)) out.push_back(i);
    return out;
}

std::vector<int> BitString::zero_indices() const {
    std::vector<int> out;
    for (int i = 1; i <= width_; ++i)
        if (!get(i)) out.push_back(i);
    return out;
}

void BitString::check_same_width(const BitString& rhs) const {
    if (width_ != rhs.width_)
        throw InvalidInputError("bit-string width mismatch: " +
                                std::to_string(width_) + " vs " +
                                std::to_string(rhs.width_));
}

BitString BitString::operator&(const BitString& rhs) const {
    check_same_width(rhs);
    BitString out(width_);
    for (size_t k = 0; k < blocks_.size(); ++k)
        out.blocks_[k] = blocks_[k] & rhs.blocks_[k];
    return out;
}

BitString BitString::operator|(const BitString& rhs) const {
    check_same_width(rhs);
    BitString out(width_);
    for (size_t k = 0; k < blocks_.size(); ++k)
        out.blocks_[k] = blocks_[k] | rhs.blocks_[k];
    return out;
}

std::string BitString::str() const {
    std::string out(width_, '0');
    for (int i = 1; i <= width_; ++i)
        if (get(i)) out[i - 1] = '1';
    return out;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    for (int i = 1; i <= a.width_; ++i) {
        const bool ba = a.get(i), bb = b.get(i);
        if (ba != bb) return ba ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

size_t BitString::hash() const {
    size_t h = static_cast<size_t>(width_) * 0x9e3779b97f4a7c15ull;
    for (uint64_t b : blocks_) h = h * 0x100000001b3ull ^ b;
    return h;
}

StringSet::StringSet(std::vector<BitString> members) {
    if (members.empty()) return;
    width_ = members.front().width();
    for (const auto& s : members)
        if (s.width() != width_)
            throw InvalidInputError("string set members must share one width");
    std::unordered_set<std::string> seen;
    for (const auto& s : members)
        if (!seen.insert(s.str()).second)
            throw InvalidInputError("duplicate string " + s.str());
    members_ = std::move(members);
}

bool StringSet::contains(const BitString& s) const {
    for (const auto& m : members_)
        if (m == s) return true;
    return false;
}

bool StringSet::is_c_regular(int c) const {
    for (const auto& m : members_)
        if (m.popcount() != c) return false;
    return true;
}

Formula Formula::leaf(int member_index) {
    Formula f;
    f.kind_ = Kind::Leaf;
    f.leaf_index_ = member_index;
    return f;
}

Formula Formula::make_and(Formula left, Formula right) {
    Formula f;
    f.kind_ = Kind::And;
    f.left_ = std::make_shared<Formula>(std::move(left));
    f.right_ = std::make_shared<Formula>(std::move(right));
    return f;
}

Formula Formula::make_or(Formula left, Formula right) {
    Formula f;
    f.kind_ = Kind::Or;
    f.left_ = std::make_shared<Formula>(std::move(left));
    f.right_ = std::make_shared<Formula>(std::move(right));
    return f;
}

BitString Formula::evaluate(const StringSet& w) const {
    switch (kind_) {
    case Kind::Leaf:
        return w.at(leaf_index_);
    case Kind::And:
        return left_->evaluate(w) & right_->evaluate(w);
    case Kind::Or:
        return left_->evaluate(w) | right_->evaluate(w);
    }
    throw Error("unreachable");
}

std::string Formula::str() const {
    switch (kind_) {
    case Kind::Leaf:
        return "s" + std::to_string(leaf_index_);
    case Kind::And:
        return "(and " + left_->str() + " " + right_->str() + ")";
    case Kind::Or:
        return "(or " + left_->str() + " " + right_->str() + ")";
    }
    throw Error("unreachable");
}

TVector t_vector(const StringSet& w, int i) {
    if (i < 1 || i > w.width()) throw InvalidInputError("bit index out of range");
    TVector out;
    for (const auto& x : w.members()) {
        if (x.get(i)) continue;
        if (!out.present) {
            out.present = true;
            out.t = x;
        } else {
            out.t = out.t | x;
        }
    }
    return out;
}

namespace {

// Shared core of is_expressible / find_formula over an indexed member view,
// so the EI check can run on X\{x} while formula leaves keep the original
// positions.
struct MemberView {
    const StringSet* set;
    std::vector<int> indices; // positions into *set

    int width() const { return set->width(); }
    const BitString& at(int k) const { return set->at(indices[k]); }
    int size() const { return static_cast<int>(indices.size()); }
};

std::optional<Formula> find_formula_view(const MemberView& w, const BitString& s) {
    if (w.size() == 0) throw InvalidInputError("operand set is empty");
    if (s.width() != w.width()) throw InvalidInputError("bit-string width mismatch");

    if (s.is_ones()) {
        // Monotone formulas never exceed the OR of all operands, so the only
        // candidate is that OR itself.
        BitString acc = w.at(0);
        Formula f = Formula::leaf(w.indices[0]);
        for (int k = 1; k < w.size(); ++k) {
            acc = acc | w.at(k);
            f = Formula::make_or(std::move(f), Formula::leaf(w.indices[k]));
        }
        if (acc == s) return f;
        return std::nullopt;
    }

    std::optional<Formula> conjunction;
    for (int i = 1; i <= s.width(); ++i) {
        if (s.get(i)) continue;
        // t_i over the view, as a left-folded OR of T_i members.
        std::optional<BitString> t;
        std::optional<Formula> t_formula;
        for (int k = 0; k < w.size(); ++k) {
            const BitString& x = w.at(k);
            if (x.get(i)) continue;
            if (!t) {
                t = x;
                t_formula = Formula::leaf(w.indices[k]);
            } else {
                t = *t | x;
                t_formula = Formula::make_or(std::move(*t_formula),
                                             Formula::leaf(w.indices[k]));
            }
        }
        if (!t) return std::nullopt; // T_i empty: bit i can never be zeroed
        for (int j : s.one_indices())
            if (!t->get(j)) return std::nullopt; // One(s) not within One(t_i)
        conjunction = conjunction
                          ? Formula::make_and(std::move(*conjunction), std::move(*t_formula))
                          : std::move(*t_formula);
    }
    return conjunction;
}

} // namespace

bool is_expressible(const StringSet& w, const BitString& s) {
    if (w.empty()) throw InvalidInputError("operand set is empty");
    if (s.width() != w.width()) throw InvalidInputError("bit-string width mismatch");

    if (s.is_ones()) {
        BitString acc = w.at(0);
        for (int k = 1; k < w.size(); ++k) acc = acc | w.at(k);
        return acc == s;
    }
    for (int i = 1; i <= s.width(); ++i) {
        if (s.get(i)) continue;
        const TVector ti = t_vector(w, i);
        if (!ti.present) return false;
        for (int j : s.one_indices())
            if (!ti.t.get(j)) return false;
    }
    return true;
}

std::optional<Formula> find_formula(const StringSet& w, const BitString& s) {
    MemberView view{&w, {}};
    view.indices.resize(w.size());
    for (int k = 0; k < w.size(); ++k) view.indices[k] = k;
    return find_formula_view(view, s);
}

bool is_expressible_2regular(const StringSet& w, const BitString& x) {
    if (x.width() != w.width()) throw InvalidInputError("bit-string width mismatch");
    if (!w.is_c_regular(2)) throw InvalidInputError("operand set is not 2-regular");
    if (x.popcount() != 2) throw InvalidInputError("target string is not 2-regular");
    if (w.contains(x)) throw InvalidInputError("target string is a member of the set");

    const auto ones = x.one_indices();
    int count_i = 0, count_j = 0;
    for (const auto& y : w.members()) {
        if (y.get(ones[0])) ++count_i;
        if (y.get(ones[1])) ++count_j;
    }
    return count_i >= 2 && count_j >= 2;
}

EiVerdict is_expressible_independent(const StringSet& x) {
    for (int k = 0; k < x.size(); ++k) {
        MemberView rest{&x, {}};
        for (int j = 0; j < x.size(); ++j)
            if (j != k) rest.indices.push_back(j);
        if (rest.size() == 0) continue; // nothing to express a lone member from
        if (auto f = find_formula_view(rest, x.at(k)))
            return EiVerdict{false, k, std::move(f)};
    }
    return EiVerdict{};
}

StringSet closure(const StringSet& w, int cap) {
    struct Hash {
        size_t operator()(const BitString& s) const { return s.hash(); }
    };
    std::unordered_set<BitString, Hash> seen;
    std::vector<BitString> all; // worklist; grows as new elements appear
    auto insert = [&](const BitString& z) {
        if (seen.insert(z).second) {
            if (static_cast<int>(seen.size()) > cap)
                throw CapExceededError("closure would exceed cap " + std::to_string(cap));
            all.push_back(z);
        }
    };
    for (const auto& s : w.members()) insert(s);
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = 0; j <= i; ++j) {
            const BitString a = all[i]; // copies: all may reallocate on insert
            const BitString b = all[j];
            insert(a & b);
            insert(a | b);
        }
    }
    std::sort(all.begin(), all.end());
    return StringSet(std::move(all));
}

} // namespace pcb
