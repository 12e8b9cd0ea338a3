#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pcb {

/// Fixed-width binary string b_1..b_m. Bit indices in the public API are
/// 1-based, matching the b_i convention used throughout the string modules;
/// the leftmost character of the text form is bit 1.
class BitString {
public:
    BitString() = default;
    explicit BitString(int width);                 // all zero
    static BitString parse(const std::string& text);
    static BitString zeros(int width) { return BitString(width); }
    static BitString ones(int width);

    int width() const { return width_; }
    bool get(int i) const;        // 1-based
    void set(int i, bool value);  // 1-based

    int popcount() const;
    bool is_zeros() const { return popcount() == 0; }
    bool is_ones() const { return popcount() == width_; }

    std::vector<int> one_indices() const;   // 1-based, ascending
    std::vector<int> zero_indices() const;  // 1-based, ascending

    BitString operator&(const BitString& rhs) const;  // widths must match
    BitString operator|(const BitString& rhs) const;

    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;
    /// Lexicographic on the text form; total order for canonical listings.
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

    size_t hash() const;

private:
    int width_ = 0;
    std::vector<uint64_t> blocks_;

    void check_same_width(const BitString& rhs) const;
};

/// Ordered set of distinct BitStrings of uniform width. Input order is
/// preserved: formula leaves refer to members as s0, s1, ... in this order.
class StringSet {
public:
    StringSet() = default;
    explicit StringSet(int width) : width_(width) {}
    /// Throws InvalidInputError on duplicates or mixed widths.
    explicit StringSet(std::vector<BitString> members);

    int width() const { return width_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const BitString& at(int k) const { return members_.at(k); }
    const std::vector<BitString>& members() const { return members_; }
    bool contains(const BitString& s) const;

    /// True iff every member has exactly c one bits.
    bool is_c_regular(int c) const;

private:
    int width_ = 0;
    std::vector<BitString> members_;
};

/// Monotone formula over a StringSet: leaves are member indices, internal
/// nodes are AND/OR. Serializes as parenthesized prefix text, e.g.
/// "(or (and s0 s1) (and s2 s3))".
class Formula {
public:
    enum class Kind { Leaf, And, Or };

    static Formula leaf(int member_index);
    static Formula make_and(Formula left, Formula right);
    static Formula make_or(Formula left, Formula right);

    Kind kind() const { return kind_; }
    int leaf_index() const { return leaf_index_; }

    BitString evaluate(const StringSet& w) const;
    std::string str() const;

private:
    Kind kind_ = Kind::Leaf;
    int leaf_index_ = -1;
    std::shared_ptr<const Formula> left_, right_;
};

/// t_i = OR over the members whose i-th bit is 0. present=false iff no such
/// member exists. i is 1-based; out of range throws.
struct TVector {
    bool present = false;
    BitString t;
};

TVector t_vector(const StringSet& w, int i);

/// Theorem-style expressibility check: for s != all-ones, s is expressible
/// from w iff for every i in Zero(s), T_i is non-empty and
/// One(s) is a subset of One(t_i). For s = all-ones, iff the OR over all of
/// w equals all-ones. Throws on width mismatch or empty w.
bool is_expressible(const StringSet& w, const BitString& s);

/// Constructive companion of is_expressible: the AND over Zero(s) of the
/// t_i ORs (the OR of all members for s = all-ones). The returned formula
/// evaluates exactly to s; nullopt when s is not expressible.
std::optional<Formula> find_formula(const StringSet& w, const BitString& s);

/// 2-regular shortcut: for 2-regular w and 2-regular x not in w with
/// One(x)={i,j}, x is expressible iff at least two members have bit i set
/// and at least two have bit j set. Precondition violations throw
/// InvalidInputError with distinct messages.
bool is_expressible_2regular(const StringSet& w, const BitString& x);

/// Verdict of the expressible-independence check: ok, or one offending
/// member (by index) with a witnessing formula over the remaining members.
/// Formula leaf indices refer to positions in the original set.
struct EiVerdict {
    bool ok = true;
    int member_index = -1;
    std::optional<Formula> witness;
};

EiVerdict is_expressible_independent(const StringSet& x);

/// Least fixpoint of w under pairwise bitwise AND and OR. Throws
/// CapExceededError if the fixpoint would exceed cap members. The result is
/// sorted canonically. s is expressible from w iff s is in closure(w).
StringSet closure(const StringSet& w, int cap = 1 << 16);

} // namespace pcb
