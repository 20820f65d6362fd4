#ifndef LWCQ_LWC_HPP
#define LWCQ_LWC_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lwcq/errors.hpp"
#include "lwcq/rational.hpp"

namespace lwcq {

// Plain sequence of nonnegative parts, no constraint on the last entry.
// The quasi-shuffle machinery works at this level.
using WeakSeq = std::vector<int>;

/// A left weak composition: nonnegative parts, empty or ending in a
/// positive part.  The canonical representation is the flat part
/// sequence; the block view (zero runs + positive parts) is derived.
class Lwc {
public:
    Lwc() = default;
    explicit Lwc(WeakSeq parts);

    const WeakSeq& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    long long size() const;
    int zero_count() const;
    int positive_count() const;

    bool is_composition() const;  // no zero parts

    bool operator==(const Lwc& o) const { return parts_ == o.parts_; }
    bool operator!=(const Lwc& o) const { return parts_ != o.parts_; }

private:
    WeakSeq parts_;
};

struct LwcBlock {
    int zeros;  // i_p >= 0
    int part;   // s_p >= 1
    bool operator==(const LwcBlock& o) const { return zeros == o.zeros && part == o.part; }
};

/// Block normal form (0^{i_1}, s_1, ..., 0^{i_k}, s_k); unique, and
/// flatten(blocks(a)) == a.
std::vector<LwcBlock> blocks(const Lwc& a);
Lwc flatten(const std::vector<LwcBlock>& blocks);

/// A composition: positive parts only.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    long long size() const;

    Lwc as_lwc() const { return Lwc(parts_); }

private:
    std::vector<int> parts_;
};

/// Partial sums of a composition of n, excluding n itself.
std::set<long long> descent_set(const Composition& a);

/// The refinement order extended to left weak compositions: a <= b iff,
/// writing b = (0^{j_1}, b_1, ..., 0^{j_k}, b_k), a can be written as
/// (0^{i_1}, A_1, ..., 0^{i_k}, A_k) with i_p <= j_p and A_p a
/// composition of b_p.  The writing of a is forced, so no search is
/// needed.
bool refines(const Lwc& a, const Lwc& b);

/// All b <= a, each exactly once.  Enumerates independent block
/// choices: j_p in [0, i_p] and a composition of s_p per block.
std::vector<Lwc> refinements_below(const Lwc& a);

/// Text form: comma-separated parts in parentheses, "0^k" sugar for a
/// zero run on input, "()" for the empty composition.  Canonical
/// output is the flat form without sugar.
Lwc parse_lwc(const std::string& text);
std::string format_lwc(const Lwc& a);

std::vector<std::vector<int>> compositions_of(int n);
/// All LWCs of size n with at most zero_budget zeros (n >= 1).
std::vector<Lwc> lwcs_of_size(int n, int zero_budget);
/// As above but also bounding the flat length.
std::vector<Lwc> lwcs_of_size_maxlen(int n, int zero_budget, int max_len);

// Graded-lexicographic order: by size, then flat length, then
// components left to right.  Canonical serialization order.
bool grlex_less(const WeakSeq& a, const WeakSeq& b);
bool grlex_less(const Lwc& a, const Lwc& b);
inline bool operator<(const Lwc& a, const Lwc& b) { return grlex_less(a, b); }

template <class K>
struct GrlexLess {
    bool operator()(const K& a, const K& b) const { return grlex_less(a, b); }
};

}  // namespace lwcq

#endif
