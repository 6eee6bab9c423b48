#pragma once

#include "sperner/bigint.hpp"
#include "sperner/bitstring.hpp"
#include "sperner/growth.hpp"
#include "sperner/prefix_code.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace sperner {

/// Member of F_{k,i}: a length-ell_k string whose first k digits are the
/// codeword c_{k,i}, with exactly i ones after position k and, for k > k0,
/// at least one of them after position ell_{k-1}. Viewed as a subset of N.
struct Element {
    BlockIndex block;
    BitString bits;
};

/// Return false to stop enumeration early.
using ElementVisitor = std::function<bool(const Element&)>;
using SuffixVisitor = std::function<bool(const BitString&)>;

/// Streams the admissible suffix patterns of block idx at level n, as bit
/// strings over the window positions k+1..ell_k (relative indexing), in
/// lexicographically increasing order. Returns false when stopped early.
bool enumerate_suffixes(const ConstructionPlan& plan, BlockIndex idx, long n,
                        const SuffixVisitor& visit);

/// F_{k,i} restricted to 2^[n]: members whose largest one-position is <= n.
bool enumerate_block(const ConstructionPlan& plan, BlockIndex idx, long n,
                     const ElementVisitor& visit);

/// The whole family restricted to 2^[n], blocks in lexicographically
/// increasing (k, i) order, suffixes in canonical order within a block.
/// The plan must cover level n.
bool enumerate_up_to(const ConstructionPlan& plan, long n, const ElementVisitor& visit);

std::vector<Element> collect_block(const ConstructionPlan& plan, BlockIndex idx, long n);
std::vector<Element> collect_up_to(const ConstructionPlan& plan, long n);

/// |F intersect 2^[n]| by the block recurrence
/// N(n) = N(ell_{k-1}) + 2^{n-k} - 2^{ell_{k-1}-k} for n in (ell_{k-1}, ell_k].
BigInt count_exact(const ConstructionPlan& plan, long n);

/// Independent route: per-block binomial sums
/// sum_i C(min(n, ell_k) - k, i) - C(ell_{k-1} - k, i).
BigInt count_by_binomials(const ConstructionPlan& plan, long n);

/// Membership test inverting the construction: scans k upward matching the
/// exact dyadic prefix value against 1 - s_{k-1} - i/2^k, then checks the
/// suffix conditions. Positions beyond the planned blocks decode to nothing.
std::optional<BlockIndex> decode(const ConstructionPlan& plan, const std::vector<long>& set);

struct LevelCounts {
    long n0 = 0;
    long n_max = 0;
    std::vector<BigInt> counts;        // |F intersect 2^[n]|, index n - n0
    std::vector<BigInt> f;             // growth target f_n
    std::vector<BigInt> lower_bounds;  // 2^{n-k} - 1 for the block of n

    const BigInt& count(long n) const { return counts.at(static_cast<std::size_t>(n - n0)); }
    const BigInt& f_at(long n) const { return f.at(static_cast<std::size_t>(n - n0)); }
    const BigInt& lower_bound(long n) const {
        return lower_bounds.at(static_cast<std::size_t>(n - n0));
    }
};

LevelCounts build_level_counts(const ConstructionPlan& plan, const GrowthSequence& seq,
                               long n_max);

void write_counts_csv(std::ostream& out, const LevelCounts& counts);

}  // namespace sperner
