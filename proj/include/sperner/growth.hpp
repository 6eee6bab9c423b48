#pragma once

#include "sperner/bigint.hpp"
#include "sperner/dyadic.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sperner {

/// Certified bound: sum over n > from of f_n/2^n is at most bound.
struct TailCertificate {
    long from = 0;
    Dyadic bound;
};

/// Growth target (f_n) for n >= n0: positive integers, nondecreasing,
/// f_{n+1} <= 2 f_n, with a certified bound on the series sum f_n/2^n.
///
/// Values are backed by a finite table. With the constant extension the
/// sequence is total (f_n = last table value beyond the table, which
/// preserves both monotonicity conditions and yields the exact geometric
/// tail f_N/2^N); without it, access past the table throws and the tail
/// bound must be supplied by the caller.
class GrowthSequence {
public:
    enum class Extension { Constant, None };

    GrowthSequence(long n0, std::vector<BigInt> table, Extension ext,
                   std::optional<Dyadic> tail_bound = std::nullopt,
                   std::string name = "table");

    long n0() const { return n0_; }
    long table_end() const { return n0_ + static_cast<long>(table_.size()) - 1; }
    bool total() const { return ext_ == Extension::Constant; }
    Extension extension() const { return ext_; }
    BigInt f(long n) const;
    const TailCertificate& tail() const { return tail_; }
    /// Exact upper bound on sum over n >= n0 of f_n/2^n.
    const Dyadic& certified_total() const { return total_bound_; }
    const std::string& name() const { return name_; }

    /// All-ones family from n0; the full series is exactly 2^{1-n0}.
    static GrowthSequence constant_family(long n0);

    /// Family tracking c * 2^n / (n * (log2 n)^{1+eps}) with eps =
    /// eps_num/eps_den > 0, tabulated up to table_end, constant beyond.
    /// The scale c = 2^-j and the start index (largest n with f_n = 1)
    /// are chosen so the certified series bound stays <= 1/4.
    static GrowthSequence corollary_family(long eps_num, long eps_den,
                                           long n_min = 12, long table_end = 400);

    /// Seeded valid family: the budget invariant partial_sum + f_n/2^n <= 1/4
    /// is maintained at every step, so the result always validates.
    static GrowthSequence random_family(std::uint64_t seed);

    /// CSV with header "n,f_n", consecutive rows, and a final directive
    /// line "#extend=constant" or "#tail_bound=m/2^e".
    static GrowthSequence load_csv(std::istream& in, std::string name = "table");
    static GrowthSequence load_csv_file(const std::string& path);
    void save_csv(std::ostream& out) const;

private:
    long n0_;
    std::vector<BigInt> table_;
    Extension ext_;
    TailCertificate tail_;
    Dyadic total_bound_;
    std::string name_;
};

struct Violation {
    enum class Kind { FirstValueNotOne, Decreasing, RatioExceeded, SumExceedsQuarter };
    Kind kind;
    long index;  // left index n of the offending pair, or n0 / tail start
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    long checked_to = 0;  // last pair index actually examined
    Dyadic partial_sum;   // exact sum n0..tail.from
    Dyadic total_bound;   // partial + certified tail
    bool valid() const { return violations.empty(); }
    std::string str() const;
};

/// Hypothesis check at finite scale: f_{n0} = 1, monotone and ratio
/// conditions for pair indices n0 <= n <= N, certified series bound <= 1/4.
/// Violations are report content, never exceptions.
ValidationReport validate(const GrowthSequence& seq, long N);

/// Derived tables k0 = n0 - 1, ell_k, a_k = ell_k - k and the running
/// Kraft sums s_k = sum_{j<=k} a_j/2^j, for k0 <= k <= k_max. Immutable
/// once built; the s_{k0-1} = 0 and ell_{k0-1} = k0 conventions live here.
class ConstructionPlan {
public:
    long k0() const { return k0_; }
    long n0() const { return k0_ + 1; }
    long k_max() const { return k0_ + static_cast<long>(ell_.size()) - 1; }

    long ell(long k) const { return ell_.at(idx(k)); }
    long a(long k) const { return a_.at(idx(k)); }
    const Dyadic& s(long k) const { return s_.at(idx(k)); }
    long ell_prev(long k) const { return k == k0_ ? k0_ : ell(k - 1); }
    Dyadic s_prev(long k) const { return k == k0_ ? Dyadic::zero() : s(k - 1); }

    bool covers_level(long n) const { return !ell_.empty() && ell_.back() >= n; }
    /// The k with n in (ell_{k-1}, ell_k]; requires n0 <= n <= ell_{k_max}.
    long level_block(long n) const;

    /// Plan with ell_k = k + a_k; serves synthetic block-size tables.
    static ConstructionPlan from_block_sizes(long k0, const std::vector<long>& a);
    /// Assembles a plan from externally supplied tables without any
    /// consistency enforcement; check_claim1 certifies such plans.
    static ConstructionPlan from_tables(long k0, std::vector<long> ell,
                                        std::vector<long> a, std::vector<Dyadic> s);

private:
    friend ConstructionPlan build_plan(const GrowthSequence&, long);
    friend ConstructionPlan build_plan_covering(const GrowthSequence&, long);
    ConstructionPlan() = default;
    std::size_t idx(long k) const;

    long k0_ = 0;
    std::vector<long> ell_;
    std::vector<long> a_;
    std::vector<Dyadic> s_;
};

/// Forward-scans ell_k = max{n : f_n * 2^{k+1} >= 2^n} with exact integer
/// tests, then fills a_k and s_k. The sequence must already validate.
ConstructionPlan build_plan(const GrowthSequence& seq, long k_max);
/// Smallest plan whose last block reaches level n_target.
ConstructionPlan build_plan_covering(const GrowthSequence& seq, long n_target);

/// Downward extension f_n = ceil(f_{n0} / 2^{n0-n}) for n < n0, re-based at
/// n0' = max{n : f_n = 1}. Requires 1 < f_{n0} < 2^{n0}/(8 n0) and a
/// certified series bound <= 1/4 - 2 n0 f_{n0}/2^{n0}; a sequence already
/// starting at 1 is returned unchanged.
GrowthSequence normalize_remark(const GrowthSequence& seq);

/// Deterministic generator used by the seeded families and tests.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// Uniform-ish draw in [lo, hi] (modulo bias is irrelevant here).
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi);
};

}  // namespace sperner
