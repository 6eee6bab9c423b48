#pragma once

#include "sperner/bigint.hpp"
#include "sperner/dyadic.hpp"
#include "sperner/family.hpp"
#include "sperner/growth.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sperner {

/// Outcome of one independent check. Carries the exact quantities that
/// decide the verdict (never floating point) so failures replay bit for
/// bit; a witness is present exactly when the verdict is a failure.
struct Certificate {
    enum class Kind { Antichain, Sperner, KraftSeries, Claim1, Claim3 };

    struct Witness {
        std::string description;
        std::vector<std::vector<long>> sets;  // offending sets, sorted members
        std::optional<long> index;            // offending n or k, when indexed
    };

    Kind kind;
    std::string scope;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> values;
    std::optional<Witness> witness;

    std::string kind_name() const;
    std::string to_json_string() const;
    std::string str() const;
};

/// Pairwise containment over all distinct pairs; the first offending
/// ordered pair (in scan order) becomes the witness. Duplicate sets count
/// as containments.
Certificate check_antichain(const std::vector<BitString>& elements);
Certificate check_antichain(const std::vector<Element>& elements);

/// count <= C(n, floor(n/2)), exact binomial.
Certificate check_sperner(const BigInt& count, long n);
/// The same bound applied to every tabulated level.
Certificate check_sperner_levels(const LevelCounts& counts);

/// Exact partial sum of count_n / 2^n over the tabulated levels, bound 2.
Certificate check_kraft_series(const LevelCounts& counts);

/// Structural consistency of the plan tables (a_k = ell_k - k >= 1,
/// ell strictly increasing, s_k cumulative) plus s_{k_max} <= 1; with a
/// sequence, also the per-block inequality
/// (ell_k - ell_{k-1}) / 2^{k+1} <= sum over n in (ell_{k-1}, ell_k] of f_n/2^n.
Certificate check_claim1(const ConstructionPlan& plan, const GrowthSequence* seq = nullptr);

/// count_exact(n) >= 2^{n-k} - 1 >= f_n for every n in [n0, n_max].
Certificate check_claim3(const ConstructionPlan& plan, const GrowthSequence& seq, long n_max);

}  // namespace sperner
