#pragma once

// Test-side reference implementations, kept independent of the library
// code paths they cross-check.

#include "sperner/bigint.hpp"
#include "sperner/bitstring.hpp"
#include "sperner/dyadic.hpp"
#include "sperner/family.hpp"
#include "sperner/growth.hpp"
#include "sperner/prefix_code.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracles {

using Rat = boost::rational<sperner::BigInt>;

inline Rat rat(const sperner::BigInt& num, long pow2_exp) {
    return Rat(num, sperner::pow2(pow2_exp));
}

inline Rat rat(const sperner::Dyadic& d) { return rat(d.numerator(), d.exponent()); }

// Pascal-triangle binomials, independent of the multiplicative route.
inline sperner::BigInt pascal(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    std::vector<sperner::BigInt> row{1};
    for (long r = 1; r <= n; ++r) {
        std::vector<sperner::BigInt> next(static_cast<std::size_t>(r) + 1, 1);
        for (long c = 1; c < r; ++c)
            next[static_cast<std::size_t>(c)] =
                row[static_cast<std::size_t>(c - 1)] + row[static_cast<std::size_t>(c)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// Conditions (1)-(3) applied to a fully materialized candidate string of
// length ell_k, with the codeword supplied by the caller.
inline bool satisfies_block_conditions(const sperner::ConstructionPlan& plan,
                                       sperner::BlockIndex idx, const sperner::BitString& cand,
                                       const sperner::BitString& word) {
    long k = idx.k;
    long ell = plan.ell(k);
    if (static_cast<long>(cand.length()) != ell) return false;
    for (long j = 1; j <= k; ++j)
        if (cand.bit(static_cast<std::size_t>(j)) != word.bit(static_cast<std::size_t>(j)))
            return false;
    if (static_cast<long>(cand.popcount_above(static_cast<std::size_t>(k))) != idx.i) return false;
    if (k > plan.k0() && cand.popcount_above(static_cast<std::size_t>(plan.ell_prev(k))) == 0)
        return false;
    return true;
}

// Brute force over all 2^{ell_k} strings; feasible for small ell only.
inline std::vector<std::vector<long>> brute_block(const sperner::ConstructionPlan& plan,
                                                  sperner::BlockIndex idx, long n) {
    long ell = plan.ell(idx.k);
    sperner::BitString word = sperner::codeword(plan, idx);
    std::vector<std::vector<long>> out;
    for (unsigned long mask = 0; mask < (1ul << ell); ++mask) {
        sperner::BitString cand(static_cast<std::size_t>(ell));
        for (long p = 1; p <= ell; ++p)
            if (mask & (1ul << (p - 1))) cand.set_bit(static_cast<std::size_t>(p), true);
        if (!satisfies_block_conditions(plan, idx, cand, word)) continue;
        auto top = cand.max_one();
        if (top && static_cast<long>(*top) > n) continue;
        out.push_back(cand.to_set());
    }
    return out;
}

// Membership by direct scan of every planned block, via string prefix
// comparison rather than dyadic value matching.
inline bool brute_member(const sperner::ConstructionPlan& plan, const std::vector<long>& set) {
    if (set.empty()) return false;
    long top = *std::max_element(set.begin(), set.end());
    for (long k = plan.k0(); k <= plan.k_max(); ++k) {
        if (plan.ell(k) < top) continue;
        sperner::BitString cand = sperner::BitString::from_set(set, static_cast<std::size_t>(plan.ell(k)));
        for (long i = 1; i <= plan.a(k); ++i)
            if (satisfies_block_conditions(plan, {k, i}, cand,
                                           sperner::codeword(plan, {k, i})))
                return true;
    }
    return false;
}

// All members with largest element <= n, as sorted sets, by filtering the
// whole power set of [n] through brute_member.
inline std::set<std::vector<long>> brute_level(const sperner::ConstructionPlan& plan, long n) {
    std::set<std::vector<long>> out;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<long> set;
        for (long p = 1; p <= n; ++p)
            if (mask & (1ul << (p - 1))) set.push_back(p);
        if (brute_member(plan, set)) out.insert(set);
    }
    return out;
}

// Prefix-freeness via a set of all proper-or-equal prefixes.
inline bool prefix_free_reference(const std::vector<sperner::BitString>& words) {
    std::set<std::string> all;
    for (const auto& w : words) all.insert(w.str());
    std::size_t dupes = all.size() != words.size();
    if (dupes) return false;
    for (const auto& w : words) {
        std::string s = w.str();
        for (std::size_t len = 1; len < s.size(); ++len)
            if (all.count(s.substr(0, len))) return false;
    }
    return true;
}

}  // namespace oracles
