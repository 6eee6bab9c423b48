#include "sperner/family.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sperner {

namespace {

struct SuffixWindow {
    long k = 0;
    long width = 0;      // ell_k - k, the window size
    long hi_rel = 0;     // last admissible one-position, relative to k
    long late_rel = 0;   // ones are required strictly after this relative position
    long ones = 0;       // required number of ones
    bool empty = false;  // no admissible suffix at all
};

SuffixWindow suffix_window(const ConstructionPlan& plan, BlockIndex idx, long n) {
    SuffixWindow w;
    w.k = idx.k;
    w.width = plan.ell(idx.k) - idx.k;  // == a_k for consistent plans
    w.ones = idx.i;
    long hi_abs = std::min(n, plan.ell(idx.k));
    w.hi_rel = hi_abs - idx.k;
    // Condition (3) is void at k0; using threshold k there makes it vacuous
    // because every suffix one already sits beyond position k.
    long late_abs = idx.k > plan.k0() ? plan.ell_prev(idx.k) : idx.k;
    w.late_rel = std::max(0L, late_abs - idx.k);
    w.empty = w.hi_rel < 1 || w.ones > w.hi_rel || w.hi_rel <= w.late_rel;
    return w;
}

// DFS over window positions, 0-branch before 1-branch, which yields the
// suffix strings in lexicographically increasing order.
bool walk_suffixes(const SuffixWindow& w, BitString& suffix, long pos, long remaining,
                   bool has_late, const SuffixVisitor& visit) {
    if (remaining > w.hi_rel - pos + 1) return true;     // cannot place the rest
    if (remaining == 0 && !has_late) return true;        // late one unreachable
    if (pos > w.hi_rel) return visit(suffix);            // remaining == 0, has_late
    if (!walk_suffixes(w, suffix, pos + 1, remaining, has_late, visit)) return false;
    if (remaining > 0) {
        suffix.set_bit(static_cast<std::size_t>(pos), true);
        bool keep = walk_suffixes(w, suffix, pos + 1, remaining - 1, has_late || pos > w.late_rel,
                                  visit);
        suffix.set_bit(static_cast<std::size_t>(pos), false);
        if (!keep) return false;
    }
    return true;
}

}  // namespace

bool enumerate_suffixes(const ConstructionPlan& plan, BlockIndex idx, long n,
                        const SuffixVisitor& visit) {
    SuffixWindow w = suffix_window(plan, idx, n);
    if (w.empty) return true;
    BitString suffix(static_cast<std::size_t>(w.width));
    return walk_suffixes(w, suffix, 1, w.ones, false, visit);
}

bool enumerate_block(const ConstructionPlan& plan, BlockIndex idx, long n,
                     const ElementVisitor& visit) {
    if (n < plan.n0()) throw std::invalid_argument("enumerate_block: n below n0");
    SuffixWindow w = suffix_window(plan, idx, n);
    if (w.empty) {
        codeword_value(plan, idx);  // still reject invalid indices
        return true;
    }
    BitString prefix = codeword(plan, idx);
    const std::size_t ell = static_cast<std::size_t>(plan.ell(idx.k));
    return enumerate_suffixes(plan, idx, n, [&](const BitString& suffix) {
        Element e{idx, suffix.shifted(static_cast<std::size_t>(idx.k), ell)};
        e.bits.overlay_prefix(prefix);
        return visit(e);
    });
}

bool enumerate_up_to(const ConstructionPlan& plan, long n, const ElementVisitor& visit) {
    if (n < plan.n0()) throw std::invalid_argument("enumerate_up_to: n below n0");
    if (!plan.covers_level(n))
        throw std::out_of_range("enumerate_up_to: plan with k_max=" + std::to_string(plan.k_max()) +
                                " does not cover n=" + std::to_string(n) +
                                "; request a larger k_max");
    for (long k = plan.k0(); k <= plan.k_max(); ++k) {
        if (plan.ell_prev(k) >= n) break;  // later blocks need a one beyond n
        for (long i = 1; i <= plan.a(k); ++i)
            if (!enumerate_block(plan, BlockIndex{k, i}, n, visit)) return false;
    }
    return true;
}

std::vector<Element> collect_block(const ConstructionPlan& plan, BlockIndex idx, long n) {
    std::vector<Element> out;
    enumerate_block(plan, idx, n, [&](const Element& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

std::vector<Element> collect_up_to(const ConstructionPlan& plan, long n) {
    std::vector<Element> out;
    enumerate_up_to(plan, n, [&](const Element& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

BigInt count_exact(const ConstructionPlan& plan, long n) {
    if (n < plan.n0()) throw std::invalid_argument("count_exact: n below n0");
    if (!plan.covers_level(n))
        throw std::out_of_range("count_exact: plan with k_max=" + std::to_string(plan.k_max()) +
                                " does not cover n=" + std::to_string(n) +
                                "; request a larger k_max");
    BigInt total = 0;
    for (long k = plan.k0(); k <= plan.k_max(); ++k) {
        long prev = plan.ell_prev(k);
        if (prev >= n) break;
        long reach = std::min(n, plan.ell(k));
        total += pow2(reach - k) - pow2(prev - k);
        if (n <= plan.ell(k)) break;
    }
    return total;
}

BigInt count_by_binomials(const ConstructionPlan& plan, long n) {
    if (n < plan.n0()) throw std::invalid_argument("count_by_binomials: n below n0");
    if (!plan.covers_level(n))
        throw std::out_of_range("count_by_binomials: plan does not cover n=" + std::to_string(n));
    BigInt total = 0;
    for (long k = plan.k0(); k <= plan.k_max(); ++k) {
        long prev = plan.ell_prev(k);
        if (prev >= n) break;
        long window = std::min(n, plan.ell(k)) - k;
        for (long i = 1; i <= plan.a(k); ++i) {
            total += binomial(window, i);
            if (k > plan.k0()) total -= binomial(prev - k, i);
        }
        if (n <= plan.ell(k)) break;
    }
    return total;
}

std::optional<BlockIndex> decode(const ConstructionPlan& plan, const std::vector<long>& set) {
    std::vector<long> s(set);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty() && s.front() < 1)
        throw std::invalid_argument("decode: set members must be positive");
    if (s.empty()) return std::nullopt;
    const long max_pos = s.back();

    BigInt prefix_num = 0;  // value of the first k digits, scaled by 2^k
    std::size_t next_member = 0;
    for (long k = 1; k <= plan.k_max() && k < max_pos; ++k) {
        prefix_num <<= 1;
        if (next_member < s.size() && s[next_member] == k) {
            prefix_num += 1;
            ++next_member;
        }
        if (k < plan.k0()) continue;
        if (prefix_num == 0) continue;  // codeword values are strictly positive

        Dyadic v(prefix_num, k);
        // i in [1, a_k] iff 1 - s_k <= v <= 1 - s_{k-1} - 1/2^k.
        Dyadic rest_min = plan.s_prev(k) + Dyadic(1, k);
        if (rest_min > Dyadic::one() || plan.s(k) > Dyadic::one()) continue;
        Dyadic lo = Dyadic::one() - plan.s(k);
        Dyadic hi = Dyadic::one() - rest_min;
        if (v < lo || hi < v) continue;
        BigInt i_big = ((Dyadic::one() - plan.s_prev(k)) - v).widened(k).numerator();
        long i = i_big.convert_to<long>();
        if (i < 1 || i > plan.a(k)) continue;

        // The codewords form a prefix code, so this is the only candidate.
        bool ok = max_pos <= plan.ell(k);
        long late = k > plan.k0() ? plan.ell_prev(k) : k;
        long after_k = 0;
        bool any_late = false;
        for (long p : s) {
            if (p > k) ++after_k;
            if (p > late) any_late = true;
        }
        ok = ok && after_k == i && any_late;
        return ok ? std::optional<BlockIndex>(BlockIndex{k, i}) : std::nullopt;
    }
    return std::nullopt;
}

LevelCounts build_level_counts(const ConstructionPlan& plan, const GrowthSequence& seq,
                               long n_max) {
    if (n_max < plan.n0()) throw std::invalid_argument("build_level_counts: n_max below n0");
    LevelCounts out;
    out.n0 = plan.n0();
    out.n_max = n_max;
    for (long n = out.n0; n <= n_max; ++n) {
        out.counts.push_back(count_exact(plan, n));
        out.f.push_back(seq.f(n));
        out.lower_bounds.push_back(pow2(n - plan.level_block(n)) - 1);
    }
    return out;
}

void write_counts_csv(std::ostream& out, const LevelCounts& counts) {
    out << "n,count,f_n,lower_bound_2^{n-k}-1\n";
    for (long n = counts.n0; n <= counts.n_max; ++n)
        out << n << "," << counts.count(n).str() << "," << counts.f_at(n).str() << ","
            << counts.lower_bound(n).str() << "\n";
}

}  // namespace sperner
