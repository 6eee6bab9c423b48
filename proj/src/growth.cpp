#include "sperner/growth.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sperner {

namespace {

const Dyadic kQuarter(1, 2);

Dyadic partial_series(long n0, const std::vector<BigInt>& table) {
    Dyadic sum;
    for (std::size_t t = 0; t < table.size(); ++t)
        sum = sum + Dyadic(table[t], n0 + static_cast<long>(t));
    return sum;
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::range(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw std::invalid_argument("SplitMix64::range: empty interval");
    std::uint64_t span = hi - lo + 1;
    return span == 0 ? next() : lo + next() % span;
}

GrowthSequence::GrowthSequence(long n0, std::vector<BigInt> table, Extension ext,
                               std::optional<Dyadic> tail_bound, std::string name)
    : n0_(n0), table_(std::move(table)), ext_(ext), name_(std::move(name)) {
    if (n0_ < 1) throw std::invalid_argument("GrowthSequence: n0 must be positive");
    if (table_.empty()) throw std::invalid_argument("GrowthSequence: empty table");
    for (const BigInt& v : table_)
        if (v < 1) throw std::invalid_argument("GrowthSequence: values must be positive integers");

    if (ext_ == Extension::Constant) {
        // sum_{n > N} f_N / 2^n = f_N / 2^N, exactly
        tail_ = {table_end(), Dyadic(table_.back(), table_end())};
    } else {
        if (!tail_bound)
            throw std::invalid_argument("GrowthSequence: tail bound required without extension");
        tail_ = {table_end(), *tail_bound};
    }
    total_bound_ = partial_series(n0_, table_) + tail_.bound;
}

BigInt GrowthSequence::f(long n) const {
    if (n < n0_) throw std::out_of_range("GrowthSequence::f: n below n0");
    std::size_t idx = static_cast<std::size_t>(n - n0_);
    if (idx < table_.size()) return table_[idx];
    if (ext_ == Extension::Constant) return table_.back();
    throw std::out_of_range("GrowthSequence::f: table ends at n=" + std::to_string(table_end()) +
                            " with no extension rule");
}

GrowthSequence GrowthSequence::constant_family(long n0) {
    return GrowthSequence(n0, {BigInt(1)}, Extension::Constant, std::nullopt,
                          "constant(n0=" + std::to_string(n0) + ")");
}

// ---------------------------------------------------------------------------
// corollary_family: deterministic fixed-point evaluation of
// c * 2^n / (n * (log2 n)^{1+eps}), no floating point anywhere.

namespace {

constexpr long kFrac = 48;  // fixed-point fractional bits

// floor-ish log2(n) * 2^kFrac via square-and-compare digit extraction.
BigInt log2_fixed(long n) {
    if (n < 1) throw std::domain_error("log2_fixed: n must be positive");
    const BigInt two_fp = BigInt(2) << kFrac;
    long ip = bit_length(BigInt(n)) - 1;
    BigInt r = (BigInt(n) << kFrac) >> ip;  // in [1, 2) as fixed point
    BigInt res = BigInt(ip) << kFrac;
    for (long b = kFrac - 1; b >= 0; --b) {
        r = (r * r) >> kFrac;
        if (r >= two_fp) {
            r >>= 1;
            res += BigInt(1) << b;
        }
    }
    return res;
}

// (log2 n)^{1 + p/q} * 2^kFrac.
BigInt poly_log_fixed(long n, long p, long q) {
    BigInt t = log2_fixed(n);
    BigInt tp = 1;
    for (long e = 0; e < p + q; ++e) tp *= t;  // t^{p+q} * 2^{kFrac (p+q)}
    return iroot(tp >> (kFrac * p), q);        // ~ t^{(p+q)/q} * 2^kFrac
}

}  // namespace

GrowthSequence GrowthSequence::corollary_family(long eps_num, long eps_den, long n_min,
                                                long table_end) {
    if (eps_num < 1 || eps_den < 1)
        throw std::invalid_argument("corollary_family: eps must be a positive rational");
    if (eps_num + eps_den > 64)
        throw std::invalid_argument("corollary_family: eps numerator+denominator too large");
    if (n_min < 4) throw std::invalid_argument("corollary_family: n_min must be at least 4");
    if (table_end < n_min + 32)
        throw std::invalid_argument("corollary_family: table_end too close to n_min");

    // The formula must already reach 1 at n_min for unit scale.
    std::vector<BigInt> denom(static_cast<std::size_t>(table_end - n_min + 1));
    for (long n = n_min; n <= table_end; ++n)
        denom[static_cast<std::size_t>(n - n_min)] = BigInt(n) * poly_log_fixed(n, eps_num, eps_den);
    if ((BigInt(1) << (n_min + kFrac)) < denom.front())
        throw std::invalid_argument("corollary_family: n_min too small, formula below 1 there");

    for (long j = 0; j <= 48; ++j) {
        std::vector<BigInt> f;
        f.reserve(denom.size());
        for (long n = n_min; n <= table_end; ++n) {
            BigInt w = (BigInt(1) << (n + kFrac)) / (denom[static_cast<std::size_t>(n - n_min)] << j);
            if (w < 1) w = 1;
            if (!f.empty()) {
                BigInt doubled = 2 * f.back();
                w = std::min(std::max(w, f.back()), doubled);
            }
            f.push_back(w);
        }
        // Extend downward by the ceiling rule until the value 1 is reached.
        std::vector<BigInt> front;
        long start = n_min;
        if (f.front() > 1) {
            for (long m = n_min - 1; m >= 1; --m) {
                long d = n_min - m;
                BigInt v = (f.front() + pow2(d) - 1) >> d;
                front.push_back(v);
                if (v == 1) {
                    start = m;
                    break;
                }
            }
            if (front.empty() || front.back() != 1) continue;  // scale infeasible
            std::reverse(front.begin(), front.end());
            front.insert(front.end(), f.begin(), f.end());
            f.swap(front);
        }
        // Re-base at the largest n with f_n = 1 (the 1s form a prefix).
        long n0 = start;
        while (static_cast<std::size_t>(n0 - start + 1) < f.size() &&
               f[static_cast<std::size_t>(n0 - start + 1)] == 1)
            ++n0;
        std::vector<BigInt> sliced(f.begin() + (n0 - start), f.end());

        std::ostringstream name;
        name << "corollary(eps=" << eps_num << "/" << eps_den << ",c=1/2^" << j << ")";
        GrowthSequence candidate(n0, std::move(sliced), Extension::Constant, std::nullopt,
                                 name.str());
        if (!(candidate.certified_total() > kQuarter)) return candidate;
    }
    throw std::invalid_argument(
        "corollary_family: no scale 2^-j certifies the series bound <= 1/4 for these parameters");
}

GrowthSequence GrowthSequence::random_family(std::uint64_t seed) {
    SplitMix64 rng(seed);
    long n0 = static_cast<long>(rng.range(3, 8));
    long rows = static_cast<long>(rng.range(8, 30));
    std::vector<BigInt> table{BigInt(1)};
    Dyadic partial(1, n0);
    // Invariant: partial + f_last/2^{n_last} <= 1/4, so any cut is certified.
    for (long t = 1; t < rows; ++t) {
        long n_left = n0 + t - 1;
        Dyadic budget = kQuarter - partial;
        BigInt cap = budget.exponent() <= n_left
                         ? BigInt(budget.numerator() << (n_left - budget.exponent()))
                         : BigInt(budget.numerator() >> (budget.exponent() - n_left));
        BigInt doubled = 2 * table.back();
        BigInt hi = std::min(doubled, cap);
        std::uint64_t delta = BigInt(hi - table.back()).convert_to<std::uint64_t>();
        BigInt pick = table.back() + rng.range(0, delta);
        partial = partial + Dyadic(pick, n_left + 1);
        table.push_back(std::move(pick));
    }
    return GrowthSequence(n0, std::move(table), Extension::Constant, std::nullopt,
                          "random(seed=" + std::to_string(seed) + ")");
}

// ---------------------------------------------------------------------------
// CSV table format

namespace {

Dyadic parse_dyadic(const std::string& text) {
    auto sep = text.find("/2^");
    if (sep == std::string::npos)
        throw std::runtime_error("expected dyadic literal m/2^e, got '" + text + "'");
    BigInt num(text.substr(0, sep));
    long e = std::stol(text.substr(sep + 3));
    return Dyadic(num, e);
}

}  // namespace

GrowthSequence GrowthSequence::load_csv(std::istream& in, std::string name) {
    std::string line;
    long line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("sequence table line " + std::to_string(line_no) + ": " + what);
    };

    if (!std::getline(in, line)) throw std::runtime_error("sequence table: empty input");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "n,f_n") fail("expected header 'n,f_n'");

    long n0 = 0;
    std::vector<BigInt> table;
    std::optional<Dyadic> tail_bound;
    std::optional<Extension> ext;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (ext) fail("multiple directives");
            if (line == "#extend=constant")
                ext = Extension::Constant;
            else if (line.rfind("#tail_bound=", 0) == 0) {
                ext = Extension::None;
                tail_bound = parse_dyadic(line.substr(12));
            } else
                fail("unknown directive '" + line + "'");
            continue;
        }
        if (ext) fail("data row after directive");
        auto comma = line.find(',');
        if (comma == std::string::npos) fail("expected 'n,value'");
        long n;
        BigInt v;
        try {
            n = std::stol(line.substr(0, comma));
            v = BigInt(line.substr(comma + 1));
        } catch (const std::exception&) {
            fail("malformed row '" + line + "'");
            throw;  // unreachable
        }
        if (table.empty())
            n0 = n;
        else if (n != n0 + static_cast<long>(table.size()))
            fail("row indices must increase by exactly 1");
        table.push_back(std::move(v));
    }
    if (table.empty()) throw std::runtime_error("sequence table: no data rows");
    if (!ext)
        throw std::runtime_error(
            "sequence table: missing footer directive #extend=constant or #tail_bound=m/2^e");
    return GrowthSequence(n0, std::move(table), *ext, tail_bound, std::move(name));
}

GrowthSequence GrowthSequence::load_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sequence table '" + path + "'");
    return load_csv(in, path);
}

void GrowthSequence::save_csv(std::ostream& out) const {
    out << "n,f_n\n";
    for (std::size_t t = 0; t < table_.size(); ++t)
        out << (n0_ + static_cast<long>(t)) << "," << table_[t].str() << "\n";
    if (ext_ == Extension::Constant)
        out << "#extend=constant\n";
    else
        out << "#tail_bound=" << tail_.bound.str() << "\n";
}

// ---------------------------------------------------------------------------

ValidationReport validate(const GrowthSequence& seq, long N) {
    if (N < seq.n0()) throw std::invalid_argument("validate: N must be at least n0");
    ValidationReport report;
    const long n0 = seq.n0();

    if (seq.f(n0) != 1)
        report.violations.push_back({Violation::Kind::FirstValueNotOne, n0,
                                     "f_" + std::to_string(n0) + " = " + seq.f(n0).str() +
                                         ", expected 1"});

    long last_pair = seq.total() ? N : std::min(N, seq.table_end() - 1);
    for (long n = n0; n <= last_pair; ++n) {
        BigInt fn = seq.f(n), fn1 = seq.f(n + 1);
        if (fn1 < fn)
            report.violations.push_back({Violation::Kind::Decreasing, n,
                                         "f_" + std::to_string(n + 1) + " = " + fn1.str() +
                                             " < f_" + std::to_string(n) + " = " + fn.str()});
        else if (fn1 > 2 * fn)
            report.violations.push_back({Violation::Kind::RatioExceeded, n,
                                         "f_" + std::to_string(n + 1) + " = " + fn1.str() +
                                             " > 2 f_" + std::to_string(n) + " = " +
                                             BigInt(2 * fn).str()});
    }
    report.checked_to = last_pair;

    Dyadic partial;
    for (long n = n0; n <= seq.tail().from; ++n) partial = partial + Dyadic(seq.f(n), n);
    report.partial_sum = partial;
    report.total_bound = partial + seq.tail().bound;
    if (report.total_bound > kQuarter)
        report.violations.push_back({Violation::Kind::SumExceedsQuarter, seq.tail().from,
                                     "certified series bound " + report.total_bound.str() +
                                         " exceeds 1/2^2"});
    return report;
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    if (valid()) {
        out << "valid: pairs checked through n=" << checked_to << ", series bound "
            << total_bound.str() << " <= 1/2^2";
        return out.str();
    }
    out << "invalid (" << violations.size() << " violation(s)):";
    for (const auto& v : violations) out << "\n  n=" << v.index << ": " << v.message;
    return out.str();
}

// ---------------------------------------------------------------------------

std::size_t ConstructionPlan::idx(long k) const {
    if (k < k0_ || k > k_max())
        throw std::out_of_range("ConstructionPlan: k=" + std::to_string(k) +
                                " outside [k0, k_max]");
    return static_cast<std::size_t>(k - k0_);
}

long ConstructionPlan::level_block(long n) const {
    if (n < n0()) throw std::out_of_range("level_block: n below n0");
    auto it = std::lower_bound(ell_.begin(), ell_.end(), n);
    if (it == ell_.end())
        throw std::out_of_range("plan with k_max=" + std::to_string(k_max()) +
                                " does not cover level n=" + std::to_string(n) +
                                "; request a larger k_max");
    return k0_ + static_cast<long>(it - ell_.begin());
}

ConstructionPlan ConstructionPlan::from_block_sizes(long k0, const std::vector<long>& a) {
    if (k0 < 1) throw std::invalid_argument("from_block_sizes: k0 must be positive");
    if (a.empty()) throw std::invalid_argument("from_block_sizes: no blocks");
    ConstructionPlan plan;
    plan.k0_ = k0;
    Dyadic s;
    for (std::size_t t = 0; t < a.size(); ++t) {
        long k = k0 + static_cast<long>(t);
        if (a[t] < 1) throw std::invalid_argument("from_block_sizes: a_k must be >= 1");
        plan.a_.push_back(a[t]);
        plan.ell_.push_back(k + a[t]);
        s = s + Dyadic(a[t], k);
        plan.s_.push_back(s);
    }
    return plan;
}

ConstructionPlan ConstructionPlan::from_tables(long k0, std::vector<long> ell,
                                               std::vector<long> a, std::vector<Dyadic> s) {
    if (ell.size() != a.size() || a.size() != s.size() || ell.empty())
        throw std::invalid_argument("from_tables: table sizes differ or empty");
    ConstructionPlan plan;
    plan.k0_ = k0;
    plan.ell_ = std::move(ell);
    plan.a_ = std::move(a);
    plan.s_ = std::move(s);
    return plan;
}

namespace {

// One ell_k forward scan; the test f_n 2^{k+1} >= 2^n is monotone in n for
// ratio-valid sequences, so the admissible set is an interval.
long scan_ell(const GrowthSequence& seq, long k, long prev_ell) {
    auto holds = [&](long n) {
        if (n <= k + 1) return true;  // f_n >= 1
        return seq.f(n) >= pow2(n - k - 1);
    };
    long n = std::max(prev_ell, k + 1);
    try {
        if (!holds(n))
            throw std::runtime_error("build_plan: scan start fails at k=" + std::to_string(k) +
                                     "; sequence was not validated");
        // Spec default slack plus a geometric term: ell_k - ell_{k-1} can
        // legitimately reach 2^{k-1} only for near-doubling stretches, and
        // those keep ell_k < 5 ell_{k-1}; the combined limit still halts
        // promptly on providers whose f_n/2^n does not decay.
        long limit = std::max(4 * (k + 1) + seq.n0() + 64, 4 * prev_ell + 64);
        long steps = 0;
        while (holds(n + 1)) {
            ++n;
            if (++steps > limit)
                throw std::runtime_error(
                    "build_plan: ell scan exceeded " + std::to_string(limit) +
                    " positions beyond ell_{k-1} at k=" + std::to_string(k) +
                    "; f_n/2^n does not decay (tail certificate wrong or provider corrupt)");
        }
    } catch (const std::out_of_range& e) {
        throw std::runtime_error("build_plan: k=" + std::to_string(k) +
                                 " needs sequence values beyond coverage (" + e.what() + ")");
    }
    return n;
}

void append_level(long k, long ell, std::vector<long>& ell_tab, std::vector<long>& a_tab,
                  std::vector<Dyadic>& s_tab, Dyadic& s_run) {
    long a = ell - k;
    if (a < 1) throw std::logic_error("build_plan: a_k < 1 at k=" + std::to_string(k));
    s_run = s_run + Dyadic(a, k);
    if (s_run > Dyadic::one())
        throw std::runtime_error("build_plan: partial Kraft sum exceeds 1 at k=" +
                                 std::to_string(k) + "; sequence was not validated");
    ell_tab.push_back(ell);
    a_tab.push_back(a);
    s_tab.push_back(s_run);
}

}  // namespace

ConstructionPlan build_plan(const GrowthSequence& seq, long k_max) {
    const long k0 = seq.n0() - 1;
    if (k_max < k0) throw std::invalid_argument("build_plan: k_max below k0");
    std::vector<long> ell_tab, a_tab;
    std::vector<Dyadic> s_tab;
    Dyadic s_run;
    long prev_ell = k0;
    for (long k = k0; k <= k_max; ++k) {
        long ell = scan_ell(seq, k, prev_ell);
        if (ell <= prev_ell && k > k0)
            throw std::runtime_error("build_plan: ell_k not strictly increasing at k=" +
                                     std::to_string(k) + "; sequence was not validated");
        append_level(k, ell, ell_tab, a_tab, s_tab, s_run);
        prev_ell = ell;
    }
    return ConstructionPlan::from_tables(k0, std::move(ell_tab), std::move(a_tab),
                                         std::move(s_tab));
}

ConstructionPlan build_plan_covering(const GrowthSequence& seq, long n_target) {
    const long k0 = seq.n0() - 1;
    if (n_target < seq.n0()) throw std::invalid_argument("build_plan_covering: n_target below n0");
    std::vector<long> ell_tab, a_tab;
    std::vector<Dyadic> s_tab;
    Dyadic s_run;
    long prev_ell = k0;
    for (long k = k0; prev_ell < n_target; ++k) {
        long ell = scan_ell(seq, k, prev_ell);
        if (ell <= prev_ell && k > k0)
            throw std::runtime_error("build_plan_covering: ell_k not strictly increasing at k=" +
                                     std::to_string(k) + "; sequence was not validated");
        append_level(k, ell, ell_tab, a_tab, s_tab, s_run);
        prev_ell = ell;
    }
    return ConstructionPlan::from_tables(k0, std::move(ell_tab), std::move(a_tab),
                                         std::move(s_tab));
}

GrowthSequence normalize_remark(const GrowthSequence& seq) {
    const long n0 = seq.n0();
    const BigInt f0 = seq.f(n0);
    if (f0 == 1) return seq;

    if (!(BigInt(8) * n0 * f0 < pow2(n0)))
        throw std::invalid_argument("normalize_remark: requires f_{n0} < 2^{n0}/(8 n0); f_" +
                                    std::to_string(n0) + " = " + f0.str() + " is too large");
    Dyadic margin(BigInt(2 * n0) * f0, n0);
    if (margin > kQuarter || seq.certified_total() > kQuarter - margin)
        throw std::invalid_argument(
            "normalize_remark: requires certified series bound <= 1/4 - 2 n0 f_{n0}/2^{n0}; got " +
            seq.certified_total().str() + " against margin " + margin.str());

    std::vector<BigInt> front;  // values for n0-1, n0-2, ... until 1
    long new_n0 = 0;
    for (long m = n0 - 1; m >= 1; --m) {
        long d = n0 - m;
        BigInt v = (f0 + pow2(d) - 1) >> d;  // ceil(f0 / 2^d)
        front.push_back(v);
        if (v == 1) {
            new_n0 = m;
            break;
        }
    }
    if (new_n0 == 0) throw std::logic_error("normalize_remark: extension never reached 1");

    std::vector<BigInt> merged(front.rbegin(), front.rend());
    for (long n = n0; n <= seq.table_end(); ++n) merged.push_back(seq.f(n));
    std::optional<Dyadic> tb;
    if (!seq.total()) tb = seq.tail().bound;
    GrowthSequence out(new_n0, std::move(merged), seq.extension(), tb, seq.name() + "+remark");
    if (!validate(out, out.table_end()).valid())
        throw std::logic_error("normalize_remark: extended sequence failed validation");
    return out;
}

}  // namespace sperner
