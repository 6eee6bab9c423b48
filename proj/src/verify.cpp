#include "sperner/verify.hpp"

#include <json.hpp>

#include <sstream>

namespace sperner {

namespace {

Certificate passing(Certificate::Kind kind, std::string scope) {
    Certificate c;
    c.kind = kind;
    c.scope = std::move(scope);
    c.pass = true;
    return c;
}

Certificate failing(Certificate::Kind kind, std::string scope, Certificate::Witness witness) {
    Certificate c;
    c.kind = kind;
    c.scope = std::move(scope);
    c.pass = false;
    c.witness = std::move(witness);
    return c;
}

std::string range_scope(const char* var, long lo, long hi) {
    std::ostringstream out;
    out << var << "=" << lo << ".." << hi;
    return out.str();
}

}  // namespace

std::string Certificate::kind_name() const {
    switch (kind) {
        case Kind::Antichain: return "antichain";
        case Kind::Sperner: return "sperner";
        case Kind::KraftSeries: return "kraft_series";
        case Kind::Claim1: return "claim1";
        case Kind::Claim3: return "claim3";
    }
    return "?";
}

std::string Certificate::to_json_string() const {
    nlohmann::json j;
    j["kind"] = kind_name();
    j["scope"] = scope;
    j["verdict"] = pass ? "pass" : "fail";
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [name, value] : values) vals[name] = value;
    j["values"] = std::move(vals);
    if (witness) {
        nlohmann::json w;
        w["description"] = witness->description;
        w["sets"] = witness->sets;
        if (witness->index) w["index"] = *witness->index;
        j["witness"] = std::move(w);
    }
    return j.dump();
}

std::string Certificate::str() const {
    std::ostringstream out;
    out << "[" << (pass ? "pass" : "FAIL") << "] " << kind_name() << " (" << scope << ")";
    for (const auto& [name, value] : values) out << " " << name << "=" << value;
    if (witness) {
        out << " witness: " << witness->description;
        if (witness->index) out << " at " << *witness->index;
    }
    return out.str();
}

Certificate check_antichain(const std::vector<BitString>& elements) {
    const std::size_t n = elements.size();
    std::string scope = std::to_string(n) + " elements";
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t u = t + 1; u < n; ++u) {
            bool tu = elements[t].subset_of(elements[u]);
            bool ut = elements[u].subset_of(elements[t]);
            if (!tu && !ut) continue;
            Certificate::Witness w;
            w.sets = {elements[t].to_set(), elements[u].to_set()};
            if (tu && ut)
                w.description = "duplicate element";
            else if (tu)
                w.description = "earlier element contained in later one";
            else
                w.description = "later element contained in earlier one";
            w.index = static_cast<long>(t);
            return failing(Certificate::Kind::Antichain, scope, std::move(w));
        }
    }
    Certificate c = passing(Certificate::Kind::Antichain, scope);
    BigInt pairs = n == 0 ? BigInt(0) : BigInt(BigInt(n) * (n - 1) / 2);
    c.values.emplace_back("pairs_checked", pairs.str());
    return c;
}

Certificate check_antichain(const std::vector<Element>& elements) {
    std::vector<BitString> bits;
    bits.reserve(elements.size());
    for (const Element& e : elements) bits.push_back(e.bits);
    return check_antichain(bits);
}

Certificate check_sperner(const BigInt& count, long n) {
    if (n < 1) throw std::invalid_argument("check_sperner: n must be >= 1");
    if (count < 0) throw std::invalid_argument("check_sperner: count must be >= 0");
    BigInt bound = binomial(n, n / 2);
    std::string scope = "n=" + std::to_string(n);
    if (count <= bound) {
        Certificate c = passing(Certificate::Kind::Sperner, scope);
        c.values.emplace_back("count", count.str());
        c.values.emplace_back("binomial_bound", bound.str());
        return c;
    }
    Certificate::Witness w;
    w.description = "level count exceeds the middle binomial coefficient";
    w.index = n;
    Certificate c = failing(Certificate::Kind::Sperner, scope, std::move(w));
    c.values.emplace_back("count", count.str());
    c.values.emplace_back("binomial_bound", bound.str());
    return c;
}

Certificate check_sperner_levels(const LevelCounts& counts) {
    for (long n = counts.n0; n <= counts.n_max; ++n) {
        Certificate level = check_sperner(counts.count(n), n);
        if (!level.pass) {
            level.scope = range_scope("n", counts.n0, counts.n_max);
            return level;
        }
    }
    Certificate c = passing(Certificate::Kind::Sperner, range_scope("n", counts.n0, counts.n_max));
    if (counts.n_max >= counts.n0) {
        c.values.emplace_back("count_at_n_max", counts.count(counts.n_max).str());
        c.values.emplace_back("binomial_at_n_max", binomial(counts.n_max, counts.n_max / 2).str());
    }
    return c;
}

Certificate check_kraft_series(const LevelCounts& counts) {
    Dyadic sum;
    for (long n = counts.n0; n <= counts.n_max; ++n) sum = sum + Dyadic(counts.count(n), n);
    const Dyadic bound(2, 0);
    std::string scope = range_scope("n", counts.n0, counts.n_max);
    if (!(sum > bound)) {
        Certificate c = passing(Certificate::Kind::KraftSeries, scope);
        c.values.emplace_back("partial_sum", sum.str());
        c.values.emplace_back("bound", bound.str());
        return c;
    }
    Certificate::Witness w;
    w.description = "partial series sum exceeds 2";
    w.index = counts.n_max;
    Certificate c = failing(Certificate::Kind::KraftSeries, scope, std::move(w));
    c.values.emplace_back("partial_sum", sum.str());
    c.values.emplace_back("bound", bound.str());
    return c;
}

Certificate check_claim1(const ConstructionPlan& plan, const GrowthSequence* seq) {
    const long k0 = plan.k0();
    const long k_max = plan.k_max();
    std::string scope = range_scope("k", k0, k_max);
    auto fail_at = [&](long k, std::string what, std::vector<std::pair<std::string, std::string>> vals) {
        Certificate::Witness w;
        w.description = std::move(what);
        w.index = k;
        Certificate c = failing(Certificate::Kind::Claim1, scope, std::move(w));
        c.values = std::move(vals);
        return c;
    };

    for (long k = k0; k <= k_max; ++k) {
        if (plan.a(k) < 1)
            return fail_at(k, "a_k below 1", {{"a_k", std::to_string(plan.a(k))}});
        if (plan.ell(k) < k + 1)
            return fail_at(k, "ell_k below k+1", {{"ell_k", std::to_string(plan.ell(k))}});
        if (plan.ell(k) <= plan.ell_prev(k))
            return fail_at(k, "ell_k not strictly increasing",
                           {{"ell_k", std::to_string(plan.ell(k))},
                            {"ell_prev", std::to_string(plan.ell_prev(k))}});
        if (plan.a(k) != plan.ell(k) - k)
            return fail_at(k, "a_k differs from ell_k - k",
                           {{"a_k", std::to_string(plan.a(k))},
                            {"ell_k", std::to_string(plan.ell(k))}});
        if (!(plan.s(k) == plan.s_prev(k) + Dyadic(plan.a(k), k)))
            return fail_at(k, "s_k is not s_{k-1} + a_k/2^k",
                           {{"s_k", plan.s(k).str()}, {"s_prev", plan.s_prev(k).str()}});
    }
    if (plan.s(k_max) > Dyadic::one())
        return fail_at(k_max, "s_{k_max} exceeds 1", {{"s_k_max", plan.s(k_max).str()}});

    long blocks_checked_with_seq = 0;
    if (seq) {
        long coverage = seq->total() ? plan.ell(k_max) : seq->table_end();
        for (long k = k0; k <= k_max && plan.ell(k) <= coverage; ++k) {
            Dyadic lhs(plan.ell(k) - plan.ell_prev(k), k + 1);
            Dyadic rhs;
            for (long n = plan.ell_prev(k) + 1; n <= plan.ell(k); ++n)
                rhs = rhs + Dyadic(seq->f(n), n);
            if (lhs > rhs)
                return fail_at(k, "(ell_k - ell_{k-1})/2^{k+1} exceeds the f_n/2^n block sum",
                               {{"lhs", lhs.str()}, {"rhs", rhs.str()}});
            ++blocks_checked_with_seq;
        }
    }

    Certificate c = passing(Certificate::Kind::Claim1, scope);
    c.values.emplace_back("s_k_max", plan.s(k_max).str());
    if (seq) c.values.emplace_back("block_sums_checked", std::to_string(blocks_checked_with_seq));
    return c;
}

Certificate check_claim3(const ConstructionPlan& plan, const GrowthSequence& seq, long n_max) {
    std::string scope = range_scope("n", plan.n0(), n_max);
    for (long n = plan.n0(); n <= n_max; ++n) {
        long k = plan.level_block(n);
        BigInt bound = pow2(n - k) - 1;
        BigInt count = count_exact(plan, n);
        BigInt fn = seq.f(n);
        if (count < bound || bound < fn) {
            Certificate::Witness w;
            w.description = count < bound ? "count below 2^{n-k} - 1" : "2^{n-k} - 1 below f_n";
            w.index = n;
            Certificate c = failing(Certificate::Kind::Claim3, scope, std::move(w));
            c.values.emplace_back("count", count.str());
            c.values.emplace_back("block_bound", bound.str());
            c.values.emplace_back("f_n", fn.str());
            c.values.emplace_back("k", std::to_string(k));
            return c;
        }
    }
    Certificate c = passing(Certificate::Kind::Claim3, scope);
    c.values.emplace_back("count_at_n_max", count_exact(plan, n_max).str());
    c.values.emplace_back("f_at_n_max", seq.f(n_max).str());
    return c;
}

}  // namespace sperner
