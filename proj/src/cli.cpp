#include "sperner/cli.hpp"

#include "sperner/family.hpp"
#include "sperner/growth.hpp"
#include "sperner/prefix_code.hpp"
#include "sperner/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace sperner {

namespace {

constexpr long kDefaultCap = 1L << 22;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FamilyOptions {
    std::string family = "constant";
    long n0 = -1;           // constant start / corollary formula start
    std::string eps = "1";  // corollary exponent offset
    std::string table_path;
    std::uint64_t seed = 1;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& opt) {
    cmd->add_option("--family", opt.family, "family source: constant|corollary|table|random")
        ->check(CLI::IsMember({"constant", "corollary", "table", "random"}));
    cmd->add_option("--n0", opt.n0, "start index (constant) or formula start (corollary)");
    cmd->add_option("--eps", opt.eps, "corollary exponent offset, positive rational");
    cmd->add_option("--table", opt.table_path, "sequence table CSV path");
    cmd->add_option("--seed", opt.seed, "random family seed");
}

std::pair<long, long> parse_rational(const std::string& text) {
    auto bad = [&] { throw InvalidInput("cannot parse rational '" + text + "'"); };
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            long num = std::stol(text.substr(0, slash));
            long den = std::stol(text.substr(slash + 1));
            if (num < 1 || den < 1) bad();
            return {num, den};
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            long den = 1;
            for (std::size_t t = dot + 1; t < text.size(); ++t) den *= 10;
            long num = std::stol(digits);
            if (num < 1 || den < 1) bad();
            return {num, den};
        }
        long num = std::stol(text);
        if (num < 1) bad();
        return {num, 1};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return {1, 1};  // unreachable
}

GrowthSequence make_family(const FamilyOptions& opt) {
    std::string family = opt.family;
    if (!opt.table_path.empty() && family == "constant") family = "table";
    if (family == "constant") return GrowthSequence::constant_family(opt.n0 < 0 ? 3 : opt.n0);
    if (family == "corollary") {
        auto [num, den] = parse_rational(opt.eps);
        return GrowthSequence::corollary_family(num, den, opt.n0 < 0 ? 12 : opt.n0);
    }
    if (family == "random") return GrowthSequence::random_family(opt.seed);
    if (opt.table_path.empty()) throw InvalidInput("--family table requires --table FILE");
    return GrowthSequence::load_csv_file(opt.table_path);
}

GrowthSequence make_validated_family(const FamilyOptions& opt, long n_hint, std::ostream& err) {
    GrowthSequence seq = make_family(opt);
    long n_val = seq.total() ? std::max({n_hint, seq.n0(), seq.table_end()})
                             : std::max(seq.n0(), seq.table_end() - 1);
    ValidationReport report = validate(seq, n_val);
    if (!report.valid()) {
        err << "sequence '" << seq.name() << "' failed validation\n" << report.str() << "\n";
        throw InvalidInput("invalid growth sequence");
    }
    return seq;
}

std::string set_form(const std::vector<long>& set) {
    std::string out = "{";
    for (std::size_t t = 0; t < set.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(set[t]);
    }
    return out + "}";
}

std::string element_json(const Element& e) {
    nlohmann::json j;
    j["k"] = e.block.k;
    j["i"] = e.block.i;
    j["set"] = e.bits.to_set();
    return j.dump();
}

// ---------------------------------------------------------------------------

int cmd_plan(const FamilyOptions& fam, long kmax, long nmax, const std::string& format,
             std::ostream& out, std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, nmax, err);
    ConstructionPlan plan =
        kmax >= 0 ? build_plan(seq, kmax) : build_plan_covering(seq, std::max(nmax, seq.n0()));
    if (format == "csv") out << "k,ell_k,a_k,s_k\n";
    for (long k = plan.k0(); k <= plan.k_max(); ++k) {
        if (format == "jsonl") {
            nlohmann::json j;
            j["k"] = k;
            j["ell"] = plan.ell(k);
            j["a"] = plan.a(k);
            j["s"] = plan.s(k).str();
            out << j.dump() << "\n";
        } else if (format == "csv") {
            out << k << "," << plan.ell(k) << "," << plan.a(k) << "," << plan.s(k).str() << "\n";
        } else {
            out << std::setw(6) << k << std::setw(8) << plan.ell(k) << std::setw(8) << plan.a(k)
                << "  " << plan.s(k).str() << "\n";
        }
    }
    Certificate cert = check_claim1(plan, &seq);
    if (format == "jsonl")
        out << cert.to_json_string() << "\n";
    else if (format == "csv")
        out << "# " << cert.str() << "\n";
    else
        out << cert.str() << "\n";
    return cert.pass ? 0 : 1;
}

int cmd_codewords(const FamilyOptions& fam, long kmax, bool annotate, std::ostream& out,
                  std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, kmax + 1, err);
    ConstructionPlan plan = build_plan(seq, std::max(kmax, seq.n0() - 1));
    CodewordStream stream(plan);
    while (!stream.done()) {
        auto [idx, bits] = stream.next();
        if (idx.k > kmax) break;
        if (annotate) out << idx.k << "," << idx.i << ",";
        out << bits.str() << "\n";
    }
    return 0;
}

int cmd_generate(const FamilyOptions& fam, long nmax, long cap, const std::string& format,
                 bool sets, bool annotate, std::ostream& out, std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, nmax, err);
    if (nmax < seq.n0()) throw InvalidInput("n_max must be at least n0 = " + std::to_string(seq.n0()));
    ConstructionPlan plan = build_plan_covering(seq, nmax);
    BigInt total = count_exact(plan, nmax);
    if (total > cap) {
        err << "refusing to enumerate " << total.str() << " elements (cap " << cap
            << "); use `count` for sizes or raise --cap\n";
        return 2;
    }
    enumerate_up_to(plan, nmax, [&](const Element& e) {
        if (format == "jsonl") {
            out << element_json(e) << "\n";
        } else {
            if (annotate) out << e.block.k << "," << e.block.i << ",";
            out << (sets ? set_form(e.bits.to_set()) : e.bits.str()) << "\n";
        }
        return true;
    });
    return 0;
}

int cmd_count(const FamilyOptions& fam, long nmax, const std::string& format, std::ostream& out,
              std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, nmax, err);
    if (nmax < seq.n0()) throw InvalidInput("n_max must be at least n0 = " + std::to_string(seq.n0()));
    ConstructionPlan plan = build_plan_covering(seq, nmax);
    LevelCounts counts = build_level_counts(plan, seq, nmax);
    if (format == "jsonl") {
        for (long n = counts.n0; n <= counts.n_max; ++n) {
            nlohmann::json j;
            j["n"] = n;
            j["count"] = counts.count(n).str();
            j["f_n"] = counts.f_at(n).str();
            j["lower_bound"] = counts.lower_bound(n).str();
            out << j.dump() << "\n";
        }
    } else {
        std::ostringstream buffer;
        write_counts_csv(buffer, counts);
        out << buffer.str();
    }
    for (long n = counts.n0; n <= counts.n_max; ++n) {
        if (counts.count(n) < counts.lower_bound(n) || counts.lower_bound(n) < counts.f_at(n)) {
            err << "level bound violated at n=" << n << ": count=" << counts.count(n).str()
                << " bound=" << counts.lower_bound(n).str() << " f_n=" << counts.f_at(n).str()
                << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_verify(const FamilyOptions& fam, long nmax, long cap, const std::string& format,
               std::ostream& out, std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, nmax, err);
    if (nmax < seq.n0()) throw InvalidInput("n_max must be at least n0 = " + std::to_string(seq.n0()));
    ConstructionPlan plan = build_plan_covering(seq, nmax);
    LevelCounts counts = build_level_counts(plan, seq, nmax);

    std::vector<Certificate> certs;
    certs.push_back(check_claim1(plan, &seq));
    certs.push_back(check_claim3(plan, seq, nmax));
    certs.push_back(check_kraft_series(counts));
    certs.push_back(check_sperner_levels(counts));
    if (counts.count(nmax) <= cap)
        certs.push_back(check_antichain(collect_up_to(plan, nmax)));
    else
        err << "antichain check skipped: " << counts.count(nmax).str() << " elements exceed cap "
            << cap << "\n";

    bool all_pass = true;
    for (const Certificate& c : certs) {
        all_pass = all_pass && c.pass;
        out << (format == "jsonl" ? c.to_json_string() : c.str()) << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_decode(const FamilyOptions& fam, long nmax, std::istream& in, std::ostream& out,
               std::ostream& err) {
    GrowthSequence seq = make_validated_family(fam, nmax, err);
    if (nmax < seq.n0()) throw InvalidInput("n_max must be at least n0 = " + std::to_string(seq.n0()));
    ConstructionPlan plan = build_plan_covering(seq, nmax);
    const long reach = plan.ell(plan.k_max());

    bool had_errors = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream tokens(line);
        std::vector<long> set;
        long value;
        bool malformed = false;
        while (tokens >> value) {
            if (value < 1 || (!set.empty() && value <= set.back())) {
                malformed = true;
                break;
            }
            set.push_back(value);
        }
        if (!malformed && !tokens.eof()) malformed = true;
        if (malformed) {
            out << "error: expected a strictly increasing list of positive integers\n";
            had_errors = true;
            continue;
        }
        if (!set.empty() && set.back() > reach) {
            out << "error: set reaches position " << set.back() << " beyond plan coverage "
                << reach << " (raise --nmax)\n";
            had_errors = true;
            continue;
        }
        if (auto idx = decode(plan, set))
            out << "k=" << idx->k << " i=" << idx->i << "\n";
        else
            out << "not a member\n";
    }
    return had_errors ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"growth-prescribed antichains from dyadic prefix codes"};
    app.require_subcommand(1);

    FamilyOptions fam;
    long nmax = -1;
    long kmax = -1;
    long cap = kDefaultCap;
    std::string format = "text";
    bool annotate = false;
    bool sets = false;

    auto add_common = [&](CLI::App* cmd, bool with_cap) {
        add_family_flags(cmd, fam);
        cmd->add_option("--nmax", nmax, "largest level n");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "jsonl", "csv"}));
        if (with_cap) cmd->add_option("--cap", cap, "enumeration cap (elements)");
    };

    CLI::App* plan = app.add_subcommand("plan", "derived tables k, ell_k, a_k, s_k");
    add_common(plan, false);
    plan->add_option("--kmax", kmax, "largest block index k");

    CLI::App* codewords = app.add_subcommand("codewords", "dump the prefix code");
    add_family_flags(codewords, fam);
    codewords->add_option("--kmax", kmax, "largest codeword length");
    codewords->add_flag("--annotate", annotate, "prefix each line with k,i,");

    CLI::App* generate = app.add_subcommand("generate", "dump the family restricted to [n]");
    add_common(generate, true);
    generate->add_flag("--annotate", annotate, "prefix each line with k,i,");
    generate->add_flag("--sets", sets, "set form {1,3,4} instead of bit strings");

    CLI::App* count = app.add_subcommand("count", "exact level counts as CSV");
    add_common(count, false);

    CLI::App* verify = app.add_subcommand("verify", "run all certificates");
    add_common(verify, true);

    CLI::App* decode_cmd = app.add_subcommand("decode", "decode sets from stdin");
    add_common(decode_cmd, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (plan->parsed()) return cmd_plan(fam, kmax, nmax < 0 ? 64 : nmax, format, out, err);
        if (codewords->parsed())
            return cmd_codewords(fam, kmax < 0 ? 16 : kmax, annotate, out, err);
        if (generate->parsed())
            return cmd_generate(fam, nmax < 0 ? 12 : nmax, cap, format, sets, annotate, out, err);
        if (count->parsed())
            return cmd_count(fam, nmax < 0 ? 64 : nmax, format == "text" ? "csv" : format, out, err);
        if (verify->parsed()) return cmd_verify(fam, nmax < 0 ? 14 : nmax, cap, format, out, err);
        if (decode_cmd->parsed()) return cmd_decode(fam, nmax < 0 ? 200 : nmax, in, out, err);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace sperner
