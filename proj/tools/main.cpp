#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "padicore/parse.hpp"
#include "padicore/scan.hpp"
#include "padicore/serialize.hpp"

using namespace padicore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUndetermined = 3;

void write_file_or_die(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

void print_sides(const OrderedJson& report) {
    std::cout << "F = " << report["F"].get<std::string>() << ", phi = "
              << report["phi"].get<std::string>() << ", p = " << report["p"] << "\n";
    std::cout << "vertices:";
    for (const auto& v : report["polygon"]["vertices"])
        std::cout << " (" << v[0] << "," << v[1] << ")";
    std::cout << "\n";
    for (const auto& r : report["residuals"]) {
        const auto& s = r["side"];
        std::cout << "side (" << s["from"][0] << "," << s["from"][1] << ")->("
                  << s["to"][0] << "," << s["to"][1] << ") slope "
                  << s["slope"].get<std::string>() << " degree " << s["degree"]
                  << ": R = " << r["poly"].get<std::string>() << " =";
        for (const auto& f : r["factors"]) {
            std::cout << " (" << f["psi"].get<std::string>() << ")";
            if (f["mult"].get<int>() > 1) std::cout << "^" << f["mult"];
        }
        std::cout << "\n";
    }
    std::cout << "ind_phi = " << report["ind_phi"] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact p-adic Newton polygon engine: Dedekind and Ore analysis, "
                 "common index divisors, and x^5+ax^2+b checkers"};
    app.require_subcommand(1);

    std::string poly_text, phi_text = "x", prime_text = "2";
    bool as_json = false;
    std::string svg_path;
    uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd, bool with_phi) {
        cmd->add_option("-p,--prime", prime_text, "rational prime");
        if (with_phi) cmd->add_option("--phi", phi_text, "monic lift phi (default x)");
        cmd->add_flag("--json", as_json, "emit JSON");
        cmd->add_option("--seed", seed, "seed for randomized factorization");
    };

    auto* cmd_polygon = app.add_subcommand("polygon", "phi-Newton polygon of F");
    cmd_polygon->add_option("poly", poly_text, "polynomial, e.g. \"x^5+3x^2+144\"")
        ->required();
    add_common(cmd_polygon, true);
    cmd_polygon->add_option("--svg", svg_path, "write an SVG rendering");

    auto* cmd_dedekind = app.add_subcommand("dedekind", "does p divide (Z_K:Z[alpha])?");
    cmd_dedekind->add_option("poly", poly_text)->required();
    add_common(cmd_dedekind, false);

    auto* cmd_ore = app.add_subcommand("ore", "first-order Ore analysis at p");
    cmd_ore->add_option("poly", poly_text)->required();
    add_common(cmd_ore, false);

    auto* cmd_idx = app.add_subcommand("index-divisor", "is p a common index divisor?");
    cmd_idx->add_option("poly", poly_text)->required();
    add_common(cmd_idx, false);

    std::string a_text, b_text;
    bool verbatim = false;
    auto* cmd_quintic = app.add_subcommand("quintic", "verdict for x^5+ax^2+b");
    cmd_quintic->add_option("a", a_text)->required();
    cmd_quintic->add_option("b", b_text)->required();
    cmd_quintic->add_flag("--json", as_json, "emit JSON");
    cmd_quintic->add_flag("--verbatim", verbatim, "printed-text condition reading");
    cmd_quintic->add_option("--seed", seed, "seed for randomized factorization");

    ScanConfig scfg;
    std::string scan_primes = "2,3", config_path;
    auto* cmd_scan = app.add_subcommand("scan", "grid scan of x^5+ax^2+b");
    cmd_scan->add_option("--a-min", scfg.a_min);
    cmd_scan->add_option("--a-max", scfg.a_max);
    cmd_scan->add_option("--b-min", scfg.b_min);
    cmd_scan->add_option("--b-max", scfg.b_max);
    cmd_scan->add_option("--primes", scan_primes, "comma list within {2,3,5}");
    cmd_scan->add_option("--csv", scfg.csv_path, "CSV output path");
    cmd_scan->add_option("--json-out", scfg.json_path, "JSON output path");
    cmd_scan->add_option("--ledger", scfg.ledger_path, "discrepancy ledger path");
    cmd_scan->add_option("--jobs", scfg.jobs, "worker threads");
    cmd_scan->add_option("--seed", scfg.seed);
    cmd_scan->add_flag("--verbatim", scfg.verbatim);
    cmd_scan->add_option("--config", config_path, "key = value config file");
    cmd_scan->add_flag("--json", as_json, "print the JSON report to stdout");

    auto* cmd_fam = app.add_subcommand("families", "family checkers");
    cmd_fam->require_subcommand(1);
    MonoFamilyInstance mono;
    std::string mono_p = "3", mono_a = "1", mono_b = "1";
    auto* cmd_mono = cmd_fam->add_subcommand(
        "mono", "F = x^{p^r} + p^v a x^m + p^u b: index positive, theta Eisenstein");
    cmd_mono->add_option("-p,--prime", mono_p)->required();
    cmd_mono->add_option("-r", mono.r)->required();
    cmd_mono->add_option("-v", mono.v)->required();
    cmd_mono->add_option("-u", mono.u)->required();
    cmd_mono->add_option("-m", mono.m)->required();
    cmd_mono->add_option("-a", mono_a)->required();
    cmd_mono->add_option("-b", mono_b)->required();
    cmd_mono->add_flag("--json", as_json);

    std::string dpr_p = "3", dpr_a, dpr_b;
    long long dpr_r = 3, dpr_m = 1;
    auto* cmd_dpr = cmd_fam->add_subcommand(
        "dpr", "F = x^{p^r} + a x^m + b with p^{p+1} | a, b^{p-1} = 1 (mod p^{p+1})");
    cmd_dpr->add_option("-p,--prime", dpr_p)->required();
    cmd_dpr->add_option("-r", dpr_r)->required();
    cmd_dpr->add_option("-m", dpr_m)->required();
    cmd_dpr->add_option("-a", dpr_a)->required();
    cmd_dpr->add_option("-b", dpr_b)->required();
    cmd_dpr->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_polygon->parsed()) {
            IntPoly F = parse_poly(poly_text), phi = parse_poly(phi_text);
            BigInt p(prime_text);
            OrderedJson report = polygon_report_json(F, phi, p, seed);
            if (!svg_path.empty()) {
                PhiExpansion e = phi_expand(F, phi, p);
                write_file_or_die(svg_path, polygon_svg(newton_polygon(e)));
            }
            if (as_json)
                std::cout << report.dump(2) << "\n";
            else
                print_sides(report);
            return kExitOk;
        }
        if (cmd_dedekind->parsed()) {
            IntPoly F = parse_poly(poly_text);
            BigInt p(prime_text);
            bool divides = dedekind_divides_index(F, p, seed);
            if (as_json)
                std::cout << OrderedJson({{"p", big_json(p)}, {"divides_index", divides}})
                                 .dump(2)
                          << "\n";
            else
                std::cout << (divides ? "yes" : "no") << ": p "
                          << (divides ? "divides" : "does not divide")
                          << " the index (Z_K:Z[alpha])\n";
            return kExitOk;
        }
        if (cmd_ore->parsed()) {
            IntPoly F = parse_poly(poly_text);
            BigInt p(prime_text);
            OreReport rep = ore_analysis(F, p, seed);
            if (as_json) {
                std::cout << ore_report_json(rep).dump(2) << "\n";
            } else {
                std::cout << "p = " << p.str() << ", index lower bound "
                          << rep.index_lower_bound << ", "
                          << (rep.p_regular ? "p-regular" : "not p-regular") << "\n";
                for (const Shape& s : rep.shapes)
                    std::cout << "  prime shape e=" << s.e << " f=" << s.f << " x"
                              << s.count << (s.certain ? "" : " (uncertain)") << "\n";
            }
            return kExitOk;
        }
        if (cmd_idx->parsed()) {
            IntPoly F = parse_poly(poly_text);
            BigInt p(prime_text);
            IndexDivisorVerdict v = index_divisor_verdict(F, p, seed);
            if (as_json) {
                std::cout << verdict_json(v).dump(2) << "\n";
            } else {
                std::cout << verdict_str(v.divides);
                if (v.witness_f)
                    std::cout << " (P_" << *v.witness_f << " = " << v.P_f.str() << " > N_"
                              << *v.witness_f << " = " << v.N_f.str() << ")";
                std::cout << "\n";
                for (const std::string& t : v.trace) std::cout << "  " << t << "\n";
            }
            return v.divides == Verdict::undetermined ? kExitUndetermined : kExitOk;
        }
        if (cmd_quintic->parsed()) {
            QuinticOptions opts;
            opts.verbatim = verbatim;
            opts.seed = seed;
            QuinticVerdict v = quintic_verdict(BigInt(a_text), BigInt(b_text), opts);
            if (as_json) std::cout << quintic_json(v).dump(2) << "\n";
            if (!v.irreducible) {
                if (!as_json) std::cout << "reducible\n";
                return kExitInvalid;
            }
            if (!as_json) {
                auto line = [&](const char* p, const ConditionResult& c,
                                const IndexDivisorVerdict& e) {
                    std::cout << p << " | i(K): "
                              << (c.tag != CondTag::none ? "yes" : "no")
                              << " [condition " << tag_str(c.tag) << ", engine "
                              << verdict_str(e.divides)
                              << (v.consistent ? " agrees" : "") << "]\n";
                };
                line("2", v.p2_closed, v.p2_engine);
                line("3", v.p3_closed, v.p3_engine);
                std::cout << "p >= 5: no common index divisor\n";
                for (const std::string& n : v.notes) std::cout << "  note: " << n << "\n";
            }
            bool und = v.p2_closed.undetermined || v.p3_closed.undetermined ||
                       v.p2_engine.divides == Verdict::undetermined ||
                       v.p3_engine.divides == Verdict::undetermined;
            return und ? kExitUndetermined : kExitOk;
        }
        if (cmd_scan->parsed()) {
            if (!config_path.empty()) {
                auto kv = read_config(config_path);
                auto get = [&](const char* k, auto& target) {
                    auto it = kv.find(k);
                    if (it == kv.end()) return;
                    std::istringstream in(it->second);
                    in >> target;
                };
                get("a_min", scfg.a_min);
                get("a_max", scfg.a_max);
                get("b_min", scfg.b_min);
                get("b_max", scfg.b_max);
                get("jobs", scfg.jobs);
                get("seed", scfg.seed);
                if (kv.count("primes")) scan_primes = kv["primes"];
                if (kv.count("csv")) scfg.csv_path = kv["csv"];
                if (kv.count("json")) scfg.json_path = kv["json"];
                if (kv.count("ledger")) scfg.ledger_path = kv["ledger"];
                if (kv.count("verbatim")) scfg.verbatim = kv["verbatim"] == "1";
            }
            scfg.primes.clear();
            std::istringstream ps(scan_primes);
            std::string tok;
            while (std::getline(ps, tok, ','))
                if (!tok.empty()) scfg.primes.push_back(std::stoi(tok));
            ScanResult res = run_scan(scfg);
            if (as_json) std::cout << res.json.dump(2) << "\n";
            std::cerr << "pairs=" << res.summary.pairs
                      << " irreducible=" << res.summary.irreducible
                      << " consistent=" << res.summary.consistent
                      << " inconsistent=" << res.summary.inconsistent
                      << " undetermined=" << res.summary.undetermined << "\n";
            for (const auto& [tag, n] : res.summary.condition_counts)
                std::cerr << "  condition " << tag << ": " << n << "\n";
            return res.summary.inconsistent == 0 ? kExitOk : kExitUndetermined;
        }
        if (cmd_mono->parsed()) {
            mono.p = BigInt(mono_p);
            mono.a = BigInt(mono_a);
            mono.b = BigInt(mono_b);
            MonoCheckReport rep = mono_family_check(mono);
            std::cout << mono_report_json(mono, rep).dump(2) << "\n";
            return rep.preconditions_ok ? kExitOk : kExitInvalid;
        }
        if (cmd_dpr->parsed()) {
            DprReport rep =
                dpr_family_check(BigInt(dpr_p), dpr_r, dpr_m, BigInt(dpr_a), BigInt(dpr_b));
            std::cout << dpr_report_json(BigInt(dpr_p), dpr_r, dpr_m, BigInt(dpr_a),
                                         BigInt(dpr_b), rep)
                             .dump(2)
                      << "\n";
            return rep.conditions_ok ? kExitOk : kExitInvalid;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
