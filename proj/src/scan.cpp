#include "padicore/scan.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "padicore/quintic.hpp"

namespace padicore {

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

struct Row {
    BigInt a, b;
    bool irreducible = false;
    QuinticVerdict v;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace

void ScanConfig::validate() const {
    if (a_min > a_max || b_min > b_max)
        throw std::invalid_argument("scan: empty range");
    for (int p : primes)
        if (p != 2 && p != 3 && p != 5)
            throw std::invalid_argument("scan: primes must be within {2,3,5}");
    if (jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");
}

ScanResult run_scan(const ScanConfig& cfg) {
    cfg.validate();
    bool run2 = std::count(cfg.primes.begin(), cfg.primes.end(), 2) > 0;
    bool run3 = std::count(cfg.primes.begin(), cfg.primes.end(), 3) > 0;

    long long na = cfg.a_max - cfg.a_min + 1, nb = cfg.b_max - cfg.b_min + 1;
    long long total = na * nb;
    std::vector<Row> rows(static_cast<size_t>(total));

    QuinticOptions qopts;
    qopts.verbatim = cfg.verbatim;
    qopts.seed = cfg.seed;

    auto work = [&](long long lo, long long hi) {
        for (long long idx = lo; idx < hi; ++idx) {
            BigInt a = cfg.a_min + idx / nb;
            BigInt b = cfg.b_min + idx % nb;
            Row& row = rows[static_cast<size_t>(idx)];
            row.a = a;
            row.b = b;
            IntPoly F = quintic_trinomial(a, b);
            row.irreducible = is_irreducible_q(F) == Tri::yes;
            if (!row.irreducible) continue;
            if (run2 && run3) {
                row.v = quintic_verdict(a, b, qopts);
            } else {
                row.v.a = a;
                row.v.b = b;
                row.v.irreducible = true;
                if (run2) {
                    row.v.p2_closed = p2_condition(a, b, qopts);
                    row.v.p2_engine = index_divisor_verdict(F, 2, cfg.seed);
                }
                if (run3) {
                    row.v.p3_closed = p3_condition(a, b, qopts);
                    row.v.p3_engine = index_divisor_verdict(F, 3, cfg.seed);
                }
                auto ok = [](const ConditionResult& c, const IndexDivisorVerdict& e) {
                    return !c.undetermined && e.divides != Verdict::undetermined &&
                           (c.tag != CondTag::none) == (e.divides == Verdict::yes);
                };
                row.v.consistent = (!run2 || ok(row.v.p2_closed, row.v.p2_engine)) &&
                                   (!run3 || ok(row.v.p3_closed, row.v.p3_engine));
            }
        }
    };

    int jobs = std::min<long long>(cfg.jobs, std::max<long long>(total, 1));
    if (jobs <= 1) {
        work(0, total);
    } else {
        std::vector<std::thread> pool;
        long long chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long long lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    ScanResult res;
    std::ostringstream csv, ledger;
    csv << "a,b,irreducible,t2_condition,t2_engine,t3_condition,t3_engine,consistent,"
           "notes\n";
    res.json["schema"] = "padicore.scan/1";
    res.json["config"] = {{"a_min", cfg.a_min}, {"a_max", cfg.a_max},
                          {"b_min", cfg.b_min}, {"b_max", cfg.b_max},
                          {"primes", cfg.primes}, {"seed", cfg.seed},
                          {"verbatim", cfg.verbatim}};
    res.json["rows"] = OrderedJson::array();

    for (const Row& row : rows) {
        res.summary.pairs++;
        if (!row.irreducible) continue;
        res.summary.irreducible++;
        const QuinticVerdict& v = row.v;
        std::string t2c = run2 ? tag_str(v.p2_closed.tag) : "";
        std::string t2e = run2 ? verdict_str(v.p2_engine.divides) : "";
        std::string t3c = run3 ? tag_str(v.p3_closed.tag) : "";
        std::string t3e = run3 ? verdict_str(v.p3_engine.divides) : "";
        std::string notes;
        for (const std::string& n : v.notes) {
            if (!notes.empty()) notes += "; ";
            notes += n;
        }
        if (run2 && v.p2_closed.tag != CondTag::none)
            res.summary.condition_counts[tag_str(v.p2_closed.tag)]++;
        if (run3 && v.p3_closed.tag != CondTag::none)
            res.summary.condition_counts[tag_str(v.p3_closed.tag)]++;
        if (v.consistent) {
            res.summary.consistent++;
        } else {
            res.summary.inconsistent++;
            ledger << "a=" << row.a.str() << " b=" << row.b.str()
                   << " t2=" << t2c << "/" << t2e << " t3=" << t3c << "/" << t3e
                   << " notes=" << notes
                   << " repro: padicore quintic " << row.a.str() << " " << row.b.str()
                   << " --json\n";
        }
        if ((run2 && v.p2_engine.divides == Verdict::undetermined) ||
            (run3 && v.p3_engine.divides == Verdict::undetermined))
            res.summary.undetermined++;

        csv << row.a.str() << "," << row.b.str() << ",true," << t2c << "," << t2e << ","
            << t3c << "," << t3e << "," << (v.consistent ? "true" : "false") << ","
            << csv_quote(notes) << "\n";
        res.json["rows"].push_back({{"a", big_json(row.a)},
                                    {"b", big_json(row.b)},
                                    {"irreducible", true},
                                    {"t2_condition", t2c},
                                    {"t2_engine", t2e},
                                    {"t3_condition", t3c},
                                    {"t3_engine", t3e},
                                    {"consistent", v.consistent},
                                    {"notes", notes}});
    }

    res.json["summary"] = {{"pairs", res.summary.pairs},
                           {"irreducible", res.summary.irreducible},
                           {"consistent", res.summary.consistent},
                           {"inconsistent", res.summary.inconsistent},
                           {"undetermined", res.summary.undetermined},
                           {"condition_counts", res.summary.condition_counts}};
    res.csv = csv.str();
    res.ledger = ledger.str();

    if (!cfg.csv_path.empty()) write_file(cfg.csv_path, res.csv);
    if (!cfg.json_path.empty()) write_file(cfg.json_path, res.json.dump(2) + "\n");
    if (!cfg.ledger_path.empty()) write_file(cfg.ledger_path, res.ledger);
    return res;
}

}  // namespace padicore
