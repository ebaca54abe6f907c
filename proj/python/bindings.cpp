#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padicore/parse.hpp"
#include "padicore/scan.hpp"
#include "padicore/serialize.hpp"

namespace py = pybind11;
using namespace padicore;

namespace {

BigInt to_big(const py::object& o) {
    return BigInt(py::str(o).cast<std::string>());
}

py::object big_to_py(const BigInt& n) {
    return py::module_::import("builtins").attr("int")(n.str());
}

py::object json_to_py(const OrderedJson& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

IntPoly poly_arg(const std::string& text) { return parse_poly(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact p-adic Newton polygons, Ore analysis, and common index divisors";

    m.def("vp", [](const py::object& n, const py::object& p) -> py::object {
        PAdicVal v = vp(to_big(n), to_big(p));
        if (v.is_infinity()) return py::none();
        return py::int_(v.value());
    },
          py::arg("n"), py::arg("p"),
          "p-adic valuation of n; None for n = 0");

    m.def("p_free_part",
          [](const py::object& n, const py::object& p) {
              return big_to_py(p_free_part(to_big(n), to_big(p)));
          },
          py::arg("n"), py::arg("p"));

    m.def("parse_poly",
          [](const std::string& text) { return poly_arg(text).str(); },
          py::arg("text"), "parse and return the canonical form");

    m.def("discriminant",
          [](const std::string& f) { return big_to_py(discriminant(poly_arg(f))); },
          py::arg("f"));

    m.def("resultant",
          [](const std::string& f, const std::string& g) {
              return big_to_py(resultant(poly_arg(f), poly_arg(g)));
          },
          py::arg("f"), py::arg("g"));

    m.def("is_irreducible",
          [](const std::string& f) {
              Tri t = is_irreducible_q(poly_arg(f));
              return t == Tri::yes ? "yes" : (t == Tri::no ? "no" : "unknown");
          },
          py::arg("f"));

    m.def("count_monic_irreducibles",
          [](const py::object& p, long long f) {
              return big_to_py(count_monic_irreducibles(to_big(p), f));
          },
          py::arg("p"), py::arg("f"));

    m.def("phi_expand",
          [](const std::string& F, const std::string& phi, const py::object& p) {
              PhiExpansion e = phi_expand(poly_arg(F), poly_arg(phi), to_big(p));
              std::vector<std::string> out;
              for (const IntPoly& t : e.terms) out.push_back(t.str());
              return out;
          },
          py::arg("F"), py::arg("phi"), py::arg("p"));

    m.def("phi_index",
          [](const std::string& F, const std::string& phi, const py::object& p) {
              return phi_index(poly_arg(F), poly_arg(phi), to_big(p));
          },
          py::arg("F"), py::arg("phi"), py::arg("p"));

    m.def("polygon_report",
          [](const std::string& F, const std::string& phi, const py::object& p,
             uint64_t seed) {
              return json_to_py(polygon_report_json(poly_arg(F), poly_arg(phi),
                                                    to_big(p), seed));
          },
          py::arg("F"), py::arg("phi") = "x", py::arg("p"), py::arg("seed") = 0);

    m.def("dedekind_divides_index",
          [](const std::string& F, const py::object& p, uint64_t seed) {
              return dedekind_divides_index(poly_arg(F), to_big(p), seed);
          },
          py::arg("F"), py::arg("p"), py::arg("seed") = 0);

    m.def("ore_report",
          [](const std::string& F, const py::object& p, uint64_t seed) {
              return json_to_py(ore_report_json(ore_analysis(poly_arg(F), to_big(p), seed)));
          },
          py::arg("F"), py::arg("p"), py::arg("seed") = 0);

    m.def("index_divisor",
          [](const std::string& F, const py::object& p, uint64_t seed) {
              return json_to_py(
                  verdict_json(index_divisor_verdict(poly_arg(F), to_big(p), seed)));
          },
          py::arg("F"), py::arg("p"), py::arg("seed") = 0);

    m.def("regularize",
          [](const std::string& F, const py::object& p, const py::object& u,
             uint64_t seed) {
              RegularizeResult r =
                  regularize_linear(poly_arg(F), to_big(p), to_big(u), seed);
              py::dict d;
              d["ok"] = r.ok;
              d["iterations"] = r.iterations;
              if (r.ok)
                  d["s"] = big_to_py(r.s);
              else
                  d["failure"] = r.failure;
              return d;
          },
          py::arg("F"), py::arg("p"), py::arg("u"), py::arg("seed") = 0);

    m.def("quintic",
          [](const py::object& a, const py::object& b, bool verbatim, uint64_t seed) {
              QuinticOptions opts;
              opts.verbatim = verbatim;
              opts.seed = seed;
              return json_to_py(quintic_json(quintic_verdict(to_big(a), to_big(b), opts)));
          },
          py::arg("a"), py::arg("b"), py::arg("verbatim") = false, py::arg("seed") = 0);

    m.def("theta_minpoly",
          [](const std::string& F, long long x_exp, long long y_pow, const py::object& p) {
              return theta_minpoly(poly_arg(F), x_exp, y_pow, to_big(p)).str();
          },
          py::arg("F"), py::arg("x_exp"), py::arg("y_pow"), py::arg("p"));

    m.def("families_mono",
          [](const py::object& p, long long r, long long v, long long u, long long mm,
             const py::object& a, const py::object& b) {
              MonoFamilyInstance inst;
              inst.p = to_big(p);
              inst.r = r;
              inst.v = v;
              inst.u = u;
              inst.m = mm;
              inst.a = to_big(a);
              inst.b = to_big(b);
              return json_to_py(mono_report_json(inst, mono_family_check(inst)));
          },
          py::arg("p"), py::arg("r"), py::arg("v"), py::arg("u"), py::arg("m"),
          py::arg("a"), py::arg("b"));

    m.def("families_dpr",
          [](const py::object& p, long long r, long long mm, const py::object& a,
             const py::object& b) {
              DprReport rep = dpr_family_check(to_big(p), r, mm, to_big(a), to_big(b));
              return json_to_py(dpr_report_json(to_big(p), r, mm, to_big(a), to_big(b), rep));
          },
          py::arg("p"), py::arg("r"), py::arg("m"), py::arg("a"), py::arg("b"));

    m.def("scan",
          [](long long a_min, long long a_max, long long b_min, long long b_max,
             std::vector<int> primes, int jobs, uint64_t seed, bool verbatim) {
              ScanConfig cfg;
              cfg.a_min = a_min;
              cfg.a_max = a_max;
              cfg.b_min = b_min;
              cfg.b_max = b_max;
              cfg.primes = std::move(primes);
              cfg.jobs = jobs;
              cfg.seed = seed;
              cfg.verbatim = verbatim;
              ScanResult res = run_scan(cfg);
              py::dict d;
              d["csv"] = res.csv;
              d["ledger"] = res.ledger;
              d["report"] = json_to_py(res.json);
              return d;
          },
          py::arg("a_min"), py::arg("a_max"), py::arg("b_min"), py::arg("b_max"),
          py::arg("primes") = std::vector<int>{2, 3}, py::arg("jobs") = 1,
          py::arg("seed") = 0, py::arg("verbatim") = false);
}
