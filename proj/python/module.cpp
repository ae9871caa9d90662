// Python bindings for the main operations. Exact values cross the boundary
// as Python ints and fractions.Fraction; cycles as lists of ints.

#include "qhorn/cache.hpp"
#include "qhorn/gw.hpp"
#include "qhorn/moduli.hpp"
#include "qhorn/polytope.hpp"
#include "qhorn/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qhorn;

namespace {

py::object py_int(const Int& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object py_frac(const Rat& v) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(v));
}

Rat from_py_rat(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rat(Int(py::str(h).cast<std::string>()));
  // Fraction, str, or anything with a faithful str() of the form p/q.
  return parse_rat(py::str(h).cast<std::string>());
}

std::vector<SchubertIndex> to_cycles(const std::vector<std::vector<int>>& raw, int n) {
  std::vector<SchubertIndex> out;
  out.reserve(raw.size());
  for (const auto& e : raw) out.emplace_back(e, n);
  return out;
}

GwProblem to_problem(int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc) {
  return GwProblem(n, r, d, D, to_cycles(cyc, n));
}

py::dict problem_dict(const GwProblem& P) {
  py::dict d;
  d["n"] = P.n;
  d["r"] = P.r;
  d["d"] = P.d;
  d["D"] = P.D;
  py::list cyc;
  for (const auto& I : P.indices) cyc.append(I.elements);
  d["cycles"] = cyc;
  d["problem"] = P.str();
  return d;
}

py::list frac_list(const std::vector<Rat>& v) {
  py::list out;
  for (const auto& x : v) out.append(py_frac(x));
  return out;
}

}  // namespace

PYBIND11_MODULE(qhorn, m) {
  m.doc() = "exact quantum Schubert calculus of Grassmannians and the "
            "eigenvalue inequality system for products of SU(n) matrices";
  m.attr("__version__") = kVersion;

  m.def("codim",
        [](const std::vector<int>& I, int n) { return codim(SchubertIndex(I, n)); },
        py::arg("cycle"), py::arg("n"));

  m.def("grassmann_dual",
        [](const std::vector<int>& I, int n) {
          return grassmann_dual(SchubertIndex(I, n)).elements;
        },
        py::arg("cycle"), py::arg("n"));

  m.def("scale_index",
        [](const std::vector<int>& I, int n, int N) {
          return scale_index(SchubertIndex(I, n), N).elements;
        },
        py::arg("cycle"), py::arg("n"), py::arg("N"));

  m.def("delta",
        [](const std::vector<int>& I, int n) {
          return frac_list(delta(SchubertIndex(I, n)).coords);
        },
        py::arg("cycle"), py::arg("n"));

  m.def("shift_s",
        [](const py::sequence& coords, int times) {
          std::vector<Rat> c;
          for (auto h : coords) c.push_back(from_py_rat(h));
          return frac_list(shift_s_pow(SimplexPoint(c), times).coords);
        },
        py::arg("point"), py::arg("times") = 1);

  m.def("degree_from_cycles",
        [](const std::vector<std::vector<int>>& cyc, int n, int D) -> py::object {
          auto d = degree_from_cycles(to_cycles(cyc, n), D);
          if (!d) return py::none();
          return py::int_(*d);
        },
        py::arg("cycles"), py::arg("n"), py::arg("D") = 0);

  m.def("lr_coefficient",
        [](const Partition& a, const Partition& b, const Partition& c) {
          return py_int(lr_coefficient(a, b, c));
        },
        py::arg("lam"), py::arg("mu"), py::arg("nu"));

  m.def("classical_intersection",
        [](int n, int r, const std::vector<std::vector<int>>& cyc) {
          return py_int(classical_intersection(to_problem(n, r, 0, 0, cyc)));
        },
        py::arg("n"), py::arg("r"), py::arg("cycles"));

  m.def("gw",
        [](int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc) {
          return py_int(generalized_gw(to_problem(n, r, d, D, cyc)));
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("D"), py::arg("cycles"),
        "generalized Gromov-Witten number <sigma_I>_{d,D,n}");

  m.def("fusion_oracle",
        [](int n, int r, int d, const std::vector<std::vector<int>>& cyc) {
          return py_int(fusion_oracle(to_problem(n, r, d, 0, cyc)));
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("cycles"));

  m.def("gw_dual",
        [](int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc) {
          return problem_dict(gw_dual(to_problem(n, r, d, D, cyc)));
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("D"), py::arg("cycles"));

  m.def("f_of_n",
        [](int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc, int N) {
          return py_int(f_of_n(to_problem(n, r, d, D, cyc), N));
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("D"), py::arg("cycles"),
        py::arg("N"));

  m.def("horn_nonvanishing",
        [](int n, int r, int d, const std::vector<std::vector<int>>& cyc) {
          return horn_nonvanishing(to_problem(n, r, d, 0, cyc));
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("cycles"));

  m.def("witten_weights",
        [](const std::vector<std::vector<int>>& cyc, int n) {
          py::list out;
          for (const auto& w : witten_weights(to_cycles(cyc, n))) out.append(frac_list(w));
          return out;
        },
        py::arg("cycles"), py::arg("n"));

  m.def("moduli_dim",
        [](const std::vector<std::vector<int>>& cyc, int n) {
          return moduli_dim(to_cycles(cyc, n));
        },
        py::arg("cycles"), py::arg("n"));

  m.def("is_polyrigid",
        [](int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc, int M) {
          return is_polyrigid(to_problem(n, r, d, D, cyc), M);
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("D"), py::arg("cycles"),
        py::arg("M") = 0);

  m.def("polyrigid_report",
        [](int n, int r, int d, int D, const std::vector<std::vector<int>>& cyc) {
          auto rep = moduli_report(to_problem(n, r, d, D, cyc));
          py::dict out;
          out["expected_dim"] = rep.expected_dim;
          out["verdict"] = verdict_name(rep.verdict);
          out["polyrigid"] = rep.polyrigid;
          py::list ev;
          for (const auto& t : rep.evidence) {
            py::dict e;
            e["p"] = t.p;
            e["q"] = t.q;
            py::list ks;
            for (const auto& K : t.K) ks.append(K.elements);
            e["K"] = ks;
            ev.append(e);
          }
          out["evidence"] = ev;
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("D"), py::arg("cycles"));

  m.def("inequalities",
        [](int n, int s, bool classify, bool lp) {
          auto sys = enumerate_inequalities(n, s);
          if (classify) classify_records(sys);
          if (lp) classify_lp(sys);
          py::list out;
          for (const auto& rec : sys.records) {
            py::dict r;
            r["r"] = rec.r;
            r["d"] = rec.d;
            py::list cyc;
            for (const auto& I : rec.indices) cyc.append(I.elements);
            r["indices"] = cyc;
            r["gw"] = py_int(rec.gw);
            if (classify) r["polyrigid"] = rec.polyrigid;
            if (lp && rec.lp_irredundant) r["lp_irredundant"] = *rec.lp_irredundant;
            out.append(r);
          }
          return out;
        },
        py::arg("n"), py::arg("s"), py::arg("classify") = false, py::arg("lp") = false);

  m.def("membership",
        [](int n, int s, const py::sequence& classes) {
          std::vector<ConjugacyClass> A;
          for (auto row : classes) {
            std::vector<Rat> c;
            for (auto h : row.cast<py::sequence>()) c.push_back(from_py_rat(h));
            A.emplace_back(c);
          }
          auto sys = enumerate_inequalities(n, s);
          auto rep = membership(A, sys);
          py::dict out;
          out["member"] = rep.member;
          out["violated"] = rep.violated;
          out["tight"] = rep.tight;
          return out;
        },
        py::arg("n"), py::arg("s"), py::arg("classes"));

  m.def("nori_instance",
        [](const std::vector<int>& dims, int W) {
          auto rec = nori_instance(dims, W);
          py::dict out;
          out["r"] = rec.r;
          out["d"] = rec.d;
          py::list cyc;
          for (const auto& I : rec.indices) cyc.append(I.elements);
          out["indices"] = cyc;
          out["gw"] = py_int(rec.gw);
          return out;
        },
        py::arg("dims"), py::arg("W"));

  m.def("witness_weights",
        [](int n, int r, int d, const std::vector<std::vector<int>>& cyc) -> py::object {
          auto w = witness_constructive(to_problem(n, r, d, 0, cyc));
          if (!w) return py::none();
          py::dict out;
          out["c"] = py_frac(w->c);
          out["dual_factor_rank"] = w->dual_factor_rank;
          py::list theta;
          for (const auto& row : w->weights.theta) theta.append(frac_list(row));
          out["weights"] = theta;
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("d"), py::arg("cycles"));
}
