#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schroalg/appell.hpp"
#include "schroalg/evolution.hpp"
#include "schroalg/fock.hpp"
#include "schroalg/probability.hpp"
#include "schroalg/verify.hpp"

namespace py = pybind11;
using namespace schroalg;

namespace {

Rational rat(const std::string& s) { return Rational::from_string(s); }

py::dict report_dict(const VerifyReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["id"] = c.id;
    d["status"] = status_name(c.status);
    d["detail"] = c.detail;
    d["statement"] = c.anchor;
    checks.append(d);
  }
  py::dict out;
  out["suite"] = r.suite;
  out["checks"] = checks;
  out["ok"] = r.ok();
  out["flags"] = r.count(CheckStatus::Flag);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Schrodinger-algebra computations: Fock realization, Gram matrices, "
            "Appell systems, heat-type evolution and the gamma-Gaussian law";

  m.def(
      "verify",
      [](const std::string& suite) {
        if (suite == "all") {
          py::list out;
          for (const auto& r : verify_all()) out.append(report_dict(r));
          return py::object(out);
        }
        return py::object(report_dict(verify_suite(suite)));
      },
      py::arg("suite") = "all",
      "Run a verification suite (lie|fock|diffreal|appell|evolution|probability|all)");

  m.def(
      "gram",
      [](const std::string& m_, const std::string& c_, int cutoff, const std::string& basis) {
        const Params p(rat(m_), rat(c_));
        py::list entries;
        auto emit = [&entries](const GramMatrix& g) {
          for (const auto& [key, value] : g.entries()) {
            py::dict d;
            d["left"] = py::make_tuple(key.first.first, key.first.second);
            d["right"] = py::make_tuple(key.second.first, key.second.second);
            d["value"] = value.to_string();
            d["decimal"] = value.to_double();
            entries.append(d);
          }
        };
        py::dict out;
        out["basis"] = basis;
        out["cutoff"] = cutoff;
        if (basis == "jk") {
          emit(gram_jk(p, cutoff));
        } else if (basis == "ab") {
          const auto res = gram_ab(p, cutoff);
          out["degenerate"] = res.degenerate;
          emit(res.gram);
        } else {
          throw std::invalid_argument("basis must be 'jk' or 'ab'");
        }
        out["entries"] = entries;
        return out;
      },
      py::arg("m") = "1", py::arg("c") = "1", py::arg("cutoff") = 6, py::arg("basis") = "jk",
      "Exact Gram matrix of |jk> = K^j G^k Omega or |ab> = R0^a G^b Omega");

  m.def(
      "appell",
      [](int order, const std::string& beta, const std::string& m_, const std::string& c_) {
        const Params p(rat(m_), rat(c_), rat(beta));
        py::list out;
        for (const auto& a : appell_polynomials(p, order)) {
          py::dict d;
          d["j"] = a.j;
          d["k"] = a.k;
          py::list terms;
          for (const auto& [e, coeff] : a.poly.terms())
            terms.append(py::make_tuple(e[0], e[1], coeff.to_string()));
          d["terms"] = terms;
          d["text"] = a.poly.to_string({"x1", "x2"});
          out.append(d);
        }
        return out;
      },
      py::arg("order") = 4, py::arg("beta") = "1", py::arg("m") = "1", py::arg("c") = "1",
      "Canonical Appell polynomials psi_jk(x1, x2) for j + k <= order");

  m.def(
      "evolve",
      [](int a, int b, const std::string& tau, const std::string& m_, const std::string& c_) {
        const Params p(rat(m_), rat(c_));
        const HeatAppell h = heat_appell(p, a, b);
        auto vector_list = [](const FockVector& v) {
          py::list out;
          for (const auto& [jk, coeff] : v.terms())
            out.append(py::make_tuple(jk.first, jk.second, coeff.to_string()));
          return out;
        };
        py::dict out;
        out["a"] = a;
        out["b"] = b;
        py::list poly;
        for (int n = 0; n <= h.degree(); ++n) poly.append(vector_list(h.coefficient(n)));
        out["tau_polynomial"] = poly;
        out["value_at_tau"] = vector_list(h.at_tau(rat(tau)));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("tau") = "1", py::arg("m") = "1", py::arg("c") = "1",
      "Heat-type Appell system e^(tau H)|ab> for H = (Pt^2 + Px^2)/2");

  m.def(
      "density",
      [](const std::string& m_, const std::string& beta, const std::string& c_, double x1,
         double x2) {
        return density(DensityParams(rat(m_), rat(beta), rat(c_)), x1, x2);
      },
      py::arg("m"), py::arg("beta"), py::arg("c"), py::arg("x1"), py::arg("x2"),
      "Joint density of (X1, X2) at a point");

  m.def(
      "moment",
      [](const std::string& m_, const std::string& beta, const std::string& c_, int j, int k) {
        return exact_moment(DensityParams(rat(m_), rat(beta), rat(c_)), j, k).to_string();
      },
      py::arg("m"), py::arg("beta"), py::arg("c"), py::arg("j"), py::arg("k"),
      "Exact E[X1^j X2^k] as a rational string");

  m.def(
      "sample",
      [](const std::string& m_, const std::string& beta, const std::string& c_, std::size_t n,
         std::uint64_t seed) {
        std::vector<std::pair<double, double>> out;
        for (const auto& s : sample(DensityParams(rat(m_), rat(beta), rat(c_)), n, seed))
          out.emplace_back(s.x1, s.x2);
        return out;
      },
      py::arg("m"), py::arg("beta"), py::arg("c"), py::arg("n"), py::arg("seed") = 1,
      "Deterministic seeded samples of (X1, X2)");

  m.def(
      "leibniz",
      [](double b1, double b2, double v1, double v2) {
        const GroupCoords g = leibniz_commute(b1, b2, v1, v2);
        return std::vector<double>(g.A.begin(), g.A.end());
      },
      py::arg("b1"), py::arg("b2"), py::arg("v1"), py::arg("v2"),
      "Second-kind coordinates of exp(B2 Px) exp(B1 Pt) exp(V1 K) exp(V2 G)");
}
