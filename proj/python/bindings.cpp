#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schubert/io.hpp"
#include "schubert/verify.hpp"

namespace py = pybind11;
using namespace schubert;

namespace {

Permutation perm(const std::string& text) { return Permutation::parse(text); }

int size_of(int n, std::initializer_list<const Permutation*> perms) {
  if (n > 0) return n;
  int m = 0;
  for (const auto* p : perms) m = std::max(m, p->size());
  return m;
}

// {(a1, ..., an): coef}
py::dict poly_to_dict(const Polynomial& p, int n) {
  py::dict out;
  for (const auto& [m, c] : p.terms()) out[py::tuple(py::cast(m.exponents(n)))] = c;
  return out;
}

std::map<std::string, Coefficient> expansion_to_map(const SchubertExpansion& f) {
  std::map<std::string, Coefficient> out;
  for (const auto& [w, c] : f.terms()) out[w.to_string()] = c;
  return out;
}

SkewMethod skew_method(const std::string& name) {
  if (name == "normalform") return SkewMethod::kNormalForm;
  if (name == "chains") return SkewMethod::kChains;
  if (name == "lr") return SkewMethod::kLr;
  throw std::invalid_argument("unknown skew method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Schubert and skew Schubert polynomials, rc-graphs and Bruhat chains";

  m.def("length", [](const std::string& w) { return length(perm(w)); });
  m.def("code", [](const std::string& w) { return code(perm(w)); });
  m.def("bruhat_leq", [](const std::string& u, const std::string& w) { return bruhat_leq(perm(u), perm(w)); });

  m.def(
      "schubert",
      [](const std::string& w, int n, const std::string& method) {
        const Permutation p = perm(w);
        const int size = size_of(n, {&p});
        if (method != "rcgraph" && method != "chain") throw std::invalid_argument("unknown method '" + method + "'");
        return schubert::schubert(p, size, method == "chain" ? SchubertMethod::kChain : SchubertMethod::kRcGraph).to_string();
      },
      py::arg("w"), py::arg("n") = 0, py::arg("method") = "rcgraph",
      "Schubert polynomial of w as text, e.g. 'x1 + x2'.");

  m.def(
      "schubert_terms",
      [](const std::string& w, int n) {
        const Permutation p = perm(w);
        const int size = size_of(n, {&p});
        return poly_to_dict(schubert::schubert(p, size), size);
      },
      py::arg("w"), py::arg("n") = 0);

  m.def(
      "skew",
      [](const std::string& w, const std::string& u, int n, const std::string& method) {
        const Permutation pw = perm(w), pu = perm(u);
        return skew(pw, pu, size_of(n, {&pw, &pu}), skew_method(method)).to_string();
      },
      py::arg("w"), py::arg("u"), py::arg("n") = 0, py::arg("method") = "normalform");

  m.def(
      "skew_expansion",
      [](const std::string& w, const std::string& u, int n) {
        const Permutation pw = perm(w), pu = perm(u);
        const int size = size_of(n, {&pw, &pu});
        return expansion_to_map(expand_in_schubert_basis(skew(pw, pu, size), size));
      },
      py::arg("w"), py::arg("u"), py::arg("n") = 0);

  m.def(
      "expand",
      [](const std::string& polynomial, int n) {
        return expansion_to_map(expand_in_schubert_basis(Polynomial::parse(polynomial), n));
      },
      py::arg("polynomial"), py::arg("n"));

  m.def(
      "normal_form",
      [](const std::string& polynomial, int n) { return normal_form(Polynomial::parse(polynomial), n).to_string(); },
      py::arg("polynomial"), py::arg("n"));

  m.def(
      "lr",
      [](const std::string& u, const std::string& v, int n) {
        const Permutation pu = perm(u), pv = perm(v);
        return expansion_to_map(lr_coefficients(pu, pv, size_of(n, {&pu, &pv})));
      },
      py::arg("u"), py::arg("v"), py::arg("n") = 0);

  m.def(
      "pieri",
      [](const std::string& u, int a, int k, int n) {
        const Permutation pu = perm(u);
        return expansion_to_map(pieri(pu, a, k, size_of(n, {&pu})));
      },
      py::arg("u"), py::arg("a"), py::arg("k"), py::arg("n") = 0);

  m.def(
      "rcgraphs",
      [](const std::string& w, int n) {
        const Permutation p = perm(w);
        std::vector<std::vector<std::pair<int, int>>> out;
        RcGraphs graphs(embed(p, size_of(n, {&p})));
        while (auto g = graphs.next()) {
          auto& cells = out.emplace_back();
          for (const auto& c : g->crossings()) cells.emplace_back(c.k, c.b);
        }
        return out;
      },
      py::arg("w"), py::arg("n") = 0, "Crossing lists of all rc-graphs of w, in reading order.");

  m.def(
      "chains",
      [](const std::string& u, const std::string& w, int n) {
        const Permutation pu = perm(u), pw = perm(w);
        const int size = size_of(n, {&pu, &pw});
        std::vector<std::vector<std::pair<int, int>>> out;
        IncreasingChains chains(embed(pu, size), embed(pw, size));
        while (auto c = chains.next()) {
          auto& labels = out.emplace_back();
          for (const auto& l : c->labels()) labels.emplace_back(l.k, l.b);
        }
        return out;
      },
      py::arg("u"), py::arg("w"), py::arg("n") = 0, "Label sequences of the increasing chains from u to w.");

  m.def(
      "verify",
      [](const std::string& suite, int n, std::uint64_t seed) {
        py::dict out;
        for (const auto& r : verify::run_suites(suite, n, seed)) {
          out[py::str(r.name)] = py::make_tuple(r.passed(), r.checks);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("n") = 3, py::arg("seed") = 1);
}
