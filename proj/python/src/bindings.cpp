#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schurext/classical.hpp"
#include "schurext/extstruct.hpp"
#include "schurext/verify.hpp"

namespace py = pybind11;
using namespace schurext;

namespace {

std::vector<std::vector<u32>> to_lists(const Matrix& m) {
  std::vector<std::vector<u32>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

Matrix from_lists(const std::vector<std::vector<u32>>& rows, u32 p) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j] % p;
  return m;
}

void require_prime(u32 p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

py::list cells(const HopfTable& t) {
  py::list out;
  for (auto& c : t.cells)
    if (c.dim)
      out.append(py::dict(py::arg("cohdeg") = c.cohdeg, py::arg("i") = c.i, py::arg("j") = c.j,
                          py::arg("deg_i") = c.deg_i, py::arg("deg_j") = c.deg_j, py::arg("dim") = c.dim));
  return out;
}

py::dict table(const HopfTable& t) {
  py::list skipped;
  for (auto& s : t.skipped)
    skipped.append(py::dict(py::arg("i") = s.i, py::arg("j") = s.j, py::arg("functor_degree") = s.functor_degree));
  return py::dict(py::arg("kind") = t.kind, py::arg("cells") = cells(t), py::arg("skipped") = skipped);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ext groups of strict polynomial functors over F_p and invariants of classical groups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string& s) { return print_functor(parse_functor(s)); }, py::arg("expr"));
  m.def(
      "degree",
      [](const std::string& s, u32 p) {
        require_prime(p);
        return total_degree(parse_functor(s), p);
      },
      py::arg("expr"), py::arg("p"));
  m.def(
      "dimension", [](const std::string& s, std::vector<u32> dims) { return eval_dim(parse_functor(s), dims); },
      py::arg("expr"), py::arg("dims"));

  m.def(
      "rank",
      [](const std::vector<std::vector<u32>>& rows, u32 p) {
        require_prime(p);
        return rank(from_lists(rows, p));
      },
      py::arg("rows"), py::arg("p"));
  m.def(
      "nullspace",
      [](const std::vector<std::vector<u32>>& rows, u32 p) {
        require_prime(p);
        return to_lists(nullspace(from_lists(rows, p)));
      },
      py::arg("rows"), py::arg("p"));

  m.def(
      "hom_dim",
      [](const std::string& f, const std::string& g, u32 p) {
        require_prime(p);
        py::gil_scoped_release nogil;
        return nat_transformations(parse_functor(f), parse_functor(g), p).dim();
      },
      py::arg("source"), py::arg("target"), py::arg("p"));

  m.def(
      "ext_dims",
      [](const std::string& f, const std::string& g, u32 p, u32 max_i, u32 n) {
        require_prime(p);
        auto F = parse_functor(f), G = parse_functor(g);
        auto mf = multidegree(F, p), mg = multidegree(G, p);
        if (!mf || !mg) throw std::invalid_argument("functors must be homogeneous in each variable");
        if (*mf != *mg) return std::vector<std::size_t>(max_i + 1, 0);
        if (n == 0) {
          n = 1;
          for (u32 d : *mf) n = std::max(n, d);
        }
        py::gil_scoped_release nogil;
        return ext_dims(to_module(F, n, p), to_module(G, n, p), max_i);
      },
      py::arg("source"), py::arg("target"), py::arg("p"), py::arg("max_i") = 4, py::arg("n") = 0);

  m.def(
      "invariants",
      [](const std::string& group, const std::string& f, u32 n, u32 p) {
        require_prime(p);
        auto g = parse_group(group);
        auto F = parse_functor(f);
        Matrix inv = invariants(F, g, n, p);
        Phi0 ph = phi0(g, F, n, p);
        return py::dict(py::arg("hom_dim") = ph.hom.dim(), py::arg("invariant_dim") = inv.rows(),
                        py::arg("phi0_rank") = rank(ph.images),
                        py::arg("stable_range") = in_stable_range(g, F, n, p), py::arg("basis") = to_lists(inv));
      },
      py::arg("group"), py::arg("functor"), py::arg("n"), py::arg("p"));

  m.def(
      "contractions",
      [](const std::string& group, u32 k, u32 l, u32 n, u32 p) {
        auto g = parse_group(group);
        if (g.factors.size() != 1) throw std::invalid_argument("contractions need a single group");
        return to_lists(contractions(g.factors[0], k, l, n, p));
      },
      py::arg("group"), py::arg("k"), py::arg("l") = 0, py::arg("n") = 1, py::arg("p") = 3);

  m.def(
      "star_pipeline",
      [](const std::string& family, u32 p, u32 max_i, u32 max_label, u32 max_degree) {
        require_prime(p);
        return table(star_pipeline(parse_functor(family), p, max_i, max_label, max_degree));
      },
      py::arg("family"), py::arg("p"), py::arg("max_i") = 4, py::arg("max_label") = 2, py::arg("max_degree") = 4);

  m.def(
      "classical_split",
      [](const std::string& family, u32 p, u32 max_i, u32 max_label, u32 max_degree) {
        require_prime(p);
        auto s = classical_split(parse_functor(family), p, max_i, max_label, max_degree);
        return py::dict(py::arg("orth") = table(s.orth), py::arg("symp") = table(s.symp));
      },
      py::arg("family"), py::arg("p"), py::arg("max_i") = 4, py::arg("max_label") = 2, py::arg("max_degree") = 4);

  m.def(
      "duality",
      [](const std::string& f, u32 p, u32 max_i, u32 n) {
        require_prime(p);
        auto F = parse_functor(f);
        if (n == 0) n = std::max(1u, total_degree(F, p).value_or(1));
        std::vector<std::vector<std::vector<u32>>> out;
        for (auto& t : theta_tilde(to_module(F, n, p), max_i)) out.push_back(to_lists(t));
        return out;
      },
      py::arg("functor"), py::arg("p"), py::arg("max_i") = 2, py::arg("n") = 0);

  m.def(
      "cup_coproduct",
      [](const std::string& fg, const std::string& f1, const std::string& f2, u32 p) {
        require_prime(p);
        auto r = cup_coproduct(parse_functor(fg), parse_functor(f1), parse_functor(f2), p);
        return py::dict(py::arg("dim_x") = r.dim_x, py::arg("dim_y") = r.dim_y, py::arg("dim_z") = r.dim_z,
                        py::arg("cup_rank") = r.cup_rank, py::arg("section") = r.section,
                        py::arg("counit") = r.counit);
      },
      py::arg("fg"), py::arg("f1"), py::arg("f2"), py::arg("p"));

  m.def(
      "swap_square",
      [](const std::string& family, bool doubled, u32 p, u32 max_deg) {
        require_prime(p);
        if (family.size() != 1) throw std::invalid_argument("family is one of S, G, L");
        auto r = exponential_swap_square(family[0], doubled, p, 2, 2, max_deg);
        return py::make_tuple(r.commutes, r.failures);
      },
      py::arg("family"), py::arg("doubled"), py::arg("p"), py::arg("max_deg") = 4);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name) {
        SuiteReport r;
        {
          py::gil_scoped_release nogil;
          r = run_suite(name);
        }
        py::list failures;
        for (auto& c : r.checks)
          if (!c.ok) failures.append(py::make_tuple(c.name, c.detail));
        return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.passed, py::arg("failed") = r.failed,
                        py::arg("ok") = r.ok(), py::arg("failures") = failures);
      },
      py::arg("name"));
}
