#include <random>

#include "doctest.h"
#include "schurext/extstruct.hpp"
#include "schurext/law.hpp"

using namespace schurext;

namespace {

bool same_action(const Module& a, const Module& b) {
  if (a.dim() != b.dim() || a.weights() != b.weights()) return false;
  for (std::size_t x = 0; x < a.algebra().dim(); ++x)
    if (!(a.action(x) == b.action(x))) return false;
  return true;
}

}  // namespace

TEST_CASE("dual module is the module of the sharp functor") {
  for (auto [s, p] : std::vector<std::pair<const char*, u32>>{{"S2", 2}, {"L2", 3}, {"S2*L1", 3}, {"T1", 2}}) {
    auto f = parse_functor(s);
    u32 d = *total_degree(f, p);
    CHECK(same_action(dual_module(to_module(f, d, p)), to_module(fx::sharp(f), d, p)));
  }
  auto g = parse_functor("gl[box]S2");
  CHECK(same_action(dual_module(to_module(g, 2, 3)), to_module(fx::sharp(g), 2, 3)));
  // M^** = M
  auto m = to_module(parse_functor("G2"), 2, 2);
  CHECK(same_action(dual_module(dual_module(m)), m));
}

TEST_CASE("box module matches the box functor") {
  auto a = to_module(parse_functor("S2"), 2, 3), b = to_module(parse_functor("L2"), 2, 3);
  auto ab = box_module(a, b);
  auto f = to_module(parse_functor("S2[box]L2"), 2, 3);
  CHECK(ab.algebra_ptr() == f.algebra_ptr());
  CHECK(same_action(ab, f));
}

TEST_CASE("exponential: sum of variables splits as a box product") {
  for (auto [d1, d2] : std::vector<std::pair<u32, u32>>{{1, 1}, {2, 1}, {1, 2}}) {
    u32 d = d1 + d2;
    auto f = parse_functor("S" + std::to_string(d) + "(I*K2)");
    auto g = parse_functor("S" + std::to_string(d1) + "(I*K2)[box]S" + std::to_string(d2) + "(I*K2)");
    auto lhs = to_module(fx::sum_pre(f), d, 3, std::vector<u32>{d1, d2});
    auto rhs = to_module(g, d, 3);
    auto iso = find_isomorphism(lhs, rhs);
    REQUIRE(iso);
    CHECK(is_homomorphism(lhs, rhs, *iso));
  }
}

TEST_CASE("tensor product of resolutions is a resolution") {
  auto m = to_module(parse_functor("T1"), 2, 2);
  auto r = resolve(m, 3);
  auto tot = tensor_resolution(r, r, 3);
  CHECK(check_exact(tot));
  auto s = resolve(to_module(parse_functor("L2"), 2, 2), 3);
  CHECK(check_exact(tensor_resolution(r, s, 3)));
}

TEST_CASE("Kunneth for twists") {
  auto t = to_module(parse_functor("T1"), 2, 2);
  auto k2 = kunneth(t, t, t, t, 4);
  CHECK(k2.product_dims == std::vector<std::size_t>{1, 0, 2, 0, 1});
  CHECK(k2.box_dims == k2.product_dims);
  CHECK(k2.cross_rank == k2.product_dims);

  auto t3 = to_module(parse_functor("T1"), 3, 3);
  auto k3 = kunneth(t3, t3, t3, t3, 4);
  CHECK(k3.product_dims == std::vector<std::size_t>{1, 0, 2, 0, 3});
  CHECK(k3.box_dims == k3.product_dims);
  CHECK(k3.cross_rank == k3.product_dims);
}

TEST_CASE("Kunneth with mixed factors") {
  auto a = to_module(parse_functor("S2"), 2, 2), b = to_module(parse_functor("G2"), 2, 2);
  auto c = to_module(parse_functor("T1"), 2, 2);
  auto k = kunneth(a, b, c, c, 3);
  CHECK(k.box_dims == k.product_dims);
  CHECK(k.cross_rank == k.product_dims);
}

TEST_CASE("sum-diagonal adjunction") {
  struct Case {
    const char *f, *g;
    u32 p;
  };
  for (auto c : std::vector<Case>{{"X2", "I[box]I", 2},
                                  {"G2", "I[box]I", 2},
                                  {"S2", "I[box]I", 3},
                                  {"T1", "I[box]I", 2},
                                  {"X3", "S2[box]I", 2},
                                  {"G3", "L2[box]I", 3}}) {
    auto a = sum_diag_adjunction(parse_functor(c.f), parse_functor(c.g), c.p, 3);
    CHECK_MESSAGE(a.two_variable == a.one_variable, c.f << " " << c.g);
  }
}

TEST_CASE("swap involution in degree 0 exchanges identity and swap") {
  for (u32 p : {2u, 3u}) {
    auto t = theta_involution(1, parse_functor("X2"), p, 2);
    REQUIRE(t.dims[0] == 2);
    Matrix th = t.theta[0];
    CHECK(th.at(0, 0) + th.at(1, 1) == 0);  // trace 0
    CHECK(th * th == Matrix::identity(2, p));
    CHECK(th != Matrix::identity(2, p));
  }
}

TEST_CASE("swap involution squares to the identity") {
  for (const char* g : {"X2", "S2", "L2", "G2"})
    for (u32 p : {2u, 3u}) {
      auto t = theta_involution(1, parse_functor(g), p, 3);
      for (u32 i = 0; i <= 3; ++i)
        CHECK_MESSAGE(t.theta[i] * t.theta[i] == Matrix::identity(t.dims[i], p), g << " p=" << p << " i=" << i);
    }
  auto t = theta_involution(2, parse_functor("X4"), 3, 1);
  CHECK(t.theta[0] * t.theta[0] == Matrix::identity(t.dims[0], 3));
}

TEST_CASE("duality on Ext of a twist is the identity") {
  for (auto [p, n, top] : std::vector<std::tuple<u32, u32, u32>>{{2, 2, 4}, {3, 3, 4}}) {
    auto tt = theta_tilde(to_module(parse_functor("T1"), n, p), top);
    for (u32 i = 0; i <= top; ++i) CHECK(tt[i] == Matrix::identity(tt[i].rows(), p));
  }
}

TEST_CASE("duality is an involution") {
  for (auto [s, p] : std::vector<std::pair<const char*, u32>>{{"S2", 3}, {"X2", 2}, {"G2", 2}, {"L2", 3}}) {
    auto m = to_module(parse_functor(s), 2, p);
    auto tt = theta_tilde(m, 3);
    for (auto& t : tt) CHECK_MESSAGE(t * t == Matrix::identity(t.rows(), p), s);
  }
  auto a = to_module(parse_functor("S2"), 2, 2), b = to_module(parse_functor("X2"), 2, 2);
  auto ab = theta_tilde(a, b, 3), ba = theta_tilde(b, a, 3);
  for (u32 i = 0; i <= 3; ++i) CHECK(ba[i] * ab[i] == Matrix::identity(ab[i].cols(), 2));
}

namespace {

std::vector<std::size_t> cell_dims(const HopfTable& t, u32 i, u32 j) {
  std::vector<std::size_t> out(t.max_i + 1, 99);
  for (auto& c : t.cells)
    if (c.i == i && c.j == j) out[c.cohdeg] = c.dim;
  return out;
}

}  // namespace

TEST_CASE("star pipeline for symmetric and exterior powers of a twist") {
  auto raw = star_pipeline(parse_functor("S*(T1)"), 3, 4, 2, 4);
  CHECK(cell_dims(raw, 1, 1) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(cell_dims(raw, 0, 0) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(cell_dims(raw, 0, 1) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  CHECK(cell_dims(raw, 1, 2) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  REQUIRE(raw.skipped.size() == 1);
  CHECK(raw.skipped[0].functor_degree == 6);
  for (auto& c : raw.cells)
    if (c.i == 1 && c.j == 1) CHECK(c.deg_i + c.deg_j == 4);

  auto s = classical_split(parse_functor("S*(T1)"), 3, 4, 1, 4);
  CHECK(cell_dims(s.orth, 1, 1) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(cell_dims(s.symp, 1, 1) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  CHECK(cell_dims(s.orth, 0, 0)[0] == 1);
  CHECK(cell_dims(s.symp, 0, 0)[0] == 1);

  auto l = classical_split(parse_functor("L*(T1)"), 3, 4, 1, 4);
  CHECK(cell_dims(l.symp, 1, 1) == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(cell_dims(l.orth, 1, 1) == std::vector<std::size_t>{0, 0, 0, 0, 0});
  for (auto& c : l.symp.cells)
    if (c.i == 1 && c.j == 1) CHECK(c.deg_i + c.deg_j == 2);

  CHECK_THROWS_AS(classical_split(parse_functor("S*(T1)"), 2, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("exponential swap square") {
  for (u32 p : {2u, 3u, 5u}) {
    CHECK(exponential_swap_square('S', true, p, 2, 2, 4).commutes);
    CHECK(exponential_swap_square('G', true, p, 2, 2, 4).commutes);
    CHECK(exponential_swap_square('L', false, p, 3, 2, 4).commutes);
  }
  for (u32 p : {3u, 5u}) {
    auto g = exponential_swap_square('G', false, p, 2, 2, 4);
    CHECK_FALSE(g.commutes);
    CHECK(std::find(g.failures.begin(), g.failures.end(), std::pair<u32, u32>{1, 1}) != g.failures.end());
    CHECK_FALSE(exponential_swap_square('L', true, p, 2, 2, 2).commutes);
  }
  CHECK(exponential_swap_square('G', false, 2, 2, 2, 4).commutes);
}

TEST_CASE("degree 0 coproduct is a section of the cup product") {
  struct Case {
    const char *fg, *f1, *f2;
  };
  std::vector<Case> cases{{"L2", "L2", "L2"}, {"L2", "X2", "L2"}, {"L2", "K1", "X2"}, {"L2", "X2*X2", "K1"},
                          {"S2", "S2", "S2"}, {"S2", "X2", "S2"}, {"S2", "S2", "K1"}, {"S2", "X2", "X2"},
                          {"gl", "gl", "gl"}, {"gl", "K1[box]K1", "gl"}, {"gl", "X2[box]X2", "K1[box]K1"}};
  for (u32 p : {3u, 5u})
    for (auto c : cases) {
      auto r = cup_coproduct(parse_functor(c.fg), parse_functor(c.f1), parse_functor(c.f2), p);
      INFO(c.fg << " " << c.f1 << " " << c.f2 << " p=" << p);
      CHECK(r.dim_x * r.dim_y > 0);
      CHECK(r.section);
      CHECK(r.cup_rank == r.dim_x * r.dim_y);
      CHECK(r.counit);
    }
}

namespace {

// Class in Ext^1(DB, DA) of the dual of the pushout extension 0 -> B -> E -> A -> 0 of a cocycle
// c : P_1 -> B, where P resolves A. Works with D(B (+) P_0) restricted to the annihilator of
// {(c(x), -d(x))}.
Vec dual_extension_class(const Resolution& rp, const Module& b, const Cochain& c, const Resolution& rq,
                         const ExtData& eq) {
  u32 p = b.prime();
  const Module& p0 = rp.terms[0];
  std::size_t nb = b.dim(), np = p0.dim(), n = nb + np;
  SparseMatrix cmap = map_from_generators(rp.terms[1], rp.tops[1], b, c);
  Matrix rel(n, rp.terms[1].dim(), p);
  Matrix cd = cmap.to_dense(), dd = rp.maps[1].to_dense();
  for (std::size_t x = 0; x < rel.cols(); ++x) {
    for (std::size_t i = 0; i < nb; ++i) rel.at(i, x) = cd.at(i, x);
    for (std::size_t i = 0; i < np; ++i) rel.at(nb + i, x) = (p - dd.at(i, x)) % p;
  }
  Matrix ann = left_nullspace(rel);  // rows: functionals on B (+) P_0 killing the relations
  auto weight_of = [&](std::size_t i) { return i < nb ? b.weight(i) : p0.weight(i - nb); };
  auto act_dual = [&](std::size_t y, const Vec& phi) {
    std::size_t yt = transpose_element(b.algebra(), y);
    Vec out(n, 0);
    Vec pb(phi.begin(), phi.begin() + nb), pp(phi.begin() + nb, phi.end());
    Vec qb = b.action(yt).transpose().apply(pb), qp = p0.action(yt).transpose().apply(pp);
    std::copy(qb.begin(), qb.end(), out.begin());
    std::copy(qp.begin(), qp.end(), out.begin() + nb);
    return out;
  };
  // lift each generator of Q_0 from DB to the annihilator
  std::vector<Vec> lift;
  for (std::size_t l = 0; l < rq.tops[0].size(); ++l) {
    std::size_t w = rq.tops[0][l];
    std::vector<Vec> cand;
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      Vec v = ann.row(r), part(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        if (weight_of(i) == w) part[i] = v[i];
      cand.push_back(part);
    }
    Matrix a(nb, cand.size(), p), rhs(nb, 1, p);
    for (std::size_t k = 0; k < cand.size(); ++k)
      for (std::size_t i = 0; i < nb; ++i) a.at(i, k) = cand[k][i];
    for (auto [i, x] : rq.images[0][l]) rhs.at(i, 0) = x;
    auto sol = solve(a, rhs);
    REQUIRE(sol);
    Vec phi(n, 0);
    for (std::size_t k = 0; k < cand.size(); ++k)
      for (std::size_t i = 0; i < n; ++i) phi[i] = (phi[i] + (u64)sol->at(k, 0) * cand[k][i]) % p;
    lift.push_back(phi);
  }
  // push the generators of Q_1 through: they land in DA inside D(P_0)
  auto lay = projective_layout(b.algebra(), rq.tops[0]);
  Matrix eta = rp.maps[0].transpose().to_dense();
  Cochain w;
  for (auto& img : rq.images[1]) {
    Vec psi(n, 0);
    for (auto [idx, c2] : img) {
      auto [l, y] = lay[idx];
      Vec t = act_dual(y, lift[l]);
      for (std::size_t i = 0; i < n; ++i) psi[i] = (psi[i] + (u64)c2 * t[i]) % p;
    }
    for (std::size_t i = 0; i < nb; ++i) REQUIRE(psi[i] == 0);
    Matrix rhs(np, 1, p);
    for (std::size_t i = 0; i < np; ++i) rhs.at(i, 0) = psi[nb + i];
    auto a = solve(eta, rhs);
    REQUIRE(a);
    SVec s;
    for (std::size_t i = 0; i < a->rows(); ++i)
      if (a->at(i, 0)) s.emplace_back((u32)i, a->at(i, 0));
    w.push_back(s);
  }
  return class_coordinates(rq, dual_module(rp.target), 1, eq, w);
}

}  // namespace

TEST_CASE("duality in degree 1 agrees with dualizing an extension") {
  u32 p = 3;
  auto mf = to_module(parse_functor("L3"), 3, p), mg = to_module(parse_functor("G3"), 3, p);
  auto rp = resolve(dual_module(mf), 2), rq = resolve(dual_module(mg), 2);
  auto ep = ext(rp, mg, 1), eq = ext(rq, mf, 1);
  REQUIRE(ep.dims[1] == 1);
  auto tt = theta_tilde(mf, mg, 1);
  for (std::size_t c = 0; c < ep.dims[1]; ++c) {
    Vec v = dual_extension_class(rp, mg, ep.classes[1][c], rq, eq);
    for (std::size_t r = 0; r < v.size(); ++r) CHECK(v[r] == tt[1].at(r, c));
  }
}
