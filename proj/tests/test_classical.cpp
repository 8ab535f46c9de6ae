#include "doctest.h"
#include "schurext/classical.hpp"
#include "schurext/law.hpp"
#include "schurext/verify.hpp"

using namespace schurext;

namespace {

bool same_span(const Matrix& a, const Matrix& b) {
  std::size_t r = rank(a);
  return r == rank(b) && r == rank(Matrix::vstack(a, b));
}

bool inside(const Matrix& rows, const Matrix& space) { return rank(Matrix::vstack(space, rows)) == rank(space); }

u32 binom(u32 n, u32 k) {
  u64 r = 1;
  for (u32 i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<u32>(r);
}

bool proportional(const Vec& a, const Vec& b, u32 p) {
  Matrix m = Matrix::from_rows({a, b}, a.size(), p);
  return rank(m) == 1;
}

}  // namespace

TEST_CASE("generators preserve their forms") {
  for (u32 p : {2u, 3u, 5u})
    for (u32 n = 1; n <= 3; ++n)
      for (auto k : {GroupKind::GL, GroupKind::Sp, GroupKind::O}) CHECK(preserves_form(generators(k, n, p)));
  CHECK(generators(GroupKind::GL, 1, 3).unipotents.empty());
  CHECK(generators(GroupKind::Sp, 1, 3).unipotents.size() == 2);
  CHECK(generators(GroupKind::O, 1, 3).finite.size() == 1);
  CHECK(generators(GroupKind::GL, 3, 5).unipotents.size() == 6);

  GeneratorSet bad = generators(GroupKind::Sp, 2, 5);
  bad.unipotents.push_back(PolyMatrix(4, 4, 1, 5));
  bad.unipotents.back().coeff(0) = Matrix::identity(4, 5);
  bad.unipotents.back().coeff(1).at(0, 1) = 1;
  CHECK_FALSE(preserves_form(bad));

  GeneratorSet bad_o = generators(GroupKind::O, 1, 3);
  bad_o.unipotents.push_back(PolyMatrix(2, 2, 1, 3));
  bad_o.unipotents.back().coeff(0) = Matrix::identity(2, 3);
  bad_o.unipotents.back().coeff(1).at(0, 1) = 1;
  CHECK_FALSE(preserves_form(bad_o));
}

TEST_CASE("group parsing") {
  CHECK(group_name(parse_group("GLxSp")) == "GLxSp");
  CHECK(slot_count(parse_group("GLxSpxO")) == 4);
  CHECK_THROWS_AS(parse_group("SL"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group(""), std::invalid_argument);
  CHECK_THROWS_AS(invariants(parse_functor("L2"), parse_group("GL"), 1, 3), std::invalid_argument);
}

TEST_CASE("basic invariants") {
  for (u32 p : {2u, 3u, 5u}) {
    Matrix w = invariants(parse_functor("L2"), parse_group("Sp"), 1, p);
    REQUIRE(w.rows() == 1);
    CHECK(proportional(w.row(0), invariant_element(GroupKind::Sp, 1, p), p));
    for (u32 n = 1; n <= 3; ++n) {
      Matrix id = invariants(parse_functor("gl"), parse_group("GL"), n, p);
      REQUIRE(id.rows() == 1);
      CHECK(proportional(id.row(0), invariant_element(GroupKind::GL, n, p), p));
    }
    for (u32 n = 1; n <= 2; ++n) CHECK(invariants(parse_functor("S2(I*K2)"), parse_group("Sp"), n, p).rows() == 1);
  }
  for (u32 p : {3u, 5u}) {
    Matrix q = invariants(parse_functor("S2"), parse_group("O"), 2, p);
    REQUIRE(q.rows() == 1);
    CHECK(proportional(q.row(0), invariant_element(GroupKind::O, 2, p), p));
  }
  // first fundamental theorem counts: three pairings of four vectors, two of gl x gl
  for (u32 n = 2; n <= 3; ++n) {
    CHECK(invariants(parse_functor("X4"), parse_group("Sp"), n, 3).rows() == 3);
    CHECK(invariants(parse_functor("X4"), parse_group("O"), n, 5).rows() == 3);
    CHECK(invariants(parse_functor("gl*gl"), parse_group("GL"), n, 3).rows() == 2);
  }
  // odd degree and unequal GL degrees have no invariants
  CHECK(invariants(parse_functor("X3"), parse_group("Sp"), 2, 3).rows() == 0);
  CHECK(invariants(parse_functor("I[box]X2"), parse_group("GL"), 2, 3).rows() == 0);
}

TEST_CASE("invariants are fixed by sampled group elements") {
  u32 p = 5;
  for (auto [grp, fs] : std::vector<std::pair<const char*, const char*>>{{"Sp", "X4"}, {"O", "S2*S2"}, {"GL", "gl*gl"}}) {
    auto g = parse_group(grp);
    auto f = parse_functor(fs);
    u32 n = 2;
    Matrix inv = invariants(f, g, n, p);
    const auto& gs = generators(g.factors[0], n, p);
    for (auto& x : gs.unipotents)
      for (u32 t : {1u, 2u, 4u}) {
        Matrix a = x.eval(t);
        Matrix ainv = x.eval(p - t);
        std::vector<Matrix> h;
        if (g.factors[0] == GroupKind::GL) {
          h = {ainv.transpose(), a};
        } else {
          h = {ainv.transpose()};
        }
        Matrix m = eval_numeric(f, h);
        CHECK((m * inv.transpose()) == inv.transpose());
      }
  }
}

TEST_CASE("contractions span the degree two invariants") {
  for (u32 n = 1; n <= 2; ++n) {
    for (u32 k = 1; k <= 2; ++k)
      for (u32 l = 1; l <= 2; ++l) {
        auto f = contraction_functor(GroupKind::GL, k, l);
        Matrix c = contractions(GroupKind::GL, k, l, n, 3);
        CHECK(c.rows() == k * l);
        CHECK(same_span(c, invariants(f, parse_group("GL"), n, 3)));
      }
    for (u32 k = 1; k <= 3; ++k) {
      auto f = contraction_functor(GroupKind::Sp, k, 0);
      Matrix c = contractions(GroupKind::Sp, k, 0, n, 3);
      CHECK(c.rows() == binom(k, 2));
      CHECK(rank(c) == binom(k, 2));
      CHECK(same_span(c, invariants(f, parse_group("Sp"), n, 3)));
    }
    for (u32 k = 1; k <= 2; ++k)
      for (u32 p : {3u, 5u}) {
        auto f = contraction_functor(GroupKind::O, k, 0);
        Matrix c = contractions(GroupKind::O, k, 0, n, p);
        CHECK(rank(c) == binom(k, 2) + k);
        CHECK(same_span(c, invariants(f, parse_group("O"), n, p)));
      }
  }
}

TEST_CASE("contractions agree with the invariant elements") {
  for (u32 n = 1; n <= 3; ++n) {
    u32 p = 5;
    // GL, k = l = 1: (I*K1)[box](I*K1) is gl and the contraction is the identity, also phi0(id)
    Matrix c = contractions(GroupKind::GL, 1, 1, n, p);
    CHECK(c.row(0) == invariant_element(GroupKind::GL, n, p));
    Phi0 ph = phi0(parse_group("GL"), parse_functor("gl"), n, p);
    REQUIRE(ph.hom.dim() == 1);
    CHECK(proportional(ph.images.col(0), c.row(0), p));
    // O, k = 1: S2(I*K1) is S2 and (1|1) is q
    CHECK(contractions(GroupKind::O, 1, 0, n, p).row(0) == invariant_element(GroupKind::O, n, p));
  }
  // Sp, k = 2: (1|2) is omega(x, y), evaluated by pairing the two copies
  u32 p = 7, n = 2;
  Matrix c = contractions(GroupKind::Sp, 2, 0, n, p);
  MultisetIndex idx(4 * n, 2);
  Vec x{1, 2, 3, 4}, y{5, 6, 0, 1};
  // value of a quadratic form on (x, y) in U = k^{2n} (x) k^2 with index a*2 + i
  Vec u(4 * n);
  for (u32 a = 0; a < 2 * n; ++a) u[a * 2] = x[a], u[a * 2 + 1] = y[a];
  u64 val = 0;
  for (std::size_t b = 0; b < idx.size(); ++b) {
    auto m = idx.at(b);
    val += (u64)c.at(0, b) * u[m[0]] % p * u[m[1]] % p;
  }
  u64 omega = 0;
  for (u32 a = 0; a < n; ++a) omega += (u64)x[a] * y[n + a] + (u64)(p - x[n + a]) * y[a];
  CHECK(val % p == omega % p);
}

TEST_CASE("phi0 on the characteristic functors") {
  for (u32 p : {3u, 5u})
    for (u32 n = 1; n <= 3; ++n) {
      Phi0 sp = phi0(parse_group("Sp"), parse_functor("L2"), n, p);
      REQUIRE(sp.hom.dim() == 1);
      CHECK(proportional(sp.images.col(0), invariant_element(GroupKind::Sp, n, p), p));
      Phi0 o = phi0(parse_group("O"), parse_functor("S2"), n, p);
      REQUIRE(o.hom.dim() == 1);
      CHECK(proportional(o.images.col(0), invariant_element(GroupKind::O, n, p), p));
    }
  Phi0 odd = phi0(parse_group("Sp"), parse_functor("X3"), 2, 3);
  CHECK_FALSE(odd.source.has_value());
  CHECK(odd.images.cols() == 0);
  Phi0 two = phi0(parse_group("Sp"), parse_functor("S2(I*K2)"), 1, 3);
  CHECK(two.hom.dim() == 1);
  CHECK(rank(two.images) == 1);
}

TEST_CASE("phi0 is injective into the invariants in the stable range") {
  for (u32 p : {2u, 3u, 5u})
    for (const auto& e : classical_catalog()) {
      auto g = parse_group(e.group);
      auto f = parse_functor(e.functor);
      auto deg = total_degree(f, p);
      if (!deg || *deg > 4) continue;
      if (p == 2 && e.group.find('O') != std::string::npos) continue;
      for (u32 n = 1; n <= 3; ++n) {
        if (!in_stable_range(g, f, n, p)) continue;
        CAPTURE(e.group);
        CAPTURE(e.functor);
        CAPTURE(n);
        Phi0 ph = phi0(g, f, n, p);
        Matrix inv = invariants(f, g, n, p);
        CHECK(rank(ph.images) == ph.hom.dim());
        CHECK(ph.hom.dim() == inv.rows());
        if (ph.images.cols()) CHECK(inside(ph.images.transpose(), inv));
      }
    }
}

TEST_CASE("orthogonal invariants are still computed at p = 2") {
  Matrix q = invariants(parse_functor("S2"), parse_group("O"), 2, 2);
  CHECK(inside(Matrix::from_rows({invariant_element(GroupKind::O, 2, 2)}, q.cols(), 2), q));
  Phi0 ph = phi0(parse_group("O"), parse_functor("S2"), 2, 2);
  CHECK(ph.images.rows() == q.cols());
}

TEST_CASE("product groups multiply dimensions") {
  u32 p = 3;
  for (auto [grp, fs, a, ga, b, gb] :
       std::vector<std::tuple<const char*, const char*, const char*, const char*, const char*, const char*>>{
           {"GLxSp", "gl[box]L2", "gl", "GL", "L2", "Sp"},
           {"GLxSp", "gl[box]X2", "gl", "GL", "X2", "Sp"},
           {"GLxO", "gl[box]S2", "gl", "GL", "S2", "O"},
           {"SpxO", "L2[box]X2", "L2", "Sp", "X2", "O"},
           {"SpxSp", "X2[box]X2", "X2", "Sp", "X2", "Sp"}})
    for (u32 n = 1; n <= 2; ++n) {
      CAPTURE(fs);
      std::size_t whole = invariants(parse_functor(fs), parse_group(grp), n, p).rows();
      std::size_t left = invariants(parse_functor(a), parse_group(ga), n, p).rows();
      std::size_t right = invariants(parse_functor(b), parse_group(gb), n, p).rows();
      CHECK(whole == left * right);
    }
}

TEST_CASE("stabilization") {
  u32 p = 3;
  auto sp = parse_group("Sp");
  CHECK(stabilization_map(sp, parse_functor("X4"), 2, 2, p) == Matrix::identity(3, p));
  Matrix l2 = stabilization_map(sp, parse_functor("L2"), 1, 2, p);
  CHECK(l2.rows() == 1);
  CHECK(l2.cols() == 1);
  CHECK_FALSE(l2.is_zero());
  CHECK_THROWS_AS(stabilization_map(sp, parse_functor("L2"), 3, 2, p), std::invalid_argument);

  // F(pi) carries phi0 at m to phi0 at n
  for (auto [grp, fs] : std::vector<std::pair<const char*, const char*>>{
           {"Sp", "X4"}, {"O", "S2*S2"}, {"GL", "gl*gl"}, {"Sp", "S2(I*K2)"}, {"GLxSp", "gl[box]L2"}}) {
    auto g = parse_group(grp);
    auto f = parse_functor(fs);
    Phi0 big = phi0(g, f, 3, p), small = phi0(g, f, 2, p);
    Matrix pushed = eval_numeric(f, stabilization_projection(g, 2, 3, p)) * big.images;
    CHECK(pushed == small.images);
  }

  for (const auto& e : classical_catalog()) {
    auto g = parse_group(e.group);
    auto f = parse_functor(e.functor);
    auto deg = total_degree(f, p);
    if (!deg || *deg > 4) continue;
    std::vector<u32> ns;
    for (u32 n = 1; n <= 3; ++n)
      if (in_stable_range(g, f, n, p)) ns.push_back(n);
    if (ns.size() < 2) continue;
    CAPTURE(e.group);
    CAPTURE(e.functor);
    std::size_t d0 = invariants(f, g, ns[0], p).rows();
    for (u32 m : ns) {
      CHECK(invariants(f, g, m, p).rows() == d0);
      Matrix s = stabilization_map(g, f, ns[0], m, p);
      CHECK(s.rows() == d0);
      CHECK(s.cols() == d0);
      CHECK(rank(s) == d0);
    }
  }
}
