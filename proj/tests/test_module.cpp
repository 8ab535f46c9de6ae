#include <random>

#include "doctest.h"
#include "schurext/law.hpp"
#include "schurext/module.hpp"

using namespace schurext;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, u32 p, std::mt19937& rng) {
  Matrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng() % p;
  return m;
}

std::size_t nat_dim(const char* f, const char* g, u32 p, u32 n = 0) {
  return nat_transformations(parse_functor(f), parse_functor(g), p, n).dim();
}

}  // namespace

TEST_CASE("functor modules respect the algebra product") {
  std::mt19937 rng(1);
  for (const char* s : {"S2", "L2", "X2", "G2(L2)", "S3", "gl"}) {
    u32 p = 3;
    auto f = parse_functor(s);
    Module M = to_module(f, 2, p);
    const Algebra& A = M.algebra();
    CHECK(M.matrix(A.unit()) == Matrix::identity(M.dim(), p));
    for (int t = 0; t < 100; ++t) {
      std::size_t x = rng() % A.dim(), y = rng() % A.dim();
      SVec xy = A.mul({{(u32)x, 1}}, {{(u32)y, 1}});
      CHECK(M.matrix(xy) == (M.action(x) * M.action(y)).to_dense());
    }
  }
}

TEST_CASE("numeric evaluation equals the sum over the divided power basis") {
  // F(g) = sum_a g^a rho(xi_a), checked for S2 at p = 3, n = 2.
  std::mt19937 rng(2);
  auto f = parse_functor("S2");
  Module M = to_module(f, 2, 3);
  auto A = schur_algebra(2, 2, 3);
  for (int t = 0; t < 10; ++t) {
    Matrix g = random_matrix(2, 2, 3, rng);
    Matrix sum(M.dim(), M.dim(), 3);
    for (std::size_t a = 0; a < A->dim(); ++a) {
      u32 c = 1;
      for (u32 e : A->basis().at(a)) c = c * g.at(e / 2, e % 2) % 3;
      sum = sum + M.action(a).to_dense().scaled(c);
    }
    CHECK(sum == eval_numeric(f, {g}));
  }
}

TEST_CASE("weights of functor modules") {
  auto M = to_module(parse_functor("S2"), 2, 5);
  CHECK(M.dim() == 3);
  for (std::size_t w = 0; w < 3; ++w) CHECK(M.weight_space(w).size() == 1);
  auto N = to_module(parse_functor("S1[+]S2"), 2, 5, std::vector<u32>{2});
  CHECK(N.dim() == 3);
}

TEST_CASE("small hom spaces") {
  for (u32 p : {3u, 5u}) CHECK(nat_dim("L2", "L2", p) == 1);
  for (u32 p : {2u, 3u, 5u}) CHECK(nat_dim("X2", "X2", p) == 2);
  CHECK(nat_dim("S2", "X2", 3) == 1);
  CHECK(nat_dim("X2", "S2", 3) == 1);
  CHECK(nat_dim("L2", "S2", 3) == 0);
  CHECK(nat_dim("G2", "S2", 2) == 1);
  CHECK(nat_dim("T1", "S2", 2) == 1);
  CHECK(nat_dim("S2", "T1", 2) == 0);
  CHECK(nat_dim("G2", "T1", 2) == 1);
  CHECK(nat_dim("I", "T1", 2) == 0);
  // X3 has endomorphism algebra k[S_3]
  CHECK(nat_dim("X3", "X3", 2) == 6);
}

TEST_CASE("hom dimensions are stable in n") {
  for (const char* f : {"S2", "L2", "X2", "G2"})
    for (const char* g : {"S2", "L2", "X2", "G2"})
      for (u32 p : {2u, 3u}) CHECK(nat_dim(f, g, p, 2) == nat_dim(f, g, p, 3));
}

TEST_CASE("duality isomorphisms") {
  for (u32 p : {2u, 3u}) {
    u32 n = p;
    auto t = to_module(parse_functor("T1"), n, p), st = to_module(parse_functor("#T1"), n, p);
    CHECK(find_isomorphism(st, t).has_value());
    auto s2 = to_module(parse_functor("#S2"), 2, p), g2 = to_module(parse_functor("G2"), 2, p);
    auto iso = find_isomorphism(s2, g2);
    REQUIRE(iso.has_value());
    CHECK(is_homomorphism(s2, g2, *iso));
    if (p == 2) CHECK_FALSE(find_isomorphism(to_module(parse_functor("S2"), 2, p), g2).has_value());
  }
}

TEST_CASE("yoneda dimension count") {
  for (u32 p : {2u, 3u})
    for (u32 d = 1; d <= 2; ++d)
      for (u32 n = 1; n <= 2; ++n) {
        std::string proj = "G" + std::to_string(d) + "(I*K" + std::to_string(n) + ")";
        for (std::string f : {"S", "L", "G", "X"}) {
          f += std::to_string(d);
          CHECK(nat_dim(proj.c_str(), f.c_str(), p) == eval_dim(parse_functor(f), {n}));
        }
      }
}

TEST_CASE("transported transformations are natural") {
  std::mt19937 rng(4);
  u32 p = 3;
  for (auto [fs, gs] : {std::pair{"X2", "S2"}, {"G2", "X2"}, {"X2", "X2"}, {"gl", "gl"}}) {
    auto f = parse_functor(fs), g = parse_functor(gs);
    auto nat = nat_transformations(f, g, p);
    REQUIRE(nat.dim() > 0);
    for (u32 m : {1u, 3u, 4u})
      for (auto& th : nat.maps) {
        Matrix tm = transport(f, g, th, nat.n, m, p).to_dense();
        Matrix h = random_matrix(m, m, p, rng);
        std::vector<Matrix> hs(arity(f), h);
        CHECK(eval_numeric(g, hs) * tm == tm * eval_numeric(f, hs));
        if (m == 4) {
          Matrix back = transport(f, g, SparseMatrix::from_dense(tm), m, nat.n, p).to_dense();
          CHECK(back == th.to_dense());
        }
      }
  }
}

TEST_CASE("multi-slot modules") {
  auto f = parse_functor("gl[box]L2");
  Module M = to_module(f, 2, 5);
  CHECK(M.dim() == 4);
  CHECK(nat_dim("gl[box]L2", "gl[box]L2", 5) == 1);
  CHECK(nat_dim("gl", "gl", 3) == 1);
}
