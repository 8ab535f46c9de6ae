#ifndef SCHUREXT_GAMMA_HPP
#define SCHUREXT_GAMMA_HPP

#include <cstddef>
#include <vector>

#include "schurext/matrix.hpp"
#include "schurext/multiset.hpp"

namespace schurext {

// Divided power Gamma^d(k^m) with the orbit-sum basis indexed by multisets.
struct GammaSpace {
  u32 m = 0, d = 0;
  MultisetIndex index;

  GammaSpace() = default;
  GammaSpace(u32 m_, u32 d_) : m(m_), d(d_), index(m_, d_) {}
  std::size_t dim() const { return index.size(); }
  const Multiset& basis(std::size_t i) const { return index.at(i); }
};

GammaSpace gamma_space(u32 m, u32 d);

// Words of length d over [0, m), big-endian index.
std::size_t word_index(const std::vector<u32>& w, u32 m);
std::vector<u32> word_at(std::size_t idx, u32 m, u32 d);
std::size_t ipow(std::size_t b, u32 e);

// Orbit-sum expansion Gamma^d(V) -> V^{(x)d} and its left inverse on invariant tensors.
Vec expand_to_tensors(const GammaSpace& g, const Vec& x, u32 p);
Vec project_from_tensors(const GammaSpace& g, const Vec& t);

// Gamma^d(L) for a linear map L : k^{cols} -> k^{rows}, computed through tensor powers.
Matrix gamma_map(const Matrix& L, u32 d);

// j_d : Gamma^d(U) (x) Gamma^d(V) -> Gamma^d(U (x) V); basis of U (x) V is u * dimV + v,
// source basis is a * dim Gamma^d(V) + b.
Matrix j_map(u32 mu, u32 mv, u32 d, u32 p);
// Same map from the combinatorial description: a target multiset is hit exactly when its
// two projections are the source multisets.
Matrix j_map_direct(u32 mu, u32 mv, u32 d, u32 p);

// Basis of hom(k^a, k^b): matrix units E_{row,col} indexed row * a + col.
// Composition Gamma^d(hom(X,Y)) (x) Gamma^d(hom(Y,Z)) -> Gamma^d(hom(X,Z)),
// column index f * dim Gamma^d(hom(Y,Z)) + g, value Gamma^d(g o f).
Matrix gamma_compose_literal(u32 dx, u32 dy, u32 dz, u32 d, u32 p);

struct ComposeTerm {
  u32 f, g, c, coef;
};
// Structure constants of the same composition by direct counting, as sparse triples.
std::vector<ComposeTerm> gamma_compose_terms(u32 dx, u32 dy, u32 dz, u32 d, u32 p);
Matrix gamma_compose(u32 dx, u32 dy, u32 dz, u32 d, u32 p);
// Rank of the composition pairing (its image dimension).
std::size_t gamma_compose_rank(u32 dx, u32 dy, u32 dz, u32 d, u32 p);

// Gamma^d(V (+) W) = sum_{a+b=d} Gamma^a(V) (x) Gamma^b(W), V indices first.
struct ExpSplitEntry {
  u32 a;
  std::size_t iv, iw;
};
class ExponentialSplit {
 public:
  ExponentialSplit(u32 mv, u32 mw, u32 d);
  std::size_t dim() const { return total_.dim(); }
  const ExpSplitEntry& split(std::size_t i) const { return split_[i]; }
  std::size_t merge(u32 a, std::size_t iv, std::size_t iw) const;
  const GammaSpace& total() const { return total_; }
  const GammaSpace& left(u32 a) const { return left_[a]; }
  const GammaSpace& right(u32 b) const { return right_[b]; }
  // Projection Gamma^d(V (+) W) -> Gamma^a(V) (x) Gamma^{d-a}(W) as a 0/1 matrix.
  Matrix component(u32 a, u32 p) const;

 private:
  u32 mv_, mw_, d_;
  GammaSpace total_;
  std::vector<GammaSpace> left_, right_;
  std::vector<ExpSplitEntry> split_;
};

}  // namespace schurext

#endif
