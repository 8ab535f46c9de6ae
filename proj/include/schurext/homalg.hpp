#ifndef SCHUREXT_HOMALG_HPP
#define SCHUREXT_HOMALG_HPP

#include <memory>
#include <vector>

#include "schurext/module.hpp"

namespace schurext {

// Jacobson radical of S(n,d) as a list of weight-homogeneous elements (a basis).
// Memoized per (n, d, p).
const std::vector<SVec>& schur_radical(u32 n, u32 d, u32 p);
// Weight-homogeneous elements generating rad(A) as a two-sided ideal.
std::vector<SVec> radical_generators(const Algebra& a);
// Smallest k with rad^k = 0, or 0 if rad is not nilpotent within dim A + 1 steps.
std::size_t nilpotency_index(const Algebra& a, const std::vector<SVec>& rad);

// Weight-graded subspace of a module, kept as one echelon basis per weight.
class WeightedSubspace {
 public:
  explicit WeightedSubspace(const Module& ambient);
  const Module& ambient() const { return *amb_; }
  // Adds a weight vector; returns false if it was already contained.
  bool add(const SVec& v);
  bool contains(const SVec& v) const;
  std::size_t dim() const;
  std::size_t dim(std::size_t w) const { return parts_[w].dim(); }
  // Basis vectors of weight w in ambient coordinates.
  std::vector<SVec> basis(std::size_t w) const;
  std::vector<SVec> basis() const;
  // Closes the subspace under the action of the algebra.
  void close();

 private:
  Vec local(const SVec& v, std::size_t w) const;
  SVec global(const Vec& v, std::size_t w) const;
  std::size_t weight_of(const SVec& v) const;

  const Module* amb_;
  std::vector<EchelonBasis> parts_;
  std::vector<SVec> pending_;
};

// rad(A) K for a submodule K given by a weight basis.
WeightedSubspace radical_times(const Module& ambient, const std::vector<SVec>& sub);
// Weight vectors of the submodule spanned by `sub` whose images form a minimal generating set
// of it; chosen by descending weight.
std::vector<SVec> minimal_generators(const Module& ambient, const std::vector<SVec>& sub);

// The submodule spanned by weight vectors, on an echelon basis of each weight space.
Module submodule(const Module& ambient, const std::vector<SVec>& vectors);

// Basis of a sum of A 1_w: (summand, algebra basis element) pairs.
std::vector<std::pair<std::size_t, std::size_t>> projective_layout(const Algebra& a,
                                                                   const std::vector<std::size_t>& tops);
// Direct sum of A 1_w over the listed weights.
Module projective_module(const std::shared_ptr<const Algebra>& a, const std::vector<std::size_t>& tops);
// The module map P -> Q sending the j-th generator 1_{tops[j]} to images[j].
SparseMatrix map_from_generators(const Module& p, const std::vector<std::size_t>& tops, const Module& q,
                                 const std::vector<SVec>& images);
// Basis of the kernel of a weight-preserving map P -> Q, as weight vectors of P.
std::vector<SVec> weighted_kernel(const Module& p, const Module& q, const SparseMatrix& f);

struct Resolution {
  Module target;
  std::vector<std::vector<std::size_t>> tops;  // generator weights of P_i
  std::vector<Module> terms;                   // P_i
  std::vector<std::vector<SVec>> images;       // images[i][j]: generator j of P_i in P_{i-1} (target for i = 0)
  std::vector<SparseMatrix> maps;              // maps[0]: P_0 -> target, maps[i]: P_i -> P_{i-1}
  std::size_t length() const { return terms.size(); }
  std::vector<std::size_t> ranks() const;
};

// Resolution by sums of A 1_w with minimal generator counts, through P_length.
Resolution resolve(const Module& m, u32 length);
// d_i d_{i+1} = 0 and rank d_i + rank d_{i+1} = dim P_i along the computed range.
bool check_exact(const Resolution& r);

// Cochains C^i = Hom(P_i, N) = sum_j N_{tops[i][j]}, stored as one value in N per generator.
using Cochain = std::vector<SVec>;

struct ExtData {
  std::vector<std::size_t> dims;
  std::vector<std::vector<Cochain>> classes;  // representatives of a cohomology basis per degree
  std::vector<std::size_t> cochain_dims;
};

// Hom(P_i, N) -> Hom(P_{i+1}, N) for i + 1 < length.
Matrix coboundary(const Resolution& r, const Module& n, u32 i);
Vec flatten(const Resolution& r, const Module& n, u32 i, const Cochain& c);
Cochain unflatten(const Resolution& r, const Module& n, u32 i, const Vec& v);
ExtData ext(const Resolution& r, const Module& n, u32 max_i);
std::vector<std::size_t> ext_dims(const Module& m, const Module& n, u32 max_i);
// Coordinates of the class of a cocycle in the basis ext.classes[i].
Vec class_coordinates(const Resolution& r, const Module& n, u32 i, const ExtData& ext, const Cochain& c);
bool is_coboundary(const Resolution& r, const Module& n, u32 i, const Cochain& c);

// Lift of a cocycle f : P_i -> M (M the resolved module) to a chain map P_{i+k} -> P_k, k <= upto.
// lifts[k][j] is the image of generator j of P_{i+k}.
std::vector<std::vector<SVec>> lift_cocycle(const Resolution& r, u32 i, const Cochain& f, u32 upto);
// y . x for x in Ext^i(M, M) and y in Ext^j(M, N), as a cochain in degree i + j.
Cochain yoneda_product(const Resolution& r, u32 i, const Cochain& x, const Module& n, u32 j, const Cochain& y);

}  // namespace schurext

#endif
