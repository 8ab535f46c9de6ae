#ifndef SCHUREXT_MODULE_HPP
#define SCHUREXT_MODULE_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurext/algebra.hpp"
#include "schurext/functor.hpp"

namespace schurext {

// Finite-dimensional left module over a weighted algebra, given on a basis of weight vectors.
class Module {
 public:
  using Provider = std::function<SparseMatrix(std::size_t)>;

  Module() = default;
  Module(std::shared_ptr<const Algebra> alg, std::vector<std::size_t> weights, Provider act);

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
  u32 prime() const { return alg_->prime(); }
  std::size_t dim() const { return weights_.size(); }
  const std::vector<std::size_t>& weights() const { return weights_; }
  std::size_t weight(std::size_t b) const { return weights_[b]; }
  // Basis vectors of weight w, in increasing order.
  const std::vector<std::size_t>& weight_space(std::size_t w) const;
  // Position of basis vector b inside its weight space.
  std::size_t local_index(std::size_t b) const { return local_[b]; }

  // Action of the basis element x of the algebra.
  const SparseMatrix& action(std::size_t x) const;
  SVec act(const SVec& a, const SVec& v) const;
  Matrix matrix(const SVec& a) const;

  std::vector<std::string> labels;

 private:
  std::shared_ptr<const Algebra> alg_;
  std::vector<std::size_t> weights_;
  std::vector<std::vector<std::size_t>> spaces_;
  std::vector<std::size_t> local_;
  Provider provider_;
  mutable std::unordered_map<std::size_t, SparseMatrix> cache_;
};

// Per basis vector of F(k^n, ..., k^n): its weight in each slot.
std::vector<std::vector<std::vector<u32>>> functor_weights(const FExpr& f, u32 n, u32 p);

// F(k^n, ..., k^n) as a module over S(n, d_1) (x) ... (x) S(n, d_k). For a functor that is not
// multihomogeneous a component multidegree must be given; its summand is returned.
Module to_module(const FExpr& f, u32 n, u32 p, std::optional<std::vector<u32>> component = std::nullopt);

// Module homomorphisms M -> N, as N.dim() x M.dim() matrices.
std::vector<SparseMatrix> hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
// An invertible homomorphism, if one is found among random elements of hom(M, N).
std::optional<SparseMatrix> find_isomorphism(const Module& m, const Module& n, unsigned seed = 1);
// Checks that f : M -> N commutes with the action of every generator.
bool is_homomorphism(const Module& m, const Module& n, const SparseMatrix& f);

// Natural transformations F -> G, computed at dimension n >= the degree of each slot.
struct NatSpace {
  FExpr source, target;
  u32 p = 2;
  u32 n = 0;
  std::vector<SparseMatrix> maps;
  std::size_t dim() const { return maps.size(); }
};
NatSpace nat_transformations(const FExpr& f, const FExpr& g, u32 p, u32 n = 0);
// The component at k^m of a natural transformation known at k^N.
SparseMatrix transport(const FExpr& f, const FExpr& g, const SparseMatrix& at_n, u32 n, u32 m, u32 p);

}  // namespace schurext

#endif
