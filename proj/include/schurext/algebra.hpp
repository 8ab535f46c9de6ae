#ifndef SCHUREXT_ALGEBRA_HPP
#define SCHUREXT_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "schurext/gamma.hpp"
#include "schurext/matrix.hpp"

namespace schurext {

// Finite-dimensional algebra with a basis of weight-homogeneous elements: every basis element
// x satisfies 1_l x 1_r = x for a unique pair of weight idempotents (l, r).
class Algebra {
 public:
  virtual ~Algebra() = default;

  u32 prime() const { return p_; }
  std::size_t dim() const { return dim_; }

  // Product x * y of basis elements.
  virtual SVec mul_basis(std::size_t x, std::size_t y) const = 0;
  virtual std::size_t num_weights() const = 0;
  virtual std::size_t left_weight(std::size_t x) const = 0;
  virtual std::size_t right_weight(std::size_t x) const = 0;
  virtual std::size_t idempotent(std::size_t w) const = 0;
  // Non-idempotent basis elements which together with the idempotents generate the algebra.
  virtual const std::vector<std::size_t>& generators() const = 0;
  virtual std::string describe() const = 0;
  // Weight w as a composition (concatenated over tensor factors).
  virtual std::vector<u32> weight_vector(std::size_t w) const = 0;

  SVec mul(const SVec& a, const SVec& b) const;
  SVec unit() const;
  // Basis elements x with left_weight(x) == l and right_weight(x) == r.
  const std::vector<std::size_t>& block(std::size_t l, std::size_t r) const;
  std::vector<std::size_t> column(std::size_t r) const;

 protected:
  void build_blocks();
  u32 p_ = 2;
  std::size_t dim_ = 0;

 private:
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> empty_;
};

// S(n,d) = Gamma^d(End k^n). Basis: multisets of matrix units E_{ij} (index i*n+j);
// product x * y is the composite x o y.
class SchurAlgebra : public Algebra {
 public:
  SchurAlgebra(u32 n, u32 d, u32 p);

  u32 n() const { return n_; }
  u32 d() const { return d_; }
  const MultisetIndex& basis() const { return idx_; }
  const std::vector<std::vector<u32>>& weights() const { return weights_; }
  std::size_t weight_id(const std::vector<u32>& w) const;

  SVec mul_basis(std::size_t x, std::size_t y) const override;
  std::size_t num_weights() const override { return weights_.size(); }
  std::size_t left_weight(std::size_t x) const override { return lw_[x]; }
  std::size_t right_weight(std::size_t x) const override { return rw_[x]; }
  std::size_t idempotent(std::size_t w) const override { return idem_[w]; }
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::string describe() const override;
  std::vector<u32> weight_vector(std::size_t w) const override { return weights_[w]; }

  // e_i^{(r)} 1_w and f_i^{(r)} 1_w as basis indices (npos when zero).
  std::size_t raising(u32 i, u32 r, std::size_t w) const;
  std::size_t lowering(u32 i, u32 r, std::size_t w) const;
  std::size_t table_size() const { return terms_.size(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  struct Term {
    u32 y, c, coef;
  };
  void build_table();
  bool load_cache();
  void save_cache() const;

  u32 n_, d_;
  MultisetIndex idx_;
  std::vector<std::vector<u32>> weights_;
  std::map<std::vector<u32>, std::size_t> weight_ids_;
  std::vector<std::size_t> lw_, rw_, idem_, gens_;
  std::vector<std::size_t> row_ptr_;
  std::vector<Term> terms_;
};

// Memoized construction per (n, d, p).
std::shared_ptr<const SchurAlgebra> schur_algebra(u32 n, u32 d, u32 p);

// Tensor product of algebras; basis index is mixed radix with the first factor most significant.
class ProductAlgebra : public Algebra {
 public:
  explicit ProductAlgebra(std::vector<std::shared_ptr<const Algebra>> factors);

  const std::vector<std::shared_ptr<const Algebra>>& factors() const { return factors_; }
  std::vector<std::size_t> split(std::size_t x) const;
  std::size_t join(const std::vector<std::size_t>& xs) const;
  std::vector<std::size_t> split_weight(std::size_t w) const;
  std::size_t join_weight(const std::vector<std::size_t>& ws) const;

  SVec mul_basis(std::size_t x, std::size_t y) const override;
  std::size_t num_weights() const override { return nweights_; }
  std::size_t left_weight(std::size_t x) const override;
  std::size_t right_weight(std::size_t x) const override;
  std::size_t idempotent(std::size_t w) const override;
  const std::vector<std::size_t>& generators() const override { return gens_; }
  std::string describe() const override;
  std::vector<u32> weight_vector(std::size_t w) const override;

 private:
  std::vector<std::shared_ptr<const Algebra>> factors_;
  std::size_t nweights_ = 1;
  std::vector<std::size_t> gens_;
};

// The algebra for a multi-slot functor of multidegree (d_1, ..., d_k): S(n,d_1) (x) ... (x) S(n,d_k).
// A single slot gives the Schur algebra itself.
std::shared_ptr<const Algebra> slot_algebra(u32 n, const std::vector<u32>& degrees, u32 p);

// Subalgebra generated by the given elements and the idempotents, as a dimension (for tests).
std::size_t generated_dimension(const Algebra& A);

}  // namespace schurext

#endif
