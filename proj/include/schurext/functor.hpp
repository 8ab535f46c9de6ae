#ifndef SCHUREXT_FUNCTOR_HPP
#define SCHUREXT_FUNCTOR_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurext/fp.hpp"

namespace schurext {

enum class FKind {
  Identity,
  Constant,
  Gamma,
  Sym,
  Wedge,
  TensorPow,
  Twist,
  Compose,
  TensorProd,
  DirectSum,
  Sharp,
  Gl,
  Box,
  Star,     // S*, L*, G* families of an inner functor, graded by exponent
  Graded,   // explicit list of (label, functor)
  SumPre,   // (V, W) -> F(V (+) W)
  Diag,     // V -> G(V, V)
};

struct FunctorExpr;
using FExpr = std::shared_ptr<const FunctorExpr>;

struct FunctorExpr {
  FKind kind = FKind::Identity;
  u32 param = 0;             // exponent, dimension, twist order, or family letter for Star
  std::vector<FExpr> kids;
  std::vector<u32> labels;   // Graded only

  bool operator==(const FunctorExpr& o) const;
};

namespace fx {
FExpr identity();
FExpr constant(u32 m);
FExpr gamma(u32 d);
FExpr sym(u32 d);
FExpr wedge(u32 d);
FExpr tpow(u32 d);
FExpr twist(u32 r);
FExpr compose(FExpr outer, FExpr inner);
FExpr tensor(FExpr a, FExpr b);
FExpr dsum(FExpr a, FExpr b);
FExpr sharp(FExpr a);
FExpr gl();
FExpr box(FExpr a, FExpr b);
FExpr star(char family, FExpr inner);
FExpr graded(std::vector<u32> labels, std::vector<FExpr> parts);
FExpr sum_pre(FExpr f);
FExpr diag(FExpr g);
}  // namespace fx

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

FExpr parse_functor(const std::string& text);
std::string print_functor(const FExpr& f);

// Number of variable slots.
std::size_t arity(const FExpr& f);
// Per slot: true when the slot is contravariant (the first slot of gl).
std::vector<bool> variance(const FExpr& f);
// Multidegree per slot; nullopt when not multihomogeneous.
std::optional<std::vector<u32>> multidegree(const FExpr& f, u32 p);
// Total degree; nullopt when not homogeneous.
std::optional<u32> total_degree(const FExpr& f, u32 p);
// Dimension of F evaluated at k^{dims[0]}, ..., k^{dims[k-1]}.
std::size_t eval_dim(const FExpr& f, const std::vector<u32>& dims);
// Readable labels of the evaluated basis.
std::vector<std::string> basis_labels(const FExpr& f, const std::vector<u32>& dims);

// Components of a Star or Graded family with exponent at most max_label, as (label, functor).
std::vector<std::pair<u32, FExpr>> family_components(const FExpr& f, u32 max_label);

}  // namespace schurext

#endif
