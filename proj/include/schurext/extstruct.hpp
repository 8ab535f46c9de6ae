#ifndef SCHUREXT_EXTSTRUCT_HPP
#define SCHUREXT_EXTSTRUCT_HPP

#include <string>
#include <vector>

#include "schurext/homalg.hpp"

namespace schurext {

// Image of a basis element under the transpose anti-automorphism (E_ij -> E_ji in every factor).
std::size_t transpose_element(const Algebra& a, std::size_t x);
// The dual module M^*, x acting by M(x^T)^T. On a functor module this is the module of F^#.
Module dual_module(const Module& m);

// M (x) N over A (x) B. Two modules over Schur algebras with the same n land on slot_algebra,
// so the result is comparable with to_module of a box functor.
Module box_module(const Module& m, const Module& n);

// Total complex of P (x) Q, a resolution of the box product of the two targets, through degree length.
Resolution tensor_resolution(const Resolution& r1, const Resolution& r2, u32 length);

struct KunnethData {
  std::vector<std::size_t> product_dims;  // sum over a+b=k of dim Ext^a(M1,N1) dim Ext^b(M2,N2)
  std::vector<std::size_t> box_dims;      // Ext^k(M1 (x) M2, N1 (x) N2) from a minimal resolution
  std::vector<std::size_t> cross_rank;    // rank of the cross product map into the box Ext
};
KunnethData kunneth(const Module& m1, const Module& n1, const Module& m2, const Module& n2, u32 max_i);
// Cross product of cocycles x on P_a and y on Q_b, as a cochain on the total complex in degree a+b.
Cochain cross_product(const Resolution& r1, const Resolution& r2, u32 a, const Cochain& x, u32 b,
                      const Cochain& y, const Module& n1, const Module& n2);

struct AdjunctionDims {
  std::vector<std::size_t> two_variable;  // Ext_{P(2)}(F(V (+) W), G)
  std::vector<std::size_t> one_variable;  // Ext_P(F, G(V, V))
};
// F one-variable homogeneous, G two-variable of multidegree (d1, d2) with d1 + d2 = deg F.
AdjunctionDims sum_diag_adjunction(const FExpr& f, const FExpr& g, u32 p, u32 max_i);

// Action of a module endomorphism s of the resolved module on Ext^i(M, N), in the basis ext.classes[i].
Matrix ext_action(const Resolution& r, const Module& n, const ExtData& ext, u32 i, const SparseMatrix& s);

// The swap of the two tensor factors acting on Ext^i(Gamma^e(X2), G), i <= max_i.
struct ThetaData {
  std::vector<std::size_t> dims;
  std::vector<Matrix> theta;
};
ThetaData theta_involution(u32 e, const FExpr& g, u32 p, u32 max_i);

// The duality Ext^i(F^#, G) -> Ext^i(G^#, F), from the modules of F and G. For F = G both sides use
// the same basis.
std::vector<Matrix> theta_tilde(const Module& f, const Module& g, u32 max_i);
std::vector<Matrix> theta_tilde(const Module& f, u32 max_i);

// Internal degree of the label-th component of a family: 2d for S and G, d for L, the label otherwise.
u32 internal_degree(const FExpr& family, u32 label);

struct TableCell {
  u32 cohdeg = 0;
  u32 i = 0, j = 0;        // component labels
  u32 deg_i = 0, deg_j = 0;  // internal degrees
  std::size_t dim = 0;
};
struct SkippedCell {
  u32 i, j;
  u32 functor_degree;
};
struct HopfTable {
  u32 p = 2;
  std::string family;
  std::string kind;  // raw, orth, symp
  u32 max_i = 0;
  std::vector<TableCell> cells;
  std::vector<SkippedCell> skipped;
};
// Ext^*(E^{i#}, E^j) for labels up to max_label, computing cells of functor degree <= max_degree.
HopfTable star_pipeline(const FExpr& family, u32 p, u32 max_i, u32 max_label, u32 max_degree);
struct ClassicalSplit {
  HopfTable orth, symp;
};
// Eigen-split of (-1)^{deg_i deg_j} times the duality on each cell. Rejects p = 2.
ClassicalSplit classical_split(const FExpr& family, u32 p, u32 max_i, u32 max_label, u32 max_degree);

// Swap square F(tau) mu_{Y,Z} = mu_{Z,Y} tau* for the exponential structure of S, G or L, with the
// Koszul sign of the chosen grading (doubled: degree 2d).
struct SwapSquare {
  bool commutes = true;
  std::vector<std::pair<u32, u32>> failures;
};
SwapSquare exponential_swap_square(char family, bool doubled, u32 p, u32 ny, u32 nz, u32 max_deg);

// Cup product and coproduct in cohomological degree 0 for E = Gamma^*(fg):
//   cup: Hom(E^{e1}, F1) (x) Hom(E^{e2}, F2) -> Hom(E^{e1+e2}, F1 (x) F2)
//   coproduct: the reverse map through the sum-diagonal adjunction and the exponential structure.
struct CupCoproduct {
  std::size_t dim_x = 0, dim_y = 0, dim_z = 0;
  Matrix cup;        // dim_z x (dim_x dim_y)
  Matrix coproduct;  // (dim_x dim_y) x dim_z
  std::size_t cup_rank = 0;
  bool section = false;  // coproduct * cup = 1
  bool counit = false;   // Delta_E followed by the counit on either side is the identity
};
CupCoproduct cup_coproduct(const FExpr& fg, const FExpr& f1, const FExpr& f2, u32 p);

}  // namespace schurext

#endif
