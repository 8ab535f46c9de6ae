#ifndef SCHUREXT_CLASSICAL_HPP
#define SCHUREXT_CLASSICAL_HPP

#include <string>
#include <vector>

#include "schurext/module.hpp"

namespace schurext {

enum class GroupKind { GL, Sp, O };

// A product of classical groups, e.g. "GLxSp". Each GL factor uses two functor slots
// (contravariant, covariant), each Sp or O factor one.
struct GroupSpec {
  std::vector<GroupKind> factors;
};

GroupSpec parse_group(const std::string& text);
std::string group_name(const GroupSpec& g);
std::string kind_name(GroupKind k);
std::size_t slot_count(GroupKind k);
std::size_t slot_count(const GroupSpec& g);

// gl, L2 or S2.
FExpr characteristic_functor(GroupKind k);
// Dimension of the evaluation object per slot: (n, n) for GL, 2n for Sp and O.
std::vector<u32> evaluation_dims(const GroupSpec& g, u32 n);
// The invariant element e_n of F_G(V^n): the identity, omega_n or q_n, in the basis of the evaluated functor.
Vec invariant_element(GroupKind k, u32 n, u32 p);

// One-parameter unipotent subgroups x(t) on the natural representation, plus finite generators
// (the reflection e_1 <-> e_{n+1} for O). The torus enters through weights.
struct GeneratorSet {
  GroupKind kind;
  u32 n = 0, p = 2;
  std::vector<PolyMatrix> unipotents;
  std::vector<Matrix> finite;
  Matrix form;  // J for Sp, the polar form of q for O, empty for GL
};
const GeneratorSet& generators(GroupKind k, u32 n, u32 p);
// x^T J x = J for Sp; x^T B x = B and q(x e_i) = q(e_i) for O; x(0) = 1 throughout.
bool preserves_form(const GeneratorSet& g);

// Invariants of G_n on F evaluated at V^n, as the rows of a matrix.
Matrix invariants(const FExpr& f, const GroupSpec& g, u32 n, u32 p);

// Degree-2 functor carrying the contractions: (I*Kk)[box](I*Kl) for GL, S2(I*Kk) for Sp and O.
FExpr contraction_functor(GroupKind k, u32 copies, u32 dual_copies);
// The contractions (i|j) as rows: k*l for GL, C(k,2) for Sp, C(k,2)+k for O.
Matrix contractions(GroupKind k, u32 copies, u32 dual_copies, u32 n, u32 p);

// Gamma^{d_1}(F_{G^1}) [box] ... for the multidegree of F; nullopt when some degree does not fit.
std::optional<FExpr> gamma_source(const GroupSpec& g, const FExpr& f, u32 p);

struct Phi0 {
  std::optional<FExpr> source;
  NatSpace hom;
  Matrix images;  // columns: f(e^{(x)d}) for the basis of hom, in F(V^n)
};
// f -> f(e^{(x)d}); the zero map when the degree of F is odd in some factor.
Phi0 phi0(const GroupSpec& g, const FExpr& f, u32 n, u32 p);
// 2n >= deg F in every factor.
bool in_stable_range(const GroupSpec& g, const FExpr& f, u32 n, u32 p);

// The matrix of the natural transformation at uniform dimension N, moved to per-slot dimensions.
Matrix transport_to(const FExpr& f, const FExpr& g, const SparseMatrix& at_n, u32 n, const std::vector<u32>& dims,
                    u32 p);

// F(pi) restricted to invariants, invariants(m) -> invariants(n), in the row bases returned by invariants().
Matrix stabilization_map(const GroupSpec& g, const FExpr& f, u32 n, u32 m, u32 p);
// The projection V^m -> V^n per slot.
std::vector<Matrix> stabilization_projection(const GroupSpec& g, u32 n, u32 m, u32 p);

}  // namespace schurext

#endif
