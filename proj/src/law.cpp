#include "schurext/law.hpp"

namespace schurext {

Matrix eval_numeric(const FExpr& f, const std::vector<Matrix>& h) {
  if (h.empty()) throw std::invalid_argument("no input matrices");
  FpRing ring{h[0].prime()};
  std::vector<RMat<FpRing>> in;
  for (auto& m : h) in.push_back(law::from_matrix(m, ring));
  auto r = eval_law(f, in, ring);
  Matrix out(r.rows, r.cols, ring.p);
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) out.at(i, j) = r.at(i, j);
  return out;
}

PolyMatrix eval_poly(const FExpr& f, const std::vector<PolyMatrix>& h) {
  if (h.empty()) throw std::invalid_argument("no input matrices");
  UPolyRing ring{h[0].prime()};
  std::vector<RMat<UPolyRing>> in;
  for (auto& m : h) {
    RMat<UPolyRing> x(m.rows(), m.cols(), ring);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Vec e = m.entry(i, j);
        UPolyRing::trim(e);
        x.at(i, j) = e;
      }
    in.push_back(std::move(x));
  }
  auto r = eval_law(f, in, ring);
  std::size_t deg = 0;
  for (auto& e : r.a)
    if (e.size() > deg + 1) deg = e.size() - 1;
  PolyMatrix out(r.rows, r.cols, deg, ring.p);
  for (std::size_t i = 0; i < r.rows; ++i)
    for (std::size_t j = 0; j < r.cols; ++j) out.set_entry(i, j, r.at(i, j));
  return out;
}

}  // namespace schurext
