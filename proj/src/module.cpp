#include "schurext/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "schurext/law.hpp"

namespace schurext {

Module::Module(std::shared_ptr<const Algebra> alg, std::vector<std::size_t> weights, Provider act)
    : alg_(std::move(alg)), weights_(std::move(weights)), provider_(std::move(act)) {
  spaces_.assign(alg_->num_weights(), {});
  local_.resize(weights_.size());
  for (std::size_t b = 0; b < weights_.size(); ++b) {
    local_[b] = spaces_.at(weights_[b]).size();
    spaces_[weights_[b]].push_back(b);
  }
}

const std::vector<std::size_t>& Module::weight_space(std::size_t w) const { return spaces_.at(w); }

const SparseMatrix& Module::action(std::size_t x) const {
  auto it = cache_.find(x);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(x, provider_(x)).first->second;
}

SVec Module::act(const SVec& a, const SVec& v) const {
  std::map<u32, u64> acc;
  u32 p = prime();
  for (auto [x, c] : a) {
    SVec img = action(x).apply(v);
    for (auto [i, y] : img) acc[i] = (acc[i] + (u64)c * y) % p;
  }
  SVec out;
  for (auto [i, y] : acc)
    if (y) out.emplace_back(i, (u32)y);
  return out;
}

Matrix Module::matrix(const SVec& a) const {
  Matrix m(dim(), dim(), prime());
  for (auto [x, c] : a) {
    Matrix t = action(x).to_dense().scaled(c);
    m = m + t;
  }
  return m;
}

namespace {

std::vector<u32> arity_dims(const FExpr& f, u32 n) { return std::vector<u32>(arity(f), n); }

// Splits a monomial in the generic variables s*n*n + i*n + j into per-slot multisets of matrix units.
std::vector<Multiset> split_monomial(const Mono& m, u32 n, std::size_t k) {
  std::vector<Multiset> out(k);
  for (std::size_t i = 0; i < 16 && m.v[i] != 0xFF; ++i) out[m.v[i] / (n * n)].push_back(m.v[i] % (n * n));
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<u32>>> functor_weights(const FExpr& f, u32 n, u32 p) {
  std::size_t k = arity(f);
  if (k * n > 255) throw std::invalid_argument("too many variables for generic evaluation");
  MPolyRing ring{p};
  std::vector<RMat<MPolyRing>> h;
  for (std::size_t s = 0; s < k; ++s) {
    RMat<MPolyRing> x(n, n, ring);
    for (u32 i = 0; i < n; ++i) x.at(i, i) = ring.var(s * n + i);
    h.push_back(std::move(x));
  }
  auto r = eval_law(f, h, ring);
  std::vector<std::vector<std::vector<u32>>> out(r.rows, std::vector<std::vector<u32>>(k, std::vector<u32>(n, 0)));
  for (std::size_t b = 0; b < r.rows; ++b) {
    const auto& e = r.at(b, b);
    if (e.size() != 1 || e[0].c != 1) throw std::logic_error("basis vector is not a weight vector");
    const Mono& m = e[0].m;
    for (std::size_t i = 0; i < 16 && m.v[i] != 0xFF; ++i) ++out[b][m.v[i] / n][m.v[i] % n];
  }
  return out;
}

Module to_module(const FExpr& f, u32 n, u32 p, std::optional<std::vector<u32>> component) {
  std::size_t k = arity(f);
  auto md = multidegree(f, p);
  std::vector<u32> degs;
  if (component) {
    if (component->size() != k) throw std::invalid_argument("component has the wrong number of slots");
    degs = *component;
  } else if (md) {
    degs = *md;
  } else {
    throw std::invalid_argument("functor is not multihomogeneous; choose a component");
  }
  std::size_t total = 0;
  for (u32 d : degs) total += d;
  if (total > 16) throw std::invalid_argument("degree above 16 is not supported");
  if (k * n * n > 255) throw std::invalid_argument("too many variables for generic evaluation");

  auto alg = slot_algebra(n, degs, p);
  auto wts = functor_weights(f, n, p);
  std::vector<std::size_t> keep, pos(wts.size(), SIZE_MAX), weights;
  for (std::size_t b = 0; b < wts.size(); ++b) {
    bool ok = true;
    for (std::size_t s = 0; s < k; ++s) {
      u32 sum = 0;
      for (u32 x : wts[b][s]) sum += x;
      ok = ok && sum == degs[s];
    }
    if (!ok) continue;
    pos[b] = keep.size();
    keep.push_back(b);
    std::size_t w;
    if (k == 1) {
      w = static_cast<const SchurAlgebra&>(*alg).weight_id(wts[b][0]);
    } else {
      auto& pa = static_cast<const ProductAlgebra&>(*alg);
      std::vector<std::size_t> ws(k);
      for (std::size_t s = 0; s < k; ++s) ws[s] = schur_algebra(n, degs[s], p)->weight_id(wts[b][s]);
      w = pa.join_weight(ws);
    }
    weights.push_back(w);
  }

  MPolyRing ring{p};
  std::vector<RMat<MPolyRing>> h;
  for (std::size_t s = 0; s < k; ++s) {
    RMat<MPolyRing> x(n, n, ring);
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j) x.at(i, j) = ring.var(s * n * n + i * n + j);
    h.push_back(std::move(x));
  }
  auto r = eval_law(f, h, ring);

  std::vector<std::shared_ptr<const SchurAlgebra>> factors;
  for (u32 d : degs) factors.push_back(schur_algebra(n, d, p));
  auto table = std::make_shared<std::unordered_map<std::size_t, SparseMatrix>>();
  std::size_t dim = keep.size();
  for (std::size_t rr = 0; rr < dim; ++rr)
    for (std::size_t cc = 0; cc < dim; ++cc)
      for (auto& t : r.at(keep[rr], keep[cc])) {
        auto parts = split_monomial(t.m, n, k);
        std::size_t x = 0;
        for (std::size_t s = 0; s < k; ++s) x = x * factors[s]->dim() + factors[s]->basis().rank(parts[s]);
        auto it = table->find(x);
        if (it == table->end()) it = table->emplace(x, SparseMatrix(dim, dim, p)).first;
        it->second.add(rr, cc, t.c);
      }
  Module mod(alg, std::move(weights), [table, dim, p](std::size_t x) {
    auto it = table->find(x);
    return it == table->end() ? SparseMatrix(dim, dim, p) : it->second;
  });
  auto labels = basis_labels(f, arity_dims(f, n));
  for (std::size_t b : keep) mod.labels.push_back(labels[b]);
  return mod;
}

namespace {

struct HomLayout {
  std::vector<std::size_t> offset;  // per weight; SIZE_MAX when the block is empty
  std::vector<std::size_t> posm, posn;
  std::size_t unknowns = 0;
};

HomLayout hom_layout(const Module& m, const Module& n) {
  HomLayout L;
  std::size_t nw = m.algebra().num_weights();
  L.offset.assign(nw, SIZE_MAX);
  L.posm.resize(m.dim());
  L.posn.resize(n.dim());
  for (std::size_t w = 0; w < nw; ++w) {
    auto& sm = m.weight_space(w);
    auto& sn = n.weight_space(w);
    for (std::size_t i = 0; i < sm.size(); ++i) L.posm[sm[i]] = i;
    for (std::size_t i = 0; i < sn.size(); ++i) L.posn[sn[i]] = i;
    if (sm.empty() || sn.empty()) continue;
    L.offset[w] = L.unknowns;
    L.unknowns += sm.size() * sn.size();
  }
  return L;
}

}  // namespace

std::vector<SparseMatrix> hom_space(const Module& m, const Module& n) {
  if (m.algebra_ptr() != n.algebra_ptr()) throw std::invalid_argument("modules over different algebras");
  const Algebra& A = m.algebra();
  u32 p = A.prime();
  HomLayout L = hom_layout(m, n);
  // unknown f_w(a, b), a in N_w, b in M_w
  auto var = [&](std::size_t w, std::size_t a, std::size_t b) {
    return L.offset[w] + L.posn[a] * m.weight_space(w).size() + L.posm[b];
  };
  std::vector<SVec> eqs;
  for (std::size_t g : A.generators()) {
    std::size_t l = A.left_weight(g), r = A.right_weight(g);
    auto& nl = n.weight_space(l);
    auto& mr = m.weight_space(r);
    if (nl.empty() || mr.empty()) continue;
    const SparseMatrix& Ng = n.action(g);
    SparseMatrix Mgt = m.action(g).transpose();
    for (std::size_t a : nl)
      for (std::size_t j : mr) {
        std::map<u32, u32> acc;
        // (N(g) f_r)(a, j) - (f_l M(g))(a, j)
        if (L.offset[r] != SIZE_MAX)
          for (auto [b, v] : Ng.row(a))
            if (n.weight(b) == r) {
              auto& e = acc[var(r, b, j)];
              e = (e + v) % p;
            }
        if (L.offset[l] != SIZE_MAX)
          for (auto [c, v] : Mgt.row(j))
            if (m.weight(c) == l) {
              auto& e = acc[var(l, a, c)];
              e = (e + p - v) % p;
            }
        SVec row;
        for (auto [i, v] : acc)
          if (v) row.emplace_back(i, v);
        if (!row.empty()) eqs.push_back(std::move(row));
      }
  }
  Matrix ker = nullspace_sparse(eqs, L.unknowns, p);
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    SparseMatrix f(n.dim(), m.dim(), p);
    for (std::size_t w = 0; w < A.num_weights(); ++w) {
      if (L.offset[w] == SIZE_MAX) continue;
      for (std::size_t a : n.weight_space(w))
        for (std::size_t b : m.weight_space(w))
          if (u32 v = ker.at(k, var(w, a, b))) f.add(a, b, v);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

std::optional<SparseMatrix> find_isomorphism(const Module& m, const Module& n, unsigned seed) {
  if (m.dim() != n.dim()) return std::nullopt;
  u32 p = m.prime();
  if (m.dim() == 0) return SparseMatrix(0, 0, p);
  auto basis = hom_space(m, n);
  if (basis.empty()) return std::nullopt;
  std::mt19937 rng(seed);
  for (int attempt = 0; attempt < 24; ++attempt) {
    SparseMatrix f(n.dim(), m.dim(), p);
    for (auto& b : basis) f = f + b.scaled(rng() % p);
    if (rank(f.to_dense()) == m.dim()) return f;
  }
  return std::nullopt;
}

bool is_homomorphism(const Module& m, const Module& n, const SparseMatrix& f) {
  const Algebra& A = m.algebra();
  for (std::size_t g : A.generators())
    if (!(n.action(g) * f == f * m.action(g))) return false;
  for (std::size_t w = 0; w < A.num_weights(); ++w) {
    std::size_t e = A.idempotent(w);
    if (!(n.action(e) * f == f * m.action(e))) return false;
  }
  return true;
}

NatSpace nat_transformations(const FExpr& f, const FExpr& g, u32 p, u32 n) {
  auto df = multidegree(f, p), dg = multidegree(g, p);
  if (!df || !dg) throw std::invalid_argument("natural transformations need multihomogeneous functors");
  if (arity(f) != arity(g)) throw std::invalid_argument("functors have different numbers of variables");
  NatSpace out;
  out.source = f;
  out.target = g;
  out.p = p;
  u32 top = 1;
  for (u32 d : *df) top = std::max(top, d);
  out.n = n ? n : top;
  if (out.n < top) throw std::invalid_argument("dimension below the degree");
  if (*df != *dg) return out;
  out.maps = hom_space(to_module(f, out.n, p), to_module(g, out.n, p));
  return out;
}

SparseMatrix transport(const FExpr& f, const FExpr& g, const SparseMatrix& at_n, u32 n, u32 m, u32 p) {
  std::size_t k = arity(f);
  if (m == n) return at_n;
  Matrix fn = at_n.to_dense();
  if (m < n) {
    Matrix iota(n, m, p), pi(m, n, p);
    for (u32 i = 0; i < m; ++i) iota.at(i, i) = pi.at(i, i) = 1;
    Matrix r = eval_numeric(g, std::vector<Matrix>(k, pi)) * fn * eval_numeric(f, std::vector<Matrix>(k, iota));
    return SparseMatrix::from_dense(r);
  }
  auto wts = functor_weights(f, m, p);
  std::size_t dimf = wts.size(), dimg = eval_dim(g, std::vector<u32>(k, m));
  SparseMatrix out(dimg, dimf, p);
  // group source basis vectors by their support in each slot
  std::map<std::vector<std::vector<u32>>, std::vector<std::size_t>> by_support;
  for (std::size_t b = 0; b < dimf; ++b) {
    std::vector<std::vector<u32>> supp(k);
    for (std::size_t s = 0; s < k; ++s)
      for (u32 i = 0; i < m; ++i)
        if (wts[b][s][i]) supp[s].push_back(i);
    by_support[supp].push_back(b);
  }
  for (auto& [supp, vecs] : by_support) {
    std::vector<Matrix> iotas, pis;
    for (std::size_t s = 0; s < k; ++s) {
      if (supp[s].size() > n) throw std::invalid_argument("support exceeds the source dimension");
      std::vector<u32> coords = supp[s];
      for (u32 i = 0; coords.size() < n; ++i)
        if (std::find(supp[s].begin(), supp[s].end(), i) == supp[s].end()) coords.push_back(i);
      std::sort(coords.begin(), coords.end());
      Matrix iota(m, n, p);
      for (u32 j = 0; j < n; ++j) iota.at(coords[j], j) = 1;
      pis.push_back(iota.transpose());
      iotas.push_back(std::move(iota));
    }
    Matrix r = eval_numeric(g, iotas) * fn * eval_numeric(f, pis).select_cols(vecs);
    for (std::size_t c = 0; c < vecs.size(); ++c)
      for (std::size_t i = 0; i < dimg; ++i)
        if (r.at(i, c)) out.add(i, vecs[c], r.at(i, c));
  }
  return out;
}

}  // namespace schurext
