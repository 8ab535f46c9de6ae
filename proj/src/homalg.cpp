#include "schurext/homalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schurext {

// ---------------- radical ----------------

namespace {

using IMat = std::vector<std::vector<u64>>;

IMat imul(const IMat& a, const IMat& b, u64 mod) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IMat r(n, std::vector<u64>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      u64 x = a[i][t];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] = (r[i][j] + x * b[t][j]) % mod;
    }
  return r;
}

// Words of length d over [0, n) with the given content.
std::vector<std::vector<u32>> words_with_content(const std::vector<u32>& content) {
  std::vector<u32> w;
  for (u32 i = 0; i < content.size(); ++i) w.insert(w.end(), content[i], i);
  std::vector<std::vector<u32>> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Action of S(n,d) on the tensor power, restricted to weight spaces: element of block (l, r)
// maps words of content r to words of content l.
class TensorRep {
 public:
  explicit TensorRep(const SchurAlgebra& a) : a_(a) {
    for (auto& w : a.weights()) words_.push_back(words_with_content(w));
  }
  // Matrix over F_p of the combination z (all terms in block (l, r)).
  Matrix matrix(const SVec& z, std::size_t l, std::size_t r) const {
    u32 n = a_.n(), d = a_.d(), p = a_.prime();
    auto& wl = words_[l];
    auto& wr = words_[r];
    std::map<u32, u32> coef(z.begin(), z.end());
    Matrix m(wl.size(), wr.size(), p);
    Multiset key(d);
    for (std::size_t i = 0; i < wl.size(); ++i)
      for (std::size_t j = 0; j < wr.size(); ++j) {
        for (u32 s = 0; s < d; ++s) key[s] = wl[i][s] * n + wr[j][s];
        std::sort(key.begin(), key.end());
        auto it = coef.find(static_cast<u32>(a_.basis().rank(key)));
        if (it != coef.end()) m.at(i, j) = it->second;
      }
    return m;
  }

 private:
  const SchurAlgebra& a_;
  std::vector<std::vector<std::vector<u32>>> words_;
};

// (Tr(x^{p^i}) mod p^{i+1}) / p^i for the integer lift x of a square matrix over F_p.
u32 trace_form(const Matrix& m, u32 i) {
  u32 p = m.prime();
  u64 mod = 1;
  for (u32 k = 0; k <= i; ++k) mod *= p;
  IMat x(m.rows(), std::vector<u64>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) x[r][c] = m.at(r, c);
  for (u32 k = 0; k < i; ++k) {
    IMat y = x;
    for (u32 t = 1; t < p; ++t) y = imul(y, x, mod);
    x = std::move(y);
  }
  u64 tr = 0;
  for (std::size_t r = 0; r < x.size(); ++r) tr = (tr + x[r][r]) % mod;
  u64 low = mod / p;
  if (tr % low) throw std::logic_error("trace form not divisible on the current ideal");
  return static_cast<u32>(tr / low % p);
}

std::vector<SVec> compute_schur_radical(const SchurAlgebra& a) {
  u32 p = a.prime();
  std::size_t nw = a.num_weights();
  TensorRep rep(a);
  // ideal I, per block (l, r)
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SVec>> ideal;
  for (std::size_t l = 0; l < nw; ++l)
    for (std::size_t r = 0; r < nw; ++r)
      for (std::size_t x : a.block(l, r)) ideal[{l, r}].push_back({{(u32)x, 1}});
  u64 faithful = 1;
  for (u32 s = 0; s < a.d(); ++s) faithful *= a.n();
  u32 top = 0;
  for (u64 q = p; q <= faithful; q *= p) ++top;
  for (u32 i = 0; i <= top; ++i) {
    for (auto& [lr, basis] : ideal) {
      auto [l, r] = lr;
      auto& ys = a.block(r, l);
      if (basis.empty() || ys.empty()) continue;
      std::vector<Matrix> ymats;
      for (std::size_t y : ys) ymats.push_back(rep.matrix({{(u32)y, 1}}, r, l));
      Matrix g(basis.size(), ys.size(), p);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Matrix u = rep.matrix(basis[k], l, r);
        for (std::size_t t = 0; t < ys.size(); ++t) g.at(k, t) = trace_form(u * ymats[t], i);
      }
      Matrix keep = left_nullspace(g);
      std::vector<SVec> next;
      for (std::size_t q = 0; q < keep.rows(); ++q) {
        std::map<u32, u64> acc;
        for (std::size_t k = 0; k < basis.size(); ++k)
          if (u32 c = keep.at(q, k))
            for (auto [x, v] : basis[k]) acc[x] = (acc[x] + (u64)c * v) % p;
        SVec e;
        for (auto [x, v] : acc)
          if (v) e.emplace_back(x, (u32)v);
        next.push_back(std::move(e));
      }
      basis = std::move(next);
    }
  }
  std::vector<SVec> out;
  for (auto& [lr, basis] : ideal)
    for (auto& v : basis) out.push_back(v);
  return out;
}

}  // namespace

const std::vector<SVec>& schur_radical(u32 n, u32 d, u32 p) {
  static std::mutex mu;
  static std::map<std::tuple<u32, u32, u32>, std::vector<SVec>> cache;
  auto a = schur_algebra(n, d, p);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, d, p});
  if (it == cache.end()) it = cache.emplace(std::make_tuple(n, d, p), compute_schur_radical(*a)).first;
  return it->second;
}

std::vector<SVec> radical_generators(const Algebra& a) {
  if (auto s = dynamic_cast<const SchurAlgebra*>(&a)) return schur_radical(s->n(), s->d(), s->prime());
  auto pa = dynamic_cast<const ProductAlgebra*>(&a);
  if (!pa) throw std::invalid_argument("no radical available for this algebra");
  std::vector<SVec> out;
  auto& fs = pa->factors();
  for (std::size_t k = 0; k < fs.size(); ++k) {
    auto rad = radical_generators(*fs[k]);
    std::size_t others = pa->num_weights() / fs[k]->num_weights();
    for (auto& r : rad)
      for (std::size_t o = 0; o < others; ++o) {
        std::vector<std::size_t> xs(fs.size());
        std::size_t rest = o;
        for (std::size_t j = fs.size(); j-- > 0;) {
          if (j == k) continue;
          std::size_t nw = fs[j]->num_weights();
          xs[j] = fs[j]->idempotent(rest % nw);
          rest /= nw;
        }
        SVec e;
        for (auto [x, v] : r) {
          xs[k] = x;
          e.emplace_back((u32)pa->join(xs), v);
        }
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
      }
  }
  return out;
}

std::size_t nilpotency_index(const Algebra& a, const std::vector<SVec>& rad) {
  u32 p = a.prime();
  auto to_dense = [&](const SVec& v) {
    Vec d(a.dim(), 0);
    for (auto [i, x] : v) d[i] = x;
    return d;
  };
  auto to_sparse = [](const Vec& v) {
    SVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) s.emplace_back((u32)i, v[i]);
    return s;
  };
  std::vector<SVec> power = rad;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    EchelonBasis span(a.dim(), p);
    for (auto& v : power) span.add(to_dense(v));
    if (span.dim() == 0) return k;
    std::vector<SVec> next;
    EchelonBasis nspan(a.dim(), p);
    for (auto& row : span.rows()) {
      SVec x = to_sparse(row);
      for (auto& r : rad) {
        SVec y = a.mul(x, r);
        if (!y.empty() && nspan.add(to_dense(y))) next.push_back(y);
      }
    }
    power = std::move(next);
  }
  return 0;
}

// ---------------- weighted subspaces ----------------

WeightedSubspace::WeightedSubspace(const Module& ambient) : amb_(&ambient) {
  for (std::size_t w = 0; w < ambient.algebra().num_weights(); ++w)
    parts_.emplace_back(ambient.weight_space(w).size(), ambient.prime());
}

std::size_t WeightedSubspace::weight_of(const SVec& v) const {
  std::size_t w = amb_->weight(v.front().first);
  for (auto [i, x] : v)
    if (amb_->weight(i) != w) throw std::invalid_argument("vector is not a weight vector");
  return w;
}

Vec WeightedSubspace::local(const SVec& v, std::size_t w) const {
  Vec d(amb_->weight_space(w).size(), 0);
  for (auto [i, x] : v) d[amb_->local_index(i)] = x;
  return d;
}

SVec WeightedSubspace::global(const Vec& v, std::size_t w) const {
  SVec s;
  auto& sp = amb_->weight_space(w);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.emplace_back((u32)sp[i], v[i]);
  return s;
}

bool WeightedSubspace::add(const SVec& v) {
  if (v.empty()) return false;
  std::size_t w = weight_of(v);
  if (!parts_[w].add(local(v, w))) return false;
  pending_.push_back(v);
  return true;
}

bool WeightedSubspace::contains(const SVec& v) const {
  if (v.empty()) return true;
  std::size_t w = weight_of(v);
  return parts_[w].contains(local(v, w));
}

std::size_t WeightedSubspace::dim() const {
  std::size_t s = 0;
  for (auto& b : parts_) s += b.dim();
  return s;
}

std::vector<SVec> WeightedSubspace::basis(std::size_t w) const {
  std::vector<SVec> out;
  for (auto& r : parts_[w].rows()) out.push_back(global(r, w));
  return out;
}

std::vector<SVec> WeightedSubspace::basis() const {
  std::vector<SVec> out;
  for (std::size_t w = 0; w < parts_.size(); ++w)
    for (auto& v : basis(w)) out.push_back(std::move(v));
  return out;
}

void WeightedSubspace::close() {
  const Algebra& a = amb_->algebra();
  while (!pending_.empty()) {
    SVec v = std::move(pending_.back());
    pending_.pop_back();
    std::size_t w = amb_->weight(v.front().first);
    for (std::size_t g : a.generators())
      if (a.right_weight(g) == w) add(amb_->action(g).apply(v));
  }
}

WeightedSubspace radical_times(const Module& ambient, const std::vector<SVec>& sub) {
  const Algebra& a = ambient.algebra();
  WeightedSubspace s(ambient);
  auto rad = radical_generators(a);
  std::map<std::size_t, std::vector<const SVec*>> by_weight;
  for (auto& v : sub)
    if (!v.empty()) by_weight[ambient.weight(v.front().first)].push_back(&v);
  for (auto& r : rad) {
    if (r.empty()) continue;
    auto it = by_weight.find(a.right_weight(r.front().first));
    if (it == by_weight.end()) continue;
    for (const SVec* v : it->second) s.add(ambient.act(r, *v));
  }
  s.close();
  return s;
}

std::vector<SVec> minimal_generators(const Module& ambient, const std::vector<SVec>& sub) {
  const Algebra& a = ambient.algebra();
  WeightedSubspace s = radical_times(ambient, sub);
  std::map<std::size_t, std::vector<const SVec*>> by_weight;
  for (auto& v : sub)
    if (!v.empty()) by_weight[ambient.weight(v.front().first)].push_back(&v);
  std::vector<std::size_t> order;
  for (auto& [w, vs] : by_weight) order.push_back(w);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a.weight_vector(x) > a.weight_vector(y); });
  std::vector<SVec> gens;
  for (std::size_t w : order)
    for (const SVec* v : by_weight[w])
      if (!s.contains(*v)) {
        gens.push_back(*v);
        s.add(*v);
        s.close();
      }
  return gens;
}

Module submodule(const Module& ambient, const std::vector<SVec>& vectors) {
  auto span = std::make_shared<WeightedSubspace>(ambient);
  for (auto& v : vectors) span->add(v);
  std::size_t nw = ambient.algebra().num_weights();
  auto basis = std::make_shared<std::vector<SVec>>();
  std::vector<std::size_t> weights, offset(nw + 1, 0);
  for (std::size_t w = 0; w < nw; ++w) {
    for (auto& v : span->basis(w)) {
      basis->push_back(std::move(v));
      weights.push_back(w);
    }
    offset[w + 1] = basis->size();
  }
  // echelon bases per weight for coordinates
  auto ech = std::make_shared<std::vector<EchelonBasis>>();
  for (std::size_t w = 0; w < nw; ++w) {
    ech->emplace_back(ambient.weight_space(w).size(), ambient.prime());
    for (std::size_t b = offset[w]; b < offset[w + 1]; ++b) {
      Vec d(ambient.weight_space(w).size(), 0);
      for (auto [i, x] : (*basis)[b]) d[ambient.local_index(i)] = x;
      (*ech)[w].add(d);
    }
  }
  auto keep = std::make_shared<Module>(ambient);
  std::size_t dim = basis->size();
  u32 p = ambient.prime();
  return Module(ambient.algebra_ptr(), weights, [keep, basis, ech, offset, dim, p](std::size_t x) {
    const Algebra& a = keep->algebra();
    SparseMatrix s(dim, dim, p);
    std::size_t rw = a.right_weight(x), lw = a.left_weight(x);
    for (std::size_t b = offset[rw]; b < offset[rw + 1]; ++b) {
      SVec img = keep->action(x).apply((*basis)[b]);
      if (img.empty()) continue;
      Vec d(keep->weight_space(lw).size(), 0);
      for (auto [i, v] : img) d[keep->local_index(i)] = v;
      Vec c = (*ech)[lw].coords(d);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k]) s.add(offset[lw] + k, b, c[k]);
    }
    return s;
  });
}

// ---------------- projective sums ----------------

std::vector<std::pair<std::size_t, std::size_t>> projective_layout(const Algebra& a,
                                                                   const std::vector<std::size_t>& tops) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < tops.size(); ++j)
    for (std::size_t x : a.column(tops[j])) out.emplace_back(j, x);
  return out;
}

Module projective_module(const std::shared_ptr<const Algebra>& a, const std::vector<std::size_t>& tops) {
  auto layout = projective_layout(*a, tops);
  std::vector<std::size_t> weights;
  for (auto [j, x] : layout) weights.push_back(a->left_weight(x));
  std::size_t dim = layout.size();
  // position of (summand, element)
  auto index = std::make_shared<std::map<std::pair<std::size_t, std::size_t>, std::size_t>>();
  for (std::size_t b = 0; b < dim; ++b) (*index)[layout[b]] = b;
  auto alg = a;
  u32 p = a->prime();
  Module m(a, weights, [alg, layout, index, dim, p](std::size_t x) {
    SparseMatrix s(dim, dim, p);
    std::size_t rw = alg->right_weight(x);
    for (std::size_t b = 0; b < dim; ++b) {
      auto [j, y] = layout[b];
      if (alg->left_weight(y) != rw) continue;
      for (auto [c, v] : alg->mul_basis(x, y)) s.add(index->at({j, c}), b, v);
    }
    return s;
  });
  for (auto [j, x] : layout) m.labels.push_back("P" + std::to_string(j) + ":" + std::to_string(x));
  return m;
}

SparseMatrix map_from_generators(const Module& p, const std::vector<std::size_t>& tops, const Module& q,
                                 const std::vector<SVec>& images) {
  auto layout = projective_layout(p.algebra(), tops);
  SparseMatrix out(q.dim(), p.dim(), p.prime());
  for (std::size_t b = 0; b < layout.size(); ++b) {
    auto [j, y] = layout[b];
    for (auto [i, v] : q.action(y).apply(images[j])) out.add(i, b, v);
  }
  return out;
}

std::vector<SVec> weighted_kernel(const Module& p, const Module& q, const SparseMatrix& f) {
  std::vector<SVec> out;
  u32 pr = p.prime();
  for (std::size_t w = 0; w < p.algebra().num_weights(); ++w) {
    auto& cols = p.weight_space(w);
    if (cols.empty()) continue;
    auto& rows = q.weight_space(w);
    Matrix blk(rows.size(), cols.size(), pr);
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (auto [b, v] : f.row(rows[a])) {
        if (p.weight(b) != w) throw std::logic_error("map is not weight preserving");
        blk.at(a, p.local_index(b)) = v;
      }
    Matrix ker = nullspace(blk);
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      SVec v;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (ker.at(k, c)) v.emplace_back((u32)cols[c], ker.at(k, c));
      out.push_back(std::move(v));
    }
  }
  return out;
}

// ---------------- resolutions ----------------

std::vector<std::size_t> Resolution::ranks() const {
  std::vector<std::size_t> r;
  for (auto& t : tops) r.push_back(t.size());
  return r;
}

Resolution resolve(const Module& m, u32 length) {
  Resolution r;
  r.target = m;
  auto alg = m.algebra_ptr();
  std::vector<SVec> sub;
  for (std::size_t b = 0; b < m.dim(); ++b) sub.push_back({{(u32)b, 1}});
  for (u32 i = 0; i <= length; ++i) {
    const Module& ambient = i == 0 ? r.target : r.terms.back();
    auto gens = minimal_generators(ambient, sub);
    std::vector<std::size_t> tops;
    for (auto& g : gens) tops.push_back(ambient.weight(g.front().first));
    Module pm = projective_module(alg, tops);
    SparseMatrix f = map_from_generators(pm, tops, ambient, gens);
    sub = weighted_kernel(pm, ambient, f);
    r.tops.push_back(std::move(tops));
    r.images.push_back(std::move(gens));
    r.maps.push_back(std::move(f));
    r.terms.push_back(std::move(pm));
  }
  return r;
}

bool check_exact(const Resolution& r) {
  if (r.maps.empty()) return true;
  if (rank(r.maps[0].to_dense()) != r.target.dim()) return false;
  for (std::size_t i = 0; i + 1 < r.maps.size(); ++i) {
    SparseMatrix comp = r.maps[i] * r.maps[i + 1];
    if (comp.nnz() != 0) return false;
    if (rank(r.maps[i].to_dense()) + rank(r.maps[i + 1].to_dense()) != r.terms[i].dim()) return false;
  }
  return true;
}

// ---------------- Ext ----------------

namespace {

std::vector<std::size_t> cochain_offsets(const Resolution& r, const Module& n, u32 i) {
  std::vector<std::size_t> off{0};
  for (std::size_t w : r.tops[i]) off.push_back(off.back() + n.weight_space(w).size());
  return off;
}

}  // namespace

Vec flatten(const Resolution& r, const Module& n, u32 i, const Cochain& c) {
  auto off = cochain_offsets(r, n, i);
  Vec v(off.back(), 0);
  for (std::size_t j = 0; j < c.size(); ++j)
    for (auto [b, x] : c[j]) {
      if (n.weight(b) != r.tops[i][j]) throw std::invalid_argument("cochain value has the wrong weight");
      v[off[j] + n.local_index(b)] = x;
    }
  return v;
}

Cochain unflatten(const Resolution& r, const Module& n, u32 i, const Vec& v) {
  auto off = cochain_offsets(r, n, i);
  Cochain c(r.tops[i].size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    auto& sp = n.weight_space(r.tops[i][j]);
    for (std::size_t k = 0; k < sp.size(); ++k)
      if (u32 x = v[off[j] + k]) c[j].emplace_back((u32)sp[k], x);
  }
  return c;
}

Matrix coboundary(const Resolution& r, const Module& n, u32 i) {
  if (i + 1 >= r.length()) throw std::out_of_range("resolution too short");
  auto off0 = cochain_offsets(r, n, i), off1 = cochain_offsets(r, n, i + 1);
  auto layout = projective_layout(r.target.algebra(), r.tops[i]);
  Matrix d(off1.back(), off0.back(), n.prime());
  u32 p = n.prime();
  for (std::size_t j = 0; j < r.tops[i + 1].size(); ++j) {
    std::size_t wj = r.tops[i + 1][j];
    for (auto [b, c] : r.images[i + 1][j]) {
      auto [l, y] = layout[b];
      const SparseMatrix& ny = n.action(y);
      for (std::size_t a : n.weight_space(wj))
        for (auto [bb, v] : ny.row(a)) {
          auto& e = d.at(off1[j] + n.local_index(a), off0[l] + n.local_index(bb));
          e = static_cast<u32>((e + (u64)c * v) % p);
        }
    }
  }
  return d;
}

ExtData ext(const Resolution& r, const Module& n, u32 max_i) {
  if (r.length() < max_i + 2) throw std::out_of_range("resolution too short for the requested degree");
  ExtData out;
  u32 p = n.prime();
  Matrix prev;  // coboundary into degree i
  for (u32 i = 0; i <= max_i; ++i) {
    Matrix next = coboundary(r, n, i);
    std::size_t dimc = next.cols();
    out.cochain_dims.push_back(dimc);
    Matrix z = nullspace(next);
    EchelonBasis span(dimc, p);
    if (i > 0) {
      Matrix bt = prev.transpose();
      for (std::size_t k = 0; k < bt.rows(); ++k) span.add(bt.row(k));
    }
    std::vector<Cochain> reps;
    for (std::size_t k = 0; k < z.rows(); ++k)
      if (span.add(z.row(k))) reps.push_back(unflatten(r, n, i, z.row(k)));
    out.dims.push_back(reps.size());
    out.classes.push_back(std::move(reps));
    prev = std::move(next);
  }
  return out;
}

std::vector<std::size_t> ext_dims(const Module& m, const Module& n, u32 max_i) {
  return ext(resolve(m, max_i + 1), n, max_i).dims;
}

Vec class_coordinates(const Resolution& r, const Module& n, u32 i, const ExtData& ext, const Cochain& c) {
  Vec v = flatten(r, n, i, c);
  std::size_t k = ext.classes[i].size();
  Matrix b = i == 0 ? Matrix(v.size(), 0, n.prime()) : coboundary(r, n, i - 1);
  Matrix a(v.size(), k + b.cols(), n.prime());
  for (std::size_t q = 0; q < k; ++q) {
    Vec rep = flatten(r, n, i, ext.classes[i][q]);
    for (std::size_t t = 0; t < v.size(); ++t) a.at(t, q) = rep[t];
  }
  for (std::size_t t = 0; t < v.size(); ++t)
    for (std::size_t q = 0; q < b.cols(); ++q) a.at(t, k + q) = b.at(t, q);
  Matrix rhs(v.size(), 1, n.prime());
  for (std::size_t t = 0; t < v.size(); ++t) rhs.at(t, 0) = v[t];
  auto x = solve(a, rhs);
  if (!x) throw std::invalid_argument("not a cocycle");
  Vec out(k);
  for (std::size_t q = 0; q < k; ++q) out[q] = x->at(q, 0);
  return out;
}

bool is_coboundary(const Resolution& r, const Module& n, u32 i, const Cochain& c) {
  Vec v = flatten(r, n, i, c);
  if (i == 0) {
    for (u32 x : v)
      if (x) return false;
    return true;
  }
  Matrix bt = coboundary(r, n, i - 1).transpose();
  EchelonBasis span(v.size(), n.prime());
  for (std::size_t k = 0; k < bt.rows(); ++k) span.add(bt.row(k));
  return span.contains(v);
}

namespace {

// Some v in P of weight w with f(v) = t, where f : P -> Q.
SVec preimage(const Module& p, const Module& q, const SparseMatrix& f, std::size_t w, const SVec& t) {
  auto& cols = p.weight_space(w);
  auto& rows = q.weight_space(w);
  Matrix blk(rows.size(), cols.size(), p.prime()), rhs(rows.size(), 1, p.prime());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (auto [b, v] : f.row(rows[a])) blk.at(a, p.local_index(b)) = v;
  for (auto [b, v] : t) {
    if (q.weight(b) != w) throw std::logic_error("target vector has the wrong weight");
    rhs.at(q.local_index(b), 0) = v;
  }
  auto x = solve(blk, rhs);
  if (!x) throw std::logic_error("no lift: target is not in the image");
  SVec out;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (x->at(c, 0)) out.emplace_back((u32)cols[c], x->at(c, 0));
  return out;
}

}  // namespace

std::vector<std::vector<SVec>> lift_cocycle(const Resolution& r, u32 i, const Cochain& f, u32 upto) {
  if (r.length() <= i + upto) throw std::out_of_range("resolution too short for the lift");
  std::vector<std::vector<SVec>> lifts;
  SparseMatrix phi;
  for (u32 k = 0; k <= upto; ++k) {
    const auto& tops = r.tops[i + k];
    std::vector<SVec> imgs;
    const Module& below = k == 0 ? r.target : r.terms[k - 1];
    for (std::size_t j = 0; j < tops.size(); ++j) {
      SVec t = k == 0 ? f[j] : phi.apply(r.images[i + k][j]);
      imgs.push_back(t.empty() ? SVec{} : preimage(r.terms[k], below, r.maps[k], tops[j], t));
    }
    phi = map_from_generators(r.terms[i + k], tops, r.terms[k], imgs);
    lifts.push_back(std::move(imgs));
  }
  return lifts;
}

Cochain yoneda_product(const Resolution& r, u32 i, const Cochain& x, const Module& n, u32 j, const Cochain& y) {
  if (x.size() != r.tops[i].size() || y.size() != r.tops[j].size())
    throw std::invalid_argument("cochains do not match the resolution");
  auto lifts = lift_cocycle(r, i, x, j);
  auto layout = projective_layout(r.target.algebra(), r.tops[j]);
  u32 p = n.prime();
  Cochain out;
  for (auto& img : lifts[j]) {
    std::map<u32, u64> acc;
    for (auto [b, c] : img) {
      auto [m, z] = layout[b];
      for (auto [a, v] : n.action(z).apply(y[m])) acc[a] = (acc[a] + (u64)c * v) % p;
    }
    SVec s;
    for (auto [a, v] : acc)
      if (v) s.emplace_back(a, (u32)v);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace schurext
