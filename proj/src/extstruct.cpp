#include "schurext/extstruct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "schurext/law.hpp"

namespace schurext {

std::size_t transpose_element(const Algebra& a, std::size_t x) {
  if (auto s = dynamic_cast<const SchurAlgebra*>(&a)) {
    u32 n = s->n();
    Multiset m = s->basis().at(x);
    for (u32& e : m) e = (e % n) * n + e / n;
    std::sort(m.begin(), m.end());
    return s->basis().rank(m);
  }
  if (auto pa = dynamic_cast<const ProductAlgebra*>(&a)) {
    auto xs = pa->split(x);
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] = transpose_element(*pa->factors()[k], xs[k]);
    return pa->join(xs);
  }
  throw std::invalid_argument("no transpose for " + a.describe());
}

Module dual_module(const Module& m) {
  Module src = m;
  Module out(m.algebra_ptr(), m.weights(), [src](std::size_t x) {
    return src.action(transpose_element(src.algebra(), x)).transpose();
  });
  out.labels = m.labels;
  return out;
}

Module box_module(const Module& m, const Module& n) {
  if (m.prime() != n.prime()) throw std::invalid_argument("modules over different primes");
  std::shared_ptr<const Algebra> alg;
  auto sa = std::dynamic_pointer_cast<const SchurAlgebra>(m.algebra_ptr());
  auto sb = std::dynamic_pointer_cast<const SchurAlgebra>(n.algebra_ptr());
  if (sa && sb && sa->n() == sb->n())
    alg = slot_algebra(sa->n(), {sa->d(), sb->d()}, m.prime());
  else
    alg = std::make_shared<ProductAlgebra>(std::vector<std::shared_ptr<const Algebra>>{m.algebra_ptr(),
                                                                                      n.algebra_ptr()});
  auto pa = std::static_pointer_cast<const ProductAlgebra>(alg);
  std::vector<std::size_t> weights;
  for (std::size_t a = 0; a < m.dim(); ++a)
    for (std::size_t b = 0; b < n.dim(); ++b) weights.push_back(pa->join_weight({m.weight(a), n.weight(b)}));
  Module mm = m, nn = n;
  Module out(alg, std::move(weights), [mm, nn, pa](std::size_t x) {
    auto xs = pa->split(x);
    return SparseMatrix::kron(mm.action(xs[0]), nn.action(xs[1]));
  });
  for (auto& a : m.labels)
    for (auto& b : n.labels) out.labels.push_back(a + "|" + b);
  return out;
}

namespace {

SVec kron_vec(const SVec& a, const SVec& b, std::size_t dimb, u32 p) {
  SVec out;
  for (auto [i, x] : a)
    for (auto [j, y] : b) out.emplace_back(static_cast<u32>(i * dimb + j), static_cast<u32>((u64)x * y % p));
  std::sort(out.begin(), out.end());
  return out;
}

// Position of an algebra element inside column(w), memoized per weight.
class ColumnIndex {
 public:
  explicit ColumnIndex(const Algebra& a) : a_(a) {}
  std::size_t operator()(std::size_t w, std::size_t x) {
    auto it = pos_.find(w);
    if (it == pos_.end()) {
      std::map<std::size_t, std::size_t> m;
      auto col = a_.column(w);
      for (std::size_t k = 0; k < col.size(); ++k) m[col[k]] = k;
      it = pos_.emplace(w, std::move(m)).first;
    }
    return it->second.at(x);
  }

 private:
  const Algebra& a_;
  std::map<std::size_t, std::map<std::size_t, std::size_t>> pos_;
};

struct TotGen {
  u32 a;
  std::size_t j, l;
};

}  // namespace

Resolution tensor_resolution(const Resolution& r1, const Resolution& r2, u32 length) {
  if (r1.length() <= length || r2.length() <= length) throw std::out_of_range("resolutions too short");
  Module target = box_module(r1.target, r2.target);
  auto alg = target.algebra_ptr();
  auto& pa = static_cast<const ProductAlgebra&>(*alg);
  const Algebra& A = r1.target.algebra();
  const Algebra& B = r2.target.algebra();
  u32 p = target.prime();
  ColumnIndex colpos(*alg);

  Resolution r;
  r.target = target;
  std::vector<std::map<std::tuple<u32, std::size_t, std::size_t>, std::size_t>> gen_id;
  std::vector<std::vector<std::size_t>> offsets;
  for (u32 k = 0; k <= length; ++k) {
    std::vector<TotGen> g;
    std::vector<std::size_t> tops;
    std::map<std::tuple<u32, std::size_t, std::size_t>, std::size_t> ids;
    for (u32 a = 0; a <= k; ++a) {
      u32 b = k - a;
      for (std::size_t j = 0; j < r1.tops[a].size(); ++j)
        for (std::size_t l = 0; l < r2.tops[b].size(); ++l) {
          ids[{a, j, l}] = g.size();
          g.push_back({a, j, l});
          tops.push_back(pa.join_weight({r1.tops[a][j], r2.tops[b][l]}));
        }
    }
    std::vector<std::size_t> off{0};
    for (std::size_t w : tops) off.push_back(off.back() + alg->column(w).size());
    Module term = projective_module(alg, tops);

    std::vector<SVec> images;
    for (auto& t : g) {
      u32 a = t.a, b = k - a;
      if (k == 0) {
        images.push_back(kron_vec(r1.images[0][t.j], r2.images[0][t.l], r2.target.dim(), p));
        continue;
      }
      std::map<u32, u64> acc;
      if (a > 0) {
        auto lay = projective_layout(A, r1.tops[a - 1]);
        std::size_t mu = B.idempotent(r2.tops[b][t.l]);
        for (auto [idx, c] : r1.images[a][t.j]) {
          auto [jj, y] = lay[idx];
          std::size_t gi = gen_id[k - 1].at({a - 1, jj, t.l});
          std::size_t pos = offsets[k - 1][gi] + colpos(r.tops[k - 1][gi], pa.join({y, mu}));
          acc[(u32)pos] = (acc[(u32)pos] + c) % p;
        }
      }
      if (b > 0) {
        auto lay = projective_layout(B, r2.tops[b - 1]);
        std::size_t lam = A.idempotent(r1.tops[a][t.j]);
        u32 sign = a % 2 ? p - 1 : 1;
        for (auto [idx, c] : r2.images[b][t.l]) {
          auto [ll, z] = lay[idx];
          std::size_t gi = gen_id[k - 1].at({a, t.j, ll});
          std::size_t pos = offsets[k - 1][gi] + colpos(r.tops[k - 1][gi], pa.join({lam, z}));
          acc[(u32)pos] = (acc[(u32)pos] + (u64)sign * c) % p;
        }
      }
      SVec v;
      for (auto [i, x] : acc)
        if (x) v.emplace_back(i, (u32)x);
      images.push_back(std::move(v));
    }
    const Module& below = k == 0 ? r.target : r.terms.back();
    SparseMatrix f = map_from_generators(term, tops, below, images);
    r.tops.push_back(std::move(tops));
    r.images.push_back(std::move(images));
    r.maps.push_back(std::move(f));
    r.terms.push_back(std::move(term));
    gen_id.push_back(std::move(ids));
    offsets.push_back(std::move(off));
  }
  return r;
}

Cochain cross_product(const Resolution& r1, const Resolution& r2, u32 a, const Cochain& x, u32 b,
                      const Cochain& y, const Module& n1, const Module& n2) {
  u32 k = a + b, p = n1.prime();
  Cochain out;
  for (u32 aa = 0; aa <= k; ++aa) {
    u32 bb = k - aa;
    for (std::size_t j = 0; j < r1.tops[aa].size(); ++j)
      for (std::size_t l = 0; l < r2.tops[bb].size(); ++l)
        out.push_back(aa == a ? kron_vec(x[j], y[l], n2.dim(), p) : SVec{});
  }
  return out;
}

KunnethData kunneth(const Module& m1, const Module& n1, const Module& m2, const Module& n2, u32 max_i) {
  KunnethData out;
  auto r1 = resolve(m1, max_i + 1), r2 = resolve(m2, max_i + 1);
  auto e1 = ext(r1, n1, max_i), e2 = ext(r2, n2, max_i);
  Module nb = box_module(n1, n2);
  auto tot = tensor_resolution(r1, r2, max_i + 1);
  u32 p = n1.prime();
  for (u32 k = 0; k <= max_i; ++k) {
    std::size_t s = 0;
    EchelonBasis span(flatten(tot, nb, k, Cochain(tot.tops[k].size())).size(), p);
    if (k > 0) {
      Matrix bt = coboundary(tot, nb, k - 1).transpose();
      for (std::size_t q = 0; q < bt.rows(); ++q) span.add(bt.row(q));
    }
    std::size_t base = span.dim(), rank = 0;
    for (u32 a = 0; a <= k; ++a) {
      u32 b = k - a;
      s += e1.dims[a] * e2.dims[b];
      for (auto& x : e1.classes[a])
        for (auto& y : e2.classes[b]) span.add(flatten(tot, nb, k, cross_product(r1, r2, a, x, b, y, n1, n2)));
    }
    rank = span.dim() - base;
    out.product_dims.push_back(s);
    out.cross_rank.push_back(rank);
  }
  out.box_dims = ext_dims(box_module(m1, m2), nb, max_i);
  return out;
}

AdjunctionDims sum_diag_adjunction(const FExpr& f, const FExpr& g, u32 p, u32 max_i) {
  auto df = total_degree(f, p);
  auto dg = multidegree(g, p);
  if (!df || !dg || dg->size() != 2 || arity(f) != 1) throw std::invalid_argument("need F of one variable, G of two");
  u32 d = (*dg)[0] + (*dg)[1];
  if (d != *df) throw std::invalid_argument("degrees do not match");
  u32 n = std::max<u32>(d, 1);
  AdjunctionDims out;
  out.two_variable = ext_dims(to_module(fx::sum_pre(f), n, p, *dg), to_module(g, n, p), max_i);
  out.one_variable = ext_dims(to_module(f, n, p), to_module(fx::diag(g), n, p), max_i);
  return out;
}

// ---------------- involutions ----------------

Matrix ext_action(const Resolution& r, const Module& n, const ExtData& ext, u32 i, const SparseMatrix& s) {
  Cochain sig;
  for (auto& v : r.images[0]) sig.push_back(s.apply(v));
  std::size_t k = ext.dims[i];
  Matrix out(k, k, n.prime());
  for (std::size_t c = 0; c < k; ++c) {
    Vec v = class_coordinates(r, n, i, ext, yoneda_product(r, 0, sig, n, i, ext.classes[i][c]));
    for (std::size_t q = 0; q < k; ++q) out.at(q, c) = v[q];
  }
  return out;
}

ThetaData theta_involution(u32 e, const FExpr& g, u32 p, u32 max_i) {
  auto f = fx::compose(fx::gamma(e), fx::tpow(2));
  u32 n = 2 * e;
  Module m = to_module(f, n, p), target = to_module(g, n, p);
  if (m.algebra_ptr() != target.algebra_ptr()) throw std::invalid_argument("target has the wrong degree");
  Matrix tau(n * n, n * n, p);
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) tau.at(j * n + i, i * n + j) = 1;
  SparseMatrix sigma = SparseMatrix::from_dense(eval_numeric(fx::gamma(e), {tau}));
  auto r = resolve(m, max_i + 1);
  auto ex = ext(r, target, max_i);
  ThetaData out;
  out.dims = ex.dims;
  for (u32 i = 0; i <= max_i; ++i) out.theta.push_back(ext_action(r, target, ex, i, sigma));
  return out;
}

namespace {

// Post-composition of cochains on Q_a with a module map X -> Y.
Matrix post_compose(const Resolution& q, u32 a, const Module& x, const Module& y, const SparseMatrix& f) {
  std::size_t cols = flatten(q, x, a, Cochain(q.tops[a].size())).size();
  std::size_t rows = flatten(q, y, a, Cochain(q.tops[a].size())).size();
  Matrix out(rows, cols, x.prime());
  for (std::size_t c = 0; c < cols; ++c) {
    Vec unit(cols, 0);
    unit[c] = 1;
    Cochain ch = unflatten(q, x, a, unit);
    for (auto& v : ch) v = f.apply(v);
    Vec img = flatten(q, y, a, ch);
    for (std::size_t t = 0; t < rows; ++t) out.at(t, c) = img[t];
  }
  return out;
}

std::vector<Matrix> theta_tilde_impl(const Module& mf, const Module& mg, u32 max_i, bool diagonal) {
  u32 p = mf.prime();
  Module a = dual_module(mf);
  auto rp = resolve(a, max_i + 1);
  auto rq = diagonal ? rp : resolve(dual_module(mg), max_i + 1);
  auto ext_p = ext(rp, mg, max_i);
  auto ext_q = ext(rq, mf, max_i);
  std::vector<Module> dp;
  for (u32 b = 0; b <= max_i; ++b) dp.push_back(dual_module(rp.terms[b]));

  // Double complex K^{a,b} = Hom(Q_a, D P_b).
  auto kdim = [&](u32 x, u32 y) { return flatten(rq, dp[y], x, Cochain(rq.tops[x].size())).size(); };
  auto offsets = [&](u32 k) {
    std::vector<std::size_t> off{0};
    for (u32 x = 0; x <= k; ++x) off.push_back(off.back() + kdim(x, k - x));
    return off;
  };
  std::vector<Matrix> out;
  SparseMatrix eta = rp.maps[0].transpose();
  for (u32 i = 0; i <= max_i; ++i) {
    auto off1 = offsets(i);
    std::size_t kq = ext_q.dims[i];
    Matrix sys(off1.back(), kq, p);
    for (std::size_t c = 0; c < kq; ++c) {
      Cochain ch = ext_q.classes[i][c];
      for (auto& v : ch) v = eta.apply(v);
      Vec col = flatten(rq, dp[0], i, ch);
      for (std::size_t t = 0; t < col.size(); ++t) sys.at(off1[i] + t, c) = col[t];
    }
    if (i > 0) {
      auto off0 = offsets(i - 1);
      Matrix d(off1.back(), off0.back(), p);
      for (u32 x = 0; x < i; ++x) {
        u32 y = i - 1 - x;
        Matrix h = coboundary(rq, dp[y], x);
        for (std::size_t r = 0; r < h.rows(); ++r)
          for (std::size_t c = 0; c < h.cols(); ++c) d.at(off1[x + 1] + r, off0[x] + c) = h.at(r, c);
        Matrix v = post_compose(rq, x, dp[y], dp[y + 1], rp.maps[y + 1].transpose());
        if (x % 2) v = v.scaled(p - 1);
        for (std::size_t r = 0; r < v.rows(); ++r)
          for (std::size_t c = 0; c < v.cols(); ++c) d.at(off1[x] + r, off0[x] + c) = v.at(r, c);
      }
      sys = Matrix::hstack(sys, d);
    }
    std::size_t kp = ext_p.dims[i];
    Matrix rhs(off1.back(), kp, p);
    for (std::size_t c = 0; c < kp; ++c) {
      SparseMatrix cmap = map_from_generators(rp.terms[i], rp.tops[i], mg, ext_p.classes[i][c]);
      SparseMatrix dc = cmap.transpose();
      Cochain v;
      for (auto& img : rq.images[0]) v.push_back(dc.apply(img));
      Vec col = flatten(rq, dp[i], 0, v);
      for (std::size_t t = 0; t < col.size(); ++t) rhs.at(off1[0] + t, c) = col[t];
    }
    auto sol = solve(sys, rhs);
    if (!sol) throw std::logic_error("duality class not found in the total complex");
    // matches the class of the dual Yoneda extension
    bool neg = (i * (i + 1) / 2) % 2;
    Matrix t = sol->block(0, 0, kq, kp);
    out.push_back(neg ? t.scaled(p - 1) : t);
  }
  return out;
}

}  // namespace

std::vector<Matrix> theta_tilde(const Module& f, const Module& g, u32 max_i) {
  return theta_tilde_impl(f, g, max_i, false);
}

std::vector<Matrix> theta_tilde(const Module& f, u32 max_i) { return theta_tilde_impl(f, f, max_i, true); }

// ---------------- Hopf tables ----------------

u32 internal_degree(const FExpr& family, u32 label) {
  if (family->kind == FKind::Star) return family->param == 'L' ? label : 2 * label;
  return label;
}

namespace {

std::string family_name(const FExpr& f) { return print_functor(f); }

u32 functor_degree(const FExpr& f, u32 p) {
  auto d = total_degree(f, p);
  if (!d || arity(f) != 1) throw std::invalid_argument("family components must be homogeneous of one variable");
  return *d;
}

}  // namespace

HopfTable star_pipeline(const FExpr& family, u32 p, u32 max_i, u32 max_label, u32 max_degree) {
  HopfTable t;
  t.p = p;
  t.family = family_name(family);
  t.kind = "raw";
  t.max_i = max_i;
  auto comps = family_components(family, max_label);
  for (auto& [li, fi] : comps)
    for (auto& [lj, fj] : comps) {
      u32 di = functor_degree(fi, p), dj = functor_degree(fj, p);
      std::vector<std::size_t> dims(max_i + 1, 0);
      if (di == dj) {
        if (di > max_degree) {
          t.skipped.push_back({li, lj, di});
          continue;
        }
        if (di == 0)
          dims[0] = 1;
        else
          dims = ext_dims(to_module(fx::sharp(fi), di, p), to_module(fj, di, p), max_i);
      }
      for (u32 k = 0; k <= max_i; ++k)
        t.cells.push_back({k, li, lj, internal_degree(family, li), internal_degree(family, lj), dims[k]});
    }
  return t;
}

ClassicalSplit classical_split(const FExpr& family, u32 p, u32 max_i, u32 max_label, u32 max_degree) {
  if (p == 2) throw std::invalid_argument("the orthogonal/symplectic split needs p odd");
  HopfTable raw = star_pipeline(family, p, max_i, max_label, max_degree);
  ClassicalSplit out;
  out.orth = out.symp = raw;
  out.orth.kind = "orth";
  out.symp.kind = "symp";
  out.orth.cells.clear();
  out.symp.cells.clear();
  auto comps = family_components(family, max_label);
  std::map<std::pair<u32, u32>, std::vector<std::size_t>> raw_dims;
  for (auto& c : raw.cells) {
    auto& v = raw_dims[{c.i, c.j}];
    v.resize(max_i + 1);
    v[c.cohdeg] = c.dim;
  }
  for (auto& [li, fi] : comps)
    for (auto& [lj, fj] : comps) {
      auto it = raw_dims.find({li, lj});
      if (it == raw_dims.end()) continue;
      u32 gi = internal_degree(family, li), gj = internal_degree(family, lj);
      std::vector<std::size_t> plus(max_i + 1, 0), minus(max_i + 1, 0);
      u32 d = functor_degree(fi, p);
      if (li == lj && d == 0) {
        // the unit: both tables
        plus = minus = it->second;
      } else if (li == lj && std::any_of(it->second.begin(), it->second.end(), [](auto x) { return x > 0; })) {
        auto tt = theta_tilde(to_module(fi, d, p), max_i);
        bool odd = (gi * gj) % 2;
        for (u32 k = 0; k <= max_i; ++k) {
          Matrix th = odd ? tt[k].scaled(p - 1) : tt[k];
          auto es = eigensplit_involution(th);
          plus[k] = es.plus.rows();
          minus[k] = es.minus.rows();
        }
      } else if (li < lj) {
        // theta pairs the cell (i,j) with (j,i); each eigenspace has the size of one cell
        plus = minus = it->second;
      }
      for (u32 k = 0; k <= max_i; ++k) {
        out.orth.cells.push_back({k, li, lj, gi, gj, plus[k]});
        out.symp.cells.push_back({k, li, lj, gi, gj, minus[k]});
      }
    }
  return out;
}

// ---------------- exponential structure ----------------

namespace {

struct FamilyBasis {
  char family;
  u32 m, a;
  std::vector<std::vector<u32>> elems;
  std::map<std::vector<u32>, std::size_t> index;
  FamilyBasis(char f, u32 m_, u32 a_) : family(f), m(m_), a(a_) {
    if (f == 'L')
      elems = subsets(m, a);
    else
      elems = MultisetIndex(m, a).all();
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  }
  std::size_t dim() const { return elems.size(); }
};

FExpr family_power(char family, u32 d) {
  return family == 'S' ? fx::sym(d) : family == 'L' ? fx::wedge(d) : fx::gamma(d);
}

// F^a(Y) (x) F^b(Z) -> F^{a+b}(Y (+) Z), Y coordinates first.
Matrix exp_mu(char family, u32 ny, u32 nz, u32 a, u32 b, u32 p) {
  FamilyBasis by(family, ny, a), bz(family, nz, b), bt(family, ny + nz, a + b);
  Matrix m(bt.dim(), by.dim() * bz.dim(), p);
  for (std::size_t u = 0; u < by.dim(); ++u)
    for (std::size_t v = 0; v < bz.dim(); ++v) {
      std::vector<u32> w = by.elems[u];
      for (u32 x : bz.elems[v]) w.push_back(x + ny);
      m.at(bt.index.at(w), u * bz.dim() + v) = 1;
    }
  return m;
}

}  // namespace

SwapSquare exponential_swap_square(char family, bool doubled, u32 p, u32 ny, u32 nz, u32 max_deg) {
  if (family != 'S' && family != 'L' && family != 'G') throw std::invalid_argument("family must be S, L or G");
  SwapSquare out;
  Matrix tau(ny + nz, ny + nz, p);
  for (u32 i = 0; i < ny; ++i) tau.at(nz + i, i) = 1;
  for (u32 j = 0; j < nz; ++j) tau.at(j, ny + j) = 1;
  for (u32 a = 0; a <= max_deg; ++a)
    for (u32 b = 0; a + b <= max_deg; ++b) {
      Matrix ft = a + b == 0 ? Matrix::identity(1, p) : eval_numeric(family_power(family, a + b), {tau});
      Matrix lhs = ft * exp_mu(family, ny, nz, a, b, p);
      std::size_t dy = FamilyBasis(family, ny, a).dim(), dz = FamilyBasis(family, nz, b).dim();
      u32 ga = doubled ? 2 * a : a, gb = doubled ? 2 * b : b;
      u32 sign = (ga * gb) % 2 ? p - 1 : 1 % p;
      Matrix sw(dz * dy, dy * dz, p);
      for (std::size_t u = 0; u < dy; ++u)
        for (std::size_t v = 0; v < dz; ++v) sw.at(v * dy + u, u * dz + v) = sign;
      Matrix rhs = exp_mu(family, nz, ny, b, a, p) * sw;
      if (lhs != rhs) {
        out.commutes = false;
        out.failures.emplace_back(a, b);
      }
    }
  return out;
}

// ---------------- cup and coproduct in degree 0 ----------------

namespace {

FExpr gamma_of(const FExpr& fg, u32 e) {
  if (e > 0) return fx::compose(fx::gamma(e), fg);
  FExpr k = fx::constant(1);
  for (std::size_t s = 1; s < arity(fg); ++s) k = fx::box(k, fx::constant(1));
  return k;
}

Matrix coords_in(const std::vector<Matrix>& basis, const std::vector<Matrix>& targets, u32 p) {
  std::size_t len = targets.empty() ? 0 : targets[0].rows() * targets[0].cols();
  Matrix a(len, basis.size(), p), b(len, targets.size(), p);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t t = 0; t < len; ++t) a.at(t, c) = basis[c].data()[t];
  for (std::size_t c = 0; c < targets.size(); ++c)
    for (std::size_t t = 0; t < len; ++t) b.at(t, c) = targets[c].data()[t];
  auto x = solve(a, b);
  if (!x) throw std::logic_error("map is not in the span of the basis");
  return *x;
}

Matrix embed(u32 rows, u32 cols, u32 r0, u32 c0, u32 size, u32 p) {
  Matrix m(rows, cols, p);
  for (u32 i = 0; i < size; ++i) m.at(r0 + i, c0 + i) = 1;
  return m;
}

}  // namespace

CupCoproduct cup_coproduct(const FExpr& fg, const FExpr& f1, const FExpr& f2, u32 p) {
  std::size_t k = arity(fg);
  auto mg = multidegree(fg, p), m1 = multidegree(f1, p), m2 = multidegree(f2, p);
  if (!mg || !m1 || !m2 || arity(f1) != k || arity(f2) != k) throw std::invalid_argument("incompatible functors");
  auto ratio = [&](const std::vector<u32>& md) {
    u32 e = md[0] / (*mg)[0];
    for (std::size_t s = 0; s < k; ++s)
      if (md[s] != e * (*mg)[s]) throw std::invalid_argument("degree is not a multiple of the inner functor");
    return e;
  };
  u32 e1 = ratio(*m1), e2 = ratio(*m2), e = e1 + e2;
  FExpr E1 = gamma_of(fg, e1), E2 = gamma_of(fg, e2), E = gamma_of(fg, e), f12 = fx::tensor(f1, f2);
  NatSpace X = nat_transformations(E1, f1, p), Y = nat_transformations(E2, f2, p);
  NatSpace Z = nat_transformations(E, f12, p);
  u32 N = Z.n;
  CupCoproduct out;
  out.dim_x = X.dim();
  out.dim_y = Y.dim();
  out.dim_z = Z.dim();

  auto slots = [k](const Matrix& m) { return std::vector<Matrix>(k, m); };
  // Delta_E component (a, e - a) at k^N.
  auto delta = [&](u32 a) {
    if (e == 0) return Matrix::identity(1, p);
    Matrix dl = Matrix::vstack(Matrix::identity(N, p), Matrix::identity(N, p));
    Matrix pi = Matrix::vstack(eval_numeric(fg, slots(embed(N, 2 * N, 0, 0, N, p))),
                               eval_numeric(fg, slots(embed(N, 2 * N, 0, N, N, p))));
    u32 m = static_cast<u32>(eval_dim(fg, std::vector<u32>(k, N)));
    return ExponentialSplit(m, m, e).component(a, p) * eval_numeric(fx::gamma(e), {pi}) *
           eval_numeric(E, slots(dl));
  };

  std::vector<Matrix> zmaps;
  for (auto& z : Z.maps) zmaps.push_back(z.to_dense());
  Matrix dl = delta(e1);
  std::vector<Matrix> cups;
  for (auto& x : X.maps) {
    Matrix xn = transport(E1, f1, x, X.n, N, p).to_dense();
    for (auto& y : Y.maps) {
      Matrix yn = transport(E2, f2, y, Y.n, N, p).to_dense();
      cups.push_back(Matrix::kron(xn, yn) * dl);
    }
  }
  out.cup = cups.empty() ? Matrix(out.dim_z, 0, p) : coords_in(zmaps, cups, p);
  out.cup_rank = rank(out.cup);

  u32 n1 = X.n, n2 = Y.n, S = n1 + n2;
  Matrix mu = Matrix::identity(1, p);
  if (e > 0) {
    u32 a1 = static_cast<u32>(eval_dim(fg, std::vector<u32>(k, n1)));
    u32 a2 = static_cast<u32>(eval_dim(fg, std::vector<u32>(k, n2)));
    Matrix iota = Matrix::hstack(eval_numeric(fg, slots(embed(S, n1, 0, 0, n1, p))),
                                 eval_numeric(fg, slots(embed(S, n2, n1, 0, n2, p))));
    mu = eval_numeric(fx::gamma(e), {iota}) * ExponentialSplit(a1, a2, e).component(e1, p).transpose();
  }
  Matrix proj = Matrix::kron(eval_numeric(f1, slots(embed(n1, S, 0, 0, n1, p))),
                             eval_numeric(f2, slots(embed(n2, S, 0, n1, n2, p))));
  std::vector<Matrix> xy, images;
  for (auto& x : X.maps)
    for (auto& y : Y.maps) xy.push_back(Matrix::kron(x.to_dense(), y.to_dense()));
  for (auto& z : Z.maps) images.push_back(proj * transport(E, f12, z, N, S, p).to_dense() * mu);
  out.coproduct = images.empty() ? Matrix(xy.size(), 0, p) : coords_in(xy, images, p);
  if (xy.empty()) out.coproduct = Matrix(0, out.dim_z, p);

  out.section = (out.coproduct * out.cup) == Matrix::identity(out.dim_x * out.dim_y, p);
  out.counit = true;
  if (e > 0)
    for (u32 a : {0u, e}) {
      Matrix d = delta(a);
      out.counit = out.counit && d == Matrix::identity(d.rows(), p) && d.rows() == d.cols();
    }
  return out;
}

}  // namespace schurext
