#include "schurext/classical.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "schurext/law.hpp"

namespace schurext {

GroupSpec parse_group(const std::string& text) {
  GroupSpec g;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok == "GL")
      g.factors.push_back(GroupKind::GL);
    else if (tok == "Sp")
      g.factors.push_back(GroupKind::Sp);
    else if (tok == "O")
      g.factors.push_back(GroupKind::O);
    else
      throw std::invalid_argument("unknown group '" + tok + "' (expected GL, Sp, O or a product like GLxSp)");
  }
  if (g.factors.empty()) throw std::invalid_argument("empty group expression");
  return g;
}

std::string kind_name(GroupKind k) { return k == GroupKind::GL ? "GL" : k == GroupKind::Sp ? "Sp" : "O"; }

std::string group_name(const GroupSpec& g) {
  std::string s;
  for (std::size_t i = 0; i < g.factors.size(); ++i) s += (i ? "x" : "") + kind_name(g.factors[i]);
  return s;
}

std::size_t slot_count(GroupKind k) { return k == GroupKind::GL ? 2 : 1; }

std::size_t slot_count(const GroupSpec& g) {
  std::size_t s = 0;
  for (auto k : g.factors) s += slot_count(k);
  return s;
}

FExpr characteristic_functor(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return fx::gl();
    case GroupKind::Sp: return fx::wedge(2);
    case GroupKind::O: return fx::sym(2);
  }
  return nullptr;
}

std::vector<u32> evaluation_dims(const GroupSpec& g, u32 n) {
  std::vector<u32> d;
  for (auto k : g.factors) {
    if (k == GroupKind::GL) {
      d.push_back(n);
      d.push_back(n);
    } else {
      d.push_back(2 * n);
    }
  }
  return d;
}

Vec invariant_element(GroupKind k, u32 n, u32 p) {
  if (k == GroupKind::GL) {
    Vec v(n * n, 0);
    for (u32 i = 0; i < n; ++i) v[i * n + i] = 1 % p;
    return v;
  }
  std::vector<std::vector<u32>> basis = k == GroupKind::Sp ? subsets(2 * n, 2) : MultisetIndex(2 * n, 2).all();
  Vec v(basis.size(), 0);
  for (std::size_t b = 0; b < basis.size(); ++b)
    if (basis[b][1] == basis[b][0] + n) v[b] = 1 % p;
  return v;
}

// ---------------- generators ----------------

namespace {

PolyMatrix unipotent(u32 dim, u32 p, const std::vector<std::tuple<u32, u32, u32>>& entries) {
  PolyMatrix x(dim, dim, 1, p);
  x.coeff(0) = Matrix::identity(dim, p);
  for (auto [i, j, c] : entries) x.coeff(1).at(i, j) = c % p;
  return x;
}

GeneratorSet make_generators(GroupKind kind, u32 n, u32 p) {
  GeneratorSet g;
  g.kind = kind;
  g.n = n;
  g.p = p;
  u32 m1 = p - 1;
  if (kind == GroupKind::GL) {
    for (u32 i = 0; i < n; ++i)
      for (u32 j = 0; j < n; ++j)
        if (i != j) g.unipotents.push_back(unipotent(n, p, {{i, j, 1}}));
    return g;
  }
  u32 d = 2 * n;
  g.form = Matrix(d, d, p);
  for (u32 i = 0; i < n; ++i) {
    g.form.at(i, n + i) = 1;
    g.form.at(n + i, i) = kind == GroupKind::Sp ? m1 : 1;
  }
  u32 s = kind == GroupKind::Sp ? 1 : m1;  // sign in the (e_i + e_j) root elements
  for (u32 i = 0; i < n; ++i)
    for (u32 j = 0; j < n; ++j) {
      if (i != j) g.unipotents.push_back(unipotent(d, p, {{i, j, 1}, {n + j, n + i, m1}}));
      if (i < j) {
        g.unipotents.push_back(unipotent(d, p, {{i, n + j, 1}, {j, n + i, s}}));
        g.unipotents.push_back(unipotent(d, p, {{n + j, i, 1}, {n + i, j, s}}));
      }
    }
  if (kind == GroupKind::Sp) {
    for (u32 i = 0; i < n; ++i) {
      g.unipotents.push_back(unipotent(d, p, {{i, n + i, 1}}));
      g.unipotents.push_back(unipotent(d, p, {{n + i, i, 1}}));
    }
  } else {
    Matrix r = Matrix::identity(d, p);
    r.at(0, 0) = r.at(n, n) = 0;
    r.at(0, n) = r.at(n, 0) = 1;
    g.finite.push_back(r);
  }
  return g;
}

}  // namespace

const GeneratorSet& generators(GroupKind k, u32 n, u32 p) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  static std::mutex mu;
  static std::map<std::tuple<int, u32, u32>, GeneratorSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(k), n, p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_generators(k, n, p)).first;
  return it->second;
}

bool preserves_form(const GeneratorSet& g) {
  u32 p = g.p;
  std::size_t d = g.kind == GroupKind::GL ? g.n : 2 * g.n;
  std::vector<PolyMatrix> all = g.unipotents;
  for (auto& f : g.finite) all.push_back(PolyMatrix::constant(f));
  for (auto& x : all) {
    if (g.kind == GroupKind::GL) continue;
    PolyMatrix lhs = x.transpose() * PolyMatrix::constant(g.form) * x;
    lhs.trim();
    if (!(lhs == PolyMatrix::constant(g.form))) return false;
    if (g.kind == GroupKind::O) {
      // q(x e_i) = 0 for every basis vector, as a polynomial in t
      for (std::size_t i = 0; i < d; ++i) {
        Vec acc(2 * x.degree_bound() + 1, 0);
        for (u32 a = 0; a < g.n; ++a) {
          Vec u = x.entry(a, i), v = x.entry(g.n + a, i);
          for (std::size_t r = 0; r < u.size(); ++r)
            for (std::size_t s = 0; s < v.size(); ++s) acc[r + s] = (acc[r + s] + (u64)u[r] * v[s]) % p;
        }
        for (u32 c : acc)
          if (c) return false;
      }
    }
  }
  for (auto& x : g.unipotents)
    if (!(x.eval(0) == Matrix::identity(d, p))) return false;
  return true;
}

// ---------------- invariants ----------------

namespace {

std::vector<std::vector<std::vector<u32>>> slot_weights(const FExpr& f, const std::vector<u32>& dims, u32 p) {
  std::size_t k = dims.size();
  std::vector<u32> off{0};
  for (u32 d : dims) off.push_back(off.back() + d);
  if (off.back() > 255) throw std::invalid_argument("too many variables for weight computation");
  MPolyRing ring{p};
  std::vector<RMat<MPolyRing>> h;
  for (std::size_t s = 0; s < k; ++s) {
    RMat<MPolyRing> x(dims[s], dims[s], ring);
    for (u32 i = 0; i < dims[s]; ++i) x.at(i, i) = ring.var(off[s] + i);
    h.push_back(std::move(x));
  }
  auto r = eval_law(f, h, ring);
  std::vector<std::vector<std::vector<u32>>> out(r.rows);
  for (std::size_t b = 0; b < r.rows; ++b) {
    out[b].resize(k);
    for (std::size_t s = 0; s < k; ++s) out[b][s].assign(dims[s], 0);
    const auto& e = r.at(b, b);
    if (e.size() != 1) throw std::logic_error("basis vector is not a weight vector");
    const Mono& m = e[0].m;
    for (std::size_t i = 0; i < 16 && m.v[i] != 0xFF; ++i) {
      u32 v = m.v[i];
      std::size_t s = std::upper_bound(off.begin(), off.end(), v) - off.begin() - 1;
      ++out[b][s][v - off[s]];
    }
  }
  return out;
}

void check_slots(const FExpr& f, const GroupSpec& g) {
  if (arity(f) != slot_count(g))
    throw std::invalid_argument("functor has " + std::to_string(arity(f)) + " slots but " + group_name(g) +
                                " needs " + std::to_string(slot_count(g)));
}

}  // namespace

Matrix invariants(const FExpr& f, const GroupSpec& g, u32 n, u32 p) {
  check_slots(f, g);
  auto dims = evaluation_dims(g, n);
  std::size_t k = dims.size();
  auto wts = slot_weights(f, dims, p);
  std::size_t dim = wts.size();

  std::vector<std::size_t> cand;
  for (std::size_t b = 0; b < dim; ++b) {
    bool zero = true;
    std::size_t s = 0;
    for (auto kind : g.factors) {
      if (kind == GroupKind::GL) {
        zero = zero && wts[b][s] == wts[b][s + 1];
        s += 2;
      } else {
        for (u32 i = 0; i < n; ++i) zero = zero && wts[b][s][i] == wts[b][s][n + i];
        s += 1;
      }
    }
    if (zero) cand.push_back(b);
  }
  if (cand.empty()) return Matrix(0, dim, p);

  std::vector<SVec> rows;
  UPolyRing ring{p};
  auto ident = [&](u32 d) {
    RMat<UPolyRing> x(d, d, ring);
    for (u32 i = 0; i < d; ++i) x.at(i, i) = ring.one();
    return x;
  };
  std::size_t s0 = 0;
  for (auto kind : g.factors) {
    const GeneratorSet& gs = generators(kind, n, p);
    for (auto& x : gs.unipotents) {
      // x(-t)^T on dual or contravariant slots, x(t) on the covariant GL slot
      PolyMatrix inv_t = x.transpose();
      inv_t.coeff(1) = inv_t.coeff(1).scaled(p - 1);
      std::vector<RMat<UPolyRing>> h;
      for (std::size_t s = 0; s < k; ++s) h.push_back(ident(dims[s]));
      auto put = [&](std::size_t s, const PolyMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) {
            Vec e = m.entry(i, j);
            UPolyRing::trim(e);
            h[s].at(i, j) = e;
          }
      };
      put(s0, inv_t);
      if (kind == GroupKind::GL) put(s0 + 1, x);
      auto r = eval_law(f, h, ring);
      std::map<std::pair<std::size_t, std::size_t>, SVec> cons;
      for (std::size_t c = 0; c < cand.size(); ++c)
        for (std::size_t i = 0; i < dim; ++i) {
          const Vec& e = r.at(i, cand[c]);
          for (std::size_t t = 1; t < e.size(); ++t)
            if (e[t]) cons[{i, t}].emplace_back((u32)c, e[t]);
        }
      for (auto& [key, row] : cons) rows.push_back(std::move(row));
    }
    for (auto& fm : gs.finite) {
      std::vector<Matrix> h;
      for (std::size_t s = 0; s < k; ++s) h.push_back(Matrix::identity(dims[s], p));
      Matrix inv = fm.transpose();  // the reflection is its own inverse
      h[s0] = inv;
      Matrix a = eval_numeric(f, h);
      for (std::size_t i = 0; i < dim; ++i) {
        SVec row;
        for (std::size_t c = 0; c < cand.size(); ++c) {
          u32 v = (a.at(i, cand[c]) + (i == cand[c] ? p - 1 : 0)) % p;
          if (v) row.emplace_back((u32)c, v);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    s0 += slot_count(kind);
  }
  Matrix ns = nullspace_sparse(rows, cand.size(), p);
  Matrix out(ns.rows(), dim, p);
  for (std::size_t r = 0; r < ns.rows(); ++r)
    for (std::size_t c = 0; c < cand.size(); ++c) out.at(r, cand[c]) = ns.at(r, c);
  return out;
}

// ---------------- contractions ----------------

FExpr contraction_functor(GroupKind k, u32 copies, u32 dual_copies) {
  auto rep = [](u32 c) { return fx::tensor(fx::identity(), fx::constant(c)); };
  if (k == GroupKind::GL) return fx::box(rep(copies), rep(dual_copies));
  return fx::compose(fx::sym(2), rep(copies));
}

Matrix contractions(GroupKind kind, u32 k, u32 l, u32 n, u32 p) {
  if (kind == GroupKind::GL) {
    std::size_t dim = (std::size_t)n * k * n * l;
    Matrix out(k * l, dim, p);
    for (u32 i = 0; i < k; ++i)
      for (u32 j = 0; j < l; ++j)
        for (u32 a = 0; a < n; ++a) out.at(i * l + j, (a * k + i) * (n * l) + (a * l + j)) = 1 % p;
    return out;
  }
  MultisetIndex idx(2 * n * k, 2);
  auto mono = [&](u32 u, u32 w) { return idx.rank(u < w ? Multiset{u, w} : Multiset{w, u}); };
  std::vector<Vec> rows;
  for (u32 i = 0; i < k; ++i)
    for (u32 j = i; j < k; ++j) {
      if (i == j && kind == GroupKind::Sp) continue;
      Vec v(idx.size(), 0);
      for (u32 a = 0; a < n; ++a) {
        if (i == j) {
          v[mono(a * k + i, (n + a) * k + i)] = 1 % p;
          continue;
        }
        std::size_t x = mono(a * k + i, (n + a) * k + j), y = mono((n + a) * k + i, a * k + j);
        v[x] = (v[x] + 1) % p;
        v[y] = (v[y] + (kind == GroupKind::Sp ? p - 1 : 1)) % p;
      }
      rows.push_back(v);
    }
  return Matrix::from_rows(rows, idx.size(), p);
}

// ---------------- phi0 and stabilization ----------------

std::optional<FExpr> gamma_source(const GroupSpec& g, const FExpr& f, u32 p) {
  check_slots(f, g);
  auto md = multidegree(f, p);
  if (!md) throw std::invalid_argument("functor is not multihomogeneous");
  FExpr out;
  std::size_t s = 0;
  for (auto kind : g.factors) {
    FExpr part;
    u32 d;
    if (kind == GroupKind::GL) {
      if ((*md)[s] != (*md)[s + 1]) return std::nullopt;
      d = (*md)[s];
      part = d ? fx::compose(fx::gamma(d), fx::gl()) : fx::box(fx::constant(1), fx::constant(1));
    } else {
      if ((*md)[s] % 2) return std::nullopt;
      d = (*md)[s] / 2;
      part = d ? fx::compose(fx::gamma(d), characteristic_functor(kind)) : fx::constant(1);
    }
    out = out ? fx::box(out, part) : part;
    s += slot_count(kind);
  }
  return out;
}

bool in_stable_range(const GroupSpec& g, const FExpr& f, u32 n, u32 p) {
  auto md = multidegree(f, p);
  if (!md) return false;
  std::size_t s = 0;
  for (auto kind : g.factors) {
    if (kind == GroupKind::GL) {
      if ((*md)[s] + (*md)[s + 1] > 2 * n) return false;
    } else if ((*md)[s] > 2 * n) {
      return false;
    }
    s += slot_count(kind);
  }
  return true;
}

Matrix transport_to(const FExpr& f, const FExpr& g, const SparseMatrix& at_n, u32 n, const std::vector<u32>& dims,
                    u32 p) {
  u32 m = *std::max_element(dims.begin(), dims.end());
  Matrix t = transport(f, g, at_n, n, m, p).to_dense();
  if (std::all_of(dims.begin(), dims.end(), [m](u32 d) { return d == m; })) return t;
  std::vector<Matrix> iota, pi;
  for (u32 d : dims) {
    Matrix i(m, d, p);
    for (u32 a = 0; a < d; ++a) i.at(a, a) = 1;
    pi.push_back(i.transpose());
    iota.push_back(std::move(i));
  }
  return eval_numeric(g, pi) * t * eval_numeric(f, iota);
}

namespace {

Vec divided_power(const Vec& e, u32 d, u32 p) {
  MultisetIndex idx(static_cast<u32>(e.size()), d);
  Vec out(idx.size(), 0);
  for (std::size_t b = 0; b < idx.size(); ++b) {
    u64 c = 1 % p;
    for (u32 u : idx.at(b)) c = c * e[u] % p;
    out[b] = static_cast<u32>(c);
  }
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b, u32 p) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = static_cast<u32>((u64)a[i] * b[j] % p);
  return out;
}

}  // namespace

Phi0 phi0(const GroupSpec& g, const FExpr& f, u32 n, u32 p) {
  Phi0 out;
  auto dims = evaluation_dims(g, n);
  std::size_t dimf = eval_dim(f, dims);
  out.source = gamma_source(g, f, p);
  if (!out.source) {
    out.images = Matrix(dimf, 0, p);
    return out;
  }
  out.hom = nat_transformations(*out.source, f, p);
  auto md = *multidegree(f, p);
  Vec e{1 % p};
  std::size_t s = 0;
  for (auto kind : g.factors) {
    u32 d = kind == GroupKind::GL ? md[s] : md[s] / 2;
    e = kron_vec(e, divided_power(invariant_element(kind, n, p), d, p), p);
    s += slot_count(kind);
  }
  out.images = Matrix(dimf, out.hom.dim(), p);
  for (std::size_t c = 0; c < out.hom.dim(); ++c) {
    Vec v = transport_to(*out.source, f, out.hom.maps[c], out.hom.n, dims, p).apply(e);
    for (std::size_t i = 0; i < dimf; ++i) out.images.at(i, c) = v[i];
  }
  return out;
}

std::vector<Matrix> stabilization_projection(const GroupSpec& g, u32 n, u32 m, u32 p) {
  std::vector<Matrix> out;
  for (auto kind : g.factors) {
    if (kind == GroupKind::GL) {
      Matrix pi(n, m, p);
      for (u32 i = 0; i < n; ++i) pi.at(i, i) = 1;
      out.push_back(pi);
      out.push_back(pi);
    } else {
      Matrix pi(2 * n, 2 * m, p);
      for (u32 i = 0; i < n; ++i) {
        pi.at(i, i) = 1;
        pi.at(n + i, m + i) = 1;
      }
      out.push_back(pi);
    }
  }
  return out;
}

Matrix stabilization_map(const GroupSpec& g, const FExpr& f, u32 n, u32 m, u32 p) {
  if (n > m) throw std::invalid_argument("stabilization needs n <= m");
  Matrix in = invariants(f, g, n, p);
  if (n == m) return Matrix::identity(in.rows(), p);
  Matrix im = invariants(f, g, m, p);
  Matrix img = eval_numeric(f, stabilization_projection(g, n, m, p)) * im.transpose();
  auto x = solve(in.transpose(), img);
  if (!x) throw std::logic_error("projection does not preserve invariants");
  return *x;
}

}  // namespace schurext
