#ifndef SCHUREXT_LAW_HPP
#define SCHUREXT_LAW_HPP

// Evaluation of the polynomial law of a functor expression on matrices over a commutative
// F_p-algebra R: F(h) for h : k^a -> k^b with entries in R.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "schurext/functor.hpp"
#include "schurext/matrix.hpp"
#include "schurext/multiset.hpp"

namespace schurext {

struct FpRing {
  using E = u32;
  u32 p;
  E zero() const { return 0; }
  E one() const { return 1 % p; }
  E scalar(u32 v) const { return v % p; }
  bool is_zero(const E& x) const { return x == 0; }
  E add(const E& a, const E& b) const { return (a + b) % p; }
  E neg(const E& a) const { return a ? p - a : 0; }
  E mul(const E& a, const E& b) const { return static_cast<u32>((u64)a * b % p); }
  // x -> x^q for q a power of p; the identity on F_p.
  E frob(const E& x, u32) const { return x; }
};

// F_p[t], coefficient lists without trailing zeros.
struct UPolyRing {
  using E = Vec;
  u32 p;
  E zero() const { return {}; }
  E one() const { return {1 % p}; }
  E scalar(u32 v) const { return v % p ? E{v % p} : E{}; }
  bool is_zero(const E& x) const { return x.empty(); }
  static void trim(E& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  }
  E add(const E& a, const E& b) const {
    E r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
  }
  E neg(const E& a) const {
    E r = a;
    for (auto& x : r) x = x ? p - x : 0;
    return r;
  }
  E mul(const E& a, const E& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i])
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + (u64)a[i] * b[j]) % p;
    E out(r.begin(), r.end());
    trim(out);
    return out;
  }
  E frob(const E& x, u32 q) const {
    if (x.empty()) return {};
    E r((x.size() - 1) * q + 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) r[i * q] = x[i];
    return r;
  }
  E variable() const { return {0, 1 % p}; }
};

// F_p[x_0, ..., x_254]; a monomial is a sorted list of at most 16 variable ids, padded with 0xFF.
struct Mono {
  std::array<std::uint8_t, 16> v;
  Mono() { v.fill(0xFF); }
  std::size_t degree() const {
    std::size_t d = 0;
    while (d < 16 && v[d] != 0xFF) ++d;
    return d;
  }
  bool operator<(const Mono& o) const { return v < o.v; }
  bool operator==(const Mono& o) const { return v == o.v; }
};

struct MPolyRing {
  struct Term {
    Mono m;
    u32 c;
  };
  using E = std::vector<Term>;
  u32 p;
  E zero() const { return {}; }
  E one() const { return {{Mono(), 1 % p}}; }
  E scalar(u32 v) const { return v % p ? E{{Mono(), v % p}} : E{}; }
  bool is_zero(const E& x) const { return x.empty(); }
  E var(u32 id) const {
    Mono m;
    m.v[0] = static_cast<std::uint8_t>(id);
    return {{m, 1 % p}};
  }
  static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    std::size_t i = 0, j = 0, k = 0;
    while ((i < 16 && a.v[i] != 0xFF) || (j < 16 && b.v[j] != 0xFF)) {
      if (k == 16) throw std::overflow_error("monomial degree exceeds 16");
      bool take_a = j == 16 || b.v[j] == 0xFF || (i < 16 && a.v[i] != 0xFF && a.v[i] <= b.v[j]);
      r.v[k++] = take_a ? a.v[i++] : b.v[j++];
    }
    return r;
  }
  E add(const E& a, const E& b) const {
    E r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].m < b[j].m)) r.push_back(a[i++]);
      else if (i == a.size() || b[j].m < a[i].m) r.push_back(b[j++]);
      else {
        u32 c = (a[i].c + b[j].c) % p;
        if (c) r.push_back({a[i].m, c});
        ++i, ++j;
      }
    }
    return r;
  }
  E neg(const E& a) const {
    E r = a;
    for (auto& t : r) t.c = p - t.c;
    return r;
  }
  E mul(const E& a, const E& b) const {
    if (a.empty() || b.empty()) return {};
    E r;
    r.reserve(a.size() * b.size());
    for (auto& x : a)
      for (auto& y : b) r.push_back({mono_mul(x.m, y.m), static_cast<u32>((u64)x.c * y.c % p)});
    std::sort(r.begin(), r.end(), [](const Term& s, const Term& t) { return s.m < t.m; });
    E out;
    for (auto& t : r) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = (out.back().c + t.c) % p;
        if (out.back().c == 0) out.pop_back();
      } else {
        out.push_back(t);
      }
    }
    return out;
  }
  E frob(const E& x, u32 q) const {
    E r;
    for (auto& t : x) {
      Mono m;
      std::size_t d = t.m.degree();
      if (d * q > 16) throw std::overflow_error("monomial degree exceeds 16");
      for (std::size_t i = 0; i < d; ++i)
        for (u32 k = 0; k < q; ++k) m.v[i * q + k] = t.m.v[i];
      r.push_back({m, t.c});
    }
    return r;
  }
};

template <class R>
struct RMat {
  std::size_t rows = 0, cols = 0;
  std::vector<typename R::E> a;
  RMat() = default;
  RMat(std::size_t r, std::size_t c, const R& ring) : rows(r), cols(c), a(r * c, ring.zero()) {}
  typename R::E& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const typename R::E& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

namespace law {

template <class R>
RMat<R> identity(std::size_t n, const R& ring) {
  RMat<R> m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

template <class R>
RMat<R> from_matrix(const Matrix& x, const R& ring) {
  RMat<R> m(x.rows(), x.cols(), ring);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m.at(i, j) = ring.scalar(x.at(i, j));
  return m;
}

template <class R>
RMat<R> transpose(const RMat<R>& m, const R& ring) {
  RMat<R> t(m.cols, m.rows, ring);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

template <class R>
RMat<R> multiply(const RMat<R>& x, const RMat<R>& y, const R& ring) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch in law multiply");
  RMat<R> r(x.rows, y.cols, ring);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (ring.is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (!ring.is_zero(y.at(k, j))) r.at(i, j) = ring.add(r.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <class R>
RMat<R> kron(const RMat<R>& x, const RMat<R>& y, const R& ring) {
  RMat<R> r(x.rows * y.rows, x.cols * y.cols, ring);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      if (ring.is_zero(x.at(i, j))) continue;
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l)
          if (!ring.is_zero(y.at(k, l))) r.at(i * y.rows + k, j * y.cols + l) = ring.mul(x.at(i, j), y.at(k, l));
    }
  return r;
}

template <class R>
RMat<R> blockdiag(const RMat<R>& x, const RMat<R>& y, const R& ring) {
  RMat<R> r(x.rows + y.rows, x.cols + y.cols, ring);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (std::size_t i = 0; i < y.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
  return r;
}

// S^d(h) on monomial bases: the product of the images of the factors.
template <class R>
RMat<R> sym_power(const RMat<R>& h, u32 d, const R& ring) {
  MultisetIndex src(h.cols, d), dst(h.rows, d);
  RMat<R> out(dst.size(), src.size(), ring);
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::map<Multiset, typename R::E> cur{{Multiset{}, ring.one()}};
    for (u32 a : src.at(c)) {
      std::map<Multiset, typename R::E> next;
      for (auto& [m, coef] : cur)
        for (u32 i = 0; i < h.rows; ++i) {
          const auto& x = h.at(i, a);
          if (ring.is_zero(x)) continue;
          Multiset k = m;
          k.insert(std::upper_bound(k.begin(), k.end(), i), i);
          auto it = next.find(k);
          auto term = ring.mul(coef, x);
          if (it == next.end()) next.emplace(std::move(k), std::move(term));
          else it->second = ring.add(it->second, term);
        }
      cur = std::move(next);
    }
    for (auto& [m, coef] : cur)
      if (!ring.is_zero(coef)) out.at(dst.rank(m), c) = coef;
  }
  return out;
}

// Lambda^d(h) on the basis of increasing index sets.
template <class R>
RMat<R> ext_power(const RMat<R>& h, u32 d, const R& ring) {
  auto src = subsets(h.cols, d), dst = subsets(h.rows, d);
  std::map<std::vector<u32>, std::size_t> dst_idx;
  for (std::size_t i = 0; i < dst.size(); ++i) dst_idx[dst[i]] = i;
  RMat<R> out(dst.size(), src.size(), ring);
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::map<std::vector<u32>, typename R::E> cur{{std::vector<u32>{}, ring.one()}};
    for (u32 a : src[c]) {
      std::map<std::vector<u32>, typename R::E> next;
      for (auto& [s, coef] : cur)
        for (u32 i = 0; i < h.rows; ++i) {
          const auto& x = h.at(i, a);
          if (ring.is_zero(x)) continue;
          auto pos = std::lower_bound(s.begin(), s.end(), i);
          if (pos != s.end() && *pos == i) continue;
          std::size_t after = s.end() - pos;  // e_S ^ e_i: move e_i past the larger indices
          std::vector<u32> k = s;
          k.insert(k.begin() + (pos - s.begin()), i);
          auto term = ring.mul(coef, x);
          if (after % 2) term = ring.neg(term);
          auto it = next.find(k);
          if (it == next.end()) next.emplace(std::move(k), std::move(term));
          else it->second = ring.add(it->second, term);
        }
      cur = std::move(next);
    }
    for (auto& [s, coef] : cur)
      if (!ring.is_zero(coef)) out.at(dst_idx.at(s), c) = coef;
  }
  return out;
}

}  // namespace law

template <class R>
RMat<R> eval_law(const FExpr& f, const std::vector<RMat<R>>& h, const R& ring) {
  if (h.size() != arity(f)) throw std::invalid_argument("arity mismatch in law evaluation");
  const auto& x = h[0];
  switch (f->kind) {
    case FKind::Identity: return x;
    case FKind::Constant: return law::identity(f->param, ring);
    case FKind::Sym: return law::sym_power(x, f->param, ring);
    case FKind::Gamma:
      return law::transpose(law::sym_power(law::transpose(x, ring), f->param, ring), ring);
    case FKind::Wedge: return law::ext_power(x, f->param, ring);
    case FKind::TensorPow: {
      RMat<R> r = law::identity(1, ring);
      for (u32 s = 0; s < f->param; ++s) r = law::kron(r, x, ring);
      return r;
    }
    case FKind::Twist: {
      u32 q = 1;
      for (u32 s = 0; s < f->param; ++s) q *= ring.p;
      RMat<R> r = x;
      for (auto& e : r.a) e = ring.frob(e, q);
      return r;
    }
    case FKind::Compose: return eval_law(f->kids[0], {eval_law(f->kids[1], h, ring)}, ring);
    case FKind::TensorProd: return law::kron(eval_law(f->kids[0], h, ring), eval_law(f->kids[1], h, ring), ring);
    case FKind::DirectSum:
      return law::blockdiag(eval_law(f->kids[0], h, ring), eval_law(f->kids[1], h, ring), ring);
    case FKind::Sharp: {
      std::vector<RMat<R>> t;
      for (auto& m : h) t.push_back(law::transpose(m, ring));
      return law::transpose(eval_law(f->kids[0], t, ring), ring);
    }
    case FKind::Gl: return law::kron(h[1], h[0], ring);
    case FKind::Box: {
      std::size_t k = arity(f->kids[0]);
      std::vector<RMat<R>> a(h.begin(), h.begin() + k), b(h.begin() + k, h.end());
      return law::kron(eval_law(f->kids[0], a, ring), eval_law(f->kids[1], b, ring), ring);
    }
    case FKind::SumPre: return eval_law(f->kids[0], {law::blockdiag(h[0], h[1], ring)}, ring);
    case FKind::Diag: return eval_law(f->kids[0], {x, x}, ring);
    case FKind::Graded: {
      RMat<R> r = eval_law(f->kids[0], h, ring);
      for (std::size_t i = 1; i < f->kids.size(); ++i) r = law::blockdiag(r, eval_law(f->kids[i], h, ring), ring);
      return r;
    }
    case FKind::Star: throw std::invalid_argument("a graded family has no single evaluation; take components first");
  }
  throw std::logic_error("unhandled functor kind");
}

// F applied to matrices over F_p.
Matrix eval_numeric(const FExpr& f, const std::vector<Matrix>& h);
// F applied to matrices over F_p[t], returned as a coefficient stack.
PolyMatrix eval_poly(const FExpr& f, const std::vector<PolyMatrix>& h);

}  // namespace schurext

#endif
