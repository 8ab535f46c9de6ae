#include "schurext/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurext {

GammaSpace gamma_space(u32 m, u32 d) { return GammaSpace(m, d); }

std::size_t ipow(std::size_t b, u32 e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t word_index(const std::vector<u32>& w, u32 m) {
  std::size_t r = 0;
  for (u32 x : w) r = r * m + x;
  return r;
}

std::vector<u32> word_at(std::size_t idx, u32 m, u32 d) {
  std::vector<u32> w(d);
  for (u32 s = d; s-- > 0;) {
    w[s] = static_cast<u32>(idx % m);
    idx /= m;
  }
  return w;
}

Vec expand_to_tensors(const GammaSpace& g, const Vec& x, u32 p) {
  Vec t(ipow(g.m, g.d), 0);
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i] == 0) continue;
    Multiset w = g.basis(i);
    do {
      auto& e = t[word_index(w, g.m)];
      e = (e + x[i]) % p;
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return t;
}

Vec project_from_tensors(const GammaSpace& g, const Vec& t) {
  Vec x(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) x[i] = t[word_index(g.basis(i), g.m)];
  return x;
}

Matrix gamma_map(const Matrix& L, u32 d) {
  u32 p = L.prime();
  GammaSpace src(L.cols(), d), dst(L.rows(), d);
  Matrix out(dst.dim(), src.dim(), p);
  Matrix Ld = Matrix::identity(1, p);
  for (u32 s = 0; s < d; ++s) Ld = Matrix::kron(Ld, L);
  for (std::size_t i = 0; i < src.dim(); ++i) {
    Vec e(src.dim(), 0);
    e[i] = 1;
    Vec img = project_from_tensors(dst, Ld.apply(expand_to_tensors(src, e, p)));
    for (std::size_t r = 0; r < dst.dim(); ++r) out.at(r, i) = img[r];
  }
  return out;
}

Matrix j_map(u32 mu, u32 mv, u32 d, u32 p) {
  GammaSpace gu(mu, d), gv(mv, d), guv(mu * mv, d);
  Matrix out(guv.dim(), gu.dim() * gv.dim(), p);
  for (std::size_t a = 0; a < gu.dim(); ++a) {
    Vec ea(gu.dim(), 0);
    ea[a] = 1;
    Vec ta = expand_to_tensors(gu, ea, p);
    for (std::size_t b = 0; b < gv.dim(); ++b) {
      Vec eb(gv.dim(), 0);
      eb[b] = 1;
      Vec tb = expand_to_tensors(gv, eb, p);
      // Interleave: (u_1..u_d) (x) (v_1..v_d) -> ((u_1,v_1), ..., (u_d,v_d)).
      Vec t(ipow(mu * mv, d), 0);
      for (std::size_t i = 0; i < ta.size(); ++i) {
        if (!ta[i]) continue;
        auto wu = word_at(i, mu, d);
        for (std::size_t j = 0; j < tb.size(); ++j) {
          if (!tb[j]) continue;
          auto wv = word_at(j, mv, d);
          std::vector<u32> w(d);
          for (u32 s = 0; s < d; ++s) w[s] = wu[s] * mv + wv[s];
          auto& e = t[word_index(w, mu * mv)];
          e = static_cast<u32>((e + (u64)ta[i] * tb[j]) % p);
        }
      }
      Vec img = project_from_tensors(guv, t);
      for (std::size_t r = 0; r < guv.dim(); ++r) out.at(r, a * gv.dim() + b) = img[r];
    }
  }
  return out;
}

Matrix j_map_direct(u32 mu, u32 mv, u32 d, u32 p) {
  GammaSpace gu(mu, d), gv(mv, d), guv(mu * mv, d);
  Matrix out(guv.dim(), gu.dim() * gv.dim(), p);
  for (std::size_t c = 0; c < guv.dim(); ++c) {
    Multiset a, b;
    for (u32 x : guv.basis(c)) {
      a.push_back(x / mv);
      b.push_back(x % mv);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    out.at(c, gu.index.rank(a) * gv.dim() + gv.index.rank(b)) = 1 % p;
  }
  return out;
}

Matrix gamma_compose_literal(u32 dx, u32 dy, u32 dz, u32 d, u32 p) {
  // comp : hom(X,Y) (x) hom(Y,Z) -> hom(X,Z), (E_{y,x}, E_{z,y'}) -> delta_{y,y'} E_{z,x}.
  u32 mf = dy * dx, mg = dz * dy, mh = dz * dx;
  Matrix comp(mh, mf * mg, p);
  for (u32 y = 0; y < dy; ++y)
    for (u32 x = 0; x < dx; ++x)
      for (u32 z = 0; z < dz; ++z) comp.at(z * dx + x, (y * dx + x) * mg + (z * dy + y)) = 1 % p;
  return gamma_map(comp, d) * j_map(mf, mg, d, p);
}

std::vector<ComposeTerm> gamma_compose_terms(u32 dx, u32 dy, u32 dz, u32 d, u32 p) {
  MultisetIndex If(dy * dx, d), Ig(dz * dy, d), Ih(dz * dx, d);
  std::vector<u64> keys;
  keys.reserve(Ih.size() * ipow(dy, d));
  u64 ng = Ig.size(), nh = Ih.size();
  Multiset f(d), g(d);
  std::vector<u32> r(d, 0);
  for (std::size_t c = 0; c < Ih.size(); ++c) {
    const Multiset& w = Ih.at(c);
    std::fill(r.begin(), r.end(), 0);
    while (true) {
      for (u32 s = 0; s < d; ++s) {
        u32 z = w[s] / dx, x = w[s] % dx;
        f[s] = r[s] * dx + x;
        g[s] = z * dy + r[s];
      }
      std::sort(f.begin(), f.end());
      std::sort(g.begin(), g.end());
      keys.push_back(((u64)If.rank(f) * ng + Ig.rank(g)) * nh + c);
      u32 s = d;
      while (s > 0 && r[s - 1] == dy - 1) r[--s] = 0;
      if (s == 0) break;
      ++r[s - 1];
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<ComposeTerm> out;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    u32 coef = static_cast<u32>((j - i) % p);
    if (coef) {
      u64 k = keys[i];
      out.push_back({static_cast<u32>(k / nh / ng), static_cast<u32>(k / nh % ng), static_cast<u32>(k % nh), coef});
    }
    i = j;
  }
  return out;
}

Matrix gamma_compose(u32 dx, u32 dy, u32 dz, u32 d, u32 p) {
  std::size_t nf = binomial(dy * dx + d - 1, d), ng = binomial(dz * dy + d - 1, d),
              nh = binomial(dz * dx + d - 1, d);
  Matrix out(nh, nf * ng, p);
  for (auto& t : gamma_compose_terms(dx, dy, dz, d, p)) out.at(t.c, (std::size_t)t.f * ng + t.g) = t.coef;
  return out;
}

std::size_t gamma_compose_rank(u32 dx, u32 dy, u32 dz, u32 d, u32 p) {
  auto terms = gamma_compose_terms(dx, dy, dz, d, p);
  std::size_t nh = binomial(dz * dx + d - 1, d);
  std::sort(terms.begin(), terms.end(), [](const ComposeTerm& a, const ComposeTerm& b) {
    return std::tie(a.f, a.g, a.c) < std::tie(b.f, b.g, b.c);
  });
  std::vector<SVec> cols;
  for (std::size_t i = 0; i < terms.size();) {
    SVec v;
    std::size_t j = i;
    while (j < terms.size() && terms[j].f == terms[i].f && terms[j].g == terms[i].g) {
      v.emplace_back(terms[j].c, terms[j].coef);
      ++j;
    }
    cols.push_back(std::move(v));
    i = j;
  }
  return rref_rows(std::move(cols), nh, p).second.size();
}

ExponentialSplit::ExponentialSplit(u32 mv, u32 mw, u32 d) : mv_(mv), mw_(mw), d_(d), total_(mv + mw, d) {
  for (u32 a = 0; a <= d; ++a) {
    left_.emplace_back(mv, a);
    right_.emplace_back(mw, a);
  }
  for (std::size_t i = 0; i < total_.dim(); ++i) {
    Multiset v, w;
    for (u32 x : total_.basis(i)) {
      if (x < mv) v.push_back(x);
      else w.push_back(x - mv);
    }
    u32 a = v.size();
    split_.push_back({a, left_[a].index.rank(v), right_[d - a].index.rank(w)});
  }
}

std::size_t ExponentialSplit::merge(u32 a, std::size_t iv, std::size_t iw) const {
  Multiset all = left_[a].basis(iv);
  for (u32 x : right_[d_ - a].basis(iw)) all.push_back(x + mv_);
  return total_.index.rank(all);
}

Matrix ExponentialSplit::component(u32 a, u32 p) const {
  std::size_t nw = right_[d_ - a].dim();
  Matrix m(left_[a].dim() * nw, total_.dim(), p);
  for (std::size_t i = 0; i < total_.dim(); ++i)
    if (split_[i].a == a) m.at(split_[i].iv * nw + split_[i].iw, i) = 1 % p;
  return m;
}

}  // namespace schurext
