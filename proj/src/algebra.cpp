#include "schurext/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace schurext {

// ---------------- Algebra ----------------

SVec Algebra::mul(const SVec& a, const SVec& b) const {
  std::map<u32, u64> acc;
  for (auto [x, u] : a)
    for (auto [y, v] : b) {
      if (right_weight(x) != left_weight(y)) continue;
      u64 uv = (u64)u * v % p_;
      for (auto [c, w] : mul_basis(x, y)) acc[c] = (acc[c] + uv * w) % p_;
    }
  SVec out;
  for (auto [c, w] : acc)
    if (w) out.emplace_back(c, (u32)w);
  return out;
}

SVec Algebra::unit() const {
  SVec u;
  for (std::size_t w = 0; w < num_weights(); ++w) u.emplace_back(idempotent(w), 1);
  std::sort(u.begin(), u.end());
  return u;
}

void Algebra::build_blocks() {
  for (std::size_t x = 0; x < dim_; ++x) blocks_[{left_weight(x), right_weight(x)}].push_back(x);
}

const std::vector<std::size_t>& Algebra::block(std::size_t l, std::size_t r) const {
  auto it = blocks_.find({l, r});
  return it == blocks_.end() ? empty_ : it->second;
}

std::vector<std::size_t> Algebra::column(std::size_t r) const {
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < num_weights(); ++l) {
    auto& b = block(l, r);
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------- SchurAlgebra ----------------

SchurAlgebra::SchurAlgebra(u32 n, u32 d, u32 p) : n_(n), d_(d), idx_(n * n, d) {
  if (n < 1) throw std::invalid_argument("Schur algebra needs n >= 1");
  Fp check(p);
  p_ = p;
  dim_ = idx_.size();
  weights_ = compositions(d, n);
  for (std::size_t i = 0; i < weights_.size(); ++i) weight_ids_[weights_[i]] = i;
  lw_.resize(dim_);
  rw_.resize(dim_);
  for (std::size_t x = 0; x < dim_; ++x) {
    std::vector<u32> l(n, 0), r(n, 0);
    for (u32 e : idx_.at(x)) ++l[e / n], ++r[e % n];
    lw_[x] = weight_ids_.at(l);
    rw_[x] = weight_ids_.at(r);
  }
  for (auto& w : weights_) {
    Multiset m;
    for (u32 i = 0; i < n; ++i)
      for (u32 k = 0; k < w[i]; ++k) m.push_back(i * n + i);
    idem_.push_back(idx_.rank(m));
  }
  for (u32 i = 0; i + 1 < n; ++i)
    for (u32 r = 1; r <= d; ++r)
      for (std::size_t w = 0; w < weights_.size(); ++w) {
        if (auto x = raising(i, r, w); x != npos) gens_.push_back(x);
        if (auto x = lowering(i, r, w); x != npos) gens_.push_back(x);
      }
  build_blocks();
  if (!load_cache()) {
    build_table();
    save_cache();
  }
}

std::size_t SchurAlgebra::weight_id(const std::vector<u32>& w) const { return weight_ids_.at(w); }

std::size_t SchurAlgebra::raising(u32 i, u32 r, std::size_t w) const {
  auto lam = weights_[w];
  if (lam[i + 1] < r) return npos;
  lam[i + 1] -= r;
  Multiset m(r, i * n_ + i + 1);
  for (u32 j = 0; j < n_; ++j)
    for (u32 k = 0; k < lam[j]; ++k) m.push_back(j * n_ + j);
  std::sort(m.begin(), m.end());
  return idx_.rank(m);
}

std::size_t SchurAlgebra::lowering(u32 i, u32 r, std::size_t w) const {
  auto lam = weights_[w];
  if (lam[i] < r) return npos;
  lam[i] -= r;
  Multiset m(r, (i + 1) * n_ + i);
  for (u32 j = 0; j < n_; ++j)
    for (u32 k = 0; k < lam[j]; ++k) m.push_back(j * n_ + j);
  std::sort(m.begin(), m.end());
  return idx_.rank(m);
}

void SchurAlgebra::build_table() {
  auto raw = gamma_compose_terms(n_, n_, n_, d_, p_);
  // raw term (f, g, c): g o f = ... ; here x = g, y = f.
  std::sort(raw.begin(), raw.end(), [](const ComposeTerm& a, const ComposeTerm& b) {
    return std::tie(a.g, a.f, a.c) < std::tie(b.g, b.f, b.c);
  });
  row_ptr_.assign(dim_ + 1, 0);
  terms_.reserve(raw.size());
  for (auto& t : raw) {
    terms_.push_back({t.f, t.c, t.coef});
    ++row_ptr_[t.g + 1];
  }
  for (std::size_t x = 0; x < dim_; ++x) row_ptr_[x + 1] += row_ptr_[x];
}

SVec SchurAlgebra::mul_basis(std::size_t x, std::size_t y) const {
  auto b = terms_.begin() + row_ptr_[x], e = terms_.begin() + row_ptr_[x + 1];
  auto lo = std::lower_bound(b, e, y, [](const Term& t, std::size_t v) { return t.y < v; });
  SVec out;
  for (; lo != e && lo->y == y; ++lo) out.emplace_back(lo->c, lo->coef);
  return out;
}

std::string SchurAlgebra::describe() const {
  return "S(" + std::to_string(n_) + "," + std::to_string(d_) + ") over F_" + std::to_string(p_);
}

namespace {

std::string cache_path(u32 p, u32 n, u32 d) {
  const char* dir = std::getenv("SCHUREXT_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/schur_p" + std::to_string(p) + "_n" + std::to_string(n) + "_d" +
         std::to_string(d) + ".bin";
}

}  // namespace

bool SchurAlgebra::load_cache() {
  auto path = cache_path(p_, n_, d_);
  if (path.empty()) return false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  u32 hdr[4];
  u64 count = 0;
  in.read(reinterpret_cast<char*>(hdr), sizeof hdr);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  if (!in || hdr[0] != p_ || hdr[1] != n_ || hdr[2] != d_ || hdr[3] != dim_) return false;
  std::vector<u32> raw(count * 4);
  in.read(reinterpret_cast<char*>(raw.data()), raw.size() * sizeof(u32));
  if (!in) return false;
  row_ptr_.assign(dim_ + 1, 0);
  terms_.clear();
  terms_.reserve(count);
  for (u64 k = 0; k < count; ++k) {
    u32 i = raw[4 * k], j = raw[4 * k + 1], c = raw[4 * k + 2], v = raw[4 * k + 3];
    if (i >= dim_ || j >= dim_ || c >= dim_ || v == 0 || v >= p_ || (k && i < raw[4 * k - 4])) return false;
    terms_.push_back({j, c, v});
    ++row_ptr_[i + 1];
  }
  for (std::size_t x = 0; x < dim_; ++x) row_ptr_[x + 1] += row_ptr_[x];
  return true;
}

void SchurAlgebra::save_cache() const {
  auto path = cache_path(p_, n_, d_);
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return;
  u32 hdr[4] = {p_, n_, d_, static_cast<u32>(dim_)};
  u64 count = terms_.size();
  out.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  for (std::size_t x = 0; x < dim_; ++x)
    for (std::size_t k = row_ptr_[x]; k < row_ptr_[x + 1]; ++k) {
      u32 rec[4] = {static_cast<u32>(x), terms_[k].y, terms_[k].c, terms_[k].coef};
      out.write(reinterpret_cast<const char*>(rec), sizeof rec);
    }
}

std::shared_ptr<const SchurAlgebra> schur_algebra(u32 n, u32 d, u32 p) {
  static std::mutex mu;
  static std::map<std::tuple<u32, u32, u32>, std::shared_ptr<const SchurAlgebra>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d, p}];
  if (!slot) slot = std::make_shared<SchurAlgebra>(n, d, p);
  return slot;
}

// ---------------- ProductAlgebra ----------------

ProductAlgebra::ProductAlgebra(std::vector<std::shared_ptr<const Algebra>> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("empty tensor product");
  p_ = factors_[0]->prime();
  dim_ = 1;
  for (auto& f : factors_) {
    if (f->prime() != p_) throw std::invalid_argument("factors over different fields");
    dim_ *= f->dim();
    nweights_ *= f->num_weights();
  }
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    // generator of factor k tensored with idempotents elsewhere
    std::size_t others = nweights_ / factors_[k]->num_weights();
    for (std::size_t g : factors_[k]->generators())
      for (std::size_t o = 0; o < others; ++o) {
        std::vector<std::size_t> xs(factors_.size());
        std::size_t rest = o;
        for (std::size_t j = factors_.size(); j-- > 0;) {
          if (j == k) continue;
          std::size_t nw = factors_[j]->num_weights();
          xs[j] = factors_[j]->idempotent(rest % nw);
          rest /= nw;
        }
        xs[k] = g;
        gens_.push_back(join(xs));
      }
  }
  std::sort(gens_.begin(), gens_.end());
  build_blocks();
}

std::vector<std::size_t> ProductAlgebra::split(std::size_t x) const {
  std::vector<std::size_t> xs(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    xs[j] = x % factors_[j]->dim();
    x /= factors_[j]->dim();
  }
  return xs;
}

std::size_t ProductAlgebra::join(const std::vector<std::size_t>& xs) const {
  std::size_t x = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) x = x * factors_[j]->dim() + xs[j];
  return x;
}

std::vector<std::size_t> ProductAlgebra::split_weight(std::size_t w) const {
  std::vector<std::size_t> ws(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    ws[j] = w % factors_[j]->num_weights();
    w /= factors_[j]->num_weights();
  }
  return ws;
}

std::size_t ProductAlgebra::join_weight(const std::vector<std::size_t>& ws) const {
  std::size_t w = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) w = w * factors_[j]->num_weights() + ws[j];
  return w;
}

SVec ProductAlgebra::mul_basis(std::size_t x, std::size_t y) const {
  auto xs = split(x), ys = split(y);
  std::vector<std::pair<std::size_t, u32>> acc{{0, 1}};
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    SVec f = factors_[j]->mul_basis(xs[j], ys[j]);
    std::vector<std::pair<std::size_t, u32>> next;
    for (auto [c, v] : acc)
      for (auto [c2, v2] : f) next.emplace_back(c * factors_[j]->dim() + c2, (u32)((u64)v * v2 % p_));
    acc = std::move(next);
    if (acc.empty()) break;
  }
  SVec out;
  for (auto [c, v] : acc) out.emplace_back((u32)c, v);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ProductAlgebra::left_weight(std::size_t x) const {
  auto xs = split(x);
  std::vector<std::size_t> ws(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) ws[j] = factors_[j]->left_weight(xs[j]);
  return join_weight(ws);
}

std::size_t ProductAlgebra::right_weight(std::size_t x) const {
  auto xs = split(x);
  std::vector<std::size_t> ws(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) ws[j] = factors_[j]->right_weight(xs[j]);
  return join_weight(ws);
}

std::size_t ProductAlgebra::idempotent(std::size_t w) const {
  auto ws = split_weight(w);
  std::vector<std::size_t> xs(ws.size());
  for (std::size_t j = 0; j < ws.size(); ++j) xs[j] = factors_[j]->idempotent(ws[j]);
  return join(xs);
}

std::string ProductAlgebra::describe() const {
  std::string s;
  for (std::size_t j = 0; j < factors_.size(); ++j) s += (j ? " (x) " : "") + factors_[j]->describe();
  return s;
}

std::vector<u32> ProductAlgebra::weight_vector(std::size_t w) const {
  auto ws = split_weight(w);
  std::vector<u32> out;
  for (std::size_t j = 0; j < ws.size(); ++j) {
    auto v = factors_[j]->weight_vector(ws[j]);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::shared_ptr<const Algebra> slot_algebra(u32 n, const std::vector<u32>& degrees, u32 p) {
  if (degrees.size() == 1) return schur_algebra(n, degrees[0], p);
  static std::mutex mu;
  static std::map<std::tuple<u32, std::vector<u32>, u32>, std::shared_ptr<const Algebra>> cache;
  std::vector<std::shared_ptr<const Algebra>> fs;
  for (u32 d : degrees) fs.push_back(schur_algebra(n, d, p));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, degrees, p}];
  if (!slot) slot = std::make_shared<ProductAlgebra>(std::move(fs));
  return slot;
}

std::size_t generated_dimension(const Algebra& A) {
  EchelonBasis span(A.dim(), A.prime());
  std::vector<SVec> frontier;
  auto push = [&](const SVec& v) {
    Vec dense(A.dim(), 0);
    for (auto [i, x] : v) dense[i] = x;
    if (span.add(dense)) frontier.push_back(v);
  };
  for (std::size_t w = 0; w < A.num_weights(); ++w) push({{(u32)A.idempotent(w), 1}});
  while (!frontier.empty()) {
    SVec v = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t g : A.generators()) push(A.mul({{(u32)g, 1}}, v));
  }
  return span.dim();
}

}  // namespace schurext
