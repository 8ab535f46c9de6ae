#include "schurext/matrix.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace schurext {

namespace {

void check_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

// Reduces a dense accumulator against fully reduced pivot rows, in increasing column order.
// Entries at columns without a pivot row are left in place.
struct Reducer {
  const std::vector<const SVec*>& by_col;  // pivot row for a column, or nullptr
  u32 p;
  std::vector<u32> acc;
  std::vector<char> mark;
  std::vector<u32> touched;

  Reducer(const std::vector<const SVec*>& bc, std::size_t cols, u32 prime)
      : by_col(bc), p(prime), acc(cols, 0), mark(cols, 0) {}

  SVec run(const SVec& in, long skip_col) {
    std::priority_queue<u32, std::vector<u32>, std::greater<u32>> heap;
    for (auto [c, v] : in) {
      acc[c] = v;
      heap.push(c);
      mark[c] = 1;
      touched.push_back(c);
    }
    SVec out;
    while (!heap.empty()) {
      u32 c = heap.top();
      heap.pop();
      mark[c] = 0;
      u32 f = acc[c];
      if (f == 0) continue;
      const SVec* r = by_col[c];
      if (r == nullptr || (long)c == skip_col) {
        out.emplace_back(c, f);
        acc[c] = 0;
        continue;
      }
      u32 nf = p - f;
      for (auto [j, v] : *r) {
        acc[j] = static_cast<u32>((acc[j] + (u64)nf * v) % p);
        if (!mark[j] && j != c) {
          mark[j] = 1;
          heap.push(j);
          touched.push_back(j);
        }
      }
      acc[c] = 0;
    }
    for (u32 t : touched) acc[t] = 0, mark[t] = 0;
    touched.clear();
    return out;
  }
};

}  // namespace

// ---------------- Matrix ----------------

Matrix::Matrix(std::size_t rows, std::size_t cols, u32 p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, u32 p) {
  Matrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, u32 p) {
  Matrix m(rows.size(), cols, p);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(row_ptr(i), row_ptr(i) + cols_); }

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  check_same(v.size(), cols_, "set_row");
  std::copy(v.begin(), v.end(), row_ptr(i));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same(cols_, o.rows_, "multiply");
  Matrix r(rows_, o.cols_, p_);
  std::vector<u64> acc(o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::size_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      u64 a = at(i, k);
      if (a == 0) continue;
      const u32* b = o.row_ptr(k);
      for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * b[j];
      if (++pending == 1024) {
        for (auto& x : acc) x %= p_;
        pending = 0;
      }
    }
    u32* out = r.row_ptr(i);
    for (std::size_t j = 0; j < o.cols_; ++j) out[j] = static_cast<u32>(acc[j] % p_);
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same(rows_, o.rows_, "add");
  check_same(cols_, o.cols_, "add");
  Matrix r(rows_, cols_, p_);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    u32 s = data_[k] + o.data_[k];
    r.data_[k] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(p_ - 1); }

Matrix Matrix::scaled(u32 s) const {
  Matrix r(rows_, cols_, p_);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = static_cast<u32>((u64)data_[k] * s % p_);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  check_same(v.size(), cols_, "apply");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    u64 s = 0;
    const u32* r = row_ptr(i);
    for (std::size_t j = 0; j < cols_; ++j) s += (u64)r[j] * v[j];
    out[i] = static_cast<u32>(s % p_);
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](u32 x) { return x == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc, p_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix b(rows_, cols.size(), p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b.at(i, j) = at(i, cols[j]);
  return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix b(rows.size(), cols_, p_);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(row_ptr(rows[i]), row_ptr(rows[i]) + cols_, b.row_ptr(i));
  return b;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  check_same(a.cols_, b.cols_, "vstack");
  Matrix r(a.rows_ + b.rows_, a.cols_, a.p_);
  std::copy(a.data_.begin(), a.data_.end(), r.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), r.data_.begin() + a.data_.size());
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  check_same(a.rows_, b.rows_, "hstack");
  Matrix r(a.rows_, a.cols_ + b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::copy(a.row_ptr(i), a.row_ptr(i) + a.cols_, r.row_ptr(i));
    std::copy(b.row_ptr(i), b.row_ptr(i) + b.cols_, r.row_ptr(i) + a.cols_);
  }
  return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      u64 x = a.at(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          r.at(i * b.rows_ + k, j * b.cols_ + l) = static_cast<u32>(x * b.at(k, l) % a.p_);
    }
  return r;
}

// ---------------- SparseMatrix ----------------

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, u32 p)
    : rows_(rows), cols_(cols), p_(p), rows_v_(rows) {}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols(), m.prime());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) s.rows_v_[i].emplace_back(j, m.at(i, j));
  return s;
}

SparseMatrix SparseMatrix::identity(std::size_t n, u32 p) {
  SparseMatrix s(n, n, p);
  for (std::size_t i = 0; i < n; ++i) s.rows_v_[i].emplace_back(i, 1);
  return s;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (auto& r : rows_v_) n += r.size();
  return n;
}

void SparseMatrix::add(std::size_t i, std::size_t j, u32 v) {
  v %= p_;
  if (v == 0) return;
  auto& r = rows_v_[i];
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair((u32)j, 0u));
  if (it != r.end() && it->first == j) {
    it->second = (it->second + v) % p_;
    if (it->second == 0) r.erase(it);
  } else {
    r.insert(it, {(u32)j, v});
  }
}

u32 SparseMatrix::get(std::size_t i, std::size_t j) const {
  auto& r = rows_v_[i];
  auto it = std::lower_bound(r.begin(), r.end(), std::make_pair((u32)j, 0u));
  return (it != r.end() && it->first == j) ? it->second : 0;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto [j, v] : rows_v_[i]) m.at(i, j) = v;
  return m;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto [j, v] : rows_v_[i]) t.rows_v_[j].emplace_back(i, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  check_same(cols_, o.rows_, "sparse multiply");
  SparseMatrix r(rows_, o.cols_, p_);
  std::vector<u64> acc(o.cols_, 0);
  std::vector<char> seen(o.cols_, 0);
  std::vector<u32> idx;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (auto [k, a] : rows_v_[i])
      for (auto [j, b] : o.rows_v_[k]) {
        acc[j] = (acc[j] + (u64)a * b) % p_;
        if (!seen[j]) seen[j] = 1, idx.push_back(j);
      }
    std::sort(idx.begin(), idx.end());
    for (u32 j : idx) {
      if (acc[j]) r.rows_v_[i].emplace_back(j, (u32)acc[j]);
      acc[j] = 0;
      seen[j] = 0;
    }
    idx.clear();
  }
  return r;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  check_same(rows_, o.rows_, "sparse add");
  check_same(cols_, o.cols_, "sparse add");
  SparseMatrix r(rows_, cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto& a = rows_v_[i];
    auto& b = o.rows_v_[i];
    auto& out = r.rows_v_[i];
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        out.push_back(a[x++]);
      } else if (x == a.size() || b[y].first < a[x].first) {
        out.push_back(b[y++]);
      } else {
        u32 s = (a[x].second + b[y].second) % p_;
        if (s) out.emplace_back(a[x].first, s);
        ++x, ++y;
      }
    }
  }
  return r;
}

SparseMatrix SparseMatrix::scaled(u32 s) const {
  SparseMatrix r(rows_, cols_, p_);
  s %= p_;
  if (s == 0) return r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto [j, v] : rows_v_[i]) r.rows_v_[i].emplace_back(j, (u32)((u64)v * s % p_));
  return r;
}

Vec SparseMatrix::apply(const Vec& v) const {
  check_same(v.size(), cols_, "sparse apply");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    u64 s = 0;
    for (auto [j, a] : rows_v_[i]) s += (u64)a * v[j];
    out[i] = static_cast<u32>(s % p_);
  }
  return out;
}

SVec SparseMatrix::apply(const SVec& v) const {
  Vec dense(cols_, 0);
  for (auto [j, a] : v) dense[j] = a;
  Vec r = apply(dense);
  SVec out;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) out.emplace_back(i, r[i]);
  return out;
}

SparseMatrix SparseMatrix::kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < b.rows_; ++k) {
      auto& out = r.rows_v_[i * b.rows_ + k];
      for (auto [j, x] : a.rows_v_[i])
        for (auto [l, y] : b.rows_v_[k])
          out.emplace_back(j * b.cols_ + l, (u32)((u64)x * y % a.p_));
    }
  return r;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && rows_v_ == o.rows_v_;
}

// ---------------- elimination ----------------

RrefResult rref_dense(const Matrix& m) {
  Fp f(m.prime());
  Matrix R = m;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  const std::size_t rows = R.rows(), cols = R.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t s = r;
    while (s < rows && R.at(s, c) == 0) ++s;
    if (s == rows) continue;
    if (s != r) std::swap_ranges(R.row_ptr(s), R.row_ptr(s) + cols, R.row_ptr(r));
    u32* pr = R.row_ptr(r);
    u32 iv = f.inv(pr[c]);
    for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], iv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u32* ri = R.row_ptr(i);
      u32 a = ri[c];
      if (a == 0) continue;
      u64 na = f.p - a;
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j]) ri[j] = static_cast<u32>((ri[j] + na * pr[j]) % f.p);
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(R), std::move(piv)};
}

std::pair<std::vector<SVec>, std::vector<std::size_t>> rref_rows(std::vector<SVec> rows,
                                                                 std::size_t cols, u32 p) {
  Fp f(p);
  std::vector<SVec> basis;
  std::vector<const SVec*> by_col(cols, nullptr);
  std::vector<std::size_t> idx_by_col(cols, (std::size_t)-1);
  Reducer red(by_col, cols, p);
  // by_col holds pointers into basis, so it must never reallocate.
  basis.reserve(std::min(rows.size(), cols));
  for (auto& row : rows) {
    if (row.empty()) continue;
    SVec r = red.run(row, -1);
    if (r.empty()) continue;
    u32 iv = f.inv(r.front().second);
    for (auto& e : r) e.second = f.mul(e.second, iv);
    u32 c = r.front().first;
    idx_by_col[c] = basis.size();
    basis.push_back(std::move(r));
    by_col[c] = &basis.back();
    if (basis.size() == cols) break;
  }
  // Back substitution, highest pivot first.
  std::vector<std::size_t> piv;
  for (std::size_t c = 0; c < cols; ++c)
    if (by_col[c]) piv.push_back(c);
  std::vector<const SVec*> done(cols, nullptr);
  Reducer back(done, cols, p);
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    SVec& r = basis[idx_by_col[*it]];
    r = back.run(r, (long)*it);
    done[*it] = &r;
  }
  std::vector<SVec> out;
  out.reserve(piv.size());
  for (auto c : piv) out.push_back(std::move(basis[idx_by_col[c]]));
  return {std::move(out), std::move(piv)};
}

RrefResult rref_sparse(const Matrix& m) {
  std::vector<SVec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j)) rows[i].emplace_back(j, m.at(i, j));
  auto [red, piv] = rref_rows(std::move(rows), m.cols(), m.prime());
  Matrix R(m.rows(), m.cols(), m.prime());
  for (std::size_t i = 0; i < red.size(); ++i)
    for (auto [j, v] : red[i]) R.at(i, j) = v;
  return {std::move(R), std::move(piv)};
}

RrefResult rref(const Matrix& m, std::size_t sparse_threshold) {
  if (m.rows() * m.cols() > sparse_threshold) return rref_sparse(m);
  return rref_dense(m);
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

namespace {

Matrix nullspace_from(const std::vector<SVec>& R, const std::vector<std::size_t>& piv,
                      std::size_t cols, u32 p) {
  std::vector<long> free_idx(cols, -1);
  std::vector<char> is_piv(cols, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::size_t nf = 0;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_piv[c]) free_idx[c] = (long)nf++;
  Matrix N(nf, cols, p);
  for (std::size_t c = 0; c < cols; ++c)
    if (free_idx[c] >= 0) N.at(free_idx[c], c) = 1 % p;
  for (std::size_t i = 0; i < R.size(); ++i)
    for (auto [j, v] : R[i])
      if (free_idx[j] >= 0) N.at(free_idx[j], piv[i]) = (p - v) % p;
  return N;
}

}  // namespace

Matrix nullspace_sparse(const std::vector<SVec>& rows, std::size_t cols, u32 p) {
  auto [R, piv] = rref_rows(rows, cols, p);
  return nullspace_from(R, piv, cols, p);
}

Matrix nullspace(const Matrix& m) {
  auto rr = rref(m);
  std::vector<SVec> R(rr.pivots.size());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (rr.R.at(i, j)) R[i].emplace_back(j, rr.R.at(i, j));
  return nullspace_from(R, rr.pivots, m.cols(), m.prime());
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  check_same(a.rows(), b.rows(), "solve");
  auto rr = rref(Matrix::hstack(a, b));
  Matrix X(a.cols(), b.cols(), a.prime());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    std::size_t c = rr.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t k = 0; k < b.cols(); ++k) X.at(c, k) = rr.R.at(i, a.cols() + k);
  }
  return X;
}

Eigensplit eigensplit_involution(const Matrix& t) {
  u32 p = t.prime();
  if (p == 2) throw std::invalid_argument("eigenspace split needs odd characteristic");
  if (t.rows() != t.cols()) throw std::invalid_argument("involution must be square");
  Matrix I = Matrix::identity(t.rows(), p);
  if (t * t != I) throw std::invalid_argument("matrix is not an involution");
  return {nullspace(t - I), nullspace(t + I)};
}

// ---------------- EchelonBasis ----------------

void EchelonBasis::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    u32 a = v[piv_[i]];
    if (a == 0) continue;
    u64 na = f_.p - a;
    const Vec& r = rows_[i];
    for (std::size_t j = piv_[i]; j < n_; ++j)
      if (r[j]) v[j] = static_cast<u32>((v[j] + na * r[j]) % f_.p);
  }
}

bool EchelonBasis::contains(const Vec& v) const {
  Vec w = v;
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool EchelonBasis::add(const Vec& v) {
  Vec w = v;
  reduce(w);
  std::size_t c = 0;
  while (c < n_ && w[c] == 0) ++c;
  if (c == n_) return false;
  u32 iv = f_.inv(w[c]);
  for (auto& x : w) x = f_.mul(x, iv);
  for (auto& r : rows_) {
    u32 a = r[c];
    if (a == 0) continue;
    u64 na = f_.p - a;
    for (std::size_t j = c; j < n_; ++j)
      if (w[j]) r[j] = static_cast<u32>((r[j] + na * w[j]) % f_.p);
  }
  auto pos = std::lower_bound(piv_.begin(), piv_.end(), c) - piv_.begin();
  piv_.insert(piv_.begin() + pos, c);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

Vec EchelonBasis::coords(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[piv_[i]];
  return c;
}

Matrix EchelonBasis::to_matrix() const { return Matrix::from_rows(rows_, n_, f_.p); }

// ---------------- PolyMatrix ----------------

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t degree_bound, u32 p)
    : rows_(rows), cols_(cols), p_(p), coeffs_(degree_bound + 1, Matrix(rows, cols, p)) {}

PolyMatrix PolyMatrix::constant(const Matrix& m) {
  PolyMatrix r(m.rows(), m.cols(), 0, m.prime());
  r.coeffs_[0] = m;
  return r;
}

PolyMatrix PolyMatrix::identity(std::size_t n, u32 p) { return constant(Matrix::identity(n, p)); }

Vec PolyMatrix::entry(std::size_t i, std::size_t j) const {
  Vec v(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k] = coeffs_[k].at(i, j);
  return v;
}

void PolyMatrix::set_entry(std::size_t i, std::size_t j, const Vec& poly) {
  if (poly.size() > coeffs_.size()) coeffs_.resize(poly.size(), Matrix(rows_, cols_, p_));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k].at(i, j) = k < poly.size() ? poly[k] % p_ : 0;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  check_same(cols_, o.rows_, "poly multiply");
  PolyMatrix r(rows_, o.cols_, degree_bound() + o.degree_bound(), p_);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      r.coeffs_[a + b] = r.coeffs_[a + b] + coeffs_[a] * o.coeffs_[b];
    }
  }
  r.trim();
  return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
  check_same(rows_, o.rows_, "poly add");
  check_same(cols_, o.cols_, "poly add");
  std::size_t D = std::max(degree_bound(), o.degree_bound());
  PolyMatrix r(rows_, cols_, D, p_);
  for (std::size_t k = 0; k <= D; ++k) {
    if (k < coeffs_.size()) r.coeffs_[k] = r.coeffs_[k] + coeffs_[k];
    if (k < o.coeffs_.size()) r.coeffs_[k] = r.coeffs_[k] + o.coeffs_[k];
  }
  r.trim();
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(cols_, rows_, degree_bound(), p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k].transpose();
  return r;
}

Matrix PolyMatrix::eval(u32 t) const {
  Matrix r(rows_, cols_, p_);
  u32 pw = 1 % p_;
  for (auto& c : coeffs_) {
    r = r + c.scaled(pw);
    pw = static_cast<u32>((u64)pw * t % p_);
  }
  return r;
}

void PolyMatrix::trim() {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  PolyMatrix a = *this, b = o;
  a.trim();
  b.trim();
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
}

std::vector<Matrix> poly_coeff_stack(const PolyMatrix& m) {
  std::vector<Matrix> out;
  for (std::size_t k = 0; k <= m.degree_bound(); ++k) out.push_back(m.coeff(k));
  return out;
}

}  // namespace schurext
