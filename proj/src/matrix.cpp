#include "fastph/matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fastph {

namespace {

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const DenseMatrix& a, const DenseMatrix& b) {
  if (!(a.ctx() == b.ctx())) {
    throw DimensionMismatch("operands live over different fields");
  }
}

void require_product_shape(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
}

// Smallest size >= n that halves evenly until it is at most `cutoff`.
std::size_t strassen_size(std::size_t n, std::size_t cutoff) {
  cutoff = std::max<std::size_t>(cutoff, 1);
  std::size_t q = n;
  unsigned d = 0;
  while (q > cutoff) {
    q = (q + 1) / 2;
    ++d;
  }
  return q << d;
}

DenseMatrix pad_to(const DenseMatrix& m, std::size_t rows, std::size_t cols) {
  if (m.rows() == rows && m.cols() == cols) return m;
  DenseMatrix out(rows, cols, m.ctx());
  out.set_block(0, 0, m);
  return out;
}

// c[r0.., c0..] += m
void add_into(DenseMatrix& c, std::size_t r0, std::size_t c0, const DenseMatrix& m,
              const KernelConfig& cfg) {
  const auto& f = c.ctx();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    FieldElement* dst = c.row_data(r0 + i) + c0;
    const FieldElement* src = m.row_data(i);
    for (std::size_t j = 0; j < m.cols(); ++j) dst[j] = f.add(dst[j], src[j]);
  }
  cfg.count(0, m.rows() * m.cols());
}

DenseMatrix strassen_square(const DenseMatrix& a, const DenseMatrix& b, std::size_t cutoff,
                            OpCounter* counter) {
  const std::size_t m = a.rows();
  if (m <= cutoff || m % 2 != 0) return mat_mul_naive(a, b, counter);
  const KernelConfig cfg{cutoff, counter};
  const std::size_t h = m / 2;
  const DenseMatrix a11 = a.block(0, 0, h, h), a12 = a.block(0, h, h, h);
  const DenseMatrix a21 = a.block(h, 0, h, h), a22 = a.block(h, h, h, h);
  const DenseMatrix b11 = b.block(0, 0, h, h), b12 = b.block(0, h, h, h);
  const DenseMatrix b21 = b.block(h, 0, h, h), b22 = b.block(h, h, h, h);

  auto mul = [&](const DenseMatrix& x, const DenseMatrix& y) {
    return strassen_square(x, y, cutoff, counter);
  };
  const DenseMatrix m1 = mul(mat_add(a11, a22, cfg), mat_add(b11, b22, cfg));
  const DenseMatrix m2 = mul(mat_add(a21, a22, cfg), b11);
  const DenseMatrix m3 = mul(a11, mat_sub(b12, b22, cfg));
  const DenseMatrix m4 = mul(a22, mat_sub(b21, b11, cfg));
  const DenseMatrix m5 = mul(mat_add(a11, a12, cfg), b22);
  const DenseMatrix m6 = mul(mat_sub(a21, a11, cfg), mat_add(b11, b12, cfg));
  const DenseMatrix m7 = mul(mat_sub(a12, a22, cfg), mat_add(b21, b22, cfg));

  DenseMatrix c(m, m, a.ctx());
  c.set_block(0, 0, mat_add(mat_sub(mat_add(m1, m4, cfg), m5, cfg), m7, cfg));
  c.set_block(0, h, mat_add(m3, m5, cfg));
  c.set_block(h, 0, mat_add(m2, m4, cfg));
  c.set_block(h, h, mat_add(mat_add(mat_sub(m1, m2, cfg), m3, cfg), m6, cfg));
  return c;
}

DenseMatrix tri_inverse_rec(const DenseMatrix& a, Triangle t, const KernelConfig& cfg) {
  const std::size_t n = a.rows();
  const auto& f = a.ctx();
  if (n == 1) {
    DenseMatrix x(1, 1, f);
    x(0, 0) = f.inv(a(0, 0));
    cfg.count(0, 0, 1);
    return x;
  }
  const std::size_t h = n / 2;
  const DenseMatrix bi = tri_inverse_rec(a.block(0, 0, h, h), t, cfg);
  const DenseMatrix di = tri_inverse_rec(a.block(h, h, h, h), t, cfg);
  DenseMatrix x(n, n, f);
  x.set_block(0, 0, bi);
  x.set_block(h, h, di);
  if (t == Triangle::lower) {
    const DenseMatrix c = a.block(h, 0, h, h);
    const DenseMatrix y =
        mat_mul_strassen(di, mat_mul_strassen(c, bi, cfg.strassen_cutoff, cfg.counter),
                         cfg.strassen_cutoff, cfg.counter);
    x.set_block(h, 0, mat_sub(DenseMatrix(h, h, f), y));
  } else {
    const DenseMatrix c = a.block(0, h, h, h);
    const DenseMatrix y =
        mat_mul_strassen(bi, mat_mul_strassen(c, di, cfg.strassen_cutoff, cfg.counter),
                         cfg.strassen_cutoff, cfg.counter);
    x.set_block(0, h, mat_sub(DenseMatrix(h, h, f), y));
  }
  return x;
}

}  // namespace

// ---- IndexSet / Permutation ----

IndexSet IndexSet::range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> idx;
  if (last > first) idx.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) idx.push_back(i);
  return IndexSet(std::move(idx));
}

IndexSet IndexSet::complement(const IndexSet& s, std::size_t n) {
  std::vector<char> taken(n, 0);
  for (std::size_t i : s) {
    if (i < n) taken[i] = 1;
  }
  std::vector<std::size_t> idx;
  idx.reserve(n - std::min(n, s.size()));
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) idx.push_back(i);
  }
  return IndexSet(std::move(idx));
}

bool IndexSet::distinct_within(std::size_t bound) const {
  std::vector<char> seen(bound, 0);
  for (std::size_t i : idx_) {
    if (i >= bound || seen[i]) return false;
    seen[i] = 1;
  }
  return true;
}

Permutation::Permutation(std::size_t n) : map_(n), inv_(n) {
  for (std::size_t i = 0; i < n; ++i) map_[i] = inv_[i] = i;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)), inv_(map_.size()) {
  if (!IndexSet(map_).distinct_within(map_.size())) {
    throw DimensionMismatch("permutation map is not a bijection");
  }
  for (std::size_t i = 0; i < map_.size(); ++i) inv_[map_[i]] = i;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.map_ = inv_;
  p.inv_ = map_;
  return p;
}

void Permutation::swap_images(std::size_t a, std::size_t b) {
  std::swap(map_[a], map_[b]);
  inv_[map_[a]] = a;
  inv_[map_[b]] = b;
}

// ---- DenseMatrix ----

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, const FieldContext& ctx)
    : rows_(rows), cols_(cols), ctx_(ctx), data_(rows * cols) {}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                         const FieldContext& ctx)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), ctx_(ctx) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (auto v : r) data_.push_back(ctx.element(v));
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n, const FieldContext& ctx) {
  DenseMatrix m(n, n, ctx);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ctx.one();
  return m;
}

FieldElement DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DimensionMismatch("index (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (*this)(i, j);
}

DenseMatrix DenseMatrix::submatrix(const IndexSet& rows, const IndexSet& cols) const {
  DenseMatrix out(rows.size(), cols.size(), ctx_);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const FieldElement* src = row_data(rows[a]);
    FieldElement* dst = out.row_data(a);
    for (std::size_t b = 0; b < cols.size(); ++b) dst[b] = src[cols[b]];
  }
  return out;
}

void DenseMatrix::set_submatrix(const IndexSet& rows, const IndexSet& cols, const DenseMatrix& m) {
  if (m.rows() != rows.size() || m.cols() != cols.size()) {
    throw DimensionMismatch("submatrix assignment of " + shape(m) + " into " +
                            std::to_string(rows.size()) + "x" + std::to_string(cols.size()));
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    FieldElement* dst = row_data(rows[a]);
    const FieldElement* src = m.row_data(a);
    for (std::size_t b = 0; b < cols.size(); ++b) dst[cols[b]] = src[b];
  }
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block outside matrix");
  DenseMatrix out(nr, nc, ctx_);
  for (std::size_t i = 0; i < nr; ++i) {
    std::copy_n(row_data(r0 + i) + c0, nc, out.row_data(i));
  }
  return out;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
    throw DimensionMismatch("block assignment outside matrix");
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy_n(m.row_data(i), m.cols(), row_data(r0 + i) + c0);
  }
}

void DenseMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void DenseMatrix::add_scaled_column(std::size_t dst, std::size_t src, FieldElement alpha,
                                    std::size_t row_begin, std::size_t row_end) {
  if (alpha.is_zero()) return;
  for (std::size_t i = row_begin; i < row_end; ++i) {
    FieldElement& d = (*this)(i, dst);
    d = ctx_.add(d, ctx_.mul(alpha, (*this)(i, src)));
  }
}

void DenseMatrix::add_scaled_row(std::size_t dst, std::size_t src, FieldElement alpha) {
  if (alpha.is_zero()) return;
  FieldElement* d = row_data(dst);
  const FieldElement* s = row_data(src);
  for (std::size_t j = 0; j < cols_; ++j) d[j] = ctx_.add(d[j], ctx_.mul(alpha, s[j]));
}

bool DenseMatrix::column_is_zero(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, j).is_zero()) return false;
  }
  return true;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_, ctx_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

// ---- products ----

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot add " + shape(a) + " and " + shape(b));
  }
  DenseMatrix c(a.rows(), a.cols(), a.ctx());
  const auto& f = a.ctx();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  }
  cfg.count(0, a.rows() * a.cols());
  return c;
}

DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("cannot subtract " + shape(b) + " from " + shape(a));
  }
  DenseMatrix c(a.rows(), a.cols(), a.ctx());
  const auto& f = a.ctx();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  }
  cfg.count(0, a.rows() * a.cols());
  return c;
}

DenseMatrix mat_mul_naive(const DenseMatrix& a, const DenseMatrix& b, OpCounter* counter) {
  require_product_shape(a, b);
  const std::size_t r = a.rows(), k = a.cols(), c = b.cols();
  DenseMatrix out(r, c, a.ctx());
  // Each product is below 2^32, so 64-bit accumulators absorb any k < 2^32.
  std::vector<std::uint64_t> acc(c);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const FieldElement* arow = a.row_data(i);
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint64_t x = arow[t].value;
      if (x == 0) continue;
      const FieldElement* brow = b.row_data(t);
      for (std::size_t j = 0; j < c; ++j) acc[j] += x * brow[j].value;
    }
    FieldElement* orow = out.row_data(i);
    for (std::size_t j = 0; j < c; ++j) orow[j] = a.ctx().reduce(acc[j]);
  }
  if (counter) {
    counter->mul_count += r * k * c;
    counter->add_count += r * k * c;
  }
  return out;
}

DenseMatrix mat_mul_strassen(const DenseMatrix& a, const DenseMatrix& b, std::size_t cutoff,
                             OpCounter* counter) {
  require_product_shape(a, b);
  const std::size_t n = std::max({a.rows(), a.cols(), b.cols()});
  if (n <= cutoff || a.rows() == 0 || a.cols() == 0 || b.cols() == 0) {
    return mat_mul_naive(a, b, counter);
  }
  const std::size_t m = strassen_size(n, cutoff);
  const DenseMatrix c = strassen_square(pad_to(a, m, m), pad_to(b, m, m), cutoff, counter);
  return c.rows() == a.rows() && c.cols() == b.cols() ? c : c.block(0, 0, a.rows(), b.cols());
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg) {
  require_product_shape(a, b);
  const std::size_t r = a.rows(), k = a.cols(), c = b.cols();
  const std::size_t s = std::min({r, k, c});
  if (s <= cfg.strassen_cutoff) return mat_mul_naive(a, b, cfg.counter);
  DenseMatrix out(r, c, a.ctx());
  for (std::size_t i0 = 0; i0 < r; i0 += s) {
    const std::size_t ni = std::min(s, r - i0);
    for (std::size_t j0 = 0; j0 < c; j0 += s) {
      const std::size_t nj = std::min(s, c - j0);
      for (std::size_t t0 = 0; t0 < k; t0 += s) {
        const std::size_t nt = std::min(s, k - t0);
        const DenseMatrix prod = mat_mul_strassen(a.block(i0, t0, ni, nt), b.block(t0, j0, nt, nj),
                                                  cfg.strassen_cutoff, cfg.counter);
        if (t0 == 0) {
          out.set_block(i0, j0, prod);
        } else {
          add_into(out, i0, j0, prod, cfg);
        }
      }
    }
  }
  return out;
}

DenseMatrix mat_mul_rect(const DenseMatrix& b, const DenseMatrix& c, const KernelConfig& cfg) {
  require_product_shape(b, c);
  if (!c.square()) throw DimensionMismatch("right factor must be square, got " + shape(c));
  const std::size_t k = c.rows();
  if (k == 0) return DenseMatrix(b.rows(), 0, b.ctx());
  DenseMatrix out(b.rows(), k, b.ctx());
  for (std::size_t i0 = 0; i0 < b.rows(); i0 += k) {
    const std::size_t ni = std::min(k, b.rows() - i0);
    out.set_block(i0, 0, mat_mul_strassen(b.block(i0, 0, ni, k), c, cfg.strassen_cutoff,
                                          cfg.counter));
  }
  return out;
}

DenseMatrix mat_mul_rect_wide(const DenseMatrix& c, const DenseMatrix& b,
                              const KernelConfig& cfg) {
  require_product_shape(c, b);
  if (!c.square()) throw DimensionMismatch("left factor must be square, got " + shape(c));
  const std::size_t k = c.rows();
  if (k == 0) return DenseMatrix(0, b.cols(), b.ctx());
  DenseMatrix out(k, b.cols(), b.ctx());
  for (std::size_t j0 = 0; j0 < b.cols(); j0 += k) {
    const std::size_t nj = std::min(k, b.cols() - j0);
    out.set_block(0, j0, mat_mul_strassen(c, b.block(0, j0, k, nj), cfg.strassen_cutoff,
                                          cfg.counter));
  }
  return out;
}

// ---- permutations ----

DenseMatrix apply_row_perm(const Permutation& p, const DenseMatrix& m) {
  if (p.size() != m.rows()) throw DimensionMismatch("row permutation size mismatch");
  DenseMatrix out(m.rows(), m.cols(), m.ctx());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy_n(m.row_data(i), m.cols(), out.row_data(p(i)));
  }
  return out;
}

DenseMatrix apply_col_perm(const DenseMatrix& m, const Permutation& p) {
  if (p.size() != m.cols()) throw DimensionMismatch("column permutation size mismatch");
  DenseMatrix out(m.rows(), m.cols(), m.ctx());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const FieldElement* src = m.row_data(i);
    FieldElement* dst = out.row_data(i);
    for (std::size_t j = 0; j < m.cols(); ++j) dst[p(j)] = src[j];
  }
  return out;
}

// ---- triangular inversion ----

bool is_triangular(const DenseMatrix& a, Triangle orientation) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const bool forbidden = orientation == Triangle::lower ? j > i : j < i;
      if (forbidden && !a(i, j).is_zero()) return false;
    }
  }
  return true;
}

DenseMatrix tri_inverse(const DenseMatrix& a, Triangle orientation, const KernelConfig& cfg) {
  if (!a.square()) throw DimensionMismatch("cannot invert non-square " + shape(a));
  if (!is_triangular(a, orientation)) {
    throw NotTriangular(std::string("matrix is not ") +
                        (orientation == Triangle::lower ? "lower" : "upper") + " triangular");
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).is_zero()) {
      throw SingularMatrix("zero diagonal entry at " + std::to_string(i));
    }
  }
  if (n == 0) return a;
  const std::size_t m = std::bit_ceil(n);
  if (m == n) return tri_inverse_rec(a, orientation, cfg);
  DenseMatrix padded = DenseMatrix::identity(m, a.ctx());
  padded.set_block(0, 0, a);
  return tri_inverse_rec(padded, orientation, cfg).block(0, 0, n, n);
}

DenseMatrix schur_update(DenseMatrix& r, const IndexSet& lbar, const IndexSet& l,
                         const IndexSet& b, const IndexSet& c, const KernelConfig& cfg) {
  if (l.size() != b.size()) {
    throw DimensionMismatch("pivot block must be square: |L| = " + std::to_string(l.size()) +
                            ", |B| = " + std::to_string(b.size()));
  }
  const DenseMatrix pivot_inv = tri_inverse(r.submatrix(l, b), Triangle::lower, cfg);
  const DenseMatrix lambda = mat_mul(pivot_inv, r.submatrix(l, c), cfg);
  const DenseMatrix update = mat_mul(r.submatrix(lbar, b), lambda, cfg);
  r.set_submatrix(lbar, c, mat_sub(r.submatrix(lbar, c), update, cfg));
  r.set_submatrix(l, c, DenseMatrix(l.size(), c.size(), r.ctx()));
  return lambda;
}

}  // namespace fastph
