#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "fastph/field.hpp"

namespace fastph {

/// Field-operation tallies. Kernels add the nominal work of each dense
/// product (zeros are not skipped in the count).
struct OpCounter {
  std::uint64_t mul_count = 0;
  std::uint64_t add_count = 0;
  std::uint64_t inv_count = 0;

  OpCounter& operator+=(const OpCounter& o) {
    mul_count += o.mul_count;
    add_count += o.add_count;
    inv_count += o.inv_count;
    return *this;
  }
};

struct KernelConfig {
  std::size_t strassen_cutoff = 64;
  OpCounter* counter = nullptr;

  void count(std::uint64_t muls, std::uint64_t adds, std::uint64_t invs = 0) const {
    if (counter) {
      counter->mul_count += muls;
      counter->add_count += adds;
      counter->inv_count += invs;
    }
  }
};

/// Ordered list of row or column indices.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {}
  IndexSet(std::initializer_list<std::size_t> idx) : idx_(idx) {}

  /// {first, first+1, ..., last-1}
  static IndexSet range(std::size_t first, std::size_t last);
  /// Indices of [0, n) not in `s`, ascending.
  static IndexSet complement(const IndexSet& s, std::size_t n);

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  std::size_t operator[](std::size_t k) const { return idx_[k]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  void push_back(std::size_t i) { idx_.push_back(i); }
  const std::vector<std::size_t>& indices() const { return idx_; }

  bool distinct_within(std::size_t bound) const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> idx_;
};

/// Bijection on [0, n); `(*this)(i)` is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n);
  /// Throws DimensionMismatch unless `map` is a bijection.
  explicit Permutation(std::vector<std::size_t> map);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  /// Preimage of `y`.
  std::size_t preimage(std::size_t y) const { return inv_[y]; }

  Permutation inverse() const;
  /// Swaps the images of a and b.
  void swap_images(std::size_t a, std::size_t b);
  /// Swaps the preimages of positions x and y.
  void swap_preimages(std::size_t x, std::size_t y) { swap_images(inv_[x], inv_[y]); }

  const std::vector<std::size_t>& map() const { return map_; }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.map_ == b.map_; }

 private:
  std::vector<std::size_t> map_;
  std::vector<std::size_t> inv_;
};

/// Dense row-major matrix over F_p.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const FieldContext& ctx);
  /// Entries given as integers, reduced mod p. All rows must have equal length.
  DenseMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
              const FieldContext& ctx);

  static DenseMatrix identity(std::size_t n, const FieldContext& ctx);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldContext& ctx() const { return ctx_; }
  bool square() const { return rows_ == cols_; }

  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  /// Bounds-checked access; throws DimensionMismatch.
  FieldElement at(std::size_t i, std::size_t j) const;

  FieldElement* row_data(std::size_t i) { return data_.data() + i * cols_; }
  const FieldElement* row_data(std::size_t i) const { return data_.data() + i * cols_; }

  DenseMatrix submatrix(const IndexSet& rows, const IndexSet& cols) const;
  void set_submatrix(const IndexSet& rows, const IndexSet& cols, const DenseMatrix& m);
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& m);

  void swap_columns(std::size_t a, std::size_t b);
  /// column dst += alpha * column src, on rows [row_begin, row_end).
  void add_scaled_column(std::size_t dst, std::size_t src, FieldElement alpha,
                         std::size_t row_begin, std::size_t row_end);
  void add_scaled_column(std::size_t dst, std::size_t src, FieldElement alpha) {
    add_scaled_column(dst, src, alpha, 0, rows_);
  }
  /// row dst += alpha * row src.
  void add_scaled_row(std::size_t dst, std::size_t src, FieldElement alpha);

  bool column_is_zero(std::size_t j) const;
  bool is_zero() const;

  DenseMatrix transpose() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ctx_ == b.ctx_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldContext ctx_{};
  std::vector<FieldElement> data_;
};

std::ostream& operator<<(std::ostream& os, const DenseMatrix& m);

/// a + b and a - b, entrywise.
DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg = {});
DenseMatrix mat_sub(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg = {});

DenseMatrix mat_mul_naive(const DenseMatrix& a, const DenseMatrix& b, OpCounter* counter = nullptr);

/// Strassen product. Operands are zero-padded to a common square size that
/// halves evenly down to at most `cutoff`; at or below the cutoff the naive
/// kernel is used. Padding never reaches the caller.
DenseMatrix mat_mul_strassen(const DenseMatrix& a, const DenseMatrix& b, std::size_t cutoff = 64,
                             OpCounter* counter = nullptr);

/// (n x k) * (k x k) as ceil(n/k) stacked square products.
DenseMatrix mat_mul_rect(const DenseMatrix& b, const DenseMatrix& c, const KernelConfig& cfg = {});

/// (k x k) * (k x q) as ceil(q/k) side-by-side square products.
DenseMatrix mat_mul_rect_wide(const DenseMatrix& c, const DenseMatrix& b,
                              const KernelConfig& cfg = {});

/// General product: tiles the operands into squares of the smallest
/// dimension and multiplies tiles with Strassen.
DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b, const KernelConfig& cfg = {});

/// Row i of `m` moves to row p(i).
DenseMatrix apply_row_perm(const Permutation& p, const DenseMatrix& m);
/// Column j of `m` moves to column p(j).
DenseMatrix apply_col_perm(const DenseMatrix& m, const Permutation& p);

enum class Triangle { lower, upper };

/// Inverse of a triangular matrix by block recursion with two products per
/// level. Sizes that are not powers of two are padded with an identity block.
/// Throws NotTriangular or SingularMatrix.
DenseMatrix tri_inverse(const DenseMatrix& a, Triangle orientation, const KernelConfig& cfg = {});

bool is_triangular(const DenseMatrix& a, Triangle orientation);

/// Block elimination of R[L, C] against the pivot block R[L, B], with L ordered
/// so that R[L, B] is lower triangular. Computes
///   Lambda = R[L,B]^{-1} R[L,C],  R[Lbar,C] -= R[Lbar,B] Lambda,  R[L,C] = 0
/// and returns Lambda.
DenseMatrix schur_update(DenseMatrix& r, const IndexSet& lbar, const IndexSet& l,
                         const IndexSet& b, const IndexSet& c, const KernelConfig& cfg = {});

}  // namespace fastph
