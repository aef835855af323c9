#include <bit>
#include <string>

#include "fastph/reductions.hpp"
#include "reductions/common.hpp"

namespace fastph {

namespace {

class FastColumn {
 public:
  FastColumn(const BoundaryMatrix& d, const ReductionOptions& opts)
      : n_(d.n),
        w_(std::bit_ceil(d.n)),
        size_(2 * w_),
        leaf_(std::max<std::size_t>(opts.leaf_size, 1)),
        f_(d.matrix.ctx()),
        r_(size_, size_, f_),
        v_(DenseMatrix::identity(size_, f_)),
        perm_(size_),
        pivot_(size_),
        next_free_(w_) {
    cfg_ = KernelConfig{opts.strassen_cutoff, &counter_};
    r_.set_block(0, 0, d.matrix);
    for (std::size_t c = n_; c < size_; ++c) r_(c, c) = f_.one();
  }

  std::pair<Decomposition, FastColumnState> run() {
    recurse(0, w_);
    FastColumnState state{r_, v_, z_, perm_};
    for (auto it = z_.rbegin(); it != z_.rend(); ++it) {
      r_.swap_columns(it->first, it->second);
      v_.swap_columns(it->first, it->second);
    }
    Decomposition dec;
    dec.R = r_.block(0, 0, n_, n_);
    dec.V = v_.block(0, 0, n_, n_);
    dec.U = tri_inverse(dec.V, Triangle::upper, cfg_);
    dec.mode = ReductionMode::exhaustive;
    dec.n = n_;
    dec.low_map = detail::low_map_of(dec.R);
    dec.counter = counter_;
    return {std::move(dec), std::move(state)};
  }

 private:
  void recurse(std::size_t a, std::size_t b) {
    if (b - a <= leaf_) {
      leaf(a, b);
      return;
    }
    const std::size_t mid = a + (b - a) / 2;
    recurse(a, mid);

    const IndexSet cols_b = IndexSet::range(a, mid);
    const IndexSet cols_c = IndexSet::range(mid, b);
    IndexSet rows_l;
    for (std::size_t j = a; j < mid; ++j) rows_l.push_back(pivot_[j]);
    const IndexSet rows_lbar = IndexSet::complement(rows_l, size_);
    DenseMatrix lambda;
    try {
      lambda = schur_update(r_, rows_lbar, rows_l, cols_b, cols_c, cfg_);
    } catch (const NotTriangular&) {
      throw InternalInvariantViolation("pivot block of columns [" + std::to_string(a) + ", " +
                                       std::to_string(mid) + ") is not lower triangular");
    } catch (const SingularMatrix&) {
      throw InternalInvariantViolation("pivot block of columns [" + std::to_string(a) + ", " +
                                       std::to_string(mid) + ") is singular");
    }
    // V rows at or past `mid` are only reached by identity columns swapped in
    // at leaves, and those carry zero rows of Lambda.
    const IndexSet rows_v = IndexSet::range(0, mid);
    const DenseMatrix delta = mat_mul(v_.submatrix(rows_v, cols_b), lambda, cfg_);
    v_.set_submatrix(rows_v, cols_c, mat_sub(v_.submatrix(rows_v, cols_c), delta, cfg_));

    recurse(mid, b);
  }

  void leaf(std::size_t a, std::size_t b) {
    for (std::size_t j = a; j < b; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        if (!r_(pivot_[k], j).is_zero()) {
          throw InternalInvariantViolation("column " + std::to_string(j) +
                                           " reaches a leaf with an uncleared pivot row " +
                                           std::to_string(pivot_[k]));
        }
      }
      const auto i = low(r_, j);
      if (!i) {
        if (next_free_ >= size_) throw InternalInvariantViolation("identity block exhausted");
        const std::size_t l = next_free_++;
        r_.swap_columns(j, l);
        v_.swap_columns(j, l);
        z_.emplace_back(j, l);
        perm_.swap_images(j, l);
        pivot_[j] = l;
        continue;
      }
      pivot_[j] = *i;
      const FieldElement pivot_inv = f_.inv(r_(*i, j));
      ++counter_.inv_count;
      for (std::size_t k = j + 1; k < b; ++k) {
        if (r_(*i, k).is_zero()) continue;
        const FieldElement alpha = f_.neg(f_.mul(r_(*i, k), pivot_inv));
        detail::column_op(r_, k, j, alpha, *i + 1, counter_);
        detail::column_op(v_, k, j, alpha, j + 1, counter_);
      }
    }
  }

  std::size_t n_, w_, size_, leaf_;
  FieldContext f_;
  DenseMatrix r_, v_;
  Permutation perm_;
  std::vector<std::size_t> pivot_;
  std::vector<std::pair<std::size_t, std::size_t>> z_;
  std::size_t next_free_;
  OpCounter counter_;
  KernelConfig cfg_;
};

}  // namespace

std::pair<Decomposition, FastColumnState> run_fast_column(const BoundaryMatrix& d,
                                                          const ReductionOptions& opts) {
  if (d.n == 0) {
    const auto& f = d.matrix.ctx();
    Decomposition dec{DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), {},
                      ReductionMode::exhaustive, 0, {}};
    return {std::move(dec), FastColumnState{DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), {}, {}}};
  }
  return FastColumn(d, opts).run();
}

Decomposition reduce_fast_column(const BoundaryMatrix& d, const ReductionOptions& opts) {
  return run_fast_column(d, opts).first;
}

}  // namespace fastph
