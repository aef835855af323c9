#include <bit>
#include <string>

#include "fastph/reductions.hpp"
#include "reductions/common.hpp"

namespace fastph {

namespace {

// Rows are processed bottom-up: step s handles row W-1-s. Columns keep their
// original storage order; P records each column's position in the order in
// which columns become pivots.
class FastRow {
 public:
  FastRow(const BoundaryMatrix& d, const ReductionOptions& opts)
      : n_(d.n),
        w_(std::bit_ceil(d.n)),
        t_(d.n + w_),
        leaf_(std::max<std::size_t>(opts.leaf_size, 1)),
        f_(d.matrix.ctx()),
        r_(w_, t_, f_),
        lambda_(DenseMatrix::identity(t_, f_)),
        p_(t_) {
    cfg_ = KernelConfig{opts.strassen_cutoff, &counter_};
    r_.set_block(0, 0, d.matrix);
    for (std::size_t i = 0; i < w_; ++i) r_(i, n_ + i) = f_.one();
  }

  std::pair<Decomposition, FastRowState> run() {
    recurse(0, w_);
    const IndexSet orig = IndexSet::range(0, n_);
    Decomposition dec;
    dec.R = r_.block(0, 0, n_, n_);
    dec.U = recover_U(lambda_.submatrix(orig, orig));
    try {
      dec.V = tri_inverse(dec.U, Triangle::upper, cfg_);
    } catch (const NotTriangular&) {
      throw InternalInvariantViolation("recovered U is not upper triangular");
    }
    dec.mode = ReductionMode::lazy;
    dec.n = n_;
    dec.low_map = detail::low_map_of(dec.R);
    dec.counter = counter_;
    return {std::move(dec), FastRowState{std::move(r_), std::move(lambda_), std::move(p_)}};
  }

 private:
  std::size_t row_of(std::size_t step) const { return w_ - 1 - step; }

  IndexSet pivots(std::size_t first, std::size_t last) const {
    IndexSet s;
    for (std::size_t k = first; k < last; ++k) s.push_back(p_.preimage(k));
    return s;
  }

  void recurse(std::size_t a, std::size_t b) {
    if (b - a <= leaf_) {
      leaf(a, b);
      return;
    }
    const std::size_t mid = a + (b - a) / 2;
    recurse(a, mid);

    // Carry the eliminations of B into the rows of C on every column not yet
    // a pivot.
    const IndexSet rows_c = IndexSet::range(row_of(b - 1), row_of(mid - 1));
    const IndexSet piv_b = pivots(a, mid);
    IndexSet open;
    for (std::size_t c = 0; c < t_; ++c) {
      if (p_(c) >= mid) open.push_back(c);
    }
    const DenseMatrix delta =
        mat_mul_rect_wide(r_.submatrix(rows_c, piv_b), lambda_.submatrix(piv_b, open), cfg_);
    r_.set_submatrix(rows_c, open, mat_add(r_.submatrix(rows_c, open), delta, cfg_));

    recurse(mid, b);

    // Rows above this block: the pivot columns of C pick up B's operations,
    // chained through C's own operations.
    const std::size_t top = row_of(b - 1);
    if (top == 0) return;
    const IndexSet rows_top = IndexSet::range(0, top);
    const IndexSet piv_c = pivots(mid, b);
    DenseMatrix chain = recover_U(lambda_.submatrix(piv_c, piv_c));
    try {
      chain = tri_inverse(chain, Triangle::upper, cfg_);
    } catch (const NotTriangular&) {
      throw InternalInvariantViolation("operations of row block [" + std::to_string(mid) + ", " +
                                       std::to_string(b) + ") are not ordered");
    }
    const DenseMatrix step =
        mat_mul_rect(r_.submatrix(rows_top, piv_b), lambda_.submatrix(piv_b, piv_c), cfg_);
    const DenseMatrix update = mat_mul_rect(step, chain, cfg_);
    r_.set_submatrix(rows_top, piv_c, mat_add(r_.submatrix(rows_top, piv_c), update, cfg_));
  }

  void leaf(std::size_t a, std::size_t b) {
    for (std::size_t s = a; s < b; ++s) {
      const std::size_t r = row_of(s);
      std::optional<std::size_t> k;
      for (std::size_t c = 0; c < t_ && !k; ++c) {
        if (p_(c) >= s && !r_(r, c).is_zero()) k = c;
      }
      if (!k) throw InternalInvariantViolation("row " + std::to_string(r) + " has no pivot");
      p_.swap_images(*k, p_.preimage(s));

      const FieldElement pivot_inv = f_.inv(r_(r, *k));
      ++counter_.inv_count;
      for (std::size_t c = 0; c < t_; ++c) {
        if (p_(c) <= s || r_(r, c).is_zero()) continue;
        const FieldElement coef = f_.neg(f_.mul(r_(r, c), pivot_inv));
        lambda_(*k, c) = coef;
        for (std::size_t u = s + 1; u < b; ++u) {
          const std::size_t ru = row_of(u);
          r_(ru, c) = f_.add(r_(ru, c), f_.mul(r_(ru, *k), coef));
        }
        counter_.mul_count += b - s;
        counter_.add_count += b - s - 1;
        r_(r, c) = f_.zero();
      }
    }
    // Rows above the leaf, on the leaf's own pivot columns, in pivot order.
    const std::size_t top = row_of(b - 1);
    for (std::size_t s1 = a; s1 < b; ++s1) {
      const std::size_t src = p_.preimage(s1);
      for (std::size_t s2 = s1 + 1; s2 < b; ++s2) {
        const std::size_t dst = p_.preimage(s2);
        const FieldElement coef = lambda_(src, dst);
        if (!coef.is_zero()) detail::column_op(r_, dst, src, coef, top, counter_);
      }
    }
  }

  std::size_t n_, w_, t_, leaf_;
  FieldContext f_;
  DenseMatrix r_, lambda_;
  Permutation p_;
  OpCounter counter_;
  KernelConfig cfg_;
};

}  // namespace

std::pair<Decomposition, FastRowState> run_fast_row(const BoundaryMatrix& d,
                                                    const ReductionOptions& opts) {
  if (d.n == 0) {
    const auto& f = d.matrix.ctx();
    Decomposition dec{DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), {},
                      ReductionMode::lazy, 0, {}};
    return {std::move(dec), FastRowState{DenseMatrix(0, 0, f), DenseMatrix(0, 0, f), {}}};
  }
  return FastRow(d, opts).run();
}

Decomposition reduce_fast_row(const BoundaryMatrix& d, const ReductionOptions& opts) {
  return run_fast_row(d, opts).first;
}

}  // namespace fastph
