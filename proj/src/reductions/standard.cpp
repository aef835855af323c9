#include <algorithm>

#include "fastph/reductions.hpp"
#include "reductions/common.hpp"

namespace fastph {

namespace detail {

std::vector<std::optional<std::size_t>> low_map_of(const DenseMatrix& r) {
  std::vector<std::optional<std::size_t>> lows(r.cols());
  for (std::size_t j = 0; j < r.cols(); ++j) lows[j] = low(r, j);
  return lows;
}

void column_op(DenseMatrix& m, std::size_t dst, std::size_t src, FieldElement alpha,
               std::size_t row_end, OpCounter& counter) {
  m.add_scaled_column(dst, src, alpha, 0, row_end);
  counter.mul_count += row_end;
  counter.add_count += row_end;
}

}  // namespace detail

using detail::column_op;

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::lazy: return "lazy";
    case Algorithm::exhaustive: return "exhaustive";
    case Algorithm::row_incremental: return "row-incremental";
    case Algorithm::fast_column: return "fast-column";
    case Algorithm::fast_row: return "fast-row";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

ReductionMode mode_of(Algorithm a) {
  return a == Algorithm::exhaustive || a == Algorithm::fast_column ? ReductionMode::exhaustive
                                                                     : ReductionMode::lazy;
}

std::optional<std::size_t> low(const DenseMatrix& r, std::size_t j) {
  for (std::size_t i = r.rows(); i-- > 0;) {
    if (!r(i, j).is_zero()) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> lft(const DenseMatrix& r, std::size_t i) {
  for (std::size_t j = 0; j < r.cols(); ++j) {
    if (!r(i, j).is_zero() && low(r, j) == i) return j;
  }
  return std::nullopt;
}

DenseMatrix recover_U(const DenseMatrix& lambda) {
  if (!lambda.square()) throw DimensionMismatch("Lambda must be square");
  const auto& f = lambda.ctx();
  DenseMatrix u(lambda.rows(), lambda.cols(), f);
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      u(i, j) = i == j ? f.sub(f.element(2), lambda(i, j)) : f.neg(lambda(i, j));
    }
  }
  return u;
}

Decomposition reduce_lazy(const BoundaryMatrix& d) {
  const std::size_t n = d.n;
  const auto& f = d.matrix.ctx();
  Decomposition dec{d.matrix, DenseMatrix::identity(n, f), DenseMatrix::identity(n, f), {},
                    ReductionMode::lazy, n, {}};
  std::vector<std::optional<std::size_t>> owner(n);  // pivot row -> column
  for (std::size_t j = 0; j < n; ++j) {
    auto l = low(dec.R, j);
    while (l && owner[*l]) {
      const std::size_t src = *owner[*l];
      const FieldElement alpha = f.div(dec.R(*l, j), dec.R(*l, src));
      ++dec.counter.inv_count;
      column_op(dec.R, j, src, f.neg(alpha), *l + 1, dec.counter);
      column_op(dec.V, j, src, f.neg(alpha), src + 1, dec.counter);
      dec.U.add_scaled_row(src, j, alpha);
      dec.counter.mul_count += n;
      l = low(dec.R, j);
    }
    if (l) owner[*l] = j;
  }
  dec.low_map = detail::low_map_of(dec.R);
  return dec;
}

Decomposition reduce_exhaustive(const BoundaryMatrix& d) {
  const std::size_t n = d.n;
  const auto& f = d.matrix.ctx();
  Decomposition dec{d.matrix, DenseMatrix::identity(n, f), DenseMatrix::identity(n, f), {},
                    ReductionMode::exhaustive, n, {}};
  for (std::size_t j = 0; j < n; ++j) {
    const auto i = low(dec.R, j);
    if (!i) continue;
    const FieldElement pivot_inv = f.inv(dec.R(*i, j));
    ++dec.counter.inv_count;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (dec.R(*i, k).is_zero()) continue;
      const FieldElement alpha = f.mul(dec.R(*i, k), pivot_inv);
      column_op(dec.R, k, j, f.neg(alpha), *i + 1, dec.counter);
      column_op(dec.V, k, j, f.neg(alpha), j + 1, dec.counter);
      dec.U.add_scaled_row(j, k, alpha);
      dec.counter.mul_count += n;
    }
  }
  dec.low_map = detail::low_map_of(dec.R);
  return dec;
}

Decomposition reduce_row_incremental(const BoundaryMatrix& d) {
  const std::size_t n = d.n;
  const auto& f = d.matrix.ctx();
  Decomposition dec{d.matrix, DenseMatrix::identity(n, f), DenseMatrix::identity(n, f), {},
                    ReductionMode::lazy, n, {}};
  // Cached lows; a column's low only moves up, and only when it is reduced.
  auto lows = detail::low_map_of(dec.R);
  for (std::size_t i = n; i-- > 0;) {
    std::optional<std::size_t> first;  // lft(i)
    for (std::size_t j = 0; j < n; ++j) {
      if (lows[j] != i) continue;
      if (!first) {
        first = j;
        continue;
      }
      const std::size_t src = *first;
      const FieldElement alpha = f.div(dec.R(i, j), dec.R(i, src));
      ++dec.counter.inv_count;
      column_op(dec.R, j, src, f.neg(alpha), i + 1, dec.counter);
      column_op(dec.V, j, src, f.neg(alpha), src + 1, dec.counter);
      dec.U.add_scaled_row(src, j, alpha);
      dec.counter.mul_count += n;
      lows[j].reset();
      for (std::size_t r = i; r-- > 0;) {
        if (!dec.R(r, j).is_zero()) {
          lows[j] = r;
          break;
        }
      }
    }
  }
  dec.low_map = std::move(lows);
  return dec;
}

Decomposition reduce(const BoundaryMatrix& d, Algorithm a, const ReductionOptions& opts) {
  switch (a) {
    case Algorithm::lazy: return reduce_lazy(d);
    case Algorithm::exhaustive: return reduce_exhaustive(d);
    case Algorithm::row_incremental: return reduce_row_incremental(d);
    case Algorithm::fast_column: return reduce_fast_column(d, opts);
    case Algorithm::fast_row: return reduce_fast_row(d, opts);
  }
  throw Error("unknown algorithm");
}

}  // namespace fastph
