#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fastph/filtration.hpp"
#include "fastph/matrix.hpp"

namespace fastph {

enum class ReductionMode { lazy, exhaustive };

enum class Algorithm { lazy, exhaustive, row_incremental, fast_column, fast_row };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::lazy, Algorithm::exhaustive,
                                               Algorithm::row_incremental, Algorithm::fast_column,
                                               Algorithm::fast_row};

std::string_view algorithm_name(Algorithm a);
/// Accepts the CLI spellings (lazy, exhaustive, row-incremental, fast-column, fast-row).
std::optional<Algorithm> parse_algorithm(std::string_view name);
ReductionMode mode_of(Algorithm a);

struct ReductionOptions {
  std::size_t leaf_size = 32;
  std::size_t strassen_cutoff = 64;
};

/// R = D V with V unit upper triangular and U = V^{-1}. All indices 0-based.
struct Decomposition {
  DenseMatrix R;
  DenseMatrix V;
  DenseMatrix U;
  std::vector<std::optional<std::size_t>> low_map;  // pivot row of each column
  ReductionMode mode = ReductionMode::lazy;
  std::size_t n = 0;
  OpCounter counter;
};

/// Largest row with a nonzero entry in column j.
std::optional<std::size_t> low(const DenseMatrix& r, std::size_t j);
/// Smallest column j with r(i, j) != 0 and low(r, j) == i.
std::optional<std::size_t> lft(const DenseMatrix& r, std::size_t i);

Decomposition reduce_lazy(const BoundaryMatrix& d);
Decomposition reduce_exhaustive(const BoundaryMatrix& d);
Decomposition reduce_row_incremental(const BoundaryMatrix& d);
Decomposition reduce_fast_column(const BoundaryMatrix& d, const ReductionOptions& opts = {});
Decomposition reduce_fast_row(const BoundaryMatrix& d, const ReductionOptions& opts = {});

Decomposition reduce(const BoundaryMatrix& d, Algorithm a, const ReductionOptions& opts = {});

/// Working state of the fast column reduction after the recursion finished
/// but before the zero-column swaps were undone.
struct FastColumnState {
  DenseMatrix R_padded;  // N x N, N = 2W, W = bit_ceil(n)
  DenseMatrix V_padded;
  std::vector<std::pair<std::size_t, std::size_t>> Z;  // (column, identity column) swaps in order
  Permutation col_perm;                                // composition of the Z swaps
};

/// Working state of the fast row reduction at the end of the recursion.
struct FastRowState {
  DenseMatrix R_padded;  // W x (n + W): [D over 0 | I_W]
  DenseMatrix Lambda;    // (n + W) square, original column indexing
  Permutation P;         // column -> position in the processing order
};

std::pair<Decomposition, FastColumnState> run_fast_column(const BoundaryMatrix& d,
                                                          const ReductionOptions& opts = {});
std::pair<Decomposition, FastRowState> run_fast_row(const BoundaryMatrix& d,
                                                    const ReductionOptions& opts = {});

/// 2I - Lambda.
DenseMatrix recover_U(const DenseMatrix& lambda);

}  // namespace fastph
