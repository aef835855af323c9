#pragma once

#include <optional>
#include <vector>

#include "fastph/matrix.hpp"

namespace fastph::detail {

std::vector<std::optional<std::size_t>> low_map_of(const DenseMatrix& r);

/// column dst += alpha * column src on rows [0, row_end), tallied.
void column_op(DenseMatrix& m, std::size_t dst, std::size_t src, FieldElement alpha,
               std::size_t row_end, OpCounter& counter);

}  // namespace fastph::detail
