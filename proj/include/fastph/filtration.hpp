#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fastph/matrix.hpp"

namespace fastph {

struct Simplex {
  std::vector<std::uint32_t> vertices;  // strictly increasing

  Simplex() = default;
  /// Sorts the vertices; throws ParseError on repeats or an empty list.
  explicit Simplex(std::vector<std::uint32_t> v);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

std::string to_string(const Simplex& s);

/// Simplices in filtration order. Position k (0-based) is filtration index k+1.
struct Filtration {
  std::vector<Simplex> simplices;
  /// Present when built from leveled input; parallel to `simplices`.
  std::optional<std::vector<double>> levels;

  std::size_t size() const { return simplices.size(); }
};

struct LeveledSimplex {
  Simplex simplex;
  double level = 0.0;
  std::size_t line = 0;  // source line for diagnostics, 0 if none
};

/// Reads the .flt text format: one simplex per line, `#` comments, blank lines
/// skipped, or every line of the form `level <value> : <ids>`.
Filtration parse_filtration(std::string_view text);

/// Orders leveled simplices by (level, dimension, vertex list) and validates.
Filtration extend_partial_order(std::vector<LeveledSimplex> simplices);

/// Throws DuplicateSimplex or MissingFace. `lines[k]` (if given) is reported
/// for simplex k, otherwise k+1.
void validate_filtration(const Filtration& f, const std::vector<std::size_t>* lines = nullptr);

std::string serialize_filtration(const Filtration& f);

struct BoundaryMatrix {
  DenseMatrix matrix;
  std::size_t n = 0;
  std::vector<int> dims;
};

/// Column j is the signed boundary of simplex j, sum_i (-1)^i [v_0 .. ^v_i .. v_k].
BoundaryMatrix boundary_matrix(const Filtration& f, const FieldContext& ctx);

/// A_perp[i][j] = A[n-1-j][n-1-i] (0-based).
DenseMatrix antitranspose(const DenseMatrix& a);
BoundaryMatrix antitranspose(const BoundaryMatrix& d);

}  // namespace fastph
