#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fastph/filtration.hpp"
#include "fastph/reductions.hpp"

namespace fastph {

/// A persistence pair in 1-based filtration indices. `dim` is the dimension
/// of the birth simplex; an absent death means the class is essential.
struct PersistencePair {
  std::size_t birth = 0;
  std::optional<std::size_t> death;
  int dim = 0;

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// (dim, birth, death) with essential classes after finite ones.
bool pair_less(const PersistencePair& a, const PersistencePair& b);

using PersistenceDiagram = std::vector<PersistencePair>;

/// Sparse chain keyed by 1-based filtration index; stored coefficients are nonzero.
struct Chain {
  std::map<std::size_t, FieldElement> coefficients;
  int dim = 0;

  friend bool operator==(const Chain&, const Chain&) = default;
};

enum class RepresentativeSource { v, r };
enum class Side { homology, cohomology };

/// v_basis is keyed by birth index, r_basis by death index. `pivots` maps each
/// key to its partner index in the pair (absent for essential classes).
struct RepresentativeSet {
  std::map<std::size_t, Chain> v_basis;
  std::map<std::size_t, Chain> r_basis;
  std::map<std::size_t, std::size_t> pivots;
  RepresentativeSource source = RepresentativeSource::v;
  Side side = Side::homology;
};

enum class SimplexSign { positive, negative };

PersistenceDiagram extract_diagram(const Decomposition& dec, const std::vector<int>& dims);

std::vector<SimplexSign> classify_simplices(const Decomposition& dec);

RepresentativeSet extract_v_representatives(const Decomposition& dec, const std::vector<int>& dims);
RepresentativeSet extract_r_representatives(const Decomposition& dec, const std::vector<int>& dims);

struct CohomologyResult {
  PersistenceDiagram diagram;  // in filtration indices, same convention as homology
  RepresentativeSet cocycles;  // v_basis: whole V-perp columns by birth; r_basis: R-perp by death
  Decomposition dual;          // decomposition of the anti-transpose
};

/// Reduces the anti-transpose of `d` and maps everything back to filtration
/// indices. A cocycle of a finite pair is the V-perp column whose R-perp
/// column is nonzero; an essential cocycle is a V-perp column with zero R-perp
/// column whose index is nobody's pivot.
CohomologyResult extract_cocycles(const BoundaryMatrix& d, Algorithm algorithm,
                                  const ReductionOptions& opts = {});

/// D c and D^T c for a chain in 1-based indices.
Chain boundary(const BoundaryMatrix& d, const Chain& c);
Chain coboundary(const BoundaryMatrix& d, const Chain& c);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

/// Checks R = DV, UV = I, VU = I, V unit upper triangular, low injective,
/// low_map consistency, DR = 0, support of V's positive columns, and (for
/// exhaustive mode, or when `as_mode` asks for it) cleared pivot rows.
VerificationReport verify_decomposition(const BoundaryMatrix& d, const Decomposition& dec,
                                        std::optional<ReductionMode> as_mode = std::nullopt);

/// Pair mapped to filtration levels. Pairs born and killed at one level are
/// kept and flagged.
struct LevelPair {
  double birth = 0;
  std::optional<double> death;
  int dim = 0;
  bool zero_persistence = false;
};

std::vector<LevelPair> level_diagram(const PersistenceDiagram& dgm, const std::vector<double>& levels);

}  // namespace fastph
