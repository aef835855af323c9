#include "fastph/persistence.hpp"

#include <algorithm>

namespace fastph {

namespace {

Chain column_chain(const DenseMatrix& m, std::size_t j, int dim) {
  Chain c;
  c.dim = dim;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, j).is_zero()) c.coefficients.emplace(i + 1, m(i, j));
  }
  return c;
}

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed ? std::string{} : std::move(detail)};
}

std::string at(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// First entry where a != b, or empty.
std::string first_difference(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape differs";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return "first difference at " + at(i, j);
    }
  }
  return {};
}

}  // namespace

bool pair_less(const PersistencePair& a, const PersistencePair& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
  return a.death < b.death;
}

PersistenceDiagram extract_diagram(const Decomposition& dec, const std::vector<int>& dims) {
  const std::size_t n = dec.n;
  PersistenceDiagram dgm;
  std::vector<char> is_pivot(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (const auto i = dec.low_map[j]) {
      is_pivot[*i] = 1;
      dgm.push_back({*i + 1, j + 1, dims[*i]});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!dec.low_map[i] && !is_pivot[i]) dgm.push_back({i + 1, std::nullopt, dims[i]});
  }
  std::sort(dgm.begin(), dgm.end(), pair_less);
  return dgm;
}

std::vector<SimplexSign> classify_simplices(const Decomposition& dec) {
  std::vector<SimplexSign> sign(dec.n);
  for (std::size_t j = 0; j < dec.n; ++j) {
    sign[j] = dec.low_map[j] ? SimplexSign::negative : SimplexSign::positive;
  }
  return sign;
}

RepresentativeSet extract_v_representatives(const Decomposition& dec,
                                            const std::vector<int>& dims) {
  RepresentativeSet reps;
  reps.source = RepresentativeSource::v;
  for (std::size_t j = 0; j < dec.n; ++j) {
    if (dec.low_map[j]) {
      reps.pivots[*dec.low_map[j] + 1] = j + 1;
    } else {
      reps.v_basis.emplace(j + 1, column_chain(dec.V, j, dims[j]));
    }
  }
  return reps;
}

RepresentativeSet extract_r_representatives(const Decomposition& dec,
                                            const std::vector<int>& dims) {
  RepresentativeSet reps;
  reps.source = RepresentativeSource::r;
  for (std::size_t j = 0; j < dec.n; ++j) {
    if (const auto i = dec.low_map[j]) {
      reps.r_basis.emplace(j + 1, column_chain(dec.R, j, dims[j] - 1));
      reps.pivots[j + 1] = *i + 1;
    }
  }
  return reps;
}

CohomologyResult extract_cocycles(const BoundaryMatrix& d, Algorithm algorithm,
                                  const ReductionOptions& opts) {
  const std::size_t n = d.n;
  CohomologyResult out;
  out.dual = reduce(antitranspose(d), algorithm, opts);
  out.cocycles.source = RepresentativeSource::v;
  out.cocycles.side = Side::cohomology;
  const auto& dual = out.dual;

  auto cocycle = [&](std::size_t col, int dim) {
    Chain c;
    c.dim = dim;
    for (std::size_t k = 0; k < n; ++k) {
      if (!dual.V(k, col).is_zero()) c.coefficients.emplace(n - k, dual.V(k, col));
    }
    return c;
  };

  std::vector<char> is_pivot(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (const auto i = dual.low_map[j]) is_pivot[*i] = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t birth = n - j;  // 1-based index of simplex n-1-j
    const int dim = d.dims[birth - 1];
    if (const auto i = dual.low_map[j]) {
      const std::size_t death = n - *i;
      out.diagram.push_back({birth, death, dim});
      out.cocycles.v_basis.emplace(birth, cocycle(j, dim));
      out.cocycles.pivots[birth] = death;
      Chain cob;
      cob.dim = dim + 1;
      for (std::size_t k = 0; k < n; ++k) {
        if (!dual.R(k, j).is_zero()) cob.coefficients.emplace(n - k, dual.R(k, j));
      }
      out.cocycles.r_basis.emplace(death, std::move(cob));
      out.cocycles.pivots[death] = birth;
    } else if (!is_pivot[j]) {
      out.diagram.push_back({birth, std::nullopt, dim});
      out.cocycles.v_basis.emplace(birth, cocycle(j, dim));
    }
  }
  std::sort(out.diagram.begin(), out.diagram.end(), pair_less);
  return out;
}

Chain boundary(const BoundaryMatrix& d, const Chain& c) {
  const auto& f = d.matrix.ctx();
  std::vector<FieldElement> acc(d.n);
  for (const auto& [j, coef] : c.coefficients) {
    for (std::size_t i = 0; i < d.n; ++i) acc[i] = f.add(acc[i], f.mul(d.matrix(i, j - 1), coef));
  }
  Chain out;
  out.dim = c.dim - 1;
  for (std::size_t i = 0; i < d.n; ++i) {
    if (!acc[i].is_zero()) out.coefficients.emplace(i + 1, acc[i]);
  }
  return out;
}

Chain coboundary(const BoundaryMatrix& d, const Chain& c) {
  const auto& f = d.matrix.ctx();
  std::vector<FieldElement> acc(d.n);
  for (const auto& [i, coef] : c.coefficients) {
    for (std::size_t j = 0; j < d.n; ++j) acc[j] = f.add(acc[j], f.mul(d.matrix(i - 1, j), coef));
  }
  Chain out;
  out.dim = c.dim + 1;
  for (std::size_t j = 0; j < d.n; ++j) {
    if (!acc[j].is_zero()) out.coefficients.emplace(j + 1, acc[j]);
  }
  return out;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_decomposition(const BoundaryMatrix& d, const Decomposition& dec,
                                        std::optional<ReductionMode> as_mode) {
  VerificationReport report;
  const std::size_t n = d.n;
  const auto& f = d.matrix.ctx();
  const bool shapes = dec.n == n && dec.R.rows() == n && dec.R.cols() == n && dec.V.rows() == n &&
                      dec.V.cols() == n && dec.U.rows() == n && dec.U.cols() == n &&
                      dec.low_map.size() == n;
  report.checks.push_back(check("shapes", shapes, "decomposition does not match n"));
  if (!shapes) return report;

  const DenseMatrix id = DenseMatrix::identity(n, f);
  std::string diff = first_difference(mat_mul_naive(d.matrix, dec.V), dec.R);
  report.checks.push_back(check("R = DV", diff.empty(), diff));
  diff = first_difference(mat_mul_naive(dec.U, dec.V), id);
  report.checks.push_back(check("UV = I", diff.empty(), diff));
  diff = first_difference(mat_mul_naive(dec.V, dec.U), id);
  report.checks.push_back(check("VU = I", diff.empty(), diff));

  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i) {
    for (std::size_t j = 0; j <= i && bad.empty(); ++j) {
      const FieldElement want = i == j ? f.one() : f.zero();
      if (dec.V(i, j) != want) bad = "entry " + at(i, j);
    }
  }
  report.checks.push_back(check("V unit upper triangular", bad.empty(), bad));

  bad.clear();
  std::vector<std::optional<std::size_t>> owner(n);
  for (std::size_t j = 0; j < n && bad.empty(); ++j) {
    if (dec.low_map[j] != low(dec.R, j)) {
      bad = "column " + std::to_string(j);
      break;
    }
  }
  report.checks.push_back(check("low map matches R", bad.empty(), bad));

  bad.clear();
  for (std::size_t j = 0; j < n && bad.empty(); ++j) {
    const auto i = low(dec.R, j);
    if (!i) continue;
    if (owner[*i]) bad = "row " + std::to_string(*i) + " is the low of columns " +
                         std::to_string(*owner[*i]) + " and " + std::to_string(j);
    owner[*i] = j;
  }
  report.checks.push_back(check("low injective", bad.empty(), bad));

  diff = mat_mul_naive(d.matrix, dec.R).is_zero() ? "" : "DR has a nonzero entry";
  report.checks.push_back(check("DR = 0", diff.empty(), diff));

  bad.clear();
  for (std::size_t j = 0; j < n && bad.empty(); ++j) {
    if (low(dec.R, j)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != j && !dec.V(i, j).is_zero() && !low(dec.R, i)) {
        bad = "positive column " + std::to_string(j) + " uses positive simplex " + std::to_string(i);
        break;
      }
    }
  }
  report.checks.push_back(check("MSA support", bad.empty(), bad));

  if (as_mode.value_or(dec.mode) == ReductionMode::exhaustive) {
    bad.clear();
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const auto i = low(dec.R, j);
      if (!i) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!dec.R(*i, k).is_zero()) {
          bad = "pivot row " + std::to_string(*i) + " nonzero at " + at(*i, k);
          break;
        }
      }
    }
    report.checks.push_back(check("pivot rows cleared", bad.empty(), bad));
  }
  return report;
}

std::vector<LevelPair> level_diagram(const PersistenceDiagram& dgm,
                                     const std::vector<double>& levels) {
  std::vector<LevelPair> out;
  out.reserve(dgm.size());
  for (const auto& p : dgm) {
    LevelPair lp;
    lp.birth = levels.at(p.birth - 1);
    lp.dim = p.dim;
    if (p.death) {
      lp.death = levels.at(*p.death - 1);
      lp.zero_persistence = *lp.death == lp.birth;
    }
    out.push_back(lp);
  }
  return out;
}

}  // namespace fastph
