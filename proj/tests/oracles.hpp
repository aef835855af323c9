#pragma once

// Independent reference computations used by the tests. These work on plain
// integer arrays and share no code with the library kernels.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fastph/filtration.hpp"
#include "fastph/matrix.hpp"

namespace oracle {

using Mat = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Fermat inverse; p prime.
inline std::int64_t inv(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

inline Mat to_mat(const fastph::DenseMatrix& m) {
  Mat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).value;
  return out;
}

inline fastph::DenseMatrix from_mat(const Mat& a, const fastph::FieldContext& f) {
  const std::size_t r = a.size(), c = r ? a[0].size() : 0;
  fastph::DenseMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.element(a[i][j]);
  return m;
}

inline Mat identity(std::size_t n) {
  Mat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  Mat out(r, std::vector<std::int64_t>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < k; ++t) s = (s + a[i][t] * b[t][j]) % p;
      out[i][j] = s;
    }
  return out;
}

inline Mat random_mat(std::size_t r, std::size_t c, std::int64_t p, std::mt19937_64& rng) {
  Mat m(r, std::vector<std::int64_t>(c));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
  return m;
}

// Random triangular matrix with nonzero diagonal (unit diagonal if `unit`).
inline Mat random_triangular(std::size_t n, std::int64_t p, bool lower, bool unit,
                             std::mt19937_64& rng) {
  Mat m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        m[i][j] = unit ? 1 : 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1));
      } else if (lower ? j < i : j > i) {
        m[i][j] = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
      }
    }
  return m;
}

inline std::optional<std::size_t> low(const Mat& r, std::size_t j) {
  for (std::size_t i = r.size(); i-- > 0;)
    if (r[i][j] != 0) return i;
  return std::nullopt;
}

struct RV {
  Mat R, V;
};

// Column-at-a-time reduction written from the definitions: lazy eliminates
// only colliding lows; exhaustive clears each new pivot row to the right.
inline RV reduce(const Mat& d, std::int64_t p, bool exhaustive) {
  const std::size_t n = d.size();
  RV out{d, identity(n)};
  auto& R = out.R;
  auto& V = out.V;
  auto axpy = [&](Mat& m, std::size_t dst, std::size_t src, std::int64_t a) {
    for (std::size_t i = 0; i < n; ++i) m[i][dst] = mod(m[i][dst] - a * m[i][src], p);
  };
  if (!exhaustive) {
    for (std::size_t j = 0; j < n; ++j) {
      for (;;) {
        const auto l = low(R, j);
        if (!l) break;
        std::optional<std::size_t> src;
        for (std::size_t k = 0; k < j; ++k)
          if (low(R, k) == l) src = k;
        if (!src) break;
        const std::int64_t a = R[*l][j] * inv(R[*l][*src], p) % p;
        axpy(R, j, *src, a);
        axpy(V, j, *src, a);
      }
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      const auto l = low(R, j);
      if (!l) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (R[*l][k] == 0) continue;
        const std::int64_t a = R[*l][k] * inv(R[*l][j], p) % p;
        axpy(R, k, j, a);
        axpy(V, k, j, a);
      }
    }
  }
  return out;
}

// Inverse of an upper unitriangular or general triangular matrix by back
// substitution, column by column.
inline Mat tri_inverse(const Mat& a, std::int64_t p, bool lower) {
  const std::size_t n = a.size();
  Mat x(n, std::vector<std::int64_t>(n, 0));
  if (lower) {
    for (std::size_t j = 0; j < n; ++j) {
      x[j][j] = inv(a[j][j], p);
      for (std::size_t i = j + 1; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t k = j; k < i; ++k) s = (s + a[i][k] * x[k][j]) % p;
        x[i][j] = mod(-s * inv(a[i][i], p), p);
      }
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      x[j][j] = inv(a[j][j], p);
      for (std::size_t i = j; i-- > 0;) {
        std::int64_t s = 0;
        for (std::size_t k = i + 1; k <= j; ++k) s = (s + a[i][k] * x[k][j]) % p;
        x[i][j] = mod(-s * inv(a[i][i], p), p);
      }
    }
  }
  return x;
}

inline const char* kTriangle =
    "# triangle a b c\n"
    "0\n1\n2\n"
    "0 1\n1 2\n0 2\n"
    "0 1 2\n";

}  // namespace oracle
