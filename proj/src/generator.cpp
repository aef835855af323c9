#include "fastph/generator.hpp"

#include <cmath>
#include <random>

namespace fastph {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::size_t binom(std::size_t v, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (v - i) / (i + 1);
  return r;
}

}  // namespace

Filtration random_filtration(std::size_t n, std::uint64_t seed) {
  if (n == 0) return {};
  std::mt19937_64 rng(seed);
  std::size_t v = std::max<std::size_t>(3, static_cast<std::size_t>(std::ceil(std::sqrt(2.0 * n))));
  while (v + binom(v, 2) + binom(v, 3) + binom(v, 4) < n) ++v;

  std::vector<std::uint32_t> label(v);
  for (std::uint32_t i = 0; i < v; ++i) label[i] = i;
  for (std::size_t i = v; i > 1; --i) std::swap(label[i - 1], label[rng() % i]);

  std::vector<double> vlev(v);
  for (auto& x : vlev) x = 0.3 * unit(rng);
  std::vector<double> elev(v * v, 0.0);
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = a + 1; b < v; ++b) {
      elev[a * v + b] = std::max({vlev[a], vlev[b], unit(rng)});
    }
  }

  std::vector<LeveledSimplex> all;
  auto add = [&](std::vector<std::uint32_t> idx, double level) {
    for (auto& i : idx) i = label[i];
    all.push_back({Simplex(std::move(idx)), level, 0});
  };
  for (std::uint32_t a = 0; a < v; ++a) add({a}, vlev[a]);
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = a + 1; b < v; ++b) {
      add({a, b}, elev[a * v + b]);
      for (std::uint32_t c = b + 1; c < v; ++c) {
        const double t = std::max({elev[a * v + b], elev[a * v + c], elev[b * v + c]});
        add({a, b, c}, t);
        for (std::uint32_t d = c + 1; d < v; ++d) {
          add({a, b, c, d},
              std::max({t, elev[a * v + d], elev[b * v + d], elev[c * v + d]}));
        }
      }
    }
  }
  Filtration full = extend_partial_order(std::move(all));
  full.simplices.resize(n);
  full.levels->resize(n);
  return full;
}

}  // namespace fastph
