#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fastph/reductions.hpp"

namespace fastph::cli {

enum class Representatives { none, v, r, both };

struct RunConfig {
  std::string input;  // path, or "-" for standard input
  Algorithm algorithm = Algorithm::fast_row;
  std::uint32_t p = 2;
  bool cohomology = false;
  Representatives representatives = Representatives::none;
  bool verify = false;
  bool count_ops = false;
  std::size_t leaf_size = 32;
  std::size_t strassen_cutoff = 64;
  std::vector<std::size_t> bench_sizes;
  std::uint64_t seed = 1;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// Reduces one filtration and writes the diagram (and whatever else `cfg`
/// asks for) to `out`. Diagnostics go to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Seeded scaling run over `cfg.bench_sizes`.
int bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fastph::cli
