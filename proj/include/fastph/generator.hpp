#pragma once

#include <cstddef>
#include <cstdint>

#include "fastph/filtration.hpp"

namespace fastph {

/// Seeded random flag-complex filtration with exactly `n` simplices (up to
/// tetrahedra). Vertices get levels in [0, 0.3), an edge takes the max of its
/// vertices and a fresh uniform draw, higher simplices the max over their
/// edges. Vertex labels are shuffled before ordering. Deterministic across
/// platforms for a given (n, seed).
Filtration random_filtration(std::size_t n, std::uint64_t seed);

}  // namespace fastph
