#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "fastph/errors.hpp"

namespace fastph {

/// Residue in [0, p). Arithmetic goes through a FieldContext.
struct FieldElement {
  std::uint16_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint16_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

std::ostream& operator<<(std::ostream& os, FieldElement a);

bool is_prime(std::uint32_t n);

/// The prime field F_p, 2 <= p < 2^16.
///
/// Products of two residues fit in 32 bits, and sums of up to 2^32 such
/// products fit in 64 bits, which the matrix kernels rely on to delay
/// reduction. Inverses come from a table for p <= 256 and from the extended
/// Euclidean algorithm otherwise. Copies share the table.
class FieldContext {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;
  static constexpr std::uint32_t kTableLimit = 1u << 8;

  explicit FieldContext(std::uint32_t p = 2);

  std::uint32_t modulus() const { return p_; }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }

  /// Reduces an arbitrary integer (negative allowed) into the field.
  FieldElement element(std::int64_t v) const {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint16_t>(r)};
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = std::uint32_t{a.value} + b.value;
    if (s >= p_) s -= p_;
    return FieldElement{static_cast<std::uint16_t>(s)};
  }

  FieldElement sub(FieldElement a, FieldElement b) const {
    std::uint32_t s = std::uint32_t{a.value} + p_ - b.value;
    if (s >= p_) s -= p_;
    return FieldElement{static_cast<std::uint16_t>(s)};
  }

  FieldElement neg(FieldElement a) const {
    return a.value == 0 ? a : FieldElement{static_cast<std::uint16_t>(p_ - a.value)};
  }

  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement{static_cast<std::uint16_t>((std::uint32_t{a.value} * b.value) % p_)};
  }

  /// Throws ZeroInverse for a = 0.
  FieldElement inv(FieldElement a) const;

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Reduces a 64-bit accumulator of unreduced products.
  FieldElement reduce(std::uint64_t acc) const {
    return FieldElement{static_cast<std::uint16_t>(acc % p_)};
  }

  friend bool operator==(const FieldContext& a, const FieldContext& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<std::uint16_t>> inverse_table_;
};

FieldElement ff_add(FieldElement a, FieldElement b, const FieldContext& ctx);
FieldElement ff_mul(FieldElement a, FieldElement b, const FieldContext& ctx);
FieldElement ff_inv(FieldElement a, const FieldContext& ctx);

}  // namespace fastph
