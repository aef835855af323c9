#include "fastph/field.hpp"

#include <string>
#include <utility>

namespace fastph {

namespace {

std::uint32_t euclid_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, FieldElement a) { return os << a.value; }

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldContext::FieldContext(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw InvalidField("field modulus " + std::to_string(p) + " must be below 65536");
  }
  if (!is_prime(p)) {
    throw InvalidField("field modulus " + std::to_string(p) + " is not prime");
  }
  if (p <= kTableLimit) {
    auto table = std::make_shared<std::vector<std::uint16_t>>(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
      (*table)[a] = static_cast<std::uint16_t>(euclid_inverse(a, p));
    }
    inverse_table_ = std::move(table);
  }
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.value == 0) throw ZeroInverse();
  if (inverse_table_) return FieldElement{(*inverse_table_)[a.value]};
  return FieldElement{static_cast<std::uint16_t>(euclid_inverse(a.value, p_))};
}

FieldElement ff_add(FieldElement a, FieldElement b, const FieldContext& ctx) { return ctx.add(a, b); }
FieldElement ff_mul(FieldElement a, FieldElement b, const FieldContext& ctx) { return ctx.mul(a, b); }
FieldElement ff_inv(FieldElement a, const FieldContext& ctx) { return ctx.inv(a); }

}  // namespace fastph
