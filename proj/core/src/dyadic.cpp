#include "opacity/dyadic.hpp"

#include "opacity/error.hpp"

namespace opacity {

DyadicDistance DyadicDistance::pow2inv(std::uint64_t exponent) {
  if (exponent > kMaxExponent) {
    throw Error(ErrorKind::ExponentOverflow,
                "exponent " + std::to_string(exponent) + " exceeds 2^31-1");
  }
  return DyadicDistance(static_cast<std::uint32_t>(exponent));
}

DyadicDistance DyadicDistance::doubled() const {
  if (is_zero()) return *this;
  if (*exponent_ == 0) {
    throw Error(ErrorKind::ExponentOverflow, "doubling 1 leaves the dyadic range");
  }
  return DyadicDistance(*exponent_ - 1);
}

DyadicDistance DyadicDistance::halved() const {
  if (is_zero()) return *this;
  return pow2inv(std::uint64_t{*exponent_} + 1);
}

std::pair<std::uint64_t, std::uint64_t> DyadicDistance::fraction() const {
  if (is_zero()) return {0, 1};
  if (*exponent_ > 63) {
    throw Error(ErrorKind::ExponentOverflow,
                "2^" + std::to_string(*exponent_) + " does not fit in 64 bits");
  }
  return {1, std::uint64_t{1} << *exponent_};
}

std::string DyadicDistance::to_string() const {
  if (is_zero()) return "0";
  if (*exponent_ == 0) return "1";
  if (*exponent_ <= 63) {
    return "1/" + std::to_string(std::uint64_t{1} << *exponent_);
  }
  return "1/2^" + std::to_string(*exponent_);
}

std::strong_ordering operator<=>(const DyadicDistance& lhs,
                                 const DyadicDistance& rhs) noexcept {
  if (lhs.is_zero() || rhs.is_zero()) {
    return !lhs.is_zero() <=> !rhs.is_zero();
  }
  // Larger exponent means smaller value.
  return *rhs.exponent_ <=> *lhs.exponent_;
}

}  // namespace opacity
