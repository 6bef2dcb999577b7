#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace opacity {

/// An exact non-negative dyadic value that is either zero or 2^-e with
/// 0 <= e <= kMaxExponent. Used for prefix distances, opacities and
/// opacity complexities; never converted through floating point.
class DyadicDistance {
 public:
  static constexpr std::uint32_t kMaxExponent = 0x7fffffffu;

  /// Zero.
  constexpr DyadicDistance() = default;

  static constexpr DyadicDistance zero() { return DyadicDistance(); }
  /// 2^-exponent. Throws ExponentOverflow past kMaxExponent.
  static DyadicDistance pow2inv(std::uint64_t exponent);

  bool is_zero() const noexcept { return !exponent_.has_value(); }
  /// The exponent e of 2^-e; empty for zero.
  std::optional<std::uint32_t> exponent() const noexcept { return exponent_; }

  /// 2 * value. Requires a non-zero value to have e >= 1.
  DyadicDistance doubled() const;
  /// value / 2.
  DyadicDistance halved() const;

  /// {numerator, denominator} with denominator a power of two; {0, 1} for
  /// zero. Throws ExponentOverflow when 2^e does not fit in 64 bits.
  std::pair<std::uint64_t, std::uint64_t> fraction() const;

  /// "0", "1", "1/2", "1/4", ...
  std::string to_string() const;

  friend bool operator==(const DyadicDistance&, const DyadicDistance&) = default;
  friend std::strong_ordering operator<=>(const DyadicDistance& lhs,
                                          const DyadicDistance& rhs) noexcept;

 private:
  explicit DyadicDistance(std::uint32_t exponent) : exponent_(exponent) {}

  std::optional<std::uint32_t> exponent_;
};

}  // namespace opacity
