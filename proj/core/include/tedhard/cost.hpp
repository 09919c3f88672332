#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tedhard {

/// Exact matching cost: an unbounded signed integer or the distinguished
/// value +inf that marks a forbidden pair. Addition is exact and absorbing
/// for +inf; ordering is total with +inf as the maximum.
class Cost {
 public:
  Cost() = default;
  Cost(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Cost(int v) : value_(static_cast<long>(v)) {}  // NOLINT
  explicit Cost(mpz_class v) : value_(std::move(v)) {}

  static Cost infinity() {
    Cost c;
    c.infinite_ = true;
    return c;
  }
  static Cost from_int128(__int128 v);

  /// Parses a decimal integer or the literal "inf".
  static std::optional<Cost> parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Requires a finite cost.
  const mpz_class& value() const;

  bool fits_int64() const;
  bool fits_int128() const;
  std::int64_t to_int64() const;
  __int128 to_int128() const;

  /// Absolute value of a finite cost; 0 for +inf.
  mpz_class magnitude() const;

  std::string to_string() const;

  Cost& operator+=(const Cost& rhs);
  Cost& operator-=(const Cost& rhs);  // rhs must be finite
  Cost& operator*=(const Cost& rhs);  // both finite

  friend Cost operator+(Cost lhs, const Cost& rhs) { return lhs += rhs; }
  friend Cost operator-(Cost lhs, const Cost& rhs) { return lhs -= rhs; }
  friend Cost operator*(Cost lhs, const Cost& rhs) { return lhs *= rhs; }
  Cost operator-() const;

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  mpz_class value_{0};
  bool infinite_ = false;
};

Cost pow(const Cost& base, unsigned long exponent);
Cost min(const Cost& a, const Cost& b);

std::ostream& operator<<(std::ostream& os, const Cost& c);

}  // namespace tedhard
