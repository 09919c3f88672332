#include "tedhard/cost.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tedhard {
namespace {

const mpz_class& two_pow_64() {
  static const mpz_class v = [] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 64);
    return r;
  }();
  return v;
}

const mpz_class& int128_min() {
  static const mpz_class v = [] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 127);
    return mpz_class(-r);
  }();
  return v;
}

const mpz_class& int128_max() {
  static const mpz_class v = [] {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, 127);
    return mpz_class(r - 1);
  }();
  return v;
}

mpz_class from_u64(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

std::uint64_t low_u64(const mpz_class& nonneg) {
  std::uint64_t out = 0;
  mpz_class low = nonneg % two_pow_64();
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(out), 0, 0, low.get_mpz_t());
  return count == 0 ? 0 : out;
}

}  // namespace

Cost Cost::from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  mpz_class r = from_u64(static_cast<std::uint64_t>(mag >> 64)) * two_pow_64() +
                from_u64(static_cast<std::uint64_t>(mag));
  if (negative) r = -r;
  return Cost(std::move(r));
}

std::optional<Cost> Cost::parse(std::string_view text) {
  if (text == "inf") return Cost::infinity();
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Cost(mpz_class(digits, 10));
}

const mpz_class& Cost::value() const {
  if (infinite_) throw std::logic_error("value() of infinite cost");
  return value_;
}

bool Cost::fits_int64() const { return !infinite_ && value_.fits_slong_p(); }

bool Cost::fits_int128() const {
  return !infinite_ && value_ >= int128_min() && value_ <= int128_max();
}

std::int64_t Cost::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("cost does not fit in int64");
  return value_.get_si();
}

__int128 Cost::to_int128() const {
  if (!fits_int128()) throw std::overflow_error("cost does not fit in int128");
  const bool negative = value_ < 0;
  mpz_class mag = abs(value_);
  mpz_class high = mag / two_pow_64();
  unsigned __int128 m = (static_cast<unsigned __int128>(low_u64(high)) << 64) |
                        low_u64(mag);
  return negative ? -static_cast<__int128>(m - 1) - 1 : static_cast<__int128>(m);
}

mpz_class Cost::magnitude() const {
  if (infinite_) return 0;
  return abs(value_);
}

std::string Cost::to_string() const { return infinite_ ? "inf" : value_.get_str(10); }

Cost& Cost::operator+=(const Cost& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += rhs.value_;
  return *this;
}

Cost& Cost::operator-=(const Cost& rhs) {
  if (rhs.infinite_) throw std::domain_error("subtracting an infinite cost");
  if (!infinite_) value_ -= rhs.value_;
  return *this;
}

Cost& Cost::operator*=(const Cost& rhs) {
  if (infinite_ || rhs.infinite_) throw std::domain_error("multiplying an infinite cost");
  value_ *= rhs.value_;
  return *this;
}

Cost Cost::operator-() const {
  if (infinite_) throw std::domain_error("negating an infinite cost");
  return Cost(mpz_class(-value_));
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ == b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Cost pow(const Cost& base, unsigned long exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent);
  return Cost(std::move(r));
}

Cost min(const Cost& a, const Cost& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Cost& c) { return os << c.to_string(); }

}  // namespace tedhard
