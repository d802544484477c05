#include "circ/rational.hpp"

#include <charconv>
#include <numeric>

#include "circ/error.hpp"

namespace circ {

namespace {

__extension__ typedef __int128 Wide;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "rational overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "rational overflow");
  return out;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::InvalidArgument, "malformed rational: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = checked_mul(numerator, -1);
    denominator = checked_mul(denominator, -1);
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::int64_t Rational::ceil() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational& Rational::operator+=(const Rational& rhs) {
  const std::int64_t g = std::gcd(den_, rhs.den_);
  const std::int64_t lhs_scale = rhs.den_ / g;
  const std::int64_t rhs_scale = den_ / g;
  *this = Rational(checked_add(checked_mul(num_, lhs_scale), checked_mul(rhs.num_, rhs_scale)),
                   checked_mul(den_, lhs_scale));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this += Rational(checked_mul(rhs.num_, -1), rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  const std::int64_t g1 = std::gcd(num_, rhs.den_);
  const std::int64_t g2 = std::gcd(rhs.num_, den_);
  *this = Rational(checked_mul(num_ / g1, rhs.num_ / g2), checked_mul(den_ / g2, rhs.den_ / g1));
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return Rational(parse_int(std::string_view(text).substr(0, slash)),
                  parse_int(std::string_view(text).substr(slash + 1)));
}

}  // namespace circ
