#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace pikdom {

// Exact rational with int64 numerator and positive int64 denominator, always
// in lowest terms. Arithmetic throws std::overflow_error rather than wrap.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

using Cost = Rational;

// Accepts integer ("7", "-2"), decimal ("1.25", ".5") and fraction ("1/3")
// literals. Throws Error(kParse) on anything else or on overflow.
Rational ParseRational(std::string_view text);

// Canonical rendering: terminating values as shortest decimal ("2", "0.125",
// "-1.5"), everything else as "num/den". ParseRational inverts it exactly.
std::string FormatRational(const Rational& value);

}  // namespace pikdom
