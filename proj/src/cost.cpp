#include "pikdom/cost.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "pikdom/errors.hpp"

namespace pikdom {
namespace {

std::int64_t Narrow(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(value);
}

__int128 Gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void Normalize(__int128 num, __int128 den, std::int64_t& out_num, std::int64_t& out_den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = Gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  out_num = Narrow(num);
  out_den = Narrow(den);
}

std::int64_t ParseDigits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw Error(ErrorCode::kParse, "bad number '" + std::string(whole) + "'");
  std::int64_t value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kParse, "bad number '" + std::string(whole) + "'");
    }
    if (__builtin_mul_overflow(value, 10, &value) ||
        __builtin_add_overflow(value, c - '0', &value)) {
      throw Error(ErrorCode::kParse, "number out of range '" + std::string(whole) + "'");
    }
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) { Normalize(num, den, num_, den_); }

Rational& Rational::operator+=(const Rational& other) {
  Normalize(static_cast<__int128>(num_) * other.den_ + static_cast<__int128>(other.num_) * den_,
            static_cast<__int128>(den_) * other.den_, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  Normalize(static_cast<__int128>(num_) * other.num_, static_cast<__int128>(den_) * other.den_,
            num_, den_);
  return *this;
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = Narrow(-static_cast<__int128>(num_));
  out.den_ = den_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& out, const Rational& value) {
  return out << FormatRational(value);
}

Rational ParseRational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseDigits(text.substr(0, slash), whole);
    const std::int64_t den = ParseDigits(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(whole) + "'");
    result = Rational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::kParse, "bad number '" + std::string(whole) + "'");
    }
    if (frac_part.size() > 18) {
      throw Error(ErrorCode::kParse, "too many decimals in '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t ip = int_part.empty() ? 0 : ParseDigits(int_part, whole);
    const std::int64_t fp = frac_part.empty() ? 0 : ParseDigits(frac_part, whole);
    std::int64_t num = 0;
    if (__builtin_mul_overflow(ip, scale, &num) || __builtin_add_overflow(num, fp, &num)) {
      throw Error(ErrorCode::kParse, "number out of range '" + std::string(whole) + "'");
    }
    result = Rational(num, scale);
  } else {
    result = Rational(ParseDigits(text, whole));
  }
  return negative ? -result : result;
}

std::string FormatRational(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  const std::int64_t num = value.numerator();
  if (den != 1) return std::to_string(num) + "/" + std::to_string(value.denominator());
  if (value.denominator() == 1) return std::to_string(num);

  // Terminating decimal with max(twos, fives) fractional digits.
  const int digits = std::max(twos, fives);
  __int128 scaled = static_cast<__int128>(num < 0 ? -static_cast<__int128>(num) : num);
  __int128 multiplier = 1;
  for (int i = 0; i < digits; ++i) multiplier *= 10;
  scaled = scaled * multiplier / value.denominator();
  std::string frac;
  for (int i = 0; i < digits; ++i) {
    frac.insert(frac.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string int_part;
  if (scaled == 0) int_part = "0";
  while (scaled > 0) {
    int_part.insert(int_part.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
    scaled /= 10;
  }
  std::string out = num < 0 ? "-" : "";
  out += int_part;
  if (!frac.empty()) out += "." + frac;
  return out;
}

}  // namespace pikdom
