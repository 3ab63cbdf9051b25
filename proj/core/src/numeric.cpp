#include "addcomb/numeric.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace mp = boost::multiprecision;

BigInt floor_rational(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);  // always positive
  BigInt quot = num / den;                 // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

Rational rational_pow(const Rational& q, unsigned e) {
  return Rational(mp::pow(mp::numerator(q), e), mp::pow(mp::denominator(q), e));
}

BigInt int_pow(const BigInt& b, unsigned e) { return mp::pow(b, e); }

double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

namespace {

// log of a positive big integer.
long double log_positive(const BigInt& v) {
  const unsigned bits = mp::msb(v) + 1;
  if (bits <= 60) return std::log(static_cast<long double>(v.convert_to<std::uint64_t>()));
  const unsigned shift = bits - 60;
  const BigInt top = v >> shift;
  return std::log(static_cast<long double>(top.convert_to<std::uint64_t>())) +
         static_cast<long double>(shift) * std::log(2.0L);
}

}  // namespace

long double to_long_double(const Rational& q) {
  const BigInt& num = mp::numerator(q);
  const BigInt& den = mp::denominator(q);
  if (num == 0) return 0.0L;
  const long double sign = num < 0 ? -1.0L : 1.0L;
  return sign * std::exp(log_positive(mp::abs(num)) - log_positive(den));
}

long double log_rational(const Rational& q) {
  if (q <= 0) throw DomainError("log of a non-positive rational");
  return log_positive(mp::numerator(q)) - log_positive(mp::denominator(q));
}

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw DomainError("cannot parse rational '" + std::string(text) + "'");
  };
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  s = s.substr(pos);
  if (s.empty()) return fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }

  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  BigInt mantissa = 0;
  int scale = 0;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) --scale;
      any_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) return fail();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    char* end = nullptr;
    const long exp = std::strtol(s.c_str() + i + 1, &end, 10);
    if (end == s.c_str() + i + 1 || *end != '\0' || std::labs(exp) > 4000) return fail();
    scale += static_cast<int>(exp);
  }
  Rational value(mantissa);
  if (scale > 0) value *= Rational(mp::pow(BigInt(10), static_cast<unsigned>(scale)));
  if (scale < 0) value /= Rational(mp::pow(BigInt(10), static_cast<unsigned>(-scale)));
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string format_sig(double x, int digits) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*g", digits, x);
  return buf.data();
}

double round_sig(double x, int digits) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig(x, digits).c_str(), nullptr);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<Int128>(mod(a, n)) * mod(b, n) % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t n) {
  std::int64_t result = 1 % n;
  base = mod(base, n);
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    e >>= 1U;
  }
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw DomainError("modulus must be positive");
  std::int64_t old_r = mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && n != 1) {
    throw DomainError(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  return mod(old_s, n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  auto mulm = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % n);
  };
  for (const std::uint64_t a : kBases) {
    std::uint64_t x = 1, base = a % n, e = d;
    while (e > 0) {
      if (e & 1U) x = mulm(x, base);
      base = mulm(base, base);
      e >>= 1U;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulm(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t smallest_prime_in(std::uint64_t lo, std::uint64_t hi) {
  for (std::uint64_t p = lo + 1; p <= hi && p > lo; ++p) {
    if (is_prime(p)) return p;
  }
  return 0;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  UInt128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace addcomb
