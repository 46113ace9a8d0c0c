#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integer and rational arithmetic with p-adic valuations.
 *
 * BigInt is GMP's mpz_class. Rational is a thin value type over mpq_class
 * that keeps the fraction canonical at all times:
 * - lowest terms, gcd(|num|, den) = 1
 * - sign carried by the numerator, denominator >= 1
 * - zero is 0/1
 *
 * Valuations return an ExtendedValuation, which is either a finite integer
 * or +inf (the valuation of zero). Arithmetic on +inf is absorbing so that
 * no sentinel value can leak into comparisons.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace steinfill {

using BigInt = mpz_class;

/// Thrown when an internal consistency check trips. A failure here means the
/// implementation (or the mathematics it encodes) is wrong, never that the
/// caller passed bad input.
class InternalCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws InternalCheckFailure with `what` when `condition` is false.
inline void internal_check(bool condition, const std::string& what) {
  if (!condition) throw InternalCheckFailure(what);
}

// ---------------------------------------------------------------------------
// ExtendedValuation
// ---------------------------------------------------------------------------

class ExtendedValuation {
 public:
  static ExtendedValuation infinity() { return ExtendedValuation{}; }
  static ExtendedValuation finite(std::int64_t v) { return ExtendedValuation{v}; }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// The finite value. Throws std::domain_error on +inf.
  std::int64_t value() const {
    if (!value_) throw std::domain_error("valuation is +inf");
    return *value_;
  }

  bool at_least(std::int64_t bound) const { return !value_ || *value_ >= bound; }

  friend bool operator==(const ExtendedValuation&, const ExtendedValuation&) = default;

  friend std::strong_ordering operator<=>(const ExtendedValuation& a,
                                          const ExtendedValuation& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  friend ExtendedValuation operator+(const ExtendedValuation& a, std::int64_t shift) {
    return a.value_ ? finite(*a.value_ + shift) : infinity();
  }
  friend ExtendedValuation operator+(std::int64_t shift, const ExtendedValuation& a) {
    return a + shift;
  }
  friend ExtendedValuation operator+(const ExtendedValuation& a, const ExtendedValuation& b) {
    if (!a.value_ || !b.value_) return infinity();
    return finite(*a.value_ + *b.value_);
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend std::ostream& operator<<(std::ostream& os, const ExtendedValuation& v) {
    return os << v.to_string();
  }

 private:
  ExtendedValuation() = default;
  explicit ExtendedValuation(std::int64_t v) : value_(v) {}

  std::optional<std::int64_t> value_;
};

inline ExtendedValuation min(const ExtendedValuation& a, const ExtendedValuation& b) {
  return b < a ? b : a;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  /// num/den in lowest terms. Throws std::domain_error when den is zero.
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }

  /// Parses "p" or "p/q". Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view s) {
      BigInt v;
      if (s.empty() || v.set_str(std::string(s), 10) != 0) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
      return v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return from_mpq(mpq_class(1 / q_));
  }

  Rational operator-() const { return from_mpq(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is one.
  std::string to_string() const { return q_.get_str(10); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  static Rational from_mpq(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
  }

  mpq_class q_;
};

/// rational_make: checked construction in lowest terms.
inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

inline BigInt numerator_of(const Rational& r) { return r.numerator(); }
inline BigInt denominator_of(const Rational& r) { return r.denominator(); }

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(std::int64_t e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline BigInt pow2_int(unsigned long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return p;
}

// ---------------------------------------------------------------------------
// Valuations
// ---------------------------------------------------------------------------

/// Trial division. Only meant for the small primes valuations are taken at.
inline bool is_small_prime(const BigInt& p) {
  if (p < 2) return false;
  if (!p.fits_ulong_p()) throw std::domain_error("prime too large for trial division");
  const unsigned long n = p.get_ui();
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace detail {

inline std::int64_t ord_p_nonzero(const BigInt& x, const BigInt& p) {
  if (p == 2) return static_cast<std::int64_t>(mpz_scan1(x.get_mpz_t(), 0));
  BigInt rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace detail

/// ord_p of an integer; +inf for zero. Throws std::domain_error unless p is prime.
inline ExtendedValuation ord_p(const BigInt& p, const BigInt& x) {
  if (!is_small_prime(p)) throw std::domain_error("ord_p: " + p.get_str() + " is not prime");
  if (x == 0) return ExtendedValuation::infinity();
  return ExtendedValuation::finite(detail::ord_p_nonzero(x, p));
}

/// ord_p(num) - ord_p(den); +inf for zero.
inline ExtendedValuation ord_p(const BigInt& p, const Rational& r) {
  if (!is_small_prime(p)) throw std::domain_error("ord_p: " + p.get_str() + " is not prime");
  if (r.is_zero()) return ExtendedValuation::infinity();
  return ExtendedValuation::finite(detail::ord_p_nonzero(r.numerator(), p) -
                                   detail::ord_p_nonzero(r.denominator(), p));
}

inline ExtendedValuation ord2(const Rational& r) { return ord_p(BigInt(2), r); }
inline ExtendedValuation ord2(const BigInt& x) { return ord_p(BigInt(2), x); }

/// ord_2 of a nonzero machine integer.
inline std::int64_t ord2(std::int64_t x) {
  if (x == 0) throw std::domain_error("ord2 of zero machine integer");
  std::int64_t v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

/// Binomial coefficient C(n, s); zero when s > n.
inline BigInt binomial(unsigned long n, unsigned long s) {
  if (s > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, s);
  return r;
}

}  // namespace steinfill
