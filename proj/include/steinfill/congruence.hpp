#pragma once

/**
 * @file congruence.hpp
 * @brief 2-adic congruences between Bernoulli numbers.
 *
 * Three families of checks, all over the number-theoretic NT_n:
 *   - Carlitz finite differences  sum_s (-1)^s C(r,s) NT_{n+sw}
 *   - ord_2 of differences of reciprocals 1/NT_n - 1/NT_m
 *   - the bound ord_2(1/B_k - 1/B_2k) >= ord_2(k) + 3 for even k
 *
 * Each check returns a CongruenceReport carrying the exact witness value so a
 * failing instance can be reproduced from the report alone.
 */

#include <steinfill/bernoulli.hpp>
#include <steinfill/exact_arith.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinfill {

/// A named sub-check inside a report.
struct SubCheck {
  std::string name;
  bool holds;
  std::string detail;
};

struct CongruenceReport {
  std::string instance;
  ExtendedValuation observed_ord = ExtendedValuation::infinity();
  std::int64_t bound = 0;
  bool holds = false;
  Rational witness;
  std::vector<SubCheck> checks;

  /// Observed valuation strictly above the bound. Informative only.
  bool strict() const { return !observed_ord.is_finite() || observed_ord.value() > bound; }
};

namespace detail {

inline void finish(CongruenceReport& report) {
  report.holds = report.observed_ord.at_least(report.bound) &&
                 std::all_of(report.checks.begin(), report.checks.end(),
                             [](const SubCheck& c) { return c.holds; });
}

inline std::int64_t floor_log2(std::int64_t x) {
  return static_cast<std::int64_t>(std::bit_width(static_cast<std::uint64_t>(x))) - 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Carlitz
// ---------------------------------------------------------------------------

/// Parameters of an r-th finite difference with even step w starting at even n.
class CarlitzParams {
 public:
  CarlitzParams(std::int64_t n, std::int64_t w, std::int64_t r) : n_(n), w_(w), r_(r) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("Carlitz: n must be even >= 2");
    if (w < 2 || w % 2 != 0) throw std::domain_error("Carlitz: w must be even >= 2");
    if (r < 1) throw std::domain_error("Carlitz: r must be >= 1");
  }

  std::int64_t n() const { return n_; }
  std::int64_t w() const { return w_; }
  std::int64_t r() const { return r_; }

  /// e = 1 + ord_2(w)
  std::int64_t e() const { return 1 + ord2(w_); }
  /// l = floor(log2 r)
  std::int64_t l() const { return detail::floor_log2(r_); }
  /// lambda = min(r - 1, r - l + 2)
  std::int64_t lambda() const { return std::min(r_ - 1, r_ - l() + 2); }

  /// r' with 2^r' <= 2r < 2^(r'+1)
  std::int64_t r_prime() const { return detail::floor_log2(2 * r_); }
  /// lambda' = min(r - 1, r - r' + 3); always equal to lambda()
  std::int64_t lambda_prime() const { return std::min(r_ - 1, r_ - r_prime() + 3); }

  std::string describe() const {
    return "n=" + std::to_string(n_) + " w=" + std::to_string(w_) + " r=" + std::to_string(r_);
  }

 private:
  std::int64_t n_;
  std::int64_t w_;
  std::int64_t r_;
};

/// sum_{s=0}^{r} (-1)^s C(r, s) NT_{n + s w}
inline Rational finite_difference(const CarlitzParams& p) {
  Rational sum;
  for (std::int64_t s = 0; s <= p.r(); ++s) {
    Rational term = Rational(binomial(static_cast<unsigned long>(p.r()),
                                      static_cast<unsigned long>(s))) *
                    bernoulli_nt(NTIndex(p.n() + s * p.w()));
    if (s % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

/// min(n - 2, r e + lambda - 1). Throws InternalCheckFailure if the two
/// lambda formulas disagree.
inline std::int64_t carlitz_bound(const CarlitzParams& p) {
  internal_check(p.lambda() == p.lambda_prime(),
                 "lambda formulas disagree at r = " + std::to_string(p.r()));
  return std::min(p.n() - 2, p.r() * p.e() + p.lambda() - 1);
}

/// Bound for the undivided sum with the factor 2: min(n - 1, r e + lambda).
inline std::int64_t carlitz_bound_doubled(const CarlitzParams& p) {
  internal_check(p.lambda() == p.lambda_prime(),
                 "lambda formulas disagree at r = " + std::to_string(p.r()));
  return std::min(p.n() - 1, p.r() * p.e() + p.lambda_prime());
}

inline CongruenceReport check_carlitz(const CarlitzParams& p) {
  CongruenceReport report;
  report.instance = "carlitz " + p.describe();
  report.witness = finite_difference(p);
  report.observed_ord = ord2(report.witness);
  report.bound = carlitz_bound(p);

  const auto doubled = ord2(Rational(2L) * report.witness);
  const auto doubled_bound = carlitz_bound_doubled(p);
  report.checks.push_back({"doubled-sum", doubled.at_least(doubled_bound),
                           "ord2(2*sum)=" + doubled.to_string() +
                               " >= " + std::to_string(doubled_bound)});
  detail::finish(report);
  return report;
}

// ---------------------------------------------------------------------------
// Differences of reciprocals
// ---------------------------------------------------------------------------

/// For even 2 <= n < m:
///   (i)   ord_2(1/NT_n - 1/NT_m) = 2 + ord_2(NT_n - NT_m)
///   (ii)  both sides >= min(n, 2 + ord_2(m - n))
///   (iii) ord_2(Denom(NT_n NT_m)) = 2
inline CongruenceReport check_prop_a4(std::int64_t n, std::int64_t m) {
  if (n < 2 || n % 2 != 0 || m % 2 != 0 || m <= n) {
    throw std::domain_error("reciprocal difference check needs even 2 <= n < m, got n=" +
                            std::to_string(n) + " m=" + std::to_string(m));
  }
  const Rational bn = bernoulli_nt(NTIndex(n));
  const Rational bm = bernoulli_nt(NTIndex(m));

  CongruenceReport report;
  report.instance = "reciprocal-difference n=" + std::to_string(n) + " m=" + std::to_string(m);
  report.witness = bn.reciprocal() - bm.reciprocal();
  report.observed_ord = ord2(report.witness);
  report.bound = std::min(n, 2 + ord2(m - n));

  const auto shifted = 2 + ord2(bn - bm);
  report.checks.push_back({"equality", report.observed_ord == shifted,
                           "ord2(1/Bn-1/Bm)=" + report.observed_ord.to_string() +
                               " vs 2+ord2(Bn-Bm)=" + shifted.to_string()});
  report.checks.push_back({"shifted-bound", shifted.at_least(report.bound),
                           "2+ord2(Bn-Bm)=" + shifted.to_string() +
                               " >= " + std::to_string(report.bound)});
  const auto denom_ord = ord2((bn * bm).denominator());
  report.checks.push_back({"product-denominator", denom_ord == ExtendedValuation::finite(2),
                           "ord2(Denom(Bn*Bm))=" + denom_ord.to_string()});
  detail::finish(report);
  return report;
}

// ---------------------------------------------------------------------------
// Main divisibility
// ---------------------------------------------------------------------------

/// (B_2k - B_k) / (B_2k B_k), written as 1/B_k - 1/B_2k.
inline Rational reciprocal_difference_top(std::int64_t k) {
  return bernoulli_top(TopIndex(k)).reciprocal() - bernoulli_top(TopIndex(2 * k)).reciprocal();
}

/// For even k = 2^j c, checks ord_2((B_2k - B_k)/(B_2k B_k)) >= j + 3 along
/// two routes that must agree:
///   (a) ord_2 of the lowest-terms numerator, after checking the denominator is odd
///   (b) 2 + ord_2(NT_2k - NT_4k), after checking NT_2k and NT_4k share a sign
/// Throws std::domain_error for odd k.
inline CongruenceReport check_theorem_a1(std::int64_t k) {
  if (k < 2 || k % 2 != 0) {
    throw std::domain_error("divisibility check needs even k >= 2, got k=" + std::to_string(k));
  }
  const std::int64_t j = ord2(k);
  CongruenceReport report;
  report.instance = "reciprocal-difference-top k=" + std::to_string(k);
  report.witness = reciprocal_difference_top(k);
  report.bound = j + 3;

  const BigInt denominator = report.witness.denominator();
  internal_check(mpz_odd_p(denominator.get_mpz_t()) != 0,
                 "k=" + std::to_string(k) + ": reciprocal difference has even denominator");
  const auto via_numerator = ord2(report.witness.numerator());
  report.observed_ord = via_numerator;

  const Rational b2k = bernoulli_nt(NTIndex(2 * k));
  const Rational b4k = bernoulli_nt(NTIndex(4 * k));
  internal_check(b2k.sign() == b4k.sign(),
                 "k=" + std::to_string(k) + ": NT_2k and NT_4k differ in sign");
  const auto via_shift = 2 + ord2(b2k - b4k);

  report.checks.push_back({"routes-agree", via_numerator == via_shift,
                           "numerator route " + via_numerator.to_string() + " vs shifted route " +
                               via_shift.to_string()});
  detail::finish(report);
  return report;
}

}  // namespace steinfill
