#pragma once

/**
 * @file fillability.hpp
 * @brief Stable complex structures on (4k-1)-connected 8k-manifolds.
 *
 * A manifold enters only through its invariants (k, signature, tau^2, and the
 * tau-image flag). Two decision procedures are provided:
 *   - the Bernoulli-number condition (yang_condition), and
 *   - the simplified parity/flag condition (yang_plus_condition),
 * plus decide_admissibility, which runs both and flags any disagreement.
 *
 * "x = 0 mod 2" for a rational x is read as ord_2(x) >= 1; zero passes.
 */

#include <steinfill/bernoulli.hpp>
#include <steinfill/congruence.hpp>
#include <steinfill/exact_arith.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinfill {

struct ManifoldInvariants {
  std::int64_t k = 1;
  BigInt sigma;
  BigInt tau_sq;
  bool tau_in_image = true;
};

struct AuditEntry {
  std::string name;
  std::string value;
};

struct AhatValue {
  Rational value;
  bool is_integer = false;
};

struct YangResult {
  bool verdict = false;
  std::vector<AuditEntry> audit;
};

struct AdmissibilityReport {
  bool yang_verdict = false;
  bool yang_plus_verdict = false;
  bool consistent = false;
  std::vector<AuditEntry> audit;
};

struct NumeratorIdentityReport {
  std::int64_t k = 0;
  BigInt lhs;  ///< D_k N_2k + D_2k N_k
  BigInt rhs;  ///< 2 (D'_k N_2k + D'_2k N_k)
  ExtendedValuation lhs_ord = ExtendedValuation::infinity();
  /// ord_2 of the lowest-terms numerator of (B_2k + B_k)/(B_2k B_k)
  ExtendedValuation reduced_numerator_ord = ExtendedValuation::infinity();
  bool holds = false;
};

/// Violations of the structural constraints; empty when the tuple is valid.
inline std::vector<std::string> validate_invariants(const ManifoldInvariants& inv) {
  std::vector<std::string> violations;
  if (inv.k < 1) {
    violations.emplace_back("k must be >= 1");
    return violations;
  }
  const bool k_odd = inv.k % 2 == 1;
  if (k_odd && !inv.tau_in_image) {
    violations.emplace_back("k odd forces tau_in_image");
  }
  if (inv.k > 2 && mpz_odd_p(inv.tau_sq.get_mpz_t())) {
    violations.emplace_back("k > 2 forces tau_sq even (even intersection form)");
  }
  if (!k_odd && inv.tau_in_image && mpz_divisible_ui_p(inv.tau_sq.get_mpz_t(), 8) == 0) {
    violations.emplace_back("k even with tau_in_image forces 8 | tau_sq");
  }
  return violations;
}

namespace detail {

inline void require_valid(const ManifoldInvariants& inv) {
  const auto violations = validate_invariants(inv);
  if (violations.empty()) return;
  std::string msg = "invalid manifold invariants:";
  for (const auto& v : violations) msg += " [" + v + "]";
  throw std::domain_error(msg);
}

}  // namespace detail

/// a_k = (3 - (-1)^k) / 2
inline std::int64_t a_coeff(std::int64_t k) {
  if (k < 1) throw std::domain_error("a_coeff needs k >= 1, got " + std::to_string(k));
  return k % 2 == 1 ? 2 : 1;
}

/// 4k - 3 - 2j with j = ord_2(k). Defined for k >= 3.
inline std::int64_t forced_sigma_valuation(std::int64_t k) {
  if (k < 3) {
    throw std::domain_error("forced signature valuation needs k >= 3, got " + std::to_string(k));
  }
  return 4 * k - 3 - 2 * ord2(k);
}

/// Wall's A-hat formula
///   (a_k^2 2^(4k-4) B_k^2 (2^2k - 1)^2 tau^2 - k^2 sigma) / (2^(4k+1) k^2 (2^(4k-1) - 1))
/// evaluated directly and in the N_k/D'_k form with k = 2^j c; the two must agree.
inline AhatValue ahat(std::int64_t k, const BigInt& sigma, const BigInt& tau_sq) {
  if (k < 1) throw std::domain_error("ahat needs k >= 1, got " + std::to_string(k));
  const std::int64_t a = a_coeff(k);
  const Rational bk = bernoulli_top(TopIndex(k));
  const Rational a2(a * a);
  const Rational kk(k * k);
  const Rational t2(tau_sq);
  const Rational s(sigma);
  const Rational two_2k_minus_1 = pow2(2 * k) - Rational(1L);
  const Rational two_4k1_minus_1 = pow2(4 * k - 1) - Rational(1L);

  const Rational direct =
      (a2 * pow2(4 * k - 4) * bk * bk * two_2k_minus_1 * two_2k_minus_1 * t2 - kk * s) /
      (pow2(4 * k + 1) * kk * two_4k1_minus_1);

  const auto parts = num_den_parts(TopIndex(k));
  const std::int64_t j = ord2(k);
  const Rational c(k >> j);
  const Rational n_k(parts.numerator);
  const Rational d_odd(parts.odd_denominator);
  const Rational rewritten =
      (a2 * pow2(4 * k - 6 - 2 * j) * n_k * n_k * two_2k_minus_1 * two_2k_minus_1 * t2 -
       d_odd * d_odd * c * c * s) /
      (pow2(4 * k + 1) * c * c * d_odd * d_odd * two_4k1_minus_1);

  internal_check(direct == rewritten, "A-hat forms disagree at k=" + std::to_string(k) + ": " +
                                          direct.to_string() + " vs " + rewritten.to_string());
  return {direct, direct.is_integer()};
}

/// k odd:  ord_2( (B_2k + B_k)/(B_2k B_k) * sigma / 2^(4k-2) ) >= 1
/// k even: tau_in_image and ord_2( (B_2k - B_k)/(B_2k B_k) * 4k sigma / 2^(4k) ) >= 1
inline YangResult yang_condition(const ManifoldInvariants& inv) {
  detail::require_valid(inv);
  const std::int64_t k = inv.k;
  const bool k_odd = k % 2 == 1;
  const Rational bk = bernoulli_top(TopIndex(k));
  const Rational b2k = bernoulli_top(TopIndex(2 * k));

  const Rational bernoulli_term = k_odd ? bk.reciprocal() + b2k.reciprocal()
                                        : bk.reciprocal() - b2k.reciprocal();
  const Rational scale = k_odd ? Rational(inv.sigma) / pow2(4 * k - 2)
                               : Rational(4 * k) * Rational(inv.sigma) / pow2(4 * k);
  const Rational value = bernoulli_term * scale;
  const auto value_ord = ord2(value);
  const bool parity_ok = value_ord.at_least(1);
  const bool num_even = mpz_even_p(value.numerator().get_mpz_t()) != 0;
  internal_check(parity_ok == num_even, "valuation and numerator parity routes disagree");

  YangResult result;
  result.verdict = k_odd ? parity_ok : (inv.tau_in_image && parity_ok);
  result.audit = {
      {"bernoulli_term", bernoulli_term.to_string()},
      {"bernoulli_term_ord2", ord2(bernoulli_term).to_string()},
      {"condition_value", value.to_string()},
      {"condition_ord2", value_ord.to_string()},
      {"condition_numerator_even", num_even ? "true" : "false"},
      {"sigma_ord2", ord2(inv.sigma).to_string()},
  };
  return result;
}

/// (k >= 3 odd) or (k = 1 and sigma even) or (k even and tau_in_image)
inline bool yang_plus_condition(const ManifoldInvariants& inv) {
  detail::require_valid(inv);
  if (inv.k % 2 == 0) return inv.tau_in_image;
  if (inv.k == 1) return mpz_even_p(inv.sigma.get_mpz_t()) != 0;
  return true;
}

/// D_k N_2k + D_2k N_k = 2 (D'_k N_2k + D'_2k N_k), divisible by 4. Odd k only.
inline NumeratorIdentityReport yang_numerator_identity(std::int64_t k) {
  if (k < 1 || k % 2 == 0) {
    throw std::domain_error("numerator identity needs odd k >= 1, got " + std::to_string(k));
  }
  const auto pk = num_den_parts(TopIndex(k));
  const auto p2k = num_den_parts(TopIndex(2 * k));
  NumeratorIdentityReport r;
  r.k = k;
  r.lhs = pk.denominator * p2k.numerator + p2k.denominator * pk.numerator;
  r.rhs = 2 * (pk.odd_denominator * p2k.numerator + p2k.odd_denominator * pk.numerator);
  r.lhs_ord = ord2(r.lhs);
  const Rational sum = bernoulli_top(TopIndex(k)).reciprocal() +
                       bernoulli_top(TopIndex(2 * k)).reciprocal();
  r.reduced_numerator_ord = ord2(sum.numerator());
  r.holds = r.lhs == r.rhs && r.lhs_ord.at_least(2) && r.reduced_numerator_ord == r.lhs_ord;
  return r;
}

/// Runs both decision procedures. Requires valid invariants and, for k >= 3,
/// ord_2(sigma) >= forced_sigma_valuation(k); throws std::domain_error otherwise.
inline AdmissibilityReport decide_admissibility(const ManifoldInvariants& inv) {
  detail::require_valid(inv);
  if (inv.k >= 3) {
    const std::int64_t forced = forced_sigma_valuation(inv.k);
    if (!ord2(inv.sigma).at_least(forced)) {
      throw std::domain_error("signature must be divisible by 2^" + std::to_string(forced) +
                              " for k=" + std::to_string(inv.k) + ", got ord2(sigma)=" +
                              ord2(inv.sigma).to_string());
    }
  }
  auto yang = yang_condition(inv);
  AdmissibilityReport report;
  report.yang_verdict = yang.verdict;
  report.yang_plus_verdict = yang_plus_condition(inv);
  report.consistent = report.yang_verdict == report.yang_plus_verdict;
  report.audit = std::move(yang.audit);
  if (inv.k >= 3) {
    report.audit.push_back({"forced_sigma_ord2", std::to_string(forced_sigma_valuation(inv.k))});
  }
  const auto a = ahat(inv.k, inv.sigma, inv.tau_sq);
  report.audit.push_back({"ahat", a.value.to_string()});
  report.audit.push_back({"ahat_is_integer", a.is_integer ? "true" : "false"});
  return report;
}

/// Instances for the equivalence audit, in ascending k. For each k:
///   sigma = +-2^v s, s in {1,3,5,7}, plus sigma = 0, where
///     k = 1: v in {0, 1}   (both signature parities)
///     k = 2: v in {0..3}   (no divisibility requirement)
///     k >= 3: v in {forced, forced + 1}
///   tau_in_image in {true} for odd k, {true, false} for even k,
///   tau_sq from a fixed pool, filtered by validate_invariants.
inline std::vector<ManifoldInvariants> audit_instances(std::int64_t max_k) {
  static const std::int64_t kTauPool[] = {0, 1, 2, 4, 6, 8, -8, 24, -40};
  static const long kOddParts[] = {1, 3, 5, 7};
  std::vector<ManifoldInvariants> out;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    std::vector<std::int64_t> exponents;
    if (k == 1) {
      exponents = {0, 1};
    } else if (k == 2) {
      exponents = {0, 1, 2, 3};
    } else {
      exponents = {forced_sigma_valuation(k), forced_sigma_valuation(k) + 1};
    }
    std::vector<BigInt> sigmas{BigInt(0)};
    for (const auto v : exponents) {
      for (const long s : kOddParts) {
        const BigInt mag = pow2_int(static_cast<unsigned long>(v)) * s;
        sigmas.push_back(mag);
        sigmas.push_back(-mag);
      }
    }
    const std::vector<bool> flags = k % 2 == 1 ? std::vector<bool>{true}
                                               : std::vector<bool>{true, false};
    for (const bool flag : flags) {
      for (const auto t : kTauPool) {
        ManifoldInvariants probe{k, BigInt(0), BigInt(static_cast<long>(t)), flag};
        if (!validate_invariants(probe).empty()) continue;
        for (const auto& s : sigmas) {
          probe.sigma = s;
          out.push_back(probe);
        }
      }
    }
  }
  return out;
}

}  // namespace steinfill
