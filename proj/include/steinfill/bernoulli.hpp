#pragma once

/**
 * @file bernoulli.hpp
 * @brief Exact Bernoulli numbers in both index conventions.
 *
 * Two conventions are in play:
 *   number-theoretic  t/(e^t - 1) = sum_n NT_n t^n / n!   (NT_1 = -1/2, NT_odd>1 = 0)
 *   topologist        B_k = (-1)^(k+1) NT_{2k} > 0          (B_1 = 1/6, B_2 = 1/30, ...)
 *
 * Values come from two unrelated algorithms:
 *   - tangent numbers (integer recurrence, one division at the end); this is
 *     the production route and feeds the cache,
 *   - the Akiyama-Tanigawa transform over rationals; used only for audits.
 */

#include <steinfill/exact_arith.hpp>

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinfill {

/// Index n of the number-theoretic Bernoulli number NT_n.
struct NTIndex {
  explicit NTIndex(std::int64_t n) : value(n) {
    if (n < 0) throw std::domain_error("NT index must be >= 0, got " + std::to_string(n));
  }
  std::int64_t value;
};

/// Index k of the topologist's Bernoulli number B_k.
struct TopIndex {
  explicit TopIndex(std::int64_t k) : value(k) {
    if (k < 1) throw std::domain_error("topological index must be >= 1, got " + std::to_string(k));
  }
  std::int64_t value;
};

enum class Convention { number_theoretic, topological };

/// A Bernoulli number together with the convention its index refers to.
struct BernoulliValue {
  Convention convention;
  std::int64_t index;
  Rational value;
};

/// B_k = N_k / D_k in lowest terms, with D_k = 2 * D'_k.
struct NumDenParts {
  BigInt numerator;
  BigInt denominator;
  BigInt odd_denominator;
};

// ---------------------------------------------------------------------------
// Algorithms
// ---------------------------------------------------------------------------

/// Tangent numbers T_1..T_count (T_1 = 1, T_2 = 2, T_3 = 16, ...), index 0 unused.
inline std::vector<BigInt> tangent_numbers(std::size_t count) {
  std::vector<BigInt> t(count + 1);
  if (count == 0) return t;
  t[1] = 1;
  for (std::size_t k = 2; k <= count; ++k) t[k] = (k - 1) * t[k - 1];
  for (std::size_t k = 2; k <= count; ++k) {
    for (std::size_t j = k; j <= count; ++j) {
      t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
  }
  return t;
}

/// NT_0, NT_2, ..., NT_{2 * half_count} via tangent numbers.
/// NT_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
inline std::vector<Rational> even_bernoulli_by_tangent(std::size_t half_count) {
  const auto t = tangent_numbers(half_count);
  std::vector<Rational> out;
  out.reserve(half_count + 1);
  out.emplace_back(1L);
  for (std::size_t k = 1; k <= half_count; ++k) {
    const BigInt four_k = pow2_int(2 * k);
    BigInt num = BigInt(static_cast<unsigned long>(2 * k)) * t[k];
    if (k % 2 == 0) num = -num;
    out.emplace_back(num, four_k * (four_k - 1));
  }
  return out;
}

/// NT_0..NT_max_n by the Akiyama-Tanigawa transform.
/// The transform natively yields +1/2 at n = 1; that entry is negated to match
/// the generating function t/(e^t - 1).
inline std::vector<Rational> bernoulli_by_akiyama_tanigawa(std::size_t max_n) {
  std::vector<Rational> a(max_n + 1);
  std::vector<Rational> out(max_n + 1);
  for (std::size_t m = 0; m <= max_n; ++m) {
    a[m] = Rational(BigInt(1), BigInt(static_cast<unsigned long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    out[m] = a[0];
  }
  if (max_n >= 1) out[1] = -out[1];
  return out;
}

// ---------------------------------------------------------------------------
// Cached table
// ---------------------------------------------------------------------------

/// Memoized even-index Bernoulli numbers. Thread safe; a table built with
/// caching disabled recomputes every request and returns identical values.
class BernoulliTable {
 public:
  explicit BernoulliTable(bool caching = true) : caching_(caching) {}

  BernoulliTable(const BernoulliTable&) = delete;
  BernoulliTable& operator=(const BernoulliTable&) = delete;

  /// NT_n for any n >= 0.
  Rational nt(NTIndex index) const {
    const auto n = static_cast<std::size_t>(index.value);
    if (n == 1) return Rational(BigInt(-1), BigInt(2));
    if (n % 2 == 1) return Rational();
    const std::size_t half = n / 2;
    if (!caching_) return even_bernoulli_by_tangent(half)[half];
    std::lock_guard lock(mutex_);
    if (half >= even_.size()) {
      const std::size_t grown = std::max(half, 2 * (even_.size() == 0 ? 0 : even_.size() - 1));
      even_ = even_bernoulli_by_tangent(std::max<std::size_t>(grown, 16));
    }
    return even_[half];
  }

  /// B_k = (-1)^(k+1) NT_{2k}.
  Rational top(TopIndex index) const {
    Rational v = nt(NTIndex(2 * index.value));
    return index.value % 2 == 1 ? v : -v;
  }

  bool caching() const { return caching_; }

  std::size_t cached_count() const {
    std::lock_guard lock(mutex_);
    return even_.size();
  }

 private:
  bool caching_;
  mutable std::mutex mutex_;
  mutable std::vector<Rational> even_;
};

inline BernoulliTable& shared_table() {
  static BernoulliTable table;
  return table;
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

enum class Mode { fast, audit };

/// NT_n. In audit mode the value is recomputed by Akiyama-Tanigawa and an
/// InternalCheckFailure is thrown on any disagreement.
inline Rational bernoulli_nt(NTIndex n, Mode mode = Mode::fast) {
  Rational v = shared_table().nt(n);
  if (mode == Mode::audit) {
    const auto oracle = bernoulli_by_akiyama_tanigawa(static_cast<std::size_t>(n.value));
    internal_check(oracle.back() == v, "Bernoulli algorithms disagree at n = " +
                                           std::to_string(n.value) + ": tangent " +
                                           v.to_string() + " vs Akiyama-Tanigawa " +
                                           oracle.back().to_string());
  }
  return v;
}

/// B_k, always positive.
inline Rational bernoulli_top(TopIndex k, Mode mode = Mode::fast) {
  Rational v = bernoulli_nt(NTIndex(2 * k.value), mode);
  if (k.value % 2 == 0) v = -v;
  internal_check(v.sign() > 0, "B_" + std::to_string(k.value) + " is not positive");
  return v;
}

inline BernoulliValue bernoulli_value(NTIndex n) {
  return {Convention::number_theoretic, n.value, bernoulli_nt(n)};
}

inline BernoulliValue bernoulli_value(TopIndex k) {
  return {Convention::topological, k.value, bernoulli_top(k)};
}

struct IndexBridge {
  NTIndex nt_index;
  int sign;
};

/// B_k = sign * NT_{nt_index} with nt_index = 2k and sign = (-1)^(k+1).
inline IndexBridge index_bridge(TopIndex k) {
  return {NTIndex(2 * k.value), k.value % 2 == 1 ? 1 : -1};
}

/// Product of primes p with (p - 1) | n. Defined for even n >= 2 only.
inline BigInt vsc_denominator(NTIndex index) {
  const std::int64_t n = index.value;
  if (n < 2 || n % 2 != 0) {
    throw std::domain_error("vsc_denominator needs even n >= 2, got " + std::to_string(n));
  }
  BigInt product = 1;
  const auto take = [&](std::int64_t d) {
    if (is_small_prime(BigInt(static_cast<long>(d + 1)))) product *= static_cast<long>(d + 1);
  };
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    take(d);
    if (d != n / d) take(n / d);
  }
  return product;
}

/// N_k, D_k, D'_k for B_k. Throws InternalCheckFailure if N_k is even or
/// D_k is not twice an odd number.
inline NumDenParts num_den_parts(TopIndex k) {
  const Rational b = bernoulli_top(k);
  NumDenParts parts{b.numerator(), b.denominator(), 0};
  const std::string tag = "B_" + std::to_string(k.value);
  internal_check(mpz_odd_p(parts.numerator.get_mpz_t()) != 0, tag + ": numerator is even");
  internal_check(mpz_even_p(parts.denominator.get_mpz_t()) != 0, tag + ": denominator is odd");
  parts.odd_denominator = parts.denominator / 2;
  internal_check(mpz_odd_p(parts.odd_denominator.get_mpz_t()) != 0,
                 tag + ": 4 divides the denominator");
  return parts;
}

struct SelfCheckDiscrepancy {
  std::int64_t n;
  std::string what;
  Rational tangent_value;
  Rational oracle_value;
};

struct SelfCheckReport {
  std::int64_t n_max = 0;
  std::int64_t checked = 0;
  std::optional<SelfCheckDiscrepancy> first_discrepancy;

  bool ok() const { return !first_discrepancy.has_value(); }
};

/// Cross-checks both algorithms and the denominator law for every even
/// n in [2, n_max]. Stops at the first discrepancy.
inline SelfCheckReport self_check(NTIndex n_max) {
  if (n_max.value % 2 != 0) {
    throw std::domain_error("self_check needs an even bound, got " + std::to_string(n_max.value));
  }
  SelfCheckReport report;
  report.n_max = n_max.value;
  if (n_max.value < 2) return report;

  const auto oracle = bernoulli_by_akiyama_tanigawa(static_cast<std::size_t>(n_max.value));
  for (std::int64_t n = 2; n <= n_max.value; n += 2) {
    const Rational value = shared_table().nt(NTIndex(n));
    const Rational& other = oracle[static_cast<std::size_t>(n)];
    ++report.checked;
    if (value != other) {
      report.first_discrepancy = SelfCheckDiscrepancy{n, "algorithms disagree", value, other};
      break;
    }
    if (value.denominator() != vsc_denominator(NTIndex(n))) {
      report.first_discrepancy =
          SelfCheckDiscrepancy{n, "denominator differs from prime product", value, other};
      break;
    }
  }
  return report;
}

}  // namespace steinfill
