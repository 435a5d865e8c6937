#pragma once

/// Exact sequence engines: Catalan/Narayana, the d >= 0 family, and the
/// interlinked d = -1 tables (q_n, b(n), r(n) three ways, A_n, a(n)).

#include <cstddef>
#include <functional>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "ddyck/numeric.hpp"

namespace ddyck {

inline Int catalan(long long n) {
  if (n < 0) throw IndexOutOfRange("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

/// Narayana numbers N(n, k) = C(n,k) C(n,k-1) / n, with N(0,0) = 1. Out of
/// range k maps to 0 via the binomial zero convention, which is what the
/// closed sums in this library rely on.
inline Int narayana(long long n, long long k) {
  if (n < 0) throw IndexOutOfRange("narayana: negative index");
  if (n == 0) return k == 0 ? 1 : 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

/// r_d(n) for d >= 0: initial rule r_d(n) = C(n,2) + 1 on the seed range,
/// then r_d(n) = 2 r_d(n-1) - r_d(n-2) + r_d(n-d-1). For d = 0 the
/// recursion needs r(n-2), so the seed range extends to n = 1 (the initial
/// rule still gives the correct value there).
inline Int r_nonneg(int d, long long n) {
  if (d < 0) throw std::invalid_argument("r_nonneg requires d >= 0");
  if (n < 0) throw IndexOutOfRange("r_nonneg: negative index");
  const long long seeds = std::max<long long>(d, 1);
  std::vector<Int> r(static_cast<std::size_t>(std::max(n, seeds)) + 1);
  for (long long m = 0; m <= std::min(n, seeds); ++m) r[m] = binomial(m, 2) + 1;
  for (long long m = seeds + 1; m <= n; ++m)
    r[m] = 2 * r[m - 1] - r[m - 2] + r[m - d - 1];
  return r[static_cast<std::size_t>(n)];
}

/// The closed sum for d >= 1: sum_k C(n - (d-1)(k-1), 2k).
inline Int r_nonneg_closed_sum(int d, long long n) {
  if (d < 1) throw std::invalid_argument("r_nonneg_closed_sum requires d >= 1");
  if (n < 1) throw IndexOutOfRange("r_nonneg_closed_sum: index below 1");
  Int sum = 0;
  for (long long k = 0; k <= (n + d - 2) / d; ++k)
    sum += binomial(n - (d - 1) * (k - 1), 2 * k);
  return sum;
}

/// p_d(n, k) = C(n + k - d(k-2) - 2, 2(k-1)) for d >= 0: the number of
/// d-Dyck paths of semi-length n with exactly k peaks.
inline Int p_nonneg(int d, long long n, long long k) {
  if (d < 0) throw std::invalid_argument("p_nonneg requires d >= 0");
  if (n < 1 || k < 1) throw IndexOutOfRange("p_nonneg: indices below 1");
  return binomial(n + k - d * (k - 2) - 2, 2 * (k - 1));
}

/// Extend-only memoized integer sequence. Extension happens under a lock
/// and strictly in index order, so concurrent callers observe the same
/// values regardless of interleaving; values never change once computed.
class SequenceTable {
 public:
  using Rule = std::function<Int(long long, const SequenceTable&)>;

  SequenceTable(std::string name, long long first_index, Rule rule)
      : name_(std::move(name)), first_(first_index), rule_(std::move(rule)) {}

  SequenceTable(const SequenceTable&) = delete;
  SequenceTable& operator=(const SequenceTable&) = delete;

  Int at(long long n) const {
    if (n < first_)
      throw IndexOutOfRange(name_ + ": index " + std::to_string(n) + " below first index");
    std::scoped_lock<std::recursive_mutex> lock(mu_);
    while (first_ + static_cast<long long>(values_.size()) <= n)
      values_.push_back(rule_(first_ + static_cast<long long>(values_.size()), *this));
    return values_[static_cast<std::size_t>(n - first_)];
  }

  const std::string& name() const { return name_; }
  long long first_index() const { return first_; }

 private:
  std::string name_;
  long long first_;
  Rule rule_;
  mutable std::recursive_mutex mu_;
  mutable std::vector<Int> values_;
};

/// The d = -1 tables. Dependencies are acyclic (q standalone; b, r, A need
/// q; a needs A, q, r), so cross-table extension cannot deadlock.
class MinusOneTables {
 public:
  MinusOneTables()
      : q_("q", 1,
           [](long long n, const SequenceTable& self) -> Int {
             if (n == 1) return 0;
             if (n == 2) return 1;
             if (n == 3) return 3;
             Int sum = 2 * self.at(n - 1) + self.at(n - 2) + self.at(n - 3) + 1;
             for (long long i = 2; i <= n - 4; ++i)
               sum += self.at(i) * (self.at(n - i - 1) - self.at(n - i - 2));
             return sum;
           }),
        b_("b", 0,
           [this](long long n, const SequenceTable&) -> Int {
             return n == 0 ? Int(1) : Int(q_.at(n) + 1);
           }),
        r_("r", 0,
           [this](long long n, const SequenceTable& self) -> Int {
             if (n <= 3) return std::vector<Int>{0, 1, 2, 5}[static_cast<std::size_t>(n)];
             Int sum = 3 * self.at(n - 1) - self.at(n - 2) + q_.at(n - 2);
             for (long long i = 2; i <= n - 3; ++i)
               sum += q_.at(i) * (self.at(n - i - 1) - self.at(n - i - 2));
             return sum;
           }),
        A_("A", 1,
           [this](long long n, const SequenceTable& self) -> Int {
             if (n <= 4) return std::vector<Int>{0, 0, 2, 13, 58}[static_cast<std::size_t>(n)];
             Int sum = 2 * self.at(n - 1) + self.at(n - 2) + 2 * self.at(n - 3) + q_.at(n) -
                       q_.at(n - 1) + 2 * n * q_.at(n - 2) + 2 * (n - 5) * q_.at(n - 3) +
                       4 * n * n - 14 * n + 13;
             for (long long i = 2; i <= n - 4; ++i)
               sum += 2 * (self.at(i) + i * q_.at(i) + i * (i + 1)) *
                      (q_.at(n - i - 1) - q_.at(n - i - 2));
             return sum;
           }),
        a_("a", 1, [this](long long n, const SequenceTable& self) -> Int {
          // Valid from n = 4 on; a(1..3) are derived seeds (exhaustive
          // totals, equal to the V(x) coefficients).
          if (n <= 3) return std::vector<Int>{0, 1, 6, 29}[static_cast<std::size_t>(n)];
          Int sum = 3 * self.at(n - 1) - self.at(n - 2) + A_.at(n - 2) +
                    2 * (n - 1) * q_.at(n - 2) + 2 * n * r_.at(n - 1) +
                    2 * (3 - n) * r_.at(n - 2) - 4 * r_.at(n - 3) + (n - 1) * (n - 1);
          for (long long i = 3; i <= n - 2; ++i) {
            sum += q_.at(i - 1) * (self.at(n - i) - self.at(n - i - 1));
            sum += (A_.at(i - 1) + (2 * i - 1) * q_.at(i - 1) + i * i) *
                   (r_.at(n - i) - r_.at(n - i - 1));
          }
          return sum;
        }) {}

  Int q(long long n) const { return q_.at(n); }
  Int b(long long n) const { return b_.at(n); }
  Int r(long long n) const { return r_.at(n); }
  Int A(long long n) const { return A_.at(n); }
  Int a(long long n) const { return a_.at(n); }

 private:
  SequenceTable q_, b_, r_, A_, a_;
};

inline const MinusOneTables& shared_minus_one_tables() {
  static MinusOneTables tables;
  return tables;
}

inline Int q_seq(long long n) { return shared_minus_one_tables().q(n); }
inline Int A_seq(long long n) { return shared_minus_one_tables().A(n); }
inline Int a_seq(long long n) { return shared_minus_one_tables().a(n); }

/// r(n) by the order-6 recurrence with polynomial coefficients. The shifted
/// relation determines r(m) for every m >= 6 from the seeds r(0..5); the
/// leading coefficient 6 + n never vanishes and the division is exact.
inline Int r_p_recurrence(long long n) {
  static SequenceTable table("r_prec", 0, [](long long m, const SequenceTable& self) -> Int {
    if (m <= 5) return std::vector<Int>{0, 1, 2, 5, 14, 41}[static_cast<std::size_t>(m)];
    const long long k = m - 6;
    Int num = -(2 * k * self.at(k) - 4 * k * self.at(k + 1) + (12 + 5 * k) * self.at(k + 2) -
                4 * (15 + 4 * k) * self.at(k + 3) + 10 * (9 + 2 * k) * self.at(k + 4) -
                2 * (21 + 4 * k) * self.at(k + 5));
    if (num % (6 + k) != 0)
      throw std::logic_error("P-recurrence produced a non-integral value");
    return num / (6 + k);
  });
  return table.at(n);
}

enum class BClosedFormula { inclusion_exclusion, narayana_sum };

/// b(n), the number of paths with no valley or last valley at ground level,
/// by either closed formula. The alternating sum reads
///   b(n) = sum_j (-1)^j / (n-j) C(n-j, j) C(2n-3j, n-j+1)   for n >= 1,
/// with b(0) = 1; the Narayana double sum is
///   b(n) = sum_k sum_j C(n-k, j) N(j, k).
inline Int b_closed(long long n, BClosedFormula formula) {
  if (n < 0) throw IndexOutOfRange("b_closed: negative index");
  if (formula == BClosedFormula::inclusion_exclusion) {
    if (n == 0) return 1;
    Rat sum = 0;
    for (long long j = 0; j <= (n - 1) / 2; ++j) {
      Rat term(binomial(n - j, j) * binomial(2 * n - 3 * j, n - j + 1), Int(n - j));
      sum += (j % 2 == 0) ? term : -term;
    }
    if (boost::multiprecision::denominator(sum) != 1)
      throw std::logic_error("b_closed: alternating sum is not an integer");
    return boost::multiprecision::numerator(sum);
  }
  Int sum = 0;
  for (long long k = 0; k <= n / 2; ++k)
    for (long long j = 0; j <= n - k; ++j) sum += binomial(n - k, j) * narayana(j, k);
  return sum;
}

enum class RMinus1Method { convolution, p_recurrence, double_sum };

namespace detail {

/// r(n) = sum_{l=0}^{n} sum_{i=0}^{n-l-1} C(n-l-1, i) q^(i)(l), where
/// q^(i) is the i-fold convolution power of the b sequence (parts of size
/// zero allowed: the empty path belongs to B).
inline Int r_double_sum(long long n) {
  if (n < 0) throw IndexOutOfRange("r_double_sum: negative index");
  if (n == 0) return 0;
  std::vector<Int> b(static_cast<std::size_t>(n) + 1);
  for (long long m = 0; m <= n; ++m)
    b[static_cast<std::size_t>(m)] = b_closed(m, BClosedFormula::narayana_sum);
  std::vector<Int> conv(static_cast<std::size_t>(n) + 1);  // q^(0)(l) = [l == 0]
  conv[0] = 1;
  Int total = 0;
  for (long long i = 0; i <= n - 1; ++i) {
    for (long long l = 0; l <= n - 1 - i; ++l)
      total += binomial(n - l - 1, i) * conv[static_cast<std::size_t>(l)];
    if (i == n - 1) break;
    std::vector<Int> next(static_cast<std::size_t>(n) + 1);
    for (long long l = 0; l <= n; ++l) {
      if (conv[static_cast<std::size_t>(l)].is_zero()) continue;
      for (long long m = 0; l + m <= n; ++m)
        next[static_cast<std::size_t>(l + m)] +=
            conv[static_cast<std::size_t>(l)] * b[static_cast<std::size_t>(m)];
    }
    conv = std::move(next);
  }
  return total;
}

}  // namespace detail

inline Int r_minus1(long long n, RMinus1Method method) {
  switch (method) {
    case RMinus1Method::convolution:
      return shared_minus_one_tables().r(n);
    case RMinus1Method::p_recurrence:
      return r_p_recurrence(n);
    case RMinus1Method::double_sum:
      return detail::r_double_sum(n);
  }
  throw std::invalid_argument("r_minus1: unknown method");
}

}  // namespace ddyck
