#pragma once

/// Truncated power series in x over an exact coefficient ring. The two
/// instantiations used in practice are PowerSeries<Rat> (univariate) and
/// PowerSeries<MarkerPoly> (bivariate: polynomial-in-marker coefficients).

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ddyck/marker_poly.hpp"
#include "ddyck/numeric.hpp"

namespace ddyck {

class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByNonUnit : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

class SqrtOfNonUnitConstant : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// Defensive only: the fixed-point solvers provably stabilize, so seeing
/// this indicates an implementation bug rather than a data problem.
class NonConvergence : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

namespace detail {

template <class C>
struct ring;

template <>
struct ring<Rat> {
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& v) { return v.is_zero(); }
  static Rat invert(const Rat& v) {
    if (v.is_zero()) throw DivisionByNonUnit("division by zero coefficient");
    return Rat(1) / v;
  }
  static Rat scale(const Rat& v, const Rat& s) { return v * s; }
};

template <>
struct ring<MarkerPoly> {
  static MarkerPoly zero() { return {}; }
  static MarkerPoly one() { return MarkerPoly(Rat(1)); }
  static bool is_zero(const MarkerPoly& v) { return v.is_zero(); }
  static MarkerPoly invert(const MarkerPoly& v) {
    if (v.degree() != 0)
      throw DivisionByNonUnit("leading coefficient is not a unit (non-constant marker polynomial)");
    return MarkerPoly(Rat(1) / v[0]);
  }
  static MarkerPoly scale(const MarkerPoly& v, const Rat& s) { return v * s; }
};

}  // namespace detail

template <class Coeff>
class PowerSeries {
 public:
  using ring = detail::ring<Coeff>;

  /// Zero series truncated at x^order.
  explicit PowerSeries(std::size_t order) : c_(order + 1, ring::zero()) {}

  static PowerSeries one(std::size_t order) { return constant(order, ring::one()); }

  static PowerSeries constant(std::size_t order, Coeff value) {
    PowerSeries s(order);
    s.c_[0] = std::move(value);
    return s;
  }

  static PowerSeries monomial(std::size_t order, std::size_t n, Coeff value) {
    PowerSeries s(order);
    s.set(n, std::move(value));
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }

  const Coeff& operator[](std::size_t n) const {
    if (n >= c_.size()) throw IndexOutOfRange("series coefficient index beyond order");
    return c_[n];
  }

  void set(std::size_t n, Coeff value) {
    if (n >= c_.size()) throw IndexOutOfRange("series coefficient index beyond order");
    c_[n] = std::move(value);
  }

  /// Index of the first nonzero coefficient; order()+1 for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!ring::is_zero(c_[i])) return i;
    return c_.size();
  }

  PowerSeries truncated(std::size_t new_order) const {
    PowerSeries r(std::min(new_order, order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i];
    return r;
  }

  /// Multiplication by x^k at unchanged order (top coefficients fall off).
  PowerSeries shifted(std::size_t k) const {
    PowerSeries r(order());
    for (std::size_t i = k; i <= order(); ++i) r.c_[i] = c_[i - k];
    return r;
  }

  PowerSeries operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
  }

  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (Coeff& v : r.c_) v = -v;
    return r;
  }

  PowerSeries operator-(const PowerSeries& o) const { return *this + (-o); }

  PowerSeries operator*(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
      if (ring::is_zero(c_[i])) continue;
      for (std::size_t j = 0; i + j <= r.order(); ++j) {
        if (ring::is_zero(o.c_[j])) continue;
        r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
      }
    }
    return r;
  }

  PowerSeries scaled(const Rat& s) const {
    PowerSeries r = *this;
    for (Coeff& v : r.c_) v = ring::scale(v, s);
    return r;
  }

  PowerSeries pow(unsigned k) const {
    PowerSeries r = one(order());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Exact division. If the divisor has valuation k > 0, the dividend must
  /// too, and the quotient comes back truncated at order() - k.
  PowerSeries div(const PowerSeries& o) const {
    std::size_t k = o.valuation();
    if (k > o.order()) throw DivisionByNonUnit("division by the zero series");
    if (valuation() < k)
      throw DivisionByNonUnit("dividend valuation below divisor valuation");
    std::size_t n = std::min(order(), o.order()) - k;
    Coeff inv = ring::invert(o.c_[k]);
    PowerSeries q(n);
    for (std::size_t m = 0; m <= n; ++m) {
      Coeff acc = m + k <= order() ? c_[m + k] : ring::zero();
      for (std::size_t j = 1; j <= m; ++j) acc = acc - o.c_[j + k] * q.c_[m - j];
      q.c_[m] = acc * inv;
    }
    return q;
  }

  PowerSeries inverse() const { return one(order()).div(*this); }

  /// Square root by Newton iteration; requires constant term exactly 1.
  PowerSeries sqrt() const {
    if (!(c_[0] == ring::one()))
      throw SqrtOfNonUnitConstant("series sqrt requires constant term 1");
    PowerSeries s = one(order());
    // Newton doubles the number of correct coefficients per step.
    std::size_t max_steps = 2;
    for (std::size_t w = 1; w <= order(); w *= 2) ++max_steps;
    for (std::size_t step = 0; step < max_steps; ++step) {
      PowerSeries next = (s + div(s)).scaled(Rat(1, 2));
      if (next == s) return s;
      s = std::move(next);
    }
    throw NonConvergence("series sqrt did not stabilize");
  }

  /// Two series agree when all coefficients up to the smaller order match.
  bool operator==(const PowerSeries& o) const {
    std::size_t n = std::min(order(), o.order());
    for (std::size_t i = 0; i <= n; ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

 private:
  std::vector<Coeff> c_;
};

using Series = PowerSeries<Rat>;
using BivariateSeries = PowerSeries<MarkerPoly>;

/// x -> x q^2 substitution realized as coefficient reindexing: the x^n
/// coefficient gains a factor marker^(2n).
inline BivariateSeries subst_xq2(const BivariateSeries& a) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n].shifted(2 * n));
  return r;
}

/// Drops marker powers above max_degree in every coefficient.
inline BivariateSeries truncate_marker(const BivariateSeries& a, std::size_t max_degree) {
  BivariateSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n].truncated(max_degree));
  return r;
}

/// Marginal at marker = 1.
inline Series eval_marker_at_one(const BivariateSeries& a) {
  Series r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n].value_at_one());
  return r;
}

/// d/d(marker) at marker = 1, coefficient by coefficient.
inline Series derivative_marker_at_one(const BivariateSeries& a) {
  Series r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r.set(n, a[n].derivative_at_one());
  return r;
}

}  // namespace ddyck
