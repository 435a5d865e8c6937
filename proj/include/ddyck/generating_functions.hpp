#pragma once

/// The generating functions of the d-Dyck world as truncated exact series:
/// the rational closed form for d >= 0, the functional system for d < 0
/// solved by whole-series fixed-point sweeps, the closed radical forms for
/// d = -1, the Lagrange-inversion expansion, and the bivariate area system.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ddyck/numeric.hpp"
#include "ddyck/power_series.hpp"

namespace ddyck {

namespace detail {

inline MarkerPoly ypoly() { return MarkerPoly::monomial(Rat(1), 1); }

inline BivariateSeries one_minus_x(std::size_t order) {
  BivariateSeries s = BivariateSeries::one(order);
  if (order >= 1) s.set(1, MarkerPoly(Rat(-1)));
  return s;
}

/// y/(1-x): every x-power carries the bare marker.
inline BivariateSeries y_over_one_minus_x(std::size_t order) {
  BivariateSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.set(n, ypoly());
  return s;
}

inline Series uni_poly(std::size_t order, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  Series s(order);
  for (const auto& [k, v] : terms)
    if (k <= order) s.set(k, s[k] + Rat(v));
  return s;
}

}  // namespace detail

/// L_d(x, y) for d >= 0: the rational closed form
///   1 + x y (1 - 2x + x^2 + x y - x^{d+1} y) / ((1-x)(1 - 2x + x^2 - x^{d+1} y)).
inline BivariateSeries series_L_nonneg(int d, std::size_t order) {
  if (d < 0) throw std::invalid_argument("series_L_nonneg requires d >= 0");
  const MarkerPoly one{Rat(1)};
  const MarkerPoly y = detail::ypoly();
  const std::size_t dd = static_cast<std::size_t>(d);

  BivariateSeries inner(order);  // 1 - 2x + x^2 + x y - x^{d+1} y
  inner.set(0, one);
  if (order >= 1) inner.set(1, MarkerPoly(Rat(-2)) + y);
  if (order >= 2) inner.set(2, one);
  if (dd + 1 <= order) inner.set(dd + 1, inner[dd + 1] - y);

  BivariateSeries den2(order);  // 1 - 2x + x^2 - x^{d+1} y
  den2.set(0, one);
  if (order >= 1) den2.set(1, MarkerPoly(Rat(-2)));
  if (order >= 2) den2.set(2, one);
  if (dd + 1 <= order) den2.set(dd + 1, den2[dd + 1] - y);

  BivariateSeries xy = BivariateSeries::monomial(order, 1, y);
  return BivariateSeries::one(order) + (xy * inner).div(detail::one_minus_x(order) * den2);
}

/// Solution of the functional system for d = -e < 0:
///   L = x y + x L + x S L
///   S = y/(1-x) + sum_j Q_j
///   Q_0 = x S * x y/(1-x) + x S Q_0
///   Q_i = x Q_{i-1} + x S Q_i           (1 <= i <= e-1)
struct LeSystem {
  BivariateSeries L;
  BivariateSeries S;
  std::vector<BivariateSeries> Q;  // Q[0] .. Q[e-1]
  std::size_t sweeps = 0;
};

/// Fixed-point iteration from the zero series. Every unknown occurrence on
/// a right-hand side carries a factor x, so each sweep fixes at least one
/// further coefficient; stabilization is detected by coefficientwise
/// equality of consecutive sweeps and capped at order+2 sweeps.
inline LeSystem solve_Le_system(int e, std::size_t order) {
  if (e < 1) throw std::invalid_argument("solve_Le_system requires e >= 1");
  if (order < 1) throw std::invalid_argument("solve_Le_system requires order >= 1");
  const MarkerPoly y = detail::ypoly();
  const BivariateSeries x = BivariateSeries::monomial(order, 1, MarkerPoly(Rat(1)));
  const BivariateSeries xy = BivariateSeries::monomial(order, 1, y);
  const BivariateSeries y1mx = detail::y_over_one_minus_x(order);
  const BivariateSeries xy_over_1mx = xy.div(detail::one_minus_x(order));

  LeSystem sys{BivariateSeries(order), BivariateSeries(order), {}, 0};
  sys.Q.assign(static_cast<std::size_t>(e), BivariateSeries(order));

  for (std::size_t sweep = 1; sweep <= order + 2; ++sweep) {
    std::vector<BivariateSeries> Qn;
    Qn.reserve(sys.Q.size());
    Qn.push_back(x * sys.S * xy_over_1mx + x * sys.S * sys.Q[0]);
    for (std::size_t i = 1; i < sys.Q.size(); ++i)
      Qn.push_back(x * Qn[i - 1] + x * sys.S * sys.Q[i]);
    BivariateSeries Sn = y1mx;
    for (const BivariateSeries& q : Qn) Sn = Sn + q;
    BivariateSeries Ln = xy + x * sys.L + x * Sn * sys.L;
    bool stable = Sn == sys.S && Ln == sys.L && Qn == sys.Q;
    sys.S = std::move(Sn);
    sys.L = std::move(Ln);
    sys.Q = std::move(Qn);
    sys.sweeps = sweep;
    if (stable) return sys;
  }
  throw NonConvergence("Le system did not stabilize within order+2 sweeps");
}

/// Closed bivariate form for d = -1:
///   L(x,y) = (x-1) y (1 - x(2+y) - sqrt((1 - x - 2xy - 2x^2 y + x^2 y^2 - x^3 y^2)/(1-x)))
///            / (2 (1 - 2x + x^2 - 2xy + x^2 y)).
inline BivariateSeries series_L_closed_minus1(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series_L_closed_minus1 requires order >= 1");
  const MarkerPoly one{Rat(1)};
  const MarkerPoly y = detail::ypoly();
  const MarkerPoly y2 = y * y;

  BivariateSeries rad_num(order);  // 1 - x - 2xy - 2x^2 y + x^2 y^2 - x^3 y^2
  rad_num.set(0, one);
  rad_num.set(1, MarkerPoly(Rat(-1)) - y * Rat(2));
  if (order >= 2) rad_num.set(2, y * Rat(-2) + y2);
  if (order >= 3) rad_num.set(3, -y2);
  BivariateSeries rad = rad_num.div(detail::one_minus_x(order)).sqrt();

  BivariateSeries head(order);  // 1 - x(2+y)
  head.set(0, one);
  head.set(1, MarkerPoly(Rat(-2)) - y);

  BivariateSeries xm1y(order);  // (x-1) y
  xm1y.set(0, -y);
  xm1y.set(1, y);

  BivariateSeries den(order);  // 2 (1 - 2x + x^2 - 2xy + x^2 y)
  den.set(0, MarkerPoly(Rat(2)));
  den.set(1, MarkerPoly(Rat(-4)) - y * Rat(4));
  if (order >= 2) den.set(2, MarkerPoly(Rat(2)) + y * Rat(2));

  return (xm1y * (head - rad)).div(den);
}

/// Closed form for Q(x,y), the generating function of paths whose last
/// valley sits at ground level:
///   Q(x,y) = (1 - x - xy - x^2 y - sqrt((1-x)(1 - x - 2xy - 2x^2 y + x^2 y^2 - x^3 y^2)))
///            / (2 (1-x) x).
inline BivariateSeries series_Q_closed(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series_Q_closed requires order >= 1");
  const std::size_t work = order + 1;  // denominator carries a factor x
  const MarkerPoly one{Rat(1)};
  const MarkerPoly y = detail::ypoly();
  const MarkerPoly y2 = y * y;

  BivariateSeries f2(work);  // 1 - x - 2xy - 2x^2 y + x^2 y^2 - x^3 y^2
  f2.set(0, one);
  f2.set(1, MarkerPoly(Rat(-1)) - y * Rat(2));
  f2.set(2, y * Rat(-2) + y2);
  if (work >= 3) f2.set(3, -y2);
  BivariateSeries rad = (detail::one_minus_x(work) * f2).sqrt();

  BivariateSeries num(work);  // 1 - x - xy - x^2 y
  num.set(0, one);
  num.set(1, MarkerPoly(Rat(-1)) - y);
  num.set(2, -y);
  num = num - rad;

  BivariateSeries den(work);  // 2x - 2x^2
  den.set(1, MarkerPoly(Rat(2)));
  den.set(2, MarkerPoly(Rat(-2)));

  return num.div(den);  // order drops by the common factor x, back to `order`
}

/// b-series (1 - x^2 - sqrt(1 - 4x + 2x^2 + x^4)) / (2 (1-x) x); the x^n
/// coefficient counts paths with no valley or last valley at ground.
inline Series series_b(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series_b requires order >= 1");
  const std::size_t work = order + 1;
  Series rad = detail::uni_poly(work, {{0, 1}, {1, -4}, {2, 2}, {4, 1}}).sqrt();
  Series num = detail::uni_poly(work, {{0, 1}, {2, -1}}) - rad;
  Series den = detail::uni_poly(work, {{1, 2}, {2, -2}});
  return num.div(den);
}

namespace detail {

/// Enumerates all (i_2, ..., i_{e+1}) >= 0 with sum j * i_j == target.
template <class Fn>
void for_each_weighted_composition(int e, long long target, Fn&& fn) {
  std::vector<long long> iv(static_cast<std::size_t>(e), 0);
  auto rec = [&](auto&& self, int j, long long rem) -> void {
    if (j == e + 2) {
      if (rem == 0) fn(iv);
      return;
    }
    for (long long c = 0; c * j <= rem; ++c) {
      iv[static_cast<std::size_t>(j - 2)] = c;
      self(self, j + 1, rem - c * j);
    }
    iv[static_cast<std::size_t>(j - 2)] = 0;
  };
  rec(rec, 2, target);
}

class SeriesPowerCache {
 public:
  explicit SeriesPowerCache(Series base) : base_(std::move(base)) {
    powers_.push_back(Series::one(base_.order()));
  }
  const Series& at(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
    return powers_[k];
  }

 private:
  Series base_;
  std::vector<Series> powers_;
};

}  // namespace detail

/// L_e(x, 1) by Lagrange inversion: the n-th summand is
///   sum over 2 i_2 + ... + (e+1) i_{e+1} = n-1 of
///   multinomial(n; i_2..i_{e+1}) x^{n - sum i_j} t^{i_{e+1}}
///   prod_{j=2}^{e} (x C(e+2, j) - C(e, j-1))^{i_j} / (n (1 - (e+2)x)^n),
/// with t = ((e+2) x (1-x) - 1 + x(1+x)) / (1-x). A term whose x-valuation
/// (n+1)/2 exceeds the order is dropped, so n ranges over 1 .. 2*order-1.
inline Series lagrange_Le(int e, std::size_t order) {
  if (e < 1) throw std::invalid_argument("lagrange_Le requires e >= 1");
  if (order < 1) throw std::invalid_argument("lagrange_Le requires order >= 1");
  Series out(order);
  Series one_minus_x = detail::uni_poly(order, {{0, 1}, {1, -1}});
  detail::SeriesPowerCache inv_base(
      detail::uni_poly(order, {{0, 1}, {1, -(e + 2)}}).inverse());
  detail::SeriesPowerCache t(
      detail::uni_poly(order, {{0, -1}, {1, e + 3}, {2, -(e + 1)}}).div(one_minus_x));
  std::vector<detail::SeriesPowerCache> f;  // (x C(e+2,j) - C(e,j-1)), j = 2..e
  for (int j = 2; j <= e; ++j)
    f.emplace_back(Series::monomial(order, 1, Rat(binomial(e + 2, j))) -
                   Series::constant(order, Rat(binomial(e, j - 1))));

  for (long long n = 1; n <= 2 * static_cast<long long>(order) - 1; ++n) {
    detail::for_each_weighted_composition(e, n - 1, [&](const std::vector<long long>& iv) {
      long long m = 0;
      for (long long c : iv) m += c;
      if (n - m > static_cast<long long>(order)) return;
      Rat coeff(factorial(n), factorial(n - m));
      for (long long c : iv) coeff /= Rat(factorial(c));
      coeff /= n;
      Series term = inv_base.at(static_cast<std::size_t>(n)) *
                    t.at(static_cast<std::size_t>(iv.back()));
      for (std::size_t j = 0; j + 1 < iv.size(); ++j)
        term = term * f[j].at(static_cast<std::size_t>(iv[j]));
      out = out + term.shifted(static_cast<std::size_t>(n - m)).scaled(coeff);
    });
  }
  return out;
}

/// V(x) = sum a(n) x^n, the total area over D_{-1}(n): the closed radical
/// form with its two fixed numerator polynomials.
inline Series series_V(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series_V requires order >= 1");
  Series vb = detail::uni_poly(order, {{1, 2}, {2, -23}, {3, 107}, {4, -262}, {5, 359},
                                       {6, -256}, {7, 82}, {8, -5}, {9, -10}, {10, 6}});
  Series vc = detail::uni_poly(order, {{1, 1}, {2, -10}, {3, 41}, {4, -89}, {5, 108},
                                       {6, -73}, {7, 18}, {8, 2}});
  Series rad = detail::uni_poly(order, {{0, 1}, {1, -4}, {2, 2}, {4, 1}}).sqrt();
  Series d1 = detail::uni_poly(order, {{0, 1}, {1, -1}});
  Series d2 = detail::uni_poly(order, {{0, 1}, {1, -4}, {2, 2}});
  Series d3 = detail::uni_poly(order, {{0, 1}, {1, -3}, {2, -1}, {3, -1}});
  Series den = d1 * d1 * d2 * d2 * d2 * d3;
  return (vb - vc * rad).div(den);
}

/// The bivariate area system, marker variable q:
///   A(x,q) = x q + x q A(x q^2, q) + E(x,q) A(x,q) + x q B(x q^2, q) A(x,q)
///   B(x,q) = E^2 + E B + x q B(x q^2, q) B + x q B(x q^2, q) E
/// with E(x,q) = sum_{j>=1} x^j q^{j^2} (the pyramids). Coefficient of x^n
/// in A is the exact area histogram of D_{-1}(n).
struct AreaSystem {
  BivariateSeries A;
  BivariateSeries B;
  std::size_t sweeps = 0;
};

/// Fixed-point sweeps from zero, with marker degree capped at order^2 (the
/// maximum area of a semi-length-order path), which loses nothing.
inline AreaSystem solve_area_system(std::size_t order) {
  if (order < 1) throw std::invalid_argument("solve_area_system requires order >= 1");
  const std::size_t cap = order * order;
  BivariateSeries E(order);
  for (std::size_t j = 1; j <= order; ++j)
    E.set(j, MarkerPoly::monomial(Rat(1), j * j));
  const BivariateSeries xq = BivariateSeries::monomial(order, 1, detail::ypoly());

  AreaSystem sys{BivariateSeries(order), BivariateSeries(order), 0};
  for (std::size_t sweep = 1; sweep <= order + 2; ++sweep) {
    BivariateSeries Bs = subst_xq2(sys.B);
    BivariateSeries Bn =
        truncate_marker(E * E + E * sys.B + xq * Bs * sys.B + xq * Bs * E, cap);
    BivariateSeries Bsn = subst_xq2(Bn);
    BivariateSeries An = truncate_marker(
        xq + xq * subst_xq2(sys.A) + E * sys.A + xq * Bsn * sys.A, cap);
    bool stable = An == sys.A && Bn == sys.B;
    sys.A = std::move(An);
    sys.B = std::move(Bn);
    sys.sweeps = sweep;
    if (stable) return sys;
  }
  throw NonConvergence("area system did not stabilize within order+2 sweeps");
}

}  // namespace ddyck
