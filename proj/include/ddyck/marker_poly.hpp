#pragma once

/// Dense polynomial in one marker variable (y when marking peaks, q when
/// marking area) with exact rational coefficients.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ddyck/numeric.hpp"

namespace ddyck {

class MarkerPoly {
 public:
  MarkerPoly() = default;  // zero
  explicit MarkerPoly(Rat constant) : c_{std::move(constant)} { trim(); }
  MarkerPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  static MarkerPoly monomial(Rat coeff, std::size_t degree) {
    MarkerPoly p;
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = std::move(coeff);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& operator[](std::size_t k) const {
    static const Rat zero{0};
    return k < c_.size() ? c_[k] : zero;
  }

  MarkerPoly operator+(const MarkerPoly& o) const {
    MarkerPoly r;
    r.c_.assign(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
  }

  MarkerPoly operator-() const {
    MarkerPoly r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
  }

  MarkerPoly operator-(const MarkerPoly& o) const { return *this + (-o); }

  MarkerPoly operator*(const MarkerPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    MarkerPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
  }

  MarkerPoly operator*(const Rat& s) const {
    MarkerPoly r = *this;
    for (Rat& v : r.c_) v *= s;
    r.trim();
    return r;
  }

  /// Multiply by marker^k (reindexing, never composition).
  MarkerPoly shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    MarkerPoly r;
    r.c_.assign(c_.size() + k, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  /// Drops all terms of degree > max_degree.
  MarkerPoly truncated(std::size_t max_degree) const {
    if (c_.size() <= max_degree + 1) return *this;
    MarkerPoly r;
    r.c_.assign(c_.begin(), c_.begin() + static_cast<long>(max_degree) + 1);
    r.trim();
    return r;
  }

  /// Evaluation at marker = 1 (the plain count marginal).
  Rat value_at_one() const {
    Rat s = 0;
    for (const Rat& v : c_) s += v;
    return s;
  }

  /// d/d(marker) evaluated at marker = 1 (totals of the marked statistic).
  Rat derivative_at_one() const {
    Rat s = 0;
    for (std::size_t k = 1; k < c_.size(); ++k) s += Rat(k) * c_[k];
    return s;
  }

  bool operator==(const MarkerPoly&) const = default;

  /// Human-readable form in descending powers, e.g. "y^4+6y^3+6y^2+y".
  std::string to_string(char marker = 'y') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = c_.size(); idx-- > 0;) {
      const Rat& v = c_[idx];
      if (v.is_zero()) continue;
      bool negative = v < 0;
      Rat mag = negative ? Rat(-v) : v;
      if (!out.empty())
        out += negative ? "-" : "+";
      else if (negative)
        out += "-";
      bool unit = mag == 1;
      if (idx == 0 || !unit) out += mag.str();
      if (idx > 0) {
        out += marker;
        if (idx > 1) out += "^" + std::to_string(idx);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline MarkerPoly operator*(const Rat& s, const MarkerPoly& p) { return p * s; }

}  // namespace ddyck
