#pragma once

/// The encoding of (-1)-Dyck paths as tuples of B-paths plus a composition,
/// and its inverse via the rightmost-(-1)-valley decomposition.
///
/// phi((P_1..P_i), (C_1..C_{i+1})) assembles the path block by block. Block
/// j climbs U^{C_j} and then places P_j:
///   - P_j empty (lambda): descend D^{C_j} back to the block's base;
///   - P_j a pyramid:      insert it on the current plateau;
///   - P_j in Q:           insert it and descend one extra D, carving a
///                         valley exactly one below P_j's last (ground)
///                         valley -- a (-1)-valley.
/// A final climb U^{C_{i+1}} and the descent to the axis close the path.
///
/// The inverse rests on a structural fact about the image: the "junction"
/// valley that ends block j is weakly below every valley to its right, and
/// those weak suffix minima are exactly the junctions. Scanning them left
/// to right recovers each block: no interior valley and equal level means
/// lambda; no interior valley and a rise means a pyramid component; interior
/// valleys force a Q component whose last valley sits one above the
/// junction, with the junction step as the extra D.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddyck/path.hpp"

namespace ddyck {

class MalformedEncoding : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotMinusOneDyck : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Image of a path under the inverse map: component paths P_1..P_i (each
/// empty, a pyramid, or in Q) and a composition C_1..C_{i+1} of positive
/// integers. Total semi-length = sum of exponents + component semi-lengths.
struct Encoding {
  std::vector<Path> components;
  std::vector<long long> exponents;

  long long semi_length() const {
    long long total = 0;
    for (const Path& p : components) total += static_cast<long long>(p.semi_length());
    for (long long c : exponents) total += c;
    return total;
  }

  bool operator==(const Encoding&) const = default;
};

namespace detail {

enum class ComponentKind { lambda, pyramid, q_class };

inline ComponentKind classify_component(const Path& p) {
  if (p.empty()) return ComponentKind::lambda;
  ValleyVector v = valley_vector(p);
  if (v.empty()) return ComponentKind::pyramid;  // valley-free Dyck path = U^a D^a
  if (v.back() != 0 || !is_d_dyck(p, DParam::restricted(-1)))
    throw MalformedEncoding("component not in B: " + p.to_string());
  return ComponentKind::q_class;
}

}  // namespace detail

inline Path phi(const Encoding& enc) {
  if (enc.exponents.size() != enc.components.size() + 1)
    throw MalformedEncoding("need exactly one more exponent than components");
  for (long long c : enc.exponents)
    if (c < 1) throw MalformedEncoding("exponents must be positive");

  std::vector<Step> steps;
  long long height = 0;
  auto climb = [&](long long k, Step s) {
    steps.insert(steps.end(), static_cast<std::size_t>(k), s);
    height += s == Step::Up ? k : -k;
  };
  for (std::size_t j = 0; j < enc.components.size(); ++j) {
    const Path& comp = enc.components[j];
    const long long c = enc.exponents[j];
    climb(c, Step::Up);
    switch (detail::classify_component(comp)) {
      case detail::ComponentKind::lambda:
        climb(c, Step::Down);
        break;
      case detail::ComponentKind::pyramid:
        steps.insert(steps.end(), comp.steps().begin(), comp.steps().end());
        break;
      case detail::ComponentKind::q_class:
        steps.insert(steps.end(), comp.steps().begin(), comp.steps().end());
        climb(1, Step::Down);
        break;
    }
  }
  climb(enc.exponents.back(), Step::Up);
  climb(height, Step::Down);
  return Path::from_steps(std::move(steps));
}

inline Encoding phi_inverse(const Path& p) {
  if (p.empty()) throw NotMinusOneDyck("the empty path has no encoding");
  if (!is_d_dyck(p, DParam::restricted(-1)))
    throw NotMinusOneDyck("path is not a (-1)-Dyck path: " + p.to_string());

  const std::vector<Valley> vs = valley_vertices(p);
  const std::vector<Step>& steps = p.steps();

  // Point heights for O(1) lookups.
  std::vector<int> h(steps.size() + 1, 0);
  for (std::size_t i = 0; i < steps.size(); ++i)
    h[i + 1] = h[i] + (steps[i] == Step::Up ? 1 : -1);
  auto max_height = [&](std::size_t a, std::size_t b) {
    return *std::max_element(h.begin() + static_cast<long>(a), h.begin() + static_cast<long>(b) + 1);
  };

  // Junctions: valleys weakly below everything to their right.
  std::vector<std::size_t> junctions;
  int min_later = std::numeric_limits<int>::max();
  for (std::size_t idx = vs.size(); idx-- > 0;) {
    if (vs[idx].level <= min_later) junctions.push_back(idx);
    min_later = std::min(min_later, vs[idx].level);
  }
  std::reverse(junctions.begin(), junctions.end());

  Encoding enc;
  std::size_t prev_point = 0;
  int prev_level = 0;
  std::size_t prev_vidx = 0;  // one past the previous junction's valley index
  for (std::size_t jidx : junctions) {
    const std::size_t pos = vs[jidx].point_index;
    const int lev = vs[jidx].level;
    const bool has_internal = jidx > prev_vidx;
    if (!has_internal) {
      const int peak = max_height(prev_point, pos);
      if (lev == prev_level) {  // lambda block: one pyramid returning to base
        enc.components.emplace_back();
        enc.exponents.push_back(peak - prev_level);
      } else {  // pyramid component on the plateau at `lev`
        std::vector<Step> pyramid(static_cast<std::size_t>(peak - lev), Step::Up);
        pyramid.insert(pyramid.end(), static_cast<std::size_t>(peak - lev), Step::Down);
        enc.components.push_back(Path::from_steps(std::move(pyramid)));
        enc.exponents.push_back(lev - prev_level);
      }
    } else {
      // Q block: base H = lev + 1; component spans from the first arrival
      // at H up to the step before the extra D into the junction vertex.
      const int base = lev + 1;
      std::size_t start = prev_point;
      while (h[start] != base) ++start;
      std::vector<Step> comp(steps.begin() + static_cast<long>(start),
                             steps.begin() + static_cast<long>(pos) - 1);
      enc.components.push_back(Path::from_steps(std::move(comp)));
      enc.exponents.push_back(base - prev_level);
    }
    prev_point = pos;
    prev_level = lev;
    prev_vidx = jidx + 1;
  }
  enc.exponents.push_back(max_height(prev_point, steps.size()) - prev_level);
  return enc;
}

/// Point indices (number of steps before the vertex) of all (-1)-valleys:
/// valleys with a previous valley, none in between, whose level is exactly
/// one lower.
inline std::vector<std::size_t> minus1_valley_positions(const Path& p) {
  std::vector<std::size_t> out;
  const std::vector<Valley> vs = valley_vertices(p);
  for (std::size_t i = 1; i < vs.size(); ++i)
    if (vs[i].level == vs[i - 1].level - 1) out.push_back(vs[i].point_index);
  return out;
}

}  // namespace ddyck
