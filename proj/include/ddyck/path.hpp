#pragma once

/// Lattice paths over the steps U = (1,1) and D = (1,-1) that start at the
/// origin, stay in the first quadrant and end on the x-axis, together with
/// the pointwise statistics (valleys, peaks, area, d-Dyck membership) the
/// rest of the library consumes.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ddyck {

enum class Step : std::uint8_t { Up, Down };

class PathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A token other than U/D (or the X/Y aliases) appeared in the input.
class BadToken : public PathError {
 public:
  using PathError::PathError;
};

/// Some prefix has more D than U steps, i.e. the path dips below the x-axis.
class BelowAxis : public PathError {
 public:
  using PathError::PathError;
};

/// Total number of U and D steps differ.
class Unbalanced : public PathError {
 public:
  using PathError::PathError;
};

/// An immutable Dyck path. The empty path is valid and has semi-length 0.
class Path {
 public:
  Path() = default;

  /// Validates the Dyck conditions (never below axis, balanced).
  static Path from_steps(std::vector<Step> steps) {
    long long height = 0;
    for (Step s : steps) {
      height += s == Step::Up ? 1 : -1;
      if (height < 0) throw BelowAxis("path dips below the x-axis");
    }
    if (height != 0) throw Unbalanced("path does not end on the x-axis");
    return Path(std::move(steps));
  }

  /// Parses a contiguous token string over {U, D}, case-insensitive, with
  /// X and Y accepted as aliases for U and D.
  static Path parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char ch : text) {
      switch (std::toupper(static_cast<unsigned char>(ch))) {
        case 'U':
        case 'X':
          steps.push_back(Step::Up);
          break;
        case 'D':
        case 'Y':
          steps.push_back(Step::Down);
          break;
        default:
          throw BadToken(std::string("bad token '") + ch + "' (want U/D or X/Y)");
      }
    }
    return from_steps(std::move(steps));
  }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t semi_length() const { return steps_.size() / 2; }
  bool empty() const { return steps_.empty(); }

  /// Canonical rendering with U/D tokens; parse(to_string()) == *this.
  std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::Up ? 'U' : 'D');
    return out;
  }

  bool operator==(const Path&) const = default;

 private:
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}
  std::vector<Step> steps_;
};

/// The restriction parameter d, with d = -infinity modeled explicitly as the
/// unrestricted variant (every Dyck path qualifies).
class DParam {
 public:
  static DParam restricted(int d) { return DParam(d, false); }
  static DParam unrestricted() { return DParam(0, true); }

  bool is_unrestricted() const { return unrestricted_; }
  int value() const {
    if (unrestricted_) throw std::logic_error("DParam: unrestricted has no finite value");
    return d_;
  }
  bool operator==(const DParam&) const = default;

 private:
  DParam(int d, bool unrestricted) : d_(d), unrestricted_(unrestricted) {}
  int d_;
  bool unrestricted_;
};

/// y-coordinates of valley vertices, listed from left to right.
using ValleyVector = std::vector<int>;

/// A valley vertex: the local-minimum point of a DU factor. point_index is
/// the number of steps before the vertex (0 .. 2n).
struct Valley {
  std::size_t point_index;
  int level;
  bool operator==(const Valley&) const = default;
};

inline std::vector<Valley> valley_vertices(const Path& p) {
  std::vector<Valley> out;
  const auto& s = p.steps();
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    h += s[i] == Step::Up ? 1 : -1;
    if (i + 1 < s.size() && s[i] == Step::Down && s[i + 1] == Step::Up)
      out.push_back({i + 1, h});
  }
  return out;
}

inline ValleyVector valley_vector(const Path& p) {
  ValleyVector out;
  for (const Valley& v : valley_vertices(p)) out.push_back(v.level);
  return out;
}

/// Number of UD factors. For a nonempty path this is valley count + 1.
inline std::size_t peaks(const Path& p) {
  const auto& s = p.steps();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] == Step::Up && s[i + 1] == Step::Down) ++count;
  return count;
}

/// Sum of the y-coordinates over all 2n+1 lattice points of the path
/// (both endpoints included; they lie on the axis and contribute 0).
inline long long area(const Path& p) {
  long long h = 0, sum = 0;
  for (Step s : p.steps()) {
    h += s == Step::Up ? 1 : -1;
    sum += h;
  }
  return sum;
}

/// True iff p has at most one valley or all consecutive valley-level
/// differences are >= d. The unrestricted variant accepts every path.
inline bool is_d_dyck(const Path& p, DParam d) {
  if (d.is_unrestricted()) return true;
  ValleyVector v = valley_vector(p);
  if (v.size() <= 1) return true;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] - v[i] < d.value()) return false;
  return true;
}

/// Level of the rightmost valley, or nullopt when the path has none.
inline std::optional<int> last_valley_level(const Path& p) {
  ValleyVector v = valley_vector(p);
  if (v.empty()) return std::nullopt;
  return v.back();
}

}  // namespace ddyck
