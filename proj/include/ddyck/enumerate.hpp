#pragma once

/// Exhaustive brute-force oracle: generate every Dyck path of a given
/// semi-length and aggregate arbitrary statistics over filtered subsets.
/// Everything here streams; nothing materializes the full path set.

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ddyck/numeric.hpp"
#include "ddyck/path.hpp"

namespace ddyck {

/// Default ceiling for exhaustive runs (C_16 is about 35.4M paths). The
/// DDYCK_MAX_EXHAUSTIVE environment variable overrides it; the CLI also
/// exposes a flag.
inline std::size_t default_exhaustive_bound() {
  if (const char* env = std::getenv("DDYCK_MAX_EXHAUSTIVE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 16;
}

/// Visits every Dyck path of semi-length n exactly once, in lexicographic
/// order on the step string with U < D. visit receives a const Path&.
template <class Visitor>
void for_each_dyck(std::size_t n, Visitor&& visit) {
  std::vector<Step> buf;
  buf.reserve(2 * n);
  auto rec = [&](auto&& self, std::size_t ups, std::size_t downs) -> void {
    if (ups == n && downs == n) {
      visit(Path::from_steps(buf));
      return;
    }
    if (ups < n) {
      buf.push_back(Step::Up);
      self(self, ups + 1, downs);
      buf.pop_back();
    }
    if (downs < ups) {
      buf.push_back(Step::Down);
      self(self, ups, downs + 1);
      buf.pop_back();
    }
  };
  rec(rec, 0, 0);
}

enum class LastValleyCond {
  any,               ///< no constraint
  absent,            ///< path has no valley
  at_ground,         ///< at least one valley and the last one at level 0
  absent_or_ground,  ///< no valley, or last valley at level 0
  below_level,       ///< no valley, or last valley at level < below_level
};

/// Conjunction of per-path predicates realizing the paper's path families
/// as filters over the plain Dyck generator.
struct PathFilter {
  std::optional<DParam> d;
  std::optional<std::size_t> peak_count;
  LastValleyCond last_valley = LastValleyCond::any;
  int below_level = 0;

  static PathFilter d_dyck(DParam dd) {
    PathFilter f;
    f.d = dd;
    return f;
  }

  /// Q: (-1)-Dyck paths with at least one valley, the last one at ground.
  static PathFilter Q() {
    PathFilter f;
    f.d = DParam::restricted(-1);
    f.last_valley = LastValleyCond::at_ground;
    return f;
  }

  /// B: (-1)-Dyck paths with no valley or last valley at ground.
  static PathFilter B() {
    PathFilter f;
    f.d = DParam::restricted(-1);
    f.last_valley = LastValleyCond::absent_or_ground;
    return f;
  }

  bool matches(const Path& p) const {
    if (d && !is_d_dyck(p, *d)) return false;
    if (peak_count && peaks(p) != *peak_count) return false;
    if (last_valley != LastValleyCond::any) {
      std::optional<int> lv = last_valley_level(p);
      switch (last_valley) {
        case LastValleyCond::absent:
          if (lv) return false;
          break;
        case LastValleyCond::at_ground:
          if (!lv || *lv != 0) return false;
          break;
        case LastValleyCond::absent_or_ground:
          if (lv && *lv != 0) return false;
          break;
        case LastValleyCond::below_level:
          if (lv && *lv >= below_level) return false;
          break;
        case LastValleyCond::any:
          break;
      }
    }
    return true;
  }
};

inline Int count_filtered(std::size_t n, const PathFilter& f) {
  Int count = 0;
  for_each_dyck(n, [&](const Path& p) {
    if (f.matches(p)) ++count;
  });
  return count;
}

/// q_n: |Q_n| by exhaustive filter.
inline Int count_Q(std::size_t n) { return count_filtered(n, PathFilter::Q()); }

/// b(n): |B(n)| by exhaustive filter; b(n) = q_n + 1 for n >= 1.
inline Int count_B(std::size_t n) {
  if (n == 0) return 1;  // the empty path
  return count_filtered(n, PathFilter::B());
}

inline Int total_area(std::size_t n, const PathFilter& f) {
  Int sum = 0;
  for_each_dyck(n, [&](const Path& p) {
    if (f.matches(p)) sum += area(p);
  });
  return sum;
}

enum class PathStatistic { peaks, area };

/// Exact histogram of a statistic over the matching paths of semi-length n.
/// Values sum to count_filtered(n, f).
inline std::map<long long, Int> statistic_distribution(std::size_t n, const PathFilter& f,
                                                       PathStatistic stat) {
  std::map<long long, Int> hist;
  for_each_dyck(n, [&](const Path& p) {
    if (!f.matches(p)) return;
    long long key = stat == PathStatistic::peaks ? static_cast<long long>(peaks(p)) : area(p);
    ++hist[key];
  });
  return hist;
}

}  // namespace ddyck
