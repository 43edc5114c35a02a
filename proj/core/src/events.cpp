#include "xsdyn/events.hpp"

#include <algorithm>
#include <cmath>

#include "xsdyn/concurrence.hpp"

namespace xsdyn {

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kTouchSearchResolution = 1e-10;

struct MinimumResult {
  double time;
  double value;
};

MinimumResult golden_minimum(const ConcurrenceAt& f, double lo, double hi) {
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  while (b - a > kTouchSearchResolution) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? MinimumResult{x1, f1} : MinimumResult{x2, f2};
}

}  // namespace

const char* to_string(EventKind kind) { return kind == EventKind::Death ? "death" : "birth"; }

std::vector<double> EntanglementEvents::deaths() const {
  std::vector<double> out;
  for (const auto& e : events)
    if (e.kind == EventKind::Death) out.push_back(e.time);
  return out;
}

std::vector<double> EntanglementEvents::births() const {
  std::vector<double> out;
  for (const auto& e : events)
    if (e.kind == EventKind::Birth) out.push_back(e.time);
  return out;
}

ConcurrenceAt concurrence_along(const StateAt& state_at) {
  return [state_at](double t) { return concurrence(state_at(t)); };
}

ConcurrenceAt cubic_interpolant(const Trajectory& traj) {
  return [times = traj.times, values = traj.concurrences](double t) {
    const std::size_t n = times.size();
    if (n == 1) return values[0];
    auto it = std::upper_bound(times.begin(), times.end(), t);
    std::size_t k = it == times.begin() ? 0 : static_cast<std::size_t>(it - times.begin()) - 1;
    k = std::min(k, n - 2);
    const std::size_t width = std::min<std::size_t>(4, n);
    std::size_t first = k > 0 ? k - 1 : 0;
    if (first + width > n) first = n - width;
    double sum = 0.0;
    for (std::size_t i = first; i < first + width; ++i) {
      double w = 1.0;
      for (std::size_t j = first; j < first + width; ++j)
        if (j != i) w *= (t - times[j]) / (times[i] - times[j]);
      sum += w * values[i];
    }
    return sum;
  };
}

EntanglementEvents detect_events(const Trajectory& traj, const ConcurrenceAt& continuous,
                                 const EventOptions& options) {
  const std::size_t n = traj.size();
  if (n < 2) throw ParameterOutOfRange("detect_events needs at least two samples");
  const ConcurrenceAt f = continuous ? continuous : cubic_interpolant(traj);
  const auto& t = traj.times;
  const auto& c = traj.concurrences;
  const double tol = options.zero_tol;
  auto alive = [tol](double v) { return v > tol; };

  EntanglementEvents out;

  for (std::size_t i = 1; i < n; ++i) {
    // A sampled dip at i-1 deep enough to reach zero inside its two cells.
    if (i >= 2) {
      const std::size_t j = i - 1;
      const bool all_alive = alive(c[j - 1]) && alive(c[j]) && alive(c[j + 1]);
      const bool local_min = c[j] < c[j - 1] && c[j] <= c[j + 1];
      const double depth = std::max(c[j - 1] - c[j], c[j + 1] - c[j]);
      if (all_alive && local_min && c[j] <= depth) {
        const MinimumResult m = golden_minimum(f, t[j - 1], t[j + 1]);
        const double slope = depth / std::min(t[j] - t[j - 1], t[j + 1] - t[j]);
        if (m.value <= tol + 100.0 * slope * kTouchSearchResolution) {
          out.events.push_back({EventKind::Death, m.time, true});
          out.events.push_back({EventKind::Birth, m.time, true});
        }
      }
    }

    const bool before = alive(c[i - 1]);
    const bool after = alive(c[i]);
    if (before == after) continue;
    const EventKind kind = before ? EventKind::Death : EventKind::Birth;
    double lo = t[i - 1];
    double hi = t[i];
    const bool consistent = alive(f(lo)) == before && alive(f(hi)) == after;
    if (!consistent) {
      out.events.push_back({kind, hi, false});
      continue;
    }
    while (hi - lo > 0.25 * options.time_resolution) {
      const double mid = 0.5 * (lo + hi);
      if (alive(f(mid)) == before) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.events.push_back({kind, 0.5 * (lo + hi), true});
  }

  std::stable_sort(out.events.begin(), out.events.end(),
                   [](const EntanglementEvent& a, const EntanglementEvent& b) { return a.time < b.time; });
  return out;
}

}  // namespace xsdyn
