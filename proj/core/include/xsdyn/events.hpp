#pragma once

#include <functional>
#include <vector>

#include "xsdyn/trajectory.hpp"

namespace xsdyn {

enum class EventKind { Death, Birth };

const char* to_string(EventKind kind);

struct EntanglementEvent {
  EventKind kind;
  double time;
  // True when the time was located on a continuous-time concurrence to the
  // requested resolution; false leaves the grid time.
  bool refined;
};

// Deaths and births in time order. They alternate; an isolated zero of the
// concurrence shows up as a death immediately followed by a birth at the
// same time.
struct EntanglementEvents {
  std::vector<EntanglementEvent> events;

  std::vector<double> deaths() const;
  std::vector<double> births() const;
  bool empty() const { return events.empty(); }
};

using ConcurrenceAt = std::function<double(double)>;

struct EventOptions {
  double zero_tol = 1e-9;
  double time_resolution = 1e-6;
};

/// Scans the sampled concurrence for transitions across `zero_tol` and
/// refines each one by bisection on `continuous` (or on a cubic interpolant
/// of the samples when `continuous` is empty). Sampled local minima that
/// dip toward zero are examined for touching zeros, which are reported as a
/// coincident death and birth. Requires at least two samples.
EntanglementEvents detect_events(const Trajectory& traj, const ConcurrenceAt& continuous = {},
                                 const EventOptions& options = {});

/// Concurrence along a continuous state map.
ConcurrenceAt concurrence_along(const StateAt& state_at);

/// Cubic (four-point Lagrange) interpolant of the sampled concurrence.
ConcurrenceAt cubic_interpolant(const Trajectory& traj);

}  // namespace xsdyn
