#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfrag {

/// A proper open arc (a, b) of the circle, stored with lifted endpoints
/// a < b < a + 2pi.
class IntervalArc {
 public:
  /// Throws GeometryError unless a < b < a + 2pi.
  IntervalArc(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  double midpoint() const { return 0.5 * (a_ + b_); }

  /// Representative of t in [a, a + 2pi).
  double lift(double t) const;

  bool contains(double t) const;

  /// True when the closure of `other` lies in this arc, up to `tol`.
  bool contains(const IntervalArc& other, double tol = 0.0) const;

  /// The arc grown by d on both sides (must stay proper).
  IntervalArc dilated(double d) const;

  std::string to_string() const;

 private:
  double a_;
  double b_;
};

/// Connected components of the intersection of two arcs (0, 1 or 2 arcs).
std::vector<IntervalArc> intersection(const IntervalArc& x, const IntervalArc& y);

/// The intersection when it is a single arc; throws GeometryError when it is
/// empty or disconnected.
IntervalArc connected_intersection(const IntervalArc& x, const IntervalArc& y);

/// Numerical support of a sampled deviation from the identity.
struct Support {
  enum class Kind { empty, full, arc };

  Kind kind = Kind::empty;
  std::optional<IntervalArc> arc;

  bool is_empty() const { return kind == Kind::empty; }
  bool is_full() const { return kind == Kind::full; }

  /// True when the support lies in the closure of `outer` (empty supports lie everywhere).
  bool inside(const IntervalArc& outer, double tol = 1e-12) const;

  std::string to_string() const;
};

/// Smallest arc containing every grid point with deviation[k] > tol,
/// dilated by one grid cell.
Support support_from_deviation(std::span<const double> deviation, double tol);

/// Largest deviation over grid points that lie outside the open arc.
double max_deviation_outside(std::span<const double> deviation, const IntervalArc& arc);

}  // namespace cfrag
