#include "cfrag/interval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "cfrag/errors.hpp"
#include "cfrag/periodic_function.hpp"

namespace cfrag {

IntervalArc::IntervalArc(double a, double b) : a_(a), b_(b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b) || !(b < a + kTwoPi))
    throw GeometryError("interval (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") is not a non-empty proper arc");
}

double IntervalArc::lift(double t) const {
  double s = std::fmod(t - a_, kTwoPi);
  if (s < 0) s += kTwoPi;
  if (s >= kTwoPi) s = 0.0;
  return a_ + s;
}

bool IntervalArc::contains(double t) const {
  const double s = lift(t);
  return s > a_ && s < b_;
}

bool IntervalArc::contains(const IntervalArc& other, double tol) const {
  if (other.length() > length() + 2 * tol) return false;
  double start = other.a();
  double s = std::fmod(start - (a_ - tol), kTwoPi);
  if (s < 0) s += kTwoPi;
  start = a_ - tol + s;
  return start + other.length() <= b_ + tol;
}

IntervalArc IntervalArc::dilated(double d) const { return IntervalArc(a_ - d, b_ + d); }

std::string IntervalArc::to_string() const {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.6f, %.6f)", a_, b_);
  return buf;
}

std::vector<IntervalArc> intersection(const IntervalArc& x, const IntervalArc& y) {
  std::vector<IntervalArc> out;
  const double start = x.lift(y.a());
  const double end = start + y.length();
  if (start < x.b()) out.emplace_back(start, std::min(end, x.b()));
  if (end - kTwoPi > x.a()) out.emplace_back(x.a(), std::min(end - kTwoPi, x.b()));
  return out;
}

IntervalArc connected_intersection(const IntervalArc& x, const IntervalArc& y) {
  auto parts = intersection(x, y);
  if (parts.size() != 1)
    throw GeometryError("intersection of " + x.to_string() + " and " + y.to_string() +
                        (parts.empty() ? " is empty" : " is disconnected"));
  return parts.front();
}

bool Support::inside(const IntervalArc& outer, double tol) const {
  switch (kind) {
    case Kind::empty:
      return true;
    case Kind::full:
      return false;
    case Kind::arc:
      return outer.contains(*arc, tol);
  }
  return false;
}

std::string Support::to_string() const {
  switch (kind) {
    case Kind::empty:
      return "empty";
    case Kind::full:
      return "full";
    case Kind::arc:
      return arc->to_string();
  }
  return "";
}

Support support_from_deviation(std::span<const double> deviation, double tol) {
  const std::size_t n = deviation.size();
  std::vector<bool> flagged(n);
  std::size_t count = 0;
  for (std::size_t k = 0; k < n; ++k) {
    flagged[k] = deviation[k] > tol;
    count += flagged[k];
  }
  if (count == 0) return {Support::Kind::empty, std::nullopt};
  if (count == n) return {Support::Kind::full, std::nullopt};

  // Longest circular run of unflagged points; the support is its complement.
  std::size_t best_len = 0, best_start = 0;
  std::size_t first_flag = 0;
  while (!flagged[first_flag]) ++first_flag;
  std::size_t run = 0, run_start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t k = (first_flag + i) % n;
    if (!flagged[k]) {
      if (run == 0) run_start = k;
      ++run;
    } else if (run > 0) {
      if (run > best_len) {
        best_len = run;
        best_start = run_start;
      }
      run = 0;
    }
  }
  const std::size_t last_flag = (best_start + n - 1) % n;   // just before the gap
  const std::size_t next_flag = (best_start + best_len) % n;  // just after the gap
  const double h = kTwoPi / static_cast<double>(n);
  const double a = grid_point(next_flag, n) - h;
  double b = grid_point(last_flag, n) + h;
  while (b <= a) b += kTwoPi;
  if (b - a >= kTwoPi) return {Support::Kind::full, std::nullopt};
  return {Support::Kind::arc, IntervalArc(a, b)};
}

double max_deviation_outside(std::span<const double> deviation, const IntervalArc& arc) {
  const std::size_t n = deviation.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    if (!arc.contains(grid_point(k, n))) worst = std::max(worst, deviation[k]);
  return worst;
}

}  // namespace cfrag
