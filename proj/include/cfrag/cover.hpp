#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "cfrag/interval.hpp"

namespace cfrag {

/// Three-interval cover {I_j} of the circle with inner intervals {Ihat_j}.
///
/// The base point 0 lies in I_3 only, and the endpoints, reduced to
/// [0, 2pi), satisfy
///   0 < a1 < ah1 < bh3 < b3 < a2 < ah2 < bh1 < b1 < a3 < ah3 < bh2 < b2 < 2pi,
/// so every point lies in at most two I_j while the Ihat_j still cover.
/// I_1 and I_2 are stored inside (0, 2pi); I_3 wraps through 0.
struct CoverConfig {
  std::array<IntervalArc, 3> intervals;
  std::array<IntervalArc, 3> inner;
  /// How far the loop cutoffs' plateaus reach into the neighbouring overlaps,
  /// as a fraction of the available gap; in (0, 1/2).
  double margin = 0.1;

  /// I1=(0.3, 2.6), I2=(2.2, 4.7), I3=(4.3, 2pi+0.7), inner intervals inset by 0.15.
  static CoverConfig default_cover();

  /// Cover invariant under rotation by 2pi/3: each overlap I_j cap I_{j-1}
  /// is `transition | inner_overlap | transition` long, the rest of every
  /// third of the circle belongs to one interval only.
  static CoverConfig symmetric(double transition, double inner_overlap, double margin = 0.1);

  /// {"I":[[a1,b1],[a2,b2],[a3,b3]],"Ihat":[[...],[...],[...]],"margin":0.1}.
  /// A right endpoint smaller than its left one wraps by 2pi. Throws GeometryError.
  static CoverConfig from_json(const nlohmann::json& j);
  static CoverConfig parse(const std::string& text);
  nlohmann::json to_json() const;

  /// Throws GeometryError when the endpoint chain or the margin is violated.
  void validate() const;

  /// The twelve endpoints reduced to [0, 2pi), in chain order.
  std::array<double, 12> chain() const;

  const IntervalArc& I(int j) const { return intervals.at(j - 1); }
  const IntervalArc& Ihat(int j) const { return inner.at(j - 1); }
};

}  // namespace cfrag
