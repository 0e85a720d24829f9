#include "cfrag/cover.hpp"

#include <cmath>

#include "cfrag/errors.hpp"
#include "cfrag/periodic_function.hpp"

namespace cfrag {
namespace {

double reduce(double t) {
  double s = std::fmod(t, kTwoPi);
  if (s < 0) s += kTwoPi;
  return s;
}

IntervalArc arc_from_json(const nlohmann::json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
    throw GeometryError("interval must be a pair of numbers, got " + pair.dump());
  const double a = pair[0].get<double>();
  double b = pair[1].get<double>();
  if (b < a) b += kTwoPi;
  return IntervalArc(a, b);
}

}  // namespace

CoverConfig CoverConfig::default_cover() {
  const double inset = 0.15;
  CoverConfig c{{IntervalArc(0.3, 2.6), IntervalArc(2.2, 4.7), IntervalArc(4.3, kTwoPi + 0.7)},
                {IntervalArc(0.3 + inset, 2.6 - inset), IntervalArc(2.2 + inset, 4.7 - inset),
                 IntervalArc(4.3 + inset, kTwoPi + 0.7 - inset)},
                0.1};
  c.validate();
  return c;
}

CoverConfig CoverConfig::symmetric(double transition, double inner_overlap, double margin) {
  const double third = kTwoPi / 3.0;
  const double exclusive = third - 2.0 * transition - inner_overlap;
  if (!(transition > 0 && inner_overlap > 0 && exclusive > 0))
    throw GeometryError("symmetric cover does not fit: transition " + std::to_string(transition) +
                        ", inner overlap " + std::to_string(inner_overlap));
  // Base point 0 sits in the middle of I3's exclusive region.
  const double a1 = 0.5 * exclusive;
  const double span = third + 2.0 * transition + inner_overlap;  // length of each I_j
  std::array<double, 3> a{a1, a1 + third, a1 + 2 * third};
  CoverConfig c{{IntervalArc(a[0], a[0] + span), IntervalArc(a[1], a[1] + span), IntervalArc(a[2], a[2] + span)},
                {IntervalArc(a[0] + transition, a[0] + span - transition),
                 IntervalArc(a[1] + transition, a[1] + span - transition),
                 IntervalArc(a[2] + transition, a[2] + span - transition)},
                margin};
  c.validate();
  return c;
}

CoverConfig CoverConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("I") || !j.contains("Ihat"))
    throw GeometryError("cover configuration needs \"I\" and \"Ihat\"");
  const auto& I = j.at("I");
  const auto& Ih = j.at("Ihat");
  if (!I.is_array() || I.size() != 3 || !Ih.is_array() || Ih.size() != 3)
    throw GeometryError("cover configuration needs three intervals in \"I\" and \"Ihat\"");
  double margin = 0.1;
  if (j.contains("margin")) {
    if (!j.at("margin").is_number()) throw GeometryError("\"margin\" must be a number");
    margin = j.at("margin").get<double>();
  }
  CoverConfig c{{arc_from_json(I[0]), arc_from_json(I[1]), arc_from_json(I[2])},
                {arc_from_json(Ih[0]), arc_from_json(Ih[1]), arc_from_json(Ih[2])},
                margin};
  c.validate();
  return c;
}

CoverConfig CoverConfig::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("malformed cover JSON: ") + e.what());
  }
  return from_json(j);
}

nlohmann::json CoverConfig::to_json() const {
  nlohmann::json j;
  for (const auto& arc : intervals) j["I"].push_back({arc.a(), arc.b()});
  for (const auto& arc : inner) j["Ihat"].push_back({arc.a(), arc.b()});
  j["margin"] = margin;
  return j;
}

std::array<double, 12> CoverConfig::chain() const {
  return {reduce(I(1).a()), reduce(Ihat(1).a()), reduce(Ihat(3).b()), reduce(I(3).b()),
          reduce(I(2).a()), reduce(Ihat(2).a()), reduce(Ihat(1).b()), reduce(I(1).b()),
          reduce(I(3).a()), reduce(Ihat(3).a()), reduce(Ihat(2).b()), reduce(I(2).b())};
}

void CoverConfig::validate() const {
  static const char* names[12] = {"a1", "ah1", "bh3", "b3", "a2", "ah2", "bh1", "b1", "a3", "ah3", "bh2", "b2"};
  if (!(margin > 0.0 && margin < 0.5)) throw GeometryError("cover margin must lie in (0, 1/2)");
  for (int j = 1; j <= 3; ++j)
    if (!I(j).contains(Ihat(j)))
      throw GeometryError("inner interval " + std::to_string(j) + " is not inside I_" + std::to_string(j));
  const auto c = chain();
  if (!(c[0] > 0.0)) throw GeometryError("a1 must be positive: 0 has to lie in I3 only");
  for (int i = 1; i < 12; ++i)
    if (!(c[i - 1] < c[i]))
      throw GeometryError(std::string("cover violates the endpoint ordering at ") + names[i - 1] + " < " +
                          names[i]);
  // I1 and I2 must not wrap in the stored lifts.
  if (!(I(1).a() > 0 && I(1).b() < kTwoPi && I(2).a() > 0 && I(2).b() < kTwoPi))
    throw GeometryError("I1 and I2 must be given inside (0, 2pi)");
}

}  // namespace cfrag
