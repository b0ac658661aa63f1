#include "gaugeflow/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaugeflow {

const char* family_name(Family f) { return f == Family::X ? "X" : "X0"; }

Family family_from_name(std::string_view name) {
  if (name == "X") return Family::X;
  if (name == "X0") return Family::X0;
  throw std::invalid_argument("unknown family '" + std::string(name) +
                              "' (expected X or X0)");
}

double wrap_phase(double u, double period) {
  double r = std::fmod(u, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

double period(const CycleSpec& spec, Family f) {
  return f == Family::X ? spec.tau : spec.tau0;
}

Solution make_solution(const CycleSpec& spec, Family f, double phase) {
  if (!std::isfinite(phase))
    throw std::invalid_argument("solution phase must be finite");
  return {f, wrap_phase(phase, period(spec, f))};
}

bool same_solution(const CycleSpec& spec, const Solution& a, const Solution& b,
                   double tol) {
  if (a.family != b.family) return false;
  const double p = period(spec, a.family);
  const double d = std::abs(wrap_phase(a.phase, p) - wrap_phase(b.phase, p));
  return std::min(d, p - d) <= tol;
}

double segment_distance(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

CycleSpec make_spec(const StableNodeField& field1, const StableNodeField& field2,
                    const Point2& b0, const Point2& b1, const Point2& b2,
                    bool allow_asymmetric) {
  for (const Point2* p : {&b0, &b1, &b2})
    if (!finite_point(*p))
      throw GeometryInvalid("cycle anchors must have finite coordinates");

  const Point2 axis = field2.node - field1.node;
  const double sep = axis.norm();
  if (sep == 0.0) throw GeometryInvalid("the two nodes coincide");
  const Point2 u = axis / sep;

  // Anchors must sit on the open segment between the nodes, in order
  // a1* .. b0 .. b1 .. b2 .. a2*, with b1 the midpoint of [b0, b2].
  const double scale = std::max(sep, 1.0);
  double t[3];
  const Point2* bs[3] = {&b0, &b1, &b2};
  for (int i = 0; i < 3; ++i) {
    const Point2 r = *bs[i] - field1.node;
    t[i] = r.dot(u);
    const double off = (r - t[i] * u).norm();
    if (off > kImageTol * scale)
      throw GeometryInvalid("cycle anchors must be collinear with the nodes");
  }
  if (!(t[0] > 0.0 && t[2] < sep && t[0] < t[1] && t[1] < t[2]))
    throw GeometryInvalid(
        "cycle anchors must be strictly ordered between the nodes");
  if (std::abs(t[1] - 0.5 * (t[0] + t[2])) > kImageTol * scale)
    throw GeometryInvalid("b1 must be the midpoint of [b0, b2]");

  CycleSpec spec{field1, field2, b0, b1, b2};
  spec.leg_x2 = hit_time(field2, b0, b2);
  spec.leg_x1 = hit_time(field1, b2, b0);
  spec.leg_02 = hit_time(field2, b0, b1);
  spec.leg_01 = hit_time(field1, b1, b0);
  spec.tau = spec.leg_x2 + spec.leg_x1;
  spec.tau0 = spec.leg_02 + spec.leg_01;

  if (std::abs(spec.tau0 - 0.5 * spec.tau) > kPeriodTol) {
    if (!allow_asymmetric)
      throw PeriodMismatch("inner period differs from half the outer period");
    spec.period_mismatch = true;
  }
  return spec;
}

CycleSpec default_spec() {
  const StableNodeField f1(Point2(0.0, 0.0), 1.0);
  const StableNodeField f2(Point2(1.0, 0.0), 1.0);
  return make_spec(f1, f2, Point2(0.3, 0.0), Point2(0.5, 0.0), Point2(0.7, 0.0));
}

namespace {

struct Leg {
  const StableNodeField* field;
  const Point2* start;
  const Point2* end;
  double duration;
  double offset;  // phase at which the leg begins
};

// The two legs of a family, in phase order.
void legs_of(const CycleSpec& spec, Family f, Leg out[2]) {
  if (f == Family::X) {
    out[0] = {&spec.field2, &spec.b0, &spec.b2, spec.leg_x2, 0.0};
    out[1] = {&spec.field1, &spec.b2, &spec.b0, spec.leg_x1, spec.leg_x2};
  } else {
    out[0] = {&spec.field2, &spec.b0, &spec.b1, spec.leg_02, 0.0};
    out[1] = {&spec.field1, &spec.b1, &spec.b0, spec.leg_01, spec.leg_02};
  }
}

}  // namespace

Point2 pos(const CycleSpec& spec, Family f, double phase) {
  Leg legs[2];
  legs_of(spec, f, legs);
  const double u = wrap_phase(phase, period(spec, f));
  const Leg& leg = u < legs[1].offset ? legs[0] : legs[1];
  return flow(*leg.field, u - leg.offset, *leg.start);
}

Point2 eval(const CycleSpec& spec, const Solution& sol, double t) {
  return pos(spec, sol.family, wrap_phase(sol.phase + t, period(spec, sol.family)));
}

std::vector<double> phases_through(const CycleSpec& spec, Family f, const Point2& p) {
  std::vector<double> out;
  if (!finite_point(p)) return out;
  Leg legs[2];
  legs_of(spec, f, legs);
  for (const Leg& leg : legs) {
    const double r_start = (*leg.start - leg.field->node).norm();
    const double r_end = (*leg.end - leg.field->node).norm();
    double r = (p - leg.field->node).norm();
    if (r > r_start + kImageTol || r < r_end - kImageTol) continue;
    r = std::clamp(r, r_end, r_start);
    double u = std::log(r_start / r) / leg.field->rate;
    if (u < 0.0) u = 0.0;
    if (u >= leg.duration) continue;  // the far corner belongs to the next leg
    const double phase = leg.offset + u;
    if ((pos(spec, f, phase) - p).norm() <= kImageTol) out.push_back(phase);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double speed(const CycleSpec& spec, Family f, double phase) {
  Leg legs[2];
  legs_of(spec, f, legs);
  const double u = wrap_phase(phase, period(spec, f));
  const Leg& leg = u < legs[1].offset ? legs[0] : legs[1];
  const Point2 at = flow(*leg.field, u - leg.offset, *leg.start);
  return leg.field->rate * (at - leg.field->node).norm();
}

double max_speed(const CycleSpec& spec, Family f) {
  Leg legs[2];
  legs_of(spec, f, legs);
  double m = 0.0;
  for (const Leg& leg : legs)  // per leg the speed decreases toward the node
    m = std::max(m, leg.field->rate * (*leg.start - leg.field->node).norm());
  return m;
}

double min_speed(const CycleSpec& spec, Family f) {
  Leg legs[2];
  legs_of(spec, f, legs);
  double m = std::numeric_limits<double>::infinity();
  for (const Leg& leg : legs)
    m = std::min(m, leg.field->rate * (*leg.end - leg.field->node).norm());
  return m;
}

double max_speed(const CycleSpec& spec) {
  return std::max(max_speed(spec, Family::X), max_speed(spec, Family::X0));
}

Point2 far_point(const CycleSpec& spec, Family f) {
  return f == Family::X ? spec.b2 : spec.b1;
}

double far_phase(const CycleSpec& spec, Family f) {
  return f == Family::X ? spec.leg_x2 : spec.leg_02;
}

}  // namespace gaugeflow
