#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace gaugeflow {

// Points of the plane.  Eigen supplies all vector arithmetic; the Euclidean
// metric is (p - q).norm().
using Point2 = Eigen::Vector2d;

// Checked point constructor: rejects NaN/Inf coordinates.
Point2 make_point(double x, double y);
bool finite_point(const Point2& p);

struct AtNode : std::runtime_error {
  explicit AtNode(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotOnInwardRay : std::runtime_error {
  explicit NotOnInwardRay(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear field with a radial stable node: f(p) = rate * (node - p).
// Every trajectory runs along the straight ray from p toward the node, so the
// flow and all hitting times have closed forms.
struct StableNodeField {
  Point2 node;
  double rate;  // contraction rate, 1/time

  StableNodeField(const Point2& node_, double rate_);
};

// Velocity of the field at p.
Point2 field_eval(const StableNodeField& f, const Point2& p);

// Closed-form flow map: node + (p - node) * exp(-rate * t).
// t may be negative (backward flow).  t == 0 returns p bitwise.
Point2 flow(const StableNodeField& f, double t, const Point2& p);

// Time t >= 0 with flow(f, t, p) == q, for q on the segment [p, node)
// (strictly between p and the node, or equal to p).
// Closed form: log(|p - node| / |q - node|) / rate.
// Throws AtNode if p coincides with the node, NotOnInwardRay otherwise when
// the precondition fails.
double hit_time(const StableNodeField& f, const Point2& p, const Point2& q);

}  // namespace gaugeflow
