#include "gaugeflow/linear_flow.hpp"

#include <cmath>

namespace gaugeflow {

namespace {
constexpr double kRayTol = 1e-12;  // relative slack for on-ray membership
}

bool finite_point(const Point2& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

Point2 make_point(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y))
    throw std::invalid_argument("point coordinates must be finite");
  return {x, y};
}

StableNodeField::StableNodeField(const Point2& node_, double rate_)
    : node(node_), rate(rate_) {
  if (!finite_point(node_))
    throw std::invalid_argument("field node must have finite coordinates");
  if (!(rate_ > 0.0) || !std::isfinite(rate_))
    throw std::invalid_argument("field rate must be positive and finite");
}

Point2 field_eval(const StableNodeField& f, const Point2& p) {
  return f.rate * (f.node - p);
}

Point2 flow(const StableNodeField& f, double t, const Point2& p) {
  if (t == 0.0) return p;  // exact identity at time zero
  const double k = std::exp(-f.rate * t);
  return {f.node.x() + (p.x() - f.node.x()) * k,
          f.node.y() + (p.y() - f.node.y()) * k};
}

double hit_time(const StableNodeField& f, const Point2& p, const Point2& q) {
  const Point2 rp = p - f.node;
  const Point2 rq = q - f.node;
  const double dp = rp.norm();
  const double dq = rq.norm();
  if (dp == 0.0) throw AtNode("hit_time: start point coincides with the node");
  // q must sit on the ray from the node through p, no farther out than p and
  // strictly off the node itself.
  const double cross = rp.x() * rq.y() - rp.y() * rq.x();
  const bool on_ray = std::abs(cross) <= kRayTol * dp * std::max(dq, 1.0) &&
                      rp.dot(rq) > 0.0;
  if (dq == 0.0 || dq > dp * (1.0 + kRayTol) || !on_ray)
    throw NotOnInwardRay("hit_time: target not on the inward ray [p, node)");
  const double t = std::log(dp / dq) / f.rate;
  return t > 0.0 ? t : 0.0;
}

}  // namespace gaugeflow
