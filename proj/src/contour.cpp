#include "anacont/contour.hpp"

#include <cmath>

#include <json.hpp>

#include "anacont/errors.hpp"

namespace anacont {

namespace {

// Radius of a ray at parameter t, honouring direction.
double ray_radius(const RayPiece& ray, double t, double trunc) {
  const double lo = ray.r_start;
  const double hi = trunc;
  return ray.direction == RayDirection::outward ? lo + t * (hi - lo)
                                                : hi + t * (lo - hi);
}

}  // namespace

Cx piece_point(const ContourPiece& piece, double t, double trunc) {
  if (const auto* ray = std::get_if<RayPiece>(&piece)) {
    const double rho = ray_radius(*ray, t, trunc);
    return rho * std::exp(Cx(0.0, ray->theta));
  }
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
    const double phi = arc->theta_from + t * (arc->theta_to - arc->theta_from);
    return arc->radius * std::exp(Cx(0.0, phi));
  }
  const auto& seg = std::get<SegmentPiece>(piece);
  return seg.from + t * (seg.to - seg.from);
}

Cx piece_derivative(const ContourPiece& piece, double t, double trunc) {
  if (const auto* ray = std::get_if<RayPiece>(&piece)) {
    const double span = ray->direction == RayDirection::outward
                            ? trunc - ray->r_start
                            : ray->r_start - trunc;
    return span * std::exp(Cx(0.0, ray->theta));
  }
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
    const double phi = arc->theta_from + t * (arc->theta_to - arc->theta_from);
    const double dphi = arc->theta_to - arc->theta_from;
    return Cx(0.0, dphi) * arc->radius * std::exp(Cx(0.0, phi));
  }
  const auto& seg = std::get<SegmentPiece>(piece);
  return seg.to - seg.from;
}

Cx piece_start(const ContourPiece& piece, double trunc) {
  return piece_point(piece, 0.0, trunc);
}

Cx piece_end(const ContourPiece& piece, double trunc) {
  return piece_point(piece, 1.0, trunc);
}

Contour gamma_m_contour(int m, double theta) {
  if (m < 1) {
    throw ParameterError("gamma_m_contour: m must be >= 1");
  }
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw ParameterError("gamma_m_contour: theta must lie in (0, pi/2)");
  }
  const double r = m + 0.5;
  Contour c;
  c.label = "gamma_m";
  c.pieces.push_back(RayPiece{r, theta, RayDirection::inward});
  c.pieces.push_back(ArcPiece{r, theta, -theta});
  c.pieces.push_back(RayPiece{r, -theta, RayDirection::outward});
  return c;
}

Contour deformed_boundary(double r, double delta) {
  if (!(r > 0.0 && r <= 1.0)) {
    throw ParameterError("deformed_boundary: r must lie in (0, 1]");
  }
  if (!(delta > 0.0 && delta < kPi / 2.0)) {
    throw ParameterError("deformed_boundary: delta must lie in (0, pi/2)");
  }
  Contour c;
  c.label = "deformed_boundary";
  c.pieces.push_back(RayPiece{r, delta, RayDirection::inward});
  c.pieces.push_back(ArcPiece{r, delta, -delta});
  c.pieces.push_back(RayPiece{r, -delta, RayDirection::outward});
  return c;
}

std::pair<Contour, Contour> interpolant_contour(double r, double theta) {
  if (!(r > 0.0)) {
    throw ParameterError("interpolant_contour: r must be positive");
  }
  Contour circle;
  circle.label = "interpolant_circle";
  circle.pieces.push_back(ArcPiece{r, theta, theta + kTwoPi});
  Contour ray;
  ray.label = "interpolant_ray";
  ray.pieces.push_back(RayPiece{r, theta, RayDirection::outward});
  return {circle, ray};
}

bool is_closed(const Contour& contour, double trunc, double tol) {
  if (contour.pieces.empty()) return false;
  for (std::size_t i = 0; i + 1 < contour.pieces.size(); ++i) {
    if (std::abs(piece_end(contour.pieces[i], trunc) -
                 piece_start(contour.pieces[i + 1], trunc)) > tol) {
      return false;
    }
  }
  return std::abs(piece_end(contour.pieces.back(), trunc) -
                  piece_start(contour.pieces.front(), trunc)) <= tol;
}

int winding_number(const Contour& contour, Cx point, double trunc,
                   int samples_per_piece) {
  double total = 0.0;
  for (const auto& piece : contour.pieces) {
    Cx prev = piece_point(piece, 0.0, trunc) - point;
    for (int k = 1; k <= samples_per_piece; ++k) {
      const double t = static_cast<double>(k) / samples_per_piece;
      const Cx cur = piece_point(piece, t, trunc) - point;
      // Increment of the argument along this step, taken in (-pi, pi].
      total += std::arg(cur / prev);
      prev = cur;
    }
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

std::string contour_to_json(const Contour& contour, double trunc) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& piece : contour.pieces) {
    nlohmann::json p;
    if (const auto* ray = std::get_if<RayPiece>(&piece)) {
      p["type"] = "ray";
      p["r_start"] = ray->r_start;
      p["theta"] = ray->theta;
      p["direction"] =
          ray->direction == RayDirection::outward ? "outward" : "inward";
    } else if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
      p["type"] = "arc";
      p["radius"] = arc->radius;
      p["theta_from"] = arc->theta_from;
      p["theta_to"] = arc->theta_to;
    } else {
      const auto& seg = std::get<SegmentPiece>(piece);
      p["type"] = "segment";
      p["from"] = {seg.from.real(), seg.from.imag()};
      p["to"] = {seg.to.real(), seg.to.imag()};
    }
    const Cx s = piece_start(piece, trunc);
    const Cx e = piece_end(piece, trunc);
    p["start"] = {s.real(), s.imag()};
    p["end"] = {e.real(), e.imag()};
    pieces.push_back(p);
  }
  nlohmann::json j;
  j["label"] = contour.label;
  j["trunc"] = trunc;
  j["pieces"] = pieces;
  return j.dump(2);
}

}  // namespace anacont
