#pragma once

#include <string>
#include <variant>
#include <vector>

#include "anacont/common.hpp"

namespace anacont {

enum class RayDirection { outward, inward };

// Ray along angle `theta`, between radius `r_start` and the truncation
// radius supplied at evaluation time. `outward` runs r_start -> trunc,
// `inward` runs trunc -> r_start.
struct RayPiece {
  double r_start = 0.0;
  double theta = 0.0;
  RayDirection direction = RayDirection::outward;
};

// Circular arc centred at the origin, from angle theta_from to theta_to at
// the given radius; traversed clockwise when theta_to < theta_from.
struct ArcPiece {
  double radius = 0.0;
  double theta_from = 0.0;
  double theta_to = 0.0;
};

// Straight segment between two points.
struct SegmentPiece {
  Cx from;
  Cx to;
};

using ContourPiece = std::variant<RayPiece, ArcPiece, SegmentPiece>;

// Point of the piece at parameter t in [0,1]. Rays need the truncation
// radius `trunc` to pin down their far end.
Cx piece_point(const ContourPiece& piece, double t, double trunc);

// d(point)/dt at parameter t.
Cx piece_derivative(const ContourPiece& piece, double t, double trunc);

Cx piece_start(const ContourPiece& piece, double trunc);
Cx piece_end(const ContourPiece& piece, double trunc);

struct Contour {
  std::vector<ContourPiece> pieces;
  std::string label;
};

// Tail contour for index m and opening angle theta: comes in along the ray
// at +theta from the truncation radius to |zeta| = m + 1/2, follows the
// clockwise arc through angle 0 to -theta, and leaves along the ray at
// -theta. Requires m >= 1 and theta in (0, pi/2).
Contour gamma_m_contour(int m, double theta);

// Negatively-oriented deformed disc boundary: inward ray at angle +delta
// from the truncation radius down to |zeta| = r, clockwise arc through
// angle 0 to -delta, outward ray at -delta. Requires r in (0, 1] and
// delta in (0, pi/2).
Contour deformed_boundary(double r, double delta);

// Contours backing the interpolant: a full counterclockwise circle of
// radius r starting at angle theta, and the outward ray at angle theta
// from radius r. Returned for inspection/serialization; the quadrature
// parameterizes these directly.
std::pair<Contour, Contour> interpolant_contour(double r, double theta);

// True if consecutive pieces chain end-to-start and the final end returns
// to the initial start (within tol).
bool is_closed(const Contour& contour, double trunc, double tol = 1e-9);

// Winding number about `point`, computed from sampled argument increments.
// Meaningful for closed contours only.
int winding_number(const Contour& contour, Cx point, double trunc,
                   int samples_per_piece = 512);

// JSON description of the contour (pieces with their resolved endpoints).
std::string contour_to_json(const Contour& contour, double trunc);

}  // namespace anacont
