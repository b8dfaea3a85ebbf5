#include "anacont/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "anacont/errors.hpp"

namespace anacont {

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    // Tricomi-style initial guess for the i-th root of P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

namespace {

struct GLPair {
  std::vector<double> x15, w15, x7, w7;
  GLPair() {
    gauss_legendre(15, x15, w15);
    gauss_legendre(7, x7, w7);
  }
};

const GLPair& gl_pair() {
  static const GLPair p;
  return p;
}

struct Panel {
  double a = 0.0, b = 0.0;
  Cx i15{0.0, 0.0};
  Cx i7{0.0, 0.0};
  double err = 0.0;
  double l1 = 0.0;
};

// Evaluate both rules of the embedded pair on [a, b]: 22 evaluations.
Panel make_panel(const std::function<Cx(double)>& f, double a, double b) {
  const GLPair& gl = gl_pair();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Panel p;
  p.a = a;
  p.b = b;
  for (int i = 0; i < 15; ++i) {
    const Cx v = f(mid + half * gl.x15[i]);
    p.i15 += gl.w15[i] * v;
    p.l1 += gl.w15[i] * std::abs(v);
  }
  for (int i = 0; i < 7; ++i) {
    p.i7 += gl.w7[i] * f(mid + half * gl.x7[i]);
  }
  p.i15 *= half;
  p.i7 *= half;
  p.l1 *= half;
  p.err = std::abs(p.i15 - p.i7);
  return p;
}

struct PanelWorse {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    return lhs.err < rhs.err;
  }
};

}  // namespace

QuadResult integrate_param(const std::function<Cx(double)>& f, double a,
                           double b, const QuadOptions& opts,
                           const std::vector<double>& interior_breaks) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  double sign = 1.0;
  double lo = a, hi = b;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ParameterError("integrate_param: endpoints must be finite");
  }

  std::vector<double> cuts;
  cuts.push_back(lo);
  for (double c : interior_breaks) {
    if (c > lo && c < hi) cuts.push_back(c);
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
  Cx total{0.0, 0.0};
  double err_sum = 0.0;
  double l1_sum = 0.0;
  std::size_t evals = 0;

  auto push = [&](double pa, double pb) {
    Panel p = make_panel(f, pa, pb);
    evals += 22;
    total += p.i15;
    err_sum += p.err;
    l1_sum += p.l1;
    queue.push(p);
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) push(cuts[i], cuts[i + 1]);

  const double eps = std::numeric_limits<double>::epsilon();
  auto target = [&]() {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(total),
                     50.0 * eps * l1_sum});
  };

  bool converged = err_sum <= target();
  while (!converged && evals + 44 <= opts.max_evals) {
    Panel worst = queue.top();
    queue.pop();
    total -= worst.i15;
    err_sum -= worst.err;
    l1_sum -= worst.l1;
    const double mid = 0.5 * (worst.a + worst.b);
    // Interval too narrow to split further: restore and accept the floor.
    if (!(mid > worst.a && mid < worst.b)) {
      total += worst.i15;
      err_sum += worst.err;
      l1_sum += worst.l1;
      queue.push(worst);
      break;
    }
    push(worst.a, mid);
    push(mid, worst.b);
    converged = err_sum <= target();
  }
  if (!converged) converged = err_sum <= target();

  res.value = sign * total;
  res.err = err_sum;
  res.evals = evals;
  res.converged = converged;
  res.l1 = l1_sum;
  return res;
}

namespace {

// Geometric radius breakpoints r0 * ratio^k strictly inside (r0, r1).
std::vector<double> geometric_breaks(double r0, double r1, double ratio) {
  std::vector<double> breaks;
  if (r0 <= 0.0) r0 = std::min(1.0, r1 / ratio);
  for (double r = r0 * ratio; r < r1; r *= ratio) breaks.push_back(r);
  return breaks;
}

// Angle breakpoints so no sub-arc exceeds max_step radians.
std::vector<double> arc_breaks(double t0, double t1, double max_step) {
  std::vector<double> breaks;
  const double span = std::abs(t1 - t0);
  const int n = static_cast<int>(std::ceil(span / max_step));
  for (int k = 1; k < n; ++k) breaks.push_back(t0 + (t1 - t0) * k / n);
  return breaks;
}

}  // namespace

QuadResult integrate_piece(const ContourPiece& piece,
                           const std::function<Cx(Cx)>& f,
                           double ray_truncation, const QuadOptions& opts) {
  if (const auto* ray = std::get_if<RayPiece>(&piece)) {
    if (!(ray_truncation > ray->r_start)) {
      throw ParameterError(
          "integrate_piece: ray truncation must exceed the ray start radius");
    }
    const Cx dir = std::exp(Cx(0.0, ray->theta));
    auto g = [&](double rho) { return f(rho * dir) * dir; };
    const double sign = ray->direction == RayDirection::outward ? 1.0 : -1.0;
    QuadResult r =
        integrate_param(g, ray->r_start, ray_truncation, opts,
                        geometric_breaks(ray->r_start, ray_truncation, 4.0));
    r.value *= sign;
    return r;
  }
  if (const auto* arc = std::get_if<ArcPiece>(&piece)) {
    const double R = arc->radius;
    auto g = [&](double phi) {
      const Cx zeta = R * std::exp(Cx(0.0, phi));
      return f(zeta) * Cx(0.0, 1.0) * zeta;
    };
    return integrate_param(g, arc->theta_from, arc->theta_to, opts,
                           arc_breaks(arc->theta_from, arc->theta_to, 0.4));
  }
  const auto& seg = std::get<SegmentPiece>(piece);
  const Cx d = seg.to - seg.from;
  auto g = [&](double t) { return f(seg.from + t * d) * d; };
  return integrate_param(g, 0.0, 1.0, opts);
}

QuadResult integrate_contour(const Contour& contour,
                             const std::function<Cx(Cx)>& f,
                             double ray_truncation, const QuadOptions& opts) {
  QuadResult total;
  total.converged = true;
  for (const auto& piece : contour.pieces) {
    QuadResult r = integrate_piece(piece, f, ray_truncation, opts);
    total.value += r.value;
    total.err += r.err;
    total.evals += r.evals;
    total.l1 += r.l1;
    total.converged = total.converged && r.converged;
  }
  return total;
}

}  // namespace anacont
