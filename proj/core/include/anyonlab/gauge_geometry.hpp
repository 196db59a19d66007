#ifndef ANYONLAB_GAUGE_GEOMETRY_HPP
#define ANYONLAB_GAUGE_GEOMETRY_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace anyonlab {

struct Vec2 {
  double x = 0.0, y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 perp() const { return {-y, x}; }
  double norm2() const { return x * x + y * y; }
};

using Configuration2D = std::vector<Vec2>;

struct singular_config_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Minimum |x_j - x_l| separation accepted by the phase operations; closer
// configurations sit on a principal-branch jump and are rejected.
constexpr double kDiagonalGuard = 1e-12;

// A_j(x_j) = sum_{k != j} (x_j - x_k)^perp / |x_j - x_k|^2, with
// x^perp = (-y, x).  Alpha-free; statistics enter as a multiplier downstream.
Vec2 vector_potential(std::size_t j, const Configuration2D& cfg);

// S = sum_{j<l} arctan((y_j - y_l)/(x_j - x_l)), principal branch.
// Defined off the x-diagonals (|x_j - x_l| > 0); label-exchange invariant.
double phase_S(const Configuration2D& cfg);

// Analytic gradient of S; equals vector_potential component-wise off the
// x-diagonals.
std::vector<Vec2> grad_S(const Configuration2D& cfg);

struct CMRelativeFrame {
  Vec2 R;  // (x1 + x2)/2
  Vec2 r;  // x1 - x2
};

CMRelativeFrame cm_relative_split(const Configuration2D& cfg);  // N = 2
Configuration2D cm_relative_merge(const CMRelativeFrame& frame);

}  // namespace anyonlab

#endif
