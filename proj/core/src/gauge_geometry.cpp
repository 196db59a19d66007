#include "anyonlab/gauge_geometry.hpp"

#include <cmath>

namespace anyonlab {

Vec2 vector_potential(std::size_t j, const Configuration2D& cfg) {
  if (j >= cfg.size()) throw std::invalid_argument("vector_potential: bad index");
  Vec2 a;
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    if (k == j) continue;
    const Vec2 d = cfg[j] - cfg[k];
    const double n2 = d.norm2();
    if (n2 == 0.0)
      throw singular_config_error("vector_potential: coincident points");
    a = a + d.perp() * (1.0 / n2);
  }
  return a;
}

double phase_S(const Configuration2D& cfg) {
  double s = 0.0;
  for (std::size_t j = 0; j < cfg.size(); ++j)
    for (std::size_t l = j + 1; l < cfg.size(); ++l) {
      const double dx = cfg[j].x - cfg[l].x;
      if (std::abs(dx) < kDiagonalGuard)
        throw singular_config_error("phase_S: configuration on an x-diagonal");
      // Principal branch of arctan of the quotient; the pi-jump across
      // x-diagonals is intrinsic.
      s += std::atan((cfg[j].y - cfg[l].y) / dx);
    }
  return s;
}

std::vector<Vec2> grad_S(const Configuration2D& cfg) {
  std::vector<Vec2> g(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j)
    for (std::size_t l = j + 1; l < cfg.size(); ++l) {
      const double dx = cfg[j].x - cfg[l].x;
      if (std::abs(dx) < kDiagonalGuard)
        throw singular_config_error("grad_S: configuration on an x-diagonal");
      const double dy = cfg[j].y - cfg[l].y;
      const double n2 = dx * dx + dy * dy;
      // d/dx_j arctan(dy/dx) = -dy/n2, d/dy_j = dx/n2; opposite for particle l.
      g[j].x += -dy / n2;
      g[j].y += dx / n2;
      g[l].x += dy / n2;
      g[l].y += -dx / n2;
    }
  return g;
}

CMRelativeFrame cm_relative_split(const Configuration2D& cfg) {
  if (cfg.size() != 2)
    throw std::invalid_argument("cm_relative_split: N = 2 required");
  return CMRelativeFrame{(cfg[0] + cfg[1]) * 0.5, cfg[0] - cfg[1]};
}

Configuration2D cm_relative_merge(const CMRelativeFrame& f) {
  return {f.R + f.r * 0.5, f.R - f.r * 0.5};
}

}  // namespace anyonlab
