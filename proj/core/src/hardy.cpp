#include "anyonlab/hardy.hpp"

#include "anyonlab/gauge_geometry.hpp"
#include "anyonlab/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyonlab {

namespace {

// Self-contained normal sampler (xorshift-mixed mt19937_64 + Box-Muller)
// so fixed seeds reproduce runs on any standard library.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed ? seed : 1) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  double uniform() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return static_cast<double>((state_ * 0x2545F4914F6CDD1Dull) >> 11) /
           9007199254740992.0;
  }
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

struct RatioAccumulator {
  double sn = 0.0, sd = 0.0, snn = 0.0, sdd = 0.0, snd = 0.0;
  std::size_t count = 0;

  void add(double num, double den) {
    sn += num;
    sd += den;
    snn += num * num;
    sdd += den * den;
    snd += num * den;
    ++count;
  }

  McResult finish(std::size_t samples, std::uint64_t seed) const {
    const double n = static_cast<double>(count);
    const double mn = sn / n, md = sd / n;
    const double vn = (snn / n - mn * mn) / n;
    const double vd = (sdd / n - md * md) / n;
    const double cnd = (snd / n - mn * md) / n;
    const double ratio = mn / md;
    // delta method for the ratio of correlated means
    const double var =
        (vn - 2.0 * ratio * cnd + ratio * ratio * vd) / (md * md);
    McResult r;
    r.estimate = ratio;
    r.stderr_est = std::sqrt(std::max(var, 0.0));
    r.samples = samples;
    r.seed = seed;
    r.flagged = r.stderr_est > 0.1 * std::abs(r.estimate);
    return r;
  }
};

}  // namespace

McResult hardy_quotient_mc(const HardyTrial& t, std::size_t samples,
                           std::uint64_t seed) {
  if (t.n_particles != 2 && t.n_particles != 3)
    throw std::invalid_argument("hardy_quotient_mc: N in {2,3}");
  if (t.jastrow < 1 || !(t.width > 0.0))
    throw std::invalid_argument("hardy_quotient_mc: bad trial");
  const int n = t.n_particles;
  const double w2 = t.width * t.width;
  const double p = 2.0 * t.jastrow;  // |x_j-x_l|^p pair factor

  GaussianStream rng(seed);
  RatioAccumulator acc;
  const double sigma = t.width / std::sqrt(2.0);  // envelope e^{-|x|^2/w^2}

  std::vector<Vec2> pts(n);
  auto evaluate = [&](const std::vector<Vec2>& x, double& num, double& den) {
    // log Jastrow^2 and the pair sums
    double log_j2 = 0.0;
    double inv_sum = 0.0;
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const double d2 = (x[j] - x[l]).norm2();
        log_j2 += p * std::log(d2);
        inv_sum += 1.0 / d2;
      }
    const double j2 = std::exp(log_j2);  // phi^2 / Gaussian envelope
    double kinetic = 0.0;
    for (int k = 0; k < n; ++k) {
      Vec2 g{0.0, 0.0}, a{0.0, 0.0};
      for (int l = 0; l < n; ++l) {
        if (l == k) continue;
        const Vec2 d = x[k] - x[l];
        const double d2 = d.norm2();
        g = g + d * (p / d2);
        a = a + d.perp() * (1.0 / d2);
      }
      g = g - x[k] * (1.0 / w2);
      kinetic += g.norm2() + t.alpha * t.alpha * a.norm2();
    }
    num = j2 * kinetic;
    den = j2 * inv_sum;
  };

  for (std::size_t s = 0; s + 1 < samples; s += 2) {
    for (int j = 0; j < n; ++j) pts[j] = {sigma * rng.next(), sigma * rng.next()};
    double num1, den1;
    evaluate(pts, num1, den1);
    for (auto& q : pts) q = q * -1.0;  // antithetic mirror
    double num2, den2;
    evaluate(pts, num2, den2);
    acc.add(0.5 * (num1 + num2), 0.5 * (den1 + den2));
  }
  return acc.finish(samples, seed);
}

McResult three_particle_hardy_mc(double width, std::size_t samples,
                                 std::uint64_t seed) {
  if (!(width > 0.0)) throw std::invalid_argument("three_particle_hardy_mc");
  const double w2 = width * width;
  GaussianStream rng(seed);
  RatioAccumulator acc;
  const double sigma = width / std::sqrt(2.0);
  std::vector<Vec2> pts(3);
  auto evaluate = [&](const std::vector<Vec2>& x, double& num, double& den) {
    double rho2 = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int l = j + 1; l < 3; ++l) rho2 += (x[j] - x[l]).norm2();
    double kin = 0.0;
    for (int j = 0; j < 3; ++j) kin += x[j].norm2() / (w2 * w2);
    num = kin;
    den = 1.0 / rho2;
  };
  for (std::size_t s = 0; s + 1 < samples; s += 2) {
    for (int j = 0; j < 3; ++j) pts[j] = {sigma * rng.next(), sigma * rng.next()};
    double n1, d1;
    evaluate(pts, n1, d1);
    for (auto& q : pts) q = q * -1.0;
    double n2, d2;
    evaluate(pts, n2, d2);
    acc.add(0.5 * (n1 + n2), 0.5 * (d1 + d2));
  }
  return acc.finish(samples, seed);
}

double two_anyon_channel_quotient(int m, double alpha, int quad_order) {
  // phi = r e^{-r^2/2} e^{im theta} in the relative channel:
  // quotient = (m+alpha)^2 + int |f'|^2 r dr / int f^2 / r dr.
  const QuadratureRule& gl = cached_gauss_laguerre(quad_order, 0.0);
  double kin = 0.0, den = 0.0;
  for (int i = 0; i < gl.order(); ++i) {
    const double t = gl.nodes[i];  // t = r^2
    const double fp = 1.0 - t;    // f' at r = sqrt(t), over e^{-t/2}
    kin += 0.5 * gl.weights[i] * fp * fp;
    den += 0.5 * gl.weights[i];
  }
  const double ma = m + alpha;
  return ma * ma + kin / den;
}

}  // namespace anyonlab
