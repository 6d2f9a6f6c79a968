#include "morley/problems.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace morley {

LayerConstants layer_constants(double eps) {
  if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("layer_constants: eps must be in (0,1]");
  LayerConstants lc;
  lc.l = -std::expm1(-1.0 / eps);
  lc.q = 2.0 - lc.l;
  lc.d = 1.0 / (lc.q - 2.0 * eps * lc.l);
  return lc;
}

Example1Factors::Example1Factors(double eps) : eps_(eps) {
  const LayerConstants lc = layer_constants(eps);
  amp_ = M_PI * eps / lc.l;
  g_const_ = amp_ * (1.0 + std::exp(-1.0 / eps));
  b0_ = 3.0 / lc.l - lc.d;
  b1_ = 3.0 / lc.l + lc.d;
  ld_ = lc.l * lc.d;
  q_over_l_ = lc.q / lc.l;
}

double Example1Factors::g(int order, double x) const {
  // d^k/dx^k of (1/2)[sin(pi x) + amp*(e^{-x/eps} + e^{-(1-x)/eps})] minus
  // the k = 0 constant.
  const double e0 = std::exp(-x / eps_);
  const double e1 = std::exp(-(1.0 - x) / eps_);
  double trig;
  switch (order % 4) {
    case 0: trig = std::sin(M_PI * x); break;
    case 1: trig = std::cos(M_PI * x); break;
    case 2: trig = -std::sin(M_PI * x); break;
    default: trig = -std::cos(M_PI * x); break;
  }
  const double pi_k = std::pow(M_PI, order);
  const double inv_eps_k = std::pow(1.0 / eps_, order);
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  double v = 0.5 * (pi_k * trig + amp_ * inv_eps_k * (sign * e0 + e1));
  if (order == 0) v -= 0.5 * g_const_;
  return v;
}

double Example1Factors::h(int order, double y) const {
  const double f0 = std::exp(-y / eps_);
  const double f1 = std::exp(-(1.0 - y) / eps_);
  double poly;
  switch (order) {
    case 0: poly = 2.0 * y * (1.0 - y * y) + eps_ * (ld_ * (1.0 - 2.0 * y) - 3.0 * q_over_l_); break;
    case 1: poly = 2.0 - 6.0 * y * y - 2.0 * eps_ * ld_; break;
    case 2: poly = -12.0 * y; break;
    case 3: poly = -12.0; break;
    default: poly = 0.0; break;
  }
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  const double layer = std::pow(1.0 / eps_, order - 1) * (sign * b0_ * f0 + b1_ * f1);
  return poly + layer;
}

ProblemSpec example1(double eps) {
  if (eps <= 0.0 || eps > 1.0) throw std::invalid_argument("example1: eps must be in (0,1]");
  auto gh = std::make_shared<Example1Factors>(eps);

  ProblemSpec p;
  p.name = "example1";
  p.eps = eps;
  p.c = [](double, double) { return 1.0; };
  const double eps2 = eps * eps;
  p.f = [gh, eps2](double x, double y) {
    const double g0 = gh->g(0, x), g2 = gh->g(2, x), g4 = gh->g(4, x);
    const double h0 = gh->h(0, y), h2 = gh->h(2, y), h4 = gh->h(4, y);
    return eps2 * (g4 * h0 + 2.0 * g2 * h2 + g0 * h4) - (g2 * h0 + g0 * h2);
  };
  ExactSolution ex;
  ex.u = [gh](double x, double y) { return gh->g(0, x) * gh->h(0, y); };
  ex.ux = [gh](double x, double y) { return gh->g(1, x) * gh->h(0, y); };
  ex.uy = [gh](double x, double y) { return gh->g(0, x) * gh->h(1, y); };
  ex.uxx = [gh](double x, double y) { return gh->g(2, x) * gh->h(0, y); };
  ex.uyy = [gh](double x, double y) { return gh->g(0, x) * gh->h(2, y); };
  p.exact = std::move(ex);
  return p;
}

ProblemSpec example2(double eps) {
  if (eps <= 0.0) throw std::invalid_argument("example2: eps must be positive");
  ProblemSpec p;
  p.name = "example2";
  p.eps = eps;
  p.c = [](double x, double y) { return 3.0 + (1.0 + x) * y * y + (2.0 - y) * std::exp(x); };
  p.f = [](double x, double y) {
    return 100.0 * (1.0 - x - y + 2.0 * x * y) * (x + y - 2.0 * x * y);
  };
  return p;
}

ProblemSpec example3(double eps) {
  if (eps <= 0.0) throw std::invalid_argument("example3: eps must be positive");
  ProblemSpec p;
  p.name = "example3";
  p.eps = eps;
  p.c = [](double, double) { return 1.0; };
  p.f = [](double x, double y) {
    return 2.0 * M_PI * M_PI * (1.0 - std::cos(2.0 * M_PI * x) * std::cos(2.0 * M_PI * y));
  };
  return p;
}

ProblemSpec problem_by_name(const std::string& name, double eps) {
  if (name == "example1") return example1(eps);
  if (name == "example2") return example2(eps);
  if (name == "example3") return example3(eps);
  throw std::invalid_argument("unknown problem: " + name);
}

double min_coefficient_on_grid(const ProblemSpec& p, int samples) {
  double mn = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j)
      mn = std::min(mn, p.c(static_cast<double>(i) / (samples - 1),
                            static_cast<double>(j) / (samples - 1)));
  return mn;
}

} // namespace morley
