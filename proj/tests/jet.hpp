#pragma once

// Truncated Taylor-series scalar for derivative oracles in tests: carries the
// value and the first DEG derivatives of an expression, propagated exactly
// through arithmetic, exp and sin. Independent of any hand-derived formulas.

#include <array>
#include <cmath>

namespace testing_jet {

template <int DEG>
struct Jet {
  // coeff[k] = f^(k)(x0) / k!
  std::array<double, DEG + 1> coeff{};

  static Jet constant(double c) {
    Jet j;
    j.coeff[0] = c;
    return j;
  }
  static Jet variable(double x0) {
    Jet j;
    j.coeff[0] = x0;
    if constexpr (DEG >= 1) j.coeff[1] = 1.0;
    return j;
  }
  double derivative(int order) const {
    double fact = 1.0;
    for (int k = 2; k <= order; ++k) fact *= k;
    return coeff[order] * fact;
  }
};

template <int D>
Jet<D> operator+(const Jet<D>& a, const Jet<D>& b) {
  Jet<D> r;
  for (int k = 0; k <= D; ++k) r.coeff[k] = a.coeff[k] + b.coeff[k];
  return r;
}

template <int D>
Jet<D> operator-(const Jet<D>& a, const Jet<D>& b) {
  Jet<D> r;
  for (int k = 0; k <= D; ++k) r.coeff[k] = a.coeff[k] - b.coeff[k];
  return r;
}

template <int D>
Jet<D> operator*(const Jet<D>& a, const Jet<D>& b) {
  Jet<D> r;
  for (int k = 0; k <= D; ++k)
    for (int j = 0; j <= k; ++j) r.coeff[k] += a.coeff[j] * b.coeff[k - j];
  return r;
}

template <int D>
Jet<D> operator*(double s, const Jet<D>& a) {
  Jet<D> r;
  for (int k = 0; k <= D; ++k) r.coeff[k] = s * a.coeff[k];
  return r;
}

template <int D>
Jet<D> operator+(double s, const Jet<D>& a) {
  Jet<D> r = a;
  r.coeff[0] += s;
  return r;
}

template <int D>
Jet<D> operator-(double s, const Jet<D>& a) {
  Jet<D> r;
  for (int k = 0; k <= D; ++k) r.coeff[k] = -a.coeff[k];
  r.coeff[0] += s;
  return r;
}

// exp via e' = f' e
template <int D>
Jet<D> exp(const Jet<D>& f) {
  Jet<D> r;
  r.coeff[0] = std::exp(f.coeff[0]);
  for (int k = 1; k <= D; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * f.coeff[j] * r.coeff[k - j];
    r.coeff[k] = s / k;
  }
  return r;
}

// sin/cos via the coupled recurrences s' = f'c, c' = -f's
template <int D>
Jet<D> sin(const Jet<D>& f) {
  Jet<D> s, c;
  s.coeff[0] = std::sin(f.coeff[0]);
  c.coeff[0] = std::cos(f.coeff[0]);
  for (int k = 1; k <= D; ++k) {
    double sa = 0.0, ca = 0.0;
    for (int j = 1; j <= k; ++j) {
      sa += j * f.coeff[j] * c.coeff[k - j];
      ca += j * f.coeff[j] * s.coeff[k - j];
    }
    s.coeff[k] = sa / k;
    c.coeff[k] = -ca / k;
  }
  return s;
}

} // namespace testing_jet
