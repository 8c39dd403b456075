// Copyright 2026 The PSMRLab Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "psmrlab/tsallis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "psmrlab/error.h"

namespace psmrlab {
namespace {

constexpr double kNormalizationTol = 1e-12;

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw InvalidArgumentError("Tsallis parameter must lie in (0, 1), got " +
                               std::to_string(alpha));
  }
}

void CheckFinite(const Vector& v) {
  if (v.size() == 0) throw InvalidArgumentError("empty reward vector");
  if (!v.allFinite()) throw InvalidArgumentError("non-finite reward vector");
}

// w^(1/(alpha-1)), with the common alpha = 1/2 case done without pow.
inline double TsallisWeight(double w, double alpha, double exponent) {
  if (alpha == 0.5) return 1.0 / (w * w);
  return std::pow(w, exponent);
}

}  // namespace

double TsallisPotential(const Vector& p, double alpha) {
  CheckAlpha(alpha);
  double total = 0.0;
  for (double pi : p) {
    if (pi < 0.0) throw InvalidArgumentError("negative probability");
    total += std::pow(pi, alpha) - pi;
  }
  return total / alpha;
}

FtrlSolution FtrlTsallisSolveDetailed(const Vector& cumulative, double eta,
                                      double alpha,
                                      std::optional<double> warm_offset) {
  CheckAlpha(alpha);
  CheckFinite(cumulative);
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw InvalidArgumentError("learning rate must be positive");
  }
  const int m = static_cast<int>(cumulative.size());
  const double exponent = 1.0 / (alpha - 1.0);
  const double inv_alpha = 1.0 / alpha;
  const double top = cumulative.maxCoeff();

  // With s = eta * (mu - max L): w_i = s + gap_i + 1/alpha.
  Vector gap = eta * (top - cumulative.array()).matrix();
  Vector p(m);

  // Residual f(s) = sum_i w_i^exponent - 1 and its derivative.
  auto evaluate = [&](double s, double* slope) {
    double sum = 0.0;
    double d = 0.0;
    for (int i = 0; i < m; ++i) {
      const double w = s + gap[i] + inv_alpha;
      const double pi = TsallisWeight(w, alpha, exponent);
      p[i] = pi;
      sum += pi;
      d += pi / w;
    }
    *slope = exponent * d;
    return sum - 1.0;
  };

  // f(lo) >= 0 (the leading coordinate alone has weight one) and
  // f(hi) <= 0 (every coordinate has weight at most 1/m).
  double lo = 1.0 - inv_alpha;
  double hi = std::pow(static_cast<double>(m), 1.0 - alpha) - inv_alpha;
  double s = lo;
  if (warm_offset && *warm_offset > lo && *warm_offset < hi) s = *warm_offset;

  int iter = 0;
  double slope = 0.0;
  double f = evaluate(s, &slope);
  for (; iter < kFtrlMaxIterations; ++iter) {
    if (std::abs(f) <= kNormalizationTol) break;
    if (f > 0.0) {
      lo = s;
    } else {
      hi = s;
    }
    double next = s - f / slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == s || hi - lo <= 4 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(s))) {
      break;
    }
    s = next;
    f = evaluate(s, &slope);
  }
  if (iter == kFtrlMaxIterations && std::abs(f) > 1e-9) {
    throw NumericalError("Tsallis FTRL solve did not converge");
  }
  p /= p.sum();
  return {SimplexPoint::FromNormalized(std::move(p)), s, iter};
}

namespace {

// Stationarity function of the hybrid regularizer:
//   g(p) = beta (p^(alpha-1) - 1/alpha) + beta_bar (p^(-alpha) - 1/(1-alpha)).
struct HybridGradient {
  double alpha, beta, beta_bar;

  double Value(double p) const {
    double v = beta * (std::pow(p, alpha - 1.0) - 1.0 / alpha);
    if (beta_bar > 0.0) {
      v += beta_bar * (std::pow(p, -alpha) - 1.0 / (1.0 - alpha));
    }
    return v;
  }
  // dg/dp < 0.
  double Slope(double p) const {
    double d = beta * (alpha - 1.0) * std::pow(p, alpha - 2.0);
    if (beta_bar > 0.0) d -= beta_bar * alpha * std::pow(p, -alpha - 1.0);
    return d;
  }

  // Solves g(p) = target for p in (0, 1]; returns 1 when target <= g(1).
  //
  // In q = log p the equation beta e^{(alpha-1)q} + beta_bar e^{-alpha q} = C
  // has a convex decreasing left side, so Newton from a point left of the
  // root climbs monotonically; the closed-form bracket catches stragglers.
  double Invert(double target) const {
    if (target <= Value(1.0)) return 1.0;
    const double c = target + beta / alpha +
                     (beta_bar > 0.0 ? beta_bar / (1.0 - alpha) : 0.0);
    double lo = std::pow(c / beta, 1.0 / (alpha - 1.0));
    double hi = std::pow(c / (2.0 * beta), 1.0 / (alpha - 1.0));
    if (beta_bar > 0.0) {
      lo = std::max(lo, std::pow(c / beta_bar, -1.0 / alpha));
      hi = std::max(hi, std::pow(c / (2.0 * beta_bar), -1.0 / alpha));
    }
    hi = std::min(hi, 1.0);
    lo = std::min(lo, hi);
    double q_lo = std::log(lo);
    double q_hi = std::log(hi);
    double q = q_lo;
    for (int it = 0; it < 200; ++it) {
      const double a = beta * std::exp((alpha - 1.0) * q);
      const double b = beta_bar > 0.0 ? beta_bar * std::exp(-alpha * q) : 0.0;
      const double h = a + b - c;
      if (h > 0.0) {
        q_lo = q;
      } else {
        q_hi = q;
      }
      if (std::abs(h) <= 1e-15 * c) break;
      const double dh = (alpha - 1.0) * a - alpha * b;
      double next = q - h / dh;
      if (!(next >= q_lo && next <= q_hi)) next = 0.5 * (q_lo + q_hi);
      if (std::abs(next - q) <= 1e-14 * std::max(1.0, std::abs(q))) {
        q = next;
        break;
      }
      q = next;
    }
    return std::min(1.0, std::exp(q));
  }
};

}  // namespace

FtrlSolution FtrlHybridSolveDetailed(const Vector& cumulative, double beta,
                                     double beta_bar, double alpha,
                                     std::optional<double> warm_offset) {
  CheckAlpha(alpha);
  CheckFinite(cumulative);
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw InvalidArgumentError("beta must be positive");
  }
  if (!(beta_bar >= 0.0) || !std::isfinite(beta_bar)) {
    throw InvalidArgumentError("beta_bar must be nonnegative");
  }
  const int m = static_cast<int>(cumulative.size());
  const HybridGradient grad{alpha, beta, beta_bar};
  const double top = cumulative.maxCoeff();
  Vector gap = (top - cumulative.array()).matrix();
  Vector p(m);

  // Multiplier mu = max(L) + s; coordinate i solves g(p_i) = s + gap_i.
  auto evaluate = [&](double s, double* slope) {
    double sum = 0.0;
    double d = 0.0;
    for (int i = 0; i < m; ++i) {
      const double pi = grad.Invert(s + gap[i]);
      p[i] = pi;
      sum += pi;
      if (pi < 1.0) d += 1.0 / grad.Slope(pi);
    }
    *slope = d;
    return sum - 1.0;
  };

  double lo = grad.Value(1.0);
  double hi = grad.Value(1.0 / m);
  if (m == 1) hi = lo;
  double s = lo;
  if (warm_offset && *warm_offset > lo && *warm_offset < hi) s = *warm_offset;

  int iter = 0;
  double slope = 0.0;
  double f = evaluate(s, &slope);
  for (; iter < kFtrlMaxIterations; ++iter) {
    if (std::abs(f) <= kNormalizationTol || m == 1) break;
    if (f > 0.0) {
      lo = s;
    } else {
      hi = s;
    }
    double next = slope < 0.0 ? s - f / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == s || hi - lo <= 4 * std::numeric_limits<double>::epsilon() *
                                     std::max(1.0, std::abs(s))) {
      break;
    }
    s = next;
    f = evaluate(s, &slope);
  }
  if (iter == kFtrlMaxIterations && std::abs(f) > 1e-9) {
    throw NumericalError("hybrid FTRL solve did not converge");
  }
  p /= p.sum();
  return {SimplexPoint::FromNormalized(std::move(p)), s, iter};
}

double TsallisKktResidual(const Vector& cumulative, const Vector& p,
                          double eta, double alpha) {
  // Implied multiplier per coordinate, in units of 1/eta.
  const int m = static_cast<int>(p.size());
  double worst = std::abs(p.sum() - 1.0);
  int lead = 0;
  p.maxCoeff(&lead);
  auto implied = [&](int i) {
    return eta * cumulative[i] + std::pow(p[i], alpha - 1.0) - 1.0 / alpha;
  };
  const double ref = implied(lead);
  for (int i = 0; i < m; ++i) {
    const double scale = std::max(1.0, std::pow(p[i], alpha - 1.0));
    worst = std::max(worst, std::abs(implied(i) - ref) / scale);
  }
  return worst;
}

double HybridKktResidual(const Vector& cumulative, const Vector& p,
                         double beta, double beta_bar, double alpha) {
  const HybridGradient grad{alpha, beta, beta_bar};
  const int m = static_cast<int>(p.size());
  double worst = std::abs(p.sum() - 1.0);
  int lead = 0;
  p.maxCoeff(&lead);
  const double ref = cumulative[lead] + grad.Value(p[lead]);
  for (int i = 0; i < m; ++i) {
    const double g = grad.Value(p[i]);
    const double scale = std::max({1.0, std::abs(g), std::abs(ref)});
    worst = std::max(worst, std::abs(cumulative[i] + g - ref) / scale);
  }
  return worst;
}

}  // namespace psmrlab
