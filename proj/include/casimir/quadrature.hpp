#pragma once

// Globally adaptive 15-point Gauss-Kronrod quadrature on a finite interval.
// The interval with the largest error estimate is bisected first; ties are
// broken by position, so the subdivision sequence (and therefore the result)
// is bit-identical from run to run.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace casimir::quadrature {

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.0,
    0.20778495500789848,
    0.40584515137739718,
    0.58608723546769115,
    0.74153118559939446,
    0.8648644233597691,
    0.94910791234275849,
    0.99145537112081261,
};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.20948214108472782,  0.20443294007529889,  0.19035057806478542,  0.16900472663926791,
    0.14065325971552592,  0.10479001032225019,  0.063092092629978558, 0.022935322010529224,
};
// Gauss weights for the Kronrod nodes with even index (0, 2, 4, 6).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.4179591836734694,
    0.38183005050511892,
    0.27970539148927664,
    0.1294849661688697,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <class F>
Panel gauss_kronrod_15(const F& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 15> fv{};
  fv[0] = f(center);
  for (std::size_t i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    fv[2 * i - 1] = f(center - dx);
    fv[2 * i] = f(center + dx);
  }

  double kronrod = kKronrodWeights[0] * fv[0];
  double gauss = kGaussWeights[0] * fv[0];
  double abs_sum = std::abs(kronrod);
  for (std::size_t i = 1; i < 8; ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    kronrod += kKronrodWeights[i] * pair;
    abs_sum += kKronrodWeights[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < 8; ++i) {
    asc += kKronrodWeights[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }

  double err = std::abs((kronrod - gauss) * half);
  const double res_abs = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);
  return {a, b, kronrod * half, err};
}

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;
  }
};

}  // namespace detail

/// Integrate f over [a, b] until the summed error estimate is at most
/// max(abs_tol, rel_tol * |value|) or max_intervals panels exist.
template <class F>
Result integrate(const F& f, double a, double b, double abs_tol, double rel_tol,
                 int max_intervals = 4000) {
  Result result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelOrder> panels;
  panels.push(detail::gauss_kronrod_15(f, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  int evaluations = 15;

  while (error > std::max(abs_tol, rel_tol * std::abs(value)) &&
         static_cast<int>(panels.size()) < max_intervals) {
    const detail::Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot subdivide further
    panels.pop();
    const auto left = detail::gauss_kronrod_15(f, worst.a, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst.b);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum from the panels in a fixed order to shed the running-update drift.
  std::vector<detail::Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  value = 0.0;
  error = 0.0;
  for (const auto& p : all) {
    value += p.value;
    error += p.error;
  }

  result.value = value;
  result.error = error;
  result.intervals = static_cast<int>(all.size());
  result.evaluations = evaluations;
  result.converged = std::isfinite(value) && error <= std::max(abs_tol, rel_tol * std::abs(value));
  return result;
}

}  // namespace casimir::quadrature
