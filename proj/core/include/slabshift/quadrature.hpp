#pragma once

// Globally adaptive Gauss-Kronrod (10/21 point) integration of a vector of
// integrands sharing their evaluation points. The rule and error heuristic are
// those of QUADPACK's qk21; the subdivision policy is deterministic (always
// bisect the panel with the largest normalized error, ties to the leftmost).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace slabshift::quad {

template <std::size_t N>
using Vec = std::array<double, N>;

struct Tolerance {
  double rel = 1e-8;
  double abs = 1e-14;
  std::size_t max_panels = 2000;
};

template <std::size_t N>
struct Estimate {
  Vec<N> value{};
  Vec<N> error{};
  std::size_t panels = 0;
  bool converged = false;
};

namespace detail {

inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the nodes kXgk[1], kXgk[3], ..., kXgk[9].
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <std::size_t N>
struct Panel {
  double a;
  double b;
  Vec<N> value;
  Vec<N> error;
};

}  // namespace detail

/// One application of the 21-point Kronrod rule on [a, b]; the error is the
/// QUADPACK estimate built from the embedded 10-point Gauss rule.
template <std::size_t N, class F>
detail::Panel<N> gauss_kronrod21(F& f, double a, double b) {
  using detail::kWg;
  using detail::kWgk;
  using detail::kXgk;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();

  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<Vec<N>, 10> lower{};
  std::array<Vec<N>, 10> upper{};
  const Vec<N> fc = f(center);

  Vec<N> resk{};
  Vec<N> resg{};
  Vec<N> resabs{};
  for (std::size_t c = 0; c < N; ++c) {
    resk[c] = fc[c] * kWgk[10];
    resabs[c] = std::abs(resk[c]);
  }
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    lower[j] = f(center - dx);
    upper[j] = f(center + dx);
    for (std::size_t c = 0; c < N; ++c) {
      const double sum = lower[j][c] + upper[j][c];
      resk[c] += kWgk[j] * sum;
      resabs[c] += kWgk[j] * (std::abs(lower[j][c]) + std::abs(upper[j][c]));
      if (j % 2 == 1) resg[c] += kWg[j / 2] * sum;
    }
  }

  detail::Panel<N> out{a, b, {}, {}};
  for (std::size_t c = 0; c < N; ++c) {
    const double mean = 0.5 * resk[c];
    double resasc = kWgk[10] * std::abs(fc[c] - mean);
    for (std::size_t j = 0; j < 10; ++j) {
      resasc += kWgk[j] * (std::abs(lower[j][c] - mean) + std::abs(upper[j][c] - mean));
    }
    const double value = resk[c] * half;
    double err = std::abs((resk[c] - resg[c]) * half);
    resasc *= abs_half;
    const double res_abs = resabs[c] * abs_half;
    if (resasc != 0.0 && err != 0.0) {
      err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (res_abs > uflow / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);
    out.value[c] = value;
    out.error[c] = err;
  }
  return out;
}

/// Adaptive integration over [breaks.front(), breaks.back()], starting from the
/// panels delimited by `breaks` (sorted ascending). Only the first `controlled`
/// components drive refinement and convergence; the remaining ones are carried
/// along (used to integrate error densities of nested integrals).
template <std::size_t N, class F>
Estimate<N> adaptive(F&& f, std::span<const double> breaks, const Tolerance& tol,
                     std::size_t controlled = N) {
  std::vector<detail::Panel<N>> panels;
  panels.reserve(std::max<std::size_t>(tol.max_panels, breaks.size()) + 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i + 1] > breaks[i]) panels.push_back(gauss_kronrod21<N>(f, breaks[i], breaks[i + 1]));
  }

  Estimate<N> est;
  auto totals = [&] {
    est.value.fill(0.0);
    est.error.fill(0.0);
    for (const auto& p : panels) {
      for (std::size_t c = 0; c < N; ++c) {
        est.value[c] += p.value[c];
        est.error[c] += p.error[c];
      }
    }
  };
  auto target = [&](std::size_t c) { return std::max(tol.rel * std::abs(est.value[c]), tol.abs); };
  auto done = [&] {
    for (std::size_t c = 0; c < controlled; ++c) {
      if (est.error[c] > target(c)) return false;
    }
    return true;
  };

  totals();
  while (!done()) {
    if (panels.size() >= tol.max_panels) {
      est.panels = panels.size();
      est.converged = false;
      return est;
    }
    std::size_t worst = panels.size();
    double worst_score = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const auto& p = panels[i];
      // Panels at floating-point resolution cannot be split further.
      if (p.b - p.a <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(p.a), std::abs(p.b))) {
        continue;
      }
      double score = 0.0;
      for (std::size_t c = 0; c < controlled; ++c) score += p.error[c] / target(c);
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    if (worst == panels.size()) break;
    const double a = panels[worst].a;
    const double b = panels[worst].b;
    const double mid = 0.5 * (a + b);
    panels[worst] = gauss_kronrod21<N>(f, a, mid);
    panels.push_back(gauss_kronrod21<N>(f, mid, b));
    totals();
  }
  est.panels = panels.size();
  est.converged = done();
  return est;
}

}  // namespace slabshift::quad
