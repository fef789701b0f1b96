#include "nlwave/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "nlwave/compensated_sum.hpp"
#include "nlwave/errors.hpp"

namespace nlwave::quad {
namespace {

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const RulePair r = gauss_kronrod_15(f, a, b);
  return Panel{a, b, r.kronrod, std::fabs(r.kronrod - r.gauss)};
}

}  // namespace

RulePair gauss_kronrod_15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * pair;
    }
  }
  return RulePair{kronrod * half, gauss * half};
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts) {
  if (a == b) {
    return {};
  }
  const int panels = std::max(1, opts.initial_panels);
  std::priority_queue<Panel> heap;
  const double width = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * width;
    const double hi = (i + 1 == panels) ? b : a + (i + 1) * width;
    heap.push(evaluate_panel(f, lo, hi));
  }

  auto totals = [&heap]() {
    // priority_queue has no iteration; copy out the container once per check.
    auto copy = heap;
    CompensatedSum value;
    CompensatedSum error;
    while (!copy.empty()) {
      value.add(copy.top().value);
      error.add(copy.top().error);
      copy.pop();
    }
    return std::pair{value.value(), error.value()};
  };

  double value = 0.0;
  double error = 0.0;
  // Running totals, refreshed exactly every so often to shed drift.
  {
    auto [v, e] = totals();
    value = v;
    error = e;
  }
  int count = panels;
  int since_refresh = 0;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::fabs(value))) {
    if (count >= opts.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature: no convergence on [" << a << ", " << b << "] with " << count
          << " panels, error estimate " << error;
      throw ConvergenceError(msg.str(), value, error);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid);
    const Panel right = evaluate_panel(f, mid, worst.b);
    heap.push(left);
    heap.push(right);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    ++count;
    if (++since_refresh == 256) {
      auto [v, e] = totals();
      value = v;
      error = e;
      since_refresh = 0;
    }
  }
  auto [v, e] = totals();
  return QuadratureResult{v, e, count};
}

}  // namespace nlwave::quad
