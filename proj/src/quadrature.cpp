#include "gammacheck/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "gammacheck/compensated.hpp"

namespace gammacheck {

namespace {

// Kronrod abscissae; odd entries are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const {
    // ties broken on position so the bisection order never depends on the heap
    if (error != other.error) return error < other.error;
    return a > other.a;
  }
};

Segment gk15(const Integrand& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);

  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    f1[i] = f(center - dx);
    f2[i] = f(center + dx);
    const double pair = f1[i] + f2[i];
    kronrod += kWgk[i] * pair;
    abs_sum += kWgk[i] * (std::fabs(f1[i]) + std::fabs(f2[i]));
    if (i % 2 == 1) gauss += kWg[i / 2] * pair;
  }

  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::fabs(fc - mean);
  for (std::size_t i = 0; i < 7; ++i) {
    asc += kWgk[i] * (std::fabs(f1[i] - mean) + std::fabs(f2[i] - mean));
  }

  const double result = kronrod * half;
  const double res_abs = abs_sum * std::fabs(half);
  const double res_asc = asc * std::fabs(half);
  double err = std::fabs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * res_abs, err);
  }
  return Segment{a, b, result, err};
}

double simpson_step(const Integrand& f, double a, double fa, double b, double fb, double whole,
                    double fm, double tol, int depth, double& error) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    error += std::fabs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, left, flm, 0.5 * tol, depth - 1, error) +
         simpson_step(f, m, fm, b, fb, right, frm, 0.5 * tol, depth - 1, error);
}

}  // namespace

QuadratureResult integrate_gk15(const Integrand& f, double a, double b, double rel_tol,
                                double abs_tol, std::size_t max_intervals) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  if (a > b) {
    out = integrate_gk15(f, b, a, rel_tol, abs_tol, max_intervals);
    out.value = -out.value;
    return out;
  }

  std::priority_queue<Segment> heap;
  heap.push(gk15(f, a, b));
  double total_error = heap.top().error;
  double total_value = heap.top().value;
  out.intervals = 1;

  auto target = [&] { return std::max(abs_tol, rel_tol * std::fabs(total_value)); };

  while (total_error > target() && out.intervals < max_intervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval exhausted at machine resolution; keep it as is
      heap.push(Segment{worst.a, worst.b, worst.value, 0.0});
      total_error -= worst.error;
      continue;
    }
    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++out.intervals;
  }

  // re-sum from scratch in position order for a reproducible final value
  std::vector<Segment> segments;
  segments.reserve(heap.size());
  while (!heap.empty()) {
    segments.push_back(heap.top());
    heap.pop();
  }
  std::sort(segments.begin(), segments.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  CompensatedSum value;
  CompensatedSum error;
  for (const auto& s : segments) {
    value += s.value;
    error += s.error;
  }
  out.value = value.value();
  out.error = error.value();
  out.converged = out.error <= std::max(abs_tol, rel_tol * std::fabs(out.value));
  return out;
}

QuadratureResult integrate_simpson(const Integrand& f, double a, double b, double abs_tol,
                                   int max_depth) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double error = 0.0;
  out.value = simpson_step(f, a, fa, b, fb, whole, fm, abs_tol, max_depth, error);
  out.error = error;
  out.converged = error <= abs_tol;
  return out;
}

}  // namespace gammacheck
