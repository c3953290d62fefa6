#include "pgst/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pgst {
namespace {

constexpr double kTimeResolution = 1e-9;
constexpr double kTieTolerance = 1e-12;

// Golden-section maximization of f on [lo, hi] (assumed unimodal around a
// grid peak); returns the best (t, value) seen, including the endpoints.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  std::pair<double, double> best{a, f(a)};
  auto consider = [&best](double t, double v) {
    if (v > best.second || (v >= best.second - kTieTolerance && t < best.first))
      best = {t, v};
  };
  consider(b, f(b));
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  consider(c, fc);
  consider(d, fd);
  while (b - a > kTimeResolution) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

// Interior + boundary indices of grid-local maxima.
bool is_grid_peak(const std::vector<double>& v, std::size_t k) {
  const bool left_ok = k == 0 || v[k] >= v[k - 1];
  const bool right_ok = k + 1 == v.size() || v[k] >= v[k + 1];
  return left_ok && right_ok;
}

}  // namespace

std::complex<double> path_propagator_entry(const PathFactor& f, long a, long b,
                                           double t, Hamiltonian h) {
  const long n = f.n;
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::domain_error("path_propagator_entry: vertex out of range");
  if (t == 0.0) return a == b ? 1.0 : 0.0;
  const double pi = std::acos(-1.0);
  std::complex<double> sum = 0.0;
  if (h == Hamiltonian::Adjacency) {
    // Eigenpairs: theta_r = 2cos(r pi/(n+1)), v_r(x) ~ sin(r pi x/(n+1)).
    const double step = pi / static_cast<double>(n + 1);
    for (long r = 1; r <= n; ++r) {
      const double theta = 2.0 * std::cos(r * step);
      const double amp = (2.0 / (n + 1)) * std::sin(r * step * a) * std::sin(r * step * b);
      sum += amp * std::polar(1.0, -theta * t);
    }
  } else {
    // Eigenpairs: lambda_s = 2-2cos(s pi/n) = 4sin^2(s pi/2n),
    // v_s(x) ~ cos(s pi (2x-1)/(2n)); s = 0 is the constant kernel vector.
    sum = 1.0 / static_cast<double>(n);
    const double step = pi / static_cast<double>(n);
    for (long s = 1; s < n; ++s) {
      const double half = 0.5 * s * step;
      const double lambda = 4.0 * std::sin(half) * std::sin(half);
      const double amp = (2.0 / n) * std::cos(half * (2 * a - 1)) * std::cos(half * (2 * b - 1));
      sum += amp * std::polar(1.0, -lambda * t);
    }
  }
  return sum;
}

std::complex<double> product_propagator_entry(const ProductGraph& g,
                                              const std::vector<long>& a,
                                              const std::vector<long>& b, double t) {
  if (a.size() != g.factors.size() || b.size() != g.factors.size())
    throw std::domain_error("product_propagator_entry: tuple arity mismatch");
  std::complex<double> prod = 1.0;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    prod *= path_propagator_entry(g.factors[i], a[i], b[i], t, g.ham);
  return prod;
}

double corner_fidelity(const ProductGraph& g, const CornerPair& pair, double t) {
  return std::min(1.0, std::abs(product_propagator_entry(g, pair.a, pair.b, t)));
}

long default_samples(double t_max) {
  return std::max<long>(2, std::lround(1000.0 * t_max));
}

FidelityTrace scan_fidelity(const ProductGraph& g, const CornerPair& pair,
                            double t_max, long samples) {
  if (t_max < 0.0) throw std::domain_error("scan_fidelity: negative time window");
  if (samples <= 0) samples = default_samples(t_max);
  if (samples < 2) throw std::domain_error("scan_fidelity: need at least 2 samples");

  FidelityTrace trace;
  trace.times.resize(samples);
  trace.values.resize(samples);
  const double dt = t_max / static_cast<double>(samples - 1);
  for (long k = 0; k < samples; ++k) {
    const double t = k * dt;
    trace.times[k] = t;
    trace.values[k] = corner_fidelity(g, pair, t);
  }

  // Ten highest grid peaks, each refined on its neighbour bracket.
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < trace.values.size(); ++k)
    if (is_grid_peak(trace.values, k)) peaks.push_back(k);
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) {
    return trace.values[x] > trace.values[y];
  });
  if (peaks.size() > 10) peaks.resize(10);

  std::vector<std::pair<double, double>> candidates;  // (t, value)
  for (std::size_t k = 0; k < trace.values.size(); ++k)
    candidates.emplace_back(trace.times[k], trace.values[k]);
  for (std::size_t k : peaks) {
    const double lo = k == 0 ? trace.times.front() : trace.times[k - 1];
    const double hi = k + 1 == trace.times.size() ? trace.times.back() : trace.times[k + 1];
    candidates.push_back(
        golden_max([&](double t) { return corner_fidelity(g, pair, t); }, lo, hi));
  }

  trace.best_value = 0.0;
  for (const auto& [t, v] : candidates) trace.best_value = std::max(trace.best_value, v);
  trace.best_t = t_max;
  for (const auto& [t, v] : candidates)
    if (v >= trace.best_value - kTieTolerance && t < trace.best_t) trace.best_t = t;
  return trace;
}

std::optional<double> find_time_reaching(const ProductGraph& g, const CornerPair& pair,
                                         double target, double t_max) {
  if (!(target > 0.0 && target < 1.0))
    throw std::domain_error("find_time_reaching: target must lie in (0, 1)");
  if (t_max < 0.0) throw std::domain_error("find_time_reaching: negative time window");
  const long samples = default_samples(t_max);
  const double dt = t_max / static_cast<double>(samples - 1);

  std::vector<double> values(samples);
  for (long k = 0; k < samples; ++k) values[k] = corner_fidelity(g, pair, k * dt);

  // Refine every grid peak in time order and stop at the first success.
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!is_grid_peak(values, k)) continue;
    const double lo = k == 0 ? 0.0 : (k - 1) * dt;
    const double hi = k + 1 == values.size() ? t_max : (k + 1) * dt;
    const auto [t, v] =
        golden_max([&](double t) { return corner_fidelity(g, pair, t); }, lo, hi);
    if (v >= target) return t;
  }
  return std::nullopt;
}

void write_trace_csv(std::ostream& out, const FidelityTrace& trace) {
  out << "t,fidelity\n";
  char row[80];
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    std::snprintf(row, sizeof(row), "%.17g,%.17g\n", trace.times[k], trace.values[k]);
    out << row;
  }
}

}  // namespace pgst
