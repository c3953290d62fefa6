#pragma once
// Numerical continuous-time quantum walk on path products: closed-form
// per-factor propagators, corner-to-corner fidelity, grid scans with local
// golden-section refinement, and CSV trace export.
#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pgst/cospectral.hpp"
#include "pgst/spectra.hpp"

namespace pgst {

// Single-path propagator entry <b| exp(-itH) |a> summed over closed-form
// eigenpairs; |entry| <= 1 + 1e-12.  At t = 0 the identity is returned
// exactly.  Vertices are 1-based; out-of-range -> std::domain_error.
std::complex<double> path_propagator_entry(const PathFactor& f, long a, long b,
                                           double t, Hamiltonian h);

// Product propagator entry: the product of per-factor entries (the product
// walk factorizes as a tensor product of path walks).
std::complex<double> product_propagator_entry(const ProductGraph& g,
                                              const std::vector<long>& a,
                                              const std::vector<long>& b, double t);

// Transfer fidelity |U(t)_{b,a}| between the pair's corners, clamped to [0,1].
double corner_fidelity(const ProductGraph& g, const CornerPair& pair, double t);

struct FidelityTrace {
  std::vector<double> times;   // uniform grid on [0, t_max]
  std::vector<double> values;  // fidelity per sample, in [0, 1]
  double best_t = 0.0;         // smallest time attaining best_value (1e-12 tie)
  double best_value = 0.0;     // >= every sampled value
};

// Default grid density: 1000 samples per time unit (at least 2).
long default_samples(double t_max);

// Samples fidelity on [0, t_max]; the ten highest grid peaks are refined by
// golden section to 1e-9 time resolution.  samples <= 0 uses the default
// density; samples == 1 or t_max < 0 -> std::domain_error.
FidelityTrace scan_fidelity(const ProductGraph& g, const CornerPair& pair,
                            double t_max, long samples = 0);

// Earliest refined grid peak whose fidelity reaches target (0 < target < 1,
// else std::domain_error), if one exists within t_max.  Absence is only an
// observation: it is never evidence against transfer.
std::optional<double> find_time_reaching(const ProductGraph& g, const CornerPair& pair,
                                         double target, double t_max);

// CSV export: header "t,fidelity", one row per sample, 17 significant digits.
void write_trace_csv(std::ostream& out, const FidelityTrace& trace);

}  // namespace pgst
