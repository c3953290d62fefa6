#include "pgst/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pgst/errors.hpp"

namespace pgst {
namespace {

bool is_power_of_two(long s) { return s > 0 && (s & (s - 1)) == 0; }

long log2_exact(long s) {
  long e = 0;
  while (s > 1) {
    s >>= 1;
    ++e;
  }
  return e;
}

void check_index_range(const PathFactor& f, long r, Hamiltonian h) {
  const long lo = h == Hamiltonian::Adjacency ? 1 : 0;
  const long hi = h == Hamiltonian::Adjacency ? f.n : f.n - 1;
  if (r < lo || r > hi)
    throw std::domain_error("eigenvalue index out of range for the path factor");
}

double path_eigenvalue_float(const PathFactor& f, long r, Hamiltonian h) {
  if (h == Hamiltonian::Adjacency)
    return 2.0 * std::cos(M_PI * double(r) / double(f.n + 1));
  return r == 0 ? 0.0 : 2.0 + 2.0 * std::cos(M_PI * double(r) / double(f.n));
}

}  // namespace

PathFactor make_path_factor(long n) {
  if (n < 2) throw std::domain_error("path factor needs at least 2 vertices");
  const long s = n + 1;
  PathFactor f;
  f.n = n;
  if (is_power_of_two(s)) {
    f.cls = FactorClass::PowerOfTwoMinusOne;
    f.param = log2_exact(s);
  } else if (is_prime(s)) {
    f.cls = FactorClass::PrimeMinusOne;
    f.param = s;
  } else if (s % 2 == 0 && is_prime(s / 2)) {
    f.cls = FactorClass::TwicePrimeMinusOne;
    f.param = s / 2;
  } else {
    f.cls = FactorClass::Other;
    f.param = 0;
  }
  return f;
}

long reconstruct_n(const PathFactor& f) {
  switch (f.cls) {
    case FactorClass::PrimeMinusOne:
      return f.param - 1;
    case FactorClass::TwicePrimeMinusOne:
      return 2 * f.param - 1;
    case FactorClass::PowerOfTwoMinusOne:
      return (1L << f.param) - 1;
    case FactorClass::Other:
      return f.n;
  }
  return f.n;
}

ProductGraph make_product(const std::vector<long>& sizes, Hamiltonian ham) {
  if (sizes.empty()) throw std::domain_error("product needs at least one factor");
  ProductGraph g;
  g.ham = ham;
  g.factors.reserve(sizes.size());
  for (long n : sizes) g.factors.push_back(make_path_factor(n));
  return g;
}

long vertex_count(const ProductGraph& g) {
  __int128 v = 1;
  for (const auto& f : g.factors) {
    v *= f.n;
    if (v > std::numeric_limits<long>::max()) return std::numeric_limits<long>::max();
  }
  return static_cast<long>(v);
}

long common_conductor(const ProductGraph& g) {
  long m = 1;
  for (const auto& f : g.factors)
    m = std::lcm(m, g.ham == Hamiltonian::Adjacency ? f.n + 1 : 2 * f.n);
  return m;
}

CycloReal path_eigenvalue(const PathFactor& f, long r, Hamiltonian h) {
  check_index_range(f, r, h);
  if (h == Hamiltonian::Adjacency) return CycloReal::make_cos(r, f.n + 1);
  if (r == 0) return CycloReal::rational(0);
  return add(CycloReal::rational(2), CycloReal::make_cos(r, f.n));
}

std::pair<double, double> path_eigenvector_end_values(const PathFactor& f, long r,
                                                      Hamiltonian h) {
  check_index_range(f, r, h);
  const double n = static_cast<double>(f.n);
  double first;
  if (h == Hamiltonian::Adjacency) {
    first = std::sqrt(2.0 / (n + 1)) * std::sin(M_PI * double(r) / (n + 1));
  } else if (r == 0) {
    first = 1.0 / std::sqrt(n);
  } else {
    // standard eigenvector index for the eigenvalue 2+2cos(r*pi/n) is n-r
    const double s = double(f.n - r);
    first = std::sqrt(2.0 / n) * std::cos(M_PI * s / (2.0 * n));
  }
  return {first, first * far_end_sign(f, r, h)};
}

int far_end_sign(const PathFactor& f, long r, Hamiltonian h) {
  check_index_range(f, r, h);
  if (h == Hamiltonian::Adjacency) return r % 2 == 1 ? +1 : -1;
  if (r == 0) return +1;
  return (f.n + r) % 2 == 0 ? +1 : -1;
}

void append_eigenvalue_terms(const PathFactor& f, long r, Hamiltonian h, long m,
                             const mpq_class& scale,
                             std::vector<std::pair<long, mpq_class>>& terms,
                             mpq_class& constant) {
  check_index_range(f, r, h);
  if (h == Hamiltonian::Adjacency) {
    // 2cos(r*pi/(n+1)) = z^(r*l) - z^((n+1-r)*l) with l = m/(n+1)
    const long s = f.n + 1;
    const long l = m / s;
    terms.emplace_back(r * l, scale);
    terms.emplace_back((s - r) * l, -scale);
  } else if (r != 0) {
    const long l = m / f.n;
    constant += 2 * scale;
    terms.emplace_back(r * l, scale);
    terms.emplace_back((f.n - r) * l, -scale);
  }
}

CycloReal product_eigenvalue(const ProductGraph& g, const EigenIndex& idx) {
  if (idx.size() != g.factors.size())
    throw std::domain_error("eigenvalue index arity mismatch");
  const long m = common_conductor(g);
  std::vector<std::pair<long, mpq_class>> terms;
  mpq_class constant = 0;
  for (size_t i = 0; i < g.factors.size(); ++i) {
    check_index_range(g.factors[i], idx[i], g.ham);
    append_eigenvalue_terms(g.factors[i], idx[i], g.ham, m, 1, terms, constant);
  }
  if (constant != 0) terms.emplace_back(0, constant);
  return CycloReal::from_terms(m, terms);
}

SpectrumTable spectrum_table(const ProductGraph& g, long max_vertices) {
  const long v = vertex_count(g);
  if (v > max_vertices)
    throw ResourceLimitError("spectrum_table: vertex count " + std::to_string(v) +
                             " exceeds cap " + std::to_string(max_vertices));
  const size_t k = g.factors.size();
  const long m = common_conductor(g);
  const long lo = g.ham == Hamiltonian::Adjacency ? 1 : 0;

  // All index tuples in lexicographic order with their float eigenvalues.
  std::vector<EigenIndex> idxs;
  idxs.reserve(v);
  std::vector<double> fval;
  fval.reserve(v);
  std::vector<std::vector<double>> per_factor(k);
  for (size_t i = 0; i < k; ++i)
    for (long r = lo; r <= g.factors[i].n - 1 + lo; ++r)
      per_factor[i].push_back(path_eigenvalue_float(g.factors[i], r, g.ham));
  EigenIndex cur(k, lo);
  for (long id = 0; id < v; ++id) {
    idxs.push_back(cur);
    double s = 0;
    for (size_t i = 0; i < k; ++i) s += per_factor[i][cur[i] - lo];
    fval.push_back(s);
    for (size_t i = k; i-- > 0;) {
      if (++cur[i] <= g.factors[i].n - 1 + lo) break;
      cur[i] = lo;
    }
  }

  auto exact_value = [&](long id) {
    std::vector<std::pair<long, mpq_class>> terms;
    mpq_class constant = 0;
    for (size_t i = 0; i < k; ++i)
      append_eigenvalue_terms(g.factors[i], idxs[id][i], g.ham, m, 1, terms,
                              constant);
    if (constant != 0) terms.emplace_back(0, constant);
    return CycloReal::from_terms(m, terms);
  };

  std::vector<long> order(v);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](long a, long b) {
    return fval[a] != fval[b] ? fval[a] < fval[b] : a < b;
  });

  // Gap-cluster at 1e-9, then split each cluster by exact equality. Exactly
  // equal values always land in one cluster (their float images are far
  // closer than the gap), so the refinement only ever splits clusters.
  struct Bucket {
    CycloReal value;
    std::vector<long> ids;
  };
  std::vector<Bucket> buckets;
  size_t a = 0;
  while (a < order.size()) {
    size_t b = a + 1;
    while (b < order.size() && fval[order[b]] - fval[order[b - 1]] <= 1e-9) ++b;
    if (b - a == 1) {
      buckets.push_back({exact_value(order[a]), {order[a]}});
    } else {
      const size_t first_local = buckets.size();
      for (size_t i = a; i < b; ++i) {
        const long id = order[i];
        CycloReal val = exact_value(id);
        bool placed = false;
        for (size_t j = first_local; j < buckets.size(); ++j)
          if (buckets[j].value == val) {
            buckets[j].ids.push_back(id);
            placed = true;
            break;
          }
        if (!placed) buckets.push_back({std::move(val), {id}});
      }
    }
    a = b;
  }

  for (auto& bucket : buckets) std::sort(bucket.ids.begin(), bucket.ids.end());
  std::sort(buckets.begin(), buckets.end(),
            [](const Bucket& x, const Bucket& y) { return x.ids[0] < y.ids[0]; });

  SpectrumTable table;
  table.groups.reserve(buckets.size());
  for (auto& bucket : buckets) {
    SpectrumGroup grp{std::move(bucket.value), {}};
    grp.members.reserve(bucket.ids.size());
    for (long id : bucket.ids) grp.members.push_back(idxs[id]);
    table.groups.push_back(std::move(grp));
  }
  return table;
}

}  // namespace pgst
