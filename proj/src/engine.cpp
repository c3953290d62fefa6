#include "pgst/engine.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace pgst {

namespace {

// Canonical coefficient vector of one factor eigenvalue at conductor m.
RatVec eigenvalue_coordinates(const PathFactor& f, long r, Hamiltonian h,
                              long m) {
  std::vector<std::pair<long, mpq_class>> terms;
  mpq_class constant = 0;
  append_eigenvalue_terms(f, r, h, m, 1, terms, constant);
  if (constant != 0) terms.emplace_back(0, constant);
  return CycloReal::from_terms(m, terms).coeffs();
}

int coefficient_parity(const mpz_class& v) {
  return mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
}

}  // namespace

RelationLattice relation_lattice(const ProductGraph& g, long max_vertices) {
  const SpectrumTable table = spectrum_table(g, max_vertices);
  RelationLattice out;
  out.values.reserve(table.groups.size());
  for (const auto& grp : table.groups) out.values.push_back(grp.value);
  const std::size_t cols = out.values.size();
  if (cols == 0) return out;

  const std::size_t deg = out.values[0].coeffs().size();
  RatMat constraints;
  for (std::size_t j = 0; j < deg; ++j) {
    RatVec row(cols);
    bool nonzero = false;
    for (std::size_t c = 0; c < cols; ++c) {
      row[c] = out.values[c].coeffs()[j];
      nonzero = nonzero || row[c] != 0;
    }
    if (nonzero) constraints.push_back(std::move(row));
  }
  constraints.emplace_back(cols, mpq_class(1));
  out.basis = integer_kernel(constraints, cols);
  return out;
}

Decision decide_pgst(const ProductGraph& g, const CornerPair& pair,
                     long max_vertices) {
  const SpectrumTable table = spectrum_table(g, max_vertices);
  const CospectralReport rep = strong_cospectrality(g, pair, table);
  Decision d;
  d.method = "lattice";
  if (!rep.strongly_cospectral) {
    d.verdict = Verdict::NotStronglyCospectral;
    d.witness = rep.witness;
    return d;
  }

  // Marginal relation system: one integer variable c_{i,t} per factor i and
  // eigenvalue index t.  Constraints: every power-basis coordinate of
  // sum_{i,t} c_{i,t} * lambda_i(t) vanishes, plus one all-ones row per
  // factor (zero coefficient sum, factor-wise).
  const std::size_t k = g.factors.size();
  const long m = common_conductor(g);
  const long lo = g.ham == Hamiltonian::Adjacency ? 1 : 0;
  std::vector<std::size_t> offset(k);
  std::size_t ncols = 0;
  for (std::size_t i = 0; i < k; ++i) {
    offset[i] = ncols;
    ncols += static_cast<std::size_t>(g.factors[i].n);
  }

  std::vector<RatVec> colcoords(ncols);
  for (std::size_t i = 0; i < k; ++i)
    for (long t = 0; t < g.factors[i].n; ++t)
      colcoords[offset[i] + static_cast<std::size_t>(t)] =
          eigenvalue_coordinates(g.factors[i], t + lo, g.ham, m);

  const std::size_t deg = colcoords[0].size();
  RatMat constraints;
  for (std::size_t j = 0; j < deg; ++j) {
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols && !nonzero; ++c)
      nonzero = colcoords[c][j] != 0;
    if (!nonzero) continue;
    RatVec row(ncols);
    for (std::size_t c = 0; c < ncols; ++c) row[c] = colcoords[c][j];
    constraints.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    RatVec row(ncols, mpq_class(0));
    for (long t = 0; t < g.factors[i].n; ++t)
      row[offset[i] + static_cast<std::size_t>(t)] = 1;
    constraints.push_back(std::move(row));
  }

  RatMat reduced;
  for (std::size_t i : independent_rows(constraints))
    reduced.push_back(std::move(constraints[i]));
  const IntMat kernel = integer_kernel(reduced, ncols);

  // Negative-sign parity of the marginal vector: the section placing
  // c_{i,t} on the all-first-indices tuple with slot i set to t lands in
  // the negative class exactly when coordinate i differs and t has
  // negative far-end sign (first indices all carry sign +1).
  for (const IntVec& c : kernel) {
    int parity = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!pair.differ_mask[i]) continue;
      for (long t = 0; t < g.factors[i].n; ++t)
        if (far_end_sign(g.factors[i], t + lo, g.ham) < 0)
          parity ^= coefficient_parity(c[offset[i] + static_cast<std::size_t>(t)]);
    }
    if (parity == 0) continue;

    // Odd relation found: expand the marginal vector to index support and
    // aggregate onto the lexicographically first index of each group.
    std::map<EigenIndex, const EigenIndex*> first_of;
    for (const auto& grp : table.groups)
      for (const auto& mem : grp.members) first_of.emplace(mem, &grp.members.front());
    Certificate cert;
    cert.graph = g;
    cert.pair = pair;
    const EigenIndex base(k, lo);
    for (std::size_t i = 0; i < k; ++i)
      for (long t = 0; t < g.factors[i].n; ++t) {
        const mpz_class& q = c[offset[i] + static_cast<std::size_t>(t)];
        if (q == 0) continue;
        EigenIndex v = base;
        v[i] = t + lo;
        cert.coeffs[*first_of.at(v)] += q;
      }
    for (auto it = cert.coeffs.begin(); it != cert.coeffs.end();) {
      if (it->second == 0)
        it = cert.coeffs.erase(it);
      else
        ++it;
    }

    d.verdict = Verdict::NoPGST;
    d.certificate = std::move(cert);
    return d;
  }

  d.verdict = Verdict::PGST;
  return d;
}

bool verify_certificate(const Certificate& c) {
  const ProductGraph& g = c.graph;
  const std::size_t k = g.factors.size();
  const long m = common_conductor(g);

  mpz_class coefficient_sum = 0;
  std::vector<std::pair<long, mpq_class>> terms;
  mpq_class constant = 0;
  for (const auto& [idx, q] : c.coeffs) {
    if (idx.size() != k)
      throw std::domain_error("certificate index arity mismatch");
    coefficient_sum += q;
    const mpq_class scale(q);
    for (std::size_t i = 0; i < k; ++i)
      append_eigenvalue_terms(g.factors[i], idx[i], g.ham, m, scale, terms,
                              constant);
  }
  if (constant != 0) terms.emplace_back(0, constant);
  if (!CycloReal::from_terms(m, terms).is_zero()) return false;
  if (coefficient_sum != 0) return false;

  int parity = 0;
  for (const auto& [idx, q] : c.coeffs)
    if (relative_sign(g, c.pair, idx) < 0) parity ^= coefficient_parity(q);
  return parity == 1;
}

}  // namespace pgst
