#pragma once
// Closed-form spectral data for paths and cartesian products of paths:
// factor classification by n+1 (prime / twice a prime / power of two),
// exact eigenvalues, eigenvector values at the extremal vertices, and the
// exact-equality spectrum table that drives all multiplicity analysis.
#include <utility>
#include <vector>

#include "pgst/cyclotomic.hpp"

namespace pgst {

enum class Hamiltonian { Adjacency, Laplacian };

enum class FactorClass {
  PrimeMinusOne,       // n+1 = p, odd prime
  TwicePrimeMinusOne,  // n+1 = 2p, odd prime p
  PowerOfTwoMinusOne,  // n+1 = 2^e
  Other,
};

struct PathFactor {
  long n = 2;  // vertex count >= 2
  FactorClass cls = FactorClass::Other;
  long param = 0;  // p for (Twice)PrimeMinusOne, e for PowerOfTwoMinusOne

  bool operator==(const PathFactor&) const = default;
};

// Classifies n by n+1; n+1 = 4 is PowerOfTwoMinusOne(2), not twice a prime.
PathFactor make_path_factor(long n);
// Rebuilds n from the class parameters (round-trip check support).
long reconstruct_n(const PathFactor& f);

struct ProductGraph {
  std::vector<PathFactor> factors;
  Hamiltonian ham = Hamiltonian::Adjacency;
};

ProductGraph make_product(const std::vector<long>& sizes, Hamiltonian ham);
long vertex_count(const ProductGraph& g);
// Common conductor all product eigenvalues are expressed at:
// lcm(n_i + 1) for the adjacency walk, lcm(2 n_i) for the Laplacian walk.
long common_conductor(const ProductGraph& g);

// Eigenvalue index tuple; adjacency components run 1..n_i, Laplacian 0..n_i-1
// (0 denotes the Laplacian kernel eigenvalue).
using EigenIndex = std::vector<long>;

// Exact single-path eigenvalue: 2cos(r*pi/(n+1)) (adjacency), or 0 / 2+2cos(r*pi/n)
// (Laplacian, r = 0 / r >= 1).
CycloReal path_eigenvalue(const PathFactor& f, long r, Hamiltonian h);

// Unit-eigenvector components at vertices 1 and n for the indexed eigenvalue.
std::pair<double, double> path_eigenvector_end_values(const PathFactor& f, long r,
                                                      Hamiltonian h);

// Exact relative sign of the eigenvector at the far end: (-1)^(r+1) for the
// adjacency walk; for the Laplacian walk +1 at r = 0 and (-1)^(n+r) otherwise
// (the eigenvalue 2+2cos(r*pi/n) has standard eigenvector index n-r).
int far_end_sign(const PathFactor& f, long r, Hamiltonian h);

// Exact product eigenvalue at the common conductor.
CycloReal product_eigenvalue(const ProductGraph& g, const EigenIndex& idx);

// Appends the sparse power-basis monomials (at conductor m) of the indexed
// factor eigenvalue, scaled; rational parts accumulate into `constant`.
// Batching many eigenvalues into one CycloReal::from_terms call keeps exact
// linear-combination evaluation linear in the support size.
void append_eigenvalue_terms(const PathFactor& f, long r, Hamiltonian h, long m,
                             const mpq_class& scale,
                             std::vector<std::pair<long, mpq_class>>& terms,
                             mpq_class& constant);

struct SpectrumGroup {
  CycloReal value;
  std::vector<EigenIndex> members;  // lexicographically sorted
};

struct SpectrumTable {
  std::vector<SpectrumGroup> groups;  // ordered by lex-smallest member
};

// Partitions all eigenvalue indices into exact-equality groups. Candidate
// groups are found by sorting float eigenvalues and clustering at gap 1e-9;
// every cluster is then split by exact zero tests, so the result is exact.
// Throws ResourceLimitError when vertex count exceeds max_vertices.
SpectrumTable spectrum_table(const ProductGraph& g, long max_vertices = 20000);

}  // namespace pgst
