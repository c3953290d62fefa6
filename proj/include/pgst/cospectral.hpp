#pragma once
// Strong cospectrality analysis for corner pairs: exact relative eigenvector
// signs over the differing coordinates, the grouped-multiplicity test, and
// the +1/-1 sign partition of the spectrum used by the transfer criterion.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgst/spectra.hpp"

namespace pgst {

struct CornerPair {
  std::vector<long> a, b;         // corner tuples; entries are 1 or n_i
  std::vector<bool> differ_mask;  // true where a and b differ
};

// Builds a corner pair from per-coordinate end selectors: '0' -> vertex 1,
// '1' -> vertex n_i (e.g. "10"/"00" is the pair (n_1,1) -> (1,1)).
CornerPair corner_pair(const ProductGraph& g, const std::string& mask_a,
                       const std::string& mask_b);

// Exact relative sign of the tensor eigenvector between the two corners:
// the product over differing coordinates of the per-factor far-end signs.
int relative_sign(const ProductGraph& g, const CornerPair& pair,
                  const EigenIndex& idx);

struct CospectralReport {
  bool strongly_cospectral = false;
  // Two indices with equal eigenvalue and opposite relative sign; present
  // iff not strongly cospectral (lexicographically smallest colliding pair
  // of the first offending eigenvalue group).
  std::optional<std::pair<EigenIndex, EigenIndex>> witness;
  // Common sign per distinct eigenvalue in spectrum-table group order;
  // present iff strongly cospectral. Corner supports are full, so the keys
  // are all distinct eigenvalues.
  std::vector<std::pair<CycloReal, int>> sign_map;
};

// Grouped-sign test: the pair is strongly cospectral iff the relative sign
// is constant within every exact-equality eigenvalue group (valid because
// corner amplitudes of path eigenvectors never vanish).
CospectralReport strong_cospectrality(const ProductGraph& g, const CornerPair& pair,
                                      long max_vertices = 20000);
// Same, reusing a precomputed spectrum table.
CospectralReport strong_cospectrality(const ProductGraph& g, const CornerPair& pair,
                                      const SpectrumTable& table);

// Distinct eigenvalues carrying relative sign -1. Requires a strongly
// cospectral pair; throws std::logic_error otherwise.
std::vector<CycloReal> phi_minus(const ProductGraph& g, const CornerPair& pair,
                                 long max_vertices = 20000);

}  // namespace pgst
