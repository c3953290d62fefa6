#pragma once
// Closed-form corner-transfer classification: the adjacency-walk rule for
// when every pair of corners of a path product admits pretty good transfer,
// and the Laplacian-walk verdict (single power-of-two paths only).
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgst/cospectral.hpp"
#include "pgst/spectra.hpp"
#include "pgst/witness.hpp"

namespace pgst {

enum class ClassifyReason {
  // Some n_i + 1 is not an odd prime, twice an odd prime, or a power of two.
  UnsupportedFactor,
  // gcd(n_i+1, n_j+1) >= 3: an eigenvalue collision carries opposite corner
  // signs in the coordinate whose cofactor (n+1)/gcd is odd, so that pair of
  // corners is not even strongly cospectral.
  SharedFactorCollision,
  // A congruence certificate family applies to a factor pair, so the pair of
  // corners differing in its refuted coordinate has no pretty good transfer.
  CongruenceObstruction,
};

struct CornerClassification {
  bool pgst = false;
  // Yes branch: 0 = single path (n+1 in {p, 2p, 2^e}); 1 = one power-of-two
  // factor with one prime factor; 2 = one power-of-two factor with one
  // twice-prime factor; 3 = primes 1 (mod 8) and twice-primes 1 (mod 4)
  // only; 4 = case 3 shapes plus a single power-of-two factor.
  int case_number = -1;
  // Single-path inputs that also fit the degenerate one-factor product
  // family (p = 1 (mod 8) or twice-prime q = 1 (mod 4)) are flagged.
  bool single_path_product_overlap = false;

  // No branch.
  std::optional<ClassifyReason> reason;
  std::vector<std::size_t> factor_indices;  // offending factor(s), 0-based
  std::optional<WitnessKind> witness_kind;  // CongruenceObstruction only
  std::optional<std::pair<long, long>> witness_primes;
  // Coordinate such that corners differing exactly there provably lack
  // transfer; present for the two pairwise reasons.
  std::optional<std::size_t> refuted_coordinate;
  std::string detail;
};

// Decides whether all corners of the adjacency-walk product are pairwise
// pretty good transfer partners; throws std::domain_error on Laplacian input.
CornerClassification classify_corners(const ProductGraph& g);

struct LaplacianRefutation {
  // Indices of the two power-of-two-sized factors the refutation uses.
  std::array<std::size_t, 2> factor_indices;
  ProductGraph subproduct;  // just those two factors, Laplacian walk
  // Corner pair of the subproduct differing in the smaller factor's
  // coordinate (earlier on ties); it is not strongly cospectral.
  CornerPair pair;
  // Equal-eigenvalue index pair with opposite relative signs.
  std::pair<EigenIndex, EigenIndex> collision;
};

struct LaplacianVerdict {
  bool pgst = false;
  std::string detail;
  // Single-path inputs: pgst iff the vertex count is a power of two.
  // Multi-factor inputs are always refuted, either by a factor whose size is
  // not a power of two (necessity) ...
  std::optional<std::size_t> non_power_factor;
  // ... or, when two power-of-two factors exist, by a strong-cospectrality
  // failure on their subproduct.
  std::optional<LaplacianRefutation> refutation;
};

// Laplacian-walk corner verdict; throws std::domain_error on adjacency input.
LaplacianVerdict laplacian_corner_verdict(const ProductGraph& g);

}  // namespace pgst
