#pragma once
// Decision engine for pretty good state transfer between corners: exact
// relation lattices of the spectrum, the lattice-based decision procedure,
// and independently checkable refutation certificates.
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgst/cospectral.hpp"
#include "pgst/lattice.hpp"
#include "pgst/spectra.hpp"

namespace pgst {

// Finitely supported integer coefficients over eigenvalue indices that
// refute transfer between the pair when all three conditions hold:
// (i) the coefficient-weighted eigenvalue sum is exactly zero,
// (ii) the coefficient sum is zero,
// (iii) the coefficient sum over indices with negative relative sign is odd.
struct Certificate {
  ProductGraph graph;
  CornerPair pair;
  std::map<EigenIndex, mpz_class> coeffs;
};

enum class Verdict { PGST, NoPGST, NotStronglyCospectral };

struct Decision {
  Verdict verdict = Verdict::PGST;
  std::string method;  // "lattice" | "section4_witness" | "classifier"
  std::optional<Certificate> certificate;                    // NoPGST
  std::optional<std::pair<EigenIndex, EigenIndex>> witness;  // not s.c.
};

// Integer lattice {l : sum_i l_i theta_i = 0 and sum_i l_i = 0} over the
// distinct eigenvalues theta_i (spectrum-table group order).  Saturated:
// every integer solution is an integer combination of the basis rows.
struct RelationLattice {
  std::vector<CycloReal> values;  // distinct eigenvalues, group order
  IntMat basis;                   // rows = basis vectors
};

// Literal construction straight from the distinct eigenvalues' power-basis
// coordinates at the common conductor.  Quadratic in the number of distinct
// values; meant for small products and for cross-checking decide_pgst,
// which works with the much smaller per-factor marginal system instead.
RelationLattice relation_lattice(const ProductGraph& g,
                                 long max_vertices = 20000);

// Decides transfer between a corner pair.  Strong cospectrality failure
// short-circuits with the colliding index pair.  Otherwise the saturated
// integer relation lattice is scanned with the negative-sign parity
// functional: any odd basis vector refutes transfer and is returned as a
// certificate (aggregated onto the lexicographically first index of each
// eigenvalue group); if every basis vector is even, transfer holds.
//
// The lattice is computed in factored form: coefficients live on per-factor
// eigenvalue marginals c_{i,t} rather than on full index tuples.  This is
// exact and lossless for the verdict: the kernel of the marginalization map
// is spanned by two-coordinate exchange moves, all of which have even
// parity for every corner pair, so every index-space relation has the same
// parity as its marginal section.
Decision decide_pgst(const ProductGraph& g, const CornerPair& pair,
                     long max_vertices = 20000);

// Checks the three certificate conditions with arithmetic independent of
// the lattice machinery: one batched exact cyclotomic accumulation for the
// eigenvalue sum, exact integer sums for the other two.  Condition (iii)
// sums coefficients over indices whose relative sign for the pair is
// negative; for strongly cospectral pairs this is exactly the negative
// sign-class parity.  Malformed indices raise domain errors; a well-formed
// certificate that fails a condition returns false.
bool verify_certificate(const Certificate& c);

}  // namespace pgst
