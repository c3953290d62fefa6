#include "pgst/classify.hpp"

#include <numeric>
#include <stdexcept>

namespace pgst {
namespace {

std::string factor_label(const ProductGraph& g, std::size_t i) {
  return "factor " + std::to_string(i) + " (P_" + std::to_string(g.factors[i].n) + ")";
}

bool is_power_of_two(long n) { return n >= 2 && (n & (n - 1)) == 0; }

// Certificate family hypotheses, in match-precedence order.  A family
// matches an ordered factor pair (i, j) when the classes agree and both
// primes satisfy the congruences (modulus 1 = unconstrained); the refuted
// coordinate is i, or j for the second-coordinate families.
struct FamilyHypothesis {
  WitnessKind kind;
  FactorClass first, second;
  long mod1, rem1, mod2, rem2;
  bool refutes_second;
};

const FamilyHypothesis kFamilies[] = {
    {WitnessKind::PrimePrime3Mod4, FactorClass::PrimeMinusOne,
     FactorClass::PrimeMinusOne, 4, 3, 1, 0, false},
    {WitnessKind::PrimePrime5Mod8, FactorClass::PrimeMinusOne,
     FactorClass::PrimeMinusOne, 8, 5, 4, 1, false},
    {WitnessKind::TwiceTwice3Mod4, FactorClass::TwicePrimeMinusOne,
     FactorClass::TwicePrimeMinusOne, 4, 3, 1, 0, false},
    {WitnessKind::TwicePrime3Mod4, FactorClass::TwicePrimeMinusOne,
     FactorClass::PrimeMinusOne, 4, 3, 4, 1, false},
    {WitnessKind::TwicePrimeSecond3Mod4, FactorClass::TwicePrimeMinusOne,
     FactorClass::PrimeMinusOne, 1, 0, 4, 3, true},
    {WitnessKind::TwicePrimeSecond5Mod8, FactorClass::TwicePrimeMinusOne,
     FactorClass::PrimeMinusOne, 4, 1, 8, 5, true},
};

}  // namespace

CornerClassification classify_corners(const ProductGraph& g) {
  if (g.ham != Hamiltonian::Adjacency)
    throw std::domain_error("classify_corners: adjacency walk only");
  CornerClassification out;
  const auto& fs = g.factors;
  const std::size_t k = fs.size();

  // Factor-class necessity: every shape below needs n+1 in {p, 2p, 2^e}.
  for (std::size_t i = 0; i < k; ++i) {
    if (fs[i].cls == FactorClass::Other) {
      out.reason = ClassifyReason::UnsupportedFactor;
      out.factor_indices = {i};
      out.detail = factor_label(g, i) + ": " + std::to_string(fs[i].n + 1) +
                   " is not an odd prime, twice an odd prime, or a power of two";
      return out;
    }
  }

  if (k == 1) {
    out.pgst = true;
    out.case_number = 0;
    out.single_path_product_overlap =
        (fs[0].cls == FactorClass::PrimeMinusOne && fs[0].param % 8 == 1) ||
        (fs[0].cls == FactorClass::TwicePrimeMinusOne && fs[0].param % 4 == 1);
    return out;
  }

  // Shared-divisor rule: gcd(n_i+1, n_j+1) >= 3 collides eigenvalues with
  // opposite corner signs in the coordinate whose cofactor (n+1)/gcd is odd
  // (at least one is; both odd picks the earlier coordinate).
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const long d = std::gcd(fs[i].n + 1, fs[j].n + 1);
      if (d < 3) continue;
      out.reason = ClassifyReason::SharedFactorCollision;
      out.factor_indices = {i, j};
      out.refuted_coordinate = ((fs[i].n + 1) / d) % 2 != 0 ? i : j;
      out.detail = factor_label(g, i) + " and " + factor_label(g, j) + ": gcd(" +
                   std::to_string(fs[i].n + 1) + ", " + std::to_string(fs[j].n + 1) +
                   ") = " + std::to_string(d) +
                   " breaks strong cospectrality in coordinate " +
                   std::to_string(*out.refuted_coordinate);
      return out;
    }
  }

  std::vector<std::size_t> power_idx;
  for (std::size_t i = 0; i < k; ++i)
    if (fs[i].cls == FactorClass::PowerOfTwoMinusOne) power_idx.push_back(i);

  // Two-factor products pairing the (single) power-of-two factor with a
  // prime or twice-prime factor transfer for every prime, no congruence.
  if (k == 2 && power_idx.size() == 1) {
    out.pgst = true;
    out.case_number =
        fs[1 - power_idx[0]].cls == FactorClass::PrimeMinusOne ? 1 : 2;
    return out;
  }

  // Remaining shapes need every prime factor at 1 (mod 8) and every
  // twice-prime factor at 1 (mod 4); otherwise some ordered factor pair
  // admits a certificate family (family precedence, then pair order).
  bool violated = false;
  for (const auto& f : fs) {
    violated = violated ||
               (f.cls == FactorClass::PrimeMinusOne && f.param % 8 != 1) ||
               (f.cls == FactorClass::TwicePrimeMinusOne && f.param % 4 != 1);
  }
  if (violated) {
    for (const auto& fam : kFamilies) {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          if (i == j || fs[i].cls != fam.first || fs[j].cls != fam.second) continue;
          if (fs[i].param % fam.mod1 != fam.rem1) continue;
          if (fs[j].param % fam.mod2 != fam.rem2) continue;
          out.reason = ClassifyReason::CongruenceObstruction;
          out.witness_kind = fam.kind;
          out.witness_primes = {fs[i].param, fs[j].param};
          out.factor_indices = {i, j};
          out.refuted_coordinate = fam.refutes_second ? j : i;
          out.detail = factor_label(g, i) + " and " + factor_label(g, j) +
                       " admit the " + witness_kind_name(fam.kind) +
                       " certificate at primes (" + std::to_string(fs[i].param) +
                       ", " + std::to_string(fs[j].param) + ")";
          return out;
        }
      }
    }
    throw std::logic_error("classify_corners: congruence offender without a family");
  }

  out.pgst = true;
  out.case_number = power_idx.empty() ? 3 : 4;
  return out;
}

LaplacianVerdict laplacian_corner_verdict(const ProductGraph& g) {
  if (g.ham != Hamiltonian::Laplacian)
    throw std::domain_error("laplacian_corner_verdict: laplacian walk only");
  LaplacianVerdict out;
  const auto& fs = g.factors;

  if (fs.size() == 1) {
    out.pgst = is_power_of_two(fs[0].n);
    if (!out.pgst) {
      out.non_power_factor = 0;
      out.detail = factor_label(g, 0) + ": vertex count is not a power of two";
    }
    return out;
  }

  std::vector<std::size_t> powers;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (is_power_of_two(fs[i].n)) powers.push_back(i);

  if (powers.size() < 2) {
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (!is_power_of_two(fs[i].n)) {
        out.non_power_factor = i;
        out.detail = factor_label(g, i) +
                     ": vertex count is not a power of two, so its own ends "
                     "already lack transfer";
        return out;
      }
    }
  }

  // Two power-of-two factors: the corner pair of their subproduct differing
  // in the smaller factor's coordinate (earlier on ties) collides a kernel
  // eigenvalue with a signed one, so it is not strongly cospectral.
  const std::size_t i1 = powers[0], i2 = powers[1];
  LaplacianRefutation ref;
  ref.factor_indices = {i1, i2};
  ref.subproduct = make_product({fs[i1].n, fs[i2].n}, Hamiltonian::Laplacian);
  const bool second_smaller = fs[i2].n < fs[i1].n;
  ref.pair = corner_pair(ref.subproduct, "00", second_smaller ? "01" : "10");
  const CospectralReport rep = strong_cospectrality(ref.subproduct, ref.pair);
  if (rep.strongly_cospectral)
    throw std::logic_error("laplacian_corner_verdict: expected a sign collision");
  ref.collision = *rep.witness;
  out.detail = "corners differing in " + factor_label(g, second_smaller ? i2 : i1) +
               " are not strongly cospectral on the P_" +
               std::to_string(fs[i1].n) + " x P_" + std::to_string(fs[i2].n) +
               " subproduct";
  out.refutation = std::move(ref);
  return out;
}

}  // namespace pgst
