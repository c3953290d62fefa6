#pragma once
// Closed-form no-transfer certificates for two-factor products, built from
// the 2x2 blocks A=[[1,0],[-2,1]], B=[[1,-1],[-2,2]], C=[[-1,2],[1,-2]]
// arranged as [A B..B; C 0..0; ...] and embedded per family.
#include <optional>
#include <string>

#include "pgst/engine.hpp"

namespace pgst {

// Certificate families.  Shapes, congruence hypotheses, and the refuted
// coordinate (the corner pair differs only there):
//   PrimePrime3Mod4        P_{p1-1} x P_{p2-1}    p1=3(4)            coord 1
//   PrimePrime5Mod8        P_{p1-1} x P_{p2-1}    p1=5(8), p2=1(4)   coord 1
//   TwiceTwice3Mod4        P_{2p1-1} x P_{2p2-1}  p1=3(4)            coord 1
//   TwicePrime3Mod4        P_{2p1-1} x P_{p2-1}   p1=3(4), p2=1(4)   coord 1
//   TwicePrimeSecond3Mod4  P_{2p1-1} x P_{p2-1}   p2=3(4)            coord 2
//   TwicePrimeSecond5Mod8  P_{2p1-1} x P_{p2-1}   p1=1(4), p2=5(8)   coord 2
enum class WitnessKind {
  PrimePrime3Mod4,
  PrimePrime5Mod8,
  TwiceTwice3Mod4,
  TwicePrime3Mod4,
  TwicePrimeSecond3Mod4,
  TwicePrimeSecond5Mod8,
};

// Stable kebab-case names used by the CLI (e.g. "prime-prime-3mod4").
std::string witness_kind_name(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_name(const std::string& name);

// Builds the family's certificate at the given odd primes.  Violated
// primality or congruence hypotheses raise std::domain_error naming the
// failed requirement.  The output always passes verify_certificate.
Certificate build_witness(WitnessKind kind, long p1, long p2);

}  // namespace pgst
