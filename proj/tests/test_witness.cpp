// Closed-form certificate families: exact layouts on small instances,
// acceptance by the certificate checker, alternating row/column sums, and
// the sign-partition parity closed forms across applicable primes.
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pgst/cospectral.hpp"
#include "pgst/engine.hpp"
#include "pgst/witness.hpp"

namespace {

using pgst::Certificate;
using pgst::WitnessKind;

const std::vector<long> kOddPrimes{3, 5, 7, 11, 13, 17, 19, 23};

std::vector<long> primes_where(long mod, long residue) {
  std::vector<long> out;
  for (long p : kOddPrimes)
    if (p % mod == residue) out.push_back(p);
  return out;
}

// Sum of coefficients over indices whose relative corner sign is -1; the
// no-transfer condition needs this to be odd, and each family has an exact
// closed form for it.
long signed_sum(const Certificate& cert) {
  long sum = 0;
  for (const auto& [idx, coeff] : cert.coeffs)
    if (pgst::relative_sign(cert.graph, cert.pair, idx) < 0) sum += coeff.get_si();
  return sum;
}

long total_sum(const Certificate& cert) {
  long sum = 0;
  for (const auto& [idx, coeff] : cert.coeffs) sum += coeff.get_si();
  return sum;
}

long coeff_at(const Certificate& cert, long r, long s) {
  auto it = cert.coeffs.find({r, s});
  return it == cert.coeffs.end() ? 0 : it->second.get_si();
}

}  // namespace

TEST_CASE("witness kind names round-trip") {
  for (WitnessKind k :
       {WitnessKind::PrimePrime3Mod4, WitnessKind::PrimePrime5Mod8,
        WitnessKind::TwiceTwice3Mod4, WitnessKind::TwicePrime3Mod4,
        WitnessKind::TwicePrimeSecond3Mod4, WitnessKind::TwicePrimeSecond5Mod8}) {
    auto back = pgst::witness_kind_from_name(pgst::witness_kind_name(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK(!pgst::witness_kind_from_name("no-such-kind").has_value());
}

TEST_CASE("prime-prime-3mod4 at (3,5) reproduces the 2x4 block layout") {
  const Certificate cert = build_witness(WitnessKind::PrimePrime3Mod4, 3, 5);
  CHECK(cert.graph.factors.size() == 2);
  CHECK(cert.graph.factors[0].n == 2);
  CHECK(cert.graph.factors[1].n == 4);
  CHECK(cert.pair.a == std::vector<long>{1, 1});
  CHECK(cert.pair.b == std::vector<long>{2, 1});

  const long expected[2][4] = {{1, 0, 1, -1}, {-2, 1, -2, 2}};
  long nonzero = 0;
  for (long r = 1; r <= 2; ++r)
    for (long s = 1; s <= 4; ++s) {
      CHECK(coeff_at(cert, r, s) == expected[r - 1][s - 1]);
      if (expected[r - 1][s - 1] != 0) ++nonzero;
    }
  CHECK(static_cast<long>(cert.coeffs.size()) == nonzero);

  // Alternating row and column sums of the block layout.
  for (long r = 1; r <= 2; ++r) {
    long row = 0;
    for (long s = 1; s <= 4; ++s) row += coeff_at(cert, r, s);
    CHECK(row == (r % 2 == 1 ? 1 : -1));
  }
  for (long s = 1; s <= 4; ++s) {
    long col = 0;
    for (long r = 1; r <= 2; ++r) col += coeff_at(cert, r, s);
    CHECK(col == (s % 2 == 1 ? -1 : 1));
  }

  CHECK(signed_sum(cert) == -1);  // -(p1-1)/2
  CHECK(pgst::verify_certificate(cert));
}

TEST_CASE("prime-prime-5mod8 at (5,5) is the single-block quadrant layout") {
  const Certificate cert = build_witness(WitnessKind::PrimePrime5Mod8, 5, 5);
  CHECK(cert.graph.factors[0].n == 4);
  CHECK(cert.graph.factors[1].n == 4);
  CHECK(cert.coeffs ==
        std::map<pgst::EigenIndex, mpz_class>{
            {{1, 1}, 1}, {{2, 1}, -2}, {{2, 2}, 1}});
  CHECK(signed_sum(cert) == -1);  // -(p1-1)/4
  // The corner pair here is not strongly cospectral, yet the relation still
  // verifies: the checker only needs per-index signs.
  CHECK(pgst::verify_certificate(cert));
  CHECK(pgst::decide_pgst(cert.graph, cert.pair).verdict ==
        pgst::Verdict::NotStronglyCospectral);
}

TEST_CASE("twice-twice-3mod4 keeps the bordered corner entry") {
  // (3,3): support {(2,2):1, (3,2):-2, (3,3):1}; the (p1,p2) corner entry is
  // required for the coefficient sum to vanish.
  const Certificate cert = build_witness(WitnessKind::TwiceTwice3Mod4, 3, 3);
  CHECK(cert.graph.factors[0].n == 5);
  CHECK(cert.graph.factors[1].n == 5);
  CHECK(cert.coeffs ==
        std::map<pgst::EigenIndex, mpz_class>{
            {{2, 2}, 1}, {{3, 2}, -2}, {{3, 3}, 1}});
  CHECK(total_sum(cert) == 0);
  CHECK(pgst::verify_certificate(cert));

  const Certificate wide = build_witness(WitnessKind::TwiceTwice3Mod4, 3, 7);
  CHECK(coeff_at(wide, 3, 7) == 2);
  CHECK(total_sum(wide) == 0);
  CHECK(pgst::verify_certificate(wide));
}

TEST_CASE("support index patterns match each family's embedding") {
  const Certificate tt = build_witness(WitnessKind::TwiceTwice3Mod4, 7, 5);
  for (const auto& [idx, coeff] : tt.coeffs) {
    CHECK((idx[0] % 2 == 0 || idx[0] == 7));
    CHECK(idx[1] % 2 == 0);  // p2 = 1 (mod 4): no bordered column
    CHECK(idx[0] <= 13);
    CHECK(idx[1] <= 9);
  }
  const Certificate tp = build_witness(WitnessKind::TwicePrime3Mod4, 7, 5);
  for (const auto& [idx, coeff] : tp.coeffs) {
    CHECK((idx[0] % 2 == 0 || idx[0] == 7));
    CHECK(idx[1] <= 2);  // s <= (p2-1)/2
  }
  const Certificate ts = build_witness(WitnessKind::TwicePrimeSecond3Mod4, 5, 7);
  for (const auto& [idx, coeff] : ts.coeffs) {
    CHECK(idx[0] % 2 == 0);  // every embedded row index is even
    CHECK(idx[0] <= 8);
    CHECK(idx[1] <= 6);
  }
  const Certificate t5 = build_witness(WitnessKind::TwicePrimeSecond5Mod8, 5, 13);
  for (const auto& [idx, coeff] : t5.coeffs) {
    CHECK(idx[0] % 2 == 0);
    CHECK(idx[0] <= 4);  // r <= p1-1
    CHECK(idx[1] <= 6);  // s <= (p2-1)/2
  }
}

TEST_CASE("sign-partition parity sums match the closed forms") {
  auto sweep = [](WitnessKind kind, const std::vector<long>& p1s,
                  const std::vector<long>& p2s, auto expected) {
    for (long p1 : p1s)
      for (long p2 : p2s) {
        const Certificate cert = build_witness(kind, p1, p2);
        CAPTURE(p1);
        CAPTURE(p2);
        CHECK(total_sum(cert) == 0);
        CHECK(signed_sum(cert) == expected(p1, p2));
      }
  };
  sweep(WitnessKind::PrimePrime3Mod4, primes_where(4, 3), kOddPrimes,
        [](long p1, long) { return -(p1 - 1) / 2; });
  sweep(WitnessKind::PrimePrime5Mod8, primes_where(8, 5), primes_where(4, 1),
        [](long p1, long) { return -(p1 - 1) / 4; });
  sweep(WitnessKind::TwiceTwice3Mod4, primes_where(4, 3), kOddPrimes,
        [](long, long) { return 1; });
  sweep(WitnessKind::TwicePrime3Mod4, primes_where(4, 3), primes_where(4, 1),
        [](long, long) { return 1; });
  sweep(WitnessKind::TwicePrimeSecond3Mod4, kOddPrimes, primes_where(4, 3),
        [](long, long p2) { return (p2 - 1) / 2; });
  sweep(WitnessKind::TwicePrimeSecond5Mod8, primes_where(4, 1), primes_where(8, 5),
        [](long, long p2) { return (p2 - 1) / 4; });
}

TEST_CASE("built certificates pass exact verification") {
  const std::vector<long> small{3, 5, 7, 11, 13};
  auto sweep = [&](WitnessKind kind, long m1, long r1, long m2, long r2) {
    for (long p1 : small)
      for (long p2 : small) {
        if (p1 % m1 != r1 || p2 % m2 != r2) continue;
        CAPTURE(p1);
        CAPTURE(p2);
        CHECK(pgst::verify_certificate(build_witness(kind, p1, p2)));
      }
  };
  sweep(WitnessKind::PrimePrime3Mod4, 4, 3, 1, 0);
  sweep(WitnessKind::PrimePrime5Mod8, 8, 5, 4, 1);
  sweep(WitnessKind::TwiceTwice3Mod4, 4, 3, 1, 0);
  sweep(WitnessKind::TwicePrime3Mod4, 4, 3, 4, 1);
  sweep(WitnessKind::TwicePrimeSecond3Mod4, 1, 0, 4, 3);
  sweep(WitnessKind::TwicePrimeSecond5Mod8, 4, 1, 8, 5);
}

TEST_CASE("witness certificates agree with the decision engine") {
  const Certificate a = build_witness(WitnessKind::PrimePrime3Mod4, 7, 5);
  CHECK(pgst::decide_pgst(a.graph, a.pair).verdict == pgst::Verdict::NoPGST);
  const Certificate b = build_witness(WitnessKind::TwicePrimeSecond3Mod4, 3, 7);
  CHECK(pgst::decide_pgst(b.graph, b.pair).verdict != pgst::Verdict::PGST);
}

TEST_CASE("hypothesis violations are reported as domain errors") {
  using pgst::build_witness;
  CHECK_THROWS_AS(build_witness(WitnessKind::PrimePrime3Mod4, 5, 7), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::PrimePrime3Mod4, 9, 5), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::PrimePrime3Mod4, 2, 5), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::PrimePrime5Mod8, 17, 5), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::PrimePrime5Mod8, 5, 7), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::TwiceTwice3Mod4, 5, 5), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::TwicePrime3Mod4, 7, 7), std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::TwicePrimeSecond3Mod4, 5, 5),
                  std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::TwicePrimeSecond5Mod8, 7, 5),
                  std::domain_error);
  CHECK_THROWS_AS(build_witness(WitnessKind::TwicePrimeSecond5Mod8, 5, 17),
                  std::domain_error);

  const std::string msg = [] {
    try {
      build_witness(WitnessKind::PrimePrime3Mod4, 5, 7);
      return std::string();
    } catch (const std::domain_error& e) {
      return std::string(e.what());
    }
  }();
  CHECK(msg.find("3 (mod 4)") != std::string::npos);
}
