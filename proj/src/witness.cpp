#include "pgst/witness.hpp"

#include <stdexcept>
#include <vector>

#include "pgst/cospectral.hpp"
#include "pgst/cyclotomic.hpp"
#include "pgst/spectra.hpp"

namespace pgst {
namespace {

using Grid = std::vector<std::vector<long>>;

// Dense integer layout [A B..B; C 0..0; ...] with nb copies of B along the
// first block row and nc copies of C down the first block column.  Row sums
// alternate +1,-1,... and column sums alternate -1,+1,...
Grid block_grid(long nb, long nc) {
  constexpr long A[2][2] = {{1, 0}, {-2, 1}};
  constexpr long B[2][2] = {{1, -1}, {-2, 2}};
  constexpr long C[2][2] = {{-1, 2}, {1, -2}};
  Grid g(2 * (1 + nc), std::vector<long>(2 * (1 + nb), 0));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      g[i][j] = A[i][j];
      for (long b = 1; b <= nb; ++b) g[i][2 * b + j] = B[i][j];
      for (long c = 1; c <= nc; ++c) g[2 * c + i][j] = C[i][j];
    }
  }
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error("build_witness: " + what);
}

void require_odd_prime(long p, const char* name) {
  require(p >= 3 && is_prime(p), std::string(name) + " must be an odd prime");
}

Certificate make_certificate(const std::vector<long>& sizes, const std::string& mask_b) {
  Certificate cert;
  cert.graph = make_product(sizes, Hamiltonian::Adjacency);
  cert.pair = corner_pair(cert.graph, "00", mask_b);
  return cert;
}

void add_entry(Certificate& cert, long r, long s, long v) {
  if (v != 0) cert.coeffs[{r, s}] = v;
}

}  // namespace

std::string witness_kind_name(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::PrimePrime3Mod4: return "prime-prime-3mod4";
    case WitnessKind::PrimePrime5Mod8: return "prime-prime-5mod8";
    case WitnessKind::TwiceTwice3Mod4: return "twice-twice-3mod4";
    case WitnessKind::TwicePrime3Mod4: return "twice-prime-3mod4";
    case WitnessKind::TwicePrimeSecond3Mod4: return "twice-prime-second-3mod4";
    case WitnessKind::TwicePrimeSecond5Mod8: return "twice-prime-second-5mod8";
  }
  throw std::logic_error("witness_kind_name: unknown kind");
}

std::optional<WitnessKind> witness_kind_from_name(const std::string& name) {
  for (WitnessKind k :
       {WitnessKind::PrimePrime3Mod4, WitnessKind::PrimePrime5Mod8,
        WitnessKind::TwiceTwice3Mod4, WitnessKind::TwicePrime3Mod4,
        WitnessKind::TwicePrimeSecond3Mod4, WitnessKind::TwicePrimeSecond5Mod8}) {
    if (witness_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

Certificate build_witness(WitnessKind kind, long p1, long p2) {
  require_odd_prime(p1, "p1");
  require_odd_prime(p2, "p2");

  switch (kind) {
    case WitnessKind::PrimePrime3Mod4: {
      require(p1 % 4 == 3, "p1 must be 3 (mod 4)");
      Certificate cert = make_certificate({p1 - 1, p2 - 1}, "10");
      const Grid L = block_grid((p2 - 1) / 2 - 1, (p1 - 1) / 2 - 1);
      for (long r = 1; r <= p1 - 1; ++r)
        for (long s = 1; s <= p2 - 1; ++s) add_entry(cert, r, s, L[r - 1][s - 1]);
      return cert;
    }
    case WitnessKind::PrimePrime5Mod8: {
      require(p1 % 8 == 5, "p1 must be 5 (mod 8)");
      require(p2 % 4 == 1, "p2 must be 1 (mod 4)");
      Certificate cert = make_certificate({p1 - 1, p2 - 1}, "10");
      const Grid L = block_grid((p2 - 1) / 4 - 1, (p1 - 1) / 4 - 1);
      for (long r = 1; r <= (p1 - 1) / 2; ++r)
        for (long s = 1; s <= (p2 - 1) / 2; ++s) add_entry(cert, r, s, L[r - 1][s - 1]);
      return cert;
    }
    case WitnessKind::TwiceTwice3Mod4: {
      require(p1 % 4 == 3, "p1 must be 3 (mod 4)");
      Certificate cert = make_certificate({2 * p1 - 1, 2 * p2 - 1}, "10");
      // Support sits on even-numbered indices plus the bordered row r = p1
      // (and, when p2 = 3 (mod 4), the bordered column s = p2).
      const long half_cols = (p2 % 4 == 1) ? (p2 - 1) / 2 : (p2 + 1) / 2;
      const Grid L = block_grid(half_cols / 2 - 1, (p1 + 1) / 4 - 1);
      for (long j = 1; j <= (p1 - 1) / 2; ++j)
        for (long k = 1; k <= (p2 - 1) / 2; ++k)
          add_entry(cert, 2 * j, 2 * k, L[j - 1][k - 1]);
      for (long k = 1; k <= (p2 - 1) / 2; ++k)
        add_entry(cert, p1, 2 * k, L[(p1 + 1) / 2 - 1][k - 1]);
      if (p2 % 4 == 3) {
        for (long j = 1; j <= (p1 - 1) / 2; ++j)
          add_entry(cert, 2 * j, p2, L[j - 1][(p2 + 1) / 2 - 1]);
        add_entry(cert, p1, p2, L[(p1 + 1) / 2 - 1][(p2 + 1) / 2 - 1]);
      }
      return cert;
    }
    case WitnessKind::TwicePrime3Mod4: {
      require(p1 % 4 == 3, "p1 must be 3 (mod 4)");
      require(p2 % 4 == 1, "p2 must be 1 (mod 4)");
      Certificate cert = make_certificate({2 * p1 - 1, p2 - 1}, "10");
      const Grid L = block_grid((p2 - 1) / 4 - 1, (p1 + 1) / 4 - 1);
      for (long j = 1; j <= (p1 - 1) / 2; ++j)
        for (long s = 1; s <= (p2 - 1) / 2; ++s) add_entry(cert, 2 * j, s, L[j - 1][s - 1]);
      for (long s = 1; s <= (p2 - 1) / 2; ++s)
        add_entry(cert, p1, s, L[(p1 + 1) / 2 - 1][s - 1]);
      return cert;
    }
    case WitnessKind::TwicePrimeSecond3Mod4: {
      require(p2 % 4 == 3, "p2 must be 3 (mod 4)");
      Certificate cert = make_certificate({2 * p1 - 1, p2 - 1}, "01");
      const Grid L = block_grid((p2 - 1) / 2 - 1, (p1 - 1) / 2 - 1);
      for (long j = 1; j <= p1 - 1; ++j)
        for (long s = 1; s <= p2 - 1; ++s) add_entry(cert, 2 * j, s, L[j - 1][s - 1]);
      return cert;
    }
    case WitnessKind::TwicePrimeSecond5Mod8: {
      require(p1 % 4 == 1, "p1 must be 1 (mod 4)");
      require(p2 % 8 == 5, "p2 must be 5 (mod 8)");
      Certificate cert = make_certificate({2 * p1 - 1, p2 - 1}, "01");
      const Grid L = block_grid((p2 - 1) / 4 - 1, (p1 - 1) / 4 - 1);
      for (long j = 1; j <= (p1 - 1) / 2; ++j)
        for (long s = 1; s <= (p2 - 1) / 2; ++s) add_entry(cert, 2 * j, s, L[j - 1][s - 1]);
      return cert;
    }
  }
  throw std::logic_error("build_witness: unknown kind");
}

}  // namespace pgst
