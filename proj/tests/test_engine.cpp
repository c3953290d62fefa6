// Decision engine: relation lattices, transfer decisions, certificates.
#include <random>

#include "doctest.h"
#include "pgst/engine.hpp"

using namespace pgst;

namespace {

// Independent decision route: literal distinct-eigenvalue lattice plus the
// sign partition, no marginal factorization.  Used to cross-check
// decide_pgst's factored construction.
Verdict literal_decide(const ProductGraph& g, const CornerPair& pair) {
  const auto rep = strong_cospectrality(g, pair);
  if (!rep.strongly_cospectral) return Verdict::NotStronglyCospectral;
  const auto lat = relation_lattice(g);
  REQUIRE(lat.values.size() == rep.sign_map.size());
  for (std::size_t c = 0; c < lat.values.size(); ++c)
    REQUIRE(lat.values[c] == rep.sign_map[c].first);
  for (const auto& row : lat.basis) {
    int parity = 0;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (rep.sign_map[c].second < 0 && mpz_odd_p(row[c].get_mpz_t()))
        parity ^= 1;
    if (parity == 1) return Verdict::NoPGST;
  }
  return Verdict::PGST;
}

Certificate grid_certificate(const std::vector<long>& sizes,
                             const std::string& mask_b,
                             const std::vector<std::vector<long>>& l) {
  Certificate c;
  c.graph = make_product(sizes, Hamiltonian::Adjacency);
  c.pair = corner_pair(c.graph, std::string(sizes.size(), '0'), mask_b);
  for (std::size_t r = 0; r < l.size(); ++r)
    for (std::size_t s = 0; s < l[r].size(); ++s)
      if (l[r][s] != 0)
        c.coeffs[{static_cast<long>(r + 1), static_cast<long>(s + 1)}] =
            l[r][s];
  return c;
}

}  // namespace

TEST_CASE("decision examples") {
  auto decide = [](const std::vector<long>& sizes, Hamiltonian h,
                   const std::string& mb) {
    const ProductGraph g = make_product(sizes, h);
    return decide_pgst(g, corner_pair(g, std::string(sizes.size(), '0'), mb));
  };

  CHECK(decide({2, 3}, Hamiltonian::Adjacency, "10").verdict == Verdict::PGST);
  CHECK(decide({16, 9}, Hamiltonian::Adjacency, "10").verdict == Verdict::PGST);
  CHECK(decide({2}, Hamiltonian::Adjacency, "1").verdict == Verdict::PGST);
  CHECK(decide({4, 2}, Hamiltonian::Laplacian, "10").verdict == Verdict::PGST);

  const Decision no = decide({6, 4}, Hamiltonian::Adjacency, "10");
  REQUIRE(no.verdict == Verdict::NoPGST);
  CHECK(no.method == "lattice");
  REQUIRE(no.certificate.has_value());
  CHECK_FALSE(no.certificate->coeffs.empty());
  CHECK(verify_certificate(*no.certificate));

  const Decision nsc = decide({4, 4}, Hamiltonian::Adjacency, "10");
  REQUIRE(nsc.verdict == Verdict::NotStronglyCospectral);
  REQUIRE(nsc.witness.has_value());
  CHECK(nsc.witness->first == EigenIndex{1, 2});
  CHECK(nsc.witness->second == EigenIndex{2, 1});
  CHECK_FALSE(nsc.certificate.has_value());

  // single path whose n+1 = 9 is neither prime, twice a prime, nor 2^e
  const Decision single = decide({8}, Hamiltonian::Adjacency, "1");
  REQUIRE(single.verdict == Verdict::NoPGST);
  CHECK(verify_certificate(*single.certificate));
}

TEST_CASE("no-transfer certificates verify and sit on group representatives") {
  const std::vector<std::vector<long>> products = {
      {6, 4}, {12, 4}, {10, 4}, {2, 6}, {8}};
  for (const auto& sizes : products) {
    const ProductGraph g = make_product(sizes, Hamiltonian::Adjacency);
    const std::string mb = "1" + std::string(sizes.size() - 1, '0');
    const Decision d =
        decide_pgst(g, corner_pair(g, std::string(sizes.size(), '0'), mb));
    REQUIRE_MESSAGE(d.verdict == Verdict::NoPGST, "sizes[0]=", sizes[0]);
    REQUIRE(verify_certificate(*d.certificate));

    const SpectrumTable table = spectrum_table(g);
    mpz_class total = 0;
    for (const auto& [idx, q] : d.certificate->coeffs) {
      total += q;
      bool found = false;
      for (const auto& grp : table.groups)
        if (grp.members.front() == idx) found = true;
      CHECK_MESSAGE(found, "support index is not a group representative");
    }
    CHECK(total == 0);
  }
}

TEST_CASE("factored and literal lattice routes decide identically") {
  const std::vector<std::vector<long>> shapes = {
      {2, 2}, {2, 3}, {3, 3},    {2, 4},    {3, 4}, {4, 4},
      {2, 6}, {4, 6}, {2, 8},    {6, 4},    {8},    {9},
      {2, 2, 2}, {2, 3, 4}};
  for (Hamiltonian h : {Hamiltonian::Adjacency, Hamiltonian::Laplacian}) {
    for (const auto& shape : shapes) {
      const ProductGraph g = make_product(shape, h);
      const std::size_t k = shape.size();
      for (unsigned long bits = 1; bits < (1ul << k); ++bits) {
        std::string mb(k, '0');
        for (std::size_t i = 0; i < k; ++i)
          if (bits & (1ul << (k - 1 - i))) mb[i] = '1';
        const CornerPair pair = corner_pair(g, std::string(k, '0'), mb);
        const Decision d = decide_pgst(g, pair);
        const Verdict lit = literal_decide(g, pair);
        CHECK_MESSAGE(d.verdict == lit, "shape[0]=", shape[0], " mask ", mb);
        if (d.verdict == Verdict::NoPGST)
          CHECK(verify_certificate(*d.certificate));
      }
    }
  }
}

TEST_CASE("relation lattice rows satisfy both linear conditions exactly") {
  for (const auto& shape : std::vector<std::vector<long>>{{4, 6}, {6, 4}, {8}}) {
    const ProductGraph g = make_product(shape, Hamiltonian::Adjacency);
    const auto lat = relation_lattice(g);
    for (const auto& row : lat.basis) {
      CycloReal sum;
      mpz_class total = 0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0) continue;
        sum = add(sum, scale(lat.values[c], mpq_class(row[c])));
        total += row[c];
      }
      CHECK(sum.is_zero());
      CHECK(total == 0);
    }
  }
}

TEST_CASE("transfer-positive lattices have even parity throughout") {
  // 1000 random integer combinations of the relation basis stay even.
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> coef(-7, 7);
  for (const auto& shape : std::vector<std::vector<long>>{{2, 3}, {16, 9}}) {
    const ProductGraph g = make_product(shape, Hamiltonian::Adjacency);
    const CornerPair pair = corner_pair(g, "00", "10");
    REQUIRE(decide_pgst(g, pair).verdict == Verdict::PGST);
    const auto rep = strong_cospectrality(g, pair);
    const auto lat = relation_lattice(g);
    REQUIRE(rep.strongly_cospectral);
    for (int trial = 0; trial < 500; ++trial) {
      IntVec v(lat.values.size(), 0);
      for (const auto& row : lat.basis) {
        const long c = coef(rng);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += c * row[j];
      }
      int parity = 0;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (rep.sign_map[j].second < 0 && mpz_odd_p(v[j].get_mpz_t()))
          parity ^= 1;
      CHECK(parity == 0);
    }
  }
}

TEST_CASE("certificate verification examples") {
  // block-layout refutation for P_2 x P_4 along the first coordinate
  const Certificate good = grid_certificate(
      {2, 4}, "10", {{1, 0, 1, -1}, {-2, 1, -2, 2}});
  CHECK(verify_certificate(good));

  Certificate zero = good;
  zero.coeffs.clear();
  CHECK_FALSE(verify_certificate(zero));

  Certificate tampered = good;
  tampered.coeffs[{1, 2}] += 1;
  CHECK_FALSE(verify_certificate(tampered));

  Certificate bad_index = good;
  bad_index.coeffs[{1, 5}] = 1;
  CHECK_THROWS_AS((void)verify_certificate(bad_index), std::domain_error);

  Certificate bad_arity = good;
  bad_arity.coeffs[{1, 1, 1}] = 1;
  CHECK_THROWS_AS((void)verify_certificate(bad_arity), std::domain_error);
}

TEST_CASE("per-index sign parity equals the sign-class parity") {
  // For strongly cospectral pairs the relative sign is constant on each
  // eigenvalue group, so summing over negatively signed indices is the same
  // as summing group totals over the negative sign classes.
  const ProductGraph g = make_product({6, 4}, Hamiltonian::Adjacency);
  const CornerPair pair = corner_pair(g, "00", "10");
  const Decision d = decide_pgst(g, pair);
  REQUIRE(d.verdict == Verdict::NoPGST);
  const auto phis = phi_minus(g, pair);
  int by_membership = 0;
  int by_sign = 0;
  for (const auto& [idx, q] : d.certificate->coeffs) {
    const CycloReal value = product_eigenvalue(g, idx);
    bool in_phi_minus = false;
    for (const auto& v : phis)
      if (v == value) in_phi_minus = true;
    CHECK(in_phi_minus == (relative_sign(g, pair, idx) < 0));
    if (mpz_odd_p(q.get_mpz_t())) {
      if (in_phi_minus) by_membership ^= 1;
      if (relative_sign(g, pair, idx) < 0) by_sign ^= 1;
    }
  }
  CHECK(by_membership == 1);
  CHECK(by_sign == 1);
}
