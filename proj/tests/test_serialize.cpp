// JSON round trips and pinned document shapes: certificates (including
// wide coefficients), decisions, classifications, spectrum tables, scan
// summaries, and malformed-input rejection.
#include <optional>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "pgst/serialize.hpp"
#include "pgst/witness.hpp"

namespace {

using nlohmann::ordered_json;
using pgst::Hamiltonian;

}  // namespace

TEST_CASE("certificate documents are pinned, ordered, and round-trip") {
  const auto cert = build_witness(pgst::WitnessKind::PrimePrime3Mod4, 3, 5);
  const std::string text = pgst::certificate_to_json(cert);
  CHECK(text ==
        R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"00/10",)"
        R"("entries":[[[1,1],1],[[1,3],1],[[1,4],-1],[[2,1],-2],[[2,2],1],)"
        R"([[2,3],-2],[[2,4],2]]})");

  const auto parsed = pgst::certificate_from_json(text);
  CHECK(parsed.coeffs == cert.coeffs);
  CHECK(parsed.pair.a == cert.pair.a);
  CHECK(parsed.pair.b == cert.pair.b);
  CHECK(pgst::verify_certificate(parsed));
  CHECK(pgst::certificate_to_json(parsed) == text);
}

TEST_CASE("coefficients beyond 64 bits fall back to decimal strings") {
  pgst::Certificate cert;
  cert.graph = pgst::make_product({2, 4}, Hamiltonian::Adjacency);
  cert.pair = pgst::corner_pair(cert.graph, "00", "10");
  const mpz_class wide("123456789012345678901234567890");
  cert.coeffs[{1, 1}] = wide;
  cert.coeffs[{2, 1}] = -wide;

  const std::string text = pgst::certificate_to_json(cert);
  const auto doc = ordered_json::parse(text);
  CHECK(doc["entries"][0][1].is_string());
  const auto parsed = pgst::certificate_from_json(text);
  CHECK(parsed.coeffs.at({1, 1}) == wide);
  CHECK(parsed.coeffs.at({2, 1}) == -wide);
}

TEST_CASE("decision documents carry verdicts, certificates, and witnesses") {
  const auto no = pgst::make_product({6, 4}, Hamiltonian::Adjacency);
  const auto no_pair = pgst::corner_pair(no, "00", "10");
  const auto no_doc = ordered_json::parse(
      pgst::decision_to_json(no, no_pair, pgst::decide_pgst(no, no_pair)));
  CHECK(no_doc["verdict"] == "no-pgst");
  CHECK(no_doc["method"] == "lattice");
  CHECK(no_doc["factors"] == ordered_json::array({6, 4}));
  CHECK(no_doc["pair"] == "00/10");
  REQUIRE(no_doc.contains("certificate"));
  CHECK(pgst::verify_certificate(
      pgst::certificate_from_json(no_doc["certificate"].dump())));

  const auto yes = pgst::make_product({3, 2}, Hamiltonian::Adjacency);
  const auto yes_pair = pgst::corner_pair(yes, "00", "11");
  const auto yes_doc = ordered_json::parse(
      pgst::decision_to_json(yes, yes_pair, pgst::decide_pgst(yes, yes_pair)));
  CHECK(yes_doc["verdict"] == "pgst");
  CHECK(!yes_doc.contains("certificate"));
  CHECK(!yes_doc.contains("witness"));

  const auto nsc = pgst::make_product({4, 4}, Hamiltonian::Adjacency);
  const auto nsc_pair = pgst::corner_pair(nsc, "00", "10");
  const auto nsc_doc = ordered_json::parse(
      pgst::decision_to_json(nsc, nsc_pair, pgst::decide_pgst(nsc, nsc_pair)));
  CHECK(nsc_doc["verdict"] == "not-strongly-cospectral");
  CHECK(nsc_doc["witness"] ==
        ordered_json::array({ordered_json::array({1, 2}), ordered_json::array({2, 1})}));
}

TEST_CASE("classification documents: pinned yes shape and reason payloads") {
  const auto yes = pgst::classify_corners(pgst::make_product({3, 2}, Hamiltonian::Adjacency));
  CHECK(pgst::classification_to_json(yes) == R"({"verdict":"pgst","case":1})");

  const auto single =
      pgst::classify_corners(pgst::make_product({16}, Hamiltonian::Adjacency));
  CHECK(pgst::classification_to_json(single) ==
        R"({"verdict":"pgst","case":0,"single_path_product_overlap":true})");

  const auto no = ordered_json::parse(pgst::classification_to_json(
      pgst::classify_corners(pgst::make_product({6, 4}, Hamiltonian::Adjacency))));
  CHECK(no["verdict"] == "no-pgst");
  CHECK(no["reason"] == "congruence");
  CHECK(no["kind"] == "prime-prime-3mod4");
  CHECK(no["primes"] == ordered_json::array({7, 5}));
  CHECK(no["refuted_coordinate"] == 0);

  const auto gcd = ordered_json::parse(pgst::classification_to_json(
      pgst::classify_corners(pgst::make_product({4, 4}, Hamiltonian::Adjacency))));
  CHECK(gcd["reason"] == "shared-divisor");
  CHECK(gcd["factors"] == ordered_json::array({0, 1}));
}

TEST_CASE("laplacian verdict documents") {
  CHECK(pgst::laplacian_verdict_to_json(pgst::laplacian_corner_verdict(
            pgst::make_product({4}, Hamiltonian::Laplacian))) == R"({"verdict":"pgst"})");

  const auto doc = ordered_json::parse(pgst::laplacian_verdict_to_json(
      pgst::laplacian_corner_verdict(pgst::make_product({2, 2}, Hamiltonian::Laplacian))));
  CHECK(doc["verdict"] == "no-pgst");
  CHECK(doc["refutation"]["factors"] == ordered_json::array({0, 1}));
  CHECK(doc["refutation"]["pair"] == "00/10");
  CHECK(doc["refutation"]["subproduct"] == ordered_json::array({2, 2}));
}

TEST_CASE("spectrum documents expose grouping data") {
  const auto g = pgst::make_product({4, 4}, Hamiltonian::Adjacency);
  const auto doc =
      ordered_json::parse(pgst::spectrum_to_json(g, pgst::spectrum_table(g)));
  CHECK(doc["conductor"] == 5);
  CHECK(doc["total"] == 16);
  CHECK(doc["distinct"] == 9);
  std::size_t largest = 0;
  for (const auto& grp : doc["groups"]) largest = std::max(largest, grp["members"].size());
  CHECK(largest == 4);  // 0 = x + (-x) collides for both eigenvalue magnitudes
}

TEST_CASE("scan summaries echo the request and the refined result") {
  const auto g = pgst::make_product({2}, Hamiltonian::Adjacency);
  const auto pair = pgst::corner_pair(g, "0", "1");
  const auto trace = pgst::scan_fidelity(g, pair, 4.0, 1000);
  const std::string a = pgst::scan_summary_to_json(g, pair, 4.0, 1000, trace, 0.9,
                                                   std::optional<double>(1.12), "out.csv");
  const std::string b = pgst::scan_summary_to_json(g, pair, 4.0, 1000, trace, 0.9,
                                                   std::optional<double>(1.12), "out.csv");
  CHECK(a == b);
  const auto doc = ordered_json::parse(a);
  CHECK(doc["samples"] == 1000);
  CHECK(doc["target"] == 0.9);
  CHECK(doc["time_reaching_target"] == 1.12);
  CHECK(doc["csv"] == "out.csv");

  const auto missing = ordered_json::parse(pgst::scan_summary_to_json(
      g, pair, 4.0, 1000, trace, 0.9, std::nullopt, ""));
  CHECK(missing["time_reaching_target"].is_null());
  CHECK(!missing.contains("csv"));
}

TEST_CASE("malformed certificate documents are rejected as domain errors") {
  const char* bad[] = {
      "{",                                                       // not JSON
      R"({"hamiltonian":"adjacency","pair":"0/1","entries":[]})",  // no factors
      R"({"factors":[2,4],"hamiltonian":"magnetic","pair":"00/10","entries":[]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"0010","entries":[]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"0X/10","entries":[]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"00/10","entries":[[[1,1]]]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"00/10","entries":[[[1,1],"12x"]]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"00/10","entries":[[[1,1],1.5]]})",
      R"({"factors":[2,4],"hamiltonian":"adjacency","pair":"00/10","entries":[[[1,1],1],[[1,1],2]]})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(pgst::certificate_from_json(text), std::domain_error);
  }
  CHECK(pgst::hamiltonian_from_name("laplacian") == Hamiltonian::Laplacian);
  CHECK_THROWS_AS(pgst::hamiltonian_from_name("Adjacency"), std::domain_error);
}
