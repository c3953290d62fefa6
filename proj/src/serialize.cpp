#include "pgst/serialize.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace pgst {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string corner_mask(const std::vector<long>& tuple) {
  std::string mask(tuple.size(), '0');
  for (std::size_t i = 0; i < tuple.size(); ++i)
    if (tuple[i] != 1) mask[i] = '1';
  return mask;
}

ordered_json index_json(const EigenIndex& idx) {
  return ordered_json(idx);
}

ordered_json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return ordered_json(c.get_si());
  return ordered_json(c.get_str());
}

std::vector<long> graph_sizes(const ProductGraph& g) {
  std::vector<long> sizes;
  sizes.reserve(g.factors.size());
  for (const auto& f : g.factors) sizes.push_back(f.n);
  return sizes;
}

ordered_json certificate_doc(const Certificate& cert) {
  ordered_json j;
  j["factors"] = graph_sizes(cert.graph);
  j["hamiltonian"] = hamiltonian_name(cert.graph.ham);
  j["pair"] = pair_selector(cert.graph, cert.pair);
  ordered_json entries = ordered_json::array();
  for (const auto& [idx, c] : cert.coeffs)
    entries.push_back(ordered_json::array({index_json(idx), coefficient_json(c)}));
  j["entries"] = std::move(entries);
  return j;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::PGST: return "pgst";
    case Verdict::NoPGST: return "no-pgst";
    case Verdict::NotStronglyCospectral: return "not-strongly-cospectral";
  }
  throw std::logic_error("verdict_name: unknown verdict");
}

std::string reason_name(ClassifyReason r) {
  switch (r) {
    case ClassifyReason::UnsupportedFactor: return "factor-class";
    case ClassifyReason::SharedFactorCollision: return "shared-divisor";
    case ClassifyReason::CongruenceObstruction: return "congruence";
  }
  throw std::logic_error("reason_name: unknown reason");
}

}  // namespace

std::string hamiltonian_name(Hamiltonian h) {
  return h == Hamiltonian::Adjacency ? "adjacency" : "laplacian";
}

Hamiltonian hamiltonian_from_name(const std::string& name) {
  if (name == "adjacency") return Hamiltonian::Adjacency;
  if (name == "laplacian") return Hamiltonian::Laplacian;
  throw std::domain_error("unknown hamiltonian '" + name +
                          "' (expected adjacency or laplacian)");
}

std::string pair_selector(const ProductGraph&, const CornerPair& pair) {
  return corner_mask(pair.a) + "/" + corner_mask(pair.b);
}

std::string certificate_to_json(const Certificate& cert) {
  return certificate_doc(cert).dump();
}

Certificate certificate_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("certificate JSON: ") + e.what());
  }
  try {
    Certificate cert;
    cert.graph = make_product(j.at("factors").get<std::vector<long>>(),
                              hamiltonian_from_name(j.at("hamiltonian").get<std::string>()));
    const std::string selector = j.at("pair").get<std::string>();
    const auto slash = selector.find('/');
    if (slash == std::string::npos)
      throw std::domain_error("certificate JSON: pair selector needs '/'");
    cert.pair = corner_pair(cert.graph, selector.substr(0, slash),
                            selector.substr(slash + 1));
    for (const auto& entry : j.at("entries")) {
      if (!entry.is_array() || entry.size() != 2)
        throw std::domain_error("certificate JSON: entries are [index, coefficient] pairs");
      const auto idx = entry[0].get<EigenIndex>();
      mpz_class c;
      if (entry[1].is_string()) {
        try {
          c = mpz_class(entry[1].get<std::string>());
        } catch (const std::invalid_argument&) {
          throw std::domain_error("certificate JSON: bad coefficient string");
        }
      } else if (entry[1].is_number_integer()) {
        c = mpz_class(entry[1].get<long>());
      } else {
        throw std::domain_error("certificate JSON: coefficient must be integer or string");
      }
      if (!cert.coeffs.emplace(idx, std::move(c)).second)
        throw std::domain_error("certificate JSON: duplicate index entry");
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("certificate JSON: ") + e.what());
  }
}

std::string decision_to_json(const ProductGraph& g, const CornerPair& pair,
                             const Decision& decision) {
  ordered_json j;
  j["factors"] = graph_sizes(g);
  j["hamiltonian"] = hamiltonian_name(g.ham);
  j["pair"] = pair_selector(g, pair);
  j["verdict"] = verdict_name(decision.verdict);
  j["method"] = decision.method;
  if (decision.certificate) j["certificate"] = certificate_doc(*decision.certificate);
  if (decision.witness)
    j["witness"] = ordered_json::array(
        {index_json(decision.witness->first), index_json(decision.witness->second)});
  return j.dump();
}

std::string classification_to_json(const CornerClassification& c) {
  ordered_json j;
  if (c.pgst) {
    j["verdict"] = "pgst";
    j["case"] = c.case_number;
    if (c.single_path_product_overlap) j["single_path_product_overlap"] = true;
    return j.dump();
  }
  j["verdict"] = "no-pgst";
  j["reason"] = reason_name(*c.reason);
  j["factors"] = c.factor_indices;
  if (c.witness_kind) j["kind"] = witness_kind_name(*c.witness_kind);
  if (c.witness_primes)
    j["primes"] = ordered_json::array({c.witness_primes->first, c.witness_primes->second});
  if (c.refuted_coordinate) j["refuted_coordinate"] = *c.refuted_coordinate;
  j["detail"] = c.detail;
  return j.dump();
}

std::string laplacian_verdict_to_json(const LaplacianVerdict& v) {
  ordered_json j;
  if (v.pgst) {
    j["verdict"] = "pgst";
    return j.dump();
  }
  j["verdict"] = "no-pgst";
  if (v.non_power_factor) j["non_power_factor"] = *v.non_power_factor;
  if (v.refutation) {
    const auto& r = *v.refutation;
    ordered_json ref;
    ref["factors"] = r.factor_indices;
    ref["subproduct"] = graph_sizes(r.subproduct);
    ref["pair"] = pair_selector(r.subproduct, r.pair);
    ref["collision"] = ordered_json::array(
        {index_json(r.collision.first), index_json(r.collision.second)});
    j["refutation"] = std::move(ref);
  }
  j["detail"] = v.detail;
  return j.dump();
}

std::string spectrum_to_json(const ProductGraph& g, const SpectrumTable& table) {
  ordered_json j;
  j["factors"] = graph_sizes(g);
  j["hamiltonian"] = hamiltonian_name(g.ham);
  j["conductor"] = common_conductor(g);
  j["total"] = vertex_count(g);
  j["distinct"] = table.groups.size();
  ordered_json groups = ordered_json::array();
  for (const auto& grp : table.groups) {
    ordered_json gj;
    gj["value"] = grp.value.float_value();
    ordered_json members = ordered_json::array();
    for (const auto& idx : grp.members) members.push_back(index_json(idx));
    gj["members"] = std::move(members);
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j.dump();
}

std::string scan_summary_to_json(const ProductGraph& g, const CornerPair& pair,
                                 double t_max, long samples, const FidelityTrace& trace,
                                 const std::optional<double>& target,
                                 const std::optional<double>& time_reaching_target,
                                 const std::string& csv_path) {
  ordered_json j;
  j["factors"] = graph_sizes(g);
  j["hamiltonian"] = hamiltonian_name(g.ham);
  j["pair"] = pair_selector(g, pair);
  j["t_max"] = t_max;
  j["samples"] = samples;
  j["best_t"] = trace.best_t;
  j["best_value"] = trace.best_value;
  if (target) {
    j["target"] = *target;
    // Absence of a hitting time is an observation only, never a verdict.
    if (time_reaching_target)
      j["time_reaching_target"] = *time_reaching_target;
    else
      j["time_reaching_target"] = nullptr;
  }
  if (!csv_path.empty()) j["csv"] = csv_path;
  return j.dump();
}

}  // namespace pgst
