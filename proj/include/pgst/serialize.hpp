#pragma once
// Deterministic JSON for certificates, decisions, classifications, spectrum
// tables, and scan summaries (insertion-ordered keys, no timestamps), plus
// parsing of the certificate document.  All emitters are byte-stable for
// identical inputs; parsers raise std::domain_error on malformed input.
#include <optional>
#include <string>

#include "pgst/classify.hpp"
#include "pgst/dynamics.hpp"
#include "pgst/engine.hpp"

namespace pgst {

std::string hamiltonian_name(Hamiltonian h);
Hamiltonian hamiltonian_from_name(const std::string& name);

// Corner pair as the slash selector syntax, e.g. "00/10" for (1,1)->(n_1,1)
// (0 = first vertex, 1 = last vertex per coordinate).
std::string pair_selector(const ProductGraph& g, const CornerPair& pair);

// Certificate document: {factors, hamiltonian, pair, entries:[[index, c]]}.
// Coefficients emit as JSON integers, falling back to decimal strings
// beyond 64 bits; the parser accepts both.
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

std::string decision_to_json(const ProductGraph& g, const CornerPair& pair,
                             const Decision& decision);
std::string classification_to_json(const CornerClassification& c);
std::string laplacian_verdict_to_json(const LaplacianVerdict& v);
std::string spectrum_to_json(const ProductGraph& g, const SpectrumTable& table);
std::string scan_summary_to_json(const ProductGraph& g, const CornerPair& pair,
                                 double t_max, long samples, const FidelityTrace& trace,
                                 const std::optional<double>& target,
                                 const std::optional<double>& time_reaching_target,
                                 const std::string& csv_path);

}  // namespace pgst
