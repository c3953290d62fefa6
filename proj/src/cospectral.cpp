#include "pgst/cospectral.hpp"

#include <stdexcept>

namespace pgst {
namespace {

void check_corner(const ProductGraph& g, const std::vector<long>& v) {
  if (v.size() != g.factors.size())
    throw std::domain_error("corner arity does not match factor count");
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 1 && v[i] != g.factors[i].n)
      throw std::domain_error("corner coordinates must be path ends");
}

}  // namespace

CornerPair corner_pair(const ProductGraph& g, const std::string& mask_a,
                       const std::string& mask_b) {
  const size_t k = g.factors.size();
  if (mask_a.size() != k || mask_b.size() != k)
    throw std::domain_error("corner mask length must equal the factor count");
  CornerPair p;
  p.a.resize(k);
  p.b.resize(k);
  p.differ_mask.resize(k);
  for (size_t i = 0; i < k; ++i) {
    if ((mask_a[i] != '0' && mask_a[i] != '1') ||
        (mask_b[i] != '0' && mask_b[i] != '1'))
      throw std::domain_error("corner masks must consist of 0s and 1s");
    p.a[i] = mask_a[i] == '0' ? 1 : g.factors[i].n;
    p.b[i] = mask_b[i] == '0' ? 1 : g.factors[i].n;
    p.differ_mask[i] = p.a[i] != p.b[i];
  }
  return p;
}

int relative_sign(const ProductGraph& g, const CornerPair& pair,
                  const EigenIndex& idx) {
  check_corner(g, pair.a);
  check_corner(g, pair.b);
  if (idx.size() != g.factors.size())
    throw std::domain_error("eigenvalue index arity mismatch");
  int s = +1;
  for (size_t i = 0; i < g.factors.size(); ++i)
    if (pair.differ_mask[i]) s *= far_end_sign(g.factors[i], idx[i], g.ham);
  return s;
}

CospectralReport strong_cospectrality(const ProductGraph& g, const CornerPair& pair,
                                      const SpectrumTable& table) {
  check_corner(g, pair.a);
  check_corner(g, pair.b);
  CospectralReport report;
  for (const auto& grp : table.groups) {
    const int s0 = relative_sign(g, pair, grp.members[0]);
    for (size_t j = 1; j < grp.members.size(); ++j)
      if (relative_sign(g, pair, grp.members[j]) != s0) {
        report.strongly_cospectral = false;
        report.witness = std::make_pair(grp.members[0], grp.members[j]);
        report.sign_map.clear();
        return report;
      }
    report.sign_map.emplace_back(grp.value, s0);
  }
  report.strongly_cospectral = true;
  return report;
}

CospectralReport strong_cospectrality(const ProductGraph& g, const CornerPair& pair,
                                      long max_vertices) {
  return strong_cospectrality(g, pair, spectrum_table(g, max_vertices));
}

std::vector<CycloReal> phi_minus(const ProductGraph& g, const CornerPair& pair,
                                 long max_vertices) {
  const CospectralReport report = strong_cospectrality(g, pair, max_vertices);
  if (!report.strongly_cospectral)
    throw std::logic_error("phi_minus requires a strongly cospectral pair");
  std::vector<CycloReal> out;
  for (const auto& [value, sign] : report.sign_map)
    if (sign < 0) out.push_back(value);
  return out;
}

}  // namespace pgst
