#pragma once

#include <string>
#include <vector>

#include "cofib/small.hpp"

namespace cofib {

namespace detail {

inline witness_report empty_witness(const poset_ptr& p) {
  witness_report r;
  r.theorem = "lt3el";
  r.route = "empty";
  r.certificate = {p, origin::initial, ax_iso(identity(p))};
  return r;
}

}  // namespace detail

inline witness_report witness(const poset_ptr& p);

// Components certified separately; the object through the coproduct rule, each
// minimum through the injection of its component, itself a pushout of the
// certified complement along the empty map.
inline witness_report disconnected_witness(const poset_ptr& p) {
  auto comps = connected_components(*p);
  std::vector<poset_ptr> parts;
  std::vector<witness_report> reports;
  for (const auto& c : comps) {
    parts.push_back(subposet(p, c).first);
    reports.push_back(witness(parts.back()));
  }
  std::vector<cert_ptr> initials;
  for (const auto& r : reports) initials.push_back(as_initial(r.certificate));
  auto sum = r_coproduct(initials);
  std::vector<std::size_t> phi;
  for (const auto& c : comps) phi.insert(phi.end(), c.begin(), c.end());
  witness_report out;
  out.theorem = "lt3el";
  out.route = "coproduct";
  out.certificate = {p, origin::initial, r_compose(sum, ax_iso(monotone_map{sum->conclusion.target, p, phi}))};
  for (std::size_t k = 0; k < comps.size(); ++k) {
    std::vector<cert_ptr> rest_certs;
    elem_list rest_elems;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j == k) continue;
      rest_certs.push_back(initials[j]);
      rest_elems.insert(rest_elems.end(), comps[j].begin(), comps[j].end());
    }
    auto rest = r_coproduct(rest_certs);
    auto step = r_pushout(rest, from_empty(parts[k]));
    std::vector<std::size_t> psi(p->size());
    for (std::size_t e = 0; e < rest_elems.size(); ++e) psi[step.result.from_left(e)] = rest_elems[e];
    for (std::size_t e = 0; e < comps[k].size(); ++e) psi[step.result.from_right(e)] = comps[k][e];
    auto leg = r_compose(step.cert, ax_iso(monotone_map{step.result.object, p, psi}));
    for (const auto& [m, c] : reports[k].minimum_certificates) out.minimum_certificates[comps[k][m]] = r_compose(c, leg);
    for (const auto& q : reports[k].queries) out.queries.push_back(q);
  }
  return out;
}

// Picks the construction for any finite poset the builders cover.
inline witness_report witness(const poset_ptr& p) {
  if (p->empty()) return detail::empty_witness(p);
  if (!is_connected(*p)) return disconnected_witness(p);
  if (p->size() == 1) return detail::trivial_witness(p, "lt3el");
  if (is_chain(*p)) return chain_witness(p);
  if (p->size() <= 5) return small_poset_witness(p);
  if (is_join_semilattice(*p) && p->size() <= join_route_limit) return join_semilattice_witness(p);
  if (is_meet_semilattice(*p)) {
    try {
      return meet_semilattice_reduction(p);
    } catch (const error&) {
      // fall through to the remaining shapes
    }
  }
  if (is_zigzag(*p)) return zigzag_witness(p);
  if (is_tree_poset(*p)) return tree_witness(p);
  throw error(errc::no_witness, "no witness route");
}

}  // namespace cofib
