#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cofib/canonical.hpp"
#include "cofib/certificate.hpp"
#include "cofib/colimit.hpp"
#include "cofib/functors.hpp"
#include "cofib/search.hpp"
#include "cofib/shapes.hpp"

namespace cofib {

struct witness_report {
  std::string theorem;
  std::string route;
  cofibrant_certificate certificate;
  std::map<std::size_t, cert_ptr> minimum_certificates;
  std::vector<std::pair<std::string, cert_ptr>> auxiliary;
  std::vector<retraction_query> queries;
  std::string construction;

  const poset_ptr& object() const { return certificate.object; }
};

inline constexpr std::size_t join_route_limit = 10;
inline constexpr std::size_t meet_route_limit = 6;

// Moves every certificate along an isomorphism phi: object -> phi.target.
inline witness_report transport(const witness_report& r, const monotone_map& phi) {
  if (phi.target == r.object() && phi == identity(r.object())) return r;
  witness_report out = r;
  auto iso = ax_iso(phi);
  out.certificate = {phi.target, r.certificate.via, r_compose(r.certificate.cert, iso)};
  out.minimum_certificates.clear();
  for (const auto& [m, c] : r.minimum_certificates) out.minimum_certificates[phi(m)] = r_compose(c, iso);
  out.auxiliary.clear();
  for (const auto& [name, c] : r.auxiliary) {
    if (same_poset(c->conclusion.target, r.object())) out.auxiliary.emplace_back(name, r_compose(c, iso));
    else out.auxiliary.emplace_back(name, c);
  }
  return out;
}

// Certifies missing minimum inclusions through automorphisms carrying a
// certified minimum onto them.
inline void fill_minima_by_symmetry(witness_report& r) {
  const auto& p = r.object();
  for (auto m : p->minimal_elements()) {
    if (r.minimum_certificates.count(m)) continue;
    for (const auto& [known, c] : r.minimum_certificates) {
      auto sigma = find_isomorphism(p, p, {known}, {m});
      if (!sigma) continue;
      r.minimum_certificates[m] = r_compose(c, ax_iso(*sigma));
      break;
    }
  }
}

inline bool covers_all_minima(const witness_report& r) {
  for (auto m : r.object()->minimal_elements())
    if (!r.minimum_certificates.count(m)) return false;
  return true;
}

namespace detail {

inline witness_report trivial_witness(const poset_ptr& p, std::string theorem) {
  witness_report r;
  r.theorem = std::move(theorem);
  r.route = "semilattice";
  auto c = ax_iso(point_at(singleton(), p, 0));
  r.certificate = {p, origin::terminal, c};
  r.minimum_certificates[0] = c;
  return r;
}

inline std::size_t fold_join(const poset& p, const elem_list& a) {
  std::size_t acc = a.front();
  for (std::size_t k = 1; k < a.size(); ++k) acc = *join(p, acc, a[k]);
  return acc;
}

}  // namespace detail

// The prefix-chain retraction of iota_empty: {*} -> P([n]) \ [n] off xi(iota_empty).
struct bool_minus_top_maps {
  subset_poset lattice;
  chain_poset chains;
  monotone_map iota_empty;
  monotone_map i;  // A -> {{}, {a1}, {a1,a2}, ..., A}
  monotone_map p;  // B -> union of B
};

inline bool_minus_top_maps bool_minus_top_retract(std::size_t n) {
  if (n > 5) throw error(errc::size_limit, "bool_minus_top supports n <= 5");
  bool_minus_top_maps m;
  m.lattice = power_lattice(n + 1, selection::minus_top);
  const auto& pm = m.lattice.order;
  m.chains = chains_poset(pm);
  m.iota_empty = point_at(singleton(), pm, m.lattice.index_of({}));
  std::vector<std::size_t> img_i(pm->size()), img_p(m.chains.chains.size());
  for (std::size_t a = 0; a < pm->size(); ++a) {
    const auto& set = m.lattice.members[a];
    elem_list chain{m.lattice.index_of({})};
    elem_list prefix;
    for (auto e : set) {
      prefix.push_back(e);
      chain.push_back(m.lattice.index_of(prefix));
    }
    std::sort(chain.begin(), chain.end());
    img_i[a] = m.chains.index_of(chain);
  }
  for (std::size_t c = 0; c < img_p.size(); ++c) {
    elem_list uni;
    for (auto a : m.chains.chains[c])
      for (auto e : m.lattice.members[a]) uni.push_back(e);
    std::sort(uni.begin(), uni.end());
    uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
    img_p[c] = m.lattice.index_of(uni);
  }
  m.i = {pm, m.chains.order, std::move(img_i)};
  m.p = {m.chains.order, pm, std::move(img_p)};
  return m;
}

// The certificate exactly as the prefix-chain retract prescribes; the verifier
// rejects it whenever i fails to be monotone.
inline cert_ptr bool_minus_top_certificate(const bool_minus_top_maps& m) {
  auto ax = ax_sd_mono(m.iota_empty);
  const auto& pt = m.iota_empty.source;
  auto x = ax->conclusion.source;
  return r_retract(ax, m.iota_empty, m.i, m.p, monotone_map{pt, x, {0}}, monotone_map{x, pt, {0}});
}

inline witness_report bool_minus_top_witness(std::size_t n) {
  auto m = bool_minus_top_retract(n);
  if (!is_monotone(m.i)) throw error(errc::not_monotone, "prefix-chain map is not monotone for n = " + std::to_string(n));
  auto c = bool_minus_top_certificate(m);
  witness_report r;
  r.theorem = "bopcof";
  r.route = "semilattice";
  r.construction = "prefix chains";
  r.certificate = {m.lattice.order, origin::terminal, c};
  r.minimum_certificates[m.iota_empty(0)] = c;
  return r;
}

// Join case: i(x) = down-set of x in the nonempty subsets, p(A) = join of A.
inline witness_report join_semilattice_witness(const poset_ptr& l) {
  const std::size_t n = l->size();
  if (n > join_route_limit) throw error(errc::size_limit, "join route limited to 10 elements");
  auto pw = power_lattice(n, selection::nonempty);
  std::vector<std::size_t> img_i(n), img_p(pw.members.size());
  for (std::size_t x = 0; x < n; ++x) img_i[x] = pw.index_of(down_set(*l, x));
  for (std::size_t a = 0; a < img_p.size(); ++a) img_p[a] = detail::fold_join(*l, pw.members[a]);
  monotone_map i{l, pw.order, img_i}, p{pw.order, l, img_p};
  witness_report r;
  r.theorem = "sliscof";
  r.route = "semilattice";
  r.construction = "join";
  auto leaf = r_compose(initial_to_point(), ax_sd_vertex(n - 1, 0));
  auto e = empty_poset();
  auto obj = r_retract(leaf, from_empty(l), i, p, identity(e), identity(e));
  r.certificate = {l, origin::initial, obj};
  auto pt = singleton();
  for (auto m : l->minimal_elements()) {
    auto v = ax_sd_vertex(n - 1, m);
    r.minimum_certificates[m] = r_retract(v, point_at(pt, l, m), i, p, identity(pt), identity(pt));
  }
  return r;
}

// Meet case through the complement isomorphisms into P(M) \ M.
inline witness_report meet_semilattice_witness(const poset_ptr& m) {
  const std::size_t n = m->size();
  if (n > meet_route_limit) throw error(errc::size_limit, "meet route limited to 6 elements");
  auto mop = opposite(m);
  auto ne = power_lattice(n, selection::nonempty);
  auto mt = power_lattice(n, selection::minus_top);
  auto ne_op = opposite(ne.order);
  std::vector<std::size_t> img_i(n), img_p(ne.members.size());
  for (std::size_t x = 0; x < n; ++x) img_i[x] = ne.index_of(down_set(*mop, x));
  for (std::size_t a = 0; a < img_p.size(); ++a) img_p[a] = detail::fold_join(*mop, ne.members[a]);
  monotone_map i_op{m, ne_op, img_i};
  monotone_map p_op{ne_op, m, img_p};
  auto complement = [&](const elem_list& s) {
    elem_list c;
    for (std::size_t e = 0; e < n; ++e)
      if (!std::binary_search(s.begin(), s.end(), e)) c.push_back(e);
    return c;
  };
  std::vector<std::size_t> img_phi(ne.members.size()), img_psi(mt.members.size());
  for (std::size_t a = 0; a < img_phi.size(); ++a) img_phi[a] = mt.index_of(complement(ne.members[a]));
  for (std::size_t b = 0; b < img_psi.size(); ++b) img_psi[b] = ne.index_of(complement(mt.members[b]));
  monotone_map phi{ne_op, mt.order, img_phi}, psi{mt.order, ne_op, img_psi};
  auto i = compose(phi, i_op);
  auto p = compose(p_op, psi);
  auto base = bool_minus_top_witness(n - 1);
  auto bottom = m->minimal_elements().front();
  auto pt = singleton();
  auto c = r_retract(base.minimum_certificates.begin()->second, point_at(pt, m, bottom), i, p, identity(pt),
                     identity(pt));
  witness_report r;
  r.theorem = "sliscof";
  r.route = "semilattice";
  r.construction = "meet";
  r.certificate = {m, origin::terminal, c};
  r.minimum_certificates[bottom] = c;
  r.auxiliary.emplace_back("bopcof", base.certificate.cert);
  return r;
}

// Minimum inclusion x of the arrow D = {x < y}, shared by every gluing step.
inline cert_ptr arrow_minimum_certificate() {
  static const cert_ptr c = join_semilattice_witness(ordinal(1)).minimum_certificates.at(0);
  return c;
}

// Stage X_i = [i] -> X_{i+1} = [i+1]: pushout of {*} -> D at x along x_i, renumbered.
inline cert_ptr chain_stage(std::size_t i) {
  auto xi = ordinal(i);
  auto step = r_pushout(arrow_minimum_certificate(), point_at(singleton(), xi, i));
  auto target = ordinal(i + 1);
  std::vector<std::size_t> phi(i + 2);
  for (std::size_t e = 0; e <= i; ++e) phi[step.result.from_right(e)] = e;
  phi[step.result.from_left(1)] = i + 1;
  return r_compose(step.cert, ax_iso(monotone_map{step.result.object, target, phi}));
}

// {*} -> [k] as a sequential colimit of k pushout stages.
inline cert_ptr staged_chain_certificate(std::size_t k) {
  if (k == 0) return ax_iso(identity(ordinal(0)));
  std::vector<cert_ptr> stages;
  for (std::size_t i = 0; i < k; ++i) stages.push_back(chain_stage(i));
  return r_seq_compose(stages);
}

inline witness_report chain_witness(const poset_ptr& p, std::optional<std::size_t> stages = std::nullopt) {
  if (p->empty() || !is_chain(*p)) throw error(errc::not_a_chain, "poset is not a nonempty chain");
  const std::size_t n = p->size() - 1;
  if (stages && *stages > n) throw error(errc::invalid_argument, "stage count exceeds the chain length");
  std::vector<std::size_t> at(n + 1);
  for (std::size_t x = 0; x <= n; ++x) at[p->down(x).count() - 1] = x;
  const std::size_t s = stages.value_or(n);
  auto staged = staged_chain_certificate(s);
  cert_ptr staged_full;
  if (s == n) {
    staged_full = n == 0 ? ax_iso(point_at(singleton(), p, at[0]))
                         : r_compose(staged, ax_iso(monotone_map{ordinal(n), p, at}));
  }
  witness_report r;
  if (p->size() == 1) {
    r = detail::trivial_witness(p, "sliscof");
  } else if (p->size() <= join_route_limit) {
    r = join_semilattice_witness(p);
  } else {
    r.route = "chain";
    r.certificate = {p, origin::terminal, staged_full};
    r.minimum_certificates[at[0]] = staged_full;
  }
  r.theorem = "cacof";
  r.auxiliary.emplace_back(s == n ? "staged" : "staged-prefix", s == n ? staged_full : staged);
  return r;
}

// Single-maximum zigzag x_0 < ... < x_apex > ... > x_{n+1}, element k = x_k.
inline poset_ptr single_max_zigzag(std::size_t len, std::size_t apex) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (k < apex) pairs.emplace_back(k, k + 1);
    else pairs.emplace_back(k + 1, k);
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < len; ++k) labels.push_back("x" + std::to_string(k));
  return make_ptr(poset::from_pairs(len, pairs, labels));
}

struct chaincof_maps {
  poset_ptr zigzag;
  subset_poset simplex;
  monotone_map i;
  monotone_map p;
};

// The explicit retract of the zigzag with n+2 elements into sd(Delta^n).
inline chaincof_maps chaincof_retract(std::size_t len, std::size_t apex) {
  if (len < 3 || apex < 1 || apex + 2 > len) throw error(errc::invalid_argument, "apex must be interior");
  const std::size_t n = len - 2;
  chaincof_maps m;
  m.zigzag = single_max_zigzag(len, apex);
  m.simplex = power_lattice(n + 1, selection::nonempty);
  auto range = [](std::size_t a, std::size_t b) {
    elem_list out;
    for (std::size_t e = a; e <= b; ++e) out.push_back(e);
    return out;
  };
  std::vector<std::size_t> img_i(len), img_p(m.simplex.members.size());
  for (std::size_t k = 0; k < len; ++k) {
    if (k < apex) img_i[k] = m.simplex.index_of(range(0, k));
    else if (k == apex) img_i[k] = m.simplex.index_of(range(0, n));
    else img_i[k] = m.simplex.index_of(range(k - 1, n));
  }
  for (std::size_t a = 0; a < img_p.size(); ++a) {
    const auto& s = m.simplex.members[a];
    if (s.back() < apex) img_p[a] = s.size() - 1;
    else if (s.front() >= apex) img_p[a] = n + 2 - s.size();
    else img_p[a] = apex;
  }
  m.i = {m.zigzag, m.simplex.order, img_i};
  m.p = {m.simplex.order, m.zigzag, img_p};
  return m;
}

inline witness_report single_max_zigzag_witness(std::size_t len, std::size_t apex) {
  const std::size_t n = len - 2;
  if (2 * apex <= n) {
    // reflect so the apex lies past the middle
    auto r = single_max_zigzag_witness(len, n + 1 - apex);
    auto target = single_max_zigzag(len, apex);
    std::vector<std::size_t> rev(len);
    for (std::size_t k = 0; k < len; ++k) rev[k] = len - 1 - k;
    return transport(r, monotone_map{r.object(), target, rev});
  }
  auto m = chaincof_retract(len, apex);
  auto pt = singleton();
  auto at = [&](std::size_t k, std::size_t vertex) {
    return r_retract(ax_sd_vertex(n, vertex), point_at(pt, m.zigzag, k), m.i, m.p, identity(pt), identity(pt));
  };
  witness_report r;
  r.theorem = "chaincof";
  r.route = "zigzag";
  auto first = at(0, 0);
  r.certificate = {m.zigzag, origin::terminal, first};
  r.minimum_certificates[0] = first;
  r.minimum_certificates[len - 1] = at(len - 1, n);
  return r;
}

namespace detail {

// Glues `b` onto `a` at minima ma, mb. Both legs are certified against one
// numbering of the pushout; returns the glued report and the legs.
struct glued {
  witness_report report;
  monotone_map from_a;
  monotone_map from_b;
};

inline glued glue_at_minima(const witness_report& a, std::size_t ma, const witness_report& b, std::size_t mb) {
  auto pt = singleton();
  const auto& ca = a.minimum_certificates.at(ma);
  const auto& cb = b.minimum_certificates.at(mb);
  auto res = pushout(span{ca->conclusion, cb->conclusion});
  auto b_leg = r_pushout_given(ca, cb->conclusion, res.from_right, res.from_left);
  auto a_leg = r_pushout_given(cb, ca->conclusion, res.from_left, res.from_right);
  glued g{witness_report{}, res.from_left, res.from_right};
  g.report.certificate = {res.object, a.certificate.via, r_compose(a.certificate.cert, a_leg)};
  for (const auto& [m, c] : a.minimum_certificates) g.report.minimum_certificates[res.from_left(m)] = r_compose(c, a_leg);
  for (const auto& [m, c] : b.minimum_certificates) {
    auto e = res.from_right(m);
    if (!g.report.minimum_certificates.count(e)) g.report.minimum_certificates[e] = r_compose(c, b_leg);
  }
  return g;
}

}  // namespace detail

inline witness_report zigzag_witness(const poset_ptr& z) {
  if (!is_zigzag(*z)) throw error(errc::not_a_zigzag, "Hasse diagram is not a path");
  if (is_chain(*z)) return chain_witness(z);
  auto zp = zigzag_order(*z);
  const std::size_t len = zp.path.size();
  elem_list minima;
  for (std::size_t k = 0; k < len; ++k)
    if (z->is_minimal(zp.path[k])) minima.push_back(k);

  struct piece {
    witness_report report;
    std::vector<std::size_t> position;  // piece element -> path position
  };
  std::vector<piece> pieces;
  auto chain_piece = [&](std::size_t from, std::size_t to, bool rising) {
    const std::size_t n = to - from;
    piece pc;
    pc.report = chain_witness(ordinal(n));
    pc.position.resize(n + 1);
    for (std::size_t t = 0; t <= n; ++t) pc.position[t] = rising ? from + t : to - t;
    pieces.push_back(std::move(pc));
  };
  if (minima.front() > 0) chain_piece(0, minima.front(), false);
  for (std::size_t j = 0; j + 1 < minima.size(); ++j) {
    const std::size_t a = minima[j], b = minima[j + 1];
    std::size_t apex = a;
    while (zp.up_step[apex]) ++apex;
    piece pc;
    pc.report = single_max_zigzag_witness(b - a + 1, apex - a);
    for (std::size_t t = 0; t <= b - a; ++t) pc.position.push_back(a + t);
    pieces.push_back(std::move(pc));
  }
  if (minima.back() < len - 1) chain_piece(minima.back(), len - 1, true);

  witness_report cur = pieces.front().report;
  std::vector<std::size_t> where(len, len);  // path position -> element of cur
  for (std::size_t t = 0; t < pieces.front().position.size(); ++t) where[pieces.front().position[t]] = t;
  for (std::size_t j = 1; j < pieces.size(); ++j) {
    const auto& pc = pieces[j];
    // consecutive pieces share the minimum at the start of the later one
    auto g = detail::glue_at_minima(cur, where[pc.position.front()], pc.report, 0);
    for (auto& w : where)
      if (w != len) w = g.from_a(w);
    for (std::size_t t = 0; t < pc.position.size(); ++t) where[pc.position[t]] = g.from_b(t);
    cur = std::move(g.report);
  }
  std::vector<std::size_t> phi(len);
  for (std::size_t k = 0; k < len; ++k) phi[where[k]] = zp.path[k];
  auto r = transport(cur, monotone_map{cur.object(), z, phi});
  r.theorem = pieces.size() == 1 ? "chaincof" : "zziscof";
  r.route = "zigzag";
  return r;
}

// Rank-layered colimit: X_{i+1} is the pushout of the coproduct of
// {*} -> D over all (j, k) with rk(j) = i, k a child of j, along h(0_k) = j.
inline witness_report tree_witness(const poset_ptr& t) {
  if (!is_tree_poset(*t)) throw error(errc::not_a_tree, "poset is not a rooted tree");
  auto rk = rank(*t);
  const std::size_t root = t->minimal_elements().front();
  std::size_t height = 0;
  for (auto v : rk) height = std::max(height, v);
  poset_ptr x = singleton(t->label(root));
  std::vector<std::size_t> to_tree{root};
  std::vector<cert_ptr> stages;
  for (std::size_t i = 0; i < height; ++i) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 0; j < t->size(); ++j) {
      if (rk[j] != i) continue;
      for (std::size_t k = 0; k < t->size(); ++k)
        if (rk[k] == i + 1 && t->leq(j, k)) pairs.emplace_back(j, k);
    }
    if (pairs.empty()) break;
    auto copies = r_coproduct(std::vector<cert_ptr>(pairs.size(), arrow_minimum_certificate()));
    std::vector<std::size_t> in_x(t->size(), t->size());
    for (std::size_t e = 0; e < to_tree.size(); ++e) in_x[to_tree[e]] = e;
    std::vector<std::size_t> h(pairs.size());
    for (std::size_t c = 0; c < pairs.size(); ++c) h[c] = in_x[pairs[c].first];
    auto step = r_pushout(copies, monotone_map{copies->conclusion.source, x, h});
    std::vector<std::size_t> next(step.result.object->size());
    for (std::size_t e = 0; e < to_tree.size(); ++e) next[step.result.from_right(e)] = to_tree[e];
    for (std::size_t c = 0; c < pairs.size(); ++c) next[step.result.from_left(2 * c + 1)] = pairs[c].second;
    stages.push_back(step.cert);
    x = step.result.object;
    to_tree = std::move(next);
  }
  monotone_map phi{x, t, to_tree};
  if (!is_isomorphism(phi)) throw error(errc::not_a_tree, "layered colimit is not isomorphic to the tree");
  auto cert = stages.empty() ? ax_iso(phi) : r_compose(r_seq_compose(stages), ax_iso(phi));
  witness_report r;
  r.theorem = "tree";
  r.route = "tree";
  r.certificate = {t, origin::terminal, cert};
  r.minimum_certificates[root] = cert;
  return r;
}

// P from P \ {y}: the maximal element y has the single lower cover q, so P is
// the pushout of {*} -> D at x along q.
inline witness_report glue_pendant(const poset_ptr& p, std::size_t y,
                                   const std::function<witness_report(const poset_ptr&)>& certify) {
  auto low = p->lower_covers(y);
  if (!p->is_maximal(y) || low.size() != 1) throw error(errc::invalid_argument, "element is not a pendant maximum");
  elem_list rest;
  for (std::size_t e = 0; e < p->size(); ++e)
    if (e != y) rest.push_back(e);
  auto [q, incl] = subposet(p, rest);
  auto rq = certify(q);
  const std::size_t qi = std::find(rest.begin(), rest.end(), low.front()) - rest.begin();
  auto step = r_pushout(arrow_minimum_certificate(), point_at(singleton(), q, qi));
  std::vector<std::size_t> phi(p->size());
  for (std::size_t e = 0; e < q->size(); ++e) phi[step.result.from_right(e)] = incl(e);
  phi[step.result.from_left(1)] = y;
  witness_report r;
  r.certificate = {step.result.object, rq.certificate.via, r_compose(rq.certificate.cert, step.cert)};
  for (const auto& [m, c] : rq.minimum_certificates) r.minimum_certificates[step.result.from_right(m)] = r_compose(c, step.cert);
  return transport(r, monotone_map{step.result.object, p, phi});
}

inline std::optional<std::size_t> find_pendant(const poset& p) {
  for (auto y : p.maximal_elements())
    if (p.lower_covers(y).size() == 1) return y;
  return std::nullopt;
}

inline witness_report semilattice_witness(const poset_ptr& p);

// Meet-semilattices that are trees or carry a pendant maximum avoid the
// prefix-chain retract, which is not monotone beyond two ground elements.
inline witness_report meet_semilattice_reduction(const poset_ptr& m) {
  witness_report r;
  if (is_tree_poset(*m)) {
    r = tree_witness(m);
    r.construction = "meet: tree";
  } else if (auto y = find_pendant(*m)) {
    r = glue_pendant(m, *y, semilattice_witness);
    r.construction = "meet: pendant";
  } else {
    return meet_semilattice_witness(m);
  }
  r.theorem = "sliscof";
  r.route = "semilattice";
  return r;
}

inline witness_report semilattice_witness(const poset_ptr& p) {
  if (p->empty()) throw error(errc::not_a_semilattice, "empty poset");
  if (p->size() == 1) return detail::trivial_witness(p, "sliscof");
  if (is_join_semilattice(*p)) return join_semilattice_witness(p);
  if (is_meet_semilattice(*p)) return meet_semilattice_reduction(p);
  throw error(errc::not_a_semilattice, "neither joins nor meets exist for all pairs");
}

}  // namespace cofib
