#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cofib/witness.hpp"

namespace cofib {

namespace catalog {

using cover_list = std::vector<std::pair<std::string, std::string>>;

inline poset_ptr named(const std::vector<std::string>& labels, const cover_list& covers) {
  return make_ptr(from_covers(labels, covers));
}

inline std::size_t at(const poset& p, std::string_view label) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.label(x) == label) return x;
  throw error(errc::unknown_label, std::string(label));
}

inline poset_ptr arrow() { return named({"x", "y"}, {{"x", "y"}}); }
inline poset_ptr vee() { return named({"x", "y1", "y2"}, {{"x", "y1"}, {"x", "y2"}}); }
inline poset_ptr wedge() { return named({"x1", "x2", "y"}, {{"x1", "y"}, {"x2", "y"}}); }
inline poset_ptr diamond() {
  return named({"b", "l", "r", "t"}, {{"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}});
}
inline poset_ptr n4() { return named({"x1", "x2", "y1", "y2"}, {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}}); }
inline poset_ptr k22() {
  return named({"x1", "x2", "y1", "y2"}, {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}});
}
inline poset_ptr w_fence() {
  return named({"x1", "y1", "x2", "y2", "x3"}, {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y2"}});
}

inline poset_ptr p1() {
  return named({"x1", "x2", "x3", "y1", "y2"},
               {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y1"}, {"x3", "y2"}});
}
inline poset_ptr p2() {
  return named({"x1", "x2", "x3", "y1", "y2"},
               {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}, {"x3", "y1"}, {"x3", "y2"}});
}
inline poset_ptr p3() {
  return named({"x1", "x2", "y1", "y2", "z"}, {{"x1", "y1"}, {"y1", "z"}, {"x1", "y2"}, {"x2", "y2"}, {"x2", "z"}});
}
inline poset_ptr p4() {
  return named({"x", "y1", "y2", "z1", "z2"},
               {{"x", "y1"}, {"y1", "z1"}, {"y1", "z2"}, {"y2", "z1"}, {"y2", "z2"}});
}
inline poset_ptr p5() {
  return named({"x1", "x2", "y", "z1", "z2"}, {{"x1", "y"}, {"x2", "y"}, {"y", "z1"}, {"y", "z2"}});
}
inline poset_ptr p6() {
  return named({"x1", "x2", "y1", "y2", "y3"},
               {{"x1", "y1"}, {"x1", "y2"}, {"x1", "y3"}, {"x2", "y1"}, {"x2", "y2"}, {"x2", "y3"}});
}
inline poset_ptr p7() {
  return named({"x1", "x2", "y1", "y2", "z"},
               {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}, {"y1", "z"}, {"y2", "z"}});
}
inline poset_ptr p8() {
  return named({"x", "y1", "y2", "z1", "z2"},
               {{"x", "y1"}, {"x", "y2"}, {"y1", "z1"}, {"y1", "z2"}, {"y2", "z1"}, {"y2", "z2"}});
}
inline poset_ptr p9() {
  return named({"x1", "x2", "y1", "y2", "z"},
               {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}, {"x2", "y2"}, {"y1", "z"}});
}

struct entry {
  std::string_view id;
  poset_ptr (*make)();
};

// The classes that need a construction of their own.
inline constexpr std::array<entry, 10> entries{{{"K22", k22},
                                                {"P1", p1},
                                                {"P2", p2},
                                                {"P3", p3},
                                                {"P4", p4},
                                                {"P5", p5},
                                                {"P6", p6},
                                                {"P7", p7},
                                                {"P8", p8},
                                                {"P9", p9}}};

inline std::optional<std::string_view> lookup(const poset& p) {
  static const std::vector<std::pair<canonical_form, std::string_view>> keys = [] {
    std::vector<std::pair<canonical_form, std::string_view>> out;
    for (const auto& e : entries) out.emplace_back(canonical(*e.make()), e.id);
    return out;
  }();
  if (p.size() < 4 || p.size() > 5) return std::nullopt;
  auto key = canonical(p);
  for (const auto& [k, id] : keys)
    if (k == key) return id;
  return std::nullopt;
}

}  // namespace catalog

// {*} -> P at t from a certificate for {*} -> X at e, through an isomorphism X -> P.
inline cert_ptr place(const cert_ptr& c, const poset_ptr& p, std::size_t t) {
  const auto& x = c->conclusion.target;
  auto phi = find_isomorphism(x, p, {c->conclusion(0)}, {t});
  if (!phi) throw error(errc::object_mismatch, "construction does not produce the expected poset");
  return r_compose(c, ax_iso(*phi));
}

// The inclusion of m into P as a retract of the certified point inclusion c,
// through an order embedding i: P -> Y with i(m) = c(0) and a retraction p.
inline cert_ptr retract_point(const poset_ptr& p, std::size_t m, const cert_ptr& c,
                              std::vector<retraction_query>& log) {
  const auto& y = c->conclusion.target;
  const auto& pt = c->conclusion.source;
  std::vector<std::optional<std::size_t>> pins(p->size());
  pins[m] = c->conclusion(0);
  cert_ptr out;
  for_each_embedding(p, y, pins, [&](const monotone_map& i) {
    retraction_query q{y, {}, i};
    log.push_back(q);
    auto r = try_retraction_search(q);
    if (!r) return false;
    out = r_retract(c, point_at(pt, p, m), i, *r, identity(pt), identity(pt));
    return true;
  });
  if (!out) throw error(errc::no_retraction, "no embedding of the poset retracts from the ambient");
  return out;
}

struct retpush_result {
  cert_ptr h;      // the multi-point inclusion into q
  cert_ptr alpha;  // {*} -> pushout
  pushout_result glued;
};

// Collapses the points `a` of q to one, after exhibiting their inclusion as a
// retract of the double subdivision of the vertex inclusion `vertices` into [n].
inline retpush_result lemma_retpush(const poset_ptr& q, const elem_list& a, std::size_t n, const elem_list& vertices,
                                    std::vector<retraction_query>& log) {
  if (a.empty() || a.size() != vertices.size()) throw error(errc::invalid_argument, "one vertex per collapsed point");
  auto ax = ax_sd2_mono(monotone_map{antichain(a.size()), ordinal(n), vertices});
  const auto& g = ax->conclusion;
  const auto& src = g.source;
  const auto& y = g.target;
  monotone_map h{src, q, a};
  std::vector<std::optional<std::size_t>> pins(q->size());
  for (std::size_t j = 0; j < a.size(); ++j) pins[a[j]] = g(j);
  cert_ptr hc;
  for_each_embedding(q, y, pins, [&](const monotone_map& i) {
    retraction_query query{y, {}, i};
    log.push_back(query);
    auto p = try_retraction_search(query);
    if (!p) return false;
    hc = r_retract(ax, h, i, *p, identity(src), identity(src));
    return true;
  });
  if (!hc) throw error(errc::no_retraction, "the multi-point inclusion is not a retract of the subdivided simplex");
  auto step = r_pushout(hc, to_point(src, singleton()));
  return {hc, step.cert, step.result};
}

namespace detail {

inline witness_report point_report(const cert_ptr& c, std::string theorem) {
  witness_report r;
  r.theorem = std::move(theorem);
  r.route = "hand";
  r.certificate = {c->conclusion.target, origin::terminal, c};
  r.minimum_certificates[c->conclusion(0)] = c;
  return r;
}

// ξ² of the boundary inclusion of [1]: the two-point inclusion into the W-fence.
inline cert_ptr sd2_interval_boundary() {
  static const cert_ptr c = ax_sd2_mono(monotone_map{antichain(2), ordinal(1), {0, 1}});
  return c;
}

}  // namespace detail

inline const witness_report& k22_witness() {
  static const witness_report r = [] {
    auto ax = detail::sd2_interval_boundary();
    auto step = r_pushout(ax, to_point(ax->conclusion.source, singleton()));
    auto p = catalog::k22();
    auto out = detail::point_report(place(step.cert, p, catalog::at(*p, "x1")), "posf");
    fill_minima_by_symmetry(out);
    return out;
  }();
  return r;
}

inline const witness_report& w_fence_witness() {
  static const witness_report r = [] {
    auto w = catalog::w_fence();
    auto out = zigzag_witness(w);
    auto obj = ax_sd2_mono(from_empty(ordinal(1)));
    out.certificate = {w, origin::initial, r_compose(obj, ax_iso(*find_isomorphism(obj->conclusion.target, w)))};
    for (std::size_t v = 0; v < 2; ++v) {
      auto ax = ax_sd2_mono(point_at(singleton(), ordinal(1), v));
      const std::size_t end = v == 0 ? catalog::at(*w, "x1") : catalog::at(*w, "x3");
      out.minimum_certificates[end] = place(ax, w, end);
    }
    out.theorem = "sd2";
    out.route = "sd2";
    out.construction.clear();
    return out;
  }();
  return r;
}

namespace detail {

inline witness_report n4_witness() {
  auto p = catalog::n4();
  auto r = glue_pendant(p, catalog::at(*p, "y2"), semilattice_witness);
  r.theorem = "posf";
  r.route = "glued";
  return r;
}

// Glues the W-fence onto q at its elements a, b; returns {*} -> result at c.
inline cert_ptr glue_boundary(const witness_report& q, std::size_t a, std::size_t b, std::size_t c) {
  auto ax = sd2_interval_boundary();
  auto step = r_pushout(ax, monotone_map{ax->conclusion.source, q.object(), {a, b}});
  return r_compose(q.minimum_certificates.at(c), step.cert);
}

inline witness_report build_p1(std::vector<retraction_query>& log) {
  auto p = catalog::p1();
  auto tilde = catalog::named({"x2a", "x1", "x3", "x2b", "y1", "y2"},
                              {{"x2a", "y1"}, {"x1", "y1"}, {"x3", "y1"}, {"x3", "y2"}, {"x2b", "y2"}});
  auto rp = lemma_retpush(tilde, {catalog::at(*tilde, "x2a"), catalog::at(*tilde, "x2b")}, 2, {0, 2}, log);
  auto r = point_report(place(rp.alpha, p, catalog::at(*p, "x2")), "P1");
  auto q = n4_witness();
  const auto& qo = *q.object();
  auto via_q = glue_boundary(q, catalog::at(qo, "y1"), catalog::at(qo, "y2"), catalog::at(qo, "x1"));
  r.minimum_certificates[catalog::at(*p, "x1")] = retract_point(p, catalog::at(*p, "x1"), via_q, log);
  return r;
}

inline witness_report build_p2(std::vector<retraction_query>& log) {
  auto p = catalog::p2();
  const auto& q = k22_witness();
  const auto& qo = *q.object();
  auto c = glue_boundary(q, catalog::at(qo, "y1"), catalog::at(qo, "y2"), catalog::at(qo, "x1"));
  return point_report(retract_point(p, catalog::at(*p, "x1"), c, log), "P2");
}

inline witness_report build_p3(std::vector<retraction_query>& log) {
  auto p = catalog::p3();
  auto t1 = catalog::named({"x1a", "x1b", "x2", "y1", "y2", "z"},
                           {{"x1a", "y1"}, {"y1", "z"}, {"x2", "z"}, {"x2", "y2"}, {"x1b", "y2"}});
  auto t2 = catalog::named({"x2a", "x2b", "x1", "y1", "y2", "z"},
                           {{"x2a", "z"}, {"x2b", "y2"}, {"x1", "y1"}, {"y1", "z"}, {"x1", "y2"}});
  auto r1 = lemma_retpush(t1, {catalog::at(*t1, "x1a"), catalog::at(*t1, "x1b")}, 2, {0, 2}, log);
  auto r2 = lemma_retpush(t2, {catalog::at(*t2, "x2a"), catalog::at(*t2, "x2b")}, 2, {0, 2}, log);
  auto r = point_report(place(r1.alpha, p, catalog::at(*p, "x1")), "P3");
  r.minimum_certificates[catalog::at(*p, "x2")] = place(r2.alpha, p, catalog::at(*p, "x2"));
  return r;
}

inline witness_report build_p4(std::vector<retraction_query>& log) {
  auto p = catalog::p4();
  const auto& q = k22_witness();
  const auto& qmin = q.minimum_certificates.at(catalog::at(*q.object(), "x1"));
  auto d_min = arrow_minimum_certificate();
  auto step = r_pushout(qmin, point_at(qmin->conclusion.source, d_min->conclusion.target, 1));
  auto r = point_report(place(r_compose(d_min, step.cert), p, catalog::at(*p, "x")), "P4");
  auto tilde = catalog::named({"x", "y2a", "y1", "y2b", "z1", "z2"},
                              {{"y2a", "z1"}, {"y1", "z1"}, {"y1", "z2"}, {"y2b", "z2"}, {"x", "y1"}});
  auto rp = lemma_retpush(tilde, {catalog::at(*tilde, "y2a"), catalog::at(*tilde, "y2b")}, 2, {0, 1}, log);
  r.minimum_certificates[catalog::at(*p, "y2")] = place(rp.alpha, p, catalog::at(*p, "y2"));
  return r;
}

inline witness_report build_p5() {
  auto p = catalog::p5();
  auto q1 = semilattice_witness(catalog::vee());
  auto q2 = semilattice_witness(catalog::wedge());
  const auto& ya = q1.minimum_certificates.at(catalog::at(*q1.object(), "x"));
  auto step = r_pushout(ya, point_at(ya->conclusion.source, q2.object(), catalog::at(*q2.object(), "y")));
  witness_report r;
  r.certificate = {step.result.object, q2.certificate.via, r_compose(q2.certificate.cert, step.cert)};
  for (const auto& [m, c] : q2.minimum_certificates) r.minimum_certificates[step.result.from_right(m)] = r_compose(c, step.cert);
  r = transport(r, *find_isomorphism(step.result.object, p));
  r.theorem = "P5";
  r.route = "hand";
  return r;
}

inline witness_report build_p6(std::vector<retraction_query>& log) {
  auto p = catalog::p6();
  auto q = catalog::named({"m1a", "m1b", "m1c", "m2", "M1", "M2", "M3"},
                          {{"m1a", "M1"}, {"m1b", "M2"}, {"m1c", "M3"}, {"m2", "M1"}, {"m2", "M2"}, {"m2", "M3"}});
  auto rp = lemma_retpush(q, {catalog::at(*q, "m1a"), catalog::at(*q, "m1b"), catalog::at(*q, "m1c")}, 2, {0, 1, 2},
                          log);
  return point_report(place(rp.alpha, p, catalog::at(*p, "x1")), "P6");
}

// The part S of sd²Δ² on chains of the faces {0} < {01}, {02} < {012}, retracted
// off ξ² of the boundary inclusion, with its boundary part collapsed to a point.
inline witness_report build_p7(std::vector<retraction_query>& log) {
  auto p = catalog::p7();
  auto ax = ax_sd2_boundary(2);
  const auto& g = ax->conclusion;
  auto faces = power_lattice(3, selection::nonempty);
  auto bfaces = power_lattice(3, selection::proper_nonempty);
  auto ys = chains_poset(faces.order);
  auto xs = chains_poset(bfaces.order);
  if (!same_poset(ys.order, g.target) || !same_poset(xs.order, g.source))
    throw error(errc::object_mismatch, "boundary axiom does not match the chain posets");
  const std::vector<elem_list> allowed_faces{{0}, {0, 1}, {0, 2}, {0, 1, 2}};
  bits allowed(faces.members.size());
  for (const auto& f : allowed_faces) allowed.set(faces.index_of(f));
  const std::size_t top = faces.index_of({0, 1, 2});
  elem_list s_elems, b_pos;
  for (std::size_t c = 0; c < ys.chains.size(); ++c) {
    const auto& ch = ys.chains[c];
    if (!std::all_of(ch.begin(), ch.end(), [&](std::size_t f) { return allowed.test(f); })) continue;
    if (std::find(ch.begin(), ch.end(), top) == ch.end()) b_pos.push_back(s_elems.size());
    s_elems.push_back(c);
  }
  auto [s, i] = subposet(g.target, s_elems);
  auto [b, m] = subposet(s, b_pos);
  auto to_boundary = [&](const elem_list& ch) {
    elem_list out;
    for (auto f : ch) out.push_back(bfaces.index_of(faces.members[f]));
    std::sort(out.begin(), out.end());
    return xs.index_of(out);
  };
  std::vector<std::size_t> img_itop(b->size());
  for (std::size_t e = 0; e < b->size(); ++e) img_itop[e] = to_boundary(ys.chains[s_elems[b_pos[e]]]);
  // fold the hexagon onto {0} < {01}, {02}
  auto fold = [&](const elem_list& face) -> elem_list {
    if (face.size() == 1) return {0};
    if (face == elem_list{0, 2}) return {0, 2};
    return {0, 1};
  };
  std::vector<std::size_t> s_index(ys.chains.size(), ys.chains.size());
  for (std::size_t e = 0; e < s_elems.size(); ++e) s_index[s_elems[e]] = e;
  std::vector<std::size_t> b_index(s->size(), s->size());
  for (std::size_t e = 0; e < b_pos.size(); ++e) b_index[b_pos[e]] = e;
  std::vector<std::size_t> img_ptop(xs.chains.size());
  for (std::size_t c = 0; c < xs.chains.size(); ++c) {
    elem_list ch;
    for (auto f : xs.chains[c]) ch.push_back(faces.index_of(fold(bfaces.members[f])));
    std::sort(ch.begin(), ch.end());
    ch.erase(std::unique(ch.begin(), ch.end()), ch.end());
    img_ptop[c] = b_index[s_index[ys.index_of(ch)]];
  }
  monotone_map i_top{b, g.source, img_itop}, p_top{g.source, b, img_ptop};
  std::vector<std::optional<std::size_t>> pins(g.target->size());
  for (std::size_t x = 0; x < g.source->size(); ++x) pins[g(x)] = m(p_top(x));
  retraction_query q{g.target, pins, i};
  log.push_back(q);
  auto pr = retraction_search(q);
  auto hc = r_retract(ax, m, i, pr, i_top, p_top);
  auto step = r_pushout(hc, to_point(b, singleton()));
  return point_report(retract_point(p, catalog::at(*p, "x1"), step.cert, log), "P7");
}

inline witness_report build_p8(std::vector<retraction_query>& log) {
  auto p = catalog::p8();
  auto q = catalog::named({"x", "y1", "y2", "y3", "z1", "z2"},
                          {{"y1", "z1"}, {"y2", "z1"}, {"y2", "z2"}, {"y3", "z2"}, {"x", "y1"}, {"x", "y2"}, {"x", "y3"}});
  auto rv = catalog::vee();
  monotone_map h{rv, q, {catalog::at(*q, "x"), catalog::at(*q, "y1"), catalog::at(*q, "y3")}};
  auto ax = ax_sd2_mono(monotone_map{ordinal(1), ordinal(2), {0, 1}});
  const auto& g = ax->conclusion;
  cert_ptr hc;
  for_each_embedding(rv, g.source, {}, [&](const monotone_map& i_top) {
    retraction_query top{g.source, {}, i_top};
    log.push_back(top);
    auto p_top = try_retraction_search(top);
    if (!p_top) return false;
    std::vector<std::optional<std::size_t>> ipins(q->size());
    for (std::size_t e = 0; e < rv->size(); ++e) ipins[h(e)] = g(i_top(e));
    std::vector<std::optional<std::size_t>> ppins(g.target->size());
    for (std::size_t w = 0; w < g.source->size(); ++w) ppins[g(w)] = h((*p_top)(w));
    for_each_embedding(q, g.target, ipins, [&](const monotone_map& i) {
      for (std::size_t w = 0; w < g.source->size(); ++w) {
        auto y = g(w);
        for (std::size_t e = 0; e < q->size(); ++e)
          if (i(e) == y && *ppins[y] != e) return false;
      }
      retraction_query query{g.target, ppins, i};
      log.push_back(query);
      auto pr = try_retraction_search(query);
      if (!pr) return false;
      hc = r_retract(ax, h, i, *pr, i_top, *p_top);
      return true;
    });
    return hc != nullptr;
  });
  if (!hc) throw error(errc::no_retraction, "no retract of the subdivided edge inclusion found");
  auto d_min = arrow_minimum_certificate();
  const auto& d = d_min->conclusion.target;
  auto step = r_pushout(hc, monotone_map{rv, d, {0, 1, 1}});
  return point_report(place(r_compose(d_min, step.cert), p, catalog::at(*p, "x")), "P8");
}

inline witness_report build_p9(std::vector<retraction_query>& log) {
  auto p = catalog::p9();
  auto tilde = catalog::named({"x1a", "x2", "x1b", "y1", "y2", "z"},
                              {{"y1", "z"}, {"x1a", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x1b", "y2"}});
  auto rp = lemma_retpush(tilde, {catalog::at(*tilde, "x1a"), catalog::at(*tilde, "x1b")}, 2, {0, 1}, log);
  return point_report(place(rp.alpha, p, catalog::at(*p, "x1")), "P9");
}

inline witness_report build_catalog(std::string_view id) {
  std::vector<retraction_query> log;
  witness_report r;
  if (id == "K22") r = k22_witness();
  else if (id == "P1") r = build_p1(log);
  else if (id == "P2") r = build_p2(log);
  else if (id == "P3") r = build_p3(log);
  else if (id == "P4") r = build_p4(log);
  else if (id == "P5") r = build_p5();
  else if (id == "P6") r = build_p6(log);
  else if (id == "P7") r = build_p7(log);
  else if (id == "P8") r = build_p8(log);
  else if (id == "P9") r = build_p9(log);
  else throw error(errc::not_in_catalog, std::string(id));
  r.route = "hand";
  r.queries = std::move(log);
  fill_minima_by_symmetry(r);
  return r;
}

}  // namespace detail

// Catalog reports, built once; their objects are the catalog posets.
inline const witness_report& catalog_witness(std::string_view id) {
  static const std::vector<std::pair<std::string_view, witness_report>> all = [] {
    std::vector<std::pair<std::string_view, witness_report>> out;
    for (const auto& e : catalog::entries) out.emplace_back(e.id, detail::build_catalog(e.id));
    return out;
  }();
  for (const auto& [k, r] : all)
    if (k == id) return r;
  throw error(errc::not_in_catalog, std::string(id));
}

inline witness_report small_poset_witness(const poset_ptr& p) {
  if (p->empty() || p->size() > 5 || !is_connected(*p))
    throw error(errc::not_in_catalog, "small posets are connected with 1 to 5 elements");
  if (is_semilattice(*p)) return semilattice_witness(p);
  if (auto id = catalog::lookup(*p)) {
    const auto& r = catalog_witness(*id);
    auto out = transport(r, *find_isomorphism(r.object(), p));
    out.queries = r.queries;
    return out;
  }
  if (auto y = find_pendant(*p)) {
    auto r = glue_pendant(p, *y, small_poset_witness);
    r.theorem = "posf";
    r.route = "glued";
    r.construction = "pendant";
    return r;
  }
  if (auto phi = find_isomorphism(w_fence_witness().object(), p)) return transport(w_fence_witness(), *phi);
  throw error(errc::not_in_catalog, "no small-poset construction applies");
}

}  // namespace cofib
