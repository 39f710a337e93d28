#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cofib/enumerate.hpp"
#include "cofib/oracles.hpp"

namespace cofib {

struct suite_options {
  std::uint64_t seed = 1;
  bool strict_axioms = false;
  bool timings = false;  // wall-clock values make the report nondeterministic
};

struct criterion_result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
};

struct trace_row {
  std::string claim;
  std::string tag;
  verdict status = verdict::failed;
  std::string evidence;
};

namespace suite_detail {

using clock = std::chrono::steady_clock;

inline double since(clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); }

inline std::string runtime_line(const suite_options& o, double seconds, double limit) {
  std::ostringstream out;
  out << "runtime ";
  if (o.timings) out << seconds << " s, ";
  out << (seconds < limit ? "within" : "OVER") << " the " << limit << " s limit";
  return out.str();
}

template <class... T>
std::string cat(const T&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

// Shared, lazily computed inputs.
struct context {
  suite_options options;
  std::optional<std::vector<catalog_entry>> certified;
  std::optional<double> certify_seconds;

  const std::vector<catalog_entry>& all() {
    if (!certified) {
      auto t0 = clock::now();
      certified = certify_all(5);
      certify_seconds = since(t0);
    }
    return *certified;
  }
};

inline bool report_ok(const witness_report& r, bool strict, bool* conditional = nullptr) {
  auto c = certify(r);
  if (!c.ok) return false;
  if (conditional) {
    auto v = verify_cofibrant(r.certificate);
    bool cond = v.result(strict) == verdict::conditional;
    for (const auto& [m, mc] : r.minimum_certificates) cond = cond || verify(mc).result(strict) == verdict::conditional;
    *conditional = *conditional || cond;
  }
  return true;
}

inline poset_ptr fence(std::size_t len, std::uint64_t rising) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (rising >> k & 1) pairs.emplace_back(k, k + 1);
    else pairs.emplace_back(k + 1, k);
  }
  return make_ptr(poset::from_pairs(len, pairs));
}

// The object the staged tree construction actually builds, before it is
// identified with the input.
inline poset_ptr layered_object(const cert_ptr& c) {
  if (c->kind == rule::r_compose) return c->premises[0]->conclusion.target;
  return c->conclusion.source;
}

struct mutation {
  std::string what;
  cert_ptr cert;
};

inline cert_ptr with(const certificate& base, const std::function<void(certificate&)>& edit) {
  certificate c = base;
  edit(c);
  return make_cert(std::move(c));
}

inline std::vector<mutation> mutations_of(const cert_ptr& node, const std::vector<cert_ptr>& donors) {
  std::vector<std::vector<mutation>> groups(4);
  const auto& c = *node;
  for (std::size_t x = 0; x < c.conclusion.image.size(); ++x)
    for (std::size_t v = 0; v < c.conclusion.target->size(); ++v)
      if (v != c.conclusion.image[x])
        groups[0].push_back({cat("conclusion s", x, "->t", v), with(c, [&](certificate& m) { m.conclusion.image[x] = v; })});
  if (c.kind == rule::r_pushout) {
    const auto& leg = c.side[0];
    for (std::size_t x = 0; x < leg.image.size(); ++x)
      for (std::size_t v = 0; v < leg.target->size(); ++v)
        if (v != leg.image[x])
          groups[1].push_back({cat("span leg s", x, "->t", v), with(c, [&](certificate& m) { m.side[0].image[x] = v; })});
  }
  if (c.kind == rule::r_retract) {
    const auto& i = c.side[0];
    const auto& p = c.side[1];
    for (std::size_t b = 0; b < i.image.size(); ++b)
      for (std::size_t v = 0; v < p.target->size(); ++v)
        if (v != b)
          groups[1].push_back(
              {cat("retraction p at i(", b, ")->t", v), with(c, [&](certificate& m) { m.side[1].image[i.image[b]] = v; })});
  }
  for (std::size_t k = 0; k < c.premises.size(); ++k) {
    const auto& old = c.premises[k]->conclusion;
    for (std::size_t d = 0; d < donors.size(); ++d) {
      const auto& alt = donors[d]->conclusion;
      if (same_poset(alt.source, old.source) && same_poset(alt.target, old.target)) continue;
      groups[2].push_back({cat("premise ", k, " replaced by donor ", d), with(c, [&](certificate& m) { m.premises[k] = donors[d]; })});
    }
  }
  for (std::size_t a = 0; a < c.args.size(); ++a)
    for (std::size_t v = 0; v < 6; ++v)
      if (v != c.args[a]) groups[3].push_back({cat("argument ", a, " = ", v), with(c, [&](certificate& m) { m.args[a] = v; })});
  std::vector<mutation> out;
  for (auto& g : groups) out.insert(out.end(), g.begin(), g.end());
  return out;
}

inline void collect_nodes(const cert_ptr& c, std::set<const certificate*>& seen, std::vector<cert_ptr>& out) {
  if (!seen.insert(c.get()).second) return;
  out.push_back(c);
  for (const auto& p : c->premises) collect_nodes(p, seen, out);
}

}  // namespace suite_detail

inline criterion_result criterion_counts(suite_detail::context& ctx) {
  using namespace suite_detail;
  criterion_result r{1, "catalog counts", true, {}, 0};
  auto t0 = clock::now();
  const std::size_t total[] = {1, 2, 5, 16, 63}, connected[] = {1, 1, 3, 10, 44};
  const std::size_t semi[] = {1, 1, 3, 8, 25};
  auto rows = counts_table(5);
  for (const auto& row : rows) {
    const auto k = row.n - 1;
    bool ok = row.total == total[k] && row.connected == connected[k] && row.semilattice == semi[k];
    r.details.push_back(cat("n=", row.n, ": ", row.total, " classes, ", row.connected, " connected, ", row.semilattice,
                            " semilattices", ok ? "" : " (expected different)"));
    r.pass = r.pass && ok;
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    auto o = oracle::count_by_brute_force(n);
    bool ok = o.classes == rows[n - 1].total && o.connected == rows[n - 1].connected;
    r.details.push_back(cat("n=", n, " brute force over labeled relations: ", o.labeled, " labeled, ", o.classes,
                            " classes, ", o.connected, " connected", ok ? "" : " (disagrees)"));
    r.pass = r.pass && ok;
  }
  auto row5 = rows[4];
  bool glued = row5.connected - row5.semilattice == 19 && row5.glued == 9;
  r.details.push_back(cat("n=5: ", row5.connected - row5.semilattice, " non-semilattices, ", row5.glued,
                          " glued from a pendant maximum"));
  r.pass = r.pass && glued;
  r.seconds = since(t0);
  r.details.push_back(runtime_line(ctx.options, r.seconds, 10));
  r.pass = r.pass && r.seconds < 10;
  return r;
}

inline criterion_result criterion_main_theorem(suite_detail::context& ctx) {
  using namespace suite_detail;
  criterion_result r{2, "every poset with at most five elements is cofibrant", true, {}, 0};
  const auto& all = ctx.all();
  std::size_t connected = 0, connected_ok = 0, disconnected = 0, disconnected_ok = 0, minima = 0, minima_ok = 0;
  std::map<std::string, std::size_t> routes5;
  for (const auto& e : all) {
    const bool conn = e.tags.has("connected");
    const bool ok = e.result && e.result->ok;
    (conn ? connected : disconnected) += 1;
    (conn ? connected_ok : disconnected_ok) += ok;
    if (e.result) {
      minima += e.result->minima;
      minima_ok += e.result->minima_verified;
    }
    if (!ok) r.details.push_back(cat("FAILED: ", e.tags.joined(), " ", e.result ? e.result->failure : ""));
    if (conn && e.representative->size() == 5 && e.witness) ++routes5[e.witness->route];
  }
  r.details.push_back(cat(connected_ok, "/", connected, " connected classes verified"));
  r.details.push_back(cat(disconnected_ok, "/", disconnected, " disconnected classes verified"));
  r.details.push_back(cat(minima_ok, "/", minima, " minimum inclusions verified"));
  std::string breakdown;
  for (const auto& [route, n] : routes5) breakdown += cat(breakdown.empty() ? "" : ", ", route, " ", n);
  r.details.push_back("n=5 routes: " + breakdown);
  const bool routes_ok = routes5 == std::map<std::string, std::size_t>{{"glued", 9}, {"hand", 9}, {"sd2", 1}, {"semilattice", 25}};
  r.seconds = *ctx.certify_seconds;
  r.details.push_back(runtime_line(ctx.options, r.seconds, 60));
  r.pass = connected == 59 && connected_ok == connected && disconnected_ok == disconnected && minima_ok == minima &&
           routes_ok && r.seconds < 60;
  return r;
}

inline criterion_result criterion_subdivision(suite_detail::context&) {
  using namespace suite_detail;
  criterion_result r{3, "subdivision sizes", true, {}, 0};
  auto t0 = clock::now();
  for (std::size_t n = 0; n <= 5; ++n) {
    auto size = chains_poset(ordinal(n)).order->size();
    bool ok = size == (std::size_t{1} << (n + 1)) - 1;
    r.details.push_back(cat("|chains([", n, "])| = ", size, ok ? "" : " (expected 2^(n+1)-1)"));
    r.pass = r.pass && ok;
  }
  auto sd2 = sd2_simplex(1);
  bool w = sd2->size() == 5 && isomorphic(*sd2, *catalog::w_fence());
  r.details.push_back(cat("sd2_simplex(1): ", sd2->size(), " elements, ", w ? "isomorphic to" : "not isomorphic to",
                          " the W-fence"));
  r.pass = r.pass && w;
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_retract_formulas(suite_detail::context&) {
  using namespace suite_detail;
  criterion_result r{4, "explicit retraction formulas", true, {}, 0};
  auto t0 = clock::now();
  for (std::size_t n = 1; n <= 3; ++n) {
    auto m = bool_minus_top_retract(n);
    bool ok = compose(m.p, m.i) == identity(m.lattice.order);
    r.details.push_back(cat("Boolean lattice minus top, n=", n, ": p.i = id ", ok ? "holds" : "FAILS", "; i is ",
                            is_monotone(m.i) ? "" : "not ", "monotone, p is ", is_monotone(m.p) ? "" : "not ", "monotone"));
    r.pass = r.pass && ok;
  }
  std::size_t count = 0, good = 0;
  for (std::size_t len = 3; len <= 8; ++len) {
    for (std::size_t apex = 1; apex + 2 <= len; ++apex) {
      auto m = chaincof_retract(len, apex);
      ++count;
      good += compose(m.p, m.i) == identity(m.zigzag) && is_monotone(m.i) && is_monotone(m.p);
    }
  }
  r.details.push_back(cat("single-maximum zigzags with 3 to 8 elements: ", good, "/", count,
                          " apex positions with monotone i, p and p.i = id"));
  r.pass = r.pass && good == count;
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_trees(suite_detail::context& ctx) {
  using namespace suite_detail;
  criterion_result r{5, "tree colimits", true, {}, 0};
  auto t0 = clock::now();
  oracle::rng g(ctx.options.seed * 0x9e3779b97f4a7c15ULL + 5);
  std::size_t good = 0, largest = 0;
  for (int k = 0; k < 50; ++k) {
    auto t = oracle::random_tree(g, 1 + oracle::below(g, 15));
    largest = std::max(largest, t->size());
    auto w = tree_witness(t);
    const auto& root_cert = w.minimum_certificates.at(t->minimal_elements().front());
    bool same = canonical(*layered_object(root_cert)) == canonical(*t);
    bool verified = verify(root_cert).ok() && verify_cofibrant(w.certificate).ok();
    good += same && verified;
    if (!(same && verified)) r.details.push_back(cat("tree ", k, " with ", t->size(), " nodes failed"));
  }
  r.details.push_back(cat(good, "/50 random rooted trees (up to ", largest, " nodes): colimit isomorphic, root inclusion verified"));
  r.pass = good == 50;
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_pushouts(suite_detail::context& ctx) {
  using namespace suite_detail;
  criterion_result r{6, "pushout universal property", true, {}, 0};
  auto t0 = clock::now();
  oracle::rng g(ctx.options.seed * 0x9e3779b97f4a7c15ULL + 6);
  std::size_t spans = 0, rejected = 0, cocones = 0, unique = 0, oracle_agree = 0, attempts = 0;
  while (spans < 100 && attempts < 100000) {
    ++attempts;
    auto a = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto b = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto c = oracle::random_poset(g, oracle::below(g, 4));
    span s{oracle::random_monotone(g, c, a), oracle::random_monotone(g, c, b)};
    auto expect = oracle::pushout(s.left, s.right);
    std::optional<pushout_result> po;
    try {
      po = pushout(s);
    } catch (const error& e) {
      if (e.code() != errc::not_a_poset) throw;
    }
    if (po.has_value() != expect.has_value()) {
      r.details.push_back(cat("span ", attempts, ": library and oracle disagree on whether the pushout is a poset"));
      r.pass = false;
      continue;
    }
    if (!po) {
      ++rejected;
      continue;
    }
    ++spans;
    // the oracle's classes must match the library's object through the legs
    bool same = po->object->size() == expect->size;
    std::vector<std::size_t> phi(po->object->size(), expect->size);
    for (std::size_t x = 0; same && x < a->size(); ++x) phi[po->from_left(x)] = expect->left[x];
    for (std::size_t x = 0; same && x < b->size(); ++x) {
      auto& slot = phi[po->from_right(x)];
      if (slot != expect->size && slot != expect->right[x]) same = false;
      slot = expect->right[x];
    }
    for (std::size_t x = 0; same && x < phi.size(); ++x)
      for (std::size_t y = 0; same && y < phi.size(); ++y)
        same = phi[x] != expect->size && po->object->leq(x, y) == expect->leq[phi[x]][phi[y]];
    oracle_agree += same;
    for (int k = 0; k < 20; ++k) {
      auto z = oracle::random_poset(g, 1 + oracle::below(g, 5));
      auto cocone = oracle::random_cocone(g, s, z);
      if (!cocone) {
        r.details.push_back("could not sample a cocone");
        r.pass = false;
        continue;
      }
      ++cocones;
      auto [cl, cr] = *cocone;
      try {
        auto u = mediating_map(*po, cl, cr);
        unique += oracle::count_mediating(*po, cl, cr) == 1 && compose(u, po->from_left) == cl &&
                  compose(u, po->from_right) == cr;
      } catch (const error&) {
      }
    }
  }
  r.details.push_back(cat(spans, " spans with poset pushouts (", rejected, " rejected as cyclic, all agreed by the oracle)"));
  r.details.push_back(cat(oracle_agree, "/", spans, " pushout objects match the independent closure computation"));
  r.details.push_back(cat(unique, "/", cocones, " cocones with exactly one mediating map"));
  r.pass = r.pass && spans == 100 && oracle_agree == spans && cocones == 2000 && unique == cocones;
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_mutations(suite_detail::context& ctx) {
  using namespace suite_detail;
  criterion_result r{7, "verifier mutation robustness", true, {}, 0};
  auto t0 = clock::now();
  std::vector<cert_ptr> roots;
  for (const auto& e : ctx.all()) {
    if (!e.witness) continue;
    roots.push_back(e.witness->certificate.cert);
    for (const auto& [m, c] : e.witness->minimum_certificates) roots.push_back(c);
  }
  oracle::rng g(ctx.options.seed * 0x9e3779b97f4a7c15ULL + 7);
  roots.push_back(tree_witness(oracle::random_tree(g, 12)).certificate.cert);
  roots.push_back(chain_witness(ordinal(12)).certificate.cert);
  roots.push_back(bool_minus_top_certificate(bool_minus_top_retract(1)));
  roots.push_back(ax_sd_mono(identity(ordinal(3))));
  roots.push_back(ax_sd_vertex(4, 2));
  roots.push_back(ax_sd2_boundary(2));
  std::set<const certificate*> seen;
  std::vector<cert_ptr> nodes;
  for (const auto& c : roots) collect_nodes(c, seen, nodes);

  std::map<rule, cert_ptr> largest;
  auto weight = [](const cert_ptr& c) { return c->conclusion.source->size() * c->conclusion.target->size() + c->premises.size(); };
  for (const auto& c : nodes) {
    auto& slot = largest[c->kind];
    if ((!slot || weight(c) > weight(slot)) && verify(c).ok()) slot = c;
  }
  std::vector<cert_ptr> donors;
  for (const auto& [k, c] : largest) donors.push_back(c);
  for (rule k : all_rules) {
    auto it = largest.find(k);
    if (it == largest.end()) {
      r.details.push_back(cat(rule_name(k), ": no passing certificate found"));
      r.pass = false;
      continue;
    }
    auto candidates = mutations_of(it->second, donors);
    std::shuffle(candidates.begin(), candidates.end(), g);
    // keep every mutation kind represented among the twenty
    std::stable_partition(candidates.begin(), candidates.end(), [&, first = std::set<std::string>{}](const mutation& m) mutable {
      return first.insert(m.what.substr(0, m.what.find_first_of("0123456789("))).second;
    });
    if (candidates.size() > 20) candidates.resize(20);
    std::size_t caught = 0;
    std::string escaped;
    for (const auto& m : candidates) {
      if (!verify(m.cert).ok()) ++caught;
      else if (escaped.empty()) escaped = m.what;
    }
    const bool ok = candidates.size() == 20 && caught == 20;
    r.details.push_back(cat(rule_name(k), ": ", caught, "/", candidates.size(), " mutations rejected",
                            escaped.empty() ? "" : " (accepted: " + escaped + ")"));
    r.pass = r.pass && ok;
  }
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_search_oracle(suite_detail::context&) {
  using namespace suite_detail;
  criterion_result r{8, "retraction search against brute force", true, {}, 0};
  auto t0 = clock::now();
  std::size_t checked = 0, agreed = 0;
  for (const auto& e : catalog::entries) {
    for (const auto& q : catalog_witness(e.id).queries) {
      if (q.ambient->size() > 9) continue;
      ++checked;
      auto fast = try_retraction_search(q);
      auto slow = oracle::first_retraction(q);
      bool same = fast.has_value() == slow.has_value() && (!fast || fast->image == *slow);
      agreed += same;
      r.details.push_back(cat(e.id, ": ambient ", q.ambient->size(), ", subobject ", q.subobject.source->size(), ", ",
                              fast ? "retraction found" : "no retraction", same ? ", oracle agrees" : ", ORACLE DISAGREES"));
    }
  }
  r.pass = checked > 0 && agreed == checked;
  r.seconds = since(t0);
  return r;
}

inline criterion_result criterion_staged_chains(suite_detail::context&) {
  using namespace suite_detail;
  criterion_result r{9, "staged chain stability", true, {}, 0};
  auto t0 = clock::now();
  std::size_t good = 0;
  for (std::size_t k = 0; k <= 10; ++k) {
    auto a = staged_chain_certificate(k);
    auto b = staged_chain_certificate(k + 1);
    bool ok = verify(a).ok() && verify(b).ok();
    // b's stages extend a's
    if (k > 0) {
      ok = ok && b->premises.size() == a->premises.size() + 1;
      for (std::size_t s = 0; ok && s < a->premises.size(); ++s) ok = structurally_equal(*a->premises[s], *b->premises[s]);
    }
    // both send the point to the bottom and [k] sits in [k+1] as its first k+1 elements
    elem_list first(k + 1);
    std::iota(first.begin(), first.end(), std::size_t{0});
    auto prefix = subposet(b->conclusion.target, first).first;
    ok = ok && a->conclusion.image == b->conclusion.image && *prefix == *a->conclusion.target;
    std::vector<monotone_map> stages;
    for (const auto& s : b->premises) stages.push_back(s->conclusion);
    auto colim = sequential_colimit(stages);
    const auto& ins = colim.insertions[k];
    ok = ok && ins.image == first;
    good += ok;
    if (!ok) r.details.push_back(cat("stages ", k, " and ", k + 1, " disagree"));
  }
  r.details.push_back(cat(good, "/11 consecutive stage pairs agree on the shared prefix (k = 0..10)"));
  r.pass = good == 11;
  r.seconds = since(t0);
  return r;
}

inline std::vector<criterion_result> run_criteria(suite_detail::context& ctx) {
  return {criterion_counts(ctx),    criterion_main_theorem(ctx), criterion_subdivision(ctx),
          criterion_retract_formulas(ctx), criterion_trees(ctx),       criterion_pushouts(ctx),
          criterion_mutations(ctx), criterion_search_oracle(ctx), criterion_staged_chains(ctx)};
}

inline std::vector<trace_row> traceability(suite_detail::context& ctx) {
  using namespace suite_detail;
  const bool strict = ctx.options.strict_axioms;
  std::vector<trace_row> rows;
  auto add = [&](std::string claim, std::string tag, bool ok, bool conditional, std::string evidence) {
    rows.push_back({std::move(claim), std::move(tag),
                    !ok ? verdict::failed : conditional ? verdict::conditional : verdict::verified, std::move(evidence)});
  };
  auto reports_ok = [&](const std::vector<witness_report>& rs, bool& cond) {
    bool ok = true;
    for (const auto& w : rs) ok = report_ok(w, strict, &cond) && ok;
    return ok;
  };

  {
    bool ok = true;
    for (std::size_t n = 0; n <= 4; ++n)
      for (std::size_t k = 0; k <= n; ++k) ok = ok && verify(ax_sd_vertex(n, k)).ok();
    add("vertex inclusions into subdivided simplices", "sdiscof", ok, false, "AX_SD_VERTEX(n,k), n <= 4");
  }
  {
    cofibrant_certificate c{singleton(), origin::terminal, ax_iso(identity(singleton()))};
    add("point to object through the terminal splice", "imapycof", verify_cofibrant(c).ok(), false,
        "singleton via the terminal origin");
  }
  {
    auto m = bool_minus_top_retract(1);
    auto rep = verify(bool_minus_top_certificate(m));
    bool ident = true;
    for (std::size_t n = 1; n <= 3; ++n) {
      auto mm = bool_minus_top_retract(n);
      ident = ident && compose(mm.p, mm.i) == identity(mm.lattice.order);
    }
    add("Boolean lattice minus its top", "bopcof", rep.ok() && ident, rep.result(strict) == verdict::conditional,
        "n=1 certificate uses AX_SD_MONO; p.i = id for n <= 3; the prefix map stops being monotone at n=2");
  }
  {
    bool cond = false;
    std::vector<witness_report> rs;
    for (std::size_t n = 1; n <= 2; ++n) rs.push_back(witness(sd_simplex(n)));
    add("Boolean lattice minus its bottom", "bnmiscof", reports_ok(rs, cond), cond, "n = 1, 2 with every minimum");
  }
  std::vector<witness_report> semis, small3, small4, small5;
  std::vector<witness_report> p1, p8;
  for (const auto& e : ctx.all()) {
    if (!e.witness || !e.tags.has("connected")) continue;
    if (e.tags.has("join_semilattice") || e.tags.has("meet_semilattice")) semis.push_back(*e.witness);
    auto n = e.representative->size();
    (n <= 3 ? small3 : n == 4 ? small4 : small5).push_back(*e.witness);
    if (e.tags.has("small_catalog(P1)")) p1.push_back(*e.witness);
    if (e.tags.has("small_catalog(P8)")) p8.push_back(*e.witness);
  }
  bool all_ok = true;
  for (const auto& e : ctx.all()) all_ok = all_ok && e.result && e.result->ok;
  {
    bool cond = false;
    bool ok = reports_ok(semis, cond);
    add("finite semilattices", "sliscof", ok, cond, cat(semis.size(), " connected semilattice classes up to 5 elements"));
    add("minimum inclusions into semilattices", "slinccof", ok, cond, "every minimum of those classes");
  }
  {
    bool cond = false;
    std::vector<witness_report> rs;
    for (std::size_t n = 1; n <= 12; ++n) rs.push_back(chain_witness(ordinal(n - 1)));
    add("chains and their minimum", "cacof", reports_ok(rs, cond), cond, "chains with 1 to 12 elements");
  }
  {
    bool cond = false;
    std::vector<witness_report> rs;
    for (std::size_t len = 3; len <= 8; ++len)
      for (std::size_t apex = 1; apex + 2 <= len; ++apex) rs.push_back(single_max_zigzag_witness(len, apex));
    add("zigzags with one maximum", "chaincof", reports_ok(rs, cond), cond, cat(rs.size(), " shapes with 3 to 8 elements"));
  }
  {
    bool cond = false;
    std::vector<witness_report> rs;
    for (std::size_t len = 2; len <= 8; ++len)
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << (len - 1)); ++m) rs.push_back(zigzag_witness(fence(len, m)));
    add("zigzags", "zziscof", reports_ok(rs, cond), cond, cat(rs.size(), " orientation patterns with 2 to 8 elements"));
  }
  {
    bool cond = false;
    std::vector<witness_report> rs;
    std::size_t queries = 0;
    for (const auto& e : catalog::entries) {
      rs.push_back(catalog_witness(e.id));
      queries += rs.back().queries.size();
    }
    add("retract of a pushout of a subdivided simplex", "retpush", reports_ok(rs, cond), cond,
        cat(queries, " retraction searches behind the hand constructions"));
  }
  {
    bool cond = false;
    add("posets with at most three elements", "lt3el", reports_ok(small3, cond), cond, cat(small3.size(), " connected classes"));
  }
  {
    bool cond = false;
    add("four-element posets", "posf", reports_ok(small4, cond), cond, cat(small4.size(), " connected classes"));
  }
  {
    bool cond = false;
    add("the poset P1", "poiscof", !p1.empty() && reports_ok(p1, cond), cond, "all minima");
  }
  {
    bool cond = false;
    add("the poset P8", "peiscof", !p8.empty() && reports_ok(p8, cond), cond, "its minimum");
  }
  {
    bool cond = false;
    bool ok = reports_ok(small5, cond) && all_ok;
    add("posets with at most five elements", "fivecof", ok, cond,
        cat(small5.size(), " connected five-element classes; every class up to 5 elements"));
  }
  {
    bool cond = false;
    oracle::rng g(ctx.options.seed + 11);
    std::vector<witness_report> rs;
    for (int k = 0; k < 10; ++k) rs.push_back(tree_witness(oracle::random_tree(g, 2 + oracle::below(g, 14))));
    add("rooted trees", "tree", reports_ok(rs, cond), cond, "random trees up to 15 nodes");
  }
  return rows;
}

inline std::string criterion_line(const criterion_result& c) {
  return suite_detail::cat("criterion ", c.id, ": ", c.pass ? "PASS" : "FAIL", "  ", c.title);
}

inline void print_criteria(std::ostream& out, const std::vector<criterion_result>& cs, bool details = true) {
  for (const auto& c : cs) {
    out << criterion_line(c) << '\n';
    if (details)
      for (const auto& d : c.details) out << "    " << d << '\n';
  }
}

inline void print_matrix(std::ostream& out, const std::vector<trace_row>& rows) {
  std::size_t wc = 5, wt = 3;
  for (const auto& r : rows) {
    wc = std::max(wc, r.claim.size());
    wt = std::max(wt, r.tag.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << pad("claim", wc) << "  " << pad("tag", wt) << "  " << pad("status", 11) << "  evidence\n";
  for (const auto& r : rows)
    out << pad(r.claim, wc) << "  " << pad(r.tag, wt) << "  " << pad(std::string(verdict_name(r.status)), 11) << "  "
        << r.evidence << '\n';
}

}  // namespace cofib
