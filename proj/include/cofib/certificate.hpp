#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cofib/colimit.hpp"
#include "cofib/functors.hpp"
#include "cofib/poset.hpp"

namespace cofib {

enum class rule {
  ax_sd_vertex,
  ax_sd2_mono,
  ax_sd_mono,
  ax_sd2_boundary,
  ax_iso,
  r_compose,
  r_pushout,
  r_retract,
  r_coproduct,
  r_seq_compose,
};

inline constexpr rule all_rules[] = {rule::ax_sd_vertex, rule::ax_sd2_mono,  rule::ax_sd_mono,
                                     rule::ax_sd2_boundary, rule::ax_iso,   rule::r_compose,
                                     rule::r_pushout,   rule::r_retract,    rule::r_coproduct,
                                     rule::r_seq_compose};

inline std::string_view rule_name(rule r) {
  switch (r) {
    case rule::ax_sd_vertex: return "AX_SD_VERTEX";
    case rule::ax_sd2_mono: return "AX_SD2_MONO";
    case rule::ax_sd_mono: return "AX_SD_MONO";
    case rule::ax_sd2_boundary: return "AX_SD2_BOUNDARY";
    case rule::ax_iso: return "AX_ISO";
    case rule::r_compose: return "R_COMPOSE";
    case rule::r_pushout: return "R_PUSHOUT";
    case rule::r_retract: return "R_RETRACT";
    case rule::r_coproduct: return "R_COPRODUCT";
    case rule::r_seq_compose: return "R_SEQ_COMPOSE";
  }
  return "?";
}

inline std::optional<rule> rule_from_name(std::string_view s) {
  for (rule r : all_rules)
    if (rule_name(r) == s) return r;
  return std::nullopt;
}

// Number of side maps and integer arguments each rule carries.
inline std::size_t side_map_count(rule r) {
  switch (r) {
    case rule::ax_sd2_mono:
    case rule::ax_sd_mono: return 1;  // f
    case rule::r_pushout: return 3;   // left, right, companion
    case rule::r_retract: return 4;   // i, p, iTop, pTop
    default: return 0;
  }
}

inline std::size_t arg_count(rule r) {
  switch (r) {
    case rule::ax_sd_vertex: return 2;
    case rule::ax_sd2_boundary: return 1;
    default: return 0;
  }
}

struct certificate;
using cert_ptr = std::shared_ptr<const certificate>;

// A derivation that `conclusion` is a cofibration.
struct certificate {
  rule kind = rule::ax_iso;
  monotone_map conclusion;
  std::vector<cert_ptr> premises;
  std::vector<monotone_map> side;
  std::vector<std::size_t> args;
};

inline bool structurally_equal(const certificate& a, const certificate& b) {
  if (a.kind != b.kind || a.args != b.args || !(a.conclusion == b.conclusion)) return false;
  if (a.side.size() != b.side.size() || a.premises.size() != b.premises.size()) return false;
  for (std::size_t i = 0; i < a.side.size(); ++i)
    if (!(a.side[i] == b.side[i])) return false;
  for (std::size_t i = 0; i < a.premises.size(); ++i)
    if (a.premises[i] != b.premises[i] && !structurally_equal(*a.premises[i], *b.premises[i])) return false;
  return true;
}

inline cert_ptr make_cert(certificate c) { return std::make_shared<const certificate>(std::move(c)); }

inline cert_ptr ax_sd_vertex(std::size_t n, std::size_t k) {
  return make_cert({rule::ax_sd_vertex, vertex_inclusion(n, k), {}, {}, {n, k}});
}

inline cert_ptr ax_sd2_mono(const monotone_map& f) {
  return make_cert({rule::ax_sd2_mono, chains_map2(f), {}, {f}, {}});
}

inline cert_ptr ax_sd_mono(const monotone_map& f) { return make_cert({rule::ax_sd_mono, chains_map(f), {}, {f}, {}}); }

inline cert_ptr ax_sd2_boundary(std::size_t n) {
  return make_cert({rule::ax_sd2_boundary, sd2_boundary(n).second, {}, {}, {n}});
}

inline cert_ptr ax_iso(const monotone_map& f) { return make_cert({rule::ax_iso, f, {}, {}, {}}); }

// c2 after c1.
inline cert_ptr r_compose(const cert_ptr& c1, const cert_ptr& c2) {
  return make_cert({rule::r_compose, compose(c2->conclusion, c1->conclusion), {c1, c2}, {}, {}});
}

inline cert_ptr compose_all(const std::vector<cert_ptr>& cs) {
  cert_ptr acc = cs.front();
  for (std::size_t i = 1; i < cs.size(); ++i) acc = r_compose(acc, cs[i]);
  return acc;
}

// Pushout of the certified leg c (apex -> A) along `other` (apex -> B); the
// conclusion is the new leg B -> P.
struct pushout_step {
  cert_ptr cert;
  pushout_result result;
};

inline pushout_step r_pushout(const cert_ptr& c, const monotone_map& other) {
  auto res = pushout(span{c->conclusion, other});
  auto cert = make_cert({rule::r_pushout, res.from_right, {c}, {c->conclusion, other, res.from_left}, {}});
  return {cert, res};
}

// Same rule with the pushout legs supplied, e.g. to express both legs of one
// gluing against a single numbering of the pushout object.
inline cert_ptr r_pushout_given(const cert_ptr& c, const monotone_map& other, const monotone_map& conclusion,
                                const monotone_map& companion) {
  return make_cert({rule::r_pushout, conclusion, {c}, {c->conclusion, other, companion}, {}});
}

// f is a retract of c.conclusion (g: X -> Y): i: B -> Y, p: Y -> B,
// iTop: A -> X, pTop: X -> A.
inline cert_ptr r_retract(const cert_ptr& c, const monotone_map& f, const monotone_map& i, const monotone_map& p,
                          const monotone_map& i_top, const monotone_map& p_top) {
  return make_cert({rule::r_retract, f, {c}, {i, p, i_top, p_top}, {}});
}

inline cert_ptr r_coproduct(const std::vector<cert_ptr>& cs) {
  std::vector<monotone_map> fs;
  for (const auto& c : cs) fs.push_back(c->conclusion);
  return make_cert({rule::r_coproduct, coproduct_of_maps(fs), cs, {}, {}});
}

inline cert_ptr r_seq_compose(const std::vector<cert_ptr>& stages) {
  std::vector<monotone_map> fs;
  for (const auto& c : stages) fs.push_back(c->conclusion);
  auto colim = sequential_colimit(fs);
  return make_cert({rule::r_seq_compose, colim.insertions.front(), stages, {}, {}});
}

enum class origin { initial, terminal };

struct cofibrant_certificate {
  poset_ptr object;
  origin via = origin::initial;
  cert_ptr cert;  // for empty -> object, or singleton -> object
};

// The canonical certificate for the empty poset into the singleton: the
// double subdivision of the empty injection into [0].
inline cert_ptr initial_to_point() {
  static const cert_ptr c = ax_sd2_mono(from_empty(ordinal(0)));
  return c;
}

inline cert_ptr as_initial(const cofibrant_certificate& c) {
  return c.via == origin::initial ? c.cert : r_compose(initial_to_point(), c.cert);
}

struct check {
  std::string path;
  std::string rule;
  std::string condition;
  bool pass = false;
};

enum class verdict { verified, conditional, failed };

inline std::string_view verdict_name(verdict v) {
  switch (v) {
    case verdict::verified: return "VERIFIED";
    case verdict::conditional: return "CONDITIONAL";
    case verdict::failed: return "FAILED";
  }
  return "?";
}

struct verification_report {
  std::vector<check> checks;
  bool uses_sd_mono = false;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  verdict result(bool strict_axioms = false) const {
    if (!ok()) return verdict::failed;
    if (strict_axioms && uses_sd_mono) return verdict::conditional;
    return verdict::verified;
  }
};

namespace detail {

class verifier {
 public:
  explicit verifier(verification_report& r) : report_(r) {}

  bool node(const certificate& c, const std::string& path) {
    auto seen = done_.find(&c);
    if (seen != done_.end()) {
      add(path, c, "shared premise already checked at " + seen->second.first, seen->second.second);
      return seen->second.second;
    }
    bool ok = true;
    try {
      ok = node_impl(c, path);
    } catch (const std::exception& e) {
      ok = add(path, c, std::string("recomputation raised ") + e.what(), false);
    }
    done_.emplace(&c, std::make_pair(path, ok));
    return ok;
  }

 private:
  bool add(const std::string& path, const certificate& c, std::string cond, bool pass) {
    report_.checks.push_back({path, std::string(rule_name(c.kind)), std::move(cond), pass});
    return pass;
  }

  bool premises(const certificate& c, const std::string& path, std::size_t expected) {
    bool ok = add(path, c, "premise count " + std::to_string(expected),
                  expected == std::size_t(-1) || c.premises.size() == expected);
    for (std::size_t k = 0; k < c.premises.size(); ++k) {
      if (!c.premises[k]) {
        ok = add(path, c, "premise present", false) && ok;
        continue;
      }
      ok = node(*c.premises[k], path + "." + std::to_string(k)) && ok;
    }
    return ok;
  }

  bool well_formed(const certificate& c, const std::string& path) {
    bool ok = add(path, c, "side data shape", c.side.size() == side_map_count(c.kind) &&
                                                   c.args.size() == arg_count(c.kind));
    ok = add(path, c, "conclusion well-formed and monotone", is_monotone(c.conclusion)) && ok;
    for (std::size_t k = 0; k < c.side.size(); ++k)
      ok = add(path, c, "side map " + std::to_string(k) + " monotone", is_monotone(c.side[k])) && ok;
    return ok;
  }

  bool node_impl(const certificate& c, const std::string& path) {
    if (!well_formed(c, path)) return false;
    switch (c.kind) {
      case rule::ax_sd_vertex: {
        bool ok = premises(c, path, 0);
        return add(path, c, "conclusion = vertex_inclusion(n,k)",
                   c.args[1] <= c.args[0] && c.conclusion == vertex_inclusion(c.args[0], c.args[1])) && ok;
      }
      case rule::ax_sd2_mono:
      case rule::ax_sd_mono: {
        bool ok = premises(c, path, 0);
        const auto& f = c.side[0];
        ok = add(path, c, "base map injective", is_injective(f)) && ok;
        if (!ok) return false;
        bool twice = c.kind == rule::ax_sd2_mono;
        if (!twice) report_.uses_sd_mono = true;
        return add(path, c, twice ? "conclusion = xi(xi(f))" : "conclusion = xi(f)",
                   c.conclusion == (twice ? chains_map2(f) : chains_map(f)));
      }
      case rule::ax_sd2_boundary: {
        bool ok = premises(c, path, 0);
        return add(path, c, "conclusion = xi of the boundary inclusion",
                   c.args[0] >= 1 && c.args[0] <= 2 && c.conclusion == sd2_boundary(c.args[0]).second) && ok;
      }
      case rule::ax_iso: {
        bool ok = premises(c, path, 0);
        return add(path, c, "conclusion is an isomorphism", is_isomorphism(c.conclusion)) && ok;
      }
      case rule::r_compose: {
        bool ok = premises(c, path, 2);
        if (c.premises.size() != 2 || !c.premises[0] || !c.premises[1]) return false;
        const auto& f = c.premises[0]->conclusion;
        const auto& g = c.premises[1]->conclusion;
        if (!add(path, c, "premises composable (CompositionMismatch otherwise)", same_poset(f.target, g.source)))
          return false;
        return add(path, c, "conclusion = c2 . c1", c.conclusion == compose(g, f)) && ok;
      }
      case rule::r_pushout: return pushout_node(c, path);
      case rule::r_retract: return retract_node(c, path);
      case rule::r_coproduct: {
        bool ok = premises(c, path, std::size_t(-1));
        std::vector<monotone_map> fs;
        for (const auto& pc : c.premises)
          if (pc) fs.push_back(pc->conclusion);
        return add(path, c, "conclusion = coproduct of premise conclusions",
                   fs.size() == c.premises.size() && c.conclusion == coproduct_of_maps(fs)) && ok;
      }
      case rule::r_seq_compose: {
        bool ok = premises(c, path, std::size_t(-1));
        if (!add(path, c, "at least one stage", !c.premises.empty())) return false;
        std::vector<monotone_map> fs;
        for (const auto& pc : c.premises)
          if (pc) fs.push_back(pc->conclusion);
        bool composable = fs.size() == c.premises.size();
        for (std::size_t k = 1; composable && k < fs.size(); ++k)
          composable = same_poset(fs[k - 1].target, fs[k].source);
        if (!add(path, c, "stages composable", composable)) return false;
        return add(path, c, "conclusion = insertion of the first stage",
                   c.conclusion == sequential_colimit(fs).insertions.front()) && ok;
      }
    }
    return add(path, c, "known rule", false);
  }

  bool pushout_node(const certificate& c, const std::string& path) {
    bool ok = premises(c, path, 1);
    if (c.premises.size() != 1 || !c.premises[0]) return false;
    const auto& left = c.side[0];
    const auto& right = c.side[1];
    const auto& companion = c.side[2];
    ok = add(path, c, "certified leg = premise conclusion", c.premises[0]->conclusion == left) && ok;
    bool shape = same_poset(left.source, right.source) && same_poset(companion.source, left.target) &&
                 same_poset(c.conclusion.source, right.target) && same_poset(companion.target, c.conclusion.target);
    if (!add(path, c, "span and legs have matching ends", shape)) return false;
    ok = add(path, c, "square commutes", compose(companion, left) == compose(c.conclusion, right)) && ok;
    auto res = pushout(span{left, right});
    const std::size_t n = res.object->size();
    const std::size_t none = c.conclusion.target->size();
    std::vector<std::size_t> phi(n, none);
    bool consistent = true;
    auto pair = [&](std::size_t e, std::size_t v) {
      if (phi[e] != none && phi[e] != v) consistent = false;
      phi[e] = v;
    };
    for (std::size_t x = 0; x < companion.image.size(); ++x) pair(res.from_left.image[x], companion.image[x]);
    for (std::size_t x = 0; x < c.conclusion.image.size(); ++x) pair(res.from_right.image[x], c.conclusion.image[x]);
    bool iso = consistent && n == none && is_isomorphism(monotone_map{res.object, c.conclusion.target, phi});
    return add(path, c, "stored legs match the recomputed pushout up to a compatible isomorphism", iso) && ok;
  }

  bool retract_node(const certificate& c, const std::string& path) {
    bool ok = premises(c, path, 1);
    if (c.premises.size() != 1 || !c.premises[0]) return false;
    const auto& g = c.premises[0]->conclusion;  // X -> Y
    const auto& f = c.conclusion;               // A -> B
    const auto& i = c.side[0];                  // B -> Y
    const auto& p = c.side[1];                  // Y -> B
    const auto& it = c.side[2];                 // A -> X
    const auto& pt = c.side[3];                 // X -> A
    bool shape = same_poset(i.source, f.target) && same_poset(i.target, g.target) && same_poset(p.source, g.target) &&
                 same_poset(p.target, f.target) && same_poset(it.source, f.source) &&
                 same_poset(it.target, g.source) && same_poset(pt.source, g.source) && same_poset(pt.target, f.source);
    if (!add(path, c, "comparison maps have matching ends", shape)) return false;
    ok = add(path, c, "p . i = id", compose(p, i) == identity(f.target)) && ok;
    ok = add(path, c, "pTop . iTop = id", compose(pt, it) == identity(f.source)) && ok;
    ok = add(path, c, "g . iTop = i . f", compose(g, it) == compose(i, f)) && ok;
    ok = add(path, c, "f . pTop = p . g", compose(f, pt) == compose(p, g)) && ok;
    return ok;
  }

  verification_report& report_;
  std::map<const certificate*, std::pair<std::string, bool>> done_;
};

}  // namespace detail

inline verification_report verify(const certificate& c) {
  verification_report r;
  detail::verifier(r).node(c, "root");
  return r;
}

inline verification_report verify(const cert_ptr& c) { return verify(*c); }

inline verification_report verify_cofibrant(const cofibrant_certificate& c) {
  verification_report r;
  auto note = [&](std::string cond, bool pass) { r.checks.push_back({"object", "COFIBRANT", std::move(cond), pass}); };
  if (!c.cert || !c.object) {
    note("certificate present", false);
    return r;
  }
  note("conclusion targets the object", same_poset(c.cert->conclusion.target, c.object));
  if (c.via == origin::initial) {
    note("source is the empty poset", c.cert->conclusion.source->empty());
  } else {
    note("source is the singleton", c.cert->conclusion.source->size() == 1);
  }
  if (!r.ok()) return r;
  auto full = c.via == origin::initial ? c.cert : as_initial(c);
  detail::verifier(r).node(*full, "root");
  return r;
}

}  // namespace cofib
