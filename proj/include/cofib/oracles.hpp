#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cofib/colimit.hpp"
#include "cofib/search.hpp"

// Slow reference implementations that share no code with the searches,
// canonical forms and colimits they are compared against.

namespace cofib::oracle {

using rng = std::mt19937_64;

inline std::size_t below(rng& g, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(g); }

// Strict relation as an n*n bit vector, row-major.
using relation = std::vector<bool>;

inline bool is_strict_order(const relation& r, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    if (r[a * n + a]) return false;
    for (std::size_t b = 0; b < n; ++b) {
      if (!r[a * n + b]) continue;
      if (r[b * n + a]) return false;
      for (std::size_t c = 0; c < n; ++c)
        if (r[b * n + c] && !r[a * n + c]) return false;
    }
  }
  return true;
}

// Least relabeling over all n! permutations.
inline relation min_relabeling(const relation& r, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  relation best;
  do {
    relation s(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s[perm[a] * n + perm[b]] = r[a * n + b];
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool relation_connected(const relation& r, std::size_t n) {
  if (n == 0) return false;
  std::vector<bool> seen(n);
  std::vector<std::size_t> todo{0};
  seen[0] = true;
  while (!todo.empty()) {
    auto a = todo.back();
    todo.pop_back();
    for (std::size_t b = 0; b < n; ++b)
      if ((r[a * n + b] || r[b * n + a]) && !seen[b]) {
        seen[b] = true;
        todo.push_back(b);
      }
  }
  return std::find(seen.begin(), seen.end(), false) == seen.end();
}

struct class_count {
  std::size_t labeled = 0;
  std::size_t classes = 0;
  std::size_t connected = 0;
};

// All 2^(n(n-1)) off-diagonal relations, filtered and quotiented by relabeling.
inline class_count count_by_brute_force(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) cells.emplace_back(a, b);
  class_count out;
  std::set<relation> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells.size()); ++mask) {
    relation r(n * n);
    for (std::size_t k = 0; k < cells.size(); ++k)
      if (mask >> k & 1) r[cells[k].first * n + cells[k].second] = true;
    if (!is_strict_order(r, n)) continue;
    ++out.labeled;
    auto key = min_relabeling(r, n);
    if (seen.insert(key).second) {
      ++out.classes;
      out.connected += relation_connected(key, n);
    }
  }
  return out;
}

inline bool maps_monotone(const poset& src, const poset& dst, const std::vector<std::size_t>& v) {
  for (std::size_t a = 0; a < src.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b)
      if (src.leq(a, b) && !dst.leq(v[a], v[b])) return false;
  return true;
}

// Every map ambient -> B in lexicographic order; the first that is monotone,
// respects the pins and satisfies p . i = id.
inline std::optional<std::vector<std::size_t>> first_retraction(const retraction_query& q) {
  const std::size_t na = q.ambient->size(), nb = q.subobject.source->size();
  if (nb == 0) return na == 0 ? std::optional<std::vector<std::size_t>>(std::vector<std::size_t>{}) : std::nullopt;
  std::vector<std::size_t> v(na, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t b = 0; b < nb && ok; ++b) ok = v[q.subobject.image[b]] == b;
    for (std::size_t y = 0; y < q.pinned.size() && ok; ++y) ok = !q.pinned[y] || v[y] == *q.pinned[y];
    if (ok && maps_monotone(*q.ambient, *q.subobject.source, v)) return v;
    std::size_t k = na;
    while (k > 0 && v[k - 1] + 1 == nb) v[--k] = 0;
    if (k == 0) return std::nullopt;
    ++v[k - 1];
  }
}

// Pushout via the preorder on A + B generated by both orders and the span,
// closed with Floyd-Warshall; nullopt when the quotient is not antisymmetric.
struct pushout_oracle {
  std::size_t size = 0;
  std::vector<std::vector<bool>> leq;  // on classes
  std::vector<std::size_t> left, right;
};

inline std::optional<pushout_oracle> pushout(const monotone_map& l, const monotone_map& r) {
  const std::size_t na = l.target->size(), n = na + r.target->size();
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) m[a][a] = true;
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) m[a][b] = l.target->leq(a, b);
  for (std::size_t a = 0; a < r.target->size(); ++a)
    for (std::size_t b = 0; b < r.target->size(); ++b) m[na + a][na + b] = r.target->leq(a, b);
  for (std::size_t c = 0; c < l.image.size(); ++c) {
    m[l.image[c]][na + r.image[c]] = true;
    m[na + r.image[c]][l.image[c]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (m[a][k])
        for (std::size_t b = 0; b < n; ++b)
          if (m[k][b]) m[a][b] = true;
  // classes of mutual reachability; genuine identifications come only from the span
  std::vector<std::size_t> cls(n, n);
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (cls[a] != n) continue;
    for (std::size_t b = a; b < n; ++b)
      if (m[a][b] && m[b][a]) cls[b] = k;
    ++k;
  }
  // identified only through the span: two elements of one class that the
  // symmetric closure of span identifications alone does not join make a cycle
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) eq[a][a] = true;
  for (std::size_t c = 0; c < l.image.size(); ++c) eq[l.image[c]][na + r.image[c]] = eq[na + r.image[c]][l.image[c]] = true;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t a = 0; a < n; ++a)
      if (eq[a][z])
        for (std::size_t b = 0; b < n; ++b)
          if (eq[z][b]) eq[a][b] = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (cls[a] == cls[b] && !eq[a][b]) return std::nullopt;
  pushout_oracle out;
  out.size = k;
  out.leq.assign(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (m[a][b]) out.leq[cls[a]][cls[b]] = true;
  for (std::size_t a = 0; a < na; ++a) out.left.push_back(cls[a]);
  for (std::size_t b = 0; b < r.target->size(); ++b) out.right.push_back(cls[na + b]);
  return out;
}

// Number of monotone u: P -> Z with u . from_left = cl and u . from_right = cr.
// Each element ranges over the values the legs allow it (all of Z when no leg
// reaches it) and every combination is tested.
inline std::size_t count_mediating(const pushout_result& po, const monotone_map& cl, const monotone_map& cr) {
  const std::size_t np = po.object->size(), nz = cl.target->size();
  std::vector<std::vector<std::size_t>> allowed(np);
  for (std::size_t e = 0; e < np; ++e) {
    for (std::size_t z = 0; z < nz; ++z) {
      bool ok = true;
      for (std::size_t a = 0; a < cl.image.size() && ok; ++a) ok = po.from_left.image[a] != e || cl.image[a] == z;
      for (std::size_t b = 0; b < cr.image.size() && ok; ++b) ok = po.from_right.image[b] != e || cr.image[b] == z;
      if (ok) allowed[e].push_back(z);
    }
    if (allowed[e].empty()) return 0;
  }
  std::size_t count = 0;
  std::vector<std::size_t> at(np, 0), v(np);
  for (;;) {
    for (std::size_t e = 0; e < np; ++e) v[e] = allowed[e][at[e]];
    if (maps_monotone(*po.object, *cl.target, v)) ++count;
    std::size_t k = np;
    while (k > 0 && at[k - 1] + 1 == allowed[k - 1].size()) at[--k] = 0;
    if (k == 0) return count;
    ++at[k - 1];
  }
}

// Random naturally labeled poset: each pair i < j related with probability `density`.
inline poset_ptr random_poset(rng& g, std::size_t n, double density = 0.4) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(g)) pairs.emplace_back(a, b);
  return make_ptr(poset::from_pairs(n, pairs));
}

// Rooted tree: node k > 0 hangs below a uniformly chosen earlier node.
inline poset_ptr random_tree(rng& g, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 1; k < n; ++k) pairs.emplace_back(below(g, k), k);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) labels.push_back("t" + std::to_string(k));
  return make_ptr(poset::from_pairs(n, pairs, labels));
}

// Random maps satisfying `fixed` (element -> required value, or none) and
// monotonicity, by randomized backtracking over a shuffled value order.
inline std::optional<std::vector<std::size_t>> random_monotone_values(rng& g, const poset& src, const poset& dst,
                                                                      const std::vector<std::optional<std::size_t>>& fixed) {
  const std::size_t n = src.size();
  std::vector<std::size_t> v(n);
  std::vector<std::vector<std::size_t>> order(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (fixed.size() > a && fixed[a]) {
      order[a] = {*fixed[a]};
    } else {
      order[a].resize(dst.size());
      std::iota(order[a].begin(), order[a].end(), std::size_t{0});
      std::shuffle(order[a].begin(), order[a].end(), g);
    }
  }
  std::size_t steps = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t a) -> bool {
    if (a == n) return true;
    if (++steps > 100000) return false;
    for (auto val : order[a]) {
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b) {
        if (src.leq(b, a)) ok = dst.leq(v[b], val);
        if (ok && src.leq(a, b)) ok = dst.leq(val, v[b]);
      }
      if (!ok) continue;
      v[a] = val;
      if (go(a + 1)) return true;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return v;
}

inline monotone_map random_monotone(rng& g, const poset_ptr& src, const poset_ptr& dst) {
  auto v = random_monotone_values(g, *src, *dst, {});
  if (!v) throw error(errc::invalid_argument, "no monotone map found");
  return {src, dst, *v};
}

// A random cocone (cl: A -> Z, cr: B -> Z) over the span, found on A + B jointly.
inline std::optional<std::pair<monotone_map, monotone_map>> random_cocone(rng& g, const span& s, const poset_ptr& z) {
  auto [sum, inj] = coproduct({s.left.target, s.right.target});
  const std::size_t na = s.left.target->size();
  for (int attempt = 0; attempt < 50; ++attempt) {
    // fix the span's apex images first, then extend
    std::vector<std::optional<std::size_t>> fixed(sum->size());
    auto base = random_monotone_values(g, *s.right.target, *z, {});
    if (!base) return std::nullopt;
    for (std::size_t c = 0; c < s.left.image.size(); ++c) {
      auto want = (*base)[s.right.image[c]];
      auto& slot = fixed[s.left.image[c]];
      if (slot && *slot != want) {
        fixed.clear();
        break;
      }
      slot = want;
    }
    if (fixed.empty()) continue;
    for (std::size_t b = 0; b < s.right.target->size(); ++b) fixed[na + b] = (*base)[b];
    auto v = random_monotone_values(g, *sum, *z, fixed);
    if (!v) continue;
    monotone_map cl{s.left.target, z, {v->begin(), v->begin() + na}};
    monotone_map cr{s.right.target, z, {v->begin() + na, v->end()}};
    return std::make_pair(cl, cr);
  }
  return std::nullopt;
}

}  // namespace cofib::oracle
