#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cofib/poset.hpp"

namespace cofib {

inline constexpr std::size_t chain_count_limit = 100000;
inline constexpr std::size_t power_ground_limit = 12;

// The poset of nonempty chains of `base` ordered by inclusion; chains are
// stored as sorted index lists in lexicographic order.
struct chain_poset {
  poset_ptr base;
  std::vector<elem_list> chains;
  poset_ptr order;
  std::map<elem_list, std::size_t> index;

  std::size_t index_of(const elem_list& sorted_chain) const {
    auto it = index.find(sorted_chain);
    if (it == index.end()) throw error(errc::invalid_argument, "not a chain of the base poset");
    return it->second;
  }
};

enum class selection { all, nonempty, proper_nonempty, minus_top };

struct subset_poset {
  std::size_t ground = 0;
  selection rule = selection::all;
  std::vector<elem_list> members;
  poset_ptr order;

  std::size_t index_of(const elem_list& sorted_set) const {
    auto it = std::lower_bound(members.begin(), members.end(), sorted_set);
    if (it == members.end() || *it != sorted_set) throw error(errc::invalid_argument, "subset not selected");
    return static_cast<std::size_t>(it - members.begin());
  }
};

namespace detail {

inline std::string set_label(const elem_list& s, const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += names[s[i]];
  }
  return out + "}";
}

inline void extend_chains(const poset& p, elem_list& cur, const bits& allowed, std::vector<elem_list>& out,
                          std::size_t cap) {
  for (auto y = allowed.find_first(); y != bits::npos; y = allowed.find_next(y)) {
    cur.push_back(y);
    if (out.size() >= cap) throw error(errc::size_limit, "chain count exceeds " + std::to_string(cap));
    out.push_back(cur);
    bits next = allowed & (p.up(y) | p.down(y));
    next.reset(y);
    for (std::size_t z = 0; z <= y; ++z) next.reset(z);
    extend_chains(p, cur, next, out, cap);
    cur.pop_back();
  }
}

inline void extend_subsets(std::size_t ground, elem_list& cur, std::size_t from, std::vector<elem_list>& out) {
  for (std::size_t y = from; y < ground; ++y) {
    cur.push_back(y);
    out.push_back(cur);
    extend_subsets(ground, cur, y + 1, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline chain_poset chains_poset(const poset_ptr& p) {
  chain_poset cp;
  cp.base = p;
  elem_list cur;
  bits all(p->size());
  all.set();
  detail::extend_chains(*p, cur, all, cp.chains, chain_count_limit);
  const std::size_t n = cp.chains.size();
  for (std::size_t i = 0; i < n; ++i) cp.index.emplace(cp.chains[i], i);
  std::vector<bits> up(n, bits(n));
  std::vector<std::string> labels(n);
  for (std::size_t d = 0; d < n; ++d) {
    const elem_list& chain = cp.chains[d];
    labels[d] = detail::set_label(chain, p->labels());
    const std::size_t len = chain.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
      elem_list sub;
      for (std::size_t b = 0; b < len; ++b)
        if (mask >> b & 1) sub.push_back(chain[b]);
      up[cp.index.at(sub)].set(d);
    }
  }
  cp.order = make_ptr(poset::from_relation(std::move(up), std::move(labels)));
  return cp;
}

// Chain C goes to the chain f(C); a chain because f is monotone.
inline monotone_map chains_map(const monotone_map& f, const chain_poset& src, const chain_poset& dst) {
  std::vector<std::size_t> img(src.chains.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    elem_list c;
    for (auto x : src.chains[i]) c.push_back(f.image[x]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    img[i] = dst.index_of(c);
  }
  return {src.order, dst.order, std::move(img)};
}

inline monotone_map chains_map(const monotone_map& f) {
  if (!is_monotone(f)) throw error(errc::not_monotone, "chains_map needs a monotone map");
  return chains_map(f, chains_poset(f.source), chains_poset(f.target));
}

inline monotone_map chains_map2(const monotone_map& f) { return chains_map(chains_map(f)); }

inline subset_poset power_lattice(std::size_t ground, selection rule) {
  if (ground > power_ground_limit) throw error(errc::size_limit, "power lattice ground set too large");
  subset_poset sp;
  sp.ground = ground;
  sp.rule = rule;
  std::vector<elem_list> all;
  all.push_back({});
  elem_list cur;
  detail::extend_subsets(ground, cur, 0, all);
  for (auto& s : all) {
    bool keep = true;
    if (s.empty() && (rule == selection::nonempty || rule == selection::proper_nonempty)) keep = false;
    if (s.size() == ground && (rule == selection::proper_nonempty || rule == selection::minus_top)) keep = false;
    if (keep) sp.members.push_back(std::move(s));
  }
  const std::size_t n = sp.members.size();
  std::vector<std::uint32_t> masks(n, 0);
  std::vector<std::string> names(ground), labels(n);
  for (std::size_t i = 0; i < ground; ++i) names[i] = std::to_string(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto e : sp.members[i]) masks[i] |= std::uint32_t{1} << e;
    labels[i] = detail::set_label(sp.members[i], names);
  }
  std::vector<bits> up(n, bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((masks[a] & ~masks[b]) == 0) up[a].set(b);
  sp.order = make_ptr(poset::from_relation(std::move(up), std::move(labels)));
  return sp;
}

inline poset_ptr sd_simplex(std::size_t n) { return power_lattice(n + 1, selection::nonempty).order; }

inline std::pair<poset_ptr, monotone_map> sd_boundary(std::size_t n) {
  if (n < 1) throw error(errc::invalid_argument, "boundary needs n >= 1");
  auto full = power_lattice(n + 1, selection::nonempty);
  auto bd = power_lattice(n + 1, selection::proper_nonempty);
  std::vector<std::size_t> img;
  for (const auto& s : bd.members) img.push_back(full.index_of(s));
  return {bd.order, monotone_map{bd.order, full.order, std::move(img)}};
}

inline poset_ptr sd2_simplex(std::size_t n) {
  if (n > 2) throw error(errc::size_limit, "sd2_simplex supports n <= 2");
  return chains_poset(sd_simplex(n)).order;
}

inline std::pair<poset_ptr, monotone_map> sd2_boundary(std::size_t n) {
  if (n > 2) throw error(errc::size_limit, "sd2_boundary supports n <= 2");
  auto [bd, inc] = sd_boundary(n);
  auto m = chains_map(inc);
  return {m.source, m};
}

inline monotone_map vertex_inclusion(std::size_t n, std::size_t k) {
  if (k > n) throw error(errc::index_out_of_range, "vertex index exceeds n");
  auto sp = power_lattice(n + 1, selection::nonempty);
  return {singleton(), sp.order, {sp.index_of({k})}};
}

}  // namespace cofib
