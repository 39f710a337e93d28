#pragma once

#include <optional>
#include <vector>

#include "cofib/poset.hpp"

namespace cofib {

namespace detail {

// Least element of `set` if it has one.
inline std::optional<std::size_t> least_of(const poset& p, const bits& set) {
  for (auto z = set.find_first(); z != bits::npos; z = set.find_next(z))
    if (set.is_subset_of(p.up(z))) return z;
  return std::nullopt;
}

inline std::optional<std::size_t> greatest_of(const poset& p, const bits& set) {
  for (auto z = set.find_first(); z != bits::npos; z = set.find_next(z))
    if (set.is_subset_of(p.down(z))) return z;
  return std::nullopt;
}

}  // namespace detail

inline std::optional<std::size_t> join(const poset& p, std::size_t x, std::size_t y) {
  return detail::least_of(p, p.up(x) & p.up(y));
}

inline std::optional<std::size_t> meet(const poset& p, std::size_t x, std::size_t y) {
  return detail::greatest_of(p, p.down(x) & p.down(y));
}

inline bool is_join_semilattice(const poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (!join(p, x, y)) return false;
  return true;
}

inline bool is_meet_semilattice(const poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = x + 1; y < p.size(); ++y)
      if (!meet(p, x, y)) return false;
  return true;
}

inline bool is_semilattice(const poset& p) { return is_join_semilattice(p) || is_meet_semilattice(p); }

inline bool is_chain(const poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((p.up(x) | p.down(x)).count() != p.size()) return false;
  return true;
}

// Undirected Hasse diagram is a simple path.
inline bool is_zigzag(const poset& p) {
  if (p.empty() || !is_connected(p)) return false;
  auto cov = p.covers();
  if (cov.size() != p.size() - 1) return false;
  std::vector<std::size_t> degree(p.size(), 0);
  for (auto [x, y] : cov) {
    if (++degree[x] > 2 || ++degree[y] > 2) return false;
  }
  return true;
}

inline bool is_tree_poset(const poset& p) {
  if (p.minimal_elements().size() != 1) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const bits& d = p.down(x);
    for (auto a = d.find_first(); a != bits::npos; a = d.find_next(a))
      if (!d.is_subset_of(p.up(a) | p.down(a))) return false;
  }
  return true;
}

// Length of the chain from the root.
inline std::vector<std::size_t> rank(const poset& p) {
  if (!is_tree_poset(p)) throw error(errc::not_a_tree, "rank is defined on tree posets");
  std::vector<std::size_t> rk(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) rk[x] = p.down(x).count() - 1;
  return rk;
}

// Single-maximum zigzag as a path x_0 ... x_{n+1} with the apex at index i:
// x_0 < ... < x_i > ... > x_{n+1}. Returns the path (element indices) and i.
struct zigzag_path {
  elem_list path;
  std::vector<bool> up_step;  // up_step[k]: x_k < x_{k+1}
};

inline zigzag_path zigzag_order(const poset& p) {
  if (!is_zigzag(p)) throw error(errc::not_a_zigzag, "Hasse diagram is not a path");
  const std::size_t n = p.size();
  zigzag_path z;
  if (n == 1) {
    z.path = {0};
    return z;
  }
  std::vector<elem_list> adj(n);
  for (auto [x, y] : p.covers()) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  std::size_t start = 0;
  while (adj[start].size() != 1) ++start;
  std::size_t prev = n, cur = start;
  for (;;) {
    z.path.push_back(cur);
    std::size_t next = n;
    for (auto y : adj[cur])
      if (y != prev) next = y;
    if (next == n) break;
    prev = cur;
    cur = next;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) z.up_step.push_back(p.lt(z.path[k], z.path[k + 1]));
  return z;
}

}  // namespace cofib
