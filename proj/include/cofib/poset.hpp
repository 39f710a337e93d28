#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cofib/error.hpp"

namespace cofib {

using bits = boost::dynamic_bitset<std::uint64_t>;
using elem_list = std::vector<std::size_t>;

// A finite partial order stored as two bit matrices: up_[x][y] and down_[y][x]
// both mean x <= y. Labels are for display only and never affect equality.
class poset {
 public:
  poset() = default;

  // Builds from a full reflexive relation given row-wise (up[x][y] iff x <= y)
  // and checks the three order axioms.
  static poset from_relation(std::vector<bits> up, std::vector<std::string> labels = {}) {
    poset p;
    const std::size_t n = up.size();
    p.up_ = std::move(up);
    p.down_.assign(n, bits(n));
    for (std::size_t x = 0; x < n; ++x) {
      if (p.up_[x].size() != n) throw error(errc::invalid_argument, "relation row has wrong width");
      for (auto y = p.up_[x].find_first(); y != bits::npos; y = p.up_[x].find_next(y)) p.down_[y].set(x);
    }
    p.set_labels(std::move(labels));
    p.check_axioms();
    return p;
  }

  // Reflexive-transitive closure of generating pairs (x, y) meaning x <= y.
  // A directed cycle raises `cycle_code`.
  static poset from_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                          std::vector<std::string> labels = {}, errc cycle_code = errc::cycle) {
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [x, y] : pairs) {
      if (x >= n || y >= n) throw error(errc::index_out_of_range, "pair references a missing element");
      if (x == y) throw error(cycle_code, "self-loop on element " + std::to_string(x));
      succ[x].push_back(y);
      ++indeg[y];
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      if (indeg[x] == 0) order.push_back(x);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (auto y : succ[order[i]])
        if (--indeg[y] == 0) order.push_back(y);
    if (order.size() != n) throw error(cycle_code, "generating pairs contain a directed cycle");
    std::vector<bits> up(n, bits(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      up[*it].set(*it);
      for (auto y : succ[*it]) up[*it] |= up[y];
    }
    return from_relation(std::move(up), std::move(labels));
  }

  std::size_t size() const noexcept { return up_.size(); }
  bool empty() const noexcept { return up_.empty(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool lt(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }
  const bits& up(std::size_t x) const { return up_[x]; }
  const bits& down(std::size_t x) const { return down_[x]; }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool operator==(const poset& o) const { return up_ == o.up_; }

  // Hasse diagram: pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x)
      for (auto y : upper_covers(x)) out.emplace_back(x, y);
    return out;
  }

  elem_list upper_covers(std::size_t x) const {
    elem_list out;
    bits strict = up_[x];
    strict.reset(x);
    for (auto y = strict.find_first(); y != bits::npos; y = strict.find_next(y)) {
      bits between = strict & down_[y];
      between.reset(y);
      if (between.none()) out.push_back(y);
    }
    return out;
  }

  elem_list lower_covers(std::size_t y) const {
    elem_list out;
    bits strict = down_[y];
    strict.reset(y);
    for (auto x = strict.find_first(); x != bits::npos; x = strict.find_next(x)) {
      bits between = strict & up_[x];
      between.reset(x);
      if (between.none()) out.push_back(x);
    }
    return out;
  }

  bool is_minimal(std::size_t x) const { return down_[x].count() == 1; }
  bool is_maximal(std::size_t x) const { return up_[x].count() == 1; }

  elem_list minimal_elements() const {
    elem_list out;
    for (std::size_t x = 0; x < size(); ++x)
      if (is_minimal(x)) out.push_back(x);
    return out;
  }

  elem_list maximal_elements() const {
    elem_list out;
    for (std::size_t x = 0; x < size(); ++x)
      if (is_maximal(x)) out.push_back(x);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = size();
    std::vector<std::uint64_t> blocks;
    for (const auto& row : up_) {
      blocks.clear();
      boost::to_block_range(row, std::back_inserter(blocks));
      for (auto b : blocks) h = h * 1000003u ^ std::hash<std::uint64_t>{}(b);
    }
    return h;
  }

 private:
  void set_labels(std::vector<std::string> labels) {
    if (labels.empty()) {
      labels.resize(size());
      for (std::size_t i = 0; i < size(); ++i) labels[i] = std::to_string(i);
    }
    if (labels.size() != size()) throw error(errc::invalid_argument, "label count differs from element count");
    labels_ = std::move(labels);
  }

  void check_axioms() const {
    const std::size_t n = size();
    for (std::size_t x = 0; x < n; ++x) {
      if (!up_[x].test(x)) throw error(errc::not_a_poset, "relation is not reflexive");
      bits both = up_[x] & down_[x];
      if (both.count() != 1) throw error(errc::not_a_poset, "relation is not antisymmetric");
      for (auto y = up_[x].find_first(); y != bits::npos; y = up_[x].find_next(y))
        if (!up_[y].is_subset_of(up_[x])) throw error(errc::not_a_poset, "relation is not transitive");
    }
  }

  std::vector<bits> up_;
  std::vector<bits> down_;
  std::vector<std::string> labels_;
};

using poset_ptr = std::shared_ptr<const poset>;

inline poset_ptr make_ptr(poset p) { return std::make_shared<const poset>(std::move(p)); }

inline bool same_poset(const poset_ptr& a, const poset_ptr& b) {
  return a == b || (a && b && *a == *b);
}

inline poset_ptr empty_poset() {
  static const poset_ptr e = make_ptr(poset{});
  return e;
}

inline poset_ptr singleton(std::string label = "0") {
  return make_ptr(poset::from_pairs(1, {}, {std::move(label)}));
}

// The ordinal [n] = {0 < 1 < ... < n}.
inline poset_ptr ordinal(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i + 1);
  return make_ptr(poset::from_pairs(n + 1, pairs));
}

inline poset_ptr antichain(std::size_t k) { return make_ptr(poset::from_pairs(k, {})); }

// Hasse-diagram input by label, as in the poset file format.
inline poset from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) throw error(errc::invalid_argument, "duplicate label " + labels[i]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw error(errc::unknown_label, a);
    if (ib == index.end()) throw error(errc::unknown_label, b);
    pairs.emplace_back(ia->second, ib->second);
  }
  return poset::from_pairs(labels.size(), pairs, labels);
}

inline poset opposite(const poset& p) {
  std::vector<bits> up(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) up[x] = p.down(x);
  return poset::from_relation(std::move(up), p.labels());
}

inline poset_ptr opposite(const poset_ptr& p) { return make_ptr(opposite(*p)); }

inline elem_list to_list(const bits& b) {
  elem_list out;
  for (auto i = b.find_first(); i != bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

inline elem_list down_set(const poset& p, std::size_t x) { return to_list(p.down(x)); }
inline elem_list up_set(const poset& p, std::size_t x) { return to_list(p.up(x)); }

// Components of the comparability graph, each sorted, ordered by least element.
inline std::vector<elem_list> connected_components(const poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<elem_list> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    elem_list members{s};
    comp[s] = out.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
      bits nb = p.up(members[i]) | p.down(members[i]);
      for (auto y = nb.find_first(); y != bits::npos; y = nb.find_next(y)) {
        if (comp[y] == n) {
          comp[y] = out.size();
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const poset& p) { return connected_components(p).size() == 1; }

struct monotone_map {
  poset_ptr source;
  poset_ptr target;
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t x) const { return image[x]; }
  bool operator==(const monotone_map& o) const {
    return image == o.image && same_poset(source, o.source) && same_poset(target, o.target);
  }
};

inline bool is_well_formed(const monotone_map& f) {
  if (!f.source || !f.target || f.image.size() != f.source->size()) return false;
  return std::all_of(f.image.begin(), f.image.end(), [&](std::size_t y) { return y < f.target->size(); });
}

inline bool is_monotone(const monotone_map& f) {
  if (!is_well_formed(f)) return false;
  const poset& s = *f.source;
  const poset& t = *f.target;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (auto y = s.up(x).find_first(); y != bits::npos; y = s.up(x).find_next(y))
      if (!t.leq(f.image[x], f.image[y])) return false;
  return true;
}

inline bool is_injective(const monotone_map& f) {
  std::vector<std::size_t> v = f.image;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

inline bool is_surjective(const monotone_map& f) {
  std::vector<char> hit(f.target->size(), 0);
  for (auto y : f.image) hit[y] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// Injective, monotone and order-reflecting.
inline bool is_order_embedding(const monotone_map& f) {
  if (!is_monotone(f) || !is_injective(f)) return false;
  const poset& s = *f.source;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y)
      if (f.target->leq(f.image[x], f.image[y]) != s.leq(x, y)) return false;
  return true;
}

inline std::vector<std::size_t> inverse_image(const monotone_map& f) {
  std::vector<std::size_t> inv(f.target->size(), f.source->size());
  for (std::size_t x = 0; x < f.image.size(); ++x) inv[f.image[x]] = x;
  return inv;
}

inline bool is_isomorphism(const monotone_map& f) {
  if (!is_well_formed(f) || f.source->size() != f.target->size()) return false;
  if (!is_injective(f) || !is_monotone(f)) return false;
  monotone_map inv{f.target, f.source, inverse_image(f)};
  return is_monotone(inv);
}

inline monotone_map identity(const poset_ptr& p) {
  std::vector<std::size_t> img(p->size());
  std::iota(img.begin(), img.end(), std::size_t{0});
  return {p, p, std::move(img)};
}

inline monotone_map inverse(const monotone_map& f) {
  if (!is_isomorphism(f)) throw error(errc::invalid_argument, "map is not an isomorphism");
  return {f.target, f.source, inverse_image(f)};
}

// g after f.
inline monotone_map compose(const monotone_map& g, const monotone_map& f) {
  if (!same_poset(f.target, g.source)) throw error(errc::composition_mismatch, "f.target differs from g.source");
  std::vector<std::size_t> img(f.image.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = g.image[f.image[x]];
  return {f.source, g.target, std::move(img)};
}

// The map from the empty poset, or to the singleton.
inline monotone_map from_empty(const poset_ptr& p) { return {empty_poset(), p, {}}; }
inline monotone_map to_point(const poset_ptr& p, const poset_ptr& point) {
  return {p, point, std::vector<std::size_t>(p->size(), 0)};
}
inline monotone_map point_at(const poset_ptr& point, const poset_ptr& p, std::size_t x) { return {point, p, {x}}; }

// Full subposet on `elems` (in the given order) and its inclusion.
inline std::pair<poset_ptr, monotone_map> subposet(const poset_ptr& p, const elem_list& elems) {
  const std::size_t k = elems.size();
  std::vector<bits> up(k, bits(k));
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = p->label(elems[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (p->leq(elems[i], elems[j])) up[i].set(j);
  }
  auto sub = make_ptr(poset::from_relation(std::move(up), std::move(labels)));
  return {sub, monotone_map{sub, p, elems}};
}

// Same order, new numbering: element x of p becomes perm[x].
inline poset_ptr relabel(const poset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::vector<bits> up(n, bits(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    labels[perm[x]] = p.label(x);
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) up[perm[x]].set(perm[y]);
  }
  return make_ptr(poset::from_relation(std::move(up), std::move(labels)));
}

// Disjoint union, with elements of ps[0] first; returns the injections.
inline std::pair<poset_ptr, std::vector<monotone_map>> coproduct(const std::vector<poset_ptr>& ps) {
  std::size_t n = 0;
  for (const auto& p : ps) n += p->size();
  std::vector<bits> up(n, bits(n));
  std::vector<std::string> labels;
  labels.reserve(n);
  std::size_t off = 0;
  for (const auto& p : ps) {
    for (std::size_t x = 0; x < p->size(); ++x) {
      labels.push_back(p->label(x));
      for (std::size_t y = 0; y < p->size(); ++y)
        if (p->leq(x, y)) up[off + x].set(off + y);
    }
    off += p->size();
  }
  auto sum = make_ptr(poset::from_relation(std::move(up), std::move(labels)));
  std::vector<monotone_map> inj;
  off = 0;
  for (const auto& p : ps) {
    std::vector<std::size_t> img(p->size());
    std::iota(img.begin(), img.end(), off);
    inj.push_back({p, sum, std::move(img)});
    off += p->size();
  }
  return {sum, std::move(inj)};
}

}  // namespace cofib
