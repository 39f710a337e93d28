#pragma once

#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cofib/poset.hpp"

namespace cofib {

struct span {
  monotone_map left;   // apex -> A
  monotone_map right;  // apex -> B
  const poset_ptr& apex() const { return left.source; }
};

struct pushout_result {
  poset_ptr object;
  monotone_map from_left;
  monotone_map from_right;
};

inline pushout_result pushout(const span& s) {
  if (!same_poset(s.left.source, s.right.source))
    throw error(errc::composition_mismatch, "span legs have different apexes");
  const poset& a = *s.left.target;
  const poset& b = *s.right.target;
  const std::size_t na = a.size(), n = na + b.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < s.left.image.size(); ++c) {
    std::size_t x = find(s.left.image[c]), y = find(na + s.right.image[c]);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  // classes numbered by least original index
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = find(x);
    if (cls[r] == n) {
      cls[r] = rep.size();
      rep.push_back(x);
    }
    cls[x] = cls[r];
  }
  const std::size_t k = rep.size();
  std::vector<bits> up(k, bits(k));
  for (std::size_t x = 0; x < na; ++x)
    for (auto y = a.up(x).find_first(); y != bits::npos; y = a.up(x).find_next(y)) up[cls[x]].set(cls[y]);
  for (std::size_t x = 0; x < b.size(); ++x)
    for (auto y = b.up(x).find_first(); y != bits::npos; y = b.up(x).find_next(y))
      up[cls[na + x]].set(cls[na + y]);
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t x = 0; x < k; ++x)
      if (up[x].test(m)) up[x] |= up[m];
  for (std::size_t x = 0; x < k; ++x)
    for (auto y = up[x].find_first(); y != bits::npos; y = up[x].find_next(y))
      if (y != x && up[y].test(x)) throw error(errc::not_a_poset, "pushout preorder has a nontrivial cycle");
  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) labels[c] = rep[c] < na ? a.label(rep[c]) : b.label(rep[c] - na);
  auto obj = make_ptr(poset::from_relation(std::move(up), std::move(labels)));
  std::vector<std::size_t> il(na), ir(b.size());
  for (std::size_t x = 0; x < na; ++x) il[x] = cls[x];
  for (std::size_t x = 0; x < b.size(); ++x) ir[x] = cls[na + x];
  return {obj, {s.left.target, obj, std::move(il)}, {s.right.target, obj, std::move(ir)}};
}

// The unique u with u . from_left = cocone_left and u . from_right = cocone_right.
inline monotone_map mediating_map(const pushout_result& r, const monotone_map& cocone_left,
                                  const monotone_map& cocone_right) {
  if (!same_poset(cocone_left.source, r.from_left.source) || !same_poset(cocone_right.source, r.from_right.source) ||
      !same_poset(cocone_left.target, cocone_right.target))
    throw error(errc::not_a_cocone, "cocone legs do not match the pushout legs");
  const std::size_t none = cocone_left.target->size();
  std::vector<std::size_t> img(r.object->size(), none);
  auto assign = [&](std::size_t e, std::size_t v) {
    if (img[e] != none && img[e] != v) throw error(errc::not_a_cocone, "cocone does not commute over the span");
    img[e] = v;
  };
  for (std::size_t x = 0; x < cocone_left.image.size(); ++x) assign(r.from_left.image[x], cocone_left.image[x]);
  for (std::size_t x = 0; x < cocone_right.image.size(); ++x) assign(r.from_right.image[x], cocone_right.image[x]);
  monotone_map u{r.object, cocone_left.target, std::move(img)};
  if (!is_monotone(u)) throw error(errc::not_monotone, "induced map is not monotone");
  return u;
}

inline monotone_map coproduct_of_maps(const std::vector<monotone_map>& fs) {
  std::vector<poset_ptr> srcs, dsts;
  for (const auto& f : fs) {
    srcs.push_back(f.source);
    dsts.push_back(f.target);
  }
  auto [src, in_src] = coproduct(srcs);
  auto [dst, in_dst] = coproduct(dsts);
  std::vector<std::size_t> img(src->size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t x = 0; x < fs[i].image.size(); ++x) img[in_src[i].image[x]] = in_dst[i].image[fs[i].image[x]];
  return {src, dst, std::move(img)};
}

// Colimit of X0 -> X1 -> ... -> XN: the object XN with insertions X_i -> XN.
struct sequential_colimit_result {
  poset_ptr object;
  std::vector<monotone_map> insertions;
};

inline sequential_colimit_result sequential_colimit(const std::vector<monotone_map>& stages) {
  if (stages.empty()) throw error(errc::invalid_argument, "sequential colimit of an empty diagram");
  for (std::size_t i = 1; i < stages.size(); ++i)
    if (!same_poset(stages[i - 1].target, stages[i].source))
      throw error(errc::composition_mismatch, "stage " + std::to_string(i) + " is not composable");
  sequential_colimit_result r;
  r.object = stages.back().target;
  r.insertions.resize(stages.size() + 1);
  r.insertions[stages.size()] = identity(r.object);
  for (std::size_t i = stages.size(); i-- > 0;) r.insertions[i] = compose(r.insertions[i + 1], stages[i]);
  return r;
}

}  // namespace cofib
