#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cofib/poset.hpp"

namespace cofib {

// Find p: ambient -> subobject.source with p . subobject = id, extending `pinned`.
struct retraction_query {
  poset_ptr ambient;
  std::vector<std::optional<std::size_t>> pinned;  // indexed by ambient element; may be empty
  monotone_map subobject;
};

namespace detail {

// Lexicographically first assignment (elements ascending, values ascending)
// of monotone maps src -> dst within the given domains.
class monotone_search {
 public:
  monotone_search(const poset& src, const poset& dst, std::vector<bits> domains, bool injective)
      : src_(src), dst_(dst), injective_(injective) {
    stack_.push_back(std::move(domains));
    value_.assign(src.size(), dst.size());
  }

  // Calls `accept` for each solution in order; stops when it returns true.
  bool run(const std::function<bool(const std::vector<std::size_t>&)>& accept) {
    accept_ = &accept;
    for (const auto& d : stack_.back())
      if (d.none()) return false;
    return step(0);
  }

 private:
  bool step(std::size_t x) {
    if (x == src_.size()) return (*accept_)(value_);
    const bits dom = stack_.back()[x];
    for (auto v = dom.find_first(); v != bits::npos; v = dom.find_next(v)) {
      std::vector<bits> next = stack_.back();
      bool alive = true;
      for (std::size_t w = x + 1; w < src_.size() && alive; ++w) {
        if (src_.leq(x, w)) next[w] &= dst_.up(v);
        if (src_.leq(w, x)) next[w] &= dst_.down(v);
        if (injective_) next[w].reset(v);
        if (next[w].none()) alive = false;
      }
      if (!alive) continue;
      value_[x] = v;
      stack_.push_back(std::move(next));
      bool done = step(x + 1);
      stack_.pop_back();
      if (done) return true;
    }
    return false;
  }

  const poset& src_;
  const poset& dst_;
  bool injective_;
  std::vector<std::vector<bits>> stack_;
  std::vector<std::size_t> value_;
  const std::function<bool(const std::vector<std::size_t>&)>* accept_ = nullptr;
};

}  // namespace detail

inline void check_query(const retraction_query& q) {
  const auto& i = q.subobject;
  if (!same_poset(i.target, q.ambient)) throw error(errc::ill_formed_query, "subobject does not land in the ambient");
  if (!is_order_embedding(i)) throw error(errc::ill_formed_query, "subobject is not an order embedding");
  if (!q.pinned.empty() && q.pinned.size() != q.ambient->size())
    throw error(errc::ill_formed_query, "pinned map has wrong length");
  for (std::size_t b = 0; b < i.image.size(); ++b) {
    if (!q.pinned.empty() && q.pinned[i.image[b]] && *q.pinned[i.image[b]] != b)
      throw error(errc::ill_formed_query, "pinned value contradicts the subobject");
  }
  for (const auto& v : q.pinned)
    if (v && *v >= i.source->size()) throw error(errc::ill_formed_query, "pinned value out of range");
}

inline std::vector<bits> query_domains(const retraction_query& q) {
  const std::size_t na = q.ambient->size(), nb = q.subobject.source->size();
  std::vector<bits> dom(na, bits(nb));
  for (auto& d : dom) d.set();
  for (std::size_t y = 0; y < na; ++y) {
    if (!q.pinned.empty() && q.pinned[y]) {
      dom[y].reset();
      dom[y].set(*q.pinned[y]);
    }
  }
  for (std::size_t b = 0; b < nb; ++b) {
    dom[q.subobject.image[b]].reset();
    dom[q.subobject.image[b]].set(b);
  }
  // fixed values constrain everything comparable to them
  for (std::size_t y = 0; y < na; ++y) {
    if (dom[y].count() != 1) continue;
    std::size_t v = dom[y].find_first();
    for (std::size_t w = 0; w < na; ++w) {
      if (w == y) continue;
      if (q.ambient->leq(y, w)) dom[w] &= q.subobject.source->up(v);
      if (q.ambient->leq(w, y)) dom[w] &= q.subobject.source->down(v);
    }
  }
  return dom;
}

inline std::optional<monotone_map> try_retraction_search(const retraction_query& q) {
  check_query(q);
  std::optional<monotone_map> out;
  detail::monotone_search s(*q.ambient, *q.subobject.source, query_domains(q), false);
  s.run([&](const std::vector<std::size_t>& v) {
    out = monotone_map{q.ambient, q.subobject.source, v};
    return true;
  });
  return out;
}

inline monotone_map retraction_search(const retraction_query& q) {
  auto r = try_retraction_search(q);
  if (!r) throw error(errc::no_retraction, "no monotone retraction exists");
  return *r;
}

// Order embeddings src -> dst extending `pins` (pins[x] fixes the image of x),
// visited in lexicographic order until `accept` returns true.
inline bool for_each_embedding(const poset_ptr& src, const poset_ptr& dst,
                               const std::vector<std::optional<std::size_t>>& pins,
                               const std::function<bool(const monotone_map&)>& accept) {
  std::vector<bits> dom(src->size(), bits(dst->size()));
  for (std::size_t x = 0; x < src->size(); ++x) {
    if (x < pins.size() && pins[x]) dom[x].set(*pins[x]);
    else dom[x].set();
  }
  detail::monotone_search s(*src, *dst, std::move(dom), true);
  return s.run([&](const std::vector<std::size_t>& v) {
    monotone_map m{src, dst, v};
    return is_order_embedding(m) && accept(m);
  });
}

}  // namespace cofib
