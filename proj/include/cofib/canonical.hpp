#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cofib/poset.hpp"

namespace cofib {

inline constexpr std::size_t canonical_size_limit = 256;

struct canonical_form {
  std::string key;
  auto operator<=>(const canonical_form&) const = default;
};

// perm[x] is the canonical position of element x.
struct canonical_labeling_result {
  std::vector<std::size_t> perm;
  canonical_form form;
};

namespace detail {

inline std::string encode_matrix(const poset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::vector<std::size_t> at(n);
  for (std::size_t x = 0; x < n; ++x) at[perm[x]] = x;
  std::string key;
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  key.push_back(static_cast<char>(n & 0xff));
  unsigned char acc = 0;
  int filled = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (p.leq(at[i], at[j]) ? 1 : 0));
      if (++filled == 8) {
        key.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) key.push_back(static_cast<char>(acc << (8 - filled)));
  return key;
}

// Dense renumbering of arbitrary sortable signatures; returns the number of classes.
template <class Sig>
std::size_t densify(const std::vector<Sig>& sig, std::vector<std::size_t>& out) {
  std::vector<Sig> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.resize(sig.size());
  for (std::size_t x = 0; x < sig.size(); ++x)
    out[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[x]) - sorted.begin());
  return sorted.size();
}

class canonizer {
 public:
  explicit canonizer(const poset& p) : p_(p), n_(p.size()) {
    strict_up_.resize(n_);
    strict_down_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      strict_up_[x] = to_list(p.up(x));
      strict_up_[x].erase(std::find(strict_up_[x].begin(), strict_up_[x].end(), x));
      strict_down_[x] = to_list(p.down(x));
      strict_down_[x].erase(std::find(strict_down_[x].begin(), strict_down_[x].end(), x));
    }
  }

  canonical_labeling_result run(const std::vector<std::size_t>& initial) {
    std::vector<std::size_t> height(n_, 0);
    std::vector<std::size_t> order(n_);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return strict_down_[a].size() < strict_down_[b].size(); });
    for (auto x : order)
      for (auto y : strict_down_[x]) height[x] = std::max(height[x], height[y] + 1);
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> sig(n_);
    for (std::size_t x = 0; x < n_; ++x)
      sig[x] = {initial.empty() ? 0 : initial[x], strict_down_[x].size(), strict_up_[x].size(), height[x]};
    std::vector<std::size_t> colors;
    densify(sig, colors);
    search(colors);
    return {best_perm_, canonical_form{best_key_}};
  }

 private:
  std::size_t refine(std::vector<std::size_t>& colors) const {
    std::size_t classes = 0;
    for (auto c : colors) classes = std::max(classes, c + 1);
    using sig_t = std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>;
    std::vector<sig_t> sig(n_);
    for (;;) {
      for (std::size_t x = 0; x < n_; ++x) {
        std::vector<std::size_t> ups, downs;
        ups.reserve(strict_up_[x].size());
        downs.reserve(strict_down_[x].size());
        for (auto y : strict_up_[x]) ups.push_back(colors[y]);
        for (auto y : strict_down_[x]) downs.push_back(colors[y]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        sig[x] = {colors[x], std::move(ups), std::move(downs)};
      }
      std::vector<std::size_t> next;
      std::size_t k = densify(sig, next);
      colors = std::move(next);
      if (k == classes) return k;
      classes = k;
    }
  }

  bool twins(std::size_t a, std::size_t b) const {
    return strict_up_[a] == strict_up_[b] && strict_down_[a] == strict_down_[b];
  }

  void search(std::vector<std::size_t> colors) {
    std::size_t k = refine(colors);
    if (k == n_) {
      std::string key = encode_matrix(p_, colors);
      if (!have_best_ || key < best_key_) {
        best_key_ = std::move(key);
        best_perm_ = colors;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> count(k, 0);
    for (auto c : colors) ++count[c];
    std::size_t cell = 0;
    while (count[cell] < 2) ++cell;
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != cell) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(t, v); })) continue;
      tried.push_back(v);
      std::vector<std::size_t> next(n_);
      for (std::size_t x = 0; x < n_; ++x) {
        if (colors[x] < cell) next[x] = colors[x];
        else if (colors[x] > cell) next[x] = colors[x] + 1;
        else next[x] = x == v ? cell : cell + 1;
      }
      search(std::move(next));
    }
  }

  const poset& p_;
  std::size_t n_;
  std::vector<elem_list> strict_up_;
  std::vector<elem_list> strict_down_;
  bool have_best_ = false;
  std::string best_key_;
  std::vector<std::size_t> best_perm_;
};

}  // namespace detail

// `initial` optionally assigns invariant colours that isomorphisms must respect.
inline canonical_labeling_result canonical_labeling(const poset& p, const std::vector<std::size_t>& initial = {}) {
  if (p.size() > canonical_size_limit) throw error(errc::size_limit, "canonical form limited to 256 elements");
  if (p.empty()) return {{}, canonical_form{detail::encode_matrix(p, {})}};
  return detail::canonizer(p).run(initial);
}

inline canonical_form canonical(const poset& p) { return canonical_labeling(p).form; }

inline std::string hex_key(const canonical_form& f) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : f.key) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

inline bool isomorphic(const poset& a, const poset& b) {
  return a.size() == b.size() && canonical(a) == canonical(b);
}

// An isomorphism a -> b sending pins_a[i] to pins_b[i], if one exists.
inline std::optional<monotone_map> find_isomorphism(const poset_ptr& a, const poset_ptr& b,
                                                    const elem_list& pins_a = {}, const elem_list& pins_b = {}) {
  if (a->size() != b->size() || pins_a.size() != pins_b.size()) return std::nullopt;
  std::vector<std::size_t> ca, cb;
  if (!pins_a.empty()) {
    ca.assign(a->size(), 0);
    cb.assign(b->size(), 0);
    for (std::size_t i = 0; i < pins_a.size(); ++i) {
      ca[pins_a[i]] = i + 1;
      cb[pins_b[i]] = i + 1;
    }
  }
  auto la = canonical_labeling(*a, ca);
  auto lb = canonical_labeling(*b, cb);
  if (la.form != lb.form) return std::nullopt;
  std::vector<std::size_t> at_b(b->size());
  for (std::size_t y = 0; y < b->size(); ++y) at_b[lb.perm[y]] = y;
  std::vector<std::size_t> img(a->size());
  for (std::size_t x = 0; x < a->size(); ++x) img[x] = at_b[la.perm[x]];
  return monotone_map{a, b, std::move(img)};
}

}  // namespace cofib
