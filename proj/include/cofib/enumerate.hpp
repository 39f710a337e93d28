#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cofib/analyze.hpp"
#include "cofib/canonical.hpp"
#include "cofib/classify.hpp"

namespace cofib {

inline constexpr std::size_t enumerate_limit = 6;

struct certification {
  bool ok = false;
  verdict object = verdict::failed;
  std::size_t minima = 0;
  std::size_t minima_verified = 0;
  std::string failure;
};

struct catalog_entry {
  canonical_form canonical;
  poset_ptr representative;
  classification tags;
  std::optional<witness_report> witness;
  std::optional<certification> result;
};

namespace detail {

inline std::vector<std::string> letter_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

// p extended by a new maximal element over the down-closed set `below`.
inline poset extend(const poset& p, const bits& below) {
  const std::size_t n = p.size();
  std::vector<bits> up(n + 1, bits(n + 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = p.up(x).find_first(); y != bits::npos; y = p.up(x).find_next(y)) up[x].set(y);
    if (below.test(x)) up[x].set(n);
  }
  up[n].set(n);
  return poset::from_relation(std::move(up), letter_labels(n + 1));
}

inline bool down_closed(const poset& p, const bits& s) {
  for (auto x = s.find_first(); x != bits::npos; x = s.find_next(x))
    if (!p.down(x).is_subset_of(s)) return false;
  return true;
}

}  // namespace detail

// One representative per isomorphism class, numbered canonically, in order of
// canonical keys. Every poset arises from a smaller one by adding a maximal element.
inline std::vector<poset_ptr> enumerate_posets(std::size_t n) {
  if (n > enumerate_limit) throw error(errc::size_limit, "enumeration supports n <= 6");
  std::vector<poset_ptr> level{empty_poset()};
  for (std::size_t k = 0; k < n; ++k) {
    std::map<canonical_form, poset_ptr> next;
    for (const auto& q : level) {
      const std::size_t m = q->size();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        bits below(m, mask);
        if (!detail::down_closed(*q, below)) continue;
        auto ext = detail::extend(*q, below);
        auto lab = canonical_labeling(ext);
        if (next.count(lab.form)) continue;
        auto rep = relabel(ext, lab.perm);
        next.emplace(lab.form, make_ptr(poset::from_relation(
                                   [&] {
                                     std::vector<bits> up;
                                     for (std::size_t x = 0; x < rep->size(); ++x) up.push_back(rep->up(x));
                                     return up;
                                   }(),
                                   detail::letter_labels(rep->size()))));
      }
    }
    level.clear();
    for (auto& [key, p] : next) level.push_back(p);
  }
  return level;
}

inline std::vector<catalog_entry> enumerate(std::size_t n) {
  if (n < 1 || n > enumerate_limit) throw error(errc::size_limit, "enumeration supports 1 <= n <= 6");
  std::vector<catalog_entry> out;
  for (const auto& p : enumerate_posets(n)) out.push_back({canonical(*p), p, classify(*p), std::nullopt, std::nullopt});
  return out;
}

inline certification certify(const witness_report& r) {
  certification c;
  auto rep = verify_cofibrant(r.certificate);
  c.object = rep.result();
  if (!rep.ok()) c.failure = "object: " + rep.first_failure()->path + " " + rep.first_failure()->condition;
  auto minima = r.object()->minimal_elements();
  c.minima = minima.size();
  for (auto m : minima) {
    auto it = r.minimum_certificates.find(m);
    if (it == r.minimum_certificates.end()) {
      if (c.failure.empty()) c.failure = "minimum " + r.object()->label(m) + " has no certificate";
      continue;
    }
    auto mr = verify(it->second);
    const bool lands = mr.ok() && same_poset(it->second->conclusion.target, r.object()) &&
                       it->second->conclusion.source->size() == 1 && it->second->conclusion(0) == m;
    if (lands) ++c.minima_verified;
    else if (c.failure.empty())
      c.failure = "minimum " + r.object()->label(m) + (mr.ok() ? ": wrong target" : ": " + mr.first_failure()->condition);
  }
  c.ok = rep.ok() && c.minima_verified == c.minima;
  return c;
}

// Every class on 1..n elements, each with its witness and verification.
inline std::vector<catalog_entry> certify_all(std::size_t n) {
  if (n > 5) throw error(errc::size_limit, "certify_all supports n <= 5");
  std::vector<catalog_entry> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& e : enumerate(k)) {
      try {
        e.witness = witness(e.representative);
        e.result = certify(*e.witness);
      } catch (const error& ex) {
        e.result = certification{};
        e.result->failure = ex.what();
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

struct count_row {
  std::size_t n = 0;
  std::size_t total = 0;
  std::size_t connected = 0;
  std::size_t join = 0;  // among connected
  std::size_t meet = 0;
  std::size_t semilattice = 0;
  std::size_t chains = 0;
  std::size_t zigzags = 0;
  std::size_t trees = 0;
  std::size_t glued = 0;  // connected non-semilattices glued from a pendant maximum
  std::size_t hand = 0;   // connected classes needing a catalog construction
};

inline count_row count_classes(std::size_t n, const std::vector<catalog_entry>& entries) {
  count_row r;
  r.n = n;
  for (const auto& e : entries) {
    const auto& p = *e.representative;
    ++r.total;
    if (!e.tags.has("connected")) continue;
    ++r.connected;
    const bool j = e.tags.has("join_semilattice"), m = e.tags.has("meet_semilattice");
    r.join += j;
    r.meet += m;
    r.semilattice += j || m;
    r.chains += e.tags.has("chain");
    r.zigzags += e.tags.has("zigzag");
    r.trees += e.tags.has("tree");
    if (j || m) continue;
    if (catalog::lookup(p)) ++r.hand;
    else if (find_pendant(p)) ++r.glued;
  }
  return r;
}

inline std::vector<count_row> counts_table(std::size_t max_n) {
  if (max_n > enumerate_limit) throw error(errc::size_limit, "counts_table supports n <= 6");
  std::vector<count_row> rows;
  for (std::size_t n = 1; n <= max_n; ++n) rows.push_back(count_classes(n, enumerate(n)));
  return rows;
}

}  // namespace cofib
