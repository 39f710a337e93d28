#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cofib/shapes.hpp"
#include "cofib/small.hpp"

namespace cofib {

struct classification {
  std::vector<std::string> tags;

  bool has(std::string_view tag) const { return std::find(tags.begin(), tags.end(), tag) != tags.end(); }
  std::string joined() const {
    std::string out;
    for (const auto& t : tags) out += (out.empty() ? "" : ", ") + t;
    return out;
  }
};

inline classification classify(const poset& p) {
  classification c;
  if (is_join_semilattice(p)) c.tags.emplace_back("join_semilattice");
  if (is_meet_semilattice(p)) c.tags.emplace_back("meet_semilattice");
  if (is_chain(p)) c.tags.emplace_back("chain");
  if (is_zigzag(p)) c.tags.emplace_back("zigzag");
  if (is_tree_poset(p)) c.tags.emplace_back("tree");
  if (!p.empty()) {
    const bool connected = is_connected(p);
    c.tags.emplace_back(connected ? "connected" : "disconnected");
    if (connected)
      if (auto id = catalog::lookup(p)) c.tags.push_back("small_catalog(" + std::string(*id) + ")");
  }
  return c;
}

}  // namespace cofib
