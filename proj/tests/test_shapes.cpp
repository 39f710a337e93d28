#include <catch2/catch_amalgamated.hpp>

#include "cofib/classify.hpp"
#include "cofib/enumerate.hpp"
#include "cofib/oracles.hpp"

using namespace cofib;

namespace {

// Least upper bound by scanning all upper bounds.
bool has_all_joins(const poset& p) {
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> ub;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(x, z) && p.leq(y, z)) ub.push_back(z);
      bool found = false;
      for (auto u : ub) {
        bool least = true;
        for (auto v : ub) least = least && p.leq(u, v);
        found = found || least;
      }
      if (!found) return false;
    }
  return true;
}

std::vector<poset_ptr> all_up_to(std::size_t n) {
  std::vector<poset_ptr> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : enumerate_posets(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("semilattice predicates") {
  CHECK(is_join_semilattice(*ordinal(3)));
  CHECK(is_meet_semilattice(*ordinal(3)));
  CHECK(is_meet_semilattice(*catalog::vee()));
  CHECK_FALSE(is_join_semilattice(*catalog::vee()));
  CHECK_FALSE(is_join_semilattice(*catalog::p1()));
  CHECK_FALSE(is_meet_semilattice(*catalog::p1()));
  CHECK(is_semilattice(*catalog::diamond()));
  CHECK_FALSE(is_semilattice(*catalog::k22()));
}

TEST_CASE("join predicate agrees with a brute force search") {
  for (const auto& p : all_up_to(5)) {
    CHECK(is_join_semilattice(*p) == has_all_joins(*p));
    CHECK(is_meet_semilattice(*p) == has_all_joins(opposite(*p)));
  }
}

TEST_CASE("joins and meets") {
  auto d = catalog::diamond();
  const auto l = catalog::at(*d, "l"), r = catalog::at(*d, "r");
  CHECK(join(*d, l, r) == catalog::at(*d, "t"));
  CHECK(meet(*d, l, r) == catalog::at(*d, "b"));
  auto v = catalog::vee();
  CHECK_FALSE(join(*v, 1, 2));
  CHECK(join(*v, 0, 1) == 1);
}

TEST_CASE("chains") {
  CHECK(is_chain(*ordinal(2)));
  CHECK_FALSE(is_chain(*catalog::vee()));
  CHECK(is_chain(*empty_poset()));
}

TEST_CASE("zigzags") {
  auto z = catalog::named({"x0", "x1", "x2"}, {{"x0", "x1"}, {"x2", "x1"}});
  CHECK(is_zigzag(*z));
  CHECK(is_zigzag(*ordinal(2)));
  auto y = catalog::named({"r", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK_FALSE(is_zigzag(*y));
  auto branch = catalog::named({"r", "a", "b", "c"}, {{"r", "a"}, {"r", "b"}, {"r", "c"}});
  CHECK_FALSE(is_zigzag(*branch));
  CHECK(is_zigzag(*catalog::w_fence()));
  CHECK_FALSE(is_zigzag(*antichain(2)));
}

TEST_CASE("zigzag paths walk the Hasse diagram") {
  auto w = catalog::w_fence();
  auto zp = zigzag_order(*w);
  REQUIRE(zp.path.size() == 5);
  REQUIRE(zp.up_step.size() == 4);
  for (std::size_t k = 0; k + 1 < zp.path.size(); ++k)
    CHECK(w->comparable(zp.path[k], zp.path[k + 1]));
  CHECK(zp.up_step[0] != zp.up_step[1]);
  CHECK_THROWS_AS(zigzag_order(*catalog::diamond()), error);
}

TEST_CASE("trees and ranks") {
  CHECK(is_tree_poset(*ordinal(3)));
  auto y = catalog::named({"r", "s", "a", "b"}, {{"r", "s"}, {"s", "a"}, {"s", "b"}});
  CHECK(is_tree_poset(*y));
  CHECK_FALSE(is_tree_poset(*catalog::wedge()));
  CHECK(rank(*ordinal(3)) == std::vector<std::size_t>{0, 1, 2, 3});
  auto rk = rank(*y);
  CHECK(rk[catalog::at(*y, "r")] == 0);
  CHECK(rk[catalog::at(*y, "a")] == 2);
  CHECK(rk[catalog::at(*y, "b")] == 2);
  try {
    rank(*catalog::wedge());
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_tree);
  }
}

TEST_CASE("ranks increase by one along covers") {
  oracle::rng g(41);
  for (int k = 0; k < 30; ++k) {
    auto t = oracle::random_tree(g, 1 + oracle::below(g, 10));
    REQUIRE(is_tree_poset(*t));
    auto rk = rank(*t);
    for (auto [a, b] : t->covers()) CHECK(rk[b] == rk[a] + 1);
    CHECK(rk[t->minimal_elements().front()] == 0);
  }
}

TEST_CASE("classification tags") {
  auto c = classify(*ordinal(4));
  for (auto tag : {"chain", "join_semilattice", "meet_semilattice", "tree", "zigzag", "connected"}) CHECK(c.has(tag));
  CHECK(c.tags.size() == 6);

  auto p8 = classify(*catalog::p8());
  CHECK(p8.tags == std::vector<std::string>{"connected", "small_catalog(P8)"});

  CHECK(classify(*antichain(2)).has("disconnected"));
  CHECK(classify(*empty_poset()).has("chain"));
  CHECK_FALSE(classify(*empty_poset()).has("connected"));
}

TEST_CASE("recognizers are consistent with each other") {
  for (const auto& p : all_up_to(6)) {
    if (is_chain(*p)) {
      CHECK(is_join_semilattice(*p));
      CHECK(is_meet_semilattice(*p));
      CHECK(is_tree_poset(*p));
      CHECK(is_zigzag(*p));
    }
    if (is_tree_poset(*p)) {
      CHECK(p->covers().size() == p->size() - 1);
      CHECK(is_meet_semilattice(*p));
    }
    if (is_zigzag(*p)) CHECK(is_connected(*p));
    auto tags = classify(*p);
    CHECK(tags.has("connected") != tags.has("disconnected"));
  }
}

TEST_CASE("semilattice counts among connected classes") {
  auto count = [](std::size_t n) {
    std::size_t connected = 0, semi = 0;
    for (const auto& p : enumerate_posets(n)) {
      if (!is_connected(*p)) continue;
      ++connected;
      semi += is_semilattice(*p);
    }
    return std::pair{connected, semi};
  };
  CHECK(count(4) == std::pair<std::size_t, std::size_t>{10, 8});
  CHECK(count(5) == std::pair<std::size_t, std::size_t>{44, 25});
}
