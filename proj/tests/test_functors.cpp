#include <catch2/catch_amalgamated.hpp>

#include "cofib/canonical.hpp"
#include "cofib/functors.hpp"
#include "cofib/oracles.hpp"
#include "cofib/small.hpp"

using namespace cofib;

namespace {

std::size_t count_chains(const poset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool chain = true;
    for (std::size_t a = 0; a < n && chain; ++a)
      for (std::size_t b = 0; b < n && chain; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !p.comparable(a, b)) chain = false;
    count += chain;
  }
  return count;
}

}  // namespace

TEST_CASE("chains of small posets") {
  CHECK(chains_poset(ordinal(0)).order->size() == 1);
  CHECK(chains_poset(ordinal(1)).order->size() == 3);
  CHECK(chains_poset(ordinal(2)).order->size() == 7);
  CHECK(chains_poset(antichain(3)).order->size() == 3);
  CHECK(chains_poset(empty_poset()).order->empty());
  CHECK(chains_poset(catalog::diamond()).order->size() == 11);
}

TEST_CASE("chain count matches a brute force count") {
  oracle::rng g(11);
  for (int k = 0; k < 40; ++k) {
    auto p = oracle::random_poset(g, 1 + oracle::below(g, 8), 0.5);
    CHECK(chains_poset(p).order->size() == count_chains(*p));
  }
}

TEST_CASE("chains of an ordinal are the nonempty subsets") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto cp = chains_poset(ordinal(n));
    auto pl = power_lattice(n + 1, selection::nonempty);
    CHECK(isomorphic(*cp.order, *pl.order));
    CHECK(isomorphic(*cp.order, *sd_simplex(n)));
  }
}

TEST_CASE("chain order is inclusion") {
  auto cp = chains_poset(ordinal(2));
  auto a = cp.index_of({0});
  auto ab = cp.index_of({0, 1});
  auto abc = cp.index_of({0, 1, 2});
  auto c = cp.index_of({2});
  CHECK(cp.order->lt(a, ab));
  CHECK(cp.order->lt(ab, abc));
  CHECK(cp.order->lt(c, abc));
  CHECK_FALSE(cp.order->comparable(c, ab));
  CHECK(cp.order->minimal_elements().size() == 3);
  CHECK_THROWS_AS(chains_poset(antichain(2)).index_of({0, 1}), error);
}

TEST_CASE("power lattices") {
  CHECK(power_lattice(3, selection::all).order->size() == 8);
  CHECK(power_lattice(3, selection::nonempty).order->size() == 7);
  CHECK(power_lattice(3, selection::proper_nonempty).order->size() == 6);
  CHECK(power_lattice(3, selection::minus_top).order->size() == 7);
  CHECK(isomorphic(*power_lattice(2, selection::all).order, *catalog::diamond()));
  CHECK(isomorphic(*power_lattice(2, selection::proper_nonempty).order, *antichain(2)));
  CHECK_THROWS_AS(power_lattice(power_ground_limit + 1, selection::all), error);
}

TEST_CASE("subdivided simplices and boundaries") {
  CHECK(sd_simplex(0)->size() == 1);
  CHECK(sd_simplex(2)->size() == 7);
  auto [bd, inc] = sd_boundary(2);
  CHECK(bd->size() == 6);
  CHECK(is_order_embedding(inc));
  CHECK(sd2_simplex(1)->size() == 5);
  CHECK(sd2_simplex(2)->size() == 25);
  auto [bd2, inc2] = sd2_boundary(2);
  CHECK(bd2->size() == 12);
  CHECK(is_order_embedding(inc2));
  CHECK_THROWS_AS(sd2_simplex(3), error);
  CHECK_THROWS_AS(sd_boundary(0), error);
}

TEST_CASE("vertex inclusions hit singletons") {
  for (std::size_t k = 0; k <= 2; ++k) {
    auto v = vertex_inclusion(2, k);
    CHECK(v.target->is_minimal(v(0)));
    CHECK(v.target->label(v(0)) == "{" + std::to_string(k) + "}");
  }
  CHECK_THROWS_AS(vertex_inclusion(2, 3), error);
}

TEST_CASE("chains is a functor") {
  oracle::rng g(23);
  for (int k = 0; k < 30; ++k) {
    auto p = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto q = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto r = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto f = oracle::random_monotone(g, p, q);
    auto h = oracle::random_monotone(g, q, r);
    auto cp = chains_poset(p), cq = chains_poset(q), cr = chains_poset(r);
    auto cf = chains_map(f, cp, cq);
    auto ch = chains_map(h, cq, cr);
    CHECK(is_monotone(cf));
    CHECK(compose(ch, cf) == chains_map(compose(h, f), cp, cr));
    CHECK(chains_map(identity(p), cp, cp) == identity(cp.order));
  }
}

TEST_CASE("chains of an embedding is an embedding") {
  oracle::rng g(29);
  for (int k = 0; k < 30; ++k) {
    auto p = oracle::random_poset(g, 2 + oracle::below(g, 5));
    elem_list keep;
    for (std::size_t x = 0; x < p->size(); ++x)
      if (oracle::below(g, 3) != 0) keep.push_back(x);
    if (keep.empty()) keep.push_back(0);
    auto [sub, inc] = subposet(p, keep);
    CHECK(is_order_embedding(chains_map(inc)));
  }
}

TEST_CASE("chains_map rejects maps that are not monotone") {
  auto c = ordinal(1);
  try {
    chains_map(monotone_map{c, c, {1, 0}});
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_monotone);
  }
}

TEST_CASE("removing the top is dual to removing the bottom") {
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(isomorphic(*power_lattice(n, selection::minus_top).order, opposite(*power_lattice(n, selection::nonempty).order)));
}

TEST_CASE("subdividing an arrow twice") {
  auto f = point_at(singleton(), ordinal(1), 0);
  auto once = chains_map(f);
  CHECK(once.target->label(once(0)) == "{0}");
  auto twice = chains_map2(f);
  CHECK(twice.target->size() == 5);
  CHECK(is_order_embedding(twice));
}

TEST_CASE("down-sets embed a vee into its nonempty subsets") {
  auto v = catalog::vee();
  auto pl = power_lattice(3, selection::nonempty);
  std::vector<std::size_t> img;
  for (std::size_t x = 0; x < v->size(); ++x) img.push_back(pl.index_of(down_set(*v, x)));
  CHECK(is_monotone(monotone_map{v, pl.order, img}));
}
