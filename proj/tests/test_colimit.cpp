#include <catch2/catch_amalgamated.hpp>

#include "cofib/canonical.hpp"
#include "cofib/colimit.hpp"
#include "cofib/oracles.hpp"
#include "cofib/small.hpp"

using namespace cofib;

namespace {

bool matches_oracle(const pushout_result& po, const oracle::pushout_oracle& o) {
  if (po.object->size() != o.size) return false;
  // the class numberings differ; align them through the left and right legs
  std::vector<std::size_t> to(o.size, o.size);
  auto align = [&](const monotone_map& ours, const std::vector<std::size_t>& theirs) {
    for (std::size_t x = 0; x < theirs.size(); ++x) {
      if (to[theirs[x]] != o.size && to[theirs[x]] != ours(x)) return false;
      to[theirs[x]] = ours(x);
    }
    return true;
  };
  if (!align(po.from_left, o.left) || !align(po.from_right, o.right)) return false;
  for (std::size_t a = 0; a < o.size; ++a)
    for (std::size_t b = 0; b < o.size; ++b)
      if (o.leq[a][b] != po.object->leq(to[a], to[b])) return false;
  return true;
}

span random_span(oracle::rng& g) {
  auto c = oracle::random_poset(g, 1 + oracle::below(g, 3));
  auto a = oracle::random_poset(g, 1 + oracle::below(g, 5));
  auto b = oracle::random_poset(g, 1 + oracle::below(g, 5));
  return {oracle::random_monotone(g, c, a), oracle::random_monotone(g, c, b)};
}

}  // namespace

TEST_CASE("gluing two arrows at their sources gives a vee") {
  auto pt = singleton();
  auto ar = ordinal(1);
  auto po = pushout({point_at(pt, ar, 0), point_at(pt, ar, 0)});
  CHECK(isomorphic(*po.object, *catalog::vee()));
  CHECK(po.from_left(0) == po.from_right(0));
  CHECK(po.from_left(1) != po.from_right(1));
}

TEST_CASE("gluing end to start makes a longer chain") {
  auto pt = singleton();
  auto ar = ordinal(1);
  auto po = pushout({point_at(pt, ar, 1), point_at(pt, ar, 0)});
  CHECK(isomorphic(*po.object, *ordinal(2)));
}

TEST_CASE("pushout along the empty poset is the coproduct") {
  auto po = pushout({from_empty(ordinal(1)), from_empty(catalog::vee())});
  CHECK(isomorphic(*po.object, *coproduct({ordinal(1), catalog::vee()}).first));
}

TEST_CASE("identifying both ends of an arrow with a discrete pair collapses it") {
  auto two = antichain(2);
  auto ar = ordinal(1);
  auto pt = singleton();
  auto po = pushout({monotone_map{two, ar, {0, 1}}, monotone_map{two, pt, {0, 0}}});
  CHECK(po.object->size() == 1);
}

TEST_CASE("a cyclic gluing is rejected") {
  auto two = antichain(2);
  auto ar = ordinal(1);
  try {
    pushout({monotone_map{two, ar, {0, 1}}, monotone_map{two, ar, {1, 0}}});
    FAIL("cyclic gluing accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_poset);
  }
}

TEST_CASE("span legs must share an apex") {
  auto ar = ordinal(1);
  CHECK_THROWS_AS(pushout({identity(ar), identity(singleton())}), error);
}

TEST_CASE("pushout agrees with the closure oracle") {
  oracle::rng g(31);
  std::size_t cyclic = 0, agreed = 0;
  for (int k = 0; k < 300; ++k) {
    auto s = random_span(g);
    auto o = oracle::pushout(s.left, s.right);
    if (!o) {
      ++cyclic;
      CHECK_THROWS_AS(pushout(s), error);
      continue;
    }
    auto po = pushout(s);
    CHECK(is_monotone(po.from_left));
    CHECK(is_monotone(po.from_right));
    CHECK(compose(po.from_left, s.left) == compose(po.from_right, s.right));
    agreed += matches_oracle(po, *o);
  }
  CHECK(agreed + cyclic == 300);
}

TEST_CASE("cocones factor uniquely through the pushout") {
  oracle::rng g(37);
  std::size_t tested = 0;
  for (int k = 0; k < 200; ++k) {
    auto s = random_span(g);
    if (!oracle::pushout(s.left, s.right)) continue;
    auto po = pushout(s);
    auto z = oracle::random_poset(g, 1 + oracle::below(g, 5));
    auto cc = oracle::random_cocone(g, s, z);
    if (!cc) continue;
    ++tested;
    auto u = mediating_map(po, cc->first, cc->second);
    CHECK(compose(u, po.from_left) == cc->first);
    CHECK(compose(u, po.from_right) == cc->second);
    CHECK(oracle::count_mediating(po, cc->first, cc->second) == 1);
  }
  CHECK(tested > 50);
}

TEST_CASE("a non-commuting cocone is rejected") {
  auto pt = singleton();
  auto ar = ordinal(1);
  auto po = pushout({point_at(pt, ar, 0), point_at(pt, ar, 0)});
  auto z = ordinal(1);
  try {
    mediating_map(po, identity(ar), monotone_map{ar, z, {1, 1}});
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_cocone);
  }
}

TEST_CASE("coproduct of maps") {
  auto f = point_at(singleton(), ordinal(1), 1);
  auto g = identity(catalog::vee());
  auto h = coproduct_of_maps({f, g});
  CHECK(h.source->size() == 4);
  CHECK(h.target->size() == 5);
  CHECK(is_monotone(h));
  CHECK(h(0) == 1);
  CHECK(h(3) == 4);
}

TEST_CASE("sequential colimits") {
  CHECK_THROWS_AS(sequential_colimit({}), error);
  std::vector<monotone_map> stages;
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<std::size_t> img(k + 1);
    for (std::size_t x = 0; x <= k; ++x) img[x] = x;
    stages.push_back({stages.empty() ? ordinal(0) : stages.back().target, ordinal(k + 1), img});
  }
  auto r = sequential_colimit(stages);
  CHECK(r.object->size() == 4);
  REQUIRE(r.insertions.size() == 4);
  for (std::size_t i = 0; i + 1 < r.insertions.size(); ++i)
    CHECK(compose(r.insertions[i + 1], stages[i]) == r.insertions[i]);
  std::vector<monotone_map> broken{stages[0], stages[2]};
  try {
    sequential_colimit(broken);
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::composition_mismatch);
  }
}
