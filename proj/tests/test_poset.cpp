#include <algorithm>
#include <numeric>

#include <catch2/catch_amalgamated.hpp>

#include "cofib/canonical.hpp"
#include "cofib/io.hpp"
#include "cofib/oracles.hpp"
#include "cofib/small.hpp"

using namespace cofib;

namespace {

poset_ptr build(const std::vector<std::string>& labels, const std::vector<std::pair<std::string, std::string>>& covers) {
  return make_ptr(from_covers(labels, covers));
}

std::size_t strict_pairs(const poset& p) {
  std::size_t n = 0;
  for (std::size_t x = 0; x < p.size(); ++x) n += p.up(x).count() - 1;
  return n;
}

}  // namespace

TEST_CASE("from_covers builds the transitive closure") {
  auto one = build({"a"}, {});
  CHECK(one->size() == 1);
  auto d = build({"x", "y"}, {{"x", "y"}});
  CHECK(d->leq(0, 1));
  CHECK_FALSE(d->leq(1, 0));
  auto c3 = build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(c3->leq(0, 2));
  CHECK(c3->covers().size() == 2);
}

TEST_CASE("cycles and unknown labels are rejected") {
  try {
    build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    FAIL("cycle accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::cycle);
  }
  try {
    build({"a"}, {{"a", "z"}});
    FAIL("unknown label accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_label);
  }
}

TEST_CASE("monotonicity and composition") {
  auto c2 = ordinal(2);
  CHECK(is_monotone(identity(c2)));
  auto c1 = ordinal(1);
  CHECK_FALSE(is_monotone(monotone_map{c1, c1, {1, 0}}));

  oracle::rng g(3);
  auto p = oracle::random_poset(g, 5);
  auto q = oracle::random_poset(g, 4);
  auto f = oracle::random_monotone(g, p, q);
  CHECK(compose(identity(q), f) == f);
  CHECK(compose(f, identity(p)) == f);
  try {
    compose(f, f);
    FAIL("mismatched middle accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::composition_mismatch);
  }
}

TEST_CASE("canonical forms ignore labels and separate shapes") {
  auto a = build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto b = build({"z", "y", "x"}, {{"x", "y"}, {"y", "z"}});
  CHECK(canonical(*a) == canonical(*b));
  CHECK(canonical(*ordinal(2)) != canonical(*catalog::vee()));
}

TEST_CASE("canonical form is invariant under all relabelings") {
  oracle::rng g(17);
  for (int trial = 0; trial < 5; ++trial) {
    auto p = oracle::random_poset(g, 5, 0.5);
    const auto key = canonical(*p);
    std::vector<std::size_t> perm(5);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::size_t count = 0;
    do {
      CHECK(canonical(*relabel(*p, perm)) == key);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 120);
  }
}

TEST_CASE("canonical form separates every pair of classes the brute force separates") {
  oracle::rng g(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_poset(g, 5, 0.4);
    auto q = oracle::random_poset(g, 5, 0.4);
    oracle::relation rp(25), rq(25);
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        rp[a * 5 + b] = p->lt(a, b);
        rq[a * 5 + b] = q->lt(a, b);
      }
    const bool iso = oracle::min_relabeling(rp, 5) == oracle::min_relabeling(rq, 5);
    CHECK((canonical(*p) == canonical(*q)) == iso);
  }
}

TEST_CASE("find_isomorphism respects pins") {
  auto v = catalog::vee();
  auto s = find_isomorphism(v, v, {1}, {2});
  REQUIRE(s);
  CHECK(is_isomorphism(*s));
  CHECK((*s)(1) == 2);
  CHECK_FALSE(find_isomorphism(v, v, {0}, {1}));
}

TEST_CASE("coproducts") {
  auto two = coproduct({singleton(), singleton()}).first;
  CHECK(two->size() == 2);
  CHECK(strict_pairs(*two) == 0);
  CHECK(coproduct({}).first->empty());
  auto four = coproduct({ordinal(1), ordinal(1)}).first;
  CHECK(four->size() == 4);
  CHECK(strict_pairs(*four) == 2);
}

TEST_CASE("opposite") {
  CHECK(isomorphic(opposite(*ordinal(2)), *ordinal(2)));
  CHECK(isomorphic(opposite(*catalog::vee()), *catalog::wedge()));
  oracle::rng g(9);
  for (int k = 0; k < 20; ++k) {
    auto p = oracle::random_poset(g, 1 + oracle::below(g, 7));
    CHECK(opposite(opposite(*p)) == *p);
  }
}

TEST_CASE("down sets") {
  auto c = ordinal(2);
  CHECK(down_set(*c, 2).size() == 3);
  for (auto m : c->minimal_elements()) CHECK(down_set(*c, m).size() == 1);
  auto z = build({"x0", "x1", "x2"}, {{"x0", "x1"}, {"x2", "x1"}});
  CHECK(down_set(*z, 1) == elem_list{0, 1, 2});
}

TEST_CASE("connected components") {
  CHECK(connected_components(*antichain(3)).size() == 3);
  CHECK(connected_components(*catalog::diamond()).size() == 1);
  auto sum = coproduct({ordinal(1), catalog::vee()}).first;
  auto comps = connected_components(*sum);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);
  CHECK(comps[1].size() == 3);
}

TEST_CASE("poset files round trip") {
  const char* text =
      "# a diamond\n"
      "poset diamond\n"
      "\n"
      "elements: a b c d\n"
      "covers: a<b a<c b<d c<d   # Hasse diagram\n";
  auto f = parse_poset_file(text);
  CHECK(f.name == "diamond");
  CHECK(f.order->size() == 4);
  auto again = parse_poset_file(write_poset_file(f.name, *f.order));
  CHECK(*again.order == *f.order);
  CHECK(again.order->labels() == f.order->labels());
}

TEST_CASE("poset file errors carry positions") {
  try {
    parse_poset_file("poset x\nelements: a b!\ncovers:\n");
    FAIL("bad label accepted");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 13);
  }
  try {
    parse_poset_file("poset x\nelements: a b\n");
    FAIL("missing covers accepted");
  } catch (const parse_error& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_poset_file("poset x\nelements: a b\ncovers: a-b\n");
    FAIL("bad cover accepted");
  } catch (const parse_error& e) {
    CHECK(e.column() == 9);
  }
}
