#include <catch2/catch_amalgamated.hpp>

#include "cofib/analyze.hpp"
#include "cofib/oracles.hpp"
#include "cofib/search.hpp"

using namespace cofib;

namespace {

// The cofibrant certificate and every minimum certificate verify, and the
// minimum certificates cover exactly the minima of the object.
void check_report(const witness_report& r, const poset_ptr& p) {
  INFO("theorem " << r.theorem << ", route " << r.route);
  REQUIRE(r.object());
  CHECK(isomorphic(*r.object(), *p));
  CHECK(verify_cofibrant(r.certificate).ok());
  auto mins = r.object()->minimal_elements();
  CHECK(r.minimum_certificates.size() == mins.size());
  for (auto m : mins) {
    auto it = r.minimum_certificates.find(m);
    REQUIRE(it != r.minimum_certificates.end());
    CHECK(verify(it->second).ok());
    const auto& c = it->second->conclusion;
    CHECK(c.source->size() == 1);
    CHECK(same_poset(c.target, r.object()));
    CHECK(c(0) == m);
  }
}

poset_ptr random_zigzag(oracle::rng& g, std::size_t len) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    if (oracle::below(g, 2)) pairs.emplace_back(k, k + 1);
    else pairs.emplace_back(k + 1, k);
  }
  return make_ptr(poset::from_pairs(len, pairs));
}

}  // namespace

TEST_CASE("semilattices") {
  check_report(witness(catalog::diamond()), catalog::diamond());
  check_report(witness(catalog::vee()), catalog::vee());
  check_report(witness(catalog::wedge()), catalog::wedge());
  check_report(witness(power_lattice(3, selection::all).order), power_lattice(3, selection::all).order);
  CHECK(witness(catalog::diamond()).theorem == "sliscof");
}

TEST_CASE("the join route maps an element to its down-set") {
  auto d = catalog::diamond();
  auto r = join_semilattice_witness(d);
  CHECK(r.route == "semilattice");
  check_report(r, d);
}

TEST_CASE("chains") {
  for (std::size_t n = 0; n <= 6; ++n) check_report(chain_witness(ordinal(n)), ordinal(n));
  CHECK_THROWS_AS(chain_witness(catalog::vee()), error);
}

TEST_CASE("staged chain certificates build the chain one arrow at a time") {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto c = staged_chain_certificate(k);
    CHECK(verify(c).ok());
    CHECK(isomorphic(*c->conclusion.target, *ordinal(k)));
    CHECK(c->premises.size() == k);
  }
}

TEST_CASE("explicit zigzag retractions") {
  for (std::size_t len = 3; len <= 8; ++len)
    for (std::size_t apex = 1; apex + 2 <= len; ++apex) {
      auto m = chaincof_retract(len, apex);
      CHECK(is_monotone(m.p));
      CHECK(compose(m.p, m.i) == identity(m.zigzag));
      if (2 * apex > len - 2) CHECK(is_monotone(m.i));
    }
  CHECK_THROWS_AS(chaincof_retract(3, 0), error);
}

TEST_CASE("single maximum zigzags at every apex") {
  for (std::size_t len = 3; len <= 7; ++len)
    for (std::size_t apex = 1; apex + 2 <= len; ++apex)
      check_report(single_max_zigzag_witness(len, apex), single_max_zigzag(len, apex));
}

TEST_CASE("general zigzags") {
  check_report(zigzag_witness(catalog::w_fence()), catalog::w_fence());
  oracle::rng g(43);
  for (int k = 0; k < 20; ++k) {
    auto z = random_zigzag(g, 1 + oracle::below(g, 9));
    check_report(zigzag_witness(z), z);
  }
  CHECK_THROWS_AS(zigzag_witness(catalog::diamond()), error);
}

TEST_CASE("trees") {
  oracle::rng g(47);
  for (int k = 0; k < 20; ++k) {
    auto t = oracle::random_tree(g, 1 + oracle::below(g, 10));
    check_report(tree_witness(t), t);
  }
  try {
    tree_witness(catalog::wedge());
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_tree);
  }
}

TEST_CASE("the catalog") {
  for (const auto& e : catalog::entries) {
    INFO(e.id);
    const auto& r = catalog_witness(e.id);
    check_report(r, e.make());
    CHECK(r.route == "hand");
    CHECK(catalog::lookup(*e.make()) == e.id);
  }
  CHECK_THROWS_AS(catalog_witness("P10"), error);
}

TEST_CASE("witnesses follow isomorphisms") {
  const auto& r = catalog_witness("P7");
  std::vector<std::size_t> perm(r.object()->size());
  for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = (x + 2) % perm.size();
  auto moved = relabel(*r.object(), perm);
  auto t = transport(r, monotone_map{r.object(), moved, perm});
  check_report(t, moved);
}

TEST_CASE("disconnected posets and the empty poset") {
  auto sum = coproduct({catalog::vee(), ordinal(2), singleton()}).first;
  check_report(witness(sum), sum);
  auto w = witness(empty_poset());
  CHECK(verify_cofibrant(w.certificate).ok());
  CHECK(w.minimum_certificates.empty());
}

TEST_CASE("posets with no route") {
  auto k33 = catalog::named({"a1", "a2", "a3", "b1", "b2", "b3"}, {{"a1", "b1"}, {"a1", "b2"}, {"a1", "b3"},
                                                                   {"a2", "b1"}, {"a2", "b2"}, {"a2", "b3"},
                                                                   {"a3", "b1"}, {"a3", "b2"}, {"a3", "b3"}});
  try {
    witness(k33);
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_witness);
  }
}

TEST_CASE("prefix chains are monotone only for small lattices") {
  CHECK(is_monotone(bool_minus_top_retract(0).i));
  CHECK(is_monotone(bool_minus_top_retract(1).i));
  auto m = bool_minus_top_retract(2);
  CHECK_FALSE(is_monotone(m.i));
  CHECK(compose(m.p, m.i) == identity(m.lattice.order));
  CHECK_FALSE(verify(bool_minus_top_certificate(m)).ok());
  auto small = bool_minus_top_retract(1).lattice.order;
  check_report(witness(small), small);
}

TEST_CASE("retraction search agrees with brute force") {
  oracle::rng g(53);
  std::size_t found = 0, none = 0;
  for (int k = 0; k < 300; ++k) {
    auto amb = oracle::random_poset(g, 2 + oracle::below(g, 5), 0.5);
    elem_list keep;
    for (std::size_t x = 0; x < amb->size(); ++x)
      if (oracle::below(g, 2)) keep.push_back(x);
    if (keep.empty()) continue;
    auto [sub, inc] = subposet(amb, keep);
    retraction_query q{amb, {}, inc};
    auto ours = try_retraction_search(q);
    auto theirs = oracle::first_retraction(q);
    REQUIRE(ours.has_value() == theirs.has_value());
    if (!ours) {
      ++none;
      continue;
    }
    ++found;
    CHECK(ours->image == *theirs);
    CHECK(compose(*ours, inc) == identity(sub));
  }
  CHECK(found > 50);
  CHECK(none > 10);
}

TEST_CASE("ill formed retraction queries") {
  auto amb = ordinal(2);
  auto [sub, inc] = subposet(amb, {0, 2});
  retraction_query q{amb, {std::nullopt, std::nullopt, 0}, inc};
  try {
    retraction_search(q);
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == errc::ill_formed_query);
  }
  auto two = antichain(2);
  retraction_query none{ordinal(1), {}, monotone_map{two, ordinal(1), {0, 1}}};
  CHECK_THROWS_AS(retraction_search(none), error);
}
