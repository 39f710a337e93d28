#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "cofib/enumerate.hpp"
#include "cofib/oracles.hpp"

using namespace cofib;

TEST_CASE("class counts match brute force over all relations") {
  const std::size_t labeled[] = {1, 3, 19, 219};
  for (std::size_t n = 1; n <= 4; ++n) {
    auto brute = oracle::count_by_brute_force(n);
    auto classes = enumerate_posets(n);
    std::size_t connected = 0;
    for (const auto& p : classes) connected += is_connected(*p);
    CHECK(brute.labeled == labeled[n - 1]);
    CHECK(classes.size() == brute.classes);
    CHECK(connected == brute.connected);
  }
}

TEST_CASE("known class counts") {
  const std::size_t total[] = {1, 2, 5, 16, 63, 318};
  const std::size_t connected[] = {1, 1, 3, 10, 44, 238};
  auto rows = counts_table(6);
  REQUIRE(rows.size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(rows[k].n == k + 1);
    CHECK(rows[k].total == total[k]);
    CHECK(rows[k].connected == connected[k]);
  }
  CHECK(rows[4].semilattice == 25);
  CHECK(rows[3].semilattice == 8);
}

TEST_CASE("each class appears once") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<canonical_form> keys;
    for (const auto& p : enumerate_posets(n)) {
      CHECK(p->size() == n);
      keys.insert(canonical(*p));
    }
    CHECK(keys.size() == enumerate_posets(n).size());
  }
}

TEST_CASE("representatives carry letter labels") {
  auto entries = enumerate(3);
  REQUIRE(entries.size() == 5);
  for (const auto& e : entries) {
    CHECK(e.representative->labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(e.canonical == canonical(*e.representative));
    CHECK_FALSE(e.tags.tags.empty());
  }
  CHECK_THROWS_AS(enumerate(0), error);
  CHECK_THROWS_AS(enumerate(enumerate_limit + 1), error);
}

TEST_CASE("every class up to five elements is certified") {
  auto entries = certify_all(5);
  CHECK(entries.size() == 1 + 2 + 5 + 16 + 63);
  std::size_t connected = 0;
  for (const auto& e : entries) {
    INFO(e.tags.joined());
    REQUIRE(e.result);
    CHECK(e.result->failure == "");
    CHECK(e.result->ok);
    CHECK(e.result->object == verdict::verified);
    CHECK(e.result->minima_verified == e.result->minima);
    connected += e.representative->size() == 5 && e.tags.has("connected");
  }
  CHECK(connected == 44);
}

TEST_CASE("route tallies at five elements") {
  std::vector<catalog_entry> five;
  for (auto& e : certify_all(5))
    if (e.representative->size() == 5) five.push_back(e);
  auto row = count_classes(5, five);
  CHECK(row.total == 63);
  CHECK(row.connected == 44);
  CHECK(row.glued == 9);
  CHECK(row.hand == 9);
}
