#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "cofib/analyze.hpp"
#include "cofib/serialize.hpp"
#include "cofib/suite.hpp"

using namespace cofib;

namespace {

bool failed_on(const verification_report& r, const std::string& path, const std::string& needle) {
  const auto* f = r.first_failure();
  return f && f->path == path && f->condition.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("a vertex inclusion axiom verifies") {
  auto c = ax_sd_vertex(2, 0);
  auto r = verify(c);
  CHECK(r.ok());
  CHECK(r.result() == verdict::verified);
  CHECK(c->conclusion.target->size() == 7);
}

TEST_CASE("a composite with a mismatched middle fails at the root") {
  auto a = ax_sd_vertex(2, 0);
  auto b = ax_sd_vertex(1, 1);
  auto bad = make_cert({rule::r_compose, a->conclusion, {a, b}, {}, {}});
  auto r = verify(bad);
  CHECK_FALSE(r.ok());
  CHECK(failed_on(r, "root", "CompositionMismatch"));
  CHECK_THROWS_AS(r_compose(a, b), error);
}

TEST_CASE("the diamond witness verifies") {
  auto w = witness(catalog::diamond());
  CHECK(verify_cofibrant(w.certificate).ok());
  CHECK(w.theorem == "sliscof");
  REQUIRE(w.minimum_certificates.size() == 1);
  CHECK(verify(w.minimum_certificates.begin()->second).ok());
}

TEST_CASE("a singleton through the terminal object") {
  auto pt = singleton();
  cofibrant_certificate c{pt, origin::terminal, ax_iso(identity(pt))};
  auto r = verify_cofibrant(c);
  CHECK(r.ok());
  CHECK(as_initial(c)->conclusion.source->empty());
}

TEST_CASE("a certificate for another object is rejected") {
  auto pt = singleton();
  cofibrant_certificate c{ordinal(1), origin::terminal, ax_iso(identity(pt))};
  auto r = verify_cofibrant(c);
  CHECK_FALSE(r.ok());
  CHECK(failed_on(r, "object", "targets the object"));
}

TEST_CASE("single subdivision leaves are conditional under strict axioms") {
  auto f = point_at(singleton(), ordinal(1), 0);
  auto c = ax_sd_mono(f);
  auto r = verify(c);
  CHECK(r.ok());
  CHECK(r.uses_sd_mono);
  CHECK(r.result(false) == verdict::verified);
  CHECK(r.result(true) == verdict::conditional);
  CHECK(verify(ax_sd2_mono(f)).result(true) == verdict::verified);
}

TEST_CASE("axiom side conditions") {
  auto two = antichain(2);
  auto collapse = ax_sd2_mono(monotone_map{two, singleton(), {0, 0}});
  CHECK(failed_on(verify(collapse), "root", "injective"));
  CHECK(verify(ax_sd2_boundary(1)).ok());
  CHECK(verify(ax_sd2_boundary(2)).ok());
  auto swap = ax_iso(monotone_map{ordinal(1), ordinal(1), {0, 0}});
  CHECK_FALSE(verify(swap).ok());
}

TEST_CASE("pushout nodes verify up to isomorphism") {
  auto leaf = ax_sd_vertex(1, 0);
  auto other = point_at(singleton(), ordinal(2), 2);
  auto step = r_pushout(leaf, other);
  CHECK(verify(step.cert).ok());
  std::vector<std::size_t> perm(step.result.object->size());
  for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = perm.size() - 1 - x;
  auto moved = relabel(*step.result.object, perm);
  monotone_map phi{step.result.object, moved, perm};
  auto renamed = r_pushout_given(leaf, other, compose(phi, step.result.from_right), compose(phi, step.result.from_left));
  CHECK(verify(renamed).ok());
}

TEST_CASE("coproduct and sequential nodes") {
  auto a = ax_sd_vertex(1, 0);
  auto b = ax_sd_vertex(2, 1);
  CHECK(verify(r_coproduct({a, b})).ok());
  CHECK(verify(r_coproduct({})).ok());
  auto s = staged_chain_certificate(3);
  CHECK(verify(s).ok());
  CHECK(s->kind == rule::r_seq_compose);
}

TEST_CASE("every conclusion entry mutation is caught") {
  auto w = witness(catalog::w_fence());
  std::vector<cert_ptr> nodes;
  std::set<const certificate*> seen;
  suite_detail::collect_nodes(as_initial(w.certificate), seen, nodes);
  std::size_t tried = 0;
  for (const auto& n : nodes)
    for (const auto& m : suite_detail::mutations_of(n, {})) {
      if (m.what.rfind("conclusion", 0) != 0) continue;
      CHECK_FALSE(verify(m.cert).ok());
      if (++tried >= 400) break;
    }
  CHECK(tried > 20);
}

TEST_CASE("rule names round trip") {
  for (rule r : all_rules) CHECK(rule_from_name(rule_name(r)) == r);
  CHECK_FALSE(rule_from_name("R_NOTHING"));
}

TEST_CASE("a leaf round trips through text") {
  auto c = ax_sd_vertex(2, 0);
  auto text = serialize(c);
  auto back = deserialize(text);
  CHECK(structurally_equal(*c, *back));
  CHECK(serialize(back) == text);
}

TEST_CASE("the largest catalog certificate round trips") {
  const auto& r = catalog_witness("P7");
  certificate_file f;
  f.object = r.object();
  f.cofibrant = r.certificate;
  f.minima = r.minimum_certificates;
  auto text = serialize(f);
  auto back = deserialize_file(text);
  REQUIRE(back.cofibrant);
  CHECK(structurally_equal(*back.cofibrant->cert, *r.certificate.cert));
  CHECK(back.cofibrant->via == r.certificate.via);
  CHECK(*back.object == *r.object());
  CHECK(back.minima.size() == r.minimum_certificates.size());
  CHECK(verify_cofibrant(*back.cofibrant).ok());
  CHECK(serialize(back) == text);
}

TEST_CASE("truncated certificate text is a parse error") {
  auto text = serialize(catalog_witness("P7").certificate.cert);
  for (std::size_t cut : {std::size_t{0}, text.size() / 3, text.size() / 2, text.size() - 2}) {
    try {
      deserialize(text.substr(0, cut));
      FAIL("truncated input accepted");
    } catch (const parse_error& e) {
      CHECK(e.line() >= 1);
    }
  }
}

TEST_CASE("malformed certificate text") {
  CHECK_THROWS_AS(deserialize_file("cofib-certificate 2\n"), parse_error);
  CHECK_THROWS_AS(deserialize_file("cofib-certificate 1\ncertificate (AX_NOPE)\n"), parse_error);
  CHECK_THROWS_AS(deserialize_file("cofib-certificate 1\ncertificate @3\n"), parse_error);
}
