#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "popswitch/jw.hpp"
#include "popswitch/karoubi.hpp"
#include "support.hpp"

using namespace popswitch;
using namespace testing;

namespace {

Signature sig(const char* s) { return Signature::parse(s); }
IdempotentObject strands(const char* s) { return IdempotentObject::strands(sig(s)); }

KaroubiOptions bare() {
  KaroubiOptions o;
  o.relations = Relations::kLoopValues;
  return o;
}

Element e1_normalized() { return tl_generator(2, 0) * RatFunc(LaurentPoly(1), quantum_int(2)); }

// Checks the certificate identities on weight-functor images, multiplying
// matrices instead of composing diagrams.
bool holds_on_images(const SumCertificate& c) {
  auto image = [&](const OrElement& x) { return pop_switch_image(x, c.convention); };
  const std::size_t count = c.summands.size();
  WeightMatrix total(c.p.arity(), c.p.arity());
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t k = 0; k < count; ++k) {
      const WeightMatrix product = compose(image(c.v[j]), image(c.u[k]));
      const WeightMatrix expected =
          j == k ? image(c.summands[k].idem()) : WeightMatrix(c.summands[k].arity(), c.summands[j].arity());
      if (!(product == expected)) return false;
    }
    total += compose(image(c.u[j]), image(c.v[j]));
  }
  return total == image(c.p.idem());
}

}  // namespace

TEST_CASE("objects must be idempotent") {
  CHECK_NOTHROW(strands("^v"));
  CHECK_THROWS_AS(IdempotentObject("e_1", lift(tl_generator(2, 0))), std::invalid_argument);
  CHECK_THROWS_AS(IdempotentObject("cup", lift(cup(2, 0))), std::invalid_argument);
  const auto p = IdempotentObject::lifted("p_2", jones_wenzl(2).element);
  REQUIRE(p.unoriented().has_value());
  CHECK(*p.unoriented() == jones_wenzl(2).element);
  CHECK(p.arity() == 2);
}

TEST_CASE("hom space examples") {
  for (const auto& options : {bare(), KaroubiOptions{}}) {
    const auto b = hom_basis(strands("^"), strands("^"), options);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == iota(sig("^")));
    CHECK(hom_basis(strands("^"), strands("v"), options).empty());
  }
  const auto e = IdempotentObject::lifted("e_1/[2]", e1_normalized());
  const auto p2 = IdempotentObject::lifted("p_2", jones_wenzl(2).element);
  KaroubiOptions tl = bare();
  tl.candidates = Candidates::kUnoriented;
  CHECK(hom_basis(e, p2, tl).empty());
  CHECK(hom_basis(p2, e, tl).empty());
  // With oriented diagrams in between, the oriented cups do reach p_2.
  CHECK(hom_basis(e, p2, bare()).size() == 1);
}

TEST_CASE("hom dimensions in the bare model") {
  const auto p2 = IdempotentObject::lifted("p_2", jones_wenzl(2).element);
  CHECK(hom_basis(p2, p2, bare()).size() == 5);
  CHECK(hom_basis(p2, p2).size() == 3);
  CHECK(hom_basis(strands("^v"), strands("v^"), bare()).size() == 1);
  CHECK(hom_basis(strands("^v"), strands("v^")).size() == 1);
  CHECK(hom_basis(strands("^^"), strands("^v")).empty());
}

TEST_CASE("direct-sum hypotheses") {
  const auto id1 = IdempotentObject::lifted("id_1", Element::identity(1));
  CHECK(check_direct_sum_hypotheses(id1, {strands("^"), strands("v")}, bare()));
  const auto id2 = IdempotentObject::lifted("id_2", Element::identity(2));
  const auto p2 = IdempotentObject::lifted("p_2", jones_wenzl(2).element);
  const auto e = IdempotentObject::lifted("e_1/[2]", e1_normalized());
  CHECK(check_direct_sum_hypotheses(id2, {p2, e}, bare()));
  CHECK_FALSE(check_direct_sum_hypotheses(lift(Element::identity(2)),
                                          {lift(jones_wenzl(2).element), lift(tl_generator(2, 0))}, bare()));
  CHECK_FALSE(check_direct_sum_hypotheses(id2, {p2}, bare()));
  CHECK_FALSE(check_direct_sum_hypotheses(id2, {p2, e, e}, bare()));
  CHECK_THROWS_AS(check_direct_sum_hypotheses(id2, {strands("^")}, bare()), std::invalid_argument);
}

TEST_CASE("hypotheses give the degenerate certificate") {
  const auto id2 = IdempotentObject::lifted("id_2", Element::identity(2));
  const std::vector<IdempotentObject> parts = {IdempotentObject::lifted("p_2", jones_wenzl(2).element),
                                               IdempotentObject::lifted("e_1/[2]", e1_normalized())};
  const IsomorphismSearch s = find_isomorphism(id2, parts, bare());
  REQUIRE(s.certificate.has_value());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    CHECK(s.certificate->u[k] == parts[k].idem());
    CHECK(s.certificate->v[k] == parts[k].idem());
  }
  CHECK(revalidate(*s.certificate).ok);
}

TEST_CASE("find_isomorphism examples") {
  const auto p1 = IdempotentObject::lifted("p_1", jones_wenzl(1).element);
  const IsomorphismSearch a = find_isomorphism(p1, {strands("^"), strands("v")}, bare());
  REQUIRE(a.certificate.has_value());
  CHECK(a.certificate->u[0] == iota(sig("^")));
  CHECK(a.certificate->v[1] == iota(sig("v")));

  const auto p2 = IdempotentObject::lifted("p_2", jones_wenzl(2).element);
  for (const auto& options : {bare(), KaroubiOptions{}}) {
    const IsomorphismSearch b = find_isomorphism(p2, {strands("^^")}, options);
    CHECK_FALSE(b.certificate.has_value());
    CHECK_FALSE(b.reason.empty());
  }

  // e_1/[2] factors through the empty object, and so does a normalized
  // oriented cup-cap.
  const auto e = IdempotentObject::lifted("e_1/[2]", e1_normalized());
  const OrMatching cupcap = *OrMatching::with_boundary(tl_generator(2, 0).terms().begin()->first, sig("v^"), sig("v^"));
  const OrElement d(cupcap);
  const OrElement loop = or_compose(d, d);
  const RatFunc lambda = loop.coefficient(cupcap);
  const IdempotentObject oriented("cup-cap", d * lambda.inverse());
  const IsomorphismSearch c = find_isomorphism(e, {oriented}, bare());
  REQUIRE(c.certificate.has_value());
  CHECK(revalidate(*c.certificate).ok);
}

TEST_CASE("revalidation catches tampering") {
  const auto p1 = IdempotentObject::lifted("p_1", jones_wenzl(1).element);
  IsomorphismSearch s = find_isomorphism(p1, {strands("^"), strands("v")}, bare());
  REQUIRE(s.certificate.has_value());
  SumCertificate bad = *s.certificate;
  bad.u[0] = bad.u[0] * RatFunc(2);
  CHECK_FALSE(revalidate(bad).ok);
  bad = *s.certificate;
  std::swap(bad.v[0], bad.v[1]);
  CHECK_FALSE(revalidate(bad).ok);
  bad = *s.certificate;
  bad.u.pop_back();
  CHECK_FALSE(revalidate(bad).ok);
}

TEST_CASE("charge sum") {
  CHECK(charge_sum({sig("^^"), sig("^v"), sig("vv")}) == quantum_int(3));
  CHECK(charge_sum({}) == LaurentPoly());
}

TEST_CASE("Jones-Wenzl decompositions modulo pop-switch") {
  const std::vector<std::vector<const char*>> expected = {
      {"^", "v"}, {"^^", "^v", "vv"}, {"^^^", "^^v", "^vv", "vvv"}, {"^^^^", "^^^v", "^^vv", "^vvv", "vvvv"}};
  for (int n = 1; n <= 4; ++n) {
    const DecompositionSearch s = decompose_jw(n);
    REQUIRE_MESSAGE(s.found.has_value(), s.last_reason);
    const Decomposition& d = *s.found;
    REQUIRE(d.signatures.size() == static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) CHECK(d.signatures[k] == sig(expected[n - 1][k]));
    CHECK(revalidate(d.certificate).ok);
    CHECK(holds_on_images(d.certificate));
    CHECK(d.closure_total == RatFunc(quantum_int(n + 1)));
    CHECK(d.trace == RatFunc(quantum_int(n + 1)));
    CHECK(s.subsets_tried >= 1);
  }
}

TEST_CASE("the mirrored convention also decomposes") {
  KaroubiOptions cw;
  cw.convention = Convention::kClockwiseIsQ;
  for (int n = 1; n <= 3; ++n) {
    const DecompositionSearch s = decompose_jw(n, cw);
    REQUIRE(s.found.has_value());
    CHECK(revalidate(s.found->certificate).ok);
    CHECK(holds_on_images(s.found->certificate));
  }
}

TEST_CASE("the bare model has no decomposition for n >= 2") {
  CHECK(decompose_jw(1, bare()).found.has_value());
  for (int n = 2; n <= 3; ++n) {
    const DecompositionSearch s = decompose_jw(n, bare());
    CHECK_FALSE(s.found.has_value());
    CHECK(s.last_reason.rfind("dimension", 0) == 0);
  }
}

TEST_CASE("serialization") {
  const DecompositionSearch s = decompose_jw(2);
  REQUIRE(s.found.has_value());
  const std::string text = serialize(*s.found);
  CHECK(text.find("signatures: ^^ ^v vv\n") != std::string::npos);
  const std::string tail = "VERIFIED n=2 summands=3\n";
  REQUIRE(text.size() > tail.size());
  CHECK(text.substr(text.size() - tail.size()) == tail);
  CHECK(serialize(*decompose_jw(2).found) == text);
  CHECK_THROWS_AS(decompose_jw(0), std::domain_error);
  CHECK_THROWS_AS(decompose_jw(5), std::domain_error);
}
