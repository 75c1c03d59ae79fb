#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bipknot/laurent.hpp"

using namespace bipknot;

namespace {

LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }

LaurentPoly random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(-4, 4), coeff(-5, 5);
  LaurentPoly p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) p.add_term(exp(rng), coeff(rng));
  return p;
}

IntPoly random_intpoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coeff(-5, 5);
  std::vector<Int> c(static_cast<size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("add") {
  CHECK((L("1 + t") + L("-1 - t")).is_zero());
  CHECK(L("t") + L("t^-1 - 2") == L("t + t^-1 - 2"));
  CHECK(L("1 + t") + L("1 + t^-1") == L("t + 2 + t^-1"));
}

TEST_CASE("mul") {
  CHECK(L("1 + t") * L("1 + t^-1") == L("t + 2 + t^-1"));
  LaurentPoly p = L("3*t^2 - t^-1 + 5");
  CHECK(p * L("1") == p);
  CHECK(L("1 - t") * L("1 - t^-1") == L("2 - t - t^-1"));
}

TEST_CASE("substitute_z2") {
  CHECK(substitute_z2(IntPoly::x()) == L("t + t^-1 - 2"));
  CHECK(substitute_z2(IntPoly(1)) == L("1"));
  CHECK(substitute_z2(IntPoly::x() + IntPoly(4)) == L("t + t^-1 + 2"));
}

TEST_CASE("extract_z2") {
  CHECK(extract_z2(L("t + t^-1 - 2")) == IntPoly::x());
  CHECK(!extract_z2(L("1 + t")).has_value());
  CHECK(extract_z2(L("t + t^-1 + 2")) == IntPoly::x() + IntPoly(4));
}

TEST_CASE("canonical_unit_form") {
  CHECK(canonical_unit_form(L("-t^2 - t^3")) == L("1 + t"));
  CHECK(canonical_unit_form(L("t^-1 - 1 + t")) == L("1 - t + t^2"));
  CHECK(canonical_unit_form(L("5")) == L("5"));
  CHECK_THROWS(canonical_unit_form(LaurentPoly()));
}

TEST_CASE("eval") {
  CHECK(L("1 + t").eval(-1) == 0);
  CHECK(L("t + t^-1 - 2").eval(1) == 0);
  CHECK(L("t + t^-1 - 2").eval(-1) == -4);
  CHECK(L("t^2 - t^-1").eval(Rat(1, 2)) == Rat(-7, 4));
  CHECK_THROWS(L("t").eval(0));
}

TEST_CASE("render round-trip and format") {
  CHECK(L("t^-2 - 3 + 2*t").render() == "t^-2 - 3 + 2*t");
  CHECK(LaurentPoly().render() == "0");
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    LaurentPoly p = random_laurent(rng);
    CHECK(LaurentPoly::parse(p.render()) == p);
  }
  CHECK_THROWS(LaurentPoly::parse("t +"));
  CHECK_THROWS(LaurentPoly::parse("q^2"));
  CHECK_THROWS(LaurentPoly::parse(""));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitute_z2 is a ring homomorphism, inverse to extract_z2") {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    IntPoly p = random_intpoly(rng), q = random_intpoly(rng);
    CHECK(substitute_z2(p * q) == substitute_z2(p) * substitute_z2(q));
    CHECK(substitute_z2(p + q) == substitute_z2(p) + substitute_z2(q));
    auto back = extract_z2(substitute_z2(p));
    REQUIRE(back.has_value());
    CHECK(*back == p);
    CHECK(substitute_z2(p).is_symmetric());
  }
}

TEST_CASE("canonical form kills units") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly p = random_laurent(rng);
    if (p.is_zero()) continue;
    std::uniform_int_distribution<int> shift(-5, 5), sgn(0, 1);
    LaurentPoly q = p.shifted(shift(rng));
    if (sgn(rng)) q = -q;
    CHECK(canonical_unit_form(q) == canonical_unit_form(p));
    CHECK(canonical_unit_form(canonical_unit_form(p)) == canonical_unit_form(p));
  }
}

TEST_CASE("divrem and divexact") {
  IntPoly xp4 = IntPoly::x() + IntPoly(4);
  IntPoly p = IntPoly::x(2) + IntPoly(7) * IntPoly::x() + IntPoly(12);
  auto [q, r] = p.divrem_monic(xp4);
  CHECK(q * xp4 + r == p);
  CHECK(r == IntPoly());
  CHECK(p.divexact(xp4) == q);
  CHECK_THROWS(IntPoly::x().divexact(IntPoly(2)));
  // remainder mod x+4 is evaluation at -4
  IntPoly f(std::vector<Int>{3, -1, 2, 5});
  auto [q2, r2] = f.divrem_monic(xp4);
  CHECK(q2 * xp4 + r2 == f);
  CHECK(r2.degree() <= 0);
  Int at = f.eval(-4);
  CHECK(r2.coeff(0) == at);
}
