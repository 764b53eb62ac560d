#include <doctest.h>

#include <random>

#include "motivic/errors.hpp"
#include "motivic/motring.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

const MotClass L = MotClass::lefschetz();

AtomTable smooth_table() {
  AtomTable t;
  register_atom(t, Atom{"A", 1, BigInt(2), std::nullopt, true, UVPoly::parse("u*v+1")});
  register_atom(t, Atom{"B", 2, BigInt(3), std::nullopt, true, UVPoly::parse("u^2*v^2+u*v+1")});
  register_atom(t, Atom{"C", 0, BigInt(5), 5, true, UVPoly::constant(5)});
  return t;
}

const std::vector<std::string> names{"A", "B", "C"};

}  // namespace

TEST_CASE("ring operations") {
  CHECK(gm() * gm() == L * L - MotClass::constant(2) * L + MotClass::one());
  CHECK((gm() * gm()).str() == "(L^2 - 2*L + 1)");
  const MotClass x = MotClass::atom("A") * L + MotClass::constant(3);
  CHECK((x + (-x)).is_zero());
  const MotClass a3 = MotClass::atom("A").l_pow(-3);
  REQUIRE(a3.terms().size() == 1);
  CHECK(a3.terms().begin()->first == MotClass::Monomial{"A"});
  CHECK(a3.terms().begin()->second == LPoly::monomial(-3));
  CHECK(MotClass::from({"B", "A"}, LPoly::constant(1)) == MotClass::atom("A") * MotClass::atom("B"));
  CHECK(gm() == L - MotClass::one());
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_class(rng, names);
    const auto b = oracle::random_class(rng, names);
    const auto c = oracle::random_class(rng, names);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MotClass::zero());
    CHECK(a * MotClass::one() == a);
    CHECK(a.l_pow(2).l_pow(-2) == a);
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("realizations") {
  const auto t = smooth_table();
  for (long k = -3; k <= 3; ++k) CHECK(chi_realize(MotClass::one().l_pow(k), t) == 1);
  CHECK(chi_realize(MotClass::one() - L, t) == 0);
  CHECK(chi_realize(gm(), t) == 0);
  CHECK(chi_realize(gm() * MotClass::atom("C"), t) == 0);
  CHECK(epoly_realize(L, t) == UVPoly::monomial(1, 1));
  CHECK(epoly_realize(gm(), t).str() == "u*v-1");
  CHECK_THROWS_AS(chi_realize(MotClass::atom("Z"), t), ValidationError);
  AtomTable bare;
  register_atom(bare, Atom{"Z", 1, std::nullopt, std::nullopt, false, std::nullopt});
  CHECK_THROWS_AS(chi_realize(MotClass::atom("Z"), bare), ValidationError);
  CHECK_THROWS_AS(epoly_realize(MotClass::atom("Z"), bare), ValidationError);

  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_class(rng, names);
    const auto b = oracle::random_class(rng, names);
    CHECK(chi_realize(a * b, t) == chi_realize(a, t) * chi_realize(b, t));
    CHECK(chi_realize(a + b, t) == chi_realize(a, t) + chi_realize(b, t));
    CHECK(epoly_realize(a * b, t) == epoly_realize(a, t) * epoly_realize(b, t));
    CHECK(epoly_realize(a, t).at_one() == chi_realize(a, t));
  }
}

TEST_CASE("duality involution") {
  const auto t = smooth_table();
  CHECK(dualize(L, t) == MotClass::one().l_pow(-1));
  AtomTable y;
  register_atom(y, Atom{"Y", 2, std::nullopt, std::nullopt, true, std::nullopt});
  CHECK(dualize(MotClass::atom("Y"), y) == MotClass::atom("Y").l_pow(-2));
  AtomTable open;
  register_atom(open, Atom{"U", 1, std::nullopt, std::nullopt, false, std::nullopt});
  register_atom(open, Atom{"V", std::nullopt, std::nullopt, std::nullopt, true, std::nullopt});
  CHECK_THROWS_AS(dualize(MotClass::atom("U"), open), ValidationError);
  CHECK_THROWS_AS(dualize(MotClass::atom("V"), open), ValidationError);

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_class(rng, names);
    const auto b = oracle::random_class(rng, names);
    CHECK(dualize(dualize(a, t), t) == a);
    CHECK(dualize(a * b, t) == dualize(a, t) * dualize(b, t));
    CHECK(dualize(a + b, t) == dualize(a, t) + dualize(b, t));
  }
}

TEST_CASE("binomial identity") {
  for (long m = 1; m <= 12; ++m) CHECK(verify_binomial_identity(m));
  CHECK_THROWS_AS(verify_binomial_identity(0), ValidationError);
}

TEST_CASE("E-polynomial text") {
  const auto p = UVPoly::parse("u^2*v^2 - 2*u*v + 1");
  CHECK(p.str() == "u^2*v^2-2*u*v+1");
  CHECK(UVPoly::parse(p.str()) == p);
  CHECK(UVPoly::parse("2u^2v^2+1") == UVPoly::parse("2*u^2*v^2+1"));
  CHECK(UVPoly::parse("u^-1*v").str() == "u^-1*v");
  CHECK(UVPoly::parse("-1").at_one() == -1);
  CHECK(UVPoly::parse("u*v-u*v").is_zero());
  CHECK(UVPoly::parse("u*v-u*v").str() == "0");
  CHECK_THROWS_AS(UVPoly::parse(""), ParseError);
  CHECK_THROWS_AS(UVPoly::parse("u+"), ParseError);
  CHECK_THROWS_AS(UVPoly::parse("x"), ParseError);
  CHECK_THROWS_AS(UVPoly::parse("u^"), ParseError);
}

TEST_CASE("atoms") {
  CHECK_THROWS_AS((Atom{"A", 0, BigInt(2), std::nullopt, false, UVPoly::constant(3)}).validate(), ValidationError);
  CHECK_THROWS_AS((Atom{"A", -1, std::nullopt, std::nullopt, false, std::nullopt}).validate(), ValidationError);
  CHECK_THROWS_AS((Atom{"A", 0, std::nullopt, 0, false, std::nullopt}).validate(), ValidationError);
  CHECK_THROWS_AS((Atom{"", 0, std::nullopt, std::nullopt, false, std::nullopt}).validate(), ValidationError);
  AtomTable t;
  register_atom(t, Atom{"A", 0, std::nullopt, std::nullopt, false, std::nullopt});
  CHECK_THROWS_AS(register_atom(t, Atom{"A", 1, std::nullopt, std::nullopt, false, std::nullopt}), ValidationError);
}

TEST_CASE("cyclotomic polynomials and zeta expansion") {
  CHECK(cyclotomic(1) == std::vector<BigInt>{-1, 1});
  CHECK(cyclotomic(6) == std::vector<BigInt>{1, -1, 1});
  CHECK(cyclotomic(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // prod_{d | n} Phi_d = t^n - 1 at t = 2.
  for (long n = 1; n <= 30; ++n) {
    BigInt prod = 1;
    for (long d = 1; d <= n; ++d) {
      if (n % d) continue;
      BigInt v = 0, pw = 1;
      for (const auto& c : cyclotomic(d)) { v += c * pw; pw *= 2; }
      prod *= v;
    }
    CHECK(prod == (BigInt(1) << n) - 1);
  }
  FactoredZeta cusp{{{2, -1}, {3, -1}, {6, 1}}};
  CHECK(cusp.expanded() == "(1-t+t^2)/(1-t)");
  CHECK(cusp.degree() == 1);
  CHECK(FactoredZeta{}.expanded() == "1");
  CHECK(FactoredZeta{{{1, -1}}}.expanded() == "1/(1-t)");
  CHECK(FactoredZeta{{{3, 1}}}.expanded() == "1-t^3");
  FactoredZeta z{{{4, 0}, {2, 1}}};
  z.normalize();
  CHECK(z.factors.size() == 1);
}
