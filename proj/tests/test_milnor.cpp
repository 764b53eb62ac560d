#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "motivic/errors.hpp"
#include "motivic/milnor.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

const MotClass L = MotClass::lefschetz();

MotClass q(Subset s) { return MotClass::atom(open_atom_name(s)); }

MotClass signed_gm(long k) { return MotClass::constant(k % 2 == 0 ? 1 : -1) * gm().pow(k); }

// The duality involution on open-stratum classes, extended as a ring morphism.
MotClass dual_open(const StratumConfig& c, const MotClass& x) {
  std::map<std::string, Subset> by_name;
  for (Subset s = 1; s <= c.full(); ++s) by_name.emplace(open_atom_name(s), s);
  MotClass out;
  for (const auto& [m, coeff] : x.terms()) {
    MotClass term = MotClass::from({}, coeff.inverted());
    for (const auto& name : m) term = term * dualize_open_stratum(c, by_name.at(name));
    out += term;
  }
  return out;
}

}  // namespace

TEST_CASE("fixture Euler characteristics match Milnor numbers") {
  CHECK(milnor_chi(load_resolution("smooth_point")) == 1);
  CHECK(milnor_chi(load_resolution("node")) == 1 - oracle::milnor_mu(2, 2));
  CHECK(milnor_chi(load_resolution("cusp")) == 1 - oracle::milnor_mu(2, 3));
  CHECK(milnor_chi(load_resolution("ordinary_triple_point")) == 1 - oracle::milnor_mu(3, 3));
  for (long k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(milnor_chi(load_resolution("a_" + std::to_string(k))) == 1 - oracle::milnor_mu(2, k + 1));
  }
}

TEST_CASE("fixture classes") {
  const auto point = load_resolution("smooth_point");
  CHECK(milnor_class(point) == MotClass::atom("cover[E]"));

  const auto node = load_resolution("node");
  CHECK(milnor_class(node) == -(gm() * MotClass::atom("cover[E1,E2]")));
  CHECK(milnor_epoly(node) == UVPoly::parse("1-u*v"));

  const auto cusp = load_resolution("cusp");
  const auto atoms = milnor_atoms(cusp);
  CHECK(atoms.at("cover[E3]").cover_degree == 6);
  CHECK(atoms.at("cover[E3]").chi == BigInt(-6));
  CHECK(atoms.at("cover[E1,E3]").cover_degree == 2);
  CHECK(atoms.at("cover[E1,E3]").dim == 0);
  CHECK(atoms.count("cover[S]") == 0);
  CHECK(milnor_epoly(cusp) == UVPoly::parse("1-u-v"));
  CHECK(milnor_epoly(cusp).at_one() == milnor_chi(cusp));
}

TEST_CASE("A'Campo zeta functions") {
  const auto cusp = acampo_zeta(load_resolution("cusp"));
  CHECK(cusp == FactoredZeta{{{2, -1}, {3, -1}, {6, 1}}});
  CHECK(cusp.expanded() == "(1-t+t^2)/(1-t)");
  CHECK(acampo_zeta(load_resolution("node")).factors.empty());
  CHECK(acampo_zeta(load_resolution("smooth_point")) == FactoredZeta{{{1, -1}}});
  CHECK(acampo_zeta(load_resolution("ordinary_triple_point")) == FactoredZeta{{{3, 1}}});
  // x^2 + y^(k+1): the Milnor fiber has Euler characteristic 1 - k.
  for (long k = 1; k <= 6; ++k) {
    const auto r = load_resolution("a_" + std::to_string(k));
    CHECK(zeta_degree_check(r));
    CHECK(acampo_zeta(r).degree() == k - 1);
  }
}

TEST_CASE("zeta degree identity on random data") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = oracle::random_resolution(rng);
    CHECK(zeta_degree_check(r));
    BigInt expected = 0;
    for (const auto& s : r.strata)
      if (s.on.size() == 1) expected += *s.chi * cover_degree(r, s.on);
    CHECK(milnor_chi(r) == expected);
  }
}

TEST_CASE("resolution validation") {
  ResolutionData r;
  r.dim = 2;
  r.components = {{"E", 2}};
  r.strata = {{{"F"}, BigInt(1), std::nullopt, std::nullopt, true}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.strata = {{{"E"}, BigInt(1), UVPoly::constant(2), std::nullopt, true}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.strata = {{{"E"}, BigInt(1), std::nullopt, std::nullopt, true}, {{"E"}, BigInt(2), std::nullopt, std::nullopt, true}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.strata.clear();
  r.components = {{"E", 0}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.components = {{"E", 1}, {"E", 2}};
  CHECK_THROWS_AS(r.validate(), ValidationError);
  r.components = {{"E", 1}};
  r.strata = {{{"E"}, std::nullopt, std::nullopt, std::nullopt, true}};
  CHECK_THROWS_AS(milnor_chi(r), ValidationError);
  CHECK_THROWS_AS(acampo_zeta(r), ValidationError);
}

TEST_CASE("closed and open stratum bases") {
  const StratumConfig one{1, 1};
  CHECK(closed_from_open(one, 1) == q(1));
  const StratumConfig two{1, 2};
  CHECK(closed_from_open(two, 0b01) == q(0b01) + q(0b11));
  CHECK_THROWS_AS(closed_from_open(two, 0), ValidationError);
  CHECK_THROWS_AS(closed_from_open(two, 0b100), ValidationError);

  for (std::size_t n = 1; n <= 6; ++n) {
    const StratumConfig c{static_cast<long>(n) + 1, n};
    std::map<std::string, Subset> closed;
    for (Subset s = 1; s <= c.full(); ++s) closed.emplace(closed_atom_name(s), s);
    for (Subset i = 1; i <= c.full(); ++i) {
      const auto back = open_from_closed(c, i).substitute(
          [&](const std::string& name) { return closed_from_open(c, closed.at(name)); });
      CHECK(back == q(i));
    }
  }
}

TEST_CASE("dual of an open stratum") {
  CHECK(dualize_open_stratum(StratumConfig{1, 1}, 1) == q(1).l_pow(-1));
  const StratumConfig two{1, 2};
  CHECK(dualize_open_stratum(two, 0b01) == (q(0b01) - gm() * q(0b11)).l_pow(-1));
  for (std::size_t n = 1; n <= 4; ++n)
    for (long d = 0; d <= 4; ++d) {
      const StratumConfig c{d, n};
      for (Subset i = 1; i <= c.full(); ++i) {
        const MotClass expected = stratum_dim(c, i) < 0 ? MotClass{} : q(i);
        CHECK(dual_open(c, dualize_open_stratum(c, i)) == expected);
      }
    }
}

TEST_CASE("cohomological class of an open stratum") {
  const StratumConfig two{2, 2};
  CHECK(cohom_vee_class(two, 0b11) == q(0b11));
  CHECK(cohom_vee_class(two, 0b01) == q(0b01) - gm() * q(0b11));
  AtomTable chi;
  for (Subset s = 1; s <= two.full(); ++s) register_atom(chi, Atom{open_atom_name(s), 0, BigInt(s * 7), std::nullopt, false, std::nullopt});
  CHECK(chi_realize(cohom_vee_class(two, 0b01), chi) == 7);
}

TEST_CASE("stratum duality") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long d = 0; d <= 6; ++d) CHECK(check_stratum_duality(StratumConfig{d, n}));

  // Zero-dimensional strata: d = |I| - 1.
  const StratumConfig c{1, 2};
  CHECK(stratum_dim(c, 0b11) == 0);
  CHECK(cohom_vee_class(c, 0b11) == dualize_open_stratum(c, 0b11));

  // Forgetting one twist breaks the identity.
  auto atoms = config_atoms(c);
  atoms.at(closed_atom_name(0b01)).dim = 0;
  CHECK(cohom_vee_class(c, 0b01) != dualize_open_stratum(c, 0b01, atoms).l_pow(stratum_dim(c, 0b01)));
}

TEST_CASE("tube classes") {
  const StratumConfig one{2, 1};
  CHECK(tube_chi_class(one, 1) == q(1));
  CHECK(tube_cohom_class(one, 1) == q(1));
  const StratumConfig two{2, 2};
  CHECK(tube_chi_class(two, 0b01) == q(0b01) - gm() * q(0b11));
  CHECK(tube_cohom_class(two, 0b01) == cohom_vee_class(two, 0b01));

  AtomTable node_like;
  for (Subset s = 1; s <= two.full(); ++s)
    register_atom(node_like, Atom{open_atom_name(s), 0, BigInt(s == 0b11 ? 1 : 0), std::nullopt, false, std::nullopt});
  CHECK(chi_realize(tube_chi_class(two, 0b11), node_like) == 0);

  const StratumConfig three{3, 3};
  for (Subset jp = 1; jp <= three.full(); ++jp) CHECK(check_tube_duality(three, jp));

  // A boundary class of +(L-1) instead of -(L-1) breaks the identity.
  MotClass wrong;
  for (Subset i = 1; i <= three.full(); ++i) {
    const long k = std::popcount(i) - 1;
    wrong += MotClass::constant(k % 2 == 0 ? 1 : -1) * cohom_vee_class(three, i) * gm().pow(k);
  }
  CHECK(wrong != tube_chi_class(three, three.full()));
  CHECK_THROWS_AS(tube_chi_class(three, 0), ValidationError);
}

TEST_CASE("tube terms realize through E_c") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const StratumConfig c{4, n};
    for (Subset i = 1; i <= c.full(); ++i) {
      const long k = std::popcount(i) - 1;
      CHECK(realize_ec(tube_rv_term(c, i)) == signed_gm(k) * q(i));
    }
  }
  for (const char* name : {"cusp", "node", "a_4", "ordinary_triple_point"}) {
    const auto r = load_resolution(name);
    CHECK(realize_ec(milnor_rv_class(r)) == milnor_class(r));
  }
}

TEST_CASE("sweeps agree across execution policies") {
  const auto serial = sweep(4, 3, true, true, Exec::serial);
  const auto parallel = sweep(4, 3, true, true, Exec::parallel);
  CHECK(serial.ok());
  CHECK(parallel.ok());
  CHECK(serial.stratum_checks == parallel.stratum_checks);
  CHECK(serial.tube_checks == parallel.tube_checks);
  CHECK(serial.configs == 16);
  CHECK(check_stratum_duality(StratumConfig{3, 4}, Exec::serial));
  CHECK(check_tube_duality_all(StratumConfig{3, 4}, Exec::parallel));
  CHECK_THROWS_AS(sweep(13, 1, true, true), BoundError);
}
