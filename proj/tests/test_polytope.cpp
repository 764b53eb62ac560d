#include <doctest.h>

#include <random>

#include "motivic/errors.hpp"
#include "motivic/polytope.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

Constraint con(std::initializer_list<long> a, Rational b, Relation rel) {
  return Constraint{AffineForm{std::vector<BigInt>(a.begin(), a.end()), b}, rel};
}

PolyFormula single(std::size_t dim, Conjunction c) { return PolyFormula{dim, {std::move(c)}}; }

const PolyFormula interval = single(1, {con({1}, 0, Relation::gt), con({-1}, 1, Relation::gt)});
const PolyFormula ray = single(1, {con({1}, 0, Relation::gt)});
const PolyFormula closed_unit = single(1, {con({1}, 0, Relation::ge), con({-1}, 1, Relation::ge)});

}  // namespace

TEST_CASE("decompose examples") {
  const auto cx = decompose(interval);
  CHECK(cx.forms.size() == 2);
  CHECK(cx.cells.size() == 5);
  int satisfied = 0;
  for (const auto& c : cx.cells) {
    if (!c.satisfied) continue;
    ++satisfied;
    CHECK(c.dim == 1);
    CHECK(c.bounded);
    CHECK(interval.contains(c.witness));
  }
  CHECK(satisfied == 1);

  const auto plane = decompose(whole_space(2));
  REQUIRE(plane.cells.size() == 1);
  CHECK(plane.cells[0].dim == 2);
  CHECK_FALSE(plane.cells[0].bounded);

  const auto axis = decompose(single(2, {con({1, 0}, 0, Relation::eq)}));
  for (const auto& c : axis.cells) {
    if (!c.satisfied) continue;
    CHECK(c.dim == 1);
    CHECK_FALSE(c.bounded);
  }
}

TEST_CASE("cells are sign cells with valid witnesses") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_formula(rng, {static_cast<std::size_t>(oracle::uniform(rng, 1, 3)), 2, 3, 2});
    const auto cx = decompose(f);
    for (const auto& c : cx.cells) {
      REQUIRE(c.signs.size() == cx.forms.size());
      for (std::size_t i = 0; i < cx.forms.size(); ++i) CHECK(cx.forms[i].eval(c.witness).sign() == c.signs[i]);
      CHECK(f.contains(c.witness) == c.satisfied);
    }
  }
}

TEST_CASE("eu examples") {
  CHECK(eu(interval) == -1);
  CHECK(eu(ray) == -1);
  CHECK(eu(closed_simplex(2)) == 1);
  CHECK(eu(single(1, {con({1}, 0, Relation::eq)})) == 1);
  for (std::size_t k = 0; k <= 4; ++k) CHECK(eu(open_cube(k)) == (k % 2 == 0 ? 1 : -1));
  CHECK(eu(PolyFormula{2, {}}) == 0);
  CHECK(eu(whole_space(0)) == 1);
}

TEST_CASE("eu_c examples") {
  CHECK(eu_c(ray) == 0);
  CHECK(eu_c(open_cube(2)) == 1);
  CHECK(eu_c(whole_space(1)) == 1);
  CHECK(eu_c(whole_space(3)) == 1);
  CHECK(eu_c(closed_unit) == 1);
  CHECK(eu_c(single(1, {con({1}, 0, Relation::ge)})) == 1);
  CHECK(eu_c(product(ray, closed_unit)) == 0);
}

TEST_CASE("transform examples") {
  const std::vector<Rational> zero2{0, 0};
  const auto strip = product(interval, single(1, {con({1}, 0, Relation::eq)}));
  const IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}}, 2);
  const auto swapped = transform(strip, swap, zero2);
  const std::vector<Rational> p{0, Rational(BigInt(1), BigInt(2))};
  CHECK(swapped.contains(p));
  CHECK_FALSE(strip.contains(p));

  const std::vector<Rational> half{Rational(BigInt(1), BigInt(2))};
  const auto shifted = transform(ray, IntMatrix::identity(1), half);
  CHECK_FALSE(shifted.contains(std::vector<Rational>{Rational(BigInt(1), BigInt(2))}));
  CHECK(shifted.contains(std::vector<Rational>{Rational(BigInt(3), BigInt(4))}));

  CHECK_THROWS_AS(transform(ray, IntMatrix::from_rows({{2}}, 1), std::vector<Rational>{0}), ValidationError);
}

TEST_CASE("product examples") {
  CHECK(eu(product(interval, interval)) == 1);
  CHECK(eu(product(whole_space(0), interval)) == eu(interval));
  CHECK(eu(product(ray, closed_unit)) == -1);
  CHECK(product(ray, closed_unit).dim == 2);
}

TEST_CASE("eu and eu_c agree with the brute-force oracles") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto dim = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto f = oracle::random_formula(rng, {dim, 2, 3, 2});
    CAPTURE(trial);
    CHECK(eu(f) == oracle::eu(f));
    CHECK(eu_c(f) == oracle::eu_c(f));
  }
}

TEST_CASE("additivity and multiplicativity") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dim = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto f = oracle::random_formula(rng, {dim, 2, 2, 2});
    const auto g = oracle::random_formula(rng, {dim, 2, 2, 2});
    CHECK(eu(disjoin(f, g)) + eu(conjoin(f, g)) == eu(f) + eu(g));
    CHECK(eu_c(disjoin(f, g)) + eu_c(conjoin(f, g)) == eu_c(f) + eu_c(g));
    const auto h = oracle::random_formula(rng, {1, 1, 2, 2});
    CHECK(eu(product(f, h)) == eu(f) * eu(h));
    CHECK(eu_c(product(f, h)) == eu_c(f) * eu_c(h));
  }
}

TEST_CASE("invariance under affine unimodular maps") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto dim = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto f = oracle::random_formula(rng, {dim, 2, 3, 2});
    const auto a = oracle::random_unimodular(rng, dim);
    const auto b = oracle::random_translation(rng, dim);
    const auto g = transform(f, a, b);
    CHECK(eu(g) == eu(f));
    CHECK(eu_c(g) == eu_c(f));
  }
}

TEST_CASE("closed and open bounded convex sets") {
  std::mt19937_64 rng(25);
  for (std::size_t k = 0; k <= 4; ++k) {
    const long open_value = k % 2 == 0 ? 1 : -1;
    CHECK(eu(closed_simplex(k)) == 1);
    CHECK(eu_c(closed_simplex(k)) == 1);
    CHECK(eu(open_simplex(k)) == open_value);
    CHECK(eu_c(open_simplex(k)) == open_value);
    const auto a = oracle::random_unimodular(rng, k);
    const auto b = oracle::random_translation(rng, k);
    CHECK(eu(transform(open_cube(k), a, b)) == open_value);
    CHECK(eu_c(transform(closed_simplex(k), a, b)) == 1);
  }
}

TEST_CASE("eu_c stabilizes past the chosen radius") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 60; ++trial) {
    const auto dim = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    const auto f = oracle::random_formula(rng, {dim, 2, 3, 3});
    const auto r = eu_c_report(f);
    CHECK(r.value == r.guard_value);
    CHECK(eu_in_box(f, 3 * r.box_radius + 7) == r.value);
  }
}

TEST_CASE("bounds and validation") {
  CHECK_THROWS_AS(eu(whole_space(7)), BoundError);
  CHECK_NOTHROW(eu(whole_space(7), Limits{8, 32}));
  Conjunction many;
  for (long i = 0; i < 40; ++i) many.push_back(con({1}, Rational(BigInt(i)), Relation::ge));
  CHECK_THROWS_AS(eu(single(1, many)), BoundError);
  CHECK_THROWS_AS(eu(single(2, {con({1}, 0, Relation::gt)})), ValidationError);
  CHECK_THROWS_AS(disjoin(ray, whole_space(2)), ValidationError);
}

TEST_CASE("batch evaluation matches across execution policies") {
  std::mt19937_64 rng(27);
  std::vector<PolyFormula> fs;
  for (int i = 0; i < 40; ++i) fs.push_back(oracle::random_formula(rng, {2, 2, 3, 2}));
  const auto serial = eu_batch(fs, Exec::serial);
  CHECK(serial == eu_batch(fs, Exec::parallel));
  CHECK(eu_c_batch(fs, Exec::serial) == eu_c_batch(fs, Exec::parallel));
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(serial[i] == eu(fs[i]));
}
