#include <doctest.h>

#include <random>

#include "motivic/errors.hpp"
#include "motivic/exactalg.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

IntMatrix rows(std::initializer_list<std::initializer_list<long>> r, std::size_t cols) {
  std::vector<std::vector<BigInt>> out;
  for (auto row : r) out.push_back(ints(row));
  return IntMatrix::from_rows(out, cols);
}

ScaledLattice lattice(long den, std::initializer_list<std::initializer_list<long>> r, std::size_t cols) {
  return ScaledLattice(den, rows(r, cols));
}

// Cofactor expansion along the first row.
BigInt laplace(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor.at(r - 1, kk++) = m.at(r, k);
    const BigInt term = m.at(0, c) * laplace(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = oracle::uniform(rng, -bound, bound);
  return m;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t prev = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t p = 0;
    while (p < h.cols() && h.at(r, p) == 0) ++p;
    if (p == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r > 0 && p <= prev) return false;
    if (h.at(r, p) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h.at(above, p) < 0 || h.at(above, p) >= h.at(r, p)) return false;
    prev = p;
  }
  return true;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0");
  CHECK(Rational(BigInt(0), BigInt(-7)).denominator() == 1);
  CHECK(Rational::parse("6/4") == Rational(BigInt(3), BigInt(2)));
  CHECK(Rational::parse("-5").str() == "-5");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("0.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1 /2"), ParseError);
}

TEST_CASE("gcd_vec") {
  CHECK(gcd_vec(ints({4, 6, 0})) == 2);
  CHECK(gcd_vec(ints({2, 3, 6, 1})) == 1);
  CHECK(gcd_vec(ints({})) == 0);
  CHECK(gcd_vec(ints({0, 0})) == 0);
  CHECK(gcd_vec(ints({-12, 18})) == 6);
}

TEST_CASE("hnf examples") {
  CHECK(hnf(IntMatrix::identity(2)) == IntMatrix::identity(2));
  CHECK(hnf(rows({{2, 0}, {1, 1}}, 2)) == rows({{1, 1}, {0, 2}}, 2));
  CHECK(hnf(rows({{0, 0}}, 2)) == rows({{0, 0}}, 2));
  CHECK(hnf(rows({{0, 3}, {0, 5}, {4, 1}}, 2)) == rows({{4, 0}, {0, 1}, {0, 0}}, 2));
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const auto c = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const IntMatrix m = random_matrix(rng, r, c, 6);
    const auto [h, u] = hnf_with_transform(m);
    CHECK(is_hnf(h));
    CHECK(h == u * m);
    CHECK(abs(determinant(u)) == 1);
    CHECK(hnf(h) == h);
    // Same row lattice: m = u^-1 h.
    CHECK(inverse_unimodular(u) * h == m);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const IntMatrix m = random_matrix(rng, n, n, 5);
    CHECK(determinant(m) == laplace(m));
  }
}

TEST_CASE("rank and unimodular inverse") {
  CHECK(rank(rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(rank(rows({{1, 2}, {2, 5}}, 2)) == 2);
  CHECK(inverse_unimodular(rows({{1, 1}, {0, 1}}, 2)) == rows({{1, -1}, {0, 1}}, 2));
  CHECK_THROWS_AS(inverse_unimodular(rows({{2, 0}, {0, 1}}, 2)), ValidationError);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 4));
    const IntMatrix a = oracle::random_unimodular(rng, n);
    CHECK(a * inverse_unimodular(a) == IntMatrix::identity(n));
  }
}

TEST_CASE("lattice equality") {
  CHECK(lattice_equal(lattice(1, {{0, 1}}, 2), lattice(2, {{0, 2}}, 2)));
  CHECK_FALSE(lattice_equal(lattice(2, {{1, 1}, {2, 0}}, 2), lattice(1, {{1, 0}, {0, 1}}, 2)));
  const auto l = lattice(3, {{1, 2}, {0, 3}}, 2);
  CHECK(lattice_equal(l, l));
  CHECK_THROWS_AS(lattice_equal(lattice(1, {{1}}, 1), lattice(1, {{1, 0}}, 2)), ValidationError);
  CHECK_THROWS_AS(ScaledLattice(0, IntMatrix::identity(1)), ValidationError);
}

TEST_CASE("cover lattices") {
  CHECK(lattice_equal(cover_lattice(1, ints({5, 7})), lattice(1, {{1, 0}, {0, 1}}, 2)));
  CHECK(lattice_equal(cover_lattice(2, ints({1, 1})), lattice(2, {{1, 1}, {0, 2}}, 2)));
  // Contains (1/2, 3/4), i.e. (2, 3)/4.
  const auto m = cover_lattice(4, ints({2, 3}));
  CHECK(lattice_equal(m, lattice(4, {{2, 1}, {0, 2}}, 2)));
  CHECK(lattice_equal(m, lattice(4, {{2, 3}, {0, 2}}, 2)));
  CHECK(m.denominator() == 4);
  CHECK_THROWS_AS(cover_lattice(0, ints({1})), ValidationError);
}

TEST_CASE("restriction to first coordinate zero") {
  CHECK(lattice_equal(restrict_first_zero(cover_lattice(2, ints({1, 1}))), lattice(1, {{1}}, 1)));
  CHECK(lattice_equal(restrict_first_zero(cover_lattice(4, ints({2, 3}))), lattice(2, {{1}}, 1)));
  CHECK(lattice_equal(restrict_first_zero(lattice(1, {{1, 0}, {0, 1}}, 2)), lattice(1, {{1}}, 1)));
}

TEST_CASE("normalization lattice lemma") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const BigInt n = oracle::uniform(rng, 1, 12);
    const auto d = static_cast<std::size_t>(oracle::uniform(rng, 2, 4));
    std::vector<BigInt> a;
    for (std::size_t i = 0; i < d; ++i) a.emplace_back(oracle::uniform(rng, -12, 12));
    BigInt np;
    mpz_gcd(np.get_mpz_t(), n.get_mpz_t(), a[0].get_mpz_t());
    CHECK(lattice_equal(restrict_first_zero(cover_lattice(n, a)), cover_lattice(np, std::span<const BigInt>(a).subspan(1))));
    const BigInt c = component_count(n, a);
    CHECK(n % c == 0);
    for (const auto& x : a) CHECK(x % c == 0);
  }
}
