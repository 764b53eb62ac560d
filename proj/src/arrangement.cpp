#include "arrangement.hpp"

#include <string>
#include <unordered_map>
#include <utility>

namespace motivic::detail {

bool IntForm::is_constant() const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

void IntForm::make_primitive() {
  BigInt g = c;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Rational IntForm::eval(const std::vector<Rational>& x) const {
  Rational v(c);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) v += Rational(a[i]) * x[i];
  return v;
}

BigInt IntForm::dot(const std::vector<BigInt>& d) const {
  BigInt v = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) mpz_addmul(v.get_mpz_t(), a[i].get_mpz_t(), d[i].get_mpz_t());
  return v;
}

BigInt IntForm::eval_scaled(const std::vector<BigInt>& num, const BigInt& den) const {
  BigInt v = c * den;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) mpz_addmul(v.get_mpz_t(), a[i].get_mpz_t(), num[i].get_mpz_t());
  return v;
}

std::vector<Rational> ArrCell::point() const {
  std::vector<Rational> out;
  out.reserve(num.size());
  for (const auto& x : num) out.emplace_back(x, den);
  return out;
}

namespace {

std::string key_of(const std::vector<std::int8_t>& signs) {
  std::string k(signs.size(), '0');
  for (std::size_t i = 0; i < signs.size(); ++i) k[i] = static_cast<char>('1' + signs[i]);
  return k;
}

// Divides num and den by their common content.
void reduce(std::vector<BigInt>& num, BigInt& den) {
  BigInt g = den;
  for (const auto& x : num) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g <= 1) return;
  for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
}

// g restricted to the hyperplane h = 0, eliminating coordinate j.
IntForm restrict_form(const IntForm& g, const IntForm& h, std::size_t j) {
  const BigInt scale = abs(h.a[j]);
  const BigInt f = sgn(h.a[j]) * g.a[j];
  IntForm out;
  out.a.reserve(g.a.size() - 1);
  for (std::size_t i = 0; i < g.a.size(); ++i) {
    if (i == j) continue;
    out.a.push_back(scale * g.a[i] - f * h.a[i]);
  }
  out.c = scale * g.c - f * h.c;
  out.make_primitive();
  return out;
}

// The point of h = 0 whose coordinates other than j are y_num / y_den.
void lift(const ArrCell& y, const IntForm& h, std::size_t j, std::vector<BigInt>& num, BigInt& den) {
  const std::size_t n = h.a.size();
  const BigInt scale = abs(h.a[j]);
  num.assign(n, BigInt(0));
  BigInt rest = h.c * y.den;
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    if (i == j) continue;
    const BigInt& yi = y.num[k++];
    num[i] = yi * scale;
    if (h.a[i] != 0) mpz_addmul(rest.get_mpz_t(), h.a[i].get_mpz_t(), yi.get_mpz_t());
  }
  num[j] = sgn(h.a[j]) > 0 ? BigInt(-rest) : rest;
  den = y.den * scale;
  reduce(num, den);
}

void make_primitive(std::vector<BigInt>& v) {
  BigInt g = gcd_vec(v);
  if (g <= 1) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

std::vector<ArrCell> arrange(const std::vector<IntForm>& forms, std::size_t n) {
  std::vector<ArrCell> cells(1);
  cells[0].num.assign(n, BigInt(0));
  cells[0].den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<BigInt> e(n, BigInt(0));
    e[i] = 1;
    cells[0].directions.push_back(std::move(e));
  }

  for (std::size_t k = 0; k < forms.size(); ++k) {
    const IntForm& h = forms[k];
    if (h.is_constant()) {
      const auto s = static_cast<std::int8_t>(sgn(h.c));
      for (auto& cell : cells) cell.signs.push_back(s);
      continue;
    }
    std::size_t j = 0;
    while (h.a[j] == 0) ++j;

    // Cells of the arrangement traced on h = 0, indexed by their signs.
    std::vector<IntForm> restricted;
    restricted.reserve(k);
    for (std::size_t t = 0; t < k; ++t) restricted.push_back(restrict_form(forms[t], h, j));
    const std::vector<ArrCell> on_h = arrange(restricted, n - 1);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(on_h.size());
    for (std::size_t i = 0; i < on_h.size(); ++i) index.emplace(key_of(on_h[i].signs), i);

    std::vector<ArrCell> next;
    next.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      auto it = index.find(key_of(cell.signs));
      if (it == index.end()) {
        cell.signs.push_back(static_cast<std::int8_t>(sgn(h.eval_scaled(cell.num, cell.den))));
        next.push_back(std::move(cell));
        continue;
      }
      std::size_t d0 = cell.directions.size();
      BigInt h_d0;
      for (std::size_t i = 0; i < cell.directions.size(); ++i) {
        h_d0 = h.dot(cell.directions[i]);
        if (h_d0 != 0) { d0 = i; break; }
      }
      if (d0 == cell.directions.size()) {
        // The cell lies inside h.
        cell.signs.push_back(0);
        next.push_back(std::move(cell));
        continue;
      }

      ArrCell zero;
      lift(on_h[it->second], h, j, zero.num, zero.den);
      const std::vector<BigInt>& dir = cell.directions[d0];

      // Step length keeping every strict sign of the cell.
      Rational eps(1);
      for (std::size_t t = 0; t < k; ++t) {
        if (cell.signs[t] == 0) continue;
        const BigInt gd = forms[t].dot(dir);
        if (gd == 0) continue;
        const BigInt v = forms[t].eval_scaled(zero.num, zero.den);
        const Rational bound(abs(v), 2 * abs(gd) * zero.den);
        if (bound < eps) eps = bound;
      }
      if (sgn(h_d0) < 0) eps = -eps;  // step along +eps*dir increases h

      zero.signs = cell.signs;
      zero.signs.push_back(0);
      for (std::size_t i = 0; i < cell.directions.size(); ++i) {
        if (i == d0) continue;
        const BigInt h_di = h.dot(cell.directions[i]);
        std::vector<BigInt> v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = h_d0 * cell.directions[i][c] - h_di * dir[c];
        make_primitive(v);
        zero.directions.push_back(std::move(v));
      }

      ArrCell plus;
      plus.signs = cell.signs;
      plus.signs.push_back(1);
      plus.directions = std::move(cell.directions);
      ArrCell minus;
      minus.signs = std::move(cell.signs);
      minus.signs.push_back(-1);
      minus.directions = plus.directions;
      // q +- eps * dir over the denominator den * r, with eps = p / r.
      const BigInt p = eps.numerator() * zero.den;
      const BigInt& r = eps.denominator();
      plus.den = zero.den * r;
      minus.den = plus.den;
      plus.num.resize(n);
      minus.num.resize(n);
      for (std::size_t c = 0; c < n; ++c) {
        const BigInt base = zero.num[c] * r;
        const BigInt step = p * dir[c];
        plus.num[c] = base + step;
        minus.num[c] = base - step;
      }
      reduce(plus.num, plus.den);
      reduce(minus.num, minus.den);
      next.push_back(std::move(minus));
      next.push_back(std::move(zero));
      next.push_back(std::move(plus));
    }
    cells = std::move(next);
  }
  return cells;
}

}  // namespace motivic::detail
