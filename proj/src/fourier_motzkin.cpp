#include "motivic/fourier_motzkin.hpp"

#include <map>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

void make_primitive(LinearRow& row) {
  std::vector<BigInt> all = row.coeffs;
  all.push_back(row.constant);
  BigInt g = gcd_vec(all);
  if (g <= 1) return;
  for (auto& c : row.coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(row.constant.get_mpz_t(), row.constant.get_mpz_t(), g.get_mpz_t());
}

bool constant_row_holds(const LinearRow& r) {
  switch (r.rel) {
    case Relation::eq: return r.constant == 0;
    case Relation::gt: return r.constant > 0;
    case Relation::ge: return r.constant >= 0;
  }
  return false;
}

bool is_constant(const LinearRow& r) {
  for (const auto& c : r.coeffs)
    if (c != 0) return false;
  return true;
}

// Removes duplicate rows, keeping the strict version when both occur.
std::vector<LinearRow> dedupe(std::vector<LinearRow> rows) {
  std::map<std::vector<BigInt>, std::size_t> seen;
  std::vector<LinearRow> out;
  for (auto& r : rows) {
    std::vector<BigInt> key = r.coeffs;
    key.push_back(r.constant);
    auto [it, inserted] = seen.emplace(std::move(key), out.size());
    if (inserted) {
      out.push_back(std::move(r));
    } else if (r.rel == Relation::gt) {
      out[it->second].rel = Relation::gt;
    }
  }
  return out;
}

}  // namespace

bool fm_feasible(std::vector<LinearRow> rows, std::size_t n) {
  for (const auto& r : rows)
    if (r.coeffs.size() != n) throw ValidationError("linear row has the wrong number of coefficients");

  // Substitute equalities away first.
  std::vector<bool> eliminated(n, false);
  while (true) {
    std::size_t eq_idx = rows.size();
    std::size_t var = n;
    for (std::size_t i = 0; i < rows.size() && eq_idx == rows.size(); ++i) {
      if (rows[i].rel != Relation::eq) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rows[i].coeffs[j] != 0) { eq_idx = i; var = j; break; }
    }
    if (eq_idx == rows.size()) break;
    LinearRow e = rows[eq_idx];
    if (e.coeffs[var] < 0) {
      for (auto& c : e.coeffs) c = -c;
      e.constant = -e.constant;
    }
    const BigInt pivot = e.coeffs[var];
    std::vector<LinearRow> next;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == eq_idx) continue;
      LinearRow r = rows[i];
      if (r.coeffs[var] != 0) {
        // r <- pivot*r - r_var*e ; pivot > 0 keeps the relation direction.
        BigInt f = r.coeffs[var];
        for (std::size_t j = 0; j < n; ++j) r.coeffs[j] = pivot * r.coeffs[j] - f * e.coeffs[j];
        r.constant = pivot * r.constant - f * e.constant;
        make_primitive(r);
      }
      next.push_back(std::move(r));
    }
    rows = std::move(next);
    eliminated[var] = true;
  }
  for (const auto& r : rows)
    if (r.rel == Relation::eq && !constant_row_holds(r)) return false;

  for (std::size_t var = 0; var < n; ++var) {
    if (eliminated[var]) continue;
    std::vector<LinearRow> pos, neg, next;
    for (auto& r : rows) {
      int s = sgn(r.coeffs[var]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        LinearRow c;
        const BigInt a = p.coeffs[var];
        const BigInt b = -q.coeffs[var];
        c.coeffs.resize(n);
        for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = b * p.coeffs[j] + a * q.coeffs[j];
        c.constant = b * p.constant + a * q.constant;
        c.rel = (p.rel == Relation::gt || q.rel == Relation::gt) ? Relation::gt : Relation::ge;
        make_primitive(c);
        if (is_constant(c)) {
          if (!constant_row_holds(c)) return false;
          continue;
        }
        next.push_back(std::move(c));
      }
    }
    rows = dedupe(std::move(next));
  }
  for (const auto& r : rows)
    if (!constant_row_holds(r)) return false;
  return true;
}

}  // namespace motivic
