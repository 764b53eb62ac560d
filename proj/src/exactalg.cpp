#include "motivic/exactalg.hpp"

#include <algorithm>
#include <utility>

#include "motivic/errors.hpp"

namespace motivic {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  BigInt den = parse_int(den_text);
  if (den == 0) throw ParseError("rational with zero denominator '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<BigInt> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

BigInt gcd_vec(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, const BigInt& q, std::size_t src) {
  // row[dst] -= q * row[src]
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) -= q * m.at(src, c);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hnf_with_transform(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    // Euclid on the column below the pivot row until one nonzero entry remains.
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t r = pivot; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        if (best == h.rows() || abs(h.at(r, col)) < abs(h.at(best, col))) best = r;
      }
      if (best == h.rows()) break;
      row_swap(h, pivot, best);
      row_swap(u, pivot, best);
      bool clean = true;
      for (std::size_t r = pivot + 1; r < h.rows(); ++r) {
        if (h.at(r, col) == 0) continue;
        BigInt q = floor_div(h.at(r, col), h.at(pivot, col));
        row_axpy(h, r, q, pivot);
        row_axpy(u, r, q, pivot);
        if (h.at(r, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(pivot, col) == 0) continue;
    if (h.at(pivot, col) < 0) {
      row_negate(h, pivot);
      row_negate(u, pivot);
    }
    for (std::size_t r = 0; r < pivot; ++r) {
      BigInt q = floor_div(h.at(r, col), h.at(pivot, col));
      if (q == 0) continue;
      row_axpy(h, r, q, pivot);
      row_axpy(u, r, q, pivot);
    }
    ++pivot;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).h; }

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap_with = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (a.at(r, k) != 0) { swap_with = r; break; }
      if (swap_with == n) return 0;
      row_swap(a, k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = t;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i)
      if (a.at(i, col) != 0) { p = i; break; }
    if (p == a.rows()) continue;
    row_swap(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, col) == 0) continue;
      BigInt f = a.at(i, col);
      BigInt g = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(i, c) = a.at(i, c) * g - a.at(r, c) * f;
      BigInt cg = gcd_vec(a.row(i));
      if (cg > 1)
        for (std::size_t c = col; c < a.cols(); ++c) mpz_divexact(a.at(i, c).get_mpz_t(), a.at(i, c).get_mpz_t(), cg.get_mpz_t());
    }
    ++r;
  }
  return r;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("inverse of a non-square matrix");
  BigInt det = determinant(a);
  if (det != 1 && det != -1) throw ValidationError("matrix is not unimodular (det = " + det.get_str() + ")");
  // For a unimodular matrix the HNF is the identity, so the transform is the inverse.
  return hnf_with_transform(a).u;
}

namespace {

IntMatrix drop_zero_rows(const IntMatrix& h) {
  std::size_t nonzero = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < h.cols(); ++c)
      if (h.at(r, c) != 0) { zero = false; break; }
    if (!zero) nonzero = r + 1;
  }
  IntMatrix out(nonzero, h.cols());
  for (std::size_t r = 0; r < nonzero; ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) out.at(r, c) = h.at(r, c);
  return out;
}

IntMatrix scaled(const IntMatrix& m, const BigInt& k) {
  IntMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) *= k;
  return out;
}

}  // namespace

ScaledLattice::ScaledLattice(BigInt denominator, const IntMatrix& generators)
    : denominator_(std::move(denominator)), generators_(drop_zero_rows(hnf(generators))) {
  if (denominator_ <= 0) throw ValidationError("lattice denominator must be positive");
}

bool lattice_equal(const ScaledLattice& a, const ScaledLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ValidationError("lattices live in different ambient dimensions");
  }
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
  IntMatrix ha = drop_zero_rows(hnf(scaled(a.generators(), l / a.denominator())));
  IntMatrix hb = drop_zero_rows(hnf(scaled(b.generators(), l / b.denominator())));
  return ha == hb;
}

ScaledLattice cover_lattice(const BigInt& n, std::span<const BigInt> a) {
  if (n <= 0) throw ValidationError("cover degree N must be positive");
  if (a.empty()) throw ValidationError("cover lattice needs at least one exponent");
  const std::size_t d = a.size();
  IntMatrix gens(d + 1, d);
  for (std::size_t i = 0; i < d; ++i) {
    gens.at(i, i) = n;
    gens.at(d, i) = a[i];
  }
  return ScaledLattice(n, gens);
}

ScaledLattice restrict_first_zero(const ScaledLattice& l) {
  if (l.ambient_dim() == 0) throw ValidationError("cannot restrict a lattice in dimension 0");
  const IntMatrix& g = l.generators();
  // In echelon form only the first row can carry a nonzero first coordinate.
  std::size_t start = (g.rows() > 0 && g.at(0, 0) != 0) ? 1 : 0;
  IntMatrix rest(g.rows() - start, g.cols() - 1);
  for (std::size_t r = start; r < g.rows(); ++r)
    for (std::size_t c = 1; c < g.cols(); ++c) rest.at(r - start, c - 1) = g.at(r, c);
  return ScaledLattice(l.denominator(), rest);
}

BigInt component_count(const BigInt& n, std::span<const BigInt> a) {
  std::vector<BigInt> all{n};
  all.insert(all.end(), a.begin(), a.end());
  return gcd_vec(all);
}

}  // namespace motivic
