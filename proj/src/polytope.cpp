#include "motivic/polytope.hpp"

#include <exception>
#include <map>
#include <numeric>
#include <utility>

#include "arrangement.hpp"
#include "motivic/errors.hpp"
#include "motivic/fourier_motzkin.hpp"

namespace motivic {

using detail::ArrCell;
using detail::IntForm;

Rational AffineForm::eval(std::span<const Rational> x) const {
  Rational v = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) v += Rational(coeffs[i]) * x[i];
  return v;
}

void PolyFormula::validate() const {
  for (const auto& conj : disjuncts)
    for (const auto& c : conj)
      if (c.form.coeffs.size() != dim) {
        throw ValidationError("affine form has " + std::to_string(c.form.coeffs.size()) +
                              " coefficients in ambient dimension " + std::to_string(dim));
      }
}

namespace {

bool relation_holds(Relation rel, int sign) {
  switch (rel) {
    case Relation::eq: return sign == 0;
    case Relation::gt: return sign > 0;
    case Relation::ge: return sign >= 0;
  }
  return false;
}

}  // namespace

bool PolyFormula::contains(std::span<const Rational> x) const {
  for (const auto& conj : disjuncts) {
    bool ok = true;
    for (const auto& c : conj)
      if (!relation_holds(c.rel, c.form.eval(x).sign())) { ok = false; break; }
    if (ok) return true;
  }
  return false;
}

namespace {

struct AtomRef {
  std::size_t hyperplane = 0;
  int orientation = 1;  // atom form is a positive multiple of orientation * hyperplane
  Relation rel = Relation::ge;
};

struct Block {
  std::vector<std::size_t> vars;
  std::vector<std::size_t> hyperplanes;  // global indices
  std::vector<IntForm> local;            // the same hyperplanes in block coordinates
};

// A formula reduced to distinct oriented hyperplanes, with variables grouped
// into blocks that no form couples. The arrangement of the whole formula is
// the product of the block arrangements.
struct Prepared {
  std::size_t n = 0;
  std::vector<IntForm> hyperplanes;
  std::vector<std::vector<AtomRef>> disjuncts;  // disjuncts not killed by a false constant atom
  std::vector<Block> blocks;
  std::vector<std::size_t> block_of_hyperplane;
};

Prepared prepare(const PolyFormula& f, const Limits& limits) {
  f.validate();
  if (f.dim > limits.max_dim) {
    throw BoundError("ambient dimension " + std::to_string(f.dim) + " exceeds the bound " +
                     std::to_string(limits.max_dim));
  }
  Prepared p;
  p.n = f.dim;
  std::map<std::vector<BigInt>, std::size_t> seen;
  for (const auto& conj : f.disjuncts) {
    std::vector<AtomRef> atoms;
    bool dead = false;
    for (const auto& c : conj) {
      const BigInt den = c.form.constant.denominator();
      IntForm g;
      g.a.reserve(f.dim);
      for (const auto& x : c.form.coeffs) g.a.push_back(x * den);
      g.c = c.form.constant.numerator();
      if (g.is_constant()) {
        if (!relation_holds(c.rel, sgn(g.c))) dead = true;
        continue;
      }
      g.make_primitive();
      int orientation = 1;
      std::size_t lead = 0;
      while (g.a[lead] == 0) ++lead;
      if (g.a[lead] < 0) {
        orientation = -1;
        for (auto& x : g.a) x = -x;
        g.c = -g.c;
      }
      std::vector<BigInt> key = g.a;
      key.push_back(g.c);
      auto [it, inserted] = seen.emplace(std::move(key), p.hyperplanes.size());
      if (inserted) p.hyperplanes.push_back(std::move(g));
      atoms.push_back({it->second, orientation, c.rel});
    }
    if (!dead) p.disjuncts.push_back(std::move(atoms));
  }
  if (p.hyperplanes.size() > limits.max_forms) {
    throw BoundError(std::to_string(p.hyperplanes.size()) + " distinct forms exceed the bound " +
                     std::to_string(limits.max_forms));
  }

  // Union-find over variables coupled by a common form.
  std::vector<std::size_t> parent(p.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& h : p.hyperplanes) {
    std::size_t first = p.n;
    for (std::size_t i = 0; i < p.n; ++i) {
      if (h.a[i] == 0) continue;
      if (first == p.n) first = i;
      else parent[find(i)] = find(first);
    }
  }
  std::map<std::size_t, std::size_t> block_index;
  std::vector<std::size_t> block_of_var(p.n);
  std::vector<std::size_t> local_index(p.n);
  for (std::size_t i = 0; i < p.n; ++i) {
    auto [it, inserted] = block_index.emplace(find(i), p.blocks.size());
    if (inserted) p.blocks.emplace_back();
    block_of_var[i] = it->second;
    local_index[i] = p.blocks[it->second].vars.size();
    p.blocks[it->second].vars.push_back(i);
  }
  p.block_of_hyperplane.resize(p.hyperplanes.size());
  for (std::size_t k = 0; k < p.hyperplanes.size(); ++k) {
    const IntForm& h = p.hyperplanes[k];
    std::size_t i = 0;
    while (h.a[i] == 0) ++i;
    Block& b = p.blocks[block_of_var[i]];
    p.block_of_hyperplane[k] = block_of_var[i];
    IntForm loc;
    loc.a.assign(b.vars.size(), BigInt(0));
    for (std::size_t v = 0; v < p.n; ++v)
      if (h.a[v] != 0) loc.a[local_index[v]] = h.a[v];
    loc.c = h.c;
    b.hyperplanes.push_back(k);
    b.local.push_back(std::move(loc));
  }
  return p;
}

using Mask = std::vector<bool>;

// For each live disjunct, whether all of its atoms living in block `b` hold
// given the signs of the block's hyperplanes.
Mask block_mask(const Prepared& p, std::size_t b, const std::vector<std::int8_t>& local_signs) {
  const Block& block = p.blocks[b];
  Mask m(p.disjuncts.size(), true);
  for (std::size_t i = 0; i < p.disjuncts.size(); ++i) {
    for (const auto& atom : p.disjuncts[i]) {
      if (p.block_of_hyperplane[atom.hyperplane] != b) continue;
      std::size_t pos = 0;
      while (block.hyperplanes[pos] != atom.hyperplane) ++pos;
      if (!relation_holds(atom.rel, atom.orientation * local_signs[pos])) {
        m[i] = false;
        break;
      }
    }
  }
  return m;
}

std::vector<IntForm> box_forms(std::size_t k, const BigInt& radius) {
  std::vector<IntForm> out;
  for (std::size_t v = 0; v < k; ++v) {
    IntForm upper;  // radius - x_v >= 0
    upper.a.assign(k, BigInt(0));
    upper.a[v] = -1;
    upper.c = radius;
    IntForm lower;  // radius + x_v >= 0
    lower.a.assign(k, BigInt(0));
    lower.a[v] = 1;
    lower.c = radius;
    out.push_back(std::move(upper));
    out.push_back(std::move(lower));
  }
  return out;
}

// Euler characteristic of the formula, optionally intersected with a box,
// summed block by block: cells with equal disjunct masks are pooled, then the
// pools are combined across blocks.
long euler_sum(const Prepared& p, const BigInt* radius) {
  if (p.disjuncts.empty()) return 0;
  std::vector<std::map<Mask, long>> pools(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const Block& block = p.blocks[b];
    std::vector<IntForm> forms = block.local;
    const std::size_t own = forms.size();
    if (radius != nullptr) {
      auto box = box_forms(block.vars.size(), *radius);
      forms.insert(forms.end(), box.begin(), box.end());
    }
    for (const ArrCell& cell : detail::arrange(forms, block.vars.size())) {
      bool inside = true;
      for (std::size_t k = own; k < forms.size(); ++k)
        if (cell.signs[k] < 0) { inside = false; break; }
      if (!inside) continue;
      std::vector<std::int8_t> local(cell.signs.begin(), cell.signs.begin() + static_cast<std::ptrdiff_t>(own));
      pools[b][block_mask(p, b, local)] += (cell.dim() % 2 == 0) ? 1 : -1;
    }
  }

  long total = 0;
  Mask alive(p.disjuncts.size(), true);
  auto combine = [&](auto&& self, std::size_t b, const Mask& current, long weight) -> void {
    if (b == p.blocks.size()) {
      for (bool x : current)
        if (x) { total += weight; return; }
      return;
    }
    for (const auto& [mask, w] : pools[b]) {
      if (w == 0) continue;
      Mask next(current.size());
      bool any = false;
      for (std::size_t i = 0; i < current.size(); ++i) {
        next[i] = current[i] && mask[i];
        any = any || next[i];
      }
      if (!any) continue;
      self(self, b + 1, next, weight * w);
    }
  };
  combine(combine, 0, alive, 1);
  return total;
}

// Largest |coordinate| among the points where k independent forms vanish,
// found by depth-first search over independent subsets.
class VertexScan {
 public:
  VertexScan(const std::vector<IntForm>& forms, std::size_t k) : forms_(forms), k_(k) {}

  Rational widest() {
    std::vector<std::size_t> chosen;
    std::vector<std::vector<Rational>> basis;
    search(0, chosen, basis);
    return widest_;
  }

 private:
  // Reduces v against the echelon basis; returns false when v is dependent.
  static bool independent(std::vector<Rational>& v, const std::vector<std::vector<Rational>>& basis) {
    for (const auto& row : basis) {
      std::size_t p = 0;
      while (row[p].is_zero()) ++p;
      if (v[p].is_zero()) continue;
      const Rational f = v[p] / row[p];
      for (std::size_t i = p; i < v.size(); ++i) v[i] -= f * row[i];
    }
    for (const auto& x : v)
      if (!x.is_zero()) return true;
    return false;
  }

  void search(std::size_t from, std::vector<std::size_t>& chosen, std::vector<std::vector<Rational>>& basis) {
    if (chosen.size() == k_) {
      solve(chosen);
      return;
    }
    for (std::size_t i = from; i + (k_ - chosen.size()) <= forms_.size(); ++i) {
      std::vector<Rational> v(forms_[i].a.begin(), forms_[i].a.end());
      if (!independent(v, basis)) continue;
      // Keep the basis in echelon order by pivot column.
      std::size_t p = 0;
      while (v[p].is_zero()) ++p;
      auto pos = basis.begin();
      while (pos != basis.end()) {
        std::size_t q = 0;
        while ((*pos)[q].is_zero()) ++q;
        if (q > p) break;
        ++pos;
      }
      const auto inserted = basis.insert(pos, std::move(v));
      const auto at = inserted - basis.begin();
      chosen.push_back(i);
      search(i + 1, chosen, basis);
      chosen.pop_back();
      basis.erase(basis.begin() + at);
    }
  }

  // Cramer's rule on A x = -c.
  void solve(const std::vector<std::size_t>& rows) {
    IntMatrix a(k_, k_);
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < k_; ++c) a.at(r, c) = forms_[rows[r]].a[c];
    const BigInt det = determinant(a);
    for (std::size_t c = 0; c < k_; ++c) {
      IntMatrix ac = a;
      for (std::size_t r = 0; r < k_; ++r) ac.at(r, c) = -forms_[rows[r]].c;
      const Rational x = abs(Rational(determinant(ac), det));
      if (widest_ < x) widest_ = x;
    }
  }

  const std::vector<IntForm>& forms_;
  std::size_t k_;
  Rational widest_{0};
};

// 1 + max |coordinate| over the vertices of the block arrangement augmented by
// the diagonals x_u = +-x_v; beyond that radius the box slices do not change
// combinatorial type.
BigInt stable_radius(const Prepared& p) {
  Rational widest(0);
  for (const Block& block : p.blocks) {
    const std::size_t k = block.vars.size();
    std::vector<IntForm> forms;
    for (const auto& g : block.local)
      if (!g.is_constant()) forms.push_back(g);
    for (std::size_t u = 0; u < k; ++u)
      for (std::size_t v = u + 1; v < k; ++v)
        for (int s : {-1, 1}) {
          IntForm d;
          d.a.assign(k, BigInt(0));
          d.a[u] = 1;
          d.a[v] = s;
          d.c = 0;
          forms.push_back(std::move(d));
        }
    const Rational w = VertexScan(forms, k).widest();
    if (widest < w) widest = w;
  }
  BigInt ceil;
  mpz_cdiv_q(ceil.get_mpz_t(), widest.numerator().get_mpz_t(), widest.denominator().get_mpz_t());
  return ceil + 1;
}

bool cell_bounded(const IntForm* const* forms, const std::vector<std::int8_t>& signs, std::size_t count,
                  const ArrCell& cell) {
  const std::size_t k = cell.directions.size();
  if (k == 0) return true;
  // Recession cone in direction coordinates z: sign_t * (a_t . D z) >= 0.
  std::vector<LinearRow> cone;
  for (std::size_t t = 0; t < count; ++t) {
    if (signs[t] == 0) continue;
    LinearRow r;
    r.coeffs.resize(k);
    for (std::size_t j = 0; j < k; ++j) r.coeffs[j] = signs[t] * forms[t]->dot(cell.directions[j]);
    r.constant = 0;
    r.rel = Relation::ge;
    cone.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < k; ++j)
    for (int s : {-1, 1}) {
      std::vector<LinearRow> rows = cone;
      LinearRow unit;
      unit.coeffs.assign(k, BigInt(0));
      unit.coeffs[j] = s;
      unit.constant = -1;
      unit.rel = Relation::ge;
      rows.push_back(std::move(unit));
      if (fm_feasible(std::move(rows), k)) return false;
    }
  return true;
}

}  // namespace

CellComplex decompose(const PolyFormula& f, const Limits& limits) {
  const Prepared p = prepare(f, limits);
  CellComplex out;
  out.dim = p.n;
  for (const auto& h : p.hyperplanes) {
    AffineForm a;
    a.coeffs = h.a;
    a.constant = Rational(h.c);
    out.forms.push_back(std::move(a));
  }

  struct BlockCell {
    std::vector<std::int8_t> signs;
    std::vector<Rational> point;
    int dim;
    bool bounded;
  };
  std::vector<std::vector<BlockCell>> per_block(p.blocks.size());
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const Block& block = p.blocks[b];
    std::vector<const IntForm*> ptrs;
    for (const auto& g : block.local) ptrs.push_back(&g);
    for (const ArrCell& cell : detail::arrange(block.local, block.vars.size())) {
      per_block[b].push_back(
          {cell.signs, cell.point(), cell.dim(), cell_bounded(ptrs.data(), cell.signs, ptrs.size(), cell)});
    }
  }

  std::vector<std::size_t> choice(p.blocks.size(), 0);
  while (true) {
    Cell c;
    c.signs.assign(p.hyperplanes.size(), 0);
    c.witness.assign(p.n, Rational(0));
    c.bounded = true;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      const BlockCell& bc = per_block[b][choice[b]];
      const Block& block = p.blocks[b];
      for (std::size_t i = 0; i < block.hyperplanes.size(); ++i) c.signs[block.hyperplanes[i]] = bc.signs[i];
      for (std::size_t i = 0; i < block.vars.size(); ++i) c.witness[block.vars[i]] = bc.point[i];
      c.dim += bc.dim;
      c.bounded = c.bounded && bc.bounded;
    }
    for (const auto& atoms : p.disjuncts) {
      bool ok = true;
      for (const auto& atom : atoms)
        if (!relation_holds(atom.rel, atom.orientation * c.signs[atom.hyperplane])) { ok = false; break; }
      if (ok) { c.satisfied = true; break; }
    }
    out.cells.push_back(std::move(c));

    std::size_t b = 0;
    while (b < choice.size() && ++choice[b] == per_block[b].size()) choice[b++] = 0;
    if (b == choice.size()) break;
  }
  return out;
}

long eu(const PolyFormula& f, const Limits& limits) { return euler_sum(prepare(f, limits), nullptr); }

long eu_in_box(const PolyFormula& f, const BigInt& radius, const Limits& limits) {
  if (radius < 0) throw ValidationError("box radius must be nonnegative");
  return euler_sum(prepare(f, limits), &radius);
}

BoundedEulerReport eu_c_report(const PolyFormula& f, const Limits& limits) {
  const Prepared p = prepare(f, limits);
  BoundedEulerReport r;
  r.box_radius = stable_radius(p);
  r.value = euler_sum(p, &r.box_radius);
  const BigInt guard = 2 * r.box_radius + 1;
  r.guard_value = euler_sum(p, &guard);
  if (r.value != r.guard_value) {
    throw StabilizationError("bounded Euler characteristic unstable: " + std::to_string(r.value) + " at radius " +
                             r.box_radius.get_str() + ", " + std::to_string(r.guard_value) + " at radius " +
                             guard.get_str());
  }
  return r;
}

long eu_c(const PolyFormula& f, const Limits& limits) { return eu_c_report(f, limits).value; }

PolyFormula transform(const PolyFormula& f, const IntMatrix& a, std::span<const Rational> b) {
  f.validate();
  if (a.rows() != f.dim || a.cols() != f.dim || b.size() != f.dim) {
    throw ValidationError("transform shape does not match the formula dimension");
  }
  const IntMatrix inv = inverse_unimodular(a);
  // y = A x + b  <=>  x = inv (y - b); a form c.x + k becomes (c inv).y + k - (c inv).b.
  PolyFormula out;
  out.dim = f.dim;
  for (const auto& conj : f.disjuncts) {
    Conjunction next;
    for (const auto& c : conj) {
      Constraint t;
      t.rel = c.rel;
      t.form.coeffs.assign(f.dim, BigInt(0));
      for (std::size_t j = 0; j < f.dim; ++j)
        for (std::size_t i = 0; i < f.dim; ++i) t.form.coeffs[j] += c.form.coeffs[i] * inv.at(i, j);
      t.form.constant = c.form.constant;
      for (std::size_t j = 0; j < f.dim; ++j) t.form.constant -= Rational(t.form.coeffs[j]) * b[j];
      next.push_back(std::move(t));
    }
    out.disjuncts.push_back(std::move(next));
  }
  return out;
}

namespace {

Constraint pad(const Constraint& c, std::size_t before, std::size_t after) {
  Constraint out;
  out.rel = c.rel;
  out.form.constant = c.form.constant;
  out.form.coeffs.assign(before, BigInt(0));
  out.form.coeffs.insert(out.form.coeffs.end(), c.form.coeffs.begin(), c.form.coeffs.end());
  out.form.coeffs.resize(out.form.coeffs.size() + after, BigInt(0));
  return out;
}

}  // namespace

PolyFormula product(const PolyFormula& f, const PolyFormula& g) {
  f.validate();
  g.validate();
  PolyFormula out;
  out.dim = f.dim + g.dim;
  for (const auto& cf : f.disjuncts)
    for (const auto& cg : g.disjuncts) {
      Conjunction c;
      for (const auto& x : cf) c.push_back(pad(x, 0, g.dim));
      for (const auto& x : cg) c.push_back(pad(x, f.dim, 0));
      out.disjuncts.push_back(std::move(c));
    }
  return out;
}

PolyFormula disjoin(const PolyFormula& f, const PolyFormula& g) {
  if (f.dim != g.dim) throw ValidationError("union of formulas in different dimensions");
  PolyFormula out = f;
  out.disjuncts.insert(out.disjuncts.end(), g.disjuncts.begin(), g.disjuncts.end());
  return out;
}

PolyFormula conjoin(const PolyFormula& f, const PolyFormula& g) {
  if (f.dim != g.dim) throw ValidationError("intersection of formulas in different dimensions");
  PolyFormula out;
  out.dim = f.dim;
  for (const auto& cf : f.disjuncts)
    for (const auto& cg : g.disjuncts) {
      Conjunction c = cf;
      c.insert(c.end(), cg.begin(), cg.end());
      out.disjuncts.push_back(std::move(c));
    }
  return out;
}

PolyFormula whole_space(std::size_t dim) { return PolyFormula{dim, {Conjunction{}}}; }

namespace {

Constraint coordinate(std::size_t dim, std::size_t i, long sign, long constant, Relation rel) {
  Constraint c;
  c.form.coeffs.assign(dim, BigInt(0));
  c.form.coeffs[i] = sign;
  c.form.constant = Rational(constant);
  c.rel = rel;
  return c;
}

PolyFormula simplex(std::size_t k, Relation rel) {
  Conjunction conj;
  if (k > 0) {
    for (std::size_t i = 0; i < k; ++i) conj.push_back(coordinate(k, i, 1, 0, rel));
    Constraint top;
    top.form.coeffs.assign(k, BigInt(-1));
    top.form.constant = Rational(1);
    top.rel = rel;
    conj.push_back(std::move(top));
  }
  return PolyFormula{k, {std::move(conj)}};
}

}  // namespace

PolyFormula open_cube(std::size_t k) {
  Conjunction conj;
  for (std::size_t i = 0; i < k; ++i) {
    conj.push_back(coordinate(k, i, 1, 0, Relation::gt));
    conj.push_back(coordinate(k, i, -1, 1, Relation::gt));
  }
  return PolyFormula{k, {std::move(conj)}};
}

PolyFormula open_simplex(std::size_t k) { return simplex(k, Relation::gt); }
PolyFormula closed_simplex(std::size_t k) { return simplex(k, Relation::ge); }

namespace {

template <class Fn>
std::vector<long> batch(std::span<const PolyFormula> fs, Exec exec, Fn fn) {
  std::vector<long> out(fs.size());
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < fs.size(); ++i) out[i] = fn(fs[i]);
    return out;
  }
  std::exception_ptr error;
  const auto count = static_cast<long>(fs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(fs[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

std::vector<long> eu_batch(std::span<const PolyFormula> fs, Exec exec, const Limits& limits) {
  return batch(fs, exec, [&](const PolyFormula& f) { return eu(f, limits); });
}

std::vector<long> eu_c_batch(std::span<const PolyFormula> fs, Exec exec, const Limits& limits) {
  return batch(fs, exec, [&](const PolyFormula& f) { return eu_c(f, limits); });
}

}  // namespace motivic
