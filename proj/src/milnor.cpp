#include "motivic/milnor.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

std::unordered_map<std::string, std::size_t> component_index(const ResolutionData& r) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < r.components.size(); ++i) index.emplace(r.components[i].name, i);
  return index;
}

// Component indices of a stratum, ascending.
std::vector<std::size_t> stratum_indices(const ResolutionData& r, const std::vector<std::string>& on) {
  const auto index = component_index(r);
  std::vector<std::size_t> out;
  for (const auto& name : on) {
    auto it = index.find(name);
    if (it == index.end()) throw ValidationError("stratum references unknown component '" + name + "'");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw ValidationError("stratum lists a component twice");
  }
  return out;
}

int sign_pow(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

void ResolutionData::validate() const {
  if (dim < 0) throw ValidationError("negative dimension");
  if (components.empty()) throw ValidationError("no components");
  std::set<std::string> names;
  for (const auto& c : components) {
    if (c.name.empty()) throw ValidationError("component with empty name");
    if (!names.insert(c.name).second) throw ValidationError("duplicate component '" + c.name + "'");
    if (c.multiplicity < 1) throw ValidationError("component '" + c.name + "' has multiplicity < 1");
  }
  std::set<std::vector<std::size_t>> seen;
  for (const auto& s : strata) {
    if (s.on.empty()) throw ValidationError("stratum on no components");
    auto idx = stratum_indices(*this, s.on);
    if (!seen.insert(idx).second) throw ValidationError("duplicate stratum");
    if (static_cast<long>(idx.size()) > dim && s.present) {
      throw ValidationError("stratum of codimension " + std::to_string(idx.size()) + " in dimension " +
                            std::to_string(dim));
    }
    if (s.chi && s.epoly && s.epoly->at_one() != *s.chi) {
      throw ValidationError("stratum E-polynomial does not evaluate to chi");
    }
    if (s.chi && s.cover_epoly && s.cover_epoly->at_one() != *s.chi * cover_degree(*this, s.on)) {
      throw ValidationError("cover E-polynomial does not evaluate to N_I * chi");
    }
  }
}

long cover_degree(const ResolutionData& r, const std::vector<std::string>& on) {
  long g = 0;
  for (auto i : stratum_indices(r, on)) g = std::gcd(g, r.components[i].multiplicity);
  return g;
}

std::string cover_atom_name(const ResolutionData& r, const std::vector<std::string>& on) {
  std::string name = "cover[";
  bool first = true;
  for (auto i : stratum_indices(r, on)) {
    if (!first) name += ",";
    name += r.components[i].name;
    first = false;
  }
  return name + "]";
}

AtomTable milnor_atoms(const ResolutionData& r) {
  r.validate();
  AtomTable table;
  for (const auto& s : r.strata) {
    if (!s.present) continue;
    const long n = cover_degree(r, s.on);
    Atom a;
    a.name = cover_atom_name(r, s.on);
    a.dim = r.dim - static_cast<long>(s.on.size());
    a.cover_degree = n;
    if (s.chi) a.chi = *s.chi * n;
    if (s.cover_epoly) a.epoly = s.cover_epoly;
    else if (s.epoly && n == 1) a.epoly = s.epoly;
    register_atom(table, std::move(a));
  }
  return table;
}

MotClass milnor_class(const ResolutionData& r) {
  r.validate();
  MotClass out;
  for (const auto& s : r.strata) {
    if (!s.present) continue;
    const long k = static_cast<long>(s.on.size()) - 1;
    out += MotClass::constant(sign_pow(k)) * gm().pow(k) * MotClass::atom(cover_atom_name(r, s.on));
  }
  return out;
}

BigInt milnor_chi(const ResolutionData& r) { return chi_realize(milnor_class(r), milnor_atoms(r)); }

UVPoly milnor_epoly(const ResolutionData& r) { return epoly_realize(milnor_class(r), milnor_atoms(r)); }

RVClass milnor_rv_class(const ResolutionData& r) {
  r.validate();
  RVClass c;
  for (const auto& s : r.strata) {
    if (!s.present) continue;
    const std::size_t k = s.on.size() - 1;
    RVTerm t{MotClass::atom(cover_atom_name(r, s.on)), r.dim - static_cast<long>(k), open_simplex(k)};
    c.terms.emplace_back(1, std::move(t));
  }
  return c;
}

FactoredZeta acampo_zeta(const ResolutionData& r) {
  r.validate();
  FactoredZeta z;
  for (const auto& s : r.strata) {
    if (!s.present || s.on.size() != 1) continue;
    if (!s.chi) throw ValidationError("stratum " + cover_atom_name(r, s.on) + " has no chi");
    const long n = cover_degree(r, s.on);
    z.factors[n] -= s.chi->get_si();
  }
  z.normalize();
  return z;
}

bool zeta_degree_check(const ResolutionData& r) {
  return BigInt(acampo_zeta(r).degree()) == -milnor_chi(r);
}

// ---------------------------------------------------------------- configurations

namespace {

long popcount(Subset s) { return std::popcount(s); }

std::string subset_name(const char* prefix, Subset s) {
  std::string out = std::string(prefix) + "[";
  bool first = true;
  for (int b = 0; b < 32; ++b) {
    if (!(s >> b & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(b + 1);
    first = false;
  }
  return out + "]";
}

// Supersets K of i inside full, including i itself.
template <typename F>
void for_supersets(Subset i, Subset full, F&& f) {
  const Subset rest = full & ~i;
  Subset extra = 0;
  while (true) {
    f(i | extra);
    if (extra == rest) break;
    extra = (extra - rest) & rest;
  }
}

// Nonempty subsets of s.
template <typename F>
void for_nonempty_subsets(Subset s, F&& f) {
  for (Subset t = s; t != 0; t = (t - 1) & s) f(t);
}

MotClass open_atom(const StratumConfig& c, Subset k) {
  return stratum_dim(c, k) < 0 ? MotClass{} : MotClass::atom(open_atom_name(k));
}

MotClass closed_atom(const StratumConfig& c, Subset k) {
  return stratum_dim(c, k) < 0 ? MotClass{} : MotClass::atom(closed_atom_name(k));
}

// (-1)^k (L-1)^k, indexed by k.
MotClass signed_gm_pow(long k) { return MotClass::constant(sign_pow(k)) * gm().pow(k); }

}  // namespace

void StratumConfig::check_subset(Subset s) const {
  if (size < 1 || size > 31) throw ValidationError("configuration size must be in [1, 31]");
  if (s == 0) throw ValidationError("empty stratum index set");
  if ((s & ~full()) != 0) throw ValidationError("index set is not a subset of J");
}

std::string open_atom_name(Subset s) { return subset_name("Q", s); }
std::string closed_atom_name(Subset s) { return subset_name("D", s); }

long stratum_dim(const StratumConfig& c, Subset s) { return c.dim - popcount(s) + 1; }

AtomTable config_atoms(const StratumConfig& c) {
  AtomTable table;
  for_nonempty_subsets(c.full(), [&](Subset k) {
    const long d = stratum_dim(c, k);
    if (d < 0) return;
    register_atom(table, Atom{open_atom_name(k), d, std::nullopt, std::nullopt, false, std::nullopt});
    register_atom(table, Atom{closed_atom_name(k), d, std::nullopt, std::nullopt, true, std::nullopt});
  });
  return table;
}

MotClass closed_from_open(const StratumConfig& c, Subset i) {
  c.check_subset(i);
  MotClass out;
  for_supersets(i, c.full(), [&](Subset k) { out += open_atom(c, k); });
  return out;
}

MotClass open_from_closed(const StratumConfig& c, Subset i) {
  c.check_subset(i);
  MotClass out;
  for_supersets(i, c.full(), [&](Subset k) {
    MotClass term = closed_atom(c, k);
    out += sign_pow(popcount(k) - popcount(i)) == 1 ? term : -term;
  });
  return out;
}

MotClass dualize_open_stratum(const StratumConfig& c, Subset i) {
  return dualize_open_stratum(c, i, config_atoms(c));
}

MotClass dualize_open_stratum(const StratumConfig& c, Subset i, const AtomTable& atoms) {
  std::map<std::string, Subset> by_name;
  for_nonempty_subsets(c.full(), [&](Subset k) { by_name.emplace(closed_atom_name(k), k); });
  const MotClass dual = dualize(open_from_closed(c, i), atoms);
  return dual.substitute([&](const std::string& name) {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw ValidationError("unexpected atom '" + name + "'");
    return closed_from_open(c, it->second);
  });
}

MotClass cohom_vee_class(const StratumConfig& c, Subset i) {
  c.check_subset(i);
  MotClass out;
  for_supersets(i, c.full(), [&](Subset l) {
    out += signed_gm_pow(popcount(l) - popcount(i)) * open_atom(c, l);
  });
  return out;
}

MotClass tube_chi_class(const StratumConfig& c, Subset jprime) {
  c.check_subset(jprime);
  MotClass out;
  for_nonempty_subsets(c.full(), [&](Subset i) {
    if ((i & jprime) == 0) return;
    out += signed_gm_pow(popcount(i) - 1) * open_atom(c, i);
  });
  return out;
}

MotClass tube_cohom_class(const StratumConfig& c, Subset jprime) {
  c.check_subset(jprime);
  const MotClass boundary = -gm();  // the dual class of the unit circle
  MotClass out;
  for_nonempty_subsets(jprime, [&](Subset i) {
    const long k = popcount(i) - 1;
    MotClass term = cohom_vee_class(c, i) * boundary.pow(k);
    out += sign_pow(k) == 1 ? term : -term;
  });
  return out;
}

RVTerm tube_rv_term(const StratumConfig& c, Subset i) {
  c.check_subset(i);
  const auto k = static_cast<std::size_t>(popcount(i) - 1);
  return RVTerm{MotClass::atom(open_atom_name(i)), std::max(stratum_dim(c, i), 0L), open_simplex(k)};
}

namespace {

bool stratum_ok(const StratumConfig& c, Subset i, const AtomTable& atoms) {
  return cohom_vee_class(c, i) == dualize_open_stratum(c, i, atoms).l_pow(stratum_dim(c, i));
}

}  // namespace

bool check_stratum_duality(const StratumConfig& c, Exec exec) {
  c.check_subset(c.full());
  const AtomTable atoms = config_atoms(c);
  const long n = static_cast<long>(c.full());
  long failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) if (exec == Exec::parallel)
  for (long i = 1; i <= n; ++i) {
    if (!stratum_ok(c, static_cast<Subset>(i), atoms)) ++failures;
  }
  return failures == 0;
}

bool check_tube_duality(const StratumConfig& c, Subset jprime) {
  return tube_chi_class(c, jprime) == tube_cohom_class(c, jprime);
}

bool check_tube_duality_all(const StratumConfig& c, Exec exec) {
  c.check_subset(c.full());
  const long n = static_cast<long>(c.full());
  long failures = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : failures) if (exec == Exec::parallel)
  for (long j = 1; j <= n; ++j) {
    if (!check_tube_duality(c, static_cast<Subset>(j))) ++failures;
  }
  return failures == 0;
}

SweepReport sweep(std::size_t max_size, long max_dim, bool stratum, bool tube, Exec exec) {
  if (max_size < 1 || max_size > 12) throw BoundError("sweep size must be in [1, 12]");
  if (max_dim < 0) throw ValidationError("negative sweep dimension");

  struct Task {
    StratumConfig config;
    Subset subset;
    bool tube;
  };
  std::vector<Task> tasks;
  std::vector<AtomTable> tables;
  std::vector<std::size_t> table_of;
  SweepReport report;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (long d = 0; d <= max_dim; ++d) {
      const StratumConfig c{d, size};
      ++report.configs;
      tables.push_back(config_atoms(c));
      for (Subset s = 1; s <= c.full(); ++s) {
        if (stratum) {
          tasks.push_back({c, s, false});
          table_of.push_back(tables.size() - 1);
        }
        if (tube) {
          tasks.push_back({c, s, true});
          table_of.push_back(tables.size() - 1);
        }
      }
    }
  }

  const long n = static_cast<long>(tasks.size());
  std::size_t stratum_checks = 0, tube_checks = 0, stratum_failures = 0, tube_failures = 0;
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel) \
    reduction(+ : stratum_checks, tube_checks, stratum_failures, tube_failures)
  for (long t = 0; t < n; ++t) {
    const Task& task = tasks[static_cast<std::size_t>(t)];
    if (task.tube) {
      ++tube_checks;
      if (!check_tube_duality(task.config, task.subset)) ++tube_failures;
    } else {
      ++stratum_checks;
      if (!stratum_ok(task.config, task.subset, tables[table_of[static_cast<std::size_t>(t)]])) ++stratum_failures;
    }
  }
  report.stratum_checks = stratum_checks;
  report.tube_checks = tube_checks;
  report.stratum_failures = stratum_failures;
  report.tube_failures = tube_failures;
  return report;
}

}  // namespace motivic
