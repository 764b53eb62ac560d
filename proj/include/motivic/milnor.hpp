#pragma once
// Resolution data for an isolated hypersurface singularity, the motivic Milnor
// fiber it determines, and the duality identities for strata and tubes of a
// strict normal crossings configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motivic/hk.hpp"
#include "motivic/motring.hpp"
#include "motivic/parallel.hpp"

namespace motivic {

struct Component {
  std::string name;
  long multiplicity = 1;  // N_i
  friend bool operator==(const Component&, const Component&) = default;
};

/// Data for E_I° ∩ h^-1(x), where I is `on`.
struct StratumData {
  std::vector<std::string> on;
  std::optional<BigInt> chi;
  std::optional<UVPoly> epoly;
  /// E-polynomial of the degree-N_I cover; defaults to `epoly` when N_I = 1.
  std::optional<UVPoly> cover_epoly;
  bool present = true;
  friend bool operator==(const StratumData&, const StratumData&) = default;
};

struct ResolutionData {
  long dim = 0;
  std::vector<Component> components;
  std::vector<StratumData> strata;  // absent entries mean the stratum is empty over x

  /// Throws ValidationError on unknown or repeated component names, N < 1,
  /// duplicate strata, or an E-polynomial inconsistent with chi.
  void validate() const;
  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;
};

/// gcd of the multiplicities over the named components.
long cover_degree(const ResolutionData& r, const std::vector<std::string>& on);

/// Atom name of the cover of a stratum: "cover[E1,E3]" in declaration order.
std::string cover_atom_name(const ResolutionData& r, const std::vector<std::string>& on);

/// One atom per present stratum: cover_degree N_I, dim d - |I|, chi N_I * chi.
AtomTable milnor_atoms(const ResolutionData& r);

/// sum over present strata of (-1)^(|I|-1) (L-1)^(|I|-1) [cover of E_I°].
MotClass milnor_class(const ResolutionData& r);
BigInt milnor_chi(const ResolutionData& r);
UVPoly milnor_epoly(const ResolutionData& r);

/// The RV-side class: per stratum, the cover atom over an open simplex of
/// dimension |I| - 1. Its E_c-realization is milnor_class(r).
RVClass milnor_rv_class(const ResolutionData& r);

/// prod over singleton strata of (1 - t^N_i)^(-chi_i).
FactoredZeta acampo_zeta(const ResolutionData& r);
/// deg zeta = -milnor_chi(r).
bool zeta_degree_check(const ResolutionData& r);

// ---------------------------------------------------------------------------
// Free strict normal crossings configurations: components 1..size, every
// stratum present. Subsets of J are bit masks; bit i stands for component i+1.

using Subset = std::uint32_t;

struct StratumConfig {
  long dim = 0;       // d
  std::size_t size = 1;  // |J|

  Subset full() const { return (Subset{1} << size) - 1; }
  /// Throws ValidationError unless I is a nonempty subset of J.
  void check_subset(Subset s) const;
};

/// "Q[1,3]" and "D[1,3]".
std::string open_atom_name(Subset s);
std::string closed_atom_name(Subset s);

/// Dimension d - |K| + 1 of the stratum K. Strata of negative dimension are empty.
long stratum_dim(const StratumConfig& c, Subset s);

/// Open atoms Q[K] (not proper) and closed atoms D[K] (smooth proper).
AtomTable config_atoms(const StratumConfig& c);

/// [D_I] = sum_{I ⊆ K ⊆ J} [Q_K].
MotClass closed_from_open(const StratumConfig& c, Subset i);
/// [Q_I] = sum_{I ⊆ K ⊆ J} (-1)^(|K|-|I|) [D_K].
MotClass open_from_closed(const StratumConfig& c, Subset i);

/// D[Q_I]: rewrite in closed atoms, dualize, rewrite back in open atoms.
MotClass dualize_open_stratum(const StratumConfig& c, Subset i);
/// Same, with the dualization read from a caller supplied table.
MotClass dualize_open_stratum(const StratumConfig& c, Subset i, const AtomTable& atoms);

/// sum_{I ⊆ L ⊆ J} (-1)^(|L|-|I|) (L-1)^(|L|-|I|) [Q_L].
MotClass cohom_vee_class(const StratumConfig& c, Subset i);

/// sum over I with I ∩ J' nonempty of (-1)^(|I|-1) (L-1)^(|I|-1) [Q_I].
MotClass tube_chi_class(const StratumConfig& c, Subset jprime);
/// sum over nonempty I ⊆ J' of (-1)^(|I|-1) cohom_vee_class(I) (-(L-1))^(|I|-1).
MotClass tube_cohom_class(const StratumConfig& c, Subset jprime);

/// The tube term of I as an RV class: [Q_I] in grade d - |I| + 1 over the open
/// simplex of dimension |I| - 1.
RVTerm tube_rv_term(const StratumConfig& c, Subset i);

/// cohom_vee_class(I) = L^(d-|I|+1) D[Q_I] for every nonempty I.
bool check_stratum_duality(const StratumConfig& c, Exec exec = Exec::parallel);
bool check_tube_duality(const StratumConfig& c, Subset jprime);
/// check_tube_duality for every nonempty J'.
bool check_tube_duality_all(const StratumConfig& c, Exec exec = Exec::parallel);

struct SweepReport {
  std::size_t configs = 0;
  std::size_t stratum_checks = 0;
  std::size_t tube_checks = 0;
  std::size_t stratum_failures = 0;
  std::size_t tube_failures = 0;
  bool ok() const { return stratum_failures == 0 && tube_failures == 0; }
};

/// Every configuration with 1 <= |J| <= max_size and 0 <= d <= max_dim.
SweepReport sweep(std::size_t max_size, long max_dim, bool stratum, bool tube, Exec exec = Exec::parallel);

}  // namespace motivic
