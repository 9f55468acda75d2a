#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcells/rootdata.hpp"

namespace weylcells {

/// Classical Lie algebra carrying the nilpotent orbits: gl(n), so(n), sp(n).
struct Ambient {
  enum class Kind { GL, SO, SP };
  Kind kind = Kind::GL;
  int n = 0;

  static Ambient parse(const std::string& text);  // "gl5", "so9", "sp8"
  std::string to_string() const;
  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Jordan type of a nilpotent element: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;
  Ambient ambient;

  /// Sorts the parts, drops zeros, and checks they sum to ambient.n.
  static Partition make(std::vector<int> parts, Ambient ambient);
  static Partition parse(const std::string& text);  // "4,2,1@so7"
  std::string to_string() const;
  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// so: even parts have even multiplicity; sp: odd parts have even
/// multiplicity (and n even); gl: always.
bool is_valid(const Partition& p);

/// Largest valid partition below p in dominance order. Only for so / sp.
Partition collapse(const Partition& p);

/// Dominance order on partial sums. Throws on ambient mismatch.
bool closure_leq(const Partition& p, const Partition& q);

std::vector<int> transpose(const std::vector<int>& parts);

/// Labels of the weighted Dynkin diagram in the standard (Bourbaki/Kac)
/// numbering of the ambient: gl(n) has n-1 nodes, so(2m+1) and sp(2m) and
/// so(2m) have m nodes. Throws for invalid partitions.
std::vector<int> weighted_dynkin(const Partition& p);

/// Lusztig-Spaltenstein (Barbasch-Vogan) duality: gl(n) to gl(n),
/// so(2n+1) to sp(2n), sp(2n) to so(2n+1), so(2n) to so(2n).
Partition ls_dual(const Partition& p);

/// Every valid partition of the ambient.
std::vector<Partition> valid_partitions(const Ambient& ambient);

enum class OrbitName { Zero, Minimal, Subsubregular, Subregular, Regular };

std::string orbit_name_string(OrbitName name);

/// Orbit of the Langlands dual algebra, named or given by a partition.
struct OrbitLabel {
  std::optional<OrbitName> name;
  std::optional<Partition> partition;
  bool dual_side = true;

  std::string to_string() const;
};

/// Partition of a named orbit in a classical ambient. Throws when the name
/// does not single out one orbit.
Partition named_orbit(OrbitName name, const Ambient& ambient);

/// Ambient of the dual Lie algebra of a classical type: A_l -> gl(l+1),
/// B_l -> sp(2l), C_l -> so(2l+1), D_l -> so(2l).
Ambient dual_ambient(Family family, int rank);

/// The sl2 datum sigma of the sub-subregular rows, as a partition in the
/// dual ambient. Throws for (family, rank, kappa) outside the tabulated ranges.
Partition sigma_partition(Family family, int rank, int kappa);

}  // namespace weylcells
