#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylcells/rootdata.hpp"

namespace weylcells {

/// A reductive group appearing as a centralizer in the tables.
struct GroupLabel {
  enum class Kind {
    Cyclic,       // Z/n, param = n
    Klein,        // (Z/2)^2
    S3,
    Q8,
    D8,
    Torus,        // Gm^r, param = r
    SL2,
    SL3,
    O2,           // Z/2 x| Gm
    NSL2Gm,       // normalizer of the maximal torus in SL2
    KernelTorus,  // kernel of the character (a, b) of Gm^2
    KernelGL2,    // kernel of det^k in GL2, param = k
    Product,
  };

  Kind kind = Kind::Cyclic;
  int param = 1;
  Int a = 0, b = 0;  // KernelTorus character
  std::vector<GroupLabel> factors{};

  static GroupLabel cyclic(int n) { return {Kind::Cyclic, n}; }
  static GroupLabel simple(Kind k) { return {k, 0}; }
  static GroupLabel torus(int r) { return {Kind::Torus, r}; }
  static GroupLabel kernel_torus(Int a, Int b);
  static GroupLabel kernel_gl2(int k) { return {Kind::KernelGL2, k}; }
  static GroupLabel product(std::vector<GroupLabel> factors);

  /// "Z3", "Klein", "S3", "Q8", "D8", "Gm", "Gm2", "SL2", "SL3", "O2",
  /// "NSL2Gm", "Ker(4,-2)", "KerGL2(3)", products joined by 'x' ("Z2xSL2").
  static GroupLabel parse(const std::string& text);
  std::string to_string() const;

  bool is_finite() const;
  /// Number of integers describing one irreducible representation.
  std::size_t arity() const;

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

/// Canonical form of a KernelTorus group: Gm^rank x prod Z/torsion.
struct TorusNormalForm {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
};
/// Smith normal form of the character-lattice quotient Z^2 / <(a, b)>.
TorusNormalForm normal_form(const GroupLabel& kernel);

/// Smith normal form diagonal of an integer matrix.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

struct IrrepLabel {
  std::vector<Int> data;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

using IrrepMultiset = std::map<IrrepLabel, Int>;

/// Canonical representative (used for kernel tori and det quotients).
IrrepLabel canonical(const GroupLabel& g, IrrepLabel chi);

IrrepLabel trivial_irrep(const GroupLabel& g);
Int dimension(const GroupLabel& g, const IrrepLabel& chi);
IrrepLabel dual(const GroupLabel& g, const IrrepLabel& chi);

/// Literal syntax per group: "1", "sign", "2dim", "a", "b", "ab" for the
/// finite groups; integers (comma separated) for tori, SL2, SL3, kernel
/// groups and cyclic groups; "0" (trivial), "sign", "n" (n >= 1, the 2-dim W_n) for
/// O2 and NSL2Gm; components of products joined by '|'.
IrrepLabel parse_irrep(const GroupLabel& g, const std::string& text);
std::string irrep_name(const GroupLabel& g, const IrrepLabel& chi);

/// All irreducibles for finite groups; for infinite families those whose
/// parameters are bounded by `bound` in absolute value.
std::vector<IrrepLabel> irreps(const GroupLabel& g, int bound = 3);

IrrepMultiset tensor(const GroupLabel& g, const IrrepLabel& x, const IrrepLabel& y);

std::string format_multiset(const GroupLabel& g, const IrrepMultiset& m);

}  // namespace weylcells
