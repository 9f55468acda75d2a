#pragma once

#include <string>
#include <vector>

#include "weylcells/affine_weyl.hpp"
#include "weylcells/rootdata.hpp"

namespace weylcells {

/// Integral affine weight lambda + k Lambda_0 + m delta, with lambda in
/// fundamental-weight coordinates. The delta coefficient is rational because
/// length-zero elements shift it by fractions.
struct AffineWeight {
  std::vector<Int> finite;
  Int level = 0;
  Rational delta = 0;

  /// Label equality: finite part and level, delta ignored.
  bool same_label(const AffineWeight& other) const { return finite == other.finite && level == other.level; }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

AffineWeight level_weight(const RootDatum& rd, Int level);  // level * Lambda_0
AffineWeight fundamental_weight(const RootDatum& rd, int node);  // affine Lambda_i
AffineWeight rho_hat(const RootDatum& rd);

/// <L, alpha_i^vee>; node 0 pairs to level - <lambda, theta^vee>.
Int pairing(const RootDatum& rd, const AffineWeight& weight, int node);
std::vector<Int> pairings(const RootDatum& rd, const AffineWeight& weight);
AffineWeight from_pairings(const RootDatum& rd, const std::vector<Int>& pairing_vector, Rational delta = 0);

/// w(L).
AffineWeight linear_action(const WeylElement& w, const AffineWeight& weight);
/// w.L := w(L + rho) - rho.
AffineWeight dot_action(const WeylElement& w, const AffineWeight& weight);

/// All pairings with simple affine coroots are >= -1.
bool is_rho_dominant(const RootDatum& rd, const AffineWeight& weight);
/// Nodes where a rho-dominant weight pairs to exactly -1.
NodeSet sing_set(const RootDatum& rd, const AffineWeight& weight);

enum class PivotRule { SmallestIndex, LargestIndex };

struct Dominantization {
  WeylElement v;
  AffineWeight kappa_plus;
};

/// The minimal-length v with v.(kappa Lambda_0) rho-dominant. Requires
/// kappa > -h^vee.
Dominantization min_dominant_v(const RootDatumPtr& rd, Int kappa, PivotRule rule = PivotRule::SmallestIndex);

/// Literal syntax: terms "c*wI" (finite fundamental weight), "c*LI" (affine
/// fundamental weight), joined by + or -, optional "@k" fixing the level:
/// "-1*L0", "4*w2@-1", "w1+w3@-2", "0@-2".
AffineWeight parse_weight(const RootDatum& rd, const std::string& text);
/// "4*w2@-1", "0@-2", "w1+2*w3@-3".
std::string format_weight(const AffineWeight& weight);
/// Display form of a module label: "L_-1(4Λ2)", "L_-2" for the vacuum.
std::string format_module(const AffineWeight& weight);

}  // namespace weylcells
