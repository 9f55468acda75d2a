#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weylcells/affine_weyl.hpp"
#include "weylcells/weights.hpp"

namespace weylcells {

/// Integer polynomial in q; coeffs[j] is the coefficient of q^j. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class KLPoly {
 public:
  KLPoly() = default;
  explicit KLPoly(std::vector<Int> coeffs);
  static KLPoly one() { return KLPoly({1}); }

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  Int coefficient(int j) const;

  KLPoly& operator+=(const KLPoly& other);
  KLPoly& operator-=(const KLPoly& other);
  KLPoly shifted(int power) const;      // q^power * this
  KLPoly scaled(Int factor) const;

  std::string to_string() const;  // "1", "1+q", "1+2q^2"
  friend bool operator==(const KLPoly&, const KLPoly&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

/// Which left descent of y drives the recursion.
enum class DescentChoice { Smallest, Largest };

/// Default length bound for KL computations: 16, or WEYL_CELLS_MAXLEN.
int default_kl_max_length();

class LengthBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoised Kazhdan-Lusztig polynomials for one root datum. Not safe for
/// concurrent use; give each thread its own engine.
class KLEngine {
 public:
  explicit KLEngine(DescentChoice choice = DescentChoice::Smallest, int max_length = default_kl_max_length());

  /// P_{x,y}; the zero polynomial when x is not below y.
  const KLPoly& poly(const WeylElement& x, const WeylElement& y);
  /// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}, 0 when that is not an integer.
  Int mu(const WeylElement& x, const WeylElement& y);

  int max_length() const { return max_length_; }
  std::size_t memo_size() const { return polys_.size(); }

  /// Cached Bruhat interval [e, y] (sorted by length).
  const std::vector<WeylElement>& interval(const WeylElement& y);

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };

  KLPoly compute(const WeylElement& x, const WeylElement& y);

  DescentChoice choice_;
  int max_length_;
  std::unordered_map<std::pair<WeylElement, WeylElement>, KLPoly, PairHash> polys_;
  std::unordered_map<WeylElement, std::vector<WeylElement>, WeylElementHash> intervals_;
  static const KLPoly zero_;
  static const KLPoly one_;
};

/// A multiset of elements, ordered by (length, word) for stable output.
struct ElementOrder {
  bool operator()(const WeylElement& a, const WeylElement& b) const;
};
using ElementMultiset = std::map<WeylElement, Int, ElementOrder>;

/// C_r * C_s = C_{rs} + sum over r' < r with r's < r' of mu(r', r) C_{r'}.
/// Requires rs > r.
ElementMultiset convolve_simple(KLEngine& engine, const WeylElement& r, int s);

using TermFilter = std::function<bool(const WeylElement&)>;

/// C_z * nabla_v computed letter by letter along `v_word`: reflection
/// letters go through convolve_simple, length-zero letters act by right
/// multiplication. `step_keep` prunes terms after each step, `final_keep`
/// prunes the result. Throws InvalidArgument naming the prefix of v at which
/// a surviving term r has r s < r.
ElementMultiset convolve_costandard(KLEngine& engine, const WeylElement& z, const Word& v_word,
                                    const TermFilter& step_keep = {}, const TermFilter& final_keep = {});

/// Coxeter matrix entry m(s, t); 0 stands for infinity.
int braid_order(const RootDatum& rd, int s, int t);

/// Heap of a reduced word: one vertex per reflection letter, i below j when
/// i precedes j and the chain of non-commuting letters connects them.
struct Heap {
  std::vector<int> labels;
  std::vector<std::vector<char>> below;  // below[i][j]: vertex i < vertex j (strict)

  std::size_t size() const { return labels.size(); }
  /// Number of linear extensions (order ideals DP, at most 64 vertices).
  std::uint64_t linear_extensions() const;
  /// A chain of m(s,t) >= 3 alternating s/t vertices whose heap interval is
  /// exactly the chain, if one exists (indices into labels).
  std::vector<std::size_t> convex_braid_chain(const RootDatum& rd) const;
};

Heap heap_of_word(const RootDatum& rd, const Word& word);  // length-zero letters are ignored
Heap heap(const WeylElement& w);  // from the canonical reduced word

/// Stembridge: w is fully commutative iff the heap of one reduced word has
/// no convex alternating chain of length m(s,t) for any pair with m(s,t) >= 3.
bool is_fully_commutative(const WeylElement& w);

/// Some listed element is left-spherical and maximal in its right coset by
/// <Sing(kappa_plus)>. Throws on an empty list.
bool check_condition_sing(const std::vector<WeylElement>& cell_elements, const AffineWeight& kappa_plus);
/// Every listed element is fully commutative. Throws on an empty list.
bool check_condition_comm(const std::vector<WeylElement>& cell_elements);

}  // namespace weylcells
