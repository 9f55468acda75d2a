#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "weylcells/rootdata.hpp"

namespace weylcells {

/// A letter of a word in the extended affine Weyl group: a simple
/// reflection s_i or a length-zero element gamma_i.
struct Letter {
  enum class Kind : std::uint8_t { Reflection, Omega };
  Kind kind = Kind::Reflection;
  int index = 0;

  static Letter s(int i) { return {Kind::Reflection, i}; }
  static Letter gamma(int i) { return {Kind::Omega, i}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Parses "0.1.2.1.0", "0.g1", compact "01210" / "0g1", or "e" (identity).
Word parse_word(const std::string& text);
/// Dotted form, "e" for the empty word.
std::string format_word(const Word& word);
/// Number of reflection letters.
int reflection_count(const Word& word);

/// Bit i is set when node i belongs to the set.
using NodeSet = std::uint32_t;

inline bool contains(NodeSet set, int node) { return (set >> node) & 1u; }
std::vector<int> nodes_of(NodeSet set);
NodeSet node_set(const std::vector<int>& nodes);

class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DescentSet {
  NodeSet left = 0;
  NodeSet right = 0;
};

/// Element of the extended affine Weyl group W_f x| P^vee, stored as the
/// integer matrix of its linear action on pairing vectors
/// (<L, alpha_0^vee>, ..., <L, alpha_l^vee>) of affine weights modulo delta.
/// This action is faithful, so matrix equality is group equality.
class WeylElement {
 public:
  explicit WeylElement(RootDatumPtr datum);  // identity

  static WeylElement generator(RootDatumPtr datum, int node);
  static WeylElement omega(RootDatumPtr datum, int label);
  static WeylElement from_word(RootDatumPtr datum, const Word& word);
  static WeylElement from_word(RootDatumPtr datum, const std::string& word) {
    return from_word(std::move(datum), parse_word(word));
  }

  const RootDatum& datum() const { return *datum_; }
  const RootDatumPtr& datum_ptr() const { return datum_; }

  int length() const { return length_; }
  bool is_identity() const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;
  WeylElement times_generator(int node) const;  // w s_i
  WeylElement generator_times(int node) const;  // s_i w
  WeylElement times_omega(int label) const;     // w gamma

  /// Image of a pairing vector under the linear action.
  std::vector<Int> act(const std::vector<Int>& pairing) const { return matrix_ * pairing; }

  NodeSet left_descents() const;
  NodeSet right_descents() const;
  DescentSet descents() const { return {left_descents(), right_descents()}; }

  /// Index into datum().omega.elements of the length-zero factor.
  std::size_t omega_index() const;
  int omega_label() const;

  /// Canonical reduced word: strip the smallest left descent repeatedly,
  /// then append the length-zero factor (if non-trivial).
  Word reduced_word() const;
  std::string to_string() const { return format_word(reduced_word()); }

  const IntMatrix& matrix() const { return matrix_; }
  const IntMatrix& inverse_matrix() const { return inverse_; }
  /// Linear part acting on finite weights (fundamental-weight coordinates).
  IntMatrix finite_part() const;
  /// Finite part of w(Lambda_0) - Lambda_0, i.e. the image of the translation
  /// component in fundamental-weight coordinates.
  std::vector<Int> translation() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  std::size_t hash() const;

 private:
  WeylElement(RootDatumPtr datum, IntMatrix matrix, IntMatrix inverse);
  void refresh();

  RootDatumPtr datum_;
  IntMatrix matrix_;
  IntMatrix inverse_;
  std::vector<Int> rho_image_;          // w(rho-hat) pairings
  std::vector<Int> inverse_rho_image_;  // w^{-1}(rho-hat) pairings
  int length_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// Bruhat order; elements with different length-zero factors are incomparable.
bool bruhat_leq(const WeylElement& x, const WeylElement& y);

/// No finite simple reflection s_1..s_l is a left descent.
bool is_left_spherical(const WeylElement& w);
/// No finite simple reflection is a right descent.
bool is_right_spherical(const WeylElement& w);

bool nodes_commute(const RootDatum& rd, NodeSet set);

/// True when w is the longest element of its coset w<S>. For pairwise
/// commuting S (and more generally) this is S ⊆ right(w); for non-commuting
/// S the coset is searched exhaustively, up to `bound` elements of <S>.
bool ends_with_all(const WeylElement& w, NodeSet set, std::size_t bound = 100000);

/// Exactly one reduced word for the reflection part.
bool is_rigid(const WeylElement& w);

/// All rigid elements of length <= max_len, each multiplied by every
/// length-zero element, sorted by (length, word).
std::vector<WeylElement> enumerate_rigid(const RootDatumPtr& datum, int max_len = 64);

/// Number of reduced words of the reflection part (memoised descent recursion).
std::uint64_t count_reduced_words(const WeylElement& w);

/// Every subword product of the reflection letters of a reduced word of y,
/// times the length-zero factor of y: the Bruhat interval [e, y].
std::vector<WeylElement> bruhat_interval(const WeylElement& y);

}  // namespace weylcells
