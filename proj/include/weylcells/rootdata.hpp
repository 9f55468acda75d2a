#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace weylcells {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Thrown for any malformed input (bad type, bad word, bad literal ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

/// Dense row-major integer matrix. Only what the root data needs.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Int>& data() const { return data_; }

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// One length-zero element of the extended affine Weyl group, seen through
/// the permutation it induces on the affine nodes 0..rank.
struct OmegaElement {
  int label = 0;              // minuscule node i with perm[0] == i; 0 for the identity
  std::vector<int> perm;      // perm[j] = image of node j
};

struct OmegaGroup {
  std::vector<OmegaElement> elements;   // elements[0] is the identity
  std::vector<std::vector<int>> table;  // table[a][b] = index of elements[a] * elements[b]

  std::size_t order() const { return elements.size(); }
  /// Index of the element with the given label; throws if absent.
  std::size_t index_of_label(int label) const;
  std::size_t inverse(std::size_t index) const;
};

/// Static data of a finite root system of simple type and its untwisted
/// affinization. Node numbering follows Kac, "Infinite dimensional Lie
/// algebras", Table Fin; node 0 is the affine node.
///
/// Cartan convention: cartan(i, j) = <alpha_i^vee, alpha_j>.
struct RootDatum {
  Family family = Family::A;
  int rank = 0;

  IntMatrix cartan;         // rank x rank
  IntMatrix affine_cartan;  // (rank+1) x (rank+1), node 0 first

  std::vector<Int> marks;    // a_0 .. a_rank, coefficients of delta
  std::vector<Int> comarks;  // a_0^vee .. a_rank^vee, coefficients of K
  std::vector<Int> theta;          // highest root, simple-root coordinates (size rank)
  std::vector<Int> theta_coroot;   // theta^vee, simple-coroot coordinates
  Int h = 0;
  Int h_dual = 0;
  Int d_max_comark = 0;

  std::vector<std::vector<Int>> positive_roots;    // simple-root coordinates
  std::vector<std::vector<Int>> positive_coroots;  // simple-coroot coordinates
  // 2/|alpha|^2 for the root of each positive coroot: the affine coroots
  // above alpha^vee are alpha^vee + n * step * K.
  std::vector<Int> coroot_steps;

  std::vector<Rational> root_norms;                 // (alpha_i|alpha_i), i = 0..rank; long roots have 2
  std::vector<std::vector<Rational>> weight_form;   // (Lambda_i|Lambda_j), i,j = 1..rank (0-based storage)

  std::vector<int> minuscule;  // nodes with mark 1, excluding 0
  OmegaGroup omega;

  // Omega-class detection: class of a coweight modulo the coroot lattice,
  // scaled by det(cartan) so that everything stays integral.
  Int cartan_det = 1;
  IntMatrix class_adjugate;                  // det * (cartan^T)^{-1}
  std::vector<std::vector<Int>> omega_class_keys;  // one per omega element

  std::string name() const;  // e.g. "G2"
  int nodes() const { return rank + 1; }

  /// Length of the element whose action sends the pairing vector of rho-hat
  /// (all ones) to `image_of_rho`: the number of affine root hyperplanes
  /// separating the fundamental alcove from its image.
  int alcove_length(const std::vector<Int>& image_of_rho) const;

  /// |lambda|^2 for a finite weight in fundamental-weight coordinates.
  Rational weight_norm(const std::vector<Int>& finite) const;

  /// Index into omega.elements of the length-zero part of an element, given
  /// the finite part of the image of Lambda_0 (fundamental-weight coordinates).
  std::size_t omega_index_of_translation(const std::vector<Int>& finite_of_lambda0) const;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

/// Builds the root datum of type (family, rank). Throws InvalidArgument for
/// pairs that are not a simple type (A>=1, B>=2, C>=2, D>=3, E6-8, F4, G2).
RootDatumPtr build_root_datum(Family family, int rank);

/// Parses "G2", "A1", "E8", "B5" ...; results are cached per type.
RootDatumPtr root_datum(const std::string& type_name);

}  // namespace weylcells
