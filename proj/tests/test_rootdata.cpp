#include <boost/rational.hpp>

#include "doctest.h"
#include "weylcells/rootdata.hpp"

using namespace weylcells;

namespace {

struct Expected {
  std::string type;
  Int h, h_dual, det, max_comark;
};

// Standard values for simple Lie algebras (Bourbaki plates).
std::vector<Expected> catalogue() {
  std::vector<Expected> out;
  for (int l = 1; l <= 8; ++l) out.push_back({"A" + std::to_string(l), l + 1, l + 1, l + 1, 1});
  for (int l = 3; l <= 8; ++l) out.push_back({"B" + std::to_string(l), 2 * l, 2 * l - 1, 2, 2});
  for (int l = 2; l <= 8; ++l) out.push_back({"C" + std::to_string(l), 2 * l, l + 1, 2, 1});
  for (int l = 4; l <= 8; ++l) out.push_back({"D" + std::to_string(l), 2 * l - 2, 2 * l - 2, 4, 2});
  out.push_back({"E6", 12, 12, 3, 3});
  out.push_back({"E7", 18, 18, 2, 4});
  out.push_back({"E8", 30, 30, 1, 6});
  out.push_back({"F4", 12, 9, 1, 3});
  out.push_back({"G2", 6, 4, 1, 2});
  return out;
}

Int determinant(const IntMatrix& m) {
  using Q = boost::rational<Int>;
  const std::size_t n = m.rows();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].numerator() == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  CHECK(det.denominator() == 1);
  return det.numerator();
}

}  // namespace

TEST_CASE("catalogue values") {
  for (const auto& e : catalogue()) {
    CAPTURE(e.type);
    const auto rd = root_datum(e.type);
    CHECK(rd->name() == e.type);
    CHECK(rd->h == e.h);
    CHECK(rd->h_dual == e.h_dual);
    CHECK(rd->d_max_comark == e.max_comark);
    CHECK(determinant(rd->cartan) == e.det);
    CHECK(static_cast<Int>(rd->omega.order()) == e.det);
    CHECK(static_cast<Int>(rd->positive_roots.size()) * 2 == rd->rank * e.h);
    CHECK(rd->positive_coroots.size() == rd->positive_roots.size());
    Int marks = 0, comarks = 0;
    for (Int a : rd->marks) marks += a;
    for (Int a : rd->comarks) comarks += a;
    CHECK(marks == e.h);
    CHECK(comarks == e.h_dual);
    CHECK(rd->marks[0] == 1);
    CHECK(rd->comarks[0] == 1);
  }
}

TEST_CASE("null vectors of the affine Cartan matrix") {
  for (const auto& e : catalogue()) {
    CAPTURE(e.type);
    const auto rd = root_datum(e.type);
    const int n = rd->nodes();
    CHECK(determinant(rd->affine_cartan) == 0);
    for (int i = 0; i < n; ++i) {
      Int row = 0, col = 0;
      for (int j = 0; j < n; ++j) {
        row += rd->affine_cartan(i, j) * rd->marks[j];
        col += rd->comarks[j] * rd->affine_cartan(j, i);
      }
      CHECK(row == 0);
      CHECK(col == 0);
    }
  }
}

TEST_CASE("Omega permutes the affine diagram") {
  for (const auto& e : catalogue()) {
    CAPTURE(e.type);
    const auto rd = root_datum(e.type);
    const int n = rd->nodes();
    for (const auto& g : rd->omega.elements) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(rd->affine_cartan(g.perm[i], g.perm[j]) == rd->affine_cartan(i, j));
      CHECK(g.perm[0] == g.label);
      if (g.label != 0) CHECK(rd->marks[g.label] == 1);
    }
    CHECK(rd->omega.elements[0].label == 0);
    // group table closes and matches composition of permutations
    for (std::size_t a = 0; a < rd->omega.order(); ++a)
      for (std::size_t b = 0; b < rd->omega.order(); ++b) {
        const auto& pa = rd->omega.elements[a].perm;
        const auto& pb = rd->omega.elements[b].perm;
        const auto& pc = rd->omega.elements[rd->omega.table[a][b]].perm;
        for (int i = 0; i < n; ++i) CHECK(pc[i] == pa[pb[i]]);
      }
  }
}

TEST_CASE("Omega group structure of type D") {
  const auto count_involutions = [](const RootDatum& rd) {
    int k = 0;
    for (std::size_t a = 1; a < rd.omega.order(); ++a) k += rd.omega.table[a][a] == 0;
    return k;
  };
  CHECK(count_involutions(*root_datum("D5")) == 1);  // Z/4
  CHECK(count_involutions(*root_datum("D7")) == 1);
  CHECK(count_involutions(*root_datum("D4")) == 3);  // Klein
  CHECK(count_involutions(*root_datum("D6")) == 3);
}

TEST_CASE("minuscule nodes are the nodes of mark one") {
  for (const auto& e : catalogue()) {
    const auto rd = root_datum(e.type);
    std::vector<int> expected;
    for (int i = 1; i <= rd->rank; ++i)
      if (rd->marks[i] == 1) expected.push_back(i);
    CHECK(rd->minuscule == expected);
  }
}

TEST_CASE("bad type names") {
  CHECK_THROWS_AS(root_datum("X3"), InvalidArgument);
  CHECK_THROWS_AS(root_datum("E9"), InvalidArgument);
  CHECK_THROWS_AS(root_datum("G3"), InvalidArgument);
  CHECK_THROWS_AS(root_datum(""), InvalidArgument);
}
