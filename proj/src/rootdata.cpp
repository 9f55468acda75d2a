#include "weylcells/rootdata.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace weylcells {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw InvalidArgument(std::string("unknown Lie type family '") + c + "'");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  }
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  std::vector<Int> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::size_t OmegaGroup::index_of_label(int label) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].label == label) return i;
  throw InvalidArgument("no length-zero element gamma_" + std::to_string(label) + " for this type");
}

std::size_t OmegaGroup::inverse(std::size_t index) const {
  for (std::size_t j = 0; j < elements.size(); ++j)
    if (table[index][j] == 0) return j;
  throw std::logic_error("omega group table has no inverse");
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

void link(IntMatrix& a, int i, int j, Int aij = -1, Int aji = -1) {
  a(i - 1, j - 1) = aij;
  a(j - 1, i - 1) = aji;
}

IntMatrix finite_cartan(Family family, int rank) {
  IntMatrix a(rank, rank);
  for (int i = 0; i < rank; ++i) a(i, i) = 2;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) link(a, i, i + 1);
  };
  switch (family) {
    case Family::A:
      chain(1, rank);
      break;
    case Family::B:
      chain(1, rank - 1);
      link(a, rank - 1, rank, -1, -2);  // alpha_rank short
      break;
    case Family::C:
      chain(1, rank - 1);
      link(a, rank - 1, rank, -2, -1);  // alpha_rank long
      break;
    case Family::D:
      chain(1, rank - 2);
      link(a, rank - 2, rank - 1);
      link(a, rank - 2, rank);
      break;
    case Family::E:
      chain(1, rank - 1);
      a(rank - 2, rank - 1) = a(rank - 1, rank - 2) = 0;
      // E6: 6-3, E7: 7-3, E8: 8-5
      link(a, rank == 8 ? 5 : 3, rank);
      break;
    case Family::F:
      link(a, 1, 2);
      link(a, 2, 3, -1, -2);
      link(a, 3, 4);
      break;
    case Family::G:
      link(a, 1, 2, -1, -3);  // alpha_1 long
      break;
  }
  return a;
}

bool valid_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// Positive roots in simple-root coordinates, generated by root strings.
std::vector<std::vector<Int>> positive_roots_of(const IntMatrix& a) {
  const int n = static_cast<int>(a.rows());
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> roots;
  std::vector<std::vector<Int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> r(n, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  while (!layer.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& beta : layer) {
      roots.push_back(beta);
      for (int i = 0; i < n; ++i) {
        Int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += a(i, j) * beta[j];
        // p = how far down the alpha_i string goes
        Int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        const Int q = p - pairing;
        if (q > 0) {
          auto up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    const Int hx = std::accumulate(x.begin(), x.end(), Int{0});
    const Int hy = std::accumulate(y.begin(), y.end(), Int{0});
    return hx != hy ? hx < hy : x < y;
  });
  return roots;
}

RationalMatrix inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(m(i, j));
    aug[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular Cartan matrix");
    std::swap(aug[pivot], aug[col]);
    const Rational inv = Rational(1) / aug[col][col];
    for (auto& x : aug[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].numerator() == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  RationalMatrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

Int determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  if (det.denominator() != 1) throw std::logic_error("non-integral determinant");
  return det.numerator();
}

Int to_integer(const Rational& r, const char* what) {
  if (r.denominator() != 1) throw std::logic_error(std::string("non-integral ") + what);
  return r.numerator();
}

// Relative squared lengths of the simple roots, normalised so long roots
// have (alpha|alpha) = 2.  Uses |alpha_i|^2 a_ij = |alpha_j|^2 a_ji.
std::vector<Rational> simple_root_norms(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> norm(n, Rational(0));
  norm[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a(i, j) == 0 || norm[j].numerator() != 0) continue;
      norm[j] = norm[i] * Rational(a(i, j), a(j, i));
      stack.push_back(j);
    }
  }
  const Rational longest = *std::max_element(norm.begin(), norm.end());
  for (auto& x : norm) x = x * 2 / longest;
  return norm;
}

// Right null vector of the affine Cartan matrix with first entry 1.
std::vector<Int> null_vector(const IntMatrix& affine) {
  const std::size_t n = affine.rows() - 1;
  IntMatrix sub(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub(i, j) = affine(i + 1, j + 1);
  const auto inv = inverse(sub);
  std::vector<Int> out(n + 1);
  out[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += inv[i][j] * Rational(-affine(j + 1, 0));
    out[i + 1] = to_integer(s, "mark");
  }
  return out;
}

IntMatrix reflection_matrix(const IntMatrix& affine, int node) {
  // s_i acts on pairing vectors: c' = c - c_i * column_i(affine).
  const std::size_t n = affine.rows();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) m(j, node) -= affine(j, node);
  return m;
}

std::vector<Int> rho_image(const IntMatrix& m) {
  return m * std::vector<Int>(m.cols(), 1);
}

void build_omega(RootDatum& rd) {
  const std::size_t n = rd.nodes();
  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < n; ++i) reflections.push_back(reflection_matrix(rd.affine_cartan, static_cast<int>(i)));

  OmegaGroup group;
  group.elements.push_back(OmegaElement{0, [&] {
                                          std::vector<int> id(n);
                                          std::iota(id.begin(), id.end(), 0);
                                          return id;
                                        }()});

  for (int node : rd.minuscule) {
    // Translation by the fundamental coweight omega_node^vee:
    // finite part moves by level * nu(omega^vee), nu(omega^vee) = (2/|alpha|^2) Lambda_node.
    const Int q = to_integer(Rational(2) / rd.root_norms[node], "translation step");
    IntMatrix t = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
      t(node, j) += q * rd.comarks[j];
      t(0, j) -= q * rd.comarks[node] * rd.comarks[j];
    }
    // Strip right descents until only the length-zero part remains.
    int len = rd.alcove_length(rho_image(t));
    while (len > 0) {
      bool moved = false;
      for (std::size_t j = 0; j < n && !moved; ++j) {
        IntMatrix candidate = t * reflections[j];
        const int l = rd.alcove_length(rho_image(candidate));
        if (l < len) {
          t = std::move(candidate);
          len = l;
          moved = true;
        }
      }
      if (!moved) throw std::logic_error("descent stripping stalled");
    }
    std::vector<int> perm(n, -1);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (t(i, j) == 1) perm[j] = static_cast<int>(i);
        else if (t(i, j) != 0) throw std::logic_error("length-zero element is not a permutation");
      }
    }
    if (perm[0] != node) throw std::logic_error("gamma does not send node 0 to its minuscule node");
    group.elements.push_back(OmegaElement{node, perm});
  }

  const std::size_t k = group.elements.size();
  group.table.assign(k, std::vector<int>(k, -1));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<int> comp(n);
      for (std::size_t j = 0; j < n; ++j) comp[j] = group.elements[a].perm[group.elements[b].perm[j]];
      for (std::size_t c = 0; c < k; ++c)
        if (group.elements[c].perm == comp) group.table[a][b] = static_cast<int>(c);
      if (group.table[a][b] < 0) throw std::logic_error("omega group not closed");
    }
  }
  rd.omega = std::move(group);
}

std::vector<Int> class_key(const RootDatum& rd, const std::vector<Int>& finite) {
  std::vector<Int> coweight(rd.rank);
  for (int j = 0; j < rd.rank; ++j)
    coweight[j] = to_integer(Rational(finite[j]) * rd.root_norms[j + 1] / 2, "coweight coordinate");
  auto scaled = rd.class_adjugate * coweight;
  const Int d = rd.cartan_det < 0 ? -rd.cartan_det : rd.cartan_det;
  for (auto& x : scaled) x = ((x % d) + d) % d;
  return scaled;
}

}  // namespace

std::string RootDatum::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int RootDatum::alcove_length(const std::vector<Int>& y) const {
  Int total = 0;
  for (std::size_t k = 0; k < positive_coroots.size(); ++k) {
    const auto& c = positive_coroots[k];
    const Int period = coroot_steps[k] * h_dual;
    Int p = 0;
    for (int j = 0; j < rank; ++j) p += c[j] * y[j + 1];
    if (p > 0) total += p / period;
    else total += (-p) / period + 1;
  }
  return static_cast<int>(total);
}

Rational RootDatum::weight_norm(const std::vector<Int>& finite) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i) {
    if (finite[i] == 0) continue;
    for (int j = 0; j < rank; ++j) {
      if (finite[j] == 0) continue;
      s += weight_form[i][j] * Rational(finite[i] * finite[j]);
    }
  }
  return s;
}

std::size_t RootDatum::omega_index_of_translation(const std::vector<Int>& finite_of_lambda0) const {
  const auto key = class_key(*this, finite_of_lambda0);
  for (std::size_t i = 0; i < omega_class_keys.size(); ++i)
    if (omega_class_keys[i] == key) return i;
  throw std::logic_error("translation class matches no length-zero element");
}

RootDatumPtr build_root_datum(Family family, int rank) {
  if (!valid_type(family, rank))
    throw InvalidArgument(std::string("invalid simple type ") + static_cast<char>(family) + std::to_string(rank));

  auto rd = std::make_shared<RootDatum>();
  rd->family = family;
  rd->rank = rank;
  rd->cartan = finite_cartan(family, rank);

  rd->positive_roots = positive_roots_of(rd->cartan);
  rd->positive_coroots = positive_roots_of(rd->cartan.transpose());
  rd->theta = rd->positive_roots.back();

  const auto norms = simple_root_norms(rd->cartan);
  // (alpha_i^vee | alpha_j^vee) = a_ij * 2/|alpha_j|^2, and 2/|alpha|^2 = |alpha^vee|^2 / 2.
  for (const auto& c : rd->positive_coroots) {
    Rational half_norm = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        half_norm += Rational(c[i] * c[j] * rd->cartan(i, j)) / norms[j];
    rd->coroot_steps.push_back(to_integer(half_norm, "coroot step"));
  }
  rd->theta_coroot.resize(rank);
  for (int k = 0; k < rank; ++k)
    rd->theta_coroot[k] = to_integer(Rational(rd->theta[k]) * norms[k] / 2, "theta coroot");

  const int n = rank + 1;
  rd->affine_cartan = IntMatrix(n, n);
  rd->affine_cartan(0, 0) = 2;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) rd->affine_cartan(i + 1, j + 1) = rd->cartan(i, j);
  for (int j = 0; j < rank; ++j) {
    Int a0j = 0;
    Int aj0 = 0;
    for (int k = 0; k < rank; ++k) {
      a0j -= rd->theta_coroot[k] * rd->cartan(k, j);
      aj0 -= rd->cartan(j, k) * rd->theta[k];
    }
    rd->affine_cartan(0, j + 1) = a0j;
    rd->affine_cartan(j + 1, 0) = aj0;
  }
  rd->marks = null_vector(rd->affine_cartan);
  rd->comarks = null_vector(rd->affine_cartan.transpose());
  rd->h = std::accumulate(rd->marks.begin(), rd->marks.end(), Int{0});
  rd->h_dual = std::accumulate(rd->comarks.begin(), rd->comarks.end(), Int{0});
  rd->d_max_comark = *std::max_element(rd->comarks.begin(), rd->comarks.end());

  rd->root_norms.resize(n);
  rd->root_norms[0] = 2;
  for (int i = 0; i < rank; ++i) rd->root_norms[i + 1] = norms[i];

  const auto inv = inverse(rd->cartan);
  rd->weight_form.assign(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int k = 0; k < rank; ++k) rd->weight_form[i][k] = inv[k][i] * norms[k] / 2;

  for (int i = 1; i <= rank; ++i)
    if (rd->marks[i] == 1) rd->minuscule.push_back(i);

  rd->cartan_det = determinant(rd->cartan);
  const auto inv_t = inverse(rd->cartan.transpose());
  rd->class_adjugate = IntMatrix(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      rd->class_adjugate(i, j) = to_integer(inv_t[i][j] * Rational(rd->cartan_det), "adjugate");

  build_omega(*rd);
  for (const auto& el : rd->omega.elements) {
    std::vector<Int> fin(rank, 0);
    if (el.perm[0] != 0) fin[el.perm[0] - 1] = 1;
    rd->omega_class_keys.push_back(class_key(*rd, fin));
  }
  return rd;
}

RootDatumPtr root_datum(const std::string& type_name) {
  if (type_name.size() < 2) throw InvalidArgument("malformed type name '" + type_name + "'");
  const Family family = family_from_char(static_cast<char>(std::toupper(static_cast<unsigned char>(type_name[0]))));
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(type_name.substr(1), &used);
    if (used != type_name.size() - 1) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("malformed type name '" + type_name + "'");
  }
  static std::mutex mutex;
  static std::map<std::pair<char, int>, RootDatumPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{static_cast<char>(family), rank}];
  if (!slot) slot = build_root_datum(family, rank);
  return slot;
}

}  // namespace weylcells
