#include "weylcells/kl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>

namespace weylcells {

KLPoly::KLPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void KLPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int KLPoly::coefficient(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[j];
}

KLPoly& KLPoly::operator+=(const KLPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  trim();
  return *this;
}

KLPoly& KLPoly::operator-=(const KLPoly& other) { return *this += other.scaled(-1); }

KLPoly KLPoly::shifted(int power) const {
  if (is_zero()) return {};
  std::vector<Int> c(power, 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return KLPoly(std::move(c));
}

KLPoly KLPoly::scaled(Int factor) const {
  auto c = coeffs_;
  for (auto& x : c) x *= factor;
  return KLPoly(std::move(c));
}

std::string KLPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Int c = coeffs_[j];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "-");
    else if (c < 0) out << "-";
    first = false;
    if (c < 0) c = -c;
    if (j == 0) {
      out << c;
      continue;
    }
    if (c != 1) out << c;
    out << "q";
    if (j > 1) out << "^" << j;
  }
  return out.str();
}

int default_kl_max_length() {
  if (const char* env = std::getenv("WEYL_CELLS_MAXLEN")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::logic_error&) {
    }
    throw InvalidArgument(std::string("WEYL_CELLS_MAXLEN must be a positive integer, got '") + env + "'");
  }
  return 16;
}

const KLPoly KLEngine::zero_{};
const KLPoly KLEngine::one_ = KLPoly::one();

KLEngine::KLEngine(DescentChoice choice, int max_length) : choice_(choice), max_length_(max_length) {}

const std::vector<WeylElement>& KLEngine::interval(const WeylElement& y) {
  auto it = intervals_.find(y);
  if (it == intervals_.end()) it = intervals_.emplace(y, bruhat_interval(y)).first;
  return it->second;
}

const KLPoly& KLEngine::poly(const WeylElement& x, const WeylElement& y) {
  if (x == y) return one_;
  if (y.length() > max_length_)
    throw LengthBoundExceeded("KL length bound " + std::to_string(max_length_) + " exceeded by " + y.to_string() +
                              " (length " + std::to_string(y.length()) + ")");
  if (x.length() >= y.length() || !bruhat_leq(x, y)) return zero_;
  const auto key = std::make_pair(x, y);
  if (auto it = polys_.find(key); it != polys_.end()) return it->second;
  KLPoly p = compute(x, y);
  return polys_.emplace(key, std::move(p)).first->second;
}

KLPoly KLEngine::compute(const WeylElement& x, const WeylElement& y) {
  const NodeSet left = y.left_descents();
  const int s = choice_ == DescentChoice::Smallest ? std::countr_zero(left) : 31 - std::countl_zero(left);
  const WeylElement v = y.generator_times(s);
  const WeylElement sx = x.generator_times(s);
  const bool c = sx.length() < x.length();

  KLPoly result = poly(sx, v).shifted(c ? 0 : 1);
  result += poly(x, v).shifted(c ? 1 : 0);

  const auto& below_v = interval(v);
  for (const auto& z : below_v) {
    if (z.length() >= v.length()) break;
    if (z.length() < x.length() || !contains(z.left_descents(), s)) continue;
    if ((v.length() - z.length()) % 2 == 0) continue;
    const Int m = mu(z, v);
    if (m == 0) continue;
    const KLPoly& pxz = poly(x, z);
    if (pxz.is_zero()) continue;
    result -= pxz.shifted((y.length() - z.length()) / 2).scaled(m);
  }
  return result;
}

Int KLEngine::mu(const WeylElement& x, const WeylElement& y) {
  const int diff = y.length() - x.length();
  if (diff <= 0 || diff % 2 == 0) return 0;
  return poly(x, y).coefficient((diff - 1) / 2);
}

bool ElementOrder::operator()(const WeylElement& a, const WeylElement& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto sa = a.to_string();
  const auto sb = b.to_string();
  if (sa != sb) return sa < sb;
  return false;
}

ElementMultiset convolve_simple(KLEngine& engine, const WeylElement& r, int s) {
  if (contains(r.right_descents(), s))
    throw InvalidArgument("convolve_simple: " + r.to_string() + " already ends with s" + std::to_string(s));
  ElementMultiset out;
  out[r.times_generator(s)] += 1;
  for (const auto& lower : engine.interval(r)) {
    if (lower.length() >= r.length()) break;
    if (!contains(lower.right_descents(), s)) continue;
    const Int m = engine.mu(lower, r);
    if (m != 0) out[lower] += m;
  }
  return out;
}

ElementMultiset convolve_costandard(KLEngine& engine, const WeylElement& z, const Word& v_word,
                                    const TermFilter& step_keep, const TermFilter& final_keep) {
  ElementMultiset terms{{z, 1}};
  Word prefix;
  for (const auto& letter : v_word) {
    prefix.push_back(letter);
    ElementMultiset next;
    for (const auto& [r, mult] : terms) {
      if (letter.kind == Letter::Kind::Omega) {
        next[r.times_omega(letter.index)] += mult;
        continue;
      }
      if (contains(r.right_descents(), letter.index))
        throw InvalidArgument("convolve_costandard: term " + r.to_string() + " ends with s" +
                              std::to_string(letter.index) + " at prefix " + format_word(prefix) + " of v");
      for (const auto& [term, m] : convolve_simple(engine, r, letter.index)) next[term] += mult * m;
    }
    terms.clear();
    for (auto& [term, m] : next)
      if (!step_keep || step_keep(term)) terms.emplace(term, m);
  }
  if (final_keep) std::erase_if(terms, [&](const auto& kv) { return !final_keep(kv.first); });
  return terms;
}

int braid_order(const RootDatum& rd, int s, int t) {
  if (s == t) return 1;
  switch (rd.affine_cartan(s, t) * rd.affine_cartan(t, s)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

Heap heap_of_word(const RootDatum& rd, const Word& word) {
  Heap h;
  for (const auto& letter : word)
    if (letter.kind == Letter::Kind::Reflection) h.labels.push_back(letter.index);
  const std::size_t n = h.labels.size();
  h.below.assign(n, std::vector<char>(n, 0));
  // Positions are a linear extension, so a single backwards sweep closes
  // the relation transitively.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (h.below[i][j]) continue;
      if (braid_order(rd, h.labels[i], h.labels[j]) != 2) {
        h.below[i][j] = 1;
        for (std::size_t k = 0; k < i; ++k)
          if (h.below[k][i]) h.below[k][j] = 1;
      }
    }
  }
  return h;
}

Heap heap(const WeylElement& w) { return heap_of_word(w.datum(), w.reduced_word()); }

std::uint64_t Heap::linear_extensions() const {
  const std::size_t n = size();
  if (n > 64) throw InvalidArgument("heap too large for linear-extension count");
  std::vector<std::uint64_t> preds(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (below[i][j]) preds[j] |= std::uint64_t{1} << i;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  // ways[ideal] = number of ways to list the vertices of the order ideal.
  std::unordered_map<std::uint64_t, std::uint64_t> ways{{0, 1}};
  std::vector<std::uint64_t> frontier{0};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<std::uint64_t> next;
    for (auto ideal : frontier) {
      const auto count = ways[ideal];
      for (std::size_t v = 0; v < n; ++v) {
        const auto bit = std::uint64_t{1} << v;
        if ((ideal & bit) || (preds[v] & ~ideal)) continue;
        auto [it, fresh] = ways.try_emplace(ideal | bit, 0);
        if (fresh) next.push_back(ideal | bit);
        it->second += count;
      }
    }
    frontier = std::move(next);
  }
  return ways[full];
}

std::vector<std::size_t> Heap::convex_braid_chain(const RootDatum& rd) const {
  const std::size_t n = size();
  for (int s = 0; s < rd.nodes(); ++s) {
    for (int t = s + 1; t < rd.nodes(); ++t) {
      const int m = braid_order(rd, s, t);
      if (m < 3) continue;
      std::vector<std::size_t> chain;
      for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == s || labels[i] == t) chain.push_back(i);
      for (std::size_t start = 0; start + m <= chain.size(); ++start) {
        bool alternating = true;
        for (int k = 1; k < m && alternating; ++k)
          alternating = labels[chain[start + k]] != labels[chain[start + k - 1]];
        if (!alternating) continue;
        const auto lo = chain[start];
        const auto hi = chain[start + m - 1];
        std::size_t interval = 2;
        for (std::size_t k = lo + 1; k < hi; ++k)
          if (below[lo][k] && below[k][hi]) ++interval;
        if (interval == static_cast<std::size_t>(m))
          return {chain.begin() + static_cast<std::ptrdiff_t>(start),
                  chain.begin() + static_cast<std::ptrdiff_t>(start + m)};
      }
    }
  }
  return {};
}

bool is_fully_commutative(const WeylElement& w) { return heap(w).convex_braid_chain(w.datum()).empty(); }

bool check_condition_sing(const std::vector<WeylElement>& cell_elements, const AffineWeight& kappa_plus) {
  if (cell_elements.empty()) throw InvalidArgument("check_condition_sing: empty element list");
  const NodeSet sing = sing_set(cell_elements.front().datum(), kappa_plus);
  return std::any_of(cell_elements.begin(), cell_elements.end(), [&](const WeylElement& w) {
    return is_left_spherical(w) && (sing == 0 || ends_with_all(w, sing));
  });
}

bool check_condition_comm(const std::vector<WeylElement>& cell_elements) {
  if (cell_elements.empty()) throw InvalidArgument("check_condition_comm: empty element list");
  return std::all_of(cell_elements.begin(), cell_elements.end(), is_fully_commutative);
}

}  // namespace weylcells
