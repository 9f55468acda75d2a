#include "weylcells/affine_weyl.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace weylcells {

namespace {

int parse_index(const std::string& token, const std::string& text) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InvalidArgument("malformed word '" + text + "'");
  return std::stoi(token);
}

void check_letter(const RootDatum& rd, const Letter& letter) {
  if (letter.index < 0 || letter.index > rd.rank)
    throw InvalidArgument("generator index " + std::to_string(letter.index) + " out of range for " + rd.name());
  if (letter.kind == Letter::Kind::Omega) (void)rd.omega.index_of_label(letter.index);
}

IntMatrix permutation_matrix(const std::vector<int>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
  return m;
}

}  // namespace

Word parse_word(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  Word word;
  if (text.empty() || text == "e") return word;
  if (text.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = std::min(text.find('.', start), text.size());
      const std::string token = text.substr(start, end - start);
      if (!token.empty() && (token[0] == 'g' || token[0] == 'G'))
        word.push_back(Letter::gamma(parse_index(token.substr(1), raw)));
      else
        word.push_back(Letter::s(parse_index(token, raw)));
      start = end + 1;
    }
    return word;
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'g' || c == 'G') {
      if (i + 1 >= text.size()) throw InvalidArgument("malformed word '" + raw + "'");
      word.push_back(Letter::gamma(parse_index(std::string(1, text[++i]), raw)));
    } else {
      word.push_back(Letter::s(parse_index(std::string(1, c), raw)));
    }
  }
  return word;
}

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const auto& letter : word) {
    if (!out.empty()) out += '.';
    if (letter.kind == Letter::Kind::Omega) out += 'g';
    out += std::to_string(letter.index);
  }
  return out;
}

int reflection_count(const Word& word) {
  return static_cast<int>(std::count_if(word.begin(), word.end(),
                                        [](const Letter& l) { return l.kind == Letter::Kind::Reflection; }));
}

std::vector<int> nodes_of(NodeSet set) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(set, i)) out.push_back(i);
  return out;
}

NodeSet node_set(const std::vector<int>& nodes) {
  NodeSet s = 0;
  for (int i : nodes) s |= NodeSet{1} << i;
  return s;
}

WeylElement::WeylElement(RootDatumPtr datum)
    : WeylElement(datum, IntMatrix::identity(datum->nodes()), IntMatrix::identity(datum->nodes())) {}

WeylElement::WeylElement(RootDatumPtr datum, IntMatrix matrix, IntMatrix inverse)
    : datum_(std::move(datum)), matrix_(std::move(matrix)), inverse_(std::move(inverse)) {
  refresh();
}

void WeylElement::refresh() {
  const std::vector<Int> ones(datum_->nodes(), 1);
  rho_image_ = matrix_ * ones;
  inverse_rho_image_ = inverse_ * ones;
  length_ = datum_->alcove_length(rho_image_);
}

WeylElement WeylElement::generator(RootDatumPtr datum, int node) {
  check_letter(*datum, Letter::s(node));
  return WeylElement(datum).generator_times(node);
}

WeylElement WeylElement::omega(RootDatumPtr datum, int label) {
  check_letter(*datum, Letter::gamma(label));
  const auto& group = datum->omega;
  const auto index = group.index_of_label(label);
  auto m = permutation_matrix(group.elements[index].perm);
  auto inv = permutation_matrix(group.elements[group.inverse(index)].perm);
  return WeylElement(datum, std::move(m), std::move(inv));
}

WeylElement WeylElement::from_word(RootDatumPtr datum, const Word& word) {
  WeylElement w(datum);
  for (const auto& letter : word) {
    check_letter(*datum, letter);
    w = letter.kind == Letter::Kind::Reflection ? w.times_generator(letter.index) : w.times_omega(letter.index);
  }
  return w;
}

bool WeylElement::is_identity() const { return matrix_ == IntMatrix::identity(datum_->nodes()); }

WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (datum_ != other.datum_ && datum_->name() != other.datum_->name())
    throw InvalidArgument("cannot multiply elements of " + datum_->name() + " and " + other.datum_->name());
  return WeylElement(datum_, matrix_ * other.matrix_, other.inverse_ * inverse_);
}

WeylElement WeylElement::inverse() const { return WeylElement(datum_, inverse_, matrix_); }

// s_i = I - column_i(A) e_i^T on pairing vectors.
WeylElement WeylElement::generator_times(int node) const {
  const auto& a = datum_->affine_cartan;
  const std::size_t n = datum_->nodes();
  IntMatrix m = matrix_;
  for (std::size_t r = 0; r < n; ++r) {
    const Int coef = a(r, node);
    if (coef == 0) continue;
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= coef * matrix_(node, c);
  }
  // (s_i w)^{-1} = w^{-1} s_i : right multiplication changes column i only.
  IntMatrix inv = inverse_;
  for (std::size_t r = 0; r < n; ++r) {
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k) s += inverse_(r, k) * a(k, node);
    inv(r, node) -= s;
  }
  return WeylElement(datum_, std::move(m), std::move(inv));
}

WeylElement WeylElement::times_generator(int node) const { return inverse().generator_times(node).inverse(); }

WeylElement WeylElement::times_omega(int label) const { return *this * omega(datum_, label); }

NodeSet WeylElement::left_descents() const {
  NodeSet s = 0;
  for (int i = 0; i < datum_->nodes(); ++i)
    if (rho_image_[i] < 0) s |= NodeSet{1} << i;
  return s;
}

NodeSet WeylElement::right_descents() const {
  NodeSet s = 0;
  for (int i = 0; i < datum_->nodes(); ++i)
    if (inverse_rho_image_[i] < 0) s |= NodeSet{1} << i;
  return s;
}

std::size_t WeylElement::omega_index() const { return datum_->omega_index_of_translation(translation()); }

int WeylElement::omega_label() const { return datum_->omega.elements[omega_index()].label; }

Word WeylElement::reduced_word() const {
  Word word;
  WeylElement w = *this;
  while (w.length() > 0) {
    const NodeSet left = w.left_descents();
    const int i = std::countr_zero(left);
    word.push_back(Letter::s(i));
    w = w.generator_times(i);
  }
  const int label = datum_->omega.elements[datum_->omega_index_of_translation(w.translation())].label;
  if (label != 0) word.push_back(Letter::gamma(label));
  return word;
}

IntMatrix WeylElement::finite_part() const {
  // A finite weight lambda has pairing vector (-<lambda, theta^vee>, lambda).
  const int l = datum_->rank;
  IntMatrix out(l, l);
  for (int j = 0; j < l; ++j) {
    std::vector<Int> v(l + 1, 0);
    v[j + 1] = 1;
    v[0] = -datum_->theta_coroot[j];
    const auto image = matrix_ * v;
    for (int i = 0; i < l; ++i) out(i, j) = image[i + 1];
  }
  return out;
}

std::vector<Int> WeylElement::translation() const {
  std::vector<Int> out(datum_->rank);
  for (int i = 0; i < datum_->rank; ++i) out[i] = matrix_(i + 1, 0);
  return out;
}

std::size_t WeylElement::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (Int x : matrix_.data()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool bruhat_leq(const WeylElement& x0, const WeylElement& y0) {
  if (x0.omega_index() != y0.omega_index()) return false;
  WeylElement x = x0;
  WeylElement y = y0;
  while (true) {
    if (x.length() > y.length()) return false;
    if (y.length() == 0) return x.length() == 0;
    if (x.length() == 0) return true;
    const int s = std::countr_zero(y.left_descents());
    if (contains(x.left_descents(), s)) x = x.generator_times(s);
    y = y.generator_times(s);
  }
}

bool is_left_spherical(const WeylElement& w) { return (w.left_descents() >> 1) == 0; }

bool is_right_spherical(const WeylElement& w) { return (w.right_descents() >> 1) == 0; }

bool nodes_commute(const RootDatum& rd, NodeSet set) {
  const auto nodes = nodes_of(set);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (rd.affine_cartan(nodes[a], nodes[b]) != 0) return false;
  return true;
}

bool ends_with_all(const WeylElement& w, NodeSet set, std::size_t bound) {
  if (set == 0) throw InvalidArgument("ends_with_all needs a non-empty node set");
  const auto& rd = w.datum();
  if (nodes_commute(rd, set)) return (set & ~w.right_descents()) == 0;

  const NodeSet all = (NodeSet{1} << rd.nodes()) - 1;
  if ((set & all) == all) throw UndecidedError("the parabolic subgroup on all affine nodes is infinite");

  // Breadth-first enumeration of the parabolic subgroup <S>.
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::deque<WeylElement> queue;
  WeylElement id(w.datum_ptr());
  seen.insert(id);
  queue.push_back(id);
  const auto nodes = nodes_of(set);
  while (!queue.empty()) {
    const WeylElement u = queue.front();
    queue.pop_front();
    if ((w * u).length() > w.length()) return false;
    for (int s : nodes) {
      auto next = u.times_generator(s);
      if (seen.insert(next).second) {
        if (seen.size() > bound) throw UndecidedError("parabolic subgroup exceeds the search bound");
        queue.push_back(next);
      }
    }
  }
  return true;
}

bool is_rigid(const WeylElement& w0) {
  WeylElement w = w0;
  while (w.length() > 0) {
    const NodeSet left = w.left_descents();
    if (std::popcount(left) != 1) return false;
    w = w.generator_times(std::countr_zero(left));
  }
  return true;
}

std::vector<WeylElement> enumerate_rigid(const RootDatumPtr& datum, int max_len) {
  std::vector<WeylElement> found;
  std::vector<WeylElement> layer{WeylElement(datum)};
  for (int len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<WeylElement> next;
    for (const auto& w : layer) {
      found.push_back(w);
      if (len == max_len) continue;
      for (int i = 0; i < datum->nodes(); ++i) {
        if (contains(w.left_descents(), i)) continue;
        auto candidate = w.generator_times(i);
        // s_i w is rigid iff its only left descent is i.
        if (candidate.left_descents() == (NodeSet{1} << i)) next.push_back(std::move(candidate));
      }
    }
    layer = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& w : found) {
    for (const auto& el : datum->omega.elements) {
      if (el.label == 0) out.push_back(w);
      else out.push_back(w.times_omega(el.label));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.to_string() < b.to_string();
  });
  return out;
}

std::uint64_t count_reduced_words(const WeylElement& w) {
  std::unordered_map<WeylElement, std::uint64_t, WeylElementHash> memo;
  std::function<std::uint64_t(const WeylElement&)> count = [&](const WeylElement& u) -> std::uint64_t {
    if (u.length() == 0) return 1;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int i : nodes_of(u.left_descents())) total += count(u.generator_times(i));
    memo.emplace(u, total);
    return total;
  };
  return count(w);
}

std::vector<WeylElement> bruhat_interval(const WeylElement& y) {
  const Word word = y.reduced_word();
  std::unordered_set<WeylElement, WeylElementHash> seen;
  std::vector<WeylElement> elements;
  const WeylElement id(y.datum_ptr());
  seen.insert(id);
  elements.push_back(id);
  for (const auto& letter : word) {
    if (letter.kind != Letter::Kind::Reflection) continue;
    const std::size_t current = elements.size();
    for (std::size_t k = 0; k < current; ++k) {
      auto next = elements[k].times_generator(letter.index);
      if (seen.insert(next).second) elements.push_back(std::move(next));
    }
  }
  const int label = y.omega_label();
  if (label != 0)
    for (auto& x : elements) x = x.times_omega(label);
  std::stable_sort(elements.begin(), elements.end(),
                   [](const WeylElement& a, const WeylElement& b) { return a.length() < b.length(); });
  return elements;
}

}  // namespace weylcells
