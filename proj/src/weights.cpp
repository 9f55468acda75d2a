#include "weylcells/weights.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace weylcells {

namespace {

// delta coefficient of w(Lambda_j) for each affine fundamental weight,
// recovered from invariance of the normalised form:
// (Lambda_j | Lambda_j) = |Lambda_j finite|^2 and
// (lambda + k Lambda_0 + m delta | same) = |lambda|^2 + 2 k m.
std::vector<Rational> delta_shifts(const WeylElement& w) {
  const auto& rd = w.datum();
  const auto& m = w.matrix();
  std::vector<Rational> out(rd.nodes());
  for (int j = 0; j < rd.nodes(); ++j) {
    std::vector<Int> source(rd.rank, 0);
    if (j > 0) source[j - 1] = 1;
    std::vector<Int> image(rd.rank);
    for (int i = 0; i < rd.rank; ++i) image[i] = m(i + 1, j);
    out[j] = (rd.weight_norm(source) - rd.weight_norm(image)) / Rational(2 * rd.comarks[j]);
  }
  return out;
}

}  // namespace

AffineWeight level_weight(const RootDatum& rd, Int level) {
  return AffineWeight{std::vector<Int>(rd.rank, 0), level, 0};
}

AffineWeight fundamental_weight(const RootDatum& rd, int node) {
  if (node < 0 || node > rd.rank) throw InvalidArgument("node out of range");
  AffineWeight w = level_weight(rd, rd.comarks[node]);
  if (node > 0) w.finite[node - 1] = 1;
  return w;
}

AffineWeight rho_hat(const RootDatum& rd) {
  return AffineWeight{std::vector<Int>(rd.rank, 1), rd.h_dual, 0};
}

Int pairing(const RootDatum& rd, const AffineWeight& weight, int node) {
  if (node < 0 || node > rd.rank) throw InvalidArgument("node out of range");
  if (node > 0) return weight.finite[node - 1];
  Int s = weight.level;
  for (int j = 0; j < rd.rank; ++j) s -= weight.finite[j] * rd.theta_coroot[j];
  return s;
}

std::vector<Int> pairings(const RootDatum& rd, const AffineWeight& weight) {
  std::vector<Int> out(rd.nodes());
  for (int i = 0; i < rd.nodes(); ++i) out[i] = pairing(rd, weight, i);
  return out;
}

AffineWeight from_pairings(const RootDatum& rd, const std::vector<Int>& c, Rational delta) {
  AffineWeight w;
  w.finite.assign(c.begin() + 1, c.end());
  for (int j = 0; j < rd.nodes(); ++j) w.level += rd.comarks[j] * c[j];
  w.delta = delta;
  return w;
}

AffineWeight linear_action(const WeylElement& w, const AffineWeight& weight) {
  const auto& rd = w.datum();
  const auto c = pairings(rd, weight);
  const auto shifts = delta_shifts(w);
  Rational delta = weight.delta;
  for (int j = 0; j < rd.nodes(); ++j) delta += shifts[j] * Rational(c[j]);
  return from_pairings(rd, w.act(c), delta);
}

AffineWeight dot_action(const WeylElement& w, const AffineWeight& weight) {
  const auto& rd = w.datum();
  auto x = pairings(rd, weight);
  for (auto& v : x) v += 1;
  const auto shifts = delta_shifts(w);
  Rational delta = weight.delta;
  for (int j = 0; j < rd.nodes(); ++j) delta += shifts[j] * Rational(x[j]);
  auto y = w.act(x);
  for (auto& v : y) v -= 1;
  return from_pairings(rd, y, delta);
}

bool is_rho_dominant(const RootDatum& rd, const AffineWeight& weight) {
  for (int i = 0; i < rd.nodes(); ++i)
    if (pairing(rd, weight, i) < -1) return false;
  return true;
}

NodeSet sing_set(const RootDatum& rd, const AffineWeight& weight) {
  if (!is_rho_dominant(rd, weight)) throw InvalidArgument("Sing is only defined for rho-dominant weights");
  NodeSet s = 0;
  for (int i = 0; i < rd.nodes(); ++i)
    if (pairing(rd, weight, i) == -1) s |= NodeSet{1} << i;
  return s;
}

Dominantization min_dominant_v(const RootDatumPtr& rd, Int kappa, PivotRule rule) {
  if (kappa <= -rd->h_dual)
    throw InvalidArgument("level " + std::to_string(kappa) + " is not above the critical level " +
                          std::to_string(-rd->h_dual) + " for " + rd->name());
  WeylElement v(rd);
  AffineWeight current = level_weight(*rd, kappa);
  while (true) {
    int pivot = -1;
    for (int i = 0; i < rd->nodes(); ++i) {
      if (pairing(*rd, current, i) < -1) {
        pivot = i;
        if (rule == PivotRule::SmallestIndex) break;
      }
    }
    if (pivot < 0) break;
    const auto s = WeylElement::generator(rd, pivot);
    current = dot_action(s, current);
    v = v.generator_times(pivot);
  }
  return {v, current};
}

AffineWeight parse_weight(const RootDatum& rd, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  const auto fail = [&]() { return InvalidArgument("malformed weight literal '" + raw + "'"); };

  std::optional<Int> fixed_level;
  if (const auto at = text.find('@'); at != std::string::npos) {
    try {
      std::size_t used = 0;
      fixed_level = std::stoll(text.substr(at + 1), &used);
      if (used != text.size() - at - 1) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    text = text.substr(0, at);
  }

  AffineWeight w = level_weight(rd, 0);
  std::size_t pos = 0;
  bool first = true;
  while (pos < text.size()) {
    Int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail();
    }
    first = false;
    Int coef = 1;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos > digits_start) {
      coef = std::stoll(text.substr(digits_start, pos - digits_start));
      if (pos < text.size() && text[pos] == '*') ++pos;
      else if (pos == text.size() || text[pos] == '+' || text[pos] == '-') {
        if (coef != 0) throw fail();  // bare integers only as "0"
        continue;
      }
    }
    if (pos >= text.size()) throw fail();
    const char basis = text[pos++];
    const std::size_t idx_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == idx_start) throw fail();
    const int node = std::stoi(text.substr(idx_start, pos - idx_start));
    if (node < 0 || node > rd.rank) throw InvalidArgument("weight index out of range in '" + raw + "'");
    coef *= sign;
    if (basis == 'L') {
      const auto f = fundamental_weight(rd, node);
      for (int j = 0; j < rd.rank; ++j) w.finite[j] += coef * f.finite[j];
      w.level += coef * f.level;
    } else if (basis == 'w') {
      if (node == 0) throw fail();
      w.finite[node - 1] += coef;
    } else {
      throw fail();
    }
  }
  if (first && !fixed_level) throw fail();
  if (fixed_level) w.level = *fixed_level;
  return w;
}

std::string format_weight(const AffineWeight& weight) {
  std::ostringstream out;
  bool any = false;
  for (std::size_t j = 0; j < weight.finite.size(); ++j) {
    const Int c = weight.finite[j];
    if (c == 0) continue;
    if (any) out << (c > 0 ? "+" : "-");
    else if (c < 0) out << "-";
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) out << mag << "*";
    out << "w" << (j + 1);
    any = true;
  }
  if (!any) out << "0";
  out << "@" << weight.level;
  return out.str();
}

std::string format_module(const AffineWeight& weight) {
  std::ostringstream out;
  out << "L_" << weight.level;
  bool any = false;
  std::ostringstream inner;
  for (std::size_t j = 0; j < weight.finite.size(); ++j) {
    const Int c = weight.finite[j];
    if (c == 0) continue;
    if (any) inner << (c > 0 ? "+" : "-");
    else if (c < 0) inner << "-";
    const Int mag = c < 0 ? -c : c;
    if (mag != 1) inner << mag;
    inner << "L" << (j + 1);
    any = true;
  }
  if (any) out << "(" << inner.str() << ")";
  return out.str();
}

}  // namespace weylcells
