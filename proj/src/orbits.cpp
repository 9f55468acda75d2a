#include "weylcells/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace weylcells {

namespace {

std::string kind_prefix(Ambient::Kind k) {
  switch (k) {
    case Ambient::Kind::GL: return "gl";
    case Ambient::Kind::SO: return "so";
    case Ambient::Kind::SP: return "sp";
  }
  return "?";
}

std::vector<int> multiplicity_fix(std::vector<int> parts, int bad_parity) {
  while (true) {
    std::map<int, int, std::greater<>> mult;
    for (int p : parts) ++mult[p];
    int q = 0;
    for (const auto& [part, m] : mult) {
      if (part % 2 == bad_parity && m % 2 == 1) {
        q = part;
        break;
      }
    }
    if (q == 0) return parts;
    std::size_t last = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] == q) last = i;
    parts[last] -= 1;
    std::size_t j = last + 1;
    while (j < parts.size() && parts[j] >= q - 1) ++j;
    if (j == parts.size()) parts.push_back(0);
    parts[j] += 1;
    std::erase(parts, 0);
  }
}

std::vector<Partition> maximal_elements(const std::vector<Partition>& items) {
  std::vector<Partition> out;
  for (const auto& p : items) {
    const bool dominated = std::any_of(items.begin(), items.end(), [&](const Partition& q) {
      return !(q == p) && closure_leq(p, q);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::vector<Partition> minimal_elements(const std::vector<Partition>& items) {
  std::vector<Partition> out;
  for (const auto& p : items) {
    const bool dominates = std::any_of(items.begin(), items.end(), [&](const Partition& q) {
      return !(q == p) && closure_leq(q, p);
    });
    if (!dominates) out.push_back(p);
  }
  return out;
}

Partition unique_or_throw(const std::vector<Partition>& items, const std::string& what, const Ambient& a) {
  if (items.size() != 1)
    throw InvalidArgument("the " + what + " orbit of " + a.to_string() + " is not unique (" +
                          std::to_string(items.size()) + " candidates)");
  return items.front();
}

}  // namespace

Ambient Ambient::parse(const std::string& text) {
  if (text.size() < 3) throw InvalidArgument("malformed ambient '" + text + "'");
  Ambient a;
  const auto prefix = text.substr(0, 2);
  if (prefix == "gl") a.kind = Kind::GL;
  else if (prefix == "so") a.kind = Kind::SO;
  else if (prefix == "sp") a.kind = Kind::SP;
  else throw InvalidArgument("unknown ambient '" + text + "' (expected glN, soN or spN)");
  try {
    std::size_t used = 0;
    a.n = std::stoi(text.substr(2), &used);
    if (used != text.size() - 2) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("malformed ambient '" + text + "'");
  }
  if (a.n <= 0) throw InvalidArgument("ambient dimension must be positive");
  if (a.kind == Kind::SP && a.n % 2 != 0) throw InvalidArgument("sp(n) needs n even");
  return a;
}

std::string Ambient::to_string() const { return kind_prefix(kind) + std::to_string(n); }

Partition Partition::make(std::vector<int> parts, Ambient ambient) {
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
    throw InvalidArgument("partition parts must be non-negative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition p{std::move(parts), ambient};
  if (p.size() != ambient.n)
    throw InvalidArgument("partition " + p.to_string() + " does not sum to " + std::to_string(ambient.n));
  return p;
}

Partition Partition::parse(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw InvalidArgument("partition literal needs '@ambient', e.g. 4,2,1@so7");
  const Ambient ambient = Ambient::parse(text.substr(at + 1));
  std::vector<int> parts;
  std::stringstream in(text.substr(0, at));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("malformed partition literal '" + text + "'");
    }
  }
  return make(std::move(parts), ambient);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
  out << "@" << ambient.to_string();
  return out.str();
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool is_valid(const Partition& p) {
  if (p.size() != p.ambient.n) return false;
  if (p.ambient.kind == Ambient::Kind::GL) return true;
  const int bad = p.ambient.kind == Ambient::Kind::SO ? 0 : 1;
  std::map<int, int> mult;
  for (int x : p.parts) ++mult[x];
  return std::all_of(mult.begin(), mult.end(),
                     [&](const auto& kv) { return kv.first % 2 != bad || kv.second % 2 == 0; });
}

Partition collapse(const Partition& p) {
  if (p.ambient.kind == Ambient::Kind::GL) throw InvalidArgument("collapse is defined for so and sp only");
  const int bad = p.ambient.kind == Ambient::Kind::SO ? 0 : 1;
  return Partition::make(multiplicity_fix(p.parts, bad), p.ambient);
}

bool closure_leq(const Partition& p, const Partition& q) {
  if (!(p.ambient == q.ambient))
    throw InvalidArgument("cannot compare " + p.to_string() + " with " + q.to_string());
  int sp = 0;
  int sq = 0;
  const std::size_t len = std::max(p.parts.size(), q.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.parts.size() ? p.parts[i] : 0;
    sq += i < q.parts.size() ? q.parts[i] : 0;
    if (sp > sq) return false;
  }
  return true;
}

std::vector<int> transpose(const std::vector<int>& parts) {
  std::vector<int> out;
  if (parts.empty()) return out;
  const int rows = *std::max_element(parts.begin(), parts.end());
  for (int r = 1; r <= rows; ++r)
    out.push_back(static_cast<int>(std::count_if(parts.begin(), parts.end(), [r](int x) { return x >= r; })));
  return out;
}

std::vector<int> weighted_dynkin(const Partition& p) {
  if (!is_valid(p)) throw InvalidArgument("invalid partition " + p.to_string());
  std::vector<int> h;
  for (int m : p.parts)
    for (int e = m - 1; e >= 1 - m; e -= 2) h.push_back(e);
  std::sort(h.begin(), h.end(), std::greater<>());
  std::vector<int> labels;
  const int n = p.ambient.n;
  if (p.ambient.kind == Ambient::Kind::GL) {
    for (int i = 0; i + 1 < n; ++i) labels.push_back(h[i] - h[i + 1]);
    return labels;
  }
  const int m = n / 2;
  for (int i = 0; i + 1 < m; ++i) labels.push_back(h[i] - h[i + 1]);
  if (m == 0) return labels;
  if (p.ambient.kind == Ambient::Kind::SP) labels.push_back(2 * h[m - 1]);
  else if (n % 2 == 1) labels.push_back(h[m - 1]);
  else if (m >= 2) labels.push_back(h[m - 2] + h[m - 1]);
  return labels;
}

Partition ls_dual(const Partition& p) {
  if (!is_valid(p)) throw InvalidArgument("invalid partition " + p.to_string());
  auto t = transpose(p.parts);
  const auto& a = p.ambient;
  switch (a.kind) {
    case Ambient::Kind::GL:
      return Partition::make(t, a);
    case Ambient::Kind::SO:
      if (a.n % 2 == 0) return collapse(Partition::make(t, a));
      t.back() -= 1;
      return collapse(Partition::make(t, Ambient{Ambient::Kind::SP, a.n - 1}));
    case Ambient::Kind::SP:
      t.front() += 1;
      return collapse(Partition::make(t, Ambient{Ambient::Kind::SO, a.n + 1}));
  }
  throw std::logic_error("unreachable");
}

std::vector<Partition> valid_partitions(const Ambient& ambient) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p{current, ambient};
      if (is_valid(p)) out.push_back(p);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(ambient.n, ambient.n);
  return out;
}

std::string orbit_name_string(OrbitName name) {
  switch (name) {
    case OrbitName::Zero: return "zero";
    case OrbitName::Minimal: return "minimal";
    case OrbitName::Subsubregular: return "subsubregular";
    case OrbitName::Subregular: return "subregular";
    case OrbitName::Regular: return "regular";
  }
  return "?";
}

std::string OrbitLabel::to_string() const {
  std::string s = name ? orbit_name_string(*name) : std::string("partition");
  if (partition) s += "(" + partition->to_string() + ")";
  return s;
}

Partition named_orbit(OrbitName name, const Ambient& ambient) {
  auto all = valid_partitions(ambient);
  const auto without = [&](const std::vector<Partition>& drop) {
    std::vector<Partition> rest;
    for (const auto& p : all)
      if (std::find(drop.begin(), drop.end(), p) == drop.end()) rest.push_back(p);
    return rest;
  };
  const auto regular = unique_or_throw(maximal_elements(all), "regular", ambient);
  const auto zero = unique_or_throw(minimal_elements(all), "zero", ambient);
  switch (name) {
    case OrbitName::Regular: return regular;
    case OrbitName::Zero: return zero;
    case OrbitName::Subregular: return unique_or_throw(maximal_elements(without({regular})), "subregular", ambient);
    case OrbitName::Subsubregular: {
      const auto sub = unique_or_throw(maximal_elements(without({regular})), "subregular", ambient);
      return unique_or_throw(maximal_elements(without({regular, sub})), "subsubregular", ambient);
    }
    case OrbitName::Minimal: return unique_or_throw(minimal_elements(without({zero})), "minimal", ambient);
  }
  throw std::logic_error("unreachable");
}

Ambient dual_ambient(Family family, int rank) {
  switch (family) {
    case Family::A: return {Ambient::Kind::GL, rank + 1};
    case Family::B: return {Ambient::Kind::SP, 2 * rank};
    case Family::C: return {Ambient::Kind::SO, 2 * rank + 1};
    case Family::D: return {Ambient::Kind::SO, 2 * rank};
    default: throw InvalidArgument("no partition model for exceptional types");
  }
}

Partition sigma_partition(Family family, int rank, int kappa) {
  const auto out_of_range = [&]() {
    return InvalidArgument("no sigma row for " + std::string(1, static_cast<char>(family)) + std::to_string(rank) +
                           " at level " + std::to_string(kappa));
  };
  const Ambient ambient = dual_ambient(family, rank);
  Partition p;
  switch (family) {
    case Family::A:
      if (rank < 3 || kappa > -2 || 2 * kappa < -(rank + 1)) throw out_of_range();
      p = Partition::make({rank + 1 + kappa, -kappa}, ambient);
      break;
    case Family::B:
      if (!((rank >= 5 && (kappa == -3 || kappa == -4)) || (rank == 4 && kappa == -3))) throw out_of_range();
      p = Partition::make({2 * rank - 4, 4}, ambient);
      break;
    case Family::C:
      if (rank < 2 || kappa > -2 || 2 * kappa < -rank - 2) throw out_of_range();
      if (rank == -2 * kappa - 2) p = Partition::make({rank, rank, 1}, ambient);
      else p = Partition::make({2 * rank + 2 * kappa + 1, -2 * kappa - 1, 1}, ambient);
      break;
    case Family::D:
      if (!((rank >= 6 && (kappa == -3 || kappa == -4)) || (rank == 5 && kappa == -3))) throw out_of_range();
      p = Partition::make({2 * rank - 5, 5}, ambient);
      break;
    default:
      throw out_of_range();
  }
  if (!is_valid(p)) throw std::logic_error("sigma partition " + p.to_string() + " is not valid");
  return p;
}

}  // namespace weylcells
