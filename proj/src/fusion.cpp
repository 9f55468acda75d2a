#include "weylcells/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <numeric>
#include <sstream>

namespace weylcells {

namespace {

using Kind = GroupLabel::Kind;

Int mod(Int x, Int m) { return ((x % m) + m) % m; }

// Basis (v/g, u) of Z^2 adapted to v = (a, b): the class of x in
// Z^2/<v> is (alpha mod g, beta) where x = alpha v/g + beta u.
struct KernelBasis {
  Int g, p, q, ux, uy;  // v/g = (p, q), u = (ux, uy), p*uy - q*ux = 1
};

KernelBasis kernel_basis(Int a, Int b) {
  const Int g = std::gcd(a, b);
  const Int p = a / g;
  const Int q = b / g;
  // Extended Euclid: s p + t q = 1, then u = (-t, s) gives p s + q t = 1.
  Int old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int quo = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quo * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quo * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - quo * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  return {g < 0 ? -g : g, p, q, -old_t, old_s};
}

std::pair<Int, Int> kernel_coordinates(const GroupLabel& gl, Int x, Int y) {
  const auto kb = kernel_basis(gl.a, gl.b);
  // Solve (x, y) = alpha (p, q) + beta (ux, uy); determinant p uy - q ux = 1.
  const Int alpha = x * kb.uy - y * kb.ux;
  const Int beta = kb.p * y - kb.q * x;
  return {mod(alpha, kb.g), beta};
}

std::vector<std::size_t> factor_offsets(const GroupLabel& g) {
  std::vector<std::size_t> off{0};
  for (const auto& f : g.factors) off.push_back(off.back() + f.arity());
  return off;
}

IrrepLabel slice(const IrrepLabel& chi, std::size_t from, std::size_t to) {
  return IrrepLabel{{chi.data.begin() + static_cast<std::ptrdiff_t>(from),
                     chi.data.begin() + static_cast<std::ptrdiff_t>(to)}};
}

void check_arity(const GroupLabel& g, const IrrepLabel& chi) {
  if (chi.data.size() != g.arity())
    throw InvalidArgument("irrep data of size " + std::to_string(chi.data.size()) + " does not fit " + g.to_string());
}

// O2 / NSL2Gm encoding: data = {0} trivial, {-1} sign, {n} (n >= 1) W_n.
IrrepMultiset dihedral_tensor(Int x, Int y) {
  IrrepMultiset out;
  const auto add_w = [&](Int n) {
    if (n == 0) {
      out[{{0}}] += 1;
      out[{{-1}}] += 1;
    } else {
      out[{{n}}] += 1;
    }
  };
  if (x <= 0 && y <= 0) out[{{(x == y) ? 0 : -1}}] += 1;
  else if (x <= 0) out[{{y}}] += 1;
  else if (y <= 0) out[{{x}}] += 1;
  else {
    add_w(x + y);
    add_w(x > y ? x - y : y - x);
  }
  return out;
}

// Order-8 groups Q8 / D8 share a fusion ring: four characters of the
// abelianisation (Z/2)^2, indices 0..3 as bit pairs, plus the 2-dim (index 4).
IrrepMultiset order8_tensor(Int x, Int y) {
  IrrepMultiset out;
  if (x < 4 && y < 4) out[{{x ^ y}}] += 1;
  else if (x < 4 || y < 4) out[{{4}}] += 1;
  else
    for (Int k = 0; k < 4; ++k) out[{{k}}] += 1;
  return out;
}

IrrepMultiset s3_tensor(Int x, Int y) {
  IrrepMultiset out;
  if (x < 2 && y < 2) out[{{x ^ y}}] += 1;
  else if (x < 2 || y < 2) out[{{2}}] += 1;
  else
    for (Int k = 0; k < 3; ++k) out[{{k}}] += 1;
  return out;
}

// Weight multiset of the SL3 irreducible V(a, b) via Gelfand-Tsetlin
// patterns with top row (a+b, b, 0); weights in fundamental coordinates.
std::map<std::pair<Int, Int>, Int> sl3_weights(Int a, Int b) {
  std::map<std::pair<Int, Int>, Int> w;
  const Int l1 = a + b, l2 = b, l3 = 0;
  for (Int m1 = l2; m1 <= l1; ++m1) {
    for (Int m2 = l3; m2 <= l2; ++m2) {
      for (Int k = m2; k <= m1; ++k) {
        // Row sums give the gl3 weight (e1, e2, e3).
        const Int e1 = k;
        const Int e2 = m1 + m2 - k;
        const Int e3 = l1 + l2 + l3 - m1 - m2;
        ++w[{e1 - e2, e2 - e3}];
      }
    }
  }
  return w;
}

IrrepMultiset sl3_tensor(Int a, Int b, Int c, Int d) {
  auto wa = sl3_weights(a, b);
  auto wb = sl3_weights(c, d);
  std::map<std::pair<Int, Int>, Int> total;
  for (const auto& [x, mx] : wa)
    for (const auto& [y, my] : wb) total[{x.first + y.first, x.second + y.second}] += mx * my;
  IrrepMultiset out;
  // Peel off highest weights. p+q is positive on both simple roots, so a
  // dominant weight with the largest p+q is maximal in the dominance order.
  while (true) {
    std::pair<Int, Int> best{0, 0};
    Int best_height = -1;
    for (const auto& [wt, m] : total) {
      if (m == 0 || wt.first < 0 || wt.second < 0) continue;
      const Int h = wt.first + wt.second;
      if (h > best_height) {
        best_height = h;
        best = wt;
      }
    }
    if (best_height < 0) break;
    const Int mult = total[best];
    out[{{best.first, best.second}}] += mult;
    for (const auto& [wt, m] : sl3_weights(best.first, best.second)) total[wt] -= m * mult;
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    for (const auto& [wt, m] : total)
      if (m < 0) throw std::logic_error("SL3 tensor decomposition went negative");
  }
  return out;
}

}  // namespace

GroupLabel GroupLabel::kernel_torus(Int a, Int b) {
  if (a == 0 && b == 0) throw InvalidArgument("kernel of the trivial character is the whole torus");
  GroupLabel g{Kind::KernelTorus, 0};
  g.a = a;
  g.b = b;
  return g;
}

GroupLabel GroupLabel::product(std::vector<GroupLabel> factors) {
  if (factors.size() < 2) throw InvalidArgument("a product needs at least two factors");
  GroupLabel g{Kind::Product, 0};
  g.factors = std::move(factors);
  return g;
}

GroupLabel GroupLabel::parse(const std::string& text) {
  // Products: split on 'x' at top level (outside parentheses).
  std::vector<std::string> pieces;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == 'x' && depth == 0) {
      pieces.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  pieces.push_back(cur);
  if (pieces.size() > 1) {
    std::vector<GroupLabel> fs;
    for (const auto& p : pieces) fs.push_back(parse(p));
    return product(std::move(fs));
  }
  const auto fail = [&]() { return InvalidArgument("unknown group '" + text + "'"); };
  const auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const Int v = std::stoll(s, &used);
      if (used != s.size()) throw fail();
      return v;
    } catch (const std::logic_error&) {
      throw fail();
    }
  };
  if (text == "Klein") return simple(Kind::Klein);
  if (text == "S3") return simple(Kind::S3);
  if (text == "Q8") return simple(Kind::Q8);
  if (text == "D8") return simple(Kind::D8);
  if (text == "SL2") return simple(Kind::SL2);
  if (text == "SL3") return simple(Kind::SL3);
  if (text == "O2") return simple(Kind::O2);
  if (text == "NSL2Gm") return simple(Kind::NSL2Gm);
  if (text == "Gm") return torus(1);
  if (text.rfind("Gm", 0) == 0) return torus(static_cast<int>(number(text.substr(2))));
  if (text.rfind("Z", 0) == 0 && text.size() > 1) {
    const Int n = number(text.substr(1));
    if (n < 1) throw fail();
    return cyclic(static_cast<int>(n));
  }
  if (text.rfind("KerGL2(", 0) == 0 && text.back() == ')') {
    const Int k = number(text.substr(7, text.size() - 8));
    if (k < 1) throw fail();
    return kernel_gl2(static_cast<int>(k));
  }
  if (text.rfind("Ker(", 0) == 0 && text.back() == ')') {
    const auto inner = text.substr(4, text.size() - 5);
    const auto comma = inner.find(',');
    if (comma == std::string::npos) throw fail();
    return kernel_torus(number(inner.substr(0, comma)), number(inner.substr(comma + 1)));
  }
  throw fail();
}

std::string GroupLabel::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "Z" + std::to_string(param);
    case Kind::Klein: return "Klein";
    case Kind::S3: return "S3";
    case Kind::Q8: return "Q8";
    case Kind::D8: return "D8";
    case Kind::Torus: return param == 1 ? "Gm" : "Gm" + std::to_string(param);
    case Kind::SL2: return "SL2";
    case Kind::SL3: return "SL3";
    case Kind::O2: return "O2";
    case Kind::NSL2Gm: return "NSL2Gm";
    case Kind::KernelTorus: return "Ker(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::KernelGL2: return "KerGL2(" + std::to_string(param) + ")";
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].to_string();
      return s;
    }
  }
  return "?";
}

bool GroupLabel::is_finite() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Klein:
    case Kind::S3:
    case Kind::Q8:
    case Kind::D8: return true;
    case Kind::KernelTorus: return false;
    case Kind::Product:
      return std::all_of(factors.begin(), factors.end(), [](const GroupLabel& f) { return f.is_finite(); });
    default: return false;
  }
}

std::size_t GroupLabel::arity() const {
  switch (kind) {
    case Kind::Klein:
    case Kind::SL3:
    case Kind::KernelTorus:
    case Kind::KernelGL2: return 2;
    case Kind::Torus: return static_cast<std::size_t>(param);
    case Kind::Product: {
      std::size_t s = 0;
      for (const auto& f : factors) s += f.arity();
      return s;
    }
    default: return 1;
  }
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest non-zero entry of the remaining block to (t, t),
    // reduce, and repeat until row and column t are clear.
    while (true) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (pi == rows || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int f = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int f = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility condition on the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
          }
      if (divides) break;
    }
    diag.push_back(std::abs(m[t][t]));
  }
  return diag;
}

TorusNormalForm normal_form(const GroupLabel& g) {
  if (g.kind != Kind::KernelTorus) throw InvalidArgument("normal_form needs a kernel torus group");
  const auto d = smith_diagonal({{g.a, g.b}});
  TorusNormalForm nf;
  nf.rank = 2 - static_cast<int>(d.size());
  for (Int x : d)
    if (x > 1) nf.torsion.push_back(x);
  return nf;
}

IrrepLabel canonical(const GroupLabel& g, IrrepLabel chi) {
  check_arity(g, chi);
  switch (g.kind) {
    case Kind::Cyclic: chi.data[0] = mod(chi.data[0], g.param); break;
    case Kind::Klein: chi.data[0] = mod(chi.data[0], 2); chi.data[1] = mod(chi.data[1], 2); break;
    case Kind::KernelTorus: {
      const auto [alpha, beta] = kernel_coordinates(g, chi.data[0], chi.data[1]);
      const auto kb = kernel_basis(g.a, g.b);
      const Int x0 = alpha * kb.p + beta * kb.ux;
      const Int y0 = alpha * kb.q + beta * kb.uy;
      // Smallest L1 representative of x0 + t (a, b); ties go to the larger x.
      const Int step = std::max(std::abs(g.a), std::abs(g.b));
      const Int reach = (std::abs(x0) + std::abs(y0)) / step + 2;
      Int bx = x0, by = y0;
      for (Int t = -reach; t <= reach; ++t) {
        const Int x = x0 + t * g.a, y = y0 + t * g.b;
        const Int n = std::abs(x) + std::abs(y), bn = std::abs(bx) + std::abs(by);
        if (n < bn || (n == bn && x > bx)) {
          bx = x;
          by = y;
        }
      }
      chi.data = {bx, by};
      break;
    }
    case Kind::KernelGL2: {
      if (chi.data[0] < chi.data[1]) throw InvalidArgument("GL2 highest weight must satisfy a >= b");
      const Int shift = chi.data[1] - mod(chi.data[1], g.param);
      chi.data[0] -= shift;
      chi.data[1] -= shift;
      break;
    }
    case Kind::Product: {
      const auto off = factor_offsets(g);
      IrrepLabel out;
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const auto part = canonical(g.factors[i], slice(chi, off[i], off[i + 1]));
        out.data.insert(out.data.end(), part.data.begin(), part.data.end());
      }
      return out;
    }
    default: break;
  }
  return chi;
}

IrrepLabel trivial_irrep(const GroupLabel& g) { return IrrepLabel{std::vector<Int>(g.arity(), 0)}; }

Int dimension(const GroupLabel& g, const IrrepLabel& chi) {
  check_arity(g, chi);
  const auto& d = chi.data;
  switch (g.kind) {
    case Kind::S3: return d[0] == 2 ? 2 : 1;
    case Kind::Q8:
    case Kind::D8: return d[0] == 4 ? 2 : 1;
    case Kind::SL2: return d[0] + 1;
    case Kind::SL3: return (d[0] + 1) * (d[1] + 1) * (d[0] + d[1] + 2) / 2;
    case Kind::O2:
    case Kind::NSL2Gm: return d[0] >= 1 ? 2 : 1;
    case Kind::KernelGL2: return d[0] - d[1] + 1;
    case Kind::Product: {
      const auto off = factor_offsets(g);
      Int dim = 1;
      for (std::size_t i = 0; i < g.factors.size(); ++i) dim *= dimension(g.factors[i], slice(chi, off[i], off[i + 1]));
      return dim;
    }
    default: return 1;
  }
}

IrrepLabel dual(const GroupLabel& g, const IrrepLabel& chi) {
  check_arity(g, chi);
  IrrepLabel out = chi;
  switch (g.kind) {
    case Kind::Cyclic:
    case Kind::Torus:
    case Kind::KernelTorus:
      for (auto& x : out.data) x = -x;
      break;
    case Kind::SL3: std::swap(out.data[0], out.data[1]); break;
    case Kind::KernelGL2: out.data = {-chi.data[1], -chi.data[0]}; break;
    case Kind::Product: {
      const auto off = factor_offsets(g);
      out.data.clear();
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const auto part = dual(g.factors[i], slice(chi, off[i], off[i + 1]));
        out.data.insert(out.data.end(), part.data.begin(), part.data.end());
      }
      break;
    }
    default: break;
  }
  return canonical(g, out);
}

IrrepLabel parse_irrep(const GroupLabel& g, const std::string& text) {
  const auto fail = [&]() { return InvalidArgument("'" + text + "' is not an irreducible of " + g.to_string()); };
  if (g.kind == Kind::Product) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, '|')) parts.push_back(item);
    if (parts.size() != g.factors.size()) throw fail();
    IrrepLabel out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto p = parse_irrep(g.factors[i], parts[i]);
      out.data.insert(out.data.end(), p.data.begin(), p.data.end());
    }
    return out;
  }
  const auto integers = [&]() {
    std::vector<Int> v;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(item, &used));
        if (used != item.size()) throw fail();
      } catch (const std::logic_error&) {
        throw fail();
      }
    }
    if (v.size() != g.arity()) throw fail();
    return v;
  };
  const auto named = [&](const std::vector<std::string>& names) -> Int {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == text) return static_cast<Int>(i);
    throw fail();
  };
  switch (g.kind) {
    case Kind::Klein: {
      const Int k = named({"1", "a", "b", "ab"});
      return {{k & 1, k >> 1}};
    }
    case Kind::S3: return {{named({"1", "sign", "2dim"})}};
    case Kind::Q8:
    case Kind::D8: return {{named({"1", "a", "b", "ab", "2dim"})}};
    case Kind::O2:
    case Kind::NSL2Gm: {
      if (text == "sign") return {{-1}};
      const auto v = integers();
      if (v[0] < 0) throw fail();
      return {{v[0]}};
    }
    case Kind::SL2:
    case Kind::SL3: {
      auto v = integers();
      if (std::any_of(v.begin(), v.end(), [](Int x) { return x < 0; })) throw fail();
      return {v};
    }
    case Kind::KernelGL2: {
      auto v = integers();
      if (v[0] < v[1]) throw fail();
      return canonical(g, {v});
    }
    default: return canonical(g, {integers()});
  }
}

std::string irrep_name(const GroupLabel& g, const IrrepLabel& chi) {
  check_arity(g, chi);
  const auto& d = chi.data;
  const auto join = [&]() {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s;
  };
  switch (g.kind) {
    case Kind::Klein: return std::vector<std::string>{"1", "a", "b", "ab"}[d[0] + 2 * d[1]];
    case Kind::S3: return std::vector<std::string>{"1", "sign", "2dim"}[d[0]];
    case Kind::Q8:
    case Kind::D8: return std::vector<std::string>{"1", "a", "b", "ab", "2dim"}[d[0]];
    case Kind::O2:
    case Kind::NSL2Gm: return d[0] < 0 ? "sign" : std::to_string(d[0]);
    case Kind::Product: {
      const auto off = factor_offsets(g);
      std::string s;
      for (std::size_t i = 0; i < g.factors.size(); ++i)
        s += (i ? "|" : "") + irrep_name(g.factors[i], slice(chi, off[i], off[i + 1]));
      return s;
    }
    default: return join();
  }
}

std::vector<IrrepLabel> irreps(const GroupLabel& g, int bound) {
  std::vector<IrrepLabel> out;
  switch (g.kind) {
    case Kind::Cyclic:
      for (Int k = 0; k < g.param; ++k) out.push_back({{k}});
      break;
    case Kind::Klein:
      for (Int k = 0; k < 4; ++k) out.push_back({{k & 1, k >> 1}});
      break;
    case Kind::S3:
      for (Int k = 0; k < 3; ++k) out.push_back({{k}});
      break;
    case Kind::Q8:
    case Kind::D8:
      for (Int k = 0; k < 5; ++k) out.push_back({{k}});
      break;
    case Kind::Torus: {
      std::vector<Int> cur(g.param, -bound);
      while (true) {
        out.push_back({cur});
        std::size_t i = 0;
        while (i < cur.size() && cur[i] == bound) cur[i++] = -bound;
        if (i == cur.size()) break;
        ++cur[i];
      }
      break;
    }
    case Kind::SL2:
      for (Int n = 0; n <= bound; ++n) out.push_back({{n}});
      break;
    case Kind::SL3:
      for (Int a = 0; a <= bound; ++a)
        for (Int b = 0; a + b <= bound; ++b) out.push_back({{a, b}});
      break;
    case Kind::O2:
    case Kind::NSL2Gm:
      for (Int n = -1; n <= bound; ++n) out.push_back({{n}});
      break;
    case Kind::KernelTorus: {
      const auto kb = kernel_basis(g.a, g.b);
      for (Int beta = -bound; beta <= bound; ++beta)
        for (Int alpha = 0; alpha < kb.g; ++alpha)
          out.push_back(canonical(g, {{alpha * kb.p + beta * kb.ux, alpha * kb.q + beta * kb.uy}}));
      break;
    }
    case Kind::KernelGL2:
      for (Int b = 0; b < g.param; ++b)
        for (Int a = b; a <= b + bound; ++a) out.push_back({{a, b}});
      break;
    case Kind::Product: {
      std::vector<IrrepLabel> acc{IrrepLabel{}};
      for (const auto& f : g.factors) {
        std::vector<IrrepLabel> next;
        for (const auto& head : acc)
          for (const auto& tail : irreps(f, bound)) {
            IrrepLabel x = head;
            x.data.insert(x.data.end(), tail.data.begin(), tail.data.end());
            next.push_back(x);
          }
        acc = std::move(next);
      }
      out = std::move(acc);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IrrepMultiset tensor(const GroupLabel& g, const IrrepLabel& x0, const IrrepLabel& y0) {
  const auto x = canonical(g, x0);
  const auto y = canonical(g, y0);
  IrrepMultiset out;
  switch (g.kind) {
    case Kind::Cyclic:
    case Kind::Klein:
    case Kind::Torus:
    case Kind::KernelTorus: {
      IrrepLabel s = x;
      for (std::size_t i = 0; i < s.data.size(); ++i) s.data[i] += y.data[i];
      out[canonical(g, s)] += 1;
      return out;
    }
    case Kind::S3: return s3_tensor(x.data[0], y.data[0]);
    case Kind::Q8:
    case Kind::D8: return order8_tensor(x.data[0], y.data[0]);
    case Kind::O2:
    case Kind::NSL2Gm: return dihedral_tensor(x.data[0], y.data[0]);
    case Kind::SL2: {
      const Int n = x.data[0], m = y.data[0];
      for (Int k = std::abs(n - m); k <= n + m; k += 2) out[{{k}}] += 1;
      return out;
    }
    case Kind::SL3: return sl3_tensor(x.data[0], x.data[1], y.data[0], y.data[1]);
    case Kind::KernelGL2: {
      const Int a = x.data[0], b = x.data[1], c = y.data[0], d = y.data[1];
      for (Int j = 0; j <= std::min(a - b, c - d); ++j) out[canonical(g, {{a + c - j, b + d + j}})] += 1;
      return out;
    }
    case Kind::Product: {
      const auto off = factor_offsets(g);
      std::map<IrrepLabel, Int> acc{{IrrepLabel{}, 1}};
      for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const auto part = tensor(g.factors[i], slice(x, off[i], off[i + 1]), slice(y, off[i], off[i + 1]));
        std::map<IrrepLabel, Int> next;
        for (const auto& [head, m1] : acc)
          for (const auto& [tail, m2] : part) {
            IrrepLabel z = head;
            z.data.insert(z.data.end(), tail.data.begin(), tail.data.end());
            next[z] += m1 * m2;
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

std::string format_multiset(const GroupLabel& g, const IrrepMultiset& m) {
  std::string s;
  for (const auto& [chi, mult] : m) {
    if (!s.empty()) s += " + ";
    if (mult != 1) s += std::to_string(mult) + "*";
    s += irrep_name(g, chi);
  }
  return s.empty() ? "0" : s;
}

}  // namespace weylcells
