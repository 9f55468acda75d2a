// Command-line front end. Exit codes: 0 ok, 1 a requested check failed,
// 2 usage or input error.

#include <iostream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylcells/affine_weyl.hpp"
#include "weylcells/fusion.hpp"
#include "weylcells/kl.hpp"
#include "weylcells/orbits.hpp"
#include "weylcells/rootdata.hpp"
#include "weylcells/tables.hpp"
#include "weylcells/weights.hpp"

using namespace weylcells;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string format = "text";
  std::string type;
  std::vector<std::string> args;
  int max_len = 6;
  int n_max = 4;
  std::string id;
  std::string group;
  std::string row;
  Int kappa = -1;
  bool failures_only = false;
};

std::string set_string(NodeSet set) {
  std::string s;
  for (int n : nodes_of(set)) s += (s.empty() ? "" : ",") + std::to_string(n);
  return "{" + s + "}";
}

json set_json(NodeSet set) {
  json a = json::array();
  for (int n : nodes_of(set)) a.push_back(n);
  return a;
}

std::string delta_string(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator())
                              : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

json word_json(const WeylElement& w) {
  json letters = json::array();
  for (const auto& l : w.reduced_word())
    letters.push_back(l.kind == Letter::Kind::Omega ? "g" + std::to_string(l.index) : std::to_string(l.index));
  return {{"word", letters}, {"length", w.length()}};
}

std::vector<Int> matrix_row(const IntMatrix& m, std::size_t r) {
  std::vector<Int> row;
  for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
  return row;
}

void need_args(const Options& o, std::size_t n, const std::string& what) {
  if (o.args.size() != n) throw InvalidArgument("expected " + std::to_string(n) + " argument(s): " + what);
}

RootDatumPtr need_type(const Options& o) {
  if (o.type.empty()) throw InvalidArgument("--type is required");
  return root_datum(o.type);
}

WeylElement element(const RootDatumPtr& rd, const std::string& word) { return WeylElement::from_word(rd, word); }

void print(const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

int print_bool(const Options& o, const std::string& key, bool value) {
  print(o, {{key, value}}, value ? "true" : "false");
  return value ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

int rootdata_show(const Options& o) {
  const auto rd = need_type(o);
  json cartan = json::array();
  for (int i = 0; i < rd->rank; ++i) cartan.push_back(matrix_row(rd->cartan, i));
  json j = {{"type", rd->name()},      {"rank", rd->rank},        {"cartan", cartan},
            {"marks", rd->marks},      {"comarks", rd->comarks},  {"h", rd->h},
            {"h_dual", rd->h_dual},    {"d", rd->d_max_comark},   {"omega_order", rd->omega.order()},
            {"minuscule", rd->minuscule}};
  std::ostringstream t;
  t << "type " << rd->name() << "\nh " << rd->h << "\nh_dual " << rd->h_dual << "\nd " << rd->d_max_comark
    << "\n|Omega| " << rd->omega.order() << "\nmarks";
  for (Int m : rd->marks) t << " " << m;
  t << "\ncomarks";
  for (Int m : rd->comarks) t << " " << m;
  t << "\ncartan";
  for (int i = 0; i < rd->rank; ++i) {
    t << "\n ";
    for (Int x : matrix_row(rd->cartan, i)) t << " " << x;
  }
  print(o, j, t.str());
  return kOk;
}

int weyl_mult(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 2, "two words");
  const auto w = element(rd, o.args[0]) * element(rd, o.args[1]);
  print(o, word_json(w), w.to_string());
  return kOk;
}

int weyl_len(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a word");
  const auto w = element(rd, o.args[0]);
  print(o, {{"length", w.length()}}, std::to_string(w.length()));
  return kOk;
}

int weyl_descents(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a word");
  const auto d = element(rd, o.args[0]).descents();
  print(o, {{"left", set_json(d.left)}, {"right", set_json(d.right)}},
        "left " + set_string(d.left) + "\nright " + set_string(d.right));
  return kOk;
}

int weyl_rigid(const Options& o) {
  const auto rd = need_type(o);
  const auto all = enumerate_rigid(rd, o.max_len);
  json arr = json::array();
  std::ostringstream t;
  if (o.format == "tsv") t << "word\tlength\tleft\tright";
  for (const auto& w : all) {
    const auto d = w.descents();
    arr.push_back(word_json(w));
    if (o.format == "tsv") t << "\n" << w.to_string() << "\t" << w.length() << "\t" << set_string(d.left) << "\t" << set_string(d.right);
    else t << (t.tellp() > 0 ? "\n" : "") << w.to_string();
  }
  print(o, arr, t.str());
  return kOk;
}

int weight_dot(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 2, "a word and a weight");
  const auto result = dot_action(element(rd, o.args[0]), parse_weight(*rd, o.args[1]));
  print(o, {{"weight", format_weight(result)}, {"delta", delta_string(result.delta)}},
        format_weight(result));
  return kOk;
}

int weight_dominant(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a weight");
  return print_bool(o, "rho_dominant", is_rho_dominant(*rd, parse_weight(*rd, o.args[0])));
}

int weight_sing(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a weight");
  const auto weight = parse_weight(*rd, o.args[0]);
  if (!is_rho_dominant(*rd, weight)) throw InvalidArgument("weight is not rho-dominant");
  const auto s = sing_set(*rd, weight);
  print(o, {{"sing", set_json(s)}}, set_string(s));
  return kOk;
}

int weight_minv(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a level");
  const auto dom = min_dominant_v(rd, std::stoll(o.args[0]));
  const auto s = sing_set(*rd, dom.kappa_plus);
  json j = word_json(dom.v);
  j["kappa_plus"] = format_weight(dom.kappa_plus);
  j["sing"] = set_json(s);
  print(o, j, "v " + dom.v.to_string() + "\nkappa+ " + format_weight(dom.kappa_plus) + "\nsing " + set_string(s));
  return kOk;
}

int kl_poly(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 2, "words x and y");
  KLEngine engine;
  const auto& p = engine.poly(element(rd, o.args[0]), element(rd, o.args[1]));
  print(o, {{"coefficients", p.coeffs()}, {"poly", p.to_string()}}, p.to_string());
  return kOk;
}

int kl_mu(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 2, "words x and y");
  KLEngine engine;
  const Int mu = engine.mu(element(rd, o.args[0]), element(rd, o.args[1]));
  print(o, {{"mu", mu}}, std::to_string(mu));
  return kOk;
}

// Elements of the (non-extended) affine Weyl group up to a length bound.
std::vector<WeylElement> ball(const RootDatumPtr& rd, int max_len) {
  std::vector<WeylElement> out{WeylElement(rd)};
  std::vector<WeylElement> layer = out;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<WeylElement> next;
    std::unordered_set<WeylElement, WeylElementHash> seen;
    for (const auto& x : layer)
      for (int s = 0; s <= rd->rank; ++s) {
        if (contains(x.right_descents(), s)) continue;
        auto y = x.times_generator(s);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    std::sort(next.begin(), next.end(), ElementOrder{});
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

int kl_mu_graph(const Options& o) {
  const auto rd = need_type(o);
  const auto elems = ball(rd, o.max_len);
  KLEngine engine(DescentChoice::Smallest, std::max(o.max_len, default_kl_max_length()));
  json arr = json::array();
  std::ostringstream t;
  t << "x\ty\tmu";
  for (const auto& y : elems)
    for (const auto& x : elems) {
      if (x.length() >= y.length()) continue;
      const Int mu = engine.mu(x, y);
      if (mu == 0) continue;
      arr.push_back({{"x", x.to_string()}, {"y", y.to_string()}, {"mu", mu}});
      t << "\n" << x.to_string() << "\t" << y.to_string() << "\t" << mu;
    }
  print(o, arr, t.str());
  return kOk;
}

int kl_fc(const Options& o) {
  const auto rd = need_type(o);
  need_args(o, 1, "a word");
  return print_bool(o, "fully_commutative", is_fully_commutative(element(rd, o.args[0])));
}

int orbit_dual(const Options& o) {
  need_args(o, 1, "a partition such as 4,2,1@so7");
  const auto d = ls_dual(Partition::parse(o.args[0]));
  print(o, {{"dual", d.to_string()}}, d.to_string());
  return kOk;
}

int orbit_closure(const Options& o) {
  need_args(o, 2, "partitions p and q");
  return print_bool(o, "leq", closure_leq(Partition::parse(o.args[0]), Partition::parse(o.args[1])));
}

int orbit_dynkin(const Options& o) {
  need_args(o, 1, "a partition");
  const auto labels = weighted_dynkin(Partition::parse(o.args[0]));
  std::string t;
  for (int x : labels) t += (t.empty() ? "" : " ") + std::to_string(x);
  print(o, {{"labels", labels}}, t);
  return kOk;
}

int orbit_sigma(const Options& o) {
  const auto rd = need_type(o);
  const auto p = sigma_partition(rd->family, rd->rank, static_cast<int>(o.kappa));
  print(o, {{"partition", p.to_string()}, {"valid", is_valid(p)}}, p.to_string());
  return kOk;
}

int fuse(const Options& o) {
  need_args(o, 2, "two irreducible labels");
  const auto g = GroupLabel::parse(o.group);
  const auto m = tensor(g, parse_irrep(g, o.args[0]), parse_irrep(g, o.args[1]));
  json j = json::object();
  for (const auto& [chi, mult] : m) j[irrep_name(g, chi)] = mult;
  print(o, j, format_multiset(g, m));
  return kOk;
}

int fuse_row(const Options& o) {
  need_args(o, 2, "two characters of the row's group");
  const auto r = fuse_modules(parse_table_id(o.id), o.row, o.kappa, o.args[0], o.args[1]);
  json mods = json::object();
  std::string t;
  for (const auto& [label, mult] : r.modules) {
    mods[format_module(label)] = mult;
    t += (t.empty() ? "" : " + ") + (mult > 1 ? std::to_string(mult) + " " : "") + format_module(label);
  }
  print(o, {{"group", r.group.to_string()}, {"characters", format_multiset(r.group, r.characters)}, {"modules", mods}},
        t);
  return kOk;
}

int report(const Options& o, const std::vector<CheckResult>& results) {
  if (o.format == "json") std::cout << report_json(results);
  else std::cout << report_text(results, o.failures_only);
  return all_pass(results) ? kOk : kCheckFailed;
}

int table_verify(const Options& o) {
  std::vector<CheckResult> all;
  const auto ids = o.id == "all" ? all_tables() : std::vector<TableId>{parse_table_id(o.id)};
  for (auto id : ids) {
    auto r = verify_table(id, o.n_max);
    all.insert(all.end(), r.begin(), r.end());
  }
  return report(o, all);
}

int table_emit(const Options& o) {
  const std::string fmt = o.format == "text" ? "tsv" : o.format;
  std::cout << emit_table(parse_table_id(o.id), fmt, o.n_max);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Weyl group cells, dot actions and table verification"};
  app.require_subcommand(1);
  Options o;
  int (*action)(const Options&) = nullptr;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "tsv", "tex"}));
  };
  const auto typed = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--type", o.type, "Root system type, e.g. G2, E8, B5");
  };
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    auto* sub = parent->add_subcommand(name, help);
    typed(sub);
    sub->add_option("args", o.args, "Positional arguments");
    sub->callback([&action, fn]() { action = fn; });
    return sub;
  };

  auto* rootdata = app.add_subcommand("rootdata", "Root datum of a type");
  rootdata->require_subcommand(1);
  leaf(rootdata, "show", "Cartan matrix, marks, Coxeter numbers, Omega", rootdata_show);

  auto* weyl = app.add_subcommand("weyl", "Extended affine Weyl group arithmetic");
  weyl->require_subcommand(1);
  leaf(weyl, "mult", "Product of two words", weyl_mult);
  leaf(weyl, "len", "Length", weyl_len);
  leaf(weyl, "descents", "Left and right descent sets", weyl_descents);
  leaf(weyl, "rigid", "Rigid elements up to --max-len", weyl_rigid)->add_option("--max-len", o.max_len);

  auto* weight = app.add_subcommand("weight", "Affine weights and the dot action");
  weight->require_subcommand(1);
  leaf(weight, "dot", "w . weight", weight_dot);
  leaf(weight, "dominant", "rho-dominance test", weight_dominant);
  leaf(weight, "sing", "Singular simple reflections of a rho-dominant weight", weight_sing);
  leaf(weight, "minv", "Minimal v making v.(k Lambda_0) rho-dominant", weight_minv);

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials and full commutativity");
  kl->require_subcommand(1);
  leaf(kl, "poly", "P_{x,y}", kl_poly);
  leaf(kl, "mu", "mu(x, y)", kl_mu);
  leaf(kl, "mu-graph", "Edges (x, y, mu) up to --max-len", kl_mu_graph)->add_option("--max-len", o.max_len);
  leaf(kl, "fc", "Stembridge full commutativity test", kl_fc);

  auto* orbit = app.add_subcommand("orbit", "Nilpotent orbits as partitions");
  orbit->require_subcommand(1);
  leaf(orbit, "dual", "Spaltenstein dual", orbit_dual);
  leaf(orbit, "closure", "p lies in the closure of q", orbit_closure);
  leaf(orbit, "dynkin", "Weighted Dynkin diagram", orbit_dynkin);
  leaf(orbit, "sigma", "Partition of sigma for a classical type and level", orbit_sigma)
      ->add_option("--k", o.kappa, "Level")
      ->required();

  auto* fuse_cmd = leaf(&app, "fuse", "Tensor product of two irreducibles", fuse);
  fuse_cmd->add_option("--group", o.group, "Group, e.g. S3, Q8, O2, SL3, Ker(4,-2)")->required();

  auto* fuse_row_cmd = leaf(&app, "fuse-row", "Fusion of two modules of a table row", fuse_row);
  fuse_row_cmd->add_option("--table", o.id, "sous-reguliers, sous-sous or rang2")->required();
  fuse_row_cmd->add_option("--row", o.row, "Type, e.g. G2")->required();
  fuse_row_cmd->add_option("--k", o.kappa, "Level")->required();

  auto* table = app.add_subcommand("table", "Reproduce the result tables");
  table->require_subcommand(1);
  auto* verify = leaf(table, "verify", "Check every instantiated entry", table_verify);
  verify->add_option("--id", o.id, "sous-reguliers, sous-sous, rang2 or all")->required();
  verify->add_option("--nmax", o.n_max, "Parameter bound");
  verify->add_flag("--failures-only", o.failures_only, "Only print failing checks");
  auto* emit = leaf(table, "emit", "Regenerate a table as tsv, json or tex", table_emit);
  emit->add_option("--id", o.id, "sous-reguliers, sous-sous or rang2")->required();
  emit->add_option("--nmax", o.n_max, "Parameter bound")->default_val(2);
  leaf(table, "levels", "Level columns against the maximal comark", [](const Options& opt) {
    return report(opt, verify_level_ranges());
  })->add_flag("--failures-only", o.failures_only, "Only print failing checks");
  leaf(table, "sing", "Singleton Sing and the tv characterization", [](const Options& opt) {
    return report(opt, verify_singleton_sing());
  })->add_flag("--failures-only", o.failures_only, "Only print failing checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action(o) : kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
