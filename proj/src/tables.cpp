#include "weylcells/tables.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "weylcells/kl.hpp"

namespace weylcells {

namespace {

std::string type_name(Family family, int rank) { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

struct LevelData {
  WeylElement v;
  AffineWeight kappa_plus;
  NodeSet sing = 0;
};

const LevelData& level_data(const RootDatumPtr& rd, Int kappa) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, Int>, LevelData> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(rd->name(), kappa);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto dom = min_dominant_v(rd, kappa);
    const NodeSet sing = sing_set(*rd, dom.kappa_plus);
    it = cache.emplace(key, LevelData{dom.v, dom.kappa_plus, sing}).first;
  }
  return it->second;
}

WeylElement product_of(const RootDatumPtr& rd, NodeSet set) {
  WeylElement out(rd);
  for (int node : nodes_of(set)) out = out.times_generator(node);
  return out;
}

// Evaluates the pieces of a character template and joins them back.
std::string expand_chi(const std::string& chi, const Bindings& vars) {
  std::string out, piece;
  const auto flush = [&]() {
    bool evaluated = false;
    if (!piece.empty() && expr_is_closed(piece, vars)) {
      try {
        out += std::to_string(eval_expr(piece, vars));
        evaluated = true;
      } catch (const InvalidArgument&) {
      }
    }
    if (!evaluated) out += piece;
    piece.clear();
  };
  for (char c : chi) {
    if (c == ',' || c == '|') {
      flush();
      out.push_back(c);
    } else {
      piece.push_back(c);
    }
  }
  flush();
  return out;
}

std::string check_row_id(const Instance& inst) { return inst.id(); }

std::string format_set(NodeSet set) {
  std::string s = "{";
  bool first = true;
  for (int n : nodes_of(set)) {
    s += (first ? "" : ",") + std::to_string(n);
    first = false;
  }
  return s + "}";
}

void enumerate_params(const std::vector<ParamRange>& params, std::size_t index, Bindings& vars, int n_max,
                      const std::function<void(const Bindings&)>& visit) {
  if (index == params.size()) {
    visit(vars);
    return;
  }
  const auto& p = params[index];
  const Int lo = eval_expr(p.lo, vars);
  const Int hi = p.hi.empty() ? std::max<Int>(lo, n_max) : eval_expr(p.hi, vars);
  for (Int x = lo; x <= hi; ++x) {
    vars[p.name] = x;
    enumerate_params(params, index + 1, vars, n_max, visit);
  }
  vars.erase(p.name);
}

}  // namespace

std::string table_id_string(TableId id) {
  switch (id) {
    case TableId::Subregular: return "sous-reguliers";
    case TableId::Subsubregular: return "sous-sous";
    case TableId::RankTwo: return "rang2";
  }
  return "";
}

TableId parse_table_id(const std::string& text) {
  for (auto id : all_tables())
    if (table_id_string(id) == text) return id;
  throw InvalidArgument("unknown table id '" + text + "' (expected sous-reguliers, sous-sous or rang2)");
}

std::vector<TableId> all_tables() { return {TableId::Subregular, TableId::Subsubregular, TableId::RankTwo}; }

std::vector<int> row_ranks(const RowTemplate& row) {
  std::vector<int> ranks;
  for (int l = row.rank_lo; l <= row.rank_hi; ++l) {
    if (!row.rank_when.empty() && !eval_expr(row.rank_when, {{"l", l}})) continue;
    ranks.push_back(l);
  }
  return ranks;
}

std::vector<Int> row_levels(const RowTemplate& row, int rank) {
  const Bindings vars{{"l", rank}};
  std::vector<Int> levels;
  for (Int k = eval_expr(row.level_hi, vars); k >= eval_expr(row.level_lo, vars); --k) levels.push_back(k);
  return levels;
}

GroupLabel row_group(const RowTemplate& row, int rank, Int kappa) {
  const Bindings vars{{"l", rank}, {"k", kappa}};
  for (const auto& rule : row.groups)
    if (rule.when.empty() || eval_expr(rule.when, vars)) return GroupLabel::parse(substitute(rule.group, vars));
  throw InvalidArgument("no group rule applies to " + row.name);
}

RootDatumPtr Instance::datum() const { return root_datum(type_name(row->family, rank)); }

WeylElement Instance::element() const { return WeylElement::from_word(datum(), word); }

std::string Instance::id() const {
  std::ostringstream out;
  out << table_id_string(row->table) << "/" << type_name(row->family, rank) << "/k=" << kappa << "/chi=" << chi_text;
  if (!entry->params.empty()) {
    out << "[";
    bool first = true;
    for (const auto& p : entry->params) {
      out << (first ? "" : ",") << p.name << "=" << vars.at(p.name);
      first = false;
    }
    out << "]";
  }
  return out.str();
}

std::vector<Instance> instantiate(const RowTemplate& row, int rank, Int kappa, int n_max) {
  const auto levels = row_levels(row, rank);
  const auto pos = std::find(levels.begin(), levels.end(), kappa);
  if (pos == levels.end())
    throw InvalidArgument("level " + std::to_string(kappa) + " is not tabulated in row " + row.name);
  const std::size_t level_index = static_cast<std::size_t>(pos - levels.begin());
  const GroupLabel group = row_group(row, rank, kappa);
  const auto rd = root_datum(type_name(row.family, rank));

  std::vector<Instance> out;
  for (const auto& entry : row.entries) {
    Bindings vars{{"l", rank}, {"k", kappa}};
    enumerate_params(entry.params, 0, vars, n_max, [&](const Bindings& b) {
      Instance inst;
      inst.row = &row;
      inst.entry = &entry;
      inst.level_index = level_index;
      inst.rank = rank;
      inst.kappa = kappa;
      inst.vars = b;
      inst.group = group;
      try {
        inst.chi = canonical(group, parse_irrep(group, expand_chi(entry.chi, b)));
      } catch (const InvalidArgument&) {
        return;  // not an irreducible of this group (e.g. non-dominant for GL2)
      }
      inst.chi_text = irrep_name(group, inst.chi);
      inst.trivial = inst.chi == trivial_irrep(group);
      inst.word = expand_word(entry.word, b);

      const auto pick = [&](const std::vector<std::string>& labels) {
        AffineWeight w;
        w.finite = expand_label(labels.size() == 1 ? labels[0] : labels.at(level_index), rank, b);
        w.level = kappa;
        return w;
      };
      const bool variant = !entry.variant_when.empty() && eval_expr(entry.variant_when, b);
      inst.transcribed = pick(variant ? entry.variant_labels : entry.labels);
      inst.expected = inst.transcribed;
      for (const auto& e : entry.errata) {
        if (e.when.empty() || eval_expr(e.when, b)) {
          inst.expected = pick(e.labels);
          if (!inst.expected.same_label(inst.transcribed)) inst.erratum = &e;
          break;
        }
      }
      if (level_index < entry.z_override.size() && !entry.z_override[level_index].empty())
        inst.z_override = expand_word(entry.z_override[level_index], b);
      out.push_back(std::move(inst));
    });
  }
  (void)rd;
  return out;
}

bool center_class_matches(const WeylElement& w, const AffineWeight& label) {
  const auto& rd = w.datum();
  const int l = rd.rank;
  std::vector<Rational> rhs(l);
  for (int i = 0; i < l; ++i) rhs[i] = label.finite[i];
  const int j = w.omega_label();
  if (j > 0) rhs[j - 1] -= label.level;
  // Solve cartan x = rhs; the class matches iff x is integral.
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l + 1));
  for (int r = 0; r < l; ++r) {
    for (int c = 0; c < l; ++c) m[r][c] = rd.cartan(r, c);
    m[r][l] = rhs[r];
  }
  for (int c = 0; c < l; ++c) {
    int pivot = c;
    while (m[pivot][c].numerator() == 0) ++pivot;
    std::swap(m[pivot], m[c]);
    for (int r = 0; r < l; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (int k = c; k <= l; ++k) m[r][k] -= f * m[c][k];
    }
  }
  for (int r = 0; r < l; ++r)
    if ((m[r][l] / m[r][r]).denominator() != 1) return false;
  return true;
}

AffineWeight computed_label(const Instance& inst) {
  const auto rd = inst.datum();
  const auto& lv = level_data(rd, inst.kappa);
  if (inst.z_override) return dot_action(WeylElement::from_word(rd, *inst.z_override), lv.kappa_plus);
  if (inst.trivial && inst.row->table != TableId::RankTwo)
    return dot_action(lv.v.inverse() * product_of(rd, lv.sing), lv.kappa_plus);
  return dot_action(inst.element(), level_weight(*rd, inst.kappa));
}

std::vector<CheckResult> verify_instance(const Instance& inst) {
  std::vector<CheckResult> out;
  const auto id = check_row_id(inst);
  const auto rd = inst.datum();
  const auto& lv = level_data(rd, inst.kappa);
  const WeylElement w = inst.element();
  const AffineWeight base = level_weight(*rd, inst.kappa);
  const AffineWeight w_label = dot_action(w, base);

  const AffineWeight label = computed_label(inst);
  out.push_back({id, "label", label.same_label(inst.expected), format_weight(label), format_weight(inst.expected)});

  if (inst.erratum) {
    // Recorded, not failed: the transcribed value is kept next to the correction.
    out.push_back({id, "erratum", true, format_weight(inst.expected),
                   format_weight(inst.transcribed) + " as transcribed (center class " +
                       (center_class_matches(w, inst.transcribed) ? "consistent" : "violated") + "); " +
                       inst.erratum->reason});
  }
  out.push_back({id, "center-class", center_class_matches(w, label), format_weight(label),
                 "kappa times the class of the length-zero part"});

  const bool dominant = std::all_of(label.finite.begin(), label.finite.end(), [](Int c) { return c >= 0; });
  out.push_back({id, "dominant", dominant, format_weight(label), "finite part >= 0"});

  const bool duflo = inst.trivial && inst.row->table != TableId::RankTwo;
  WeylElement z(rd);
  if (inst.z_override) {
    z = WeylElement::from_word(rd, *inst.z_override);
  } else if (duflo) {
    z = lv.v.inverse() * product_of(rd, lv.sing);
    const auto back = dot_action(z, lv.kappa_plus);
    out.push_back({id, "duflo", back == base, format_weight(back), format_weight(base)});
  } else {
    z = w * lv.v.inverse();
    const auto moved = dot_action(z, lv.kappa_plus);
    out.push_back({id, "transport", moved == w_label, format_weight(moved), format_weight(w_label)});
  }

  const bool z_ok = is_left_spherical(z) && ends_with_all(z, lv.sing);
  out.push_back({id, "z-shape", z_ok, z.to_string(), "left spherical, right descents contain " + format_set(lv.sing)});

  if (inst.row->table != TableId::RankTwo) {
    out.push_back({id, "fully-commutative", is_fully_commutative(w), w.to_string(), "fully commutative"});
  }
  const bool spherical = is_left_spherical(w) && is_right_spherical(w);
  const auto d = w.descents();
  out.push_back({id, "spherical", spherical, "left " + format_set(d.left) + " right " + format_set(d.right),
                 "no finite descents"});
  return out;
}

std::vector<CheckResult> verify_table(TableId id, int n_max) {
  std::vector<CheckResult> out;
  for (const auto& row : table_rows(id)) {
    for (int rank : row_ranks(row)) {
      for (Int kappa : row_levels(row, rank)) {
        const auto instances = instantiate(row, rank, kappa, n_max);
        std::map<IrrepLabel, const Instance*> seen;
        for (const auto& inst : instances) {
          auto checks = verify_instance(inst);
          out.insert(out.end(), checks.begin(), checks.end());
          const auto [it, fresh] = seen.emplace(inst.chi, &inst);
          if (!fresh) {
            const bool same = it->second->element() == inst.element();
            out.push_back({inst.id(), "chi-unique", same, inst.element().to_string(),
                           it->second->element().to_string()});
          }
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> verify_level_ranges() {
  std::vector<CheckResult> out;
  for (const auto& row : table_rows(TableId::Subregular)) {
    for (int rank : row_ranks(row)) {
      const auto rd = root_datum(type_name(row.family, rank));
      const auto levels = row_levels(row, rank);
      std::size_t columns = 0;
      for (const auto& e : row.entries) columns = std::max(columns, e.labels.size());
      const bool ok = static_cast<Int>(levels.size()) == rd->d_max_comark &&
                      static_cast<Int>(columns) == rd->d_max_comark && levels.back() == -rd->d_max_comark;
      out.push_back({"level-range/" + rd->name(), "d-max-comark", ok, std::to_string(rd->d_max_comark),
                     std::to_string(levels.size()) + " levels"});
    }
  }
  return out;
}

std::vector<CheckResult> verify_singleton_sing() {
  std::vector<CheckResult> out;
  std::set<std::string> done;
  for (const auto& row : table_rows(TableId::Subregular)) {
    for (int rank : row_ranks(row)) {
      const auto rd = root_datum(type_name(row.family, rank));
      for (Int kappa : row_levels(row, rank)) {
        const auto key = rd->name() + "/" + std::to_string(kappa);
        if (!done.insert(key).second) continue;
        const auto& lv = level_data(rd, kappa);
        const auto nodes = nodes_of(lv.sing);
        const std::string id = "sing/" + key;
        out.push_back({id, "singleton", nodes.size() == 1, format_set(lv.sing), "one node"});
        if (nodes.size() != 1) continue;

        // Breadth-first over rigid elements with left descent t, extended on
        // the right; the first length with s_0 as a right descent decides.
        const int t = nodes[0];
        const WeylElement tv = lv.v.generator_times(t);
        std::vector<WeylElement> layer{WeylElement::generator(rd, t)};
        std::vector<WeylElement> found;
        for (int len = 1; len <= 64 && found.empty() && !layer.empty(); ++len) {
          for (const auto& x : layer)
            if (contains(x.right_descents(), 0)) found.push_back(x);
          if (!found.empty()) break;
          std::vector<WeylElement> next;
          for (const auto& x : layer) {
            for (int j = 0; j <= rd->rank; ++j) {
              if (contains(x.right_descents(), j)) continue;
              auto y = x.times_generator(j);
              if (!is_rigid(y)) continue;
              if (std::find(next.begin(), next.end(), y) == next.end()) next.push_back(std::move(y));
            }
          }
          layer = std::move(next);
        }
        const bool ok = found.size() == 1 && found[0] == tv;
        out.push_back({id, "tv-shortest-rigid", ok, found.empty() ? "none" : found[0].to_string(), tv.to_string()});
      }
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    arr.push_back({{"row", r.row},
                   {"check", r.check},
                   {"status", r.pass ? "pass" : "fail"},
                   {"computed", r.computed},
                   {"expected", r.expected}});
  }
  return arr.dump(2) + "\n";
}

std::string report_text(const std::vector<CheckResult>& results, bool failures_only) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    if (failures_only && r.pass) continue;
    out << (r.pass ? "PASS " : "FAIL ") << r.row << " " << r.check << ": " << r.computed;
    if (!r.pass) out << " (expected " << r.expected << ")";
    out << "\n";
  }
  out << results.size() << " checks, " << failed << " failed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Emission

std::vector<TableRecord> table_records(TableId id, int n_max) {
  std::vector<TableRecord> out;
  for (const auto& row : table_rows(id)) {
    for (int rank : row_ranks(row)) {
      for (Int kappa : row_levels(row, rank)) {
        for (const auto& inst : instantiate(row, rank, kappa, n_max)) {
          out.push_back({std::string(1, static_cast<char>(row.family)), rank, kappa, inst.chi_text,
                         format_word(inst.word), format_weight(computed_label(inst))});
        }
      }
    }
  }
  return out;
}

namespace {

const char* kTsvHeader = "type\trank\tkappa\tchi\tword\tlabel";

// "w1+3*w6@-5" <-> "L_{-5}(\Lambda_{1}+3\Lambda_{6})".
std::string label_to_tex(const std::string& label) {
  const auto at = label.rfind('@');
  const std::string level = label.substr(at + 1);
  const std::string body = label.substr(0, at);
  std::string out = "$L_{" + level + "}";
  if (body != "0") {
    static const std::regex term(R"(([+-]?)(?:(\d+)\*)?w(\d+))");
    out += "(";
    for (auto it = std::sregex_iterator(body.begin(), body.end(), term); it != std::sregex_iterator(); ++it) {
      out += (*it)[1].str() + (*it)[2].str() + "\\Lambda_{" + (*it)[3].str() + "}";
    }
    out += ")";
  }
  return out + "$";
}

std::string label_from_tex(const std::string& tex) {
  static const std::regex whole(R"(^\$L_\{(-?\d+)\}(?:\((.*)\))?\$$)");
  std::smatch m;
  if (!std::regex_match(tex, m, whole)) throw InvalidArgument("malformed TeX label '" + tex + "'");
  std::string body = m[2].matched ? m[2].str() : "";
  if (body.empty()) return "0@" + m[1].str();
  static const std::regex term(R"(([+-]?)(\d*)\\Lambda_\{(\d+)\})");
  std::string out;
  for (auto it = std::sregex_iterator(body.begin(), body.end(), term); it != std::sregex_iterator(); ++it) {
    out += (*it)[1].str() + ((*it)[2].length() ? (*it)[2].str() + "*" : "") + "w" + (*it)[3].str();
  }
  return out + "@" + m[1].str();
}

std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + sep.size();
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::string unwrap_texttt(const std::string& s) {
  const std::string open = "\\texttt{";
  if (s.rfind(open, 0) != 0 || s.back() != '}') throw InvalidArgument("expected \\texttt{...}, got '" + s + "'");
  return s.substr(open.size(), s.size() - open.size() - 1);
}

}  // namespace

std::string emit_table(TableId id, const std::string& format, int n_max) {
  const auto records = table_records(id, n_max);
  std::ostringstream out;
  if (format == "tsv") {
    out << kTsvHeader << "\n";
    for (const auto& r : records)
      out << r.type << "\t" << r.rank << "\t" << r.kappa << "\t" << r.chi << "\t" << r.word << "\t" << r.label << "\n";
    return out.str();
  }
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table_rows(id)) {
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (int rank : row_ranks(row)) {
        for (Int kappa : row_levels(row, rank)) {
          for (const auto& inst : instantiate(row, rank, kappa, n_max)) {
            entries.push_back({{"type", std::string(1, static_cast<char>(row.family))},
                               {"rank", rank},
                               {"kappa", kappa},
                               {"group", inst.group.to_string()},
                               {"chi", inst.chi_text},
                               {"word", format_word(inst.word)},
                               {"label", format_weight(computed_label(inst))}});
          }
        }
      }
      rows.push_back({{"row", row.name}, {"orbit", row.orbit}, {"entries", entries}});
    }
    nlohmann::ordered_json doc = {{"table", table_id_string(id)}, {"rows", rows}};
    return doc.dump(2) + "\n";
  }
  if (format == "tex") {
    out << "\\begin{tabular}{llllll}\n";
    out << "type & rank & $\\kappa$ & $\\chi$ & $w$ & label \\\\\n\\hline\n";
    for (const auto& r : records) {
      out << r.type << " & " << r.rank << " & " << r.kappa << " & \\texttt{" << r.chi << "} & \\texttt{" << r.word
          << "} & " << label_to_tex(r.label) << " \\\\\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
  }
  throw InvalidArgument("unknown format '" + format + "' (expected tsv, json or tex)");
}

std::vector<TableRecord> parse_table(const std::string& format, const std::string& text) {
  std::vector<TableRecord> out;
  std::istringstream in(text);
  std::string line;
  if (format == "tsv") {
    bool header = true;
    while (std::getline(in, line)) {
      if (header) {
        if (line != kTsvHeader) throw InvalidArgument("bad TSV header '" + line + "'");
        header = false;
        continue;
      }
      if (line.empty()) continue;
      const auto f = split(line, "\t");
      if (f.size() != 6) throw InvalidArgument("TSV line needs 6 fields: '" + line + "'");
      out.push_back({f[0], std::stoi(f[1]), std::stoll(f[2]), f[3], f[4], f[5]});
    }
    return out;
  }
  if (format == "json") {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& row : doc.at("rows"))
      for (const auto& e : row.at("entries"))
        out.push_back({e.at("type").get<std::string>(), e.at("rank").get<int>(), e.at("kappa").get<Int>(),
                       e.at("chi").get<std::string>(), e.at("word").get<std::string>(),
                       e.at("label").get<std::string>()});
    return out;
  }
  if (format == "tex") {
    while (std::getline(in, line)) {
      if (line.rfind("\\", 0) == 0 || line.rfind("type &", 0) == 0 || line.empty()) continue;
      const std::string end = " \\\\";
      if (line.size() < end.size() || line.compare(line.size() - end.size(), end.size(), end) != 0)
        throw InvalidArgument("TeX row must end with \\\\: '" + line + "'");
      const auto f = split(line.substr(0, line.size() - end.size()), " & ");
      if (f.size() != 6) throw InvalidArgument("TeX row needs 6 cells: '" + line + "'");
      out.push_back({trim(f[0]), std::stoi(f[1]), std::stoll(f[2]), unwrap_texttt(trim(f[3])),
                     unwrap_texttt(trim(f[4])), label_from_tex(trim(f[5]))});
    }
    return out;
  }
  throw InvalidArgument("unknown format '" + format + "' (expected tsv, json or tex)");
}

// ---------------------------------------------------------------------------
// Fusion of table modules

const RowTemplate& find_row(TableId id, Family family, int rank, Int kappa) {
  for (const auto& row : table_rows(id)) {
    if (row.family != family || rank < row.rank_lo) continue;
    // Rows named with a generic rank are open-ended; the others are a single type.
    const bool generic = row.name.find("_l") != std::string::npos;
    if (!generic && rank != row.rank_lo) continue;
    if (!row.rank_when.empty() && !eval_expr(row.rank_when, {{"l", rank}})) continue;
    const auto levels = row_levels(row, rank);
    if (std::find(levels.begin(), levels.end(), kappa) != levels.end()) return row;
  }
  throw InvalidArgument("no row of " + table_id_string(id) + " covers " + type_name(family, rank) + " at level " +
                        std::to_string(kappa));
}

ModuleFusion fuse_modules(TableId id, const std::string& type, Int kappa, const std::string& chi1,
                          const std::string& chi2) {
  const auto rd = root_datum(type);
  const auto& row = find_row(id, rd->family, rd->rank, kappa);
  ModuleFusion result;
  result.group = row_group(row, rd->rank, kappa);
  const auto x = parse_irrep(result.group, chi1);
  const auto y = parse_irrep(result.group, chi2);
  result.characters = tensor(result.group, x, y);

  Int reach = 2;
  for (Int c : x.data) reach += 2 * (c < 0 ? -c : c);
  for (Int c : y.data) reach += 2 * (c < 0 ? -c : c);
  std::map<IrrepLabel, AffineWeight> labels;
  for (const auto& inst : instantiate(row, rd->rank, kappa, static_cast<int>(reach)))
    labels.emplace(inst.chi, computed_label(inst));

  std::map<std::vector<Int>, std::pair<AffineWeight, Int>> collected;
  for (const auto& [chi, mult] : result.characters) {
    const auto it = labels.find(chi);
    if (it == labels.end())
      throw InvalidArgument("character " + irrep_name(result.group, chi) + " has no entry in row " + row.name);
    auto& slot = collected[it->second.finite];
    slot.first = it->second;
    slot.second += mult;
  }
  for (auto& [key, value] : collected) result.modules.push_back(value);
  return result;
}

}  // namespace weylcells
