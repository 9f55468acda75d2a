#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylcells/affine_weyl.hpp"
#include "weylcells/fusion.hpp"
#include "weylcells/templates.hpp"
#include "weylcells/weights.hpp"

namespace weylcells {

enum class TableId { Subregular, Subsubregular, RankTwo };

/// "sous-reguliers", "sous-sous", "rang2".
std::string table_id_string(TableId id);
TableId parse_table_id(const std::string& text);
std::vector<TableId> all_tables();

/// Parameter of an entry, ranging over [lo, hi]; an empty `hi` means
/// max(lo, n_max). Bounds are expressions in l, k and the
/// parameters declared before.
struct ParamRange {
  std::string name;
  std::string lo;
  std::string hi;
};

/// A transcribed label that the computation contradicts, with the corrected
/// value and the reason.
struct Erratum {
  std::string when;                 // expression in l; "" always applies
  std::vector<std::string> labels;  // same layout as EntryTemplate::labels
  std::string reason;
};

/// One line of a table: character, word and module labels, all templates.
struct EntryTemplate {
  std::string chi;   // pieces joined by ',' / '|'; a piece is an expression or a literal name
  std::string word;  // see expand_word
  std::vector<ParamRange> params;
  /// One label template per level of the row, or a single template in k.
  std::vector<std::string> labels;
  /// Alternative labels when `variant_when` holds (e.g. "l==3").
  std::string variant_when;
  std::vector<std::string> variant_labels;
  /// Per level: a word template for z replacing z = w v^{-1}, or "".
  std::vector<std::string> z_override;
  std::vector<Erratum> errata{};
};

struct GroupRule {
  std::string when;  // expression in l, k; "" always applies
  std::string group; // GroupLabel text with {expr} substitutions
};

struct RowTemplate {
  TableId table = TableId::Subregular;
  std::string name;  // display name, e.g. "B_l", "B_4", "C_l (l odd)"
  Family family = Family::A;
  int rank_lo = 1;
  int rank_hi = 1;
  std::string rank_when;  // extra filter on l
  std::string level_hi;   // levels run from level_hi down to level_lo
  std::string level_lo;
  std::vector<GroupRule> groups;
  std::string orbit;
  std::vector<EntryTemplate> entries;
};

const std::vector<RowTemplate>& table_rows(TableId id);

/// Ranks at which a row is instantiated (rank_lo..rank_hi filtered).
std::vector<int> row_ranks(const RowTemplate& row);
std::vector<Int> row_levels(const RowTemplate& row, int rank);
GroupLabel row_group(const RowTemplate& row, int rank, Int kappa);

/// A fully instantiated entry at one rank and level.
struct Instance {
  const RowTemplate* row = nullptr;
  const EntryTemplate* entry = nullptr;
  std::size_t level_index = 0;
  int rank = 0;
  Int kappa = 0;
  Bindings vars;
  GroupLabel group;
  IrrepLabel chi;
  std::string chi_text;
  Word word;
  std::optional<Word> z_override;
  AffineWeight expected;     // delta is not tabulated; errata applied
  AffineWeight transcribed;  // as printed
  const Erratum* erratum = nullptr;
  bool trivial = false;

  RootDatumPtr datum() const;
  WeylElement element() const;
  /// "sous-reguliers/G2/k=-1/chi=sign[n=2]".
  std::string id() const;
};

/// Every entry of a row at (rank, kappa), parameters up to n_max. Characters
/// that are not irreducibles of the group (non-dominant GL2 weights) are
/// skipped.
std::vector<Instance> instantiate(const RowTemplate& row, int rank, Int kappa, int n_max);

struct CheckResult {
  std::string row;
  std::string check;
  bool pass = false;
  std::string computed;
  std::string expected;
};

/// Label computed from the tables' rule: Duflo z for the trivial character,
/// the override z where given, w.(kappa Lambda_0) otherwise.
AffineWeight computed_label(const Instance& inst);

/// lambda - kappa Lambda_j lies in the root lattice, gamma_j being the
/// length-zero part of w: the class that every w.(kappa Lambda_0) must have.
bool center_class_matches(const WeylElement& w, const AffineWeight& label);

std::vector<CheckResult> verify_instance(const Instance& inst);
/// All rows of a table at every instantiated rank and level. Adds a
/// character-uniqueness check per (rank, kappa).
std::vector<CheckResult> verify_table(TableId id, int n_max);
/// d_max_comark per type against the number of Table 1 level columns.
std::vector<CheckResult> verify_level_ranges();
/// |Sing(kappa+)| = 1 at every Table 1 level, and t v is the shortest rigid
/// element starting with t and ending with s_0.
std::vector<CheckResult> verify_singleton_sing();

bool all_pass(const std::vector<CheckResult>& results);
/// JSON array of {row, check, status, computed, expected}.
std::string report_json(const std::vector<CheckResult>& results);
std::string report_text(const std::vector<CheckResult>& results, bool failures_only);

/// One emitted line: an instantiated entry with its computed label.
struct TableRecord {
  std::string type;  // family letter
  int rank = 0;
  Int kappa = 0;
  std::string chi;
  std::string word;
  std::string label;
  friend bool operator==(const TableRecord&, const TableRecord&) = default;
};

std::vector<TableRecord> table_records(TableId id, int n_max = 2);
/// format: "tsv", "json" or "tex". Byte-stable.
std::string emit_table(TableId id, const std::string& format, int n_max = 2);
/// Inverse of emit_table for any of the three formats.
std::vector<TableRecord> parse_table(const std::string& format, const std::string& text);

/// The row of a table covering a type and level; throws if none.
const RowTemplate& find_row(TableId id, Family family, int rank, Int kappa);

struct ModuleFusion {
  GroupLabel group;
  IrrepMultiset characters;
  std::vector<std::pair<AffineWeight, Int>> modules;  // sorted, with multiplicity
};

/// Fusion of the modules attached to chi1, chi2 in a row: tensor the
/// characters and map every constituent back through the row's verified
/// character-to-label map.
ModuleFusion fuse_modules(TableId id, const std::string& type, Int kappa, const std::string& chi1,
                          const std::string& chi2);

}  // namespace weylcells
