// Transcription of the three result tables.
//
// Word templates use the syntax of expand_word; labels are "coef:index" terms
// (see expand_label). Variables: l = rank, k = level, and the entry
// parameters. Characters are written in the literal syntax of parse_irrep
// after {expr}-free substitution: each ','/'|' separated piece that is a
// closed expression is evaluated.

#include "weylcells/tables.hpp"

namespace weylcells {

namespace {

using P = ParamRange;

// W(m, u, v) = (0 1..m-1 g_l)^u (0 l..m+1 g_1)^v g_m, the word shape of the
// type A sub-subregular rows.
std::string type_a_word(const std::string& m, const std::string& u, const std::string& v) {
  return "(0 [1..(" + m + ")-1]+ g{l})^{" + u + "} (0 [l..(" + m + ")+1]- g1)^{" + v + "} g{" + m + "}";
}

std::vector<RowTemplate> subregular_rows() {
  std::vector<RowTemplate> rows;

  // A_l, l >= 2: centralizer Gm, level -1.
  rows.push_back({TableId::Subregular, "A_l", Family::A, 2, 6, "", "-1", "-1", {{"", "Gm"}}, "subregular",
                  {
                      {"n", "(0 g1)^{n} 0", {P{"n", "0", ""}}, {"n:l"}, "", {}, {}},
                      {"-n", "(0 g{l})^{n} 0", {P{"n", "1", ""}}, {"n:1"}, "", {}, {}},
                  }});
  // A_1: centralizer SL2.
  rows.push_back({TableId::Subregular, "A_1", Family::A, 1, 1, "", "-1", "-1", {{"", "SL2"}}, "subregular",
                  {
                      {"n", "(0 g1)^{n} 0", {P{"n", "0", ""}}, {"n:1"}, "", {}, {}},
                  }});
  // B_l, l >= 3: (Z/2)^2, levels -1, -2. The second column is at level -2.
  rows.push_back({TableId::Subregular, "B_l", Family::B, 3, 6, "", "-1", "-2", {{"", "Klein"}}, "subregular",
                  {
                      {"1", "0", {}, {"0", "0"}, "", {}, {}},
                      {"b", "0 2 1 g1", {}, {"1:3", "0"}, "l==3", {"2:3", "0"}, {}},
                      {"a", "0 [2..l] [l-1..2] 0", {}, {"2*l-3:1", "2*l-5:1"}, "", {}, {}},
                      {"ab", "0 [2..l] [l-1..1] g1", {}, {"2*l-4:1,1:2", "2*l-5:1"}, "", {}, {}},
                  }});
  // C_l, l >= 2: O(2), level -1.
  rows.push_back({TableId::Subregular, "C_l", Family::C, 2, 6, "", "-1", "-1", {{"", "O2"}}, "subregular",
                  {
                      {"n", "(0 [1..l-1] g{l})^{n} 0", {P{"n", "0", ""}}, {"n*l:1"}, "", {}, {}},
                      {"sign", "0 1 0", {}, {"1:2"}, "", {}, {}},
                  }});
  // D_l, l >= 4: Z/4 for odd l, (Z/2)^2 for even l; levels -1, -2.
  // Characters follow the length-zero part: Z/4 generated by gamma_{l-1}.
  rows.push_back({TableId::Subregular, "D_l (l odd)", Family::D, 5, 7, "l%2==1", "-1", "-2", {{"", "Z4"}},
                  "subregular",
                  {
                      {"0", "0", {}, {"0", "0"}, "", {}, {}},
                      {"2", "0 2 1 g1", {}, {"1:3", "0"}, "", {}, {}},
                      {"1", "0 [2..l-2] {l-1} g{l-1}", {}, {"l-3:1,1:l", "l-4:1"}, "", {}, {}},
                      {"3", "0 [2..l-2] {l} g{l}", {}, {"l-3:1,1:l-1", "l-4:1"}, "", {}, {}},
                  }});
  rows.push_back({TableId::Subregular, "D_l (l even)", Family::D, 4, 6, "l%2==0", "-1", "-2", {{"", "Klein"}},
                  "subregular",
                  {
                      {"1", "0", {}, {"0", "0"}, "", {}, {}},
                      {"ab", "0 2 1 g1", {}, {"1:3", "0"}, "l==4", {"1:3,1:4", "0"}, {}},
                      {"a", "0 [2..l-2] {l-1} g{l-1}", {}, {"l-3:1,1:l", "l-4:1"}, "", {}, {}},
                      {"b", "0 [2..l-2] {l} g{l}", {}, {"l-3:1,1:l-1", "l-4:1"}, "", {}, {}},
                  }});
  // E6: Z/3, levels -1..-3.
  rows.push_back({TableId::Subregular, "E_6", Family::E, 6, 6, "", "-1", "-3", {{"", "Z3"}}, "subregular",
                  {
                      {"0", "0", {}, {"0", "0", "0"}, "", {}, {}},
                      {"1", "0 6 3 g1 6 0", {}, {"2:4", "1:4", "0"}, "", {}, {}},
                      {"2", "0 6 3 g5 6 0", {}, {"2:2", "1:2", "0"}, "", {}, {}},
                  }});
  // E7: Z/2, levels -1..-4.
  rows.push_back({TableId::Subregular, "E_7", Family::E, 7, 7, "", "-1", "-4", {{"", "Z2"}}, "subregular",
                  {
                      {"0", "0", {}, {"0", "0", "0", "0"}, "", {}, {}},
                      {"1", "0 [1..6] g6", {}, {"3:7", "2:7", "1:7", "0"}, "", {}, {}},
                  }});
  // E8: trivial centralizer, levels -1..-6.
  rows.push_back({TableId::Subregular, "E_8", Family::E, 8, 8, "", "-1", "-6", {{"", "Z1"}}, "subregular",
                  {
                      {"0", "0", {}, {"0", "0", "0", "0", "0", "0"}, "", {}, {}},
                  }});
  // F4: Z/2, levels -1..-3.
  rows.push_back({TableId::Subregular, "F_4", Family::F, 4, 4, "", "-1", "-3", {{"", "Z2"}}, "subregular",
                  {
                      {"0", "0", {}, {"0", "0", "0"}, "", {}, {}},
                      {"1", "0 1 2 3 2 1 0", {}, {"5:4", "3:4", "1:4"}, "", {}, {}},
                  }});
  // G2: S3, levels -1, -2.
  rows.push_back({TableId::Subregular, "G_2", Family::G, 2, 2, "", "-1", "-2", {{"", "S3"}}, "subregular",
                  {
                      {"1", "0", {}, {"0", "0"}, "", {}, {}},
                      {"sign", "0 1 2 1 0", {}, {"4:2", "1:2"}, "", {}, {}},
                      {"2dim", "0 1 2 1 2 1 0", {}, {"3:1", "1:1"}, "", {}, {}},
                  }});
  return rows;
}

std::vector<RowTemplate> subsubregular_rows() {
  std::vector<RowTemplate> rows;

  // A_l, -(l+1)/2 <= k <= -2. Characters are coordinates on Gm^2 restricted
  // to the kernel of the character (l+1+k, -k).
  rows.push_back(
      {TableId::Subsubregular, "A_l", Family::A, 3, 7, "", "-2", "-((l+1)/2)",
       {{"2*k==-(l+1)", "KerGL2({-k})"}, {"", "Ker({l+1+k},{-k})"}}, "sigma",
       {
           {"-n,0", type_a_word("-k", "n-k", "0"), {P{"n", "0", ""}}, {"n:-k"}, "", {}, {}},
           {"b+np,b", type_a_word("np-k", "-k-b", "b"), {P{"b", "1", "-k-1"}, P{"np", "1", "l+2*k"}},
            {"l+1+2*k-np:b,np:l+1+k+b"}, "", {}, {}},
           {"b-n,b", type_a_word("-k", "n-k-b", "b"), {P{"b", "1", "-k-1"}, P{"n", "0", ""}}, {"l+1+2*k:b,n:-k"},
            "", {}, {}},
           {"n,0", type_a_word("l+1+k", "0", "n-k"), {P{"n", "1", ""}}, {"n:l+1+k"}, "", {}, {}},
           {"b+l+1+2*k+n,b", type_a_word("l+1+k", "-k-b", "b+n"), {P{"b", "1", "-k-1"}, P{"n", "0", ""}},
            {"n:l+1+k,l+1+2*k:l+1+k+b"}, "", {}, {}},
       }});
  // B_l, l >= 5: (Z/2)^2, levels -3, -4. At -4 the second line is attached
  // to a different z (the single exception to the z <-> w rule).
  rows.push_back({TableId::Subsubregular, "B_l", Family::B, 5, 7, "", "-3", "-4", {{"", "Klein"}}, "subsubregular",
                  {
                      {"1", "0 2 1 3 2 0", {}, {"0", "0"}, "", {}, {}},
                      {"a", "0 2 1 [3..l] [l-1..3] 2 0", {}, {"2*l-6:1", "2*l-9:1"}, "", {},
                       {"", "0 2 1 [3..l] [l-1..4] 2"},
                       {{"", {"2*l-7:1", "2*l-9:1"},
                         "the coefficient drops by 2 per level: 2l-3, 2l-5 (subregular), 2l-7, 2l-9"}}},
                      {"b", "0 2 1 3 2 4 0 3 2 1 g1", {}, {"1:5", "0"}, "l==5", {"2:5", "0"}, {}},
                      {"ab", "0 2 1 3 2 [4..l] [l-1..4] 0 3 2 1 g1", {}, {"2*l-8:1,1:4", "2*l-9:1"}, "", {}, {}},
                  }});
  // B_4: O(2), level -3.
  rows.push_back({TableId::Subsubregular, "B_4", Family::B, 4, 4, "", "-3", "-3", {{"", "O2"}}, "subsubregular",
                  {
                      {"n", "(0 2 3 4 g1)^{n} 0 2 1 3 2 0", {P{"n", "0", ""}}, {"2*n:4"}, "", {}, {}},
                      {"sign", "0 2 1 3 4 3 2 0", {}, {"1:1"}, "", {}, {}},
                  }});
  // C_l, -l/2 <= k <= -2: order 8, dihedral if l is even or k is odd.
  rows.push_back({TableId::Subsubregular, "C_l", Family::C, 4, 7, "", "-2", "-(l/2)",
                  {{"l%2==0", "D8"}, {"k%2!=0", "D8"}, {"", "Q8"}}, "sigma",
                  {
                      {"1", "P[i=0..-2*k-2]([i..0])", {}, {"0"}, "", {}, {}},
                      {"a", "P[i=0..-2*k-1]([i..0])", {}, {"1:-2*k"}, "", {}, {}},
                      {"b", "[0..l] [l-1..-2*k-2] P[i=0..-2*k-3]([i..0])", {}, {"2*l+3+3*k:1"}, "", {}, {},
                       {{"", {"2*l+4+4*k:1"},
                         "w has trivial length-zero part, so the label must lie in the root lattice; the printed coefficient is odd for even k"}}},
                      {"ab", "[0..l] [l-1..-2*k-1] P[i=0..-2*k-2]([i..0])", {}, {"2*l+3+4*k:1,1:-2*k-1"}, "", {},
                       {}},
                      {"2dim", "([0..l])^{-k} g{l}", {}, {"l+2+2*k:-k"}, "", {}, {}},
                  }});
  // C_l, l odd, k = -(l+1)/2: O(2) if 4 | l+1, the normalizer of a torus in
  // SL2 otherwise. r = n - l [n/l], Lambda_0 terms are dropped.
  rows.push_back({TableId::Subsubregular, "C_l (l odd)", Family::C, 3, 7, "l%2==1", "-((l+1)/2)", "-((l+1)/2)",
                  {{"(l+1)%4==0", "O2"}, {"", "NSL2Gm"}}, "sigma",
                  {
                      {"2*n", "([0..l])^{n} P[i=0..l-1]([i..0])", {P{"n", "0", ""}}, {"1:n-l*(n/l),n+n/l:l"}, "",
                       {}, {}},
                      {"2*n-l", "([0..l])^{n} g{l}", {P{"n", "(l+1)/2", ""}},
                       {"1:n-l*(n/l),n+n/l-(l+1)/2:l"}, "", {}, {}},
                      {"sign", "[0..l] {l-1} P[i=0..l-2]([i..0])", {}, {"2:1"}, "", {}, {}},
                  }});
  // C_l, l even, k = -l/2 - 1: Z/2 x SL2.
  rows.push_back({TableId::Subsubregular, "C_l (l even)", Family::C, 2, 6, "l%2==0", "-(l/2)-1", "-(l/2)-1",
                  {{"", "Z2xSL2"}}, "sigma",
                  {
                      {"0|n", "([0..l])^{n} P[i=0..l]([i..0])", {P{"n", "0", ""}}, {"n:l"}, "", {}, {}},
                      {"1|n", "([0..l])^{n+l/2+1} g{l}", {P{"n", "0", ""}}, {"n:l"}, "", {}, {}},
                  }});
  // D_l, l >= 6: Z/4 or (Z/2)^2 as in the subregular rows; levels -3, -4.
  rows.push_back({TableId::Subsubregular, "D_l (l odd)", Family::D, 7, 7, "l%2==1", "-3", "-4", {{"", "Z4"}},
                  "subsubregular",
                  {
                      {"0", "0 2 1 3 2 0", {}, {"0", "0"}, "", {}, {}},
                      {"2", "0 2 1 3 2 4 0 3 2 1 g1", {}, {"1:5", "0"}, "", {}, {}},
                      {"1", "0 [2..l-2] {l} 1 [2..l-2] {l-1} g{l-1}", {}, {"l-5:2,1:l-1", "l-6:2"}, "", {}, {}},
                      {"3", "0 [2..l-2] {l-1} 1 [2..l-2] {l} g{l}", {}, {"l-5:2,1:l", "l-6:2"}, "", {}, {}},
                  }});
  rows.push_back({TableId::Subsubregular, "D_l (l even)", Family::D, 6, 8, "l%2==0", "-3", "-4", {{"", "Klein"}},
                  "subsubregular",
                  {
                      {"1", "0 2 1 3 2 0", {}, {"0", "0"}, "", {}, {}},
                      {"ab", "0 2 1 3 2 4 0 3 2 1 g1", {}, {"1:5", "0"}, "", {}, {},
                       {{"l==6", {"1:5,1:6", "0"},
                         "for l = 6 the label must lie in the class of Lambda_1 (w ends with gamma_1)"}}},
                      {"a", "0 [2..l-2] {l} 1 [2..l-2] {l-1} g{l-1}", {}, {"l-5:2,1:l-1", "l-6:2"}, "", {}, {}},
                      {"b", "0 [2..l-2] {l-1} 1 [2..l-2] {l} g{l}", {}, {"l-5:2,1:l", "l-6:2"}, "", {}, {}},
                  }});
  // D5: Gm, level -3.
  rows.push_back({TableId::Subsubregular, "D_5", Family::D, 5, 5, "", "-3", "-3", {{"", "Gm"}}, "subsubregular",
                  {
                      {"n", "0 2 (1 3 g4)^{n} 1 3 2 0", {P{"n", "0", ""}}, {"n:4"}, "", {}, {}},
                      {"-n", "0 2 (1 3 g5)^{n} 1 3 2 0", {P{"n", "1", ""}}, {"n:5"}, "", {}, {}},
                  }});
  // E6: Gm, level -4.
  rows.push_back({TableId::Subsubregular, "E_6", Family::E, 6, 6, "", "-4", "-4", {{"", "Gm"}}, "subsubregular",
                  {
                      {"n", "0 6 3 2 4 3 (g1 1 2 4 3)^{n} 6 0", {P{"n", "0", ""}}, {"2*n:1"}, "", {}, {}},
                      {"-n", "0 6 3 2 4 3 (g5 5 2 4 3)^{n} 6 0", {P{"n", "1", ""}}, {"2*n:5"}, "", {}, {}},
                  }});
  // E7: Z/2, levels -5, -6.
  rows.push_back({TableId::Subsubregular, "E_7", Family::E, 7, 7, "", "-5", "-6", {{"", "Z2"}}, "subsubregular",
                  {
                      {"0", "0 1 2 3 4 7 3 2 1 0", {}, {"0", "0"}, "", {}, {}},
                      {"1", "0 1 2 3 4 7 3 5 2 4 1 3 2 7 3 4 5 6 g6", {}, {"1:1,3:6", "2:6"}, "", {}, {}},
                  }});
  // E8: trivial centralizer, levels -7..-10.
  rows.push_back({TableId::Subsubregular, "E_8", Family::E, 8, 8, "", "-7", "-10", {{"", "Z1"}}, "subsubregular",
                  {
                      {"0", "0 1 2 3 4 5 6 8 5 4 3 2 1 0", {}, {"0", "0", "0", "0"}, "", {}, {}},
                  }});
  // F4: Z/2, level -4.
  rows.push_back({TableId::Subsubregular, "F_4", Family::F, 4, 4, "", "-4", "-4", {{"", "Z2"}}, "subsubregular",
                  {
                      {"0", "0 1 2 3 2 4 3 2 1 0", {}, {"0"}, "", {}, {}},
                      {"1", "0 1 2 3 2 4 1 3 0 2 1 3 2 4 3 2 1 0", {}, {"4:4"}, "", {}, {}},
                  }});
  return rows;
}

std::vector<RowTemplate> rank_two_rows() {
  std::vector<RowTemplate> rows;
  // A2, zero orbit: SL3, level -2.
  rows.push_back({TableId::RankTwo, "A_2", Family::A, 2, 2, "", "-2", "-2", {{"", "SL3"}}, "zero",
                  {
                      {"m,n", "(0 1 g2)^{n+1} (0 2 g1)^{m+1} 0", {P{"m", "0", ""}, P{"n", "0", ""}}, {"m:1,n:2"}, "",
                       {}, {}},
                  }});
  // G2, minimal orbit: SL2, level -3.
  rows.push_back({TableId::RankTwo, "G_2", Family::G, 2, 2, "", "-3", "-3", {{"", "SL2"}}, "minimal",
                  {
                      {"n", "0 1 2 1 2 0 1 0 (2 1 0)^{n} 2 1 2 1 0", {P{"n", "0", ""}}, {"n:1,n%2:2"}, "", {}, {},
                       {{"n>0", {"n/2:1,n%2:2"}, "the computed labels follow the printed parity rule with n replaced by [n/2]"}}},
                  }});
  return rows;
}

}  // namespace

const std::vector<RowTemplate>& table_rows(TableId id) {
  static const std::vector<RowTemplate> sub = subregular_rows();
  static const std::vector<RowTemplate> subsub = subsubregular_rows();
  static const std::vector<RowTemplate> rank2 = rank_two_rows();
  switch (id) {
    case TableId::Subregular: return sub;
    case TableId::Subsubregular: return subsub;
    case TableId::RankTwo: return rank2;
  }
  throw InvalidArgument("unknown table");
}

}  // namespace weylcells
