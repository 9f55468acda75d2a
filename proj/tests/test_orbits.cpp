#include "doctest.h"
#include "oracles.hpp"
#include "weylcells/orbits.hpp"
#include "weylcells/tables.hpp"

using namespace weylcells;

namespace {

std::vector<Partition> all_partitions(const Ambient& ambient) {
  std::vector<Partition> out;
  for (const auto& p : oracle::partitions(ambient.n)) out.push_back(Partition{p, ambient});
  return out;
}

std::vector<Ambient> ambients(int max_n) {
  std::vector<Ambient> out;
  for (int n = 1; n <= max_n; ++n) {
    out.push_back({Ambient::Kind::GL, n});
    out.push_back({Ambient::Kind::SO, n});
    if (n % 2 == 0) out.push_back({Ambient::Kind::SP, n});
  }
  return out;
}

bool oracle_valid(const Partition& p) {
  switch (p.ambient.kind) {
    case Ambient::Kind::GL: return true;
    case Ambient::Kind::SO: return oracle::valid_bc(p.parts, 0);
    case Ambient::Kind::SP: return oracle::valid_bc(p.parts, 1);
  }
  return false;
}

}  // namespace

TEST_CASE("validity against parity rule") {
  for (const auto& a : ambients(12)) {
    std::size_t count = 0;
    for (const auto& p : all_partitions(a)) {
      CHECK(is_valid(p) == oracle_valid(p));
      count += oracle_valid(p);
    }
    CHECK(valid_partitions(a).size() == count);
  }
}

TEST_CASE("collapse is the largest valid partition below") {
  for (const auto& a : ambients(12)) {
    if (a.kind == Ambient::Kind::GL) continue;
    CAPTURE(a.to_string());
    const auto all = all_partitions(a);
    for (const auto& p : all) {
      const auto c = collapse(p);
      CHECK(is_valid(c));
      CHECK(oracle::dominated(c.parts, p.parts));
      for (const auto& q : all)
        if (oracle_valid(q) && oracle::dominated(q.parts, p.parts)) CHECK(oracle::dominated(q.parts, c.parts));
      CHECK(collapse(c) == c);
      if (is_valid(p)) CHECK(c == p);
    }
    for (const auto& p : all)
      for (const auto& q : all)
        if (oracle::dominated(p.parts, q.parts)) CHECK(closure_leq(collapse(p), collapse(q)));
  }
}

TEST_CASE("closure order is a partial order on valid partitions") {
  for (const auto& a : ambients(12)) {
    CAPTURE(a.to_string());
    const auto valid = valid_partitions(a);
    for (const auto& p : valid) {
      CHECK(closure_leq(p, p));
      for (const auto& q : valid) {
        const bool pq = closure_leq(p, q);
        CHECK(pq == oracle::dominated(p.parts, q.parts));
        if (pq && closure_leq(q, p)) CHECK(p == q);
      }
    }
    // transitivity
    for (std::size_t i = 0; i < valid.size(); ++i)
      for (std::size_t j = 0; j < valid.size(); ++j)
        for (std::size_t k = 0; k < valid.size(); ++k)
          if (closure_leq(valid[i], valid[j]) && closure_leq(valid[j], valid[k])) CHECK(closure_leq(valid[i], valid[k]));
  }
  CHECK_THROWS_AS(closure_leq(Partition::parse("3@gl3"), Partition::parse("3@so3")), InvalidArgument);
}

TEST_CASE("duality reverses order and swaps regular and zero") {
  for (const auto& a : ambients(11)) {
    CAPTURE(a.to_string());
    const auto valid = valid_partitions(a);
    for (const auto& p : valid) {
      const auto d = ls_dual(p);
      CHECK(is_valid(d));
      for (const auto& q : valid)
        if (closure_leq(p, q)) CHECK(closure_leq(ls_dual(q), d));
    }
  }
  CHECK(ls_dual(Partition::parse("7@so7")).to_string() == "1,1,1,1,1,1@sp6");
  CHECK(ls_dual(Partition::parse("1,1,1,1,1,1,1@so7")).to_string() == "6@sp6");
  CHECK(ls_dual(Partition::parse("3,3,1@so7")).to_string() == "2,2,2@sp6");
  CHECK(ls_dual(Partition::parse("4,1@gl5")).to_string() == "2,1,1,1@gl5");
  CHECK(ls_dual(Partition::parse("6@sp6")).to_string() == "1,1,1,1,1,1,1@so7");
}

TEST_CASE("weighted Dynkin diagrams") {
  // gl(n): eigenvalues of h from each Jordan block, sorted, consecutive differences
  for (int n = 1; n <= 8; ++n)
    for (const auto& parts : oracle::partitions(n)) {
      std::vector<int> eig;
      for (int d : parts)
        for (int j = d - 1; j >= 1 - d; j -= 2) eig.push_back(j);
      std::sort(eig.rbegin(), eig.rend());
      std::vector<int> expected;
      for (int i = 0; i + 1 < n; ++i) expected.push_back(eig[i] - eig[i + 1]);
      CHECK(weighted_dynkin(Partition{parts, {Ambient::Kind::GL, n}}) == expected);
    }
  for (int n = 2; n <= 8; ++n) CHECK(weighted_dynkin(Partition{{n}, {Ambient::Kind::GL, n}}) == std::vector<int>(n - 1, 2));
  CHECK(weighted_dynkin(Partition::parse("7@so7")) == std::vector<int>{2, 2, 2});
  CHECK(weighted_dynkin(Partition::parse("6@sp6")) == std::vector<int>{2, 2, 2});
  CHECK(weighted_dynkin(Partition::parse("3,3,1@so7")) == std::vector<int>{0, 2, 0});
  CHECK(weighted_dynkin(Partition::parse("1,1,1,1,1@so5")) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(weighted_dynkin(Partition::parse("4,2,1@so7")), InvalidArgument);
}

TEST_CASE("named orbits") {
  CHECK(named_orbit(OrbitName::Regular, Ambient::parse("sp8")).to_string() == "8@sp8");
  CHECK(named_orbit(OrbitName::Subregular, Ambient::parse("sp8")).to_string() == "6,2@sp8");
  CHECK(named_orbit(OrbitName::Subregular, Ambient::parse("so9")).to_string() == "7,1,1@so9");
  CHECK(named_orbit(OrbitName::Zero, Ambient::parse("gl4")).to_string() == "1,1,1,1@gl4");
  CHECK(named_orbit(OrbitName::Minimal, Ambient::parse("gl4")).to_string() == "2,1,1@gl4");
  CHECK(dual_ambient(Family::B, 4) == Ambient::parse("sp8"));
  CHECK(dual_ambient(Family::C, 4) == Ambient::parse("so9"));
  CHECK(dual_ambient(Family::D, 5) == Ambient::parse("so10"));
  CHECK(dual_ambient(Family::A, 3) == Ambient::parse("gl4"));
}

TEST_CASE("sigma partitions of every tabulated classical row are valid") {
  std::size_t checked = 0;
  for (const auto& row : table_rows(TableId::Subsubregular)) {
    if (row.family != Family::B && row.family != Family::C) continue;
    for (int l : row_ranks(row))
      for (Int k : row_levels(row, l)) {
        CAPTURE(row.name);
        CAPTURE(l);
        CAPTURE(k);
        const auto p = sigma_partition(row.family, l, static_cast<int>(k));
        CHECK(is_valid(p));
        CHECK(p.ambient == dual_ambient(row.family, l));
        CHECK(p.size() == (row.family == Family::B ? 2 * l : 2 * l + 1));
        ++checked;
      }
  }
  CHECK(checked > 10);
  CHECK_THROWS_AS(sigma_partition(Family::B, 5, -9), InvalidArgument);
}

TEST_CASE("partition literals") {
  CHECK(Partition::parse("1,4,2@so7").to_string() == "4,2,1@so7");
  CHECK_THROWS_AS(Partition::parse("4,2@so7"), InvalidArgument);
  CHECK_THROWS_AS(Partition::parse("4,2,1"), InvalidArgument);
  CHECK_THROWS_AS(Ambient::parse("sp7"), InvalidArgument);
}
