#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "weylcells/affine_weyl.hpp"

using namespace weylcells;

namespace {

const std::vector<std::pair<std::string, int>> kBalls = {{"A1", 8}, {"A2", 6}, {"B3", 5}, {"C2", 7},
                                                         {"D4", 4}, {"G2", 7}, {"F4", 4}, {"E6", 3}};

}  // namespace

TEST_CASE("length equals Cayley graph distance") {
  for (const auto& [type, radius] : kBalls) {
    CAPTURE(type);
    const auto ball = oracle::cayley_ball(root_datum(type), radius);
    for (std::size_t i = 0; i < ball.elements.size(); ++i) CHECK(ball.elements[i].length() == ball.depth[i]);
  }
}

TEST_CASE("right multiplication changes length by exactly one") {
  for (const auto& [type, radius] : kBalls) {
    CAPTURE(type);
    const auto rd = root_datum(type);
    for (const auto& w : oracle::cayley_ball(rd, radius).elements)
      for (int s = 0; s <= rd->rank; ++s) {
        const int d = w.times_generator(s).length() - w.length();
        CHECK((d == 1 || d == -1));
        CHECK(contains(w.right_descents(), s) == (d == -1));
        CHECK(contains(w.left_descents(), s) == (w.generator_times(s).length() < w.length()));
      }
  }
}

TEST_CASE("canonical reduced word") {
  for (const auto& [type, radius] : kBalls) {
    CAPTURE(type);
    const auto rd = root_datum(type);
    for (const auto& w : oracle::cayley_ball(rd, radius).elements) {
      const auto word = w.reduced_word();
      CHECK(reflection_count(word) == w.length());
      CHECK(WeylElement::from_word(rd, word) == w);
      CHECK(WeylElement::from_word(rd, w.to_string()) == w);
      CHECK(parse_word(format_word(word)) == word);
      CHECK((w * w.inverse()).is_identity());
      CHECK(w.inverse().length() == w.length());
    }
  }
}

TEST_CASE("word syntax") {
  const auto rd = root_datum("G2");
  CHECK(parse_word("0.1.2.1.0") == parse_word("01210"));
  CHECK(WeylElement::from_word(rd, "e").is_identity());
  CHECK(WeylElement::from_word(rd, "0.0").is_identity());
  CHECK(WeylElement::from_word(rd, "0.1.2.1.0").length() == 5);
  const auto d = root_datum("D5");
  // Omega(D5) is cyclic of order 4, generated by gamma_4; gamma_1 is its square
  const auto g = WeylElement::from_word(d, "g4");
  CHECK(g.length() == 0);
  CHECK(!g.is_identity());
  CHECK((g * g).omega_label() == 1);
  CHECK((g * g * g * g).is_identity());
  CHECK(WeylElement::from_word(d, "g1.g1").is_identity());
  const auto a10 = root_datum("A10");
  CHECK(WeylElement::from_word(a10, "10.9.10").length() == 3);
  CHECK_THROWS_AS(WeylElement::from_word(rd, "0.3"), InvalidArgument);
  CHECK_THROWS_AS(parse_word("0.x"), InvalidArgument);
}

TEST_CASE("Omega conjugation preserves length and rigidity") {
  for (const std::string type : {"A3", "B3", "C3", "D4", "D5", "E6", "E7"}) {
    CAPTURE(type);
    const auto rd = root_datum(type);
    const auto ball = oracle::cayley_ball(rd, 4);
    for (const auto& og : rd->omega.elements) {
      if (og.label == 0) continue;
      const auto g = WeylElement::omega(rd, og.label);
      for (const auto& w : ball.elements) {
        const auto c = g * w * g.inverse();
        CHECK(c.length() == w.length());
        CHECK(is_rigid(c) == is_rigid(w));
      }
    }
  }
}

TEST_CASE("Bruhat order against the subword oracle") {
  for (const std::string type : {"G2", "A2", "C2"}) {
    CAPTURE(type);
    const auto rd = root_datum(type);
    const auto ball = oracle::cayley_ball(rd, 6).elements;
    for (const auto& y : ball) {
      const auto interval = oracle::subword_interval(y);
      const auto lib = bruhat_interval(y);
      CHECK(std::unordered_set<WeylElement, WeylElementHash>(lib.begin(), lib.end()) == interval);
      for (const auto& x : ball) CHECK(bruhat_leq(x, y) == (interval.count(x) > 0));
    }
  }
}

TEST_CASE("Bruhat antisymmetry and equal-length comparability in affine G2") {
  const auto ball = oracle::cayley_ball(root_datum("G2"), 6).elements;
  for (const auto& x : ball)
    for (const auto& y : ball) {
      if (bruhat_leq(x, y) && bruhat_leq(y, x)) CHECK(x == y);
      if (bruhat_leq(x, y) && x.length() == y.length()) CHECK(x == y);
    }
}

TEST_CASE("Bruhat order separates Omega components") {
  const auto rd = root_datum("A2");
  const auto g = WeylElement::from_word(rd, "g1");
  const auto w = WeylElement::from_word(rd, "0.1.2");
  CHECK(!bruhat_leq(g, w));
  CHECK(bruhat_leq(g, w * g));
  CHECK(bruhat_leq(WeylElement::from_word(rd, "0.g1"), w * g));
}

TEST_CASE("reduced word counts and rigidity against enumeration") {
  for (const auto& [type, radius] : std::vector<std::pair<std::string, int>>{{"G2", 7}, {"B3", 5}, {"A3", 5}}) {
    CAPTURE(type);
    for (const auto& w : oracle::cayley_ball(root_datum(type), radius).elements) {
      const auto words = oracle::reduced_words(w);
      CHECK(count_reduced_words(w) == words.size());
      CHECK(is_rigid(w) == (words.size() == 1));
    }
  }
}

TEST_CASE("enumerate_rigid matches a filtered ball") {
  const auto rd = root_datum("A2");
  const auto rigid = enumerate_rigid(rd, 6);
  std::size_t expected = 0;
  for (const auto& w : oracle::cayley_ball(rd, 6).elements) expected += oracle::reduced_words(w).size() == 1;
  CHECK(rigid.size() == expected * rd->omega.order());
  for (const auto& w : rigid) CHECK(is_rigid(w));
  for (std::size_t i = 1; i < rigid.size(); ++i) CHECK(rigid[i - 1].length() <= rigid[i].length());
}

TEST_CASE("ends_with_all against the coset") {
  for (const std::string type : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(type);
    const auto rd = root_datum(type);
    const int n = rd->nodes();
    const auto ball = oracle::cayley_ball(rd, 4).elements;
    for (NodeSet set = 1; set < (NodeSet{1} << n); ++set) {
      const auto nodes = nodes_of(set);
      if (nodes.size() > 4 || static_cast<int>(nodes.size()) == n) continue;
      const bool commuting = nodes_commute(*rd, set);
      for (const auto& w : ball) {
        bool longest = true;
        if (commuting) {
          for (NodeSet sub = 1; sub < (NodeSet{1} << nodes.size()); ++sub) {
            WeylElement u = w;
            for (std::size_t i = 0; i < nodes.size(); ++i)
              if ((sub >> i) & 1u) u = u.times_generator(nodes[i]);
            if (u.length() > w.length()) longest = false;
          }
        } else {
          for (int s : nodes) longest = longest && contains(w.right_descents(), s);
          if (!longest) {
            CHECK(!ends_with_all(w, set));
            continue;
          }
        }
        if (commuting) CHECK(ends_with_all(w, set) == longest);
      }
    }
  }
}

TEST_CASE("spherical tests") {
  const auto rd = root_datum("G2");
  CHECK(is_left_spherical(WeylElement::from_word(rd, "0.1.2.1.0")));
  CHECK(is_right_spherical(WeylElement::from_word(rd, "0.1.2.1.0")));
  CHECK(!is_left_spherical(WeylElement::from_word(rd, "1.0")));
  CHECK(is_left_spherical(WeylElement::from_word(rd, "0.1")));
  CHECK(!is_right_spherical(WeylElement::from_word(rd, "0.1")));
}
