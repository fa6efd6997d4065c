#include "gkmcalc/permutation.hpp"
#include "gkmcalc/root_system.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace gkmcalc;
using testing::form;
using testing::poly;

namespace {

Permutation P(std::vector<int> v)
{
  return Permutation(std::move(v));
}

std::multiset<Polynomial> residues(const InversionSet& forms, const LinearForm& modulus)
{
  const auto sub = modulus.hyperplane_substitution();
  std::multiset<Polynomial> out;
  for (const auto& f : forms)
    out.insert(substitute(f.polynomial(), sub));
  return out;
}

} // namespace

TEST_CASE("compose")
{
  const auto s1 = Permutation::simple(3, 1);
  const auto s2 = Permutation::simple(3, 2);
  CHECK(compose(s1, s1).is_identity());
  CHECK(compose(s1, s2) == P({2, 3, 1}));
  CHECK(compose(s1, s2).to_cycle_string() == "(123)");
  const auto w = P({3, 1, 2});
  CHECK(compose(w, Permutation::identity(3)) == w);
  CHECK_THROWS(compose(s1, Permutation::identity(4)));
}

TEST_CASE("parse and print")
{
  CHECK(Permutation::parse("231") == P({2, 3, 1}));
  CHECK(Permutation::parse("2,3,1") == P({2, 3, 1}));
  CHECK(Permutation::parse("(123)", 3) == P({2, 3, 1}));
  CHECK(Permutation::parse("(13)", 3) == P({3, 2, 1}));
  CHECK(Permutation::parse("(132)", 3) == P({3, 1, 2}));
  CHECK(Permutation::parse("(12)(34)", 4) == P({2, 1, 4, 3}));
  CHECK(Permutation::parse("e", 3).is_identity());
  CHECK(P({3, 2, 1}).to_cycle_string() == "(13)");
  CHECK(Permutation::identity(3).to_cycle_string() == "e");
  CHECK(P({2, 3, 1}).to_string() == "231");
  CHECK_THROWS(Permutation::parse("221"));
  CHECK_THROWS(Permutation::parse("(14)", 3));
  CHECK_THROWS(P({1, 1, 2}));
}

TEST_CASE("length")
{
  CHECK(length(Permutation::identity(4)) == 0);
  CHECK(length(P({3, 2, 1})) == 3);
  CHECK(length(P({2, 3, 1})) == 2);
}

TEST_CASE("inversions")
{
  CHECK(inversions(P({2, 1, 3})) == InversionSet{form("t1 - t2")});
  CHECK(inversions(P({2, 3, 1})) == InversionSet{form("t1 - t2"), form("t1 - t3")});
  CHECK(inversions(Permutation::identity(3)).empty());
}

TEST_CASE("bruhat_leq")
{
  for (const auto& w : all_permutations(3))
    CHECK(bruhat_leq(Permutation::identity(3), w));
  CHECK(bruhat_leq(P({2, 1, 3}), P({2, 3, 1})));
  CHECK_FALSE(bruhat_leq(P({2, 1, 3}), P({1, 3, 2})));
  CHECK_FALSE(bruhat_leq(P({1, 3, 2}), P({2, 1, 3})));
}

TEST_CASE("lower_interval")
{
  CHECK(lower_interval(Permutation::identity(3)).size() == 1);
  CHECK(lower_interval(P({3, 2, 1})).size() == 6);
  auto below = lower_interval(P({2, 3, 1}));
  std::sort(below.begin(), below.end());
  std::vector<Permutation> expected{P({1, 2, 3}), P({1, 3, 2}), P({2, 1, 3}), P({2, 3, 1})};
  CHECK(below == expected);
}

TEST_CASE("reduced_word")
{
  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(P({2, 1, 3})) == std::vector<int>{1});
  CHECK(reduced_word(P({3, 2, 1})) == std::vector<int>{1, 2, 1});
  CHECK(from_word(3, {1, 2, 1}) == P({3, 2, 1}));
  for (const auto& w : all_permutations(5)) {
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == length(w));
    CHECK(from_word(5, word) == w);
  }
}

TEST_CASE("apply_to_variables")
{
  CHECK(apply_to_variables(Permutation::simple(3, 1), poly("t1 - t2")) == poly("t2 - t1"));
  const auto p = poly("t1^2*t3 - t2");
  CHECK(apply_to_variables(Permutation::identity(3), p) == p);
  CHECK(apply_to_variables(P({2, 3, 1}), poly("t1 - t3")) == poly("t2 - t1"));
}

TEST_CASE("inversions of s_i w (exhaustive, n <= 5)")
{
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (std::size_t i = 1; i < n; ++i) {
        const auto s = Permutation::simple(n, i);
        const auto sw = compose(s, w);
        if (length(sw) != length(w) + 1)
          continue;
        auto expected = apply_to_forms(s, inversions(w));
        expected.insert(LinearForm::difference(n, i, i + 1));
        CHECK(inversions(sw) == expected);
      }
}

TEST_CASE("covering transpositions (exhaustive, n <= 5)")
{
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t k = j + 1; k <= n; ++k) {
          const auto t = Permutation::transposition(n, j, k);
          const auto tw = compose(t, w);
          if (length(tw) != length(w) + 1)
            continue;
          const auto root = LinearForm::difference(n, j, k);
          // Inversions agree modulo the new root, with multiplicity.
          auto expected = residues(inversions(w), root);
          expected.insert(Polynomial(n));
          CHECK(residues(inversions(tw), root) == expected);
          // Ascents of w other than t stay ascents of tw.
          for (std::size_t i = 1; i < n; ++i) {
            const auto s = Permutation::simple(n, i);
            if (s == t || length(compose(s, w)) < length(w))
              continue;
            CHECK(length(compose(s, tw)) > length(tw));
          }
        }
}

TEST_CASE("Bruhat order against the tableau criterion (n <= 5)")
{
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& w : perms) {
      const auto below = lower_interval(w);
      for (const auto& v : perms) {
        const bool in = std::find(below.begin(), below.end(), v) != below.end();
        CHECK(in == oracle::bruhat_leq_tableau(v.one_line(), w.one_line()));
      }
    }
  }
}

TEST_CASE("Bruhat order is a partial order refining length (n = 4)")
{
  const auto perms = all_permutations(4);
  for (const auto& u : perms)
    for (const auto& v : perms) {
      if (!bruhat_leq(u, v))
        continue;
      CHECK(length(u) <= length(v));
      if (bruhat_leq(v, u))
        CHECK(u == v);
      for (const auto& w : perms)
        if (bruhat_leq(v, w))
          CHECK(bruhat_leq(u, w));
    }
}

TEST_CASE("length equals inversion count")
{
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n)) {
      CHECK(static_cast<int>(inversions(w).size()) == length(w));
      CHECK(length(w) == oracle::inversion_count(w.inverse().one_line()));
      CHECK(length(w) == length(w.inverse()));
    }
}

TEST_CASE("type A Weyl group matches the permutation model")
{
  for (std::size_t n = 1; n <= 4; ++n) {
    const WeylGroup group(RootSystem::type_a(n));
    const auto perms = all_permutations(n);
    REQUIRE(group.order() == perms.size());
    std::map<std::uint32_t, Permutation> as_perm;
    for (auto x : group.elements()) {
      const auto p = *group.permutation(x);
      as_perm.emplace(x.id, p);
      CHECK(group.from_permutation(p) == x);
      CHECK(group.name(x) == p.to_string());
      CHECK(group.length(x) == length(p));
      CHECK(group.reduced_word(x) == reduced_word(p));
      auto forms = group.inversion_forms(x);
      CHECK(InversionSet(forms.begin(), forms.end()) == inversions(p));
      for (std::size_t i = 1; i < n; ++i)
        CHECK(group.has_left_descent(x, i) == has_left_descent(p, i));
    }
    for (auto x : group.elements())
      for (auto y : group.elements()) {
        CHECK(*group.permutation(group.multiply(x, y)) == compose(as_perm.at(x.id), as_perm.at(y.id)));
        CHECK(group.bruhat_leq(x, y) ==
              oracle::bruhat_leq_tableau(as_perm.at(x.id).one_line(), as_perm.at(y.id).one_line()));
      }
    CHECK(group.length(group.longest()) == static_cast<int>(n * (n - 1) / 2));
  }
}
