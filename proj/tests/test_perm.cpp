#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "dumont/perm.hpp"

using namespace dumont;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// Independent oracle: enumerate every subsequence of pattern length and test
// order isomorphism directly. Deliberately unrelated to the library's
// backtracking search.
bool contains_naive(const Permutation& host, const Permutation& pat) {
  const int m = host.size(), k = pat.size();
  if (k == 0) return true;
  if (k > m) return false;
  std::vector<int> idx(static_cast<size_t>(k));
  std::function<bool(int, int)> rec = [&](int depth, int from) {
    if (depth == k) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if ((host[idx[a]] < host[idx[b]]) != (pat[a + 1] < pat[b + 1]))
            return false;
      return true;
    }
    for (int i = from; i <= m; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 1);
}

std::uint64_t count_naive(const Permutation& host, const Permutation& pat) {
  const int m = host.size(), k = pat.size();
  if (k == 0) return 1;
  if (k > m) return 0;
  std::uint64_t total = 0;
  std::vector<int> idx(static_cast<size_t>(k));
  std::function<void(int, int)> rec = [&](int depth, int from) {
    if (depth == k) {
      for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
          if ((host[idx[a]] < host[idx[b]]) != (pat[a + 1] < pat[b + 1]))
            return;
      ++total;
      return;
    }
    for (int i = from; i <= m + depth + 1 - k; ++i) {
      idx[static_cast<size_t>(depth)] = i;
      rec(depth + 1, i + 1);
    }
  };
  rec(0, 1);
  return total;
}

Permutation random_perm(std::mt19937& rng, int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation{std::move(v)};
}

std::vector<Permutation> all_perms(int m) {
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(std::vector<int>(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(P("2143").values() == std::vector<int>{2, 1, 4, 3});
  CHECK(P("10 1 2 3 4 5 6 7 8 9").values() ==
        std::vector<int>{10, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(P("2,1,4,3") == P("2143"));
  CHECK(P("").empty());
  CHECK_THROWS_AS(P("2133"), NotABijection);
  CHECK_THROWS_AS(P("120"), NotABijection);
  CHECK_THROWS_AS(P("1x2"), MixedFormat);
  CHECK_THROWS_AS(P(" , "), EmptyToken);
}

TEST_CASE("canonical text form") {
  CHECK(P("2143").str() == "2143");
  CHECK(P("10 1 2 3 4 5 6 7 8 9").str() == "10 1 2 3 4 5 6 7 8 9");
  CHECK(P("").str() == "");
}

TEST_CASE("containment basics") {
  CHECK_FALSE(contains(P("3421"), P("123")));
  CHECK_FALSE(contains(P("436215"), P("123")));
  CHECK_FALSE(contains(P(""), P("1")));
  CHECK(contains(P("2143"), P("21")));
  CHECK(contains(P("216435"), P("1423")));
  CHECK_FALSE(contains(P("216435"), P("2413")));
  CHECK_FALSE(contains(P("216435"), P("4132")));
}

TEST_CASE("find_occurrence returns the least positions") {
  auto occ = find_occurrence(P("3142"), P("3142"));
  REQUIRE(occ.has_value());
  CHECK(occ->positions == std::vector<int>{1, 2, 3, 4});
  occ = find_occurrence(P("2143"), P("21"));
  REQUIRE(occ.has_value());
  CHECK(occ->positions == std::vector<int>{1, 2});
  CHECK_FALSE(find_occurrence(P("2143"), P("312")).has_value());
}

TEST_CASE("count_occurrences") {
  CHECK(count_occurrences(P("2143"), P("21")) == 2);
  CHECK(count_occurrences(P("4321"), P("21")) == 6);
  CHECK(count_occurrences(P("1234"), P("21")) == 0);
}

TEST_CASE("avoids_all") {
  CHECK(avoids_all(P("2143"), PatternSet::parse("2341,1423")));
  CHECK(avoids_all(P("564213"), PatternSet::parse("123")));
  CHECK(avoids_all(P("4321"), PatternSet{}));
}

TEST_CASE("symmetries on known values") {
  CHECK(reversal(P("2143")) == P("3412"));
  CHECK(reversal(P("")) == P(""));
  CHECK(reversal(P("1")) == P("1"));
  CHECK(complement(P("231")) == P("213"));
  CHECK(complement(P("312")) == P("132"));
  CHECK(complement(P("4213")) == P("1342"));
  CHECK(reverse_complement(P("3142")) == P("3142"));
  CHECK(reverse_complement(P("2413")) == P("2413"));
  CHECK(reverse_complement(P("21")) == P("21"));
}

TEST_CASE("map_pattern_set") {
  const auto fixed = PatternSet::parse("3142,2413");
  CHECK(map_pattern_set(fixed, Symmetry::Complement) == fixed);
  const auto fixed2 = PatternSet::parse("1342,4213");
  CHECK(map_pattern_set(fixed2, Symmetry::Complement) == fixed2);
  CHECK(map_pattern_set(PatternSet::parse("132"), Symmetry::Reversal) ==
        PatternSet::parse("231"));
}

TEST_CASE("symmetry involutions and commutation") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_perm(rng, static_cast<int>(rng() % 10));
    CHECK(reversal(reversal(p)) == p);
    CHECK(complement(complement(p)) == p);
    CHECK(reverse_complement(reverse_complement(p)) == p);
    CHECK(reversal(complement(p)) == complement(reversal(p)));
    CHECK(reverse_complement(p) == reversal(complement(p)));
  }
}

TEST_CASE("symmetry transports containment") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const auto host = random_perm(rng, 5 + static_cast<int>(rng() % 4));
    const auto pat = random_perm(rng, 2 + static_cast<int>(rng() % 3));
    const bool base = contains(host, pat);
    CHECK(base == contains(reversal(host), reversal(pat)));
    CHECK(base == contains(complement(host), complement(pat)));
    CHECK(base ==
          contains(reverse_complement(host), reverse_complement(pat)));
  }
}

TEST_CASE("optimized containment equals the naive oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto host = random_perm(rng, 1 + static_cast<int>(rng() % 8));
    const auto pat = random_perm(rng, 1 + static_cast<int>(rng() % 4));
    CHECK(contains(host, pat) == contains_naive(host, pat));
    CHECK(count_occurrences(host, pat) == count_naive(host, pat));
  }
  // exhaustively on short hosts, all pattern lengths up to 4
  std::vector<Permutation> pats;
  for (int len = 1; len <= 4; ++len)
    for (const auto& p : all_perms(len)) pats.push_back(p);
  for (int m = 0; m <= 6; ++m)
    for (const auto& host : all_perms(m))
      for (const auto& pat : pats)
        CHECK(contains(host, pat) == contains_naive(host, pat));
}

TEST_CASE("count zero iff avoided") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto host = random_perm(rng, 1 + static_cast<int>(rng() % 8));
    const auto pat = random_perm(rng, 1 + static_cast<int>(rng() % 4));
    CHECK((count_occurrences(host, pat) == 0) == !contains(host, pat));
  }
}

TEST_CASE("monotonicity of avoids_all") {
  const auto t1 = PatternSet::parse("132");
  const auto t2 = PatternSet::parse("132,231");
  for (const auto& host : all_perms(5))
    if (avoids_all(host, t2)) CHECK(avoids_all(host, t1));
}

TEST_CASE("standardize") {
  CHECK(standardize({5, 6, 4}) == P("231"));
  CHECK(standardize({}) == P(""));
  CHECK(standardize({17}) == P("1"));
}
