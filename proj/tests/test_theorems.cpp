#include <doctest.h>

#include <set>

#include "dumont/theorems.hpp"

using namespace dumont;

namespace {

const VerificationRow& row(const VerificationReport& r, int n) {
  for (const auto& x : r.rows)
    if (x.n == n) return x;
  REQUIRE(false);
  return r.rows.front();
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (TheoremId id : all_theorems())
    CHECK(theorem_from_string(theorem_name(id)) == id);
  CHECK_THROWS_AS(theorem_from_string("nope"), UnknownTheorem);
  CHECK(all_theorems().size() == 35);
}

TEST_CASE("catalan theorems pass") {
  for (TheoremId id :
       {TheoremId::MANSOUR_CATALAN_132, TheoremId::MANSOUR_CATALAN_231,
        TheoremId::MANSOUR_CATALAN_312, TheoremId::MANSOUR_CATALAN_D2_321,
        TheoremId::CONJ_D2_4132}) {
    const auto rep = verify_theorem(id, 5);
    CHECK(rep.overall);
    CHECK(rep.rows.size() == 6);
    CHECK(row(rep, 4).observed == "count=14");
  }
  CHECK(verify_theorem(TheoremId::CONJ_D2_4132, 4).conjecture);
  CHECK_FALSE(verify_theorem(TheoremId::D2_231, 4).conjecture);
}

TEST_CASE("d2-231 and d1-213 pass") {
  auto rep = verify_theorem(TheoremId::D2_231, 5);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed == "count=8");
  rep = verify_theorem(TheoremId::D1_213, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 3).observed == "count=2; coverage=2/2; soundness=2/2");
}

TEST_CASE("singleton set theorems pass") {
  for (TheoremId id :
       {TheoremId::D1_321, TheoremId::D2_312, TheoremId::PAIR3_132_231,
        TheoremId::PAIR3_132_312, TheoremId::PAIR3_213_312,
        TheoremId::PAIR3_123_213, TheoremId::PAIR3_132_213,
        TheoremId::PAIR3_D2_231_321, TheoremId::PAIR3_231_312,
        TheoremId::PAIR3_213_231_EMPTY, TheoremId::D1_231_4213,
        TheoremId::D2_EMPTY_123, TheoremId::D2_EMPTY_213,
        TheoremId::D2_EMPTY_132, TheoremId::D1_123}) {
    const auto rep = verify_theorem(id, 4);
    CHECK_MESSAGE(rep.overall, theorem_name(id));
  }
  CHECK(row(verify_theorem(TheoremId::D1_321, 3), 3).expected == "[214365]");
  CHECK(row(verify_theorem(TheoremId::D2_EMPTY_123, 4), 4).expected == "[]");
  CHECK(row(verify_theorem(TheoremId::D1_123, 3), 3).expected ==
        "[436215,562143,563421,564213]");
}

TEST_CASE("d1-123 observed counts follow 1,1,3,4,4") {
  const auto rep = verify_theorem(TheoremId::D1_123, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 2).observed == row(rep, 2).expected);  // definitional
  CHECK(row(rep, 4).pass);
}

TEST_CASE("pair3-123-132 has two members from n = 2") {
  const auto rep = verify_theorem(TheoremId::PAIR3_123_132_TWO, 5);
  CHECK(rep.overall);
  CHECK(row(rep, 5).expected == "count=2");
}

TEST_CASE("schroeder pair theorems") {
  CHECK(verify_theorem(TheoremId::D1_1342_1423, 4).overall);
  CHECK(verify_theorem(TheoremId::D1_2341_2413, 4).overall);
  const auto rep = verify_theorem(TheoremId::D1_1342_1423, 4);
  CHECK(row(rep, 4).expected == "count=45; coverage=45/45; soundness=45/45");
}

TEST_CASE("the 1342,2413 claim honestly fails at n = 4") {
  const auto rep = verify_theorem(TheoremId::D1_1342_2413, 4);
  CHECK_FALSE(rep.overall);
  for (int n = 0; n <= 3; ++n) CHECK(row(rep, n).pass);
  const auto& bad = row(rep, 4);
  CHECK_FALSE(bad.pass);
  CHECK(bad.observed == "count=44; coverage=44/44; soundness=44/45");
  CHECK(bad.expected == "count=45; coverage=44/44; soundness=45/45");
}

TEST_CASE("2341,1423 recurrence and closed form") {
  const auto rep = verify_theorem(TheoremId::D1_2341_1423, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed ==
        "count=39; coverage=39/39; soundness=39/39; closed=39");
}

TEST_CASE("1342,4213 powers of two with shape") {
  const auto rep = verify_theorem(TheoremId::D1_1342_4213, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed == "count=8; coverage=8/8; soundness=8/8");
}

TEST_CASE("lemma 4213/1342 convolution") {
  const auto rep = verify_theorem(TheoremId::LEMMA_4213_1342, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed == "25");
  CHECK(row(rep, 4).expected == "25");
}

TEST_CASE("gf theorems: F and G pass") {
  auto rep = verify_theorem(TheoremId::D1_2413_3142, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed == "count=67; coverage=67/67; soundness=67/67");
  rep = verify_theorem(TheoremId::D1_1423_4132, 4);
  CHECK(rep.overall);
  CHECK(row(rep, 4).observed == "count=52");
}

TEST_CASE("the H-equality claim honestly fails from n = 3") {
  const auto rep = verify_theorem(TheoremId::D1_2413_4132_EQ_1423_3142, 4);
  CHECK_FALSE(rep.overall);
  CHECK(row(rep, 2).pass);
  CHECK(row(rep, 3).observed == "[12,13]");
  CHECK(row(rep, 3).expected == "[12,12]");
  CHECK_FALSE(row(rep, 3).pass);
  CHECK(row(rep, 4).observed == "[54,65]");
  CHECK(row(rep, 4).expected == "[54,54]");
}

TEST_CASE("table-4-1: the registered 3421 value disagrees at n = 5") {
  const auto rep4 = verify_theorem(TheoremId::TABLE_4_1, 4);
  CHECK(rep4.overall);
  const auto rep5 = verify_theorem(TheoremId::TABLE_4_1, 5);
  CHECK_FALSE(rep5.overall);
  CHECK(row(rep5, 5).observed == "[239,239,135]");
  CHECK(row(rep5, 5).expected == "[241,239,135]");
}

TEST_CASE("genocchi totals") {
  const auto rep = verify_theorem(TheoremId::GENOCCHI_TOTALS, 5);
  CHECK(rep.overall);
  CHECK(row(rep, 5).observed == "[2073,2073]");
}

TEST_CASE("parallel verification is identical to serial") {
  for (TheoremId id : {TheoremId::D2_231, TheoremId::TABLE_4_1,
                       TheoremId::D1_1342_1423}) {
    const auto a = verify_theorem(id, 4, {}, 1);
    const auto b = verify_theorem(id, 4, {}, 4);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].n == b.rows[i].n);
      CHECK(a.rows[i].observed == b.rows[i].observed);
      CHECK(a.rows[i].expected == b.rows[i].expected);
    }
  }
}

TEST_CASE("limits and errors") {
  CHECK_THROWS_AS(verify_theorem(TheoremId::D2_231, 9), LimitExceeded);
}

TEST_CASE("report json round-trips byte-identically") {
  const auto rep = verify_theorem(TheoremId::D2_231, 3);
  const auto j = report_to_json(rep);
  const std::string text = j.dump();
  CHECK(nlohmann::json::parse(text).dump() == text);
  CHECK(j["theorem"] == "d2-231");
  CHECK(j["overall"] == true);
  CHECK(j["rows"].size() == 4);
}
