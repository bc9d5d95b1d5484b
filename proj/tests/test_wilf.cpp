#include <doctest.h>

#include "dumont/wilf.hpp"

using namespace dumont;

namespace {

const WilfClass* class_of(const WilfClassTable& t, const std::string& pat) {
  for (const auto& cls : t.classes)
    for (const auto& m : cls.members)
      if (m.str() == pat) return &cls;
  return nullptr;
}

}  // namespace

TEST_CASE("kind 1 length 3 classes") {
  const auto t = wilf_classes(DumontKind::First, 3, 4);
  REQUIRE(t.classes.size() == 4);
  using FP = std::vector<std::uint64_t>;
  CHECK(class_of(t, "132")->fingerprint == FP{1, 1, 2, 5, 14});
  CHECK(class_of(t, "132") == class_of(t, "231"));
  CHECK(class_of(t, "132") == class_of(t, "312"));
  CHECK(class_of(t, "213")->fingerprint == FP{1, 1, 1, 2, 5});
  CHECK(class_of(t, "321")->fingerprint == FP{1, 1, 1, 1, 1});
  CHECK(class_of(t, "123")->fingerprint == FP{1, 1, 3, 4, 4});
  // sorted by fingerprint, every pattern in exactly one class
  CHECK(std::is_sorted(t.classes.begin(), t.classes.end(),
                       [](const WilfClass& a, const WilfClass& b) {
                         return a.fingerprint < b.fingerprint;
                       }));
  size_t total = 0;
  for (const auto& cls : t.classes) total += cls.members.size();
  CHECK(total == 6);
}

TEST_CASE("kind 2 length 3 classes") {
  const auto t = wilf_classes(DumontKind::Second, 3, 3);
  using FP = std::vector<std::uint64_t>;
  CHECK(class_of(t, "321")->fingerprint == FP{1, 1, 2, 5});
  CHECK(class_of(t, "231")->fingerprint == FP{1, 1, 2, 4});
  CHECK(class_of(t, "312")->fingerprint == FP{1, 1, 1, 1});
  CHECK(class_of(t, "123")->fingerprint == FP{1, 1, 3, 0});
  CHECK(class_of(t, "213")->fingerprint == FP{1, 1, 1, 0});
  CHECK(class_of(t, "132")->fingerprint == FP{1, 1, 0, 0});
  CHECK(t.classes.size() == 6);
}

TEST_CASE("kind 1 length 4: 2143 and 3421 share a fingerprint to n = 5") {
  const auto t = wilf_classes(DumontKind::First, 4, 5);
  const auto* a = class_of(t, "2143");
  REQUIRE(a != nullptr);
  CHECK(a == class_of(t, "3421"));
  CHECK(a->fingerprint == std::vector<std::uint64_t>{1, 1, 2, 7, 36, 239});
  CHECK(class_of(t, "4213")->fingerprint ==
        std::vector<std::uint64_t>{1, 1, 2, 6, 25, 135});
  CHECK(class_of(t, "4213") != a);
}

TEST_CASE("threaded run gives the identical table") {
  const auto a = wilf_classes(DumontKind::First, 3, 4, {}, 1);
  const auto b = wilf_classes(DumontKind::First, 3, 4, {}, 4);
  REQUIRE(a.classes.size() == b.classes.size());
  for (size_t i = 0; i < a.classes.size(); ++i) {
    CHECK(a.classes[i].fingerprint == b.classes[i].fingerprint);
    CHECK(a.classes[i].members.size() == b.classes[i].members.size());
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(wilf_classes(DumontKind::First, 5, 3), DomainError);
  CHECK_THROWS_AS(wilf_classes(DumontKind::First, 3, 12), LimitExceeded);
}
