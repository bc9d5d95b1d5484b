#include "dumont/theorem_id.hpp"

#include <utility>

#include "dumont/errors.hpp"

namespace dumont {

namespace {
const std::pair<TheoremId, const char*> kNames[] = {
    {TheoremId::MANSOUR_CATALAN_132, "mansour-catalan-132"},
    {TheoremId::MANSOUR_CATALAN_231, "mansour-catalan-231"},
    {TheoremId::MANSOUR_CATALAN_312, "mansour-catalan-312"},
    {TheoremId::MANSOUR_CATALAN_D2_321, "mansour-catalan-d2-321"},
    {TheoremId::D1_213, "d1-213"},
    {TheoremId::D2_231, "d2-231"},
    {TheoremId::D1_321, "d1-321"},
    {TheoremId::D2_312, "d2-312"},
    {TheoremId::D1_123, "d1-123"},
    {TheoremId::D2_EMPTY_123, "d2-empty-123"},
    {TheoremId::D2_EMPTY_213, "d2-empty-213"},
    {TheoremId::D2_EMPTY_132, "d2-empty-132"},
    {TheoremId::PAIR3_132_231, "pair3-132-231"},
    {TheoremId::PAIR3_132_312, "pair3-132-312"},
    {TheoremId::PAIR3_213_312, "pair3-213-312"},
    {TheoremId::PAIR3_123_213, "pair3-123-213"},
    {TheoremId::PAIR3_132_213, "pair3-132-213"},
    {TheoremId::PAIR3_D2_231_321, "pair3-d2-231-321"},
    {TheoremId::PAIR3_231_312, "pair3-231-312"},
    {TheoremId::PAIR3_213_231_EMPTY, "pair3-213-231-empty"},
    {TheoremId::PAIR3_123_132_TWO, "pair3-123-132-two"},
    {TheoremId::D2_3142, "d2-3142"},
    {TheoremId::CONJ_D2_4132, "conj-d2-4132"},
    {TheoremId::LEMMA_4213_1342, "lemma-4213-1342"},
    {TheoremId::D1_1342_1423, "d1-1342-1423"},
    {TheoremId::D1_2341_2413, "d1-2341-2413"},
    {TheoremId::D1_1342_2413, "d1-1342-2413"},
    {TheoremId::D1_2341_1423, "d1-2341-1423"},
    {TheoremId::D1_231_4213, "d1-231-4213"},
    {TheoremId::D1_1342_4213, "d1-1342-4213"},
    {TheoremId::D1_2413_3142, "d1-2413-3142"},
    {TheoremId::D1_1423_4132, "d1-1423-4132"},
    {TheoremId::D1_2413_4132_EQ_1423_3142, "d1-2413-4132-eq-1423-3142"},
    {TheoremId::TABLE_4_1, "table-4-1"},
    {TheoremId::GENOCCHI_TOTALS, "genocchi-totals"},
};
}  // namespace

std::string theorem_name(TheoremId id) {
  for (const auto& [tag, name] : kNames)
    if (tag == id) return name;
  throw UnknownTheorem("unmapped theorem id");
}

TheoremId theorem_from_string(const std::string& name) {
  for (const auto& [tag, n] : kNames)
    if (name == n) return tag;
  throw UnknownTheorem("unknown theorem '" + name + "'");
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> all = [] {
    std::vector<TheoremId> v;
    for (const auto& [tag, name] : kNames) v.push_back(tag);
    return v;
  }();
  return all;
}

}  // namespace dumont
