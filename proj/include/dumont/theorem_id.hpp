#ifndef DUMONT_THEOREM_ID_HPP
#define DUMONT_THEOREM_ID_HPP

#include <string>
#include <vector>

namespace dumont {

// One tag per verifiable claim. Names follow the kind and pattern set.
enum class TheoremId {
  MANSOUR_CATALAN_132,
  MANSOUR_CATALAN_231,
  MANSOUR_CATALAN_312,
  MANSOUR_CATALAN_D2_321,
  D1_213,
  D2_231,
  D1_321,
  D2_312,
  D1_123,
  D2_EMPTY_123,
  D2_EMPTY_213,
  D2_EMPTY_132,
  PAIR3_132_231,
  PAIR3_132_312,
  PAIR3_213_312,
  PAIR3_123_213,
  PAIR3_132_213,
  PAIR3_D2_231_321,
  PAIR3_231_312,
  PAIR3_213_231_EMPTY,
  PAIR3_123_132_TWO,
  D2_3142,
  CONJ_D2_4132,
  LEMMA_4213_1342,
  D1_1342_1423,
  D1_2341_2413,
  D1_1342_2413,
  D1_2341_1423,
  D1_231_4213,
  D1_1342_4213,
  D1_2413_3142,
  D1_1423_4132,
  D1_2413_4132_EQ_1423_3142,
  TABLE_4_1,
  GENOCCHI_TOTALS,
};

std::string theorem_name(TheoremId id);          // kebab-case tag
TheoremId theorem_from_string(const std::string& name);
const std::vector<TheoremId>& all_theorems();

}  // namespace dumont

#endif
