#ifndef DUMONT_WILF_HPP
#define DUMONT_WILF_HPP

#include <cstdint>
#include <vector>

#include "dumont/families.hpp"
#include "dumont/perm.hpp"

namespace dumont {

// Single patterns grouped by their avoider-count fingerprint on the chosen
// Dumont family; two patterns land in the same class exactly when they are
// Wilf-equivalent up to the computed horizon.
struct WilfClass {
  std::vector<std::uint64_t> fingerprint;  // counts for n = 0..n_max
  std::vector<PatternSet> members;         // singleton sets, sorted
};

struct WilfClassTable {
  std::vector<WilfClass> classes;  // sorted by fingerprint
};

WilfClassTable wilf_classes(DumontKind kind, int pattern_length, int n_max,
                            const GenerationLimits& limits = {},
                            int threads = 1);

}  // namespace dumont

#endif
