#ifndef DUMONT_THEOREMS_HPP
#define DUMONT_THEOREMS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dumont/families.hpp"
#include "dumont/theorem_id.hpp"

namespace dumont {

// For count rows observed/expected are decimal strings; for set rows they are
// sorted arrays of permutation strings rendered as "[p1,p2,...]" with the
// empty permutation printed "(empty)". Structural tags append labelled
// "coverage=a/b" and "soundness=a/b" parts. Rows where the registered claim
// is silent report observed as expected.
struct VerificationRow {
  int n = 0;
  std::string observed;
  std::string expected;
  bool pass = true;
};

struct VerificationReport {
  TheoremId theorem;
  std::vector<VerificationRow> rows;  // one row per n in 0..n_max
  bool overall = true;
  bool conjecture = false;  // the registered claim is a conjecture
};

nlohmann::json report_to_json(const VerificationReport& r);

// Compares exhaustive data against the claim for every n <= n_max. threads > 1
// distributes rows over workers; rows are always assembled in n order.
VerificationReport verify_theorem(TheoremId theorem, int n_max,
                                  const GenerationLimits& limits = {},
                                  int threads = 1);

}  // namespace dumont

#endif
