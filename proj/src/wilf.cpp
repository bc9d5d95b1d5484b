#include "dumont/wilf.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

namespace dumont {

WilfClassTable wilf_classes(DumontKind kind, int pattern_length, int n_max,
                            const GenerationLimits& limits, int threads) {
  if (pattern_length != 3 && pattern_length != 4)
    throw DomainError("pattern length must be 3 or 4");
  if (n_max < 0 || n_max > limits.max_n)
    throw LimitExceeded("n_max above configured maximum");

  std::vector<Permutation> patterns;
  std::vector<int> v(static_cast<size_t>(pattern_length));
  std::iota(v.begin(), v.end(), 1);
  do {
    patterns.emplace_back(std::vector<int>(v));
  } while (std::next_permutation(v.begin(), v.end()));

  auto fingerprint = [&](const Permutation& pat) {
    std::vector<std::uint64_t> fp;
    const PatternSet single{std::vector<Permutation>{pat}};
    for (int n = 0; n <= n_max; ++n)
      fp.push_back(count_avoiders(kind, single, n, limits));
    return fp;
  };

  std::vector<std::vector<std::uint64_t>> fps(patterns.size());
  if (threads <= 1) {
    for (size_t i = 0; i < patterns.size(); ++i) fps[i] = fingerprint(patterns[i]);
  } else {
    std::vector<std::future<std::vector<std::uint64_t>>> futs;
    for (const auto& pat : patterns)
      futs.push_back(std::async(std::launch::async, fingerprint, pat));
    for (size_t i = 0; i < futs.size(); ++i) fps[i] = futs[i].get();
  }

  std::map<std::vector<std::uint64_t>, std::vector<PatternSet>> groups;
  for (size_t i = 0; i < patterns.size(); ++i)
    groups[fps[i]].push_back(PatternSet{std::vector<Permutation>{patterns[i]}});

  WilfClassTable table;
  for (auto& [fp, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const PatternSet& a, const PatternSet& b) {
                return a.patterns() < b.patterns();
              });
    table.classes.push_back(WilfClass{fp, std::move(members)});
  }
  return table;
}

}  // namespace dumont
