#ifndef DUMONT_STRUCTURE_HPP
#define DUMONT_STRUCTURE_HPP

#include <string>
#include <vector>

#include "dumont/errors.hpp"
#include "dumont/families.hpp"
#include "dumont/perm.hpp"
#include "dumont/theorem_id.hpp"

namespace dumont {

// Balanced lattice word of U/D steps, never below the axis.
class DyckPath {
 public:
  DyckPath() = default;
  explicit DyckPath(const std::string& word);  // throws InvalidDyckPath
  const std::string& word() const { return word_; }
  int steps() const { return static_cast<int>(word_.size()); }
  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::string word_;
};

// Ordered positive parts with their sum.
struct WeakComposition {
  std::vector<int> parts;
  int total = 0;

  static WeakComposition of(std::vector<int> parts);  // throws InvalidComposition
  std::string str() const;                            // "1+3"
};

// Disjoint cycles covering {1..m}; each cycle starts from its largest
// element, cycles ordered by smallest element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::string str() const;  // "(21)(8643)(5)(7)"
};

CycleDecomposition cycle_decomposition(const Permutation& p);

// Cycle-based bijection D2_{2n}(231) <-> compositions of n.
WeakComposition d2_231_to_composition(const Permutation& p);
Permutation composition_to_d2_231(const WeakComposition& c);

// First-value decomposition p = (2k, 1, (r.c)(left)+1, right+2k).
struct D2_3142Decomposition {
  int k = 0;
  Permutation left;
  Permutation right;
};
D2_3142Decomposition d2_3142_decompose(const Permutation& p);

DyckPath d2_3142_to_dyck(const Permutation& p);
Permutation dyck_to_d2_3142(const DyckPath& d);

// Explicit avoider sets for the singleton theorems, constructed directly.
std::vector<Permutation> canonical_avoider(TheoremId family, int n);

// One-level test of the theorem's recursive template; recursive parts are
// checked for family membership only.
bool matches_shape(TheoremId theorem, const Permutation& p);
bool has_shape_template(TheoremId theorem);

// Every instantiation of the theorem's template at size n, built from the
// exhaustively generated smaller families (the soundness direction of the
// "if and only if" claims). Duplicates removed, sorted.
std::vector<Permutation> shape_instances(TheoremId theorem, int n,
                                         const GenerationLimits& limits = {});

}  // namespace dumont

#endif
