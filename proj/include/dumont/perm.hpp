#ifndef DUMONT_PERM_HPP
#define DUMONT_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dumont/errors.hpp"

namespace dumont {

// A permutation of {1..m} in one-line notation. The empty permutation (m = 0)
// is legal. Doubles as a pattern.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  // Compact digit string ("2143", values <= 9 only) or whitespace/comma
  // separated decimals ("10 1 2 3 4 5 6 7 8 9"). Mixing both forms in one
  // token list is rejected.
  static Permutation parse(const std::string& text);

  // Canonical text form: compact digits when every value <= 9, otherwise
  // space-separated decimals.
  std::string str() const;

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  // 1-based access: (*this)[i] = p(i).
  int operator[](int i) const { return values_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

// Positions (1-based, strictly increasing) of one pattern occurrence.
struct Occurrence {
  std::vector<int> positions;
};

// A deduplicated set of patterns; empty set is avoided vacuously.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);

  // Comma-separated list of patterns, each in Permutation::parse syntax.
  static PatternSet parse(const std::string& text);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::string str() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Permutation> patterns_;  // sorted, unique
};

enum class Symmetry { Reversal, Complement, ReverseComplement };

bool contains(const Permutation& host, const Permutation& pattern);
std::optional<Occurrence> find_occurrence(const Permutation& host,
                                          const Permutation& pattern);
std::uint64_t count_occurrences(const Permutation& host,
                                const Permutation& pattern);
bool avoids_all(const Permutation& host, const PatternSet& set);

Permutation reversal(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reverse_complement(const Permutation& p);
Permutation apply_symmetry(Symmetry op, const Permutation& p);
PatternSet map_pattern_set(const PatternSet& set, Symmetry op);

// Pattern of an arbitrary sequence of distinct values (order isomorphism onto
// {1..k}). Used by the structural decompositions.
Permutation standardize(const std::vector<int>& values);

}  // namespace dumont

#endif
