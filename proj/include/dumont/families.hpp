#ifndef DUMONT_FAMILIES_HPP
#define DUMONT_FAMILIES_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dumont/errors.hpp"
#include "dumont/perm.hpp"

namespace dumont {

using BigInt = boost::multiprecision::cpp_int;

enum class DumontKind { First, Second, DumontLikeFirst, DumontLikeSecond };

struct GenerationLimits {
  int max_n = 8;  // generated length is 2n; override via DUMONT_MAX_N in the CLI
};

// Adjacency rules of the first kind on a word of any length (odd lengths get
// the natural extension: they are exactly the even-length members with the
// maximum adjoined at the end). Used by the generator and by the structural
// templates, which cut permutations into blocks of either parity.
bool first_kind_rules(const std::vector<int>& v);
// Rules of the complement image (odd entry must ascend, even entry descends or
// ends the word). Coincides with c(first kind) on even lengths only.
bool first_kind_like_rules(const std::vector<int>& v);

bool is_member(DumontKind kind, const Permutation& p);

// All members of length 2n in lexicographic order of one-line notation.
std::vector<Permutation> generate(DumontKind kind, int n,
                                  const GenerationLimits& limits = {});

// Streaming traversal; First/Second arrive in lexicographic order, the
// Dumont-like kinds arrive in the order induced by their preimages.
void for_each_member(DumontKind kind, int n,
                     const std::function<void(const Permutation&)>& fn,
                     const GenerationLimits& limits = {});

// |{p in family(kind, 2n) : p avoids every pattern in set}| without
// materializing the family. threads > 1 partitions the search by the first
// placed value; results are merged in value order so the count is identical
// for every thread count.
std::uint64_t count_avoiders(DumontKind kind, const PatternSet& set, int n,
                             const GenerationLimits& limits = {},
                             int threads = 1);

// Appends 2n+1 to an even-length permutation, giving the odd-length member.
Permutation extend_to_odd(const Permutation& p);

// Unsigned Genocchi numbers via the Seidel boustrophedon triangle; entry k of
// the table holds G_{2k}.
struct GenocchiTable {
  std::vector<BigInt> values;  // values[k-1] = G_{2k}
  const BigInt& at(int k) const { return values.at(static_cast<size_t>(k) - 1); }
};

GenocchiTable genocchi_table(int kmax);
BigInt genocchi(int k);

}  // namespace dumont

#endif
