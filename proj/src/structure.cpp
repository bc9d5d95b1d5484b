#include "dumont/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dumont {

namespace {

std::vector<int> slice(const Permutation& p, int from, int to) {
  // 1-based, inclusive; empty when from > to
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(p[i]);
  return out;
}

bool is_interval(const std::vector<int>& v, int lo, int hi) {
  if (static_cast<int>(v.size()) != hi - lo + 1) return false;
  std::vector<bool> seen(v.size(), false);
  for (int x : v) {
    if (x < lo || x > hi || seen[static_cast<size_t>(x - lo)]) return false;
    seen[static_cast<size_t>(x - lo)] = true;
  }
  return true;
}

std::vector<int> shifted(const std::vector<int>& v, int by) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(x + by);
  return out;
}

std::vector<int> complemented_in(const std::vector<int>& v, int m) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) out.push_back(m + 1 - x);
  return out;
}

}  // namespace

DyckPath::DyckPath(const std::string& word) : word_(word) {
  int depth = 0;
  for (char c : word_) {
    if (c == 'U')
      ++depth;
    else if (c == 'D')
      --depth;
    else
      throw InvalidDyckPath("step must be U or D, got '" + std::string(1, c) +
                            "'");
    if (depth < 0) throw InvalidDyckPath("path dips below the axis");
  }
  if (depth != 0) throw InvalidDyckPath("path does not return to the axis");
}

WeakComposition WeakComposition::of(std::vector<int> parts) {
  WeakComposition c;
  for (int p : parts) {
    if (p < 1) throw InvalidComposition("parts must be positive");
    c.total += p;
  }
  if (parts.empty()) throw InvalidComposition("composition must be nonempty");
  c.parts = std::move(parts);
  return c;
}

std::string WeakComposition::str() const {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts[i]);
  }
  return out;
}

std::string CycleDecomposition::str() const {
  int maxv = 0;
  for (const auto& c : cycles)
    for (int v : c) maxv = std::max(maxv, v);
  const bool compact = maxv <= 9;
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i && !compact) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const int m = p.size();
  std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
  std::vector<std::vector<int>> cycles;
  for (int s = 1; s <= m; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> cyc;
    int v = s;
    while (!seen[static_cast<size_t>(v)]) {
      seen[static_cast<size_t>(v)] = true;
      cyc.push_back(v);
      v = p[v];
    }
    // rotate so the largest element leads
    const auto it = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    cycles.push_back(std::move(cyc));
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) {
              return *std::min_element(a.begin(), a.end()) <
                     *std::min_element(b.begin(), b.end());
            });
  return CycleDecomposition{std::move(cycles)};
}

namespace {

const PatternSet& pat231() {
  static const PatternSet s = PatternSet::parse("231");
  return s;
}
const PatternSet& pat3142() {
  static const PatternSet s = PatternSet::parse("3142");
  return s;
}

void require_d2_231(const Permutation& p) {
  if (!is_member(DumontKind::Second, p) || !avoids_all(p, pat231()))
    throw NotInFamily("permutation is not a 231-avoiding Dumont permutation "
                      "of the second kind");
}

}  // namespace

WeakComposition d2_231_to_composition(const Permutation& p) {
  require_d2_231(p);
  if (p.empty()) throw NotInFamily("empty permutation has no composition");
  std::vector<int> parts;
  for (const auto& cyc : cycle_decomposition(p).cycles) {
    if (cyc.size() == 1) continue;  // fixed points are forgotten
    // cycle (2l, 2l-2, ..., 2k, 2k-1) -> part l-k+1
    const int l2 = cyc.front(), k1 = cyc.back();
    if (l2 % 2 != 0 || k1 % 2 != 1)
      throw MalformedStructure("cycle of unexpected form in " + p.str());
    parts.push_back((l2 - (k1 + 1)) / 2 + 1);
  }
  return WeakComposition::of(std::move(parts));
}

Permutation composition_to_d2_231(const WeakComposition& c) {
  if (c.parts.empty() || c.total < 1)
    throw InvalidComposition("composition must have positive total");
  const int n = c.total;
  std::vector<int> p(static_cast<size_t>(2 * n));
  std::iota(p.begin(), p.end(), 1);  // fixed points by default
  int pre = 0;
  for (int t : c.parts) {
    if (t < 1) throw InvalidComposition("parts must be positive");
    const int hi = pre + t;
    // cycle (2hi, 2hi-2, ..., 2pre+2, 2pre+1)
    std::vector<int> cyc;
    for (int v = 2 * hi; v > 2 * pre; v -= 2) cyc.push_back(v);
    cyc.push_back(2 * pre + 1);
    for (size_t i = 0; i < cyc.size(); ++i)
      p[static_cast<size_t>(cyc[i]) - 1] = cyc[(i + 1) % cyc.size()];
    pre = hi;
  }
  Permutation out{std::move(p)};
  require_d2_231(out);  // guards against malformed input that still sums
  return out;
}

namespace {

bool in_family_d2_3142(const Permutation& p) {
  return is_member(DumontKind::Second, p) && avoids_all(p, pat3142());
}

}  // namespace

D2_3142Decomposition d2_3142_decompose(const Permutation& p) {
  if (!in_family_d2_3142(p))
    throw NotInFamily("permutation is not a 3142-avoiding Dumont permutation "
                      "of the second kind");
  const int m = p.size();
  if (m == 0) throw NotInFamily("empty permutation has no decomposition");
  const int k2 = p[1];
  if (k2 % 2 != 0 || p[2] != 1)
    throw MalformedStructure("expected p(1) even and p(2) = 1 in " + p.str());
  const int k = k2 / 2;
  const std::vector<int> seg = slice(p, 3, k2);
  const std::vector<int> right = slice(p, k2 + 1, m);
  if (!is_interval(seg, 2, k2 - 1) || !is_interval(right, k2 + 1, m))
    throw MalformedStructure("segment bounds violated in " + p.str());
  D2_3142Decomposition d;
  d.k = k;
  d.left = reverse_complement(standardize(seg));
  d.right = standardize(right);
  if (!in_family_d2_3142(d.left) || !in_family_d2_3142(d.right))
    throw MalformedStructure("decomposition parts escape the family in " +
                             p.str());
  return d;
}

DyckPath d2_3142_to_dyck(const Permutation& p) {
  if (!in_family_d2_3142(p))
    throw NotInFamily("permutation is not in D2(3142)");
  std::string word;
  auto rec = [&](auto&& self, const Permutation& q) -> void {
    if (q.empty()) return;
    const auto d = d2_3142_decompose(q);
    word += 'U';
    self(self, d.left);
    word += 'D';
    self(self, d.right);
  };
  rec(rec, p);
  return DyckPath(word);
}

Permutation dyck_to_d2_3142(const DyckPath& d) {
  const std::string& w = d.word();
  auto rec = [&](auto&& self, size_t from, size_t to) -> std::vector<int> {
    if (from == to) return {};
    // w[from..to) = U A D B with A, B balanced
    int depth = 0;
    size_t split = from;
    for (size_t i = from; i < to; ++i) {
      depth += (w[i] == 'U') ? 1 : -1;
      if (depth == 0) {
        split = i;
        break;
      }
    }
    const std::vector<int> left = self(self, from + 1, split);
    const std::vector<int> right = self(self, split + 1, to);
    const int k = static_cast<int>(left.size()) / 2 + 1;
    const Permutation seg =
        reverse_complement(Permutation{std::vector<int>(left)});
    std::vector<int> out;
    out.push_back(2 * k);
    out.push_back(1);
    for (int v : seg.values()) out.push_back(v + 1);
    for (int v : right) out.push_back(v + 2 * k);
    return out;
  };
  Permutation out{rec(rec, 0, w.size())};
  if (!in_family_d2_3142(out))
    throw MalformedStructure("inverse image escaped the family for " + w);
  return out;
}

// ---------------------------------------------------------------------------
// canonical avoider constructions

namespace {

Permutation ident_pairs(int n) {  // (2,1,4,3,...,2n,2n-1)
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) {
    v.push_back(2 * k);
    v.push_back(2 * k - 1);
  }
  return Permutation{std::move(v)};
}

Permutation canon_132_231(int n) {  // evens descending, odds ascending
  std::vector<int> v;
  for (int x = 2 * n; x >= 2; x -= 2) v.push_back(x);
  for (int x = 1; x <= 2 * n - 1; x += 2) v.push_back(x);
  return Permutation{std::move(v)};
}

Permutation canon_132_312(int n) {
  // read from the right: 1,2 | 2n,2n-1 | 3,4 | 2n-2,2n-3 | ...
  std::vector<int> rtl;
  int lo = 1, hi = 2 * n;
  bool low_turn = true;
  while (lo < hi) {
    if (low_turn) {
      rtl.push_back(lo);
      rtl.push_back(lo + 1);
      lo += 2;
    } else {
      rtl.push_back(hi);
      rtl.push_back(hi - 1);
      hi -= 2;
    }
    low_turn = !low_turn;
  }
  std::reverse(rtl.begin(), rtl.end());
  return Permutation{std::move(rtl)};
}

Permutation canon_213_312(int n) {  // (3,5,...,2n-1,2n,2n-2,...,4,2,1)
  if (n == 0) return Permutation{};
  std::vector<int> v;
  for (int x = 3; x <= 2 * n - 1; x += 2) v.push_back(x);
  v.push_back(2 * n);
  for (int x = 2 * n - 2; x >= 2; x -= 2) v.push_back(x);
  v.push_back(1);
  return Permutation{std::move(v)};
}

Permutation canon_123_213(int n) {  // (2n-1,2n,2n-3,2n-2,...,3,4,2,1)
  std::vector<int> v;
  for (int k = n; k >= 2; --k) {
    v.push_back(2 * k - 1);
    v.push_back(2 * k);
  }
  if (n >= 1) {
    v.push_back(2);
    v.push_back(1);
  }
  return Permutation{std::move(v)};
}

}  // namespace

std::vector<Permutation> canonical_avoider(TheoremId family, int n) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) {
    switch (family) {
      case TheoremId::D1_321:
      case TheoremId::D2_312:
      case TheoremId::PAIR3_132_231:
      case TheoremId::PAIR3_132_312:
      case TheoremId::PAIR3_213_312:
      case TheoremId::PAIR3_123_213:
      case TheoremId::PAIR3_132_213:
      case TheoremId::PAIR3_D2_231_321:
      case TheoremId::PAIR3_231_312:
      case TheoremId::PAIR3_213_231_EMPTY:
      case TheoremId::D1_231_4213:
        return {Permutation{}};
      default:
        throw UnknownFamily("no explicit construction for " +
                            theorem_name(family));
    }
  }
  switch (family) {
    case TheoremId::D1_321:
    case TheoremId::D2_312:
    case TheoremId::PAIR3_D2_231_321:
    case TheoremId::PAIR3_231_312:
    case TheoremId::D1_231_4213:
      return {ident_pairs(n)};
    case TheoremId::PAIR3_132_231:
      return {canon_132_231(n)};
    case TheoremId::PAIR3_132_312:
      return {canon_132_312(n)};
    case TheoremId::PAIR3_213_312:
      return {canon_213_312(n)};
    case TheoremId::PAIR3_123_213:
    case TheoremId::PAIR3_132_213:
      return {canon_123_213(n)};
    case TheoremId::PAIR3_213_231_EMPTY:
      if (n == 1) return {ident_pairs(1)};
      return {};
    default:
      throw UnknownFamily("no explicit construction for " +
                          theorem_name(family));
  }
}

// ---------------------------------------------------------------------------
// shape templates

namespace {

struct Family {
  DumontKind kind;
  PatternSet set;

  bool member(const Permutation& p) const {
    return is_member(kind, p) && avoids_all(p, set);
  }
  bool member_vals(const std::vector<int>& v) const {
    return member(standardize(v));
  }
  std::vector<Permutation> enumerate(int n) const {
    std::vector<Permutation> out;
    for_each_member(kind, n, [&](const Permutation& p) {
      if (avoids_all(p, set)) out.push_back(p);
    }, GenerationLimits{.max_n = std::max(8, n)});
    return out;
  }
};

Family family_for(TheoremId tag) {
  switch (tag) {
    case TheoremId::D1_213:  // parts of the 213 template live in D1(231)
      return {DumontKind::First, PatternSet::parse("231")};
    case TheoremId::D1_1342_1423:
      return {DumontKind::First, PatternSet::parse("1342,1423")};
    case TheoremId::D1_2341_2413:
      return {DumontKind::First, PatternSet::parse("2341,2413")};
    case TheoremId::D1_1342_2413:
      return {DumontKind::First, PatternSet::parse("1342,2413")};
    case TheoremId::D1_2341_1423:
      return {DumontKind::First, PatternSet::parse("2341,1423")};
    case TheoremId::D1_1342_4213:
      return {DumontKind::First, PatternSet::parse("1342,4213")};
    case TheoremId::D1_2413_3142:
      return {DumontKind::First, PatternSet::parse("2413,3142")};
    case TheoremId::D2_3142:
      return {DumontKind::Second, PatternSet::parse("3142")};
    default:
      throw UnknownShape("no structural template for " + theorem_name(tag));
  }
}

// --- D1_213: pi = (2k+1, c(rho')+2k+2, 2k+2, c(rho'')+2, 2, 1) -------------

bool match_213(const Permutation& p) {
  const int m = p.size(), n = m / 2;
  if (n == 1) return p == ident_pairs(1);
  const Family f231 = family_for(TheoremId::D1_213);
  if (p[m - 1] != 2 || p[m] != 1) return false;
  const int j = p[1];
  if (j % 2 == 0 || j < 3 || j > m - 1) return false;
  const int k = (j - 1) / 2;
  // positions: 1 | 2 .. m-2k-1 | m-2k | m-2k+1 .. m-2 | m-1, m
  if (p[m - 2 * k] != 2 * k + 2) return false;
  const auto blockA = slice(p, 2, m - 2 * k - 1);
  const auto blockB = slice(p, m - 2 * k + 1, m - 2);
  if (!is_interval(blockA, 2 * k + 3, m)) return false;
  if (!is_interval(blockB, 3, 2 * k)) return false;
  const Permutation rho1 = complement(standardize(blockA));
  const Permutation rho2 = complement(standardize(blockB));
  return f231.member(rho1) && f231.member(rho2);
}

std::vector<Permutation> inst_213(int n) {
  if (n == 1) return {ident_pairs(1)};
  const Family f231 = family_for(TheoremId::D1_213);
  std::vector<Permutation> out;
  for (int k = 1; k <= n - 1; ++k) {
    const auto as = f231.enumerate(n - k - 1);
    const auto bs = f231.enumerate(k - 1);
    for (const auto& a : as) {
      const Permutation ca = complement(a);
      for (const auto& b : bs) {
        const Permutation cb = complement(b);
        std::vector<int> v{2 * k + 1};
        for (int x : ca.values()) v.push_back(x + 2 * k + 2);
        v.push_back(2 * k + 2);
        for (int x : cb.values()) v.push_back(x + 2);
        v.push_back(2);
        v.push_back(1);
        out.emplace_back(std::move(v));
      }
    }
  }
  return out;
}

// --- two-block templates of the Schroeder-pair theorems ---------------------

// type tags describe where the high/low value blocks sit:
//   HighFirst:  (pi' + 2k, 2n-1, 2n, pi'')      with pi'' low values last
//   LowFirst:   (pi', 2n-1, 2n, pi'' + 2k)      with pi' low values first
// and the corresponding (.., 2n, .., 2n-1) variants.

bool match_pair_A_highfirst(const Permutation& p, const Family& f) {
  const int m = p.size(), n = m / 2;
  for (int k = 1; k <= n - 1; ++k) {
    const int q = m - 2 * k - 1;  // position of 2n-1
    if (p[q] != m - 1 || p[q + 1] != m) continue;
    const auto pre = slice(p, 1, q - 1);
    const auto suf = slice(p, q + 2, m);
    if (!is_interval(pre, 2 * k + 1, m - 2) || !is_interval(suf, 1, 2 * k))
      continue;
    if (f.member_vals(pre) && f.member_vals(suf)) return true;
  }
  return false;
}

bool match_pair_A_lowfirst(const Permutation& p, const Family& f) {
  const int m = p.size(), n = m / 2;
  for (int k = 0; k <= n - 2; ++k) {
    const int q = 2 * k + 1;  // position of 2n-1
    if (p[q] != m - 1 || p[q + 1] != m) continue;
    const auto pre = slice(p, 1, q - 1);
    const auto suf = slice(p, q + 2, m);
    if (!is_interval(pre, 1, 2 * k) || !is_interval(suf, 2 * k + 1, m - 2))
      continue;
    if (f.member_vals(pre) && f.member_vals(suf)) return true;
  }
  return false;
}

bool match_pair_B_highfirst(const Permutation& p, const Family& f) {
  // (pi' + 2k, 2n, pi'', 2n-1)
  const int m = p.size(), n = m / 2;
  if (p[m] != m - 1) return false;
  for (int k = 0; k <= n - 1; ++k) {
    const int q = m - 2 * k - 1;  // position of 2n
    if (p[q] != m) continue;
    const auto pre = slice(p, 1, q - 1);
    const auto mid = slice(p, q + 1, m - 1);
    if (!is_interval(pre, 2 * k + 1, m - 2) || !is_interval(mid, 1, 2 * k))
      continue;
    if (f.member_vals(pre) && f.member_vals(mid)) return true;
  }
  return false;
}

bool match_pair_B_lowfirst(const Permutation& p, const Family& f) {
  // (pi', 2n, pi'' + 2k, 2n-1)
  const int m = p.size(), n = m / 2;
  if (p[m] != m - 1) return false;
  for (int k = 0; k <= n - 1; ++k) {
    const int q = 2 * k + 1;  // position of 2n
    if (p[q] != m) continue;
    const auto pre = slice(p, 1, q - 1);
    const auto mid = slice(p, q + 1, m - 1);
    if (!is_interval(pre, 1, 2 * k) || !is_interval(mid, 2 * k + 1, m - 2))
      continue;
    if (f.member_vals(pre) && f.member_vals(mid)) return true;
  }
  return false;
}

bool match_1342_1423(const Permutation& p) {
  const Family f = family_for(TheoremId::D1_1342_1423);
  return match_pair_A_highfirst(p, f) || match_pair_B_highfirst(p, f);
}

bool match_2341_2413(const Permutation& p) {
  const Family f = family_for(TheoremId::D1_2341_2413);
  return match_pair_A_lowfirst(p, f) || match_pair_B_lowfirst(p, f);
}

bool match_1342_2413(const Permutation& p) {
  const Family f = family_for(TheoremId::D1_1342_2413);
  return match_pair_A_highfirst(p, f) || match_pair_B_lowfirst(p, f);
}

// instantiators for the same three templates

void emit_pair_A_highfirst(int n, const Family& f,
                           std::vector<Permutation>& out) {
  for (int k = 1; k <= n - 1; ++k)
    for (const auto& a : f.enumerate(n - k - 1))
      for (const auto& b : f.enumerate(k)) {
        std::vector<int> v = shifted(a.values(), 2 * k);
        v.push_back(2 * n - 1);
        v.push_back(2 * n);
        for (int x : b.values()) v.push_back(x);
        out.emplace_back(std::move(v));
      }
}

void emit_pair_A_lowfirst(int n, const Family& f,
                          std::vector<Permutation>& out) {
  for (int k = 0; k <= n - 2; ++k)
    for (const auto& a : f.enumerate(k))
      for (const auto& b : f.enumerate(n - k - 1)) {
        std::vector<int> v = a.values();
        v.push_back(2 * n - 1);
        v.push_back(2 * n);
        for (int x : shifted(b.values(), 2 * k)) v.push_back(x);
        out.emplace_back(std::move(v));
      }
}

void emit_pair_B_highfirst(int n, const Family& f,
                           std::vector<Permutation>& out) {
  for (int k = 0; k <= n - 1; ++k)
    for (const auto& a : f.enumerate(n - k - 1))
      for (const auto& b : f.enumerate(k)) {
        std::vector<int> v = shifted(a.values(), 2 * k);
        v.push_back(2 * n);
        for (int x : b.values()) v.push_back(x);
        v.push_back(2 * n - 1);
        out.emplace_back(std::move(v));
      }
}

void emit_pair_B_lowfirst(int n, const Family& f,
                          std::vector<Permutation>& out) {
  for (int k = 0; k <= n - 1; ++k)
    for (const auto& a : f.enumerate(k))
      for (const auto& b : f.enumerate(n - k - 1)) {
        std::vector<int> v = a.values();
        v.push_back(2 * n);
        for (int x : shifted(b.values(), 2 * k)) v.push_back(x);
        v.push_back(2 * n - 1);
        out.emplace_back(std::move(v));
      }
}

// --- D1_2341_1423: five explicit cases --------------------------------------

bool match_2341_1423(const Permutation& p) {
  const Family f = family_for(TheoremId::D1_2341_1423);
  const int m = p.size();
  const int n = m / 2;
  if (n < 1) return true;
  // case 1: (2n-1, 2n, pi')
  if (p[1] == m - 1 && p[2] == m && f.member_vals(slice(p, 3, m))) return true;
  // case 3: (2n, pi', 2n-1)
  if (p[1] == m && p[m] == m - 1 && f.member_vals(slice(p, 2, m - 1)))
    return true;
  // case 4: (pi', 2n, 2n-1)
  if (p[m - 1] == m && p[m] == m - 1 && f.member_vals(slice(p, 1, m - 2)))
    return true;
  if (n >= 2) {
    // case 2: (pi', 2n-1, 2n, 2n-2, 2n-3)
    if (p[m - 3] == m - 1 && p[m - 2] == m && p[m - 1] == m - 2 &&
        p[m] == m - 3 && f.member_vals(slice(p, 1, m - 4)))
      return true;
    // case 5: (2n-2, 2n-3, 2n, pi', 2n-1)
    if (p[1] == m - 2 && p[2] == m - 3 && p[3] == m && p[m] == m - 1 &&
        f.member_vals(slice(p, 4, m - 1)))
      return true;
  }
  return false;
}

std::vector<Permutation> inst_2341_1423(int n) {
  const Family f = family_for(TheoremId::D1_2341_1423);
  std::vector<Permutation> out;
  if (n >= 1) {
    for (const auto& a : f.enumerate(n - 1)) {
      {
        std::vector<int> v{2 * n - 1, 2 * n};
        for (int x : a.values()) v.push_back(x);
        out.emplace_back(std::move(v));
      }
      {
        std::vector<int> v{2 * n};
        for (int x : a.values()) v.push_back(x);
        v.push_back(2 * n - 1);
        out.emplace_back(std::move(v));
      }
      {
        std::vector<int> v = a.values();
        v.push_back(2 * n);
        v.push_back(2 * n - 1);
        out.emplace_back(std::move(v));
      }
    }
  }
  if (n >= 2) {
    for (const auto& a : f.enumerate(n - 2)) {
      {
        std::vector<int> v = a.values();
        v.push_back(2 * n - 1);
        v.push_back(2 * n);
        v.push_back(2 * n - 2);
        v.push_back(2 * n - 3);
        out.emplace_back(std::move(v));
      }
      {
        std::vector<int> v{2 * n - 2, 2 * n - 3, 2 * n};
        for (int x : a.values()) v.push_back(x);
        v.push_back(2 * n - 1);
        out.emplace_back(std::move(v));
      }
    }
  }
  return out;
}

// --- D1_1342_4213: (2n+1 - pibar, 2, 1) or (pibar, 2n, 2n-1) ----------------

bool match_1342_4213(const Permutation& p) {
  const Family f = family_for(TheoremId::D1_1342_4213);
  const int m = p.size();
  if (m == 0) return true;
  if (p[m - 1] == 2 && p[m] == 1) {
    std::vector<int> q;
    for (int i = 1; i <= m - 2; ++i) q.push_back(m + 1 - p[i]);
    if (is_interval(q, 1, m - 2) && f.member(Permutation{q})) return true;
  }
  if (p[m - 1] == m && p[m] == m - 1 && f.member_vals(slice(p, 1, m - 2)))
    return true;
  return false;
}

std::vector<Permutation> inst_1342_4213(int n) {
  const Family f = family_for(TheoremId::D1_1342_4213);
  std::vector<Permutation> out;
  for (const auto& a : f.enumerate(n - 1)) {
    {
      std::vector<int> v;
      for (int x : a.values()) v.push_back(2 * n + 1 - x);
      v.push_back(2);
      v.push_back(1);
      out.emplace_back(std::move(v));
    }
    {
      std::vector<int> v = a.values();
      v.push_back(2 * n);
      v.push_back(2 * n - 1);
      out.emplace_back(std::move(v));
    }
  }
  return out;
}

// --- D1_2413_3142: alternating maximal runs against the last entry ----------
//
// p = (..., pi_4, pi_3, pi_2, pi_1, d) with d = 2k-1 odd; odd-indexed runs
// carry descending intervals of the values below d (pi_1 may be empty), the
// even-indexed runs ascending intervals of the values above d. Small blocks
// start at an odd value and follow the first-kind rules; big blocks end at an
// even value and their complements follow the first-kind rules.

struct Run {
  int index;  // pi-index (1-based from the right)
  std::vector<int> block;
};

bool parse_runs_38(const Permutation& p, std::vector<Run>& out) {
  const int m = p.size();
  const int d = p[m];
  if (d % 2 == 0) return false;
  out.clear();
  int i = m - 1;
  int idx = 1;
  bool started = false;
  while (i >= 1) {
    const bool small = p[i] < d;
    if (!started && !small) idx = 2;  // pi_1 empty
    started = true;
    std::vector<int> blk;
    int j = i;
    while (j >= 1 && (p[j] < d) == small) --j;
    for (int t = j + 1; t <= i; ++t) blk.push_back(p[t]);
    out.push_back(Run{idx, std::move(blk)});
    i = j;
    ++idx;
  }
  return true;
}

bool small_block_ok_38(const std::vector<int>& blk, const Family& f) {
  const Permutation s = standardize(blk);
  return first_kind_rules(s.values()) && avoids_all(s, f.set);
}

bool big_block_ok_38(const std::vector<int>& blk, const Family& f) {
  const Permutation s = standardize(blk);
  return first_kind_rules(complement(s).values()) && avoids_all(s, f.set);
}

bool match_2413_3142(const Permutation& p) {
  if (p.empty()) return true;
  const Family f = family_for(TheoremId::D1_2413_3142);
  const int m = p.size();
  const int d = p[m];
  if (d % 2 == 0) return false;
  std::vector<Run> runs;
  if (!parse_runs_38(p, runs)) return false;
  int small_top = d - 1;
  int big_bot = d + 1;
  for (const auto& r : runs) {
    const bool small = r.index % 2 == 1;
    if (small != (r.block.front() < d)) return false;
    const int lo = *std::min_element(r.block.begin(), r.block.end());
    const int hi = *std::max_element(r.block.begin(), r.block.end());
    if (!is_interval(r.block, lo, hi)) return false;
    if (small) {
      if (hi != small_top || lo % 2 == 0) return false;
      small_top = lo - 1;
    } else {
      if (lo != big_bot || hi % 2 == 1) return false;
      big_bot = hi + 1;
    }
  }
  if (small_top != 0 || big_bot != m + 1) return false;
  for (const auto& r : runs) {
    if (r.index % 2 == 1) {
      if (!small_block_ok_38(r.block, f)) return false;
    } else {
      if (!big_block_ok_38(r.block, f)) return false;
    }
  }
  return true;
}

// all length-m words (as permutations of 1..m) passing the block rules
std::vector<Permutation> blocks_38(int m, bool small, const Family& f) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  do {
    const Permutation q{std::vector<int>(v)};
    if (!avoids_all(q, f.set)) continue;
    if (small ? first_kind_rules(q.values())
              : first_kind_rules(complement(q).values()))
      out.push_back(q);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Permutation> inst_2413_3142(int n) {
  const Family f = family_for(TheoremId::D1_2413_3142);
  std::vector<Permutation> out;
  std::map<std::pair<int, bool>, std::vector<Permutation>> cache;
  auto blocks = [&](int m, bool small) -> const std::vector<Permutation>& {
    auto key = std::make_pair(m, small);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, blocks_38(m, small, f)).first;
    return it->second;
  };

  // compositions of `total` into `parts` positive parts
  auto comps = [](int total, int parts) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int left) -> void {
      if (left == 0) {
        if (rest == 0) all.push_back(cur);
        return;
      }
      for (int first = 1; first <= rest - (left - 1); ++first) {
        cur.push_back(first);
        self(self, rest - first, left - 1);
        cur.pop_back();
      }
    };
    rec(rec, total, parts);
    return all;
  };

  for (int k = 1; k <= n; ++k) {
    const int d = 2 * k - 1;
    const int nsmall = 2 * k - 2, nbig = 2 * n - 2 * k + 1;
    for (int m = 1; m <= 2 * n + 1; ++m) {
      const int nb_s = (m + 1) / 2, nb_b = m / 2;
      if ((nb_b == 0) != (nbig == 0)) continue;
      for (int s1 = 0; s1 <= nsmall; ++s1) {
        for (const auto& tail : comps(nsmall - s1, nb_s - 1)) {
          std::vector<int> sall{s1};
          sall.insert(sall.end(), tail.begin(), tail.end());
          // small intervals tile {1..nsmall} from the top; minima must be odd
          std::vector<std::pair<int, int>> sints;
          int top = nsmall;
          bool ok = true;
          for (int sz : sall) {
            if (sz > 0 && (top - sz + 1) % 2 == 0) { ok = false; break; }
            sints.emplace_back(top - sz + 1, top);
            top -= sz;
          }
          if (!ok || top != 0) continue;
          for (const auto& bsz : comps(nbig, nb_b)) {
            // big intervals tile {d+1..2n} upward; maxima must be even
            std::vector<std::pair<int, int>> bints;
            int bot = d + 1;
            bool ok2 = true;
            for (int sz : bsz) {
              const int hi = bot + sz - 1;
              if (hi % 2 == 1) { ok2 = false; break; }
              bints.emplace_back(bot, hi);
              bot = hi + 1;
            }
            if (!ok2) continue;
            // cartesian product over block fillings, assembled right to left
            std::vector<const std::vector<Permutation>*> opts;
            std::vector<int> offsets;
            static const std::vector<Permutation> kEmpty{Permutation{}};
            for (int idx = 1; idx <= m; ++idx) {
              const bool small = idx % 2 == 1;
              const auto [lo, hi] = small ? sints[static_cast<size_t>((idx - 1) / 2)]
                                          : bints[static_cast<size_t>(idx / 2 - 1)];
              const int sz = hi - lo + 1;
              opts.push_back(sz == 0 ? &kEmpty : &blocks(sz, small));
              offsets.push_back(lo - 1);
            }
            std::vector<size_t> pick(static_cast<size_t>(m), 0);
            while (true) {
              std::vector<int> v;
              for (int idx = m; idx >= 1; --idx) {
                const auto& q = (*opts[static_cast<size_t>(idx - 1)])
                    [pick[static_cast<size_t>(idx - 1)]];
                for (int x : q.values())
                  v.push_back(x + offsets[static_cast<size_t>(idx - 1)]);
              }
              v.push_back(d);
              if (static_cast<int>(v.size()) == 2 * n)
                out.emplace_back(std::move(v));
              int c = 0;
              while (c < m) {
                if (++pick[static_cast<size_t>(c)] <
                    opts[static_cast<size_t>(c)]->size())
                  break;
                pick[static_cast<size_t>(c)] = 0;
                ++c;
              }
              if (c == m) break;
            }
          }
        }
      }
    }
  }
  return out;
}

// --- D2_3142 decomposition as a template ------------------------------------

bool match_d2_3142(const Permutation& p) {
  if (p.empty()) return true;
  try {
    d2_3142_decompose(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Permutation> inst_d2_3142(int n) {
  const Family f = family_for(TheoremId::D2_3142);
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& l : f.enumerate(k - 1)) {
      const Permutation rc = reverse_complement(l);
      for (const auto& r : f.enumerate(n - k)) {
        std::vector<int> v{2 * k, 1};
        for (int x : rc.values()) v.push_back(x + 1);
        for (int x : r.values()) v.push_back(x + 2 * k);
        out.emplace_back(std::move(v));
      }
    }
  return out;
}

std::vector<Permutation> dedup(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool has_shape_template(TheoremId theorem) {
  switch (theorem) {
    case TheoremId::D1_213:
    case TheoremId::D1_1342_1423:
    case TheoremId::D1_2341_2413:
    case TheoremId::D1_1342_2413:
    case TheoremId::D1_2341_1423:
    case TheoremId::D1_1342_4213:
    case TheoremId::D1_2413_3142:
    case TheoremId::D2_3142:
      return true;
    default:
      return false;
  }
}

bool matches_shape(TheoremId theorem, const Permutation& p) {
  switch (theorem) {
    case TheoremId::D1_213: return match_213(p);
    case TheoremId::D1_1342_1423: return match_1342_1423(p);
    case TheoremId::D1_2341_2413: return match_2341_2413(p);
    case TheoremId::D1_1342_2413: return match_1342_2413(p);
    case TheoremId::D1_2341_1423: return match_2341_1423(p);
    case TheoremId::D1_1342_4213: return match_1342_4213(p);
    case TheoremId::D1_2413_3142: return match_2413_3142(p);
    case TheoremId::D2_3142: return match_d2_3142(p);
    default:
      throw UnknownShape("no structural template for " + theorem_name(theorem));
  }
}

std::vector<Permutation> shape_instances(TheoremId theorem, int n,
                                         const GenerationLimits& limits) {
  if (n < 0 || n > limits.max_n)
    throw LimitExceeded("n above configured maximum");
  if (n == 0) return {Permutation{}};
  switch (theorem) {
    case TheoremId::D1_213: return dedup(inst_213(n));
    case TheoremId::D1_1342_1423: {
      const Family f = family_for(theorem);
      std::vector<Permutation> out;
      emit_pair_A_highfirst(n, f, out);
      emit_pair_B_highfirst(n, f, out);
      return dedup(std::move(out));
    }
    case TheoremId::D1_2341_2413: {
      const Family f = family_for(theorem);
      std::vector<Permutation> out;
      emit_pair_A_lowfirst(n, f, out);
      emit_pair_B_lowfirst(n, f, out);
      return dedup(std::move(out));
    }
    case TheoremId::D1_1342_2413: {
      const Family f = family_for(theorem);
      std::vector<Permutation> out;
      emit_pair_A_highfirst(n, f, out);
      emit_pair_B_lowfirst(n, f, out);
      return dedup(std::move(out));
    }
    case TheoremId::D1_2341_1423: return dedup(inst_2341_1423(n));
    case TheoremId::D1_1342_4213: return dedup(inst_1342_4213(n));
    case TheoremId::D1_2413_3142: return dedup(inst_2413_3142(n));
    case TheoremId::D2_3142: return dedup(inst_d2_3142(n));
    default:
      throw UnknownShape("no structural template for " + theorem_name(theorem));
  }
}

}  // namespace dumont
