#include "dumont/families.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <string>

namespace dumont {

bool first_kind_rules(const std::vector<int>& v) {
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    if (v[i] % 2 == 0) {
      if (i + 1 == m || v[i + 1] > v[i]) return false;
    } else {
      if (i + 1 < m && v[i + 1] < v[i]) return false;
    }
  }
  return true;
}

bool first_kind_like_rules(const std::vector<int>& v) {
  const size_t m = v.size();
  for (size_t i = 0; i < m; ++i) {
    if (v[i] % 2 == 1) {
      if (i + 1 == m || v[i + 1] < v[i]) return false;
    } else {
      if (i + 1 < m && v[i + 1] > v[i]) return false;
    }
  }
  return true;
}

namespace {

bool second_kind_positions(const std::vector<int>& v) {
  const int m = static_cast<int>(v.size());
  if (m % 2) return false;
  for (int i = 1; i <= m; ++i) {
    const int x = v[static_cast<size_t>(i) - 1];
    if (i % 2 == 0 ? x >= i : x < i) return false;
  }
  return true;
}

void check_limit(int n, const GenerationLimits& limits) {
  if (n < 0 || n > limits.max_n)
    throw LimitExceeded("n = " + std::to_string(n) +
                        " above configured maximum " +
                        std::to_string(limits.max_n));
  if (2 * n > 62) throw LimitExceeded("length 2n exceeds generator range");
}

// Iterative-friendly recursive walkers. Values are placed left to right in
// ascending order, so emission order is lexicographic. `first` restricts the
// first placed value (0 = no restriction) for deterministic work partitioning.
template <class F>
void walk_first_kind(int m, int first, F&& emit) {
  std::vector<int> cur;
  cur.reserve(static_cast<size_t>(m));
  const std::uint64_t all = (m == 0) ? 0 : ((~0ULL) >> (64 - m));

  auto rec = [&](auto&& self, std::uint64_t free) -> void {
    const int i = static_cast<int>(cur.size());
    if (i == m) {
      if (m == 0 || cur.back() % 2 == 1) emit(cur);
      return;
    }
    std::uint64_t cand = free;
    if (i == 0 && first > 0) cand &= (1ULL << (first - 1));
    while (cand) {
      const int v = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      if (i > 0) {
        const int u = cur.back();
        if (u % 2 == 0 ? v > u : v < u) continue;
      }
      const std::uint64_t rest = free & ~(1ULL << (v - 1));
      if (i + 1 < m && rest) {
        // the next value must exist on the right side of v
        if (v % 2 == 0) {
          const int mn = std::countr_zero(rest) + 1;
          if (mn > v) continue;  // even value with no smaller successor
        } else {
          const int mx = 64 - std::countl_zero(rest);
          if (mx < v) continue;  // odd value with no larger successor
        }
      }
      cur.push_back(v);
      self(self, rest);
      cur.pop_back();
    }
  };
  rec(rec, all);
}

template <class F>
void walk_second_kind(int m, int first, F&& emit) {
  std::vector<int> cur;
  cur.reserve(static_cast<size_t>(m));

  auto rec = [&](auto&& self, std::uint64_t free) -> void {
    const int i = static_cast<int>(cur.size()) + 1;  // 1-based position to fill
    if (i > m) {
      emit(cur);
      return;
    }
    const int lo = (i % 2 == 0) ? 1 : i;
    const int hi = (i % 2 == 0) ? i - 1 : m;
    for (int v = lo; v <= hi; ++v) {
      if (!(free & (1ULL << (v - 1)))) continue;
      if (i == 1 && first > 0 && v != first) continue;
      cur.push_back(v);
      self(self, free & ~(1ULL << (v - 1)));
      cur.pop_back();
    }
  };
  rec(rec, m == 0 ? 0 : ((~0ULL) >> (64 - m)));
}

Permutation transform_for(DumontKind kind, const std::vector<int>& base) {
  Permutation p{std::vector<int>(base)};
  switch (kind) {
    case DumontKind::First:
    case DumontKind::Second: return p;
    case DumontKind::DumontLikeFirst: return complement(p);
    case DumontKind::DumontLikeSecond: return reverse_complement(p);
  }
  throw Error("bad kind");
}

bool base_is_second(DumontKind kind) {
  return kind == DumontKind::Second || kind == DumontKind::DumontLikeSecond;
}

template <class F>
void walk_kind(DumontKind kind, int n, int first, F&& fn) {
  const int m = 2 * n;
  auto emit = [&](const std::vector<int>& cur) {
    fn(transform_for(kind, cur));
  };
  if (base_is_second(kind))
    walk_second_kind(m, first, emit);
  else
    walk_first_kind(m, first, emit);
}

}  // namespace

bool is_member(DumontKind kind, const Permutation& p) {
  if (p.size() % 2) return false;
  switch (kind) {
    case DumontKind::First: return first_kind_rules(p.values());
    case DumontKind::Second: return second_kind_positions(p.values());
    case DumontKind::DumontLikeFirst:
      return first_kind_rules(complement(p).values());
    case DumontKind::DumontLikeSecond:
      return second_kind_positions(reverse_complement(p).values());
  }
  throw Error("bad kind");
}

std::vector<Permutation> generate(DumontKind kind, int n,
                                  const GenerationLimits& limits) {
  check_limit(n, limits);
  std::vector<Permutation> out;
  walk_kind(kind, n, 0, [&](Permutation p) { out.push_back(std::move(p)); });
  if (kind == DumontKind::DumontLikeFirst ||
      kind == DumontKind::DumontLikeSecond)
    std::sort(out.begin(), out.end());
  return out;
}

void for_each_member(DumontKind kind, int n,
                     const std::function<void(const Permutation&)>& fn,
                     const GenerationLimits& limits) {
  check_limit(n, limits);
  walk_kind(kind, n, 0, [&](const Permutation& p) { fn(p); });
}

std::uint64_t count_avoiders(DumontKind kind, const PatternSet& set, int n,
                             const GenerationLimits& limits, int threads) {
  check_limit(n, limits);
  const int m = 2 * n;
  auto count_part = [&](int first) {
    std::uint64_t c = 0;
    walk_kind(kind, n, first, [&](const Permutation& p) {
      if (avoids_all(p, set)) ++c;
    });
    return c;
  };
  if (threads <= 1 || m == 0) return count_part(0);

  // Partition by first placed value; merge in value order.
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(static_cast<size_t>(m));
  for (int v = 1; v <= m; ++v)
    parts.push_back(std::async(std::launch::async, count_part, v));
  std::uint64_t total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

Permutation extend_to_odd(const Permutation& p) {
  if (p.size() % 2) throw OddInput("permutation length must be even");
  std::vector<int> v = p.values();
  v.push_back(p.size() + 1);
  return Permutation(std::move(v));
}

GenocchiTable genocchi_table(int kmax) {
  if (kmax < 1) throw DomainError("kmax must be >= 1");
  // Seidel triangle, boustrophedon sweeps. Row r has ceil(r/2) entries;
  // odd rows accumulate left to right, even rows right to left, each entry
  // adding the entry above. G_{2n} sits at the end of odd row 2n-1.
  GenocchiTable t;
  std::vector<BigInt> prev{1}, cur;
  t.values.push_back(1);  // G_2 from row 1
  for (int r = 2; r <= 2 * kmax - 1; ++r) {
    const int width = (r + 1) / 2;
    cur.assign(static_cast<size_t>(width), 0);
    if (r % 2 == 0) {
      BigInt acc = 0;
      for (int k = width; k >= 1; --k) {
        acc += prev[static_cast<size_t>(k) - 1];
        cur[static_cast<size_t>(k) - 1] = acc;
      }
    } else {
      BigInt acc = 0;
      for (int k = 1; k <= width; ++k) {
        if (k <= static_cast<int>(prev.size()))
          acc += prev[static_cast<size_t>(k) - 1];
        cur[static_cast<size_t>(k) - 1] = acc;
      }
      t.values.push_back(cur.back());
    }
    prev = cur;
  }
  return t;
}

BigInt genocchi(int k) { return genocchi_table(k).at(k); }

}  // namespace dumont
