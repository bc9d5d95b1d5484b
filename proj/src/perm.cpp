#include "dumont/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dumont {

namespace {

void check_bijection(const std::vector<int>& values) {
  const int m = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
  for (int v : values) {
    if (v < 1 || v > m || seen[static_cast<size_t>(v)])
      throw NotABijection("not a permutation of 1..m: value " +
                          std::to_string(v));
    seen[static_cast<size_t>(v)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_bijection(values_);
}

Permutation Permutation::parse(const std::string& text) {
  bool has_separator = false;
  bool has_digit = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
      has_separator = true;
    else if (std::isdigit(static_cast<unsigned char>(c)))
      has_digit = true;
    else
      throw MixedFormat("unexpected character '" + std::string(1, c) + "'");
  }
  if (!has_digit) {
    if (has_separator) throw EmptyToken("no values in permutation text");
    return Permutation{};  // empty string denotes the empty permutation
  }

  std::vector<int> values;
  if (!has_separator) {
    // compact form: one digit per value, so only valid for values 1..9
    for (char c : text) {
      if (c == '0')
        throw NotABijection("value 0 in compact form");
      values.push_back(c - '0');
    }
    // A compact token of length >= 10 would need a value >= 10 that cannot be
    // written as one digit; check_bijection rejects it below.
  } else {
    std::string token;
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream ns(normalized);
    while (ns >> token) {
      if (token.empty()) throw EmptyToken("empty token");
      for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw MixedFormat("bad token '" + token + "'");
      values.push_back(std::stoi(token));
    }
    if (values.empty()) throw EmptyToken("no values in permutation text");
  }
  return Permutation(std::move(values));
}

std::string Permutation::str() const {
  if (values_.empty()) return "";
  const bool compact =
      *std::max_element(values_.begin(), values_.end()) <= 9;
  std::string out;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!compact && i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

PatternSet::PatternSet(std::vector<Permutation> patterns)
    : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

PatternSet PatternSet::parse(const std::string& text) {
  std::vector<Permutation> pats;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw EmptyToken("empty pattern in list");
    pats.push_back(Permutation::parse(token));
  }
  return PatternSet(std::move(pats));
}

std::string PatternSet::str() const {
  std::string out;
  for (size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ',';
    out += patterns_[i].str();
  }
  return out;
}

namespace {

// Backtracking over pattern positions. Positions are chosen left to right, so
// the first complete match found is the lexicographically least position
// vector. For each pattern index k the candidate host value is bounded by the
// host values already matched to the pattern's nearest smaller/larger entries.
struct Matcher {
  const Permutation& host;
  const Permutation& pat;
  std::vector<int> pos;  // 1-based host positions matched so far
  std::vector<int> first;
  std::uint64_t count = 0;
  bool stop_at_first = false;
  bool found = false;

  bool feasible(int k, int host_value) const {
    for (int j = 0; j < k; ++j) {
      const bool pat_less = pat[j + 1] < pat[k + 1];
      const bool host_less = host[pos[static_cast<size_t>(j)]] < host_value;
      if (pat_less != host_less) return false;
    }
    return true;
  }

  void search(int k, int from) {
    const int m = host.size(), kk = pat.size();
    if (k == kk) {
      ++count;
      if (!found) first = pos;
      found = true;
      return;
    }
    // i + remaining pattern length must stay within the host
    for (int i = from; i + (kk - k - 1) <= m; ++i) {
      if (!feasible(k, host[i])) continue;
      pos.push_back(i);
      search(k + 1, i + 1);
      pos.pop_back();
      if (stop_at_first && found) return;
    }
  }
};

}  // namespace

bool contains(const Permutation& host, const Permutation& pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > host.size()) return false;
  Matcher m{host, pattern};
  m.stop_at_first = true;
  m.search(0, 1);
  return m.found;
}

std::optional<Occurrence> find_occurrence(const Permutation& host,
                                          const Permutation& pattern) {
  if (pattern.empty()) return Occurrence{};
  if (pattern.size() > host.size()) return std::nullopt;
  Matcher m{host, pattern};
  m.stop_at_first = true;
  m.search(0, 1);
  if (!m.found) return std::nullopt;
  return Occurrence{std::move(m.first)};
}

std::uint64_t count_occurrences(const Permutation& host,
                                const Permutation& pattern) {
  if (pattern.empty()) return 1;
  if (pattern.size() > host.size()) return 0;
  Matcher m{host, pattern};
  m.search(0, 1);
  return m.count;
}

bool avoids_all(const Permutation& host, const PatternSet& set) {
  for (const auto& pat : set.patterns())
    if (contains(host, pat)) return false;
  return true;
}

Permutation reversal(const Permutation& p) {
  std::vector<int> v(p.values().rbegin(), p.values().rend());
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& p) {
  const int m = p.size();
  std::vector<int> v;
  v.reserve(static_cast<size_t>(m));
  for (int x : p.values()) v.push_back(m + 1 - x);
  return Permutation(std::move(v));
}

Permutation reverse_complement(const Permutation& p) {
  return reversal(complement(p));
}

Permutation apply_symmetry(Symmetry op, const Permutation& p) {
  switch (op) {
    case Symmetry::Reversal: return reversal(p);
    case Symmetry::Complement: return complement(p);
    case Symmetry::ReverseComplement: return reverse_complement(p);
  }
  throw Error("bad symmetry selector");
}

PatternSet map_pattern_set(const PatternSet& set, Symmetry op) {
  std::vector<Permutation> out;
  out.reserve(set.patterns().size());
  for (const auto& p : set.patterns()) out.push_back(apply_symmetry(op, p));
  return PatternSet(std::move(out));
}

Permutation standardize(const std::vector<int>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[static_cast<size_t>(a)] <
                                       values[static_cast<size_t>(b)]; });
  std::vector<int> out(values.size());
  for (size_t r = 0; r < order.size(); ++r)
    out[static_cast<size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(out));
}

}  // namespace dumont
