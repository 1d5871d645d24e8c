#pragma once

// Slow reference implementations used to cross-check the library. None of
// them call into stone.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::uint64_t> zmod_idempotents(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 0; e < n; ++e) {
    if (e * e % n == e) out.push_back(e);
  }
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Prime ideals of Z/n as the sets of their members.
inline std::vector<std::set<std::uint64_t>> zmod_prime_ideals(std::uint64_t n) {
  std::vector<std::set<std::uint64_t>> out;
  for (auto p : prime_divisors(n)) {
    std::set<std::uint64_t> members;
    for (std::uint64_t k = 0; k < n; k += p) members.insert(k);
    out.push_back(members);
  }
  return out;
}

using LabelSet = std::set<std::string>;

inline LabelSet sym_diff(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
inline LabelSet meet(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
inline LabelSet join(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}
inline LabelSet minus(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// The ideal of P({0..n-1}) generated by `gens`, by closing under + and
/// multiplication by every element. Returns membership by mask.
inline std::vector<bool> closure_ideal(std::size_t n, const std::vector<std::uint64_t>& gens) {
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<bool> in(size, false);
  std::vector<std::uint64_t> members{0};
  in[0] = true;
  std::vector<std::uint64_t> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    const std::uint64_t g = frontier.back();
    frontier.pop_back();
    if (in[g]) continue;
    in[g] = true;
    members.push_back(g);
    for (std::uint64_t r = 0; r < size; ++r) {
      if (!in[r & g]) frontier.push_back(r & g);
    }
    for (auto m : std::vector<std::uint64_t>(members)) {
      if (!in[m ^ g]) frontier.push_back(m ^ g);
    }
  }
  return in;
}

/// Every unital ring hom P({0..m-1}) -> P({0..n-1}) as a full table, found by
/// depth-first search over all maps with the axioms checked as entries are
/// fixed.
inline std::vector<std::vector<std::uint64_t>> powerset_hom_tables(std::size_t m, std::size_t n) {
  const std::uint64_t src = std::uint64_t{1} << m;
  const std::uint64_t dst = std::uint64_t{1} << n;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> table(src, 0);
  std::function<void(std::uint64_t)> go = [&](std::uint64_t s) {
    if (s == src) {
      if (table[0] == 0 && table[src - 1] == dst - 1) out.push_back(table);
      return;
    }
    for (std::uint64_t v = 0; v < dst; ++v) {
      table[s] = v;
      bool ok = true;
      for (std::uint64_t t = 0; t <= s && ok; ++t) {
        if ((s ^ t) <= s && table[s ^ t] != (table[s] ^ table[t])) ok = false;
        if ((s & t) <= s && table[s & t] != (table[s] & table[t])) ok = false;
      }
      if (ok) go(s + 1);
    }
  };
  go(0);
  return out;
}

/// A finite-cofinite set stored as membership on {0..W-1} plus the common
/// membership of everything beyond.
struct Window {
  static constexpr std::size_t W = 64;
  std::bitset<W> head;
  bool tail = false;

  static Window make(bool cofinite, const std::vector<std::uint64_t>& support) {
    Window w;
    w.tail = cofinite;
    for (std::size_t i = 0; i < W; ++i) w.head[i] = cofinite;
    for (auto s : support) w.head[s] = !cofinite;
    return w;
  }
  friend Window operator+(const Window& a, const Window& b) { return {a.head ^ b.head, a.tail != b.tail}; }
  friend Window operator*(const Window& a, const Window& b) { return {a.head & b.head, a.tail && b.tail}; }
  friend bool operator==(const Window& a, const Window& b) = default;
};

/// dim over GF(2) of P(A) (x)_{P(X)} P(B), presented on every pair of subsets
/// (s, t) with bilinearity in each slot and (r s, t) = (s, r t) for r in P(X).
/// Universes up to 4 points.
inline std::size_t tensor_dimension(std::size_t n, std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> sa, sb;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & ~a) == 0) sa.push_back(s);
    if ((s & ~b) == 0) sb.push_back(s);
  }
  std::map<std::uint64_t, std::size_t> ia, ib;
  for (std::size_t i = 0; i < sa.size(); ++i) ia[sa[i]] = i;
  for (std::size_t i = 0; i < sb.size(); ++i) ib[sb[i]] = i;
  using Row = std::bitset<256>;
  auto col = [&](std::uint64_t s, std::uint64_t t) { return ia[s] * sb.size() + ib[t]; };
  std::vector<Row> rows;
  for (auto s : sa) {
    for (auto s2 : sa) {
      for (auto t : sb) {
        Row r;
        r.flip(col(s ^ s2, t));
        r.flip(col(s, t));
        r.flip(col(s2, t));
        rows.push_back(r);
      }
    }
  }
  for (auto s : sa) {
    for (auto t : sb) {
      for (auto t2 : sb) {
        Row r;
        r.flip(col(s, t ^ t2));
        r.flip(col(s, t));
        r.flip(col(s, t2));
        rows.push_back(r);
      }
    }
  }
  for (std::uint64_t rr = 0; rr < (std::uint64_t{1} << n); ++rr) {
    for (auto s : sa) {
      for (auto t : sb) {
        Row r;
        r.flip(col(rr & s, t));
        r.flip(col(s, rr & t));
        rows.push_back(r);
      }
    }
  }
  const std::size_t cols = sa.size() * sb.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i][c]) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return cols - rank;
}

}  // namespace oracle
