#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing
// here calls into the algorithms it is used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "ufspace/ufspace.hpp"

namespace ufspace::testing {

inline const char* const kChain3 =
    "semilattice v1\n"
    "elements zero a b\n"
    "zero zero\n"
    "leq zero a\n"
    "leq a b\n";

inline const char* const kDiamond =
    "semilattice v1\n"
    "elements zero a b top\n"
    "zero zero\n"
    "leq zero a\nleq zero b\nleq a top\nleq b top\n";

inline Semilattice chain3() { return parse_semilattice(std::string(kChain3)); }
inline Semilattice diamond() { return parse_semilattice(std::string(kDiamond)); }

/// Greatest lower bound by scanning every element, or nothing.
inline std::optional<Elem> brute_glb(const Semilattice& L, Elem x, Elem y) {
  std::optional<Elem> best;
  for (Elem z = 0; z < L.size(); ++z) {
    if (!L.leq(z, x) || !L.leq(z, y)) continue;
    bool greatest = true;
    for (Elem w = 0; w < L.size(); ++w)
      if (L.leq(w, x) && L.leq(w, y) && !L.leq(w, z)) greatest = false;
    if (greatest) best = z;
  }
  return best;
}

/// Every map satisfying (C1) and (C2), found by trying all n^n maps.
inline std::vector<std::vector<Elem>> brute_complement_maps(const Semilattice& L) {
  const std::size_t n = L.size();
  std::vector<std::vector<Elem>> found;
  std::vector<Elem> f(n, 0);
  while (true) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = f[f[x]] == x;
      for (Elem y = 0; y < n && ok; ++y)
        ok = (L.meet(y, x) == L.zero()) == L.leq(y, f[x]);
    }
    if (ok) found.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return found;
}

// ---- partitions of omega -------------------------------------------------

class PositionSets {
 public:
  explicit PositionSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Labels of positions [0, window) after joining positions that share a
/// color in any of the given colorings.
template <typename... Colorings>
std::vector<std::size_t> connected_positions(std::uint64_t window, const Colorings&... cs) {
  PositionSets sets(window);
  auto link = [&](const auto& coloring) {
    std::map<Color, std::uint64_t> first;
    for (std::uint64_t m = 0; m < window; ++m) {
      auto [it, fresh] = first.try_emplace(coloring.color(m), m);
      if (!fresh) sets.unite(m, it->second);
    }
  };
  (link(cs), ...);
  std::vector<std::size_t> out(window);
  for (std::uint64_t m = 0; m < window; ++m) out[m] = sets.find(m);
  return out;
}

/// True iff position labels `a` and `b` induce the same partition of the
/// window.
template <typename A, typename B>
bool same_partition(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) return false;
  std::map<A, B> fwd;
  std::map<B, A> bwd;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, f_new] = fwd.try_emplace(a[i], b[i]);
    auto [g, g_new] = bwd.try_emplace(b[i], a[i]);
    if (f->second != b[i] || g->second != a[i]) return false;
  }
  return true;
}

inline std::vector<Color> colors_on(const EpPartition& P, std::uint64_t window) {
  std::vector<Color> out(window);
  for (std::uint64_t m = 0; m < window; ++m) out[m] = P.color(m);
  return out;
}

/// Coarse meet checked position by position over [0, window).
inline bool coarse_meet_matches(const EpPartition& P, const EpPartition& Q,
                                const EpPartition& meet, std::uint64_t window) {
  return same_partition(connected_positions(window, P, Q), colors_on(meet, window));
}

/// is_coarser(P, Q) by grouping positions with equal Q-color and checking
/// that P is constant on each group.
inline bool coarser_by_positions(const EpPartition& P, const EpPartition& Q,
                                 std::uint64_t window) {
  const auto groups = connected_positions(window, Q);
  std::map<std::size_t, Color> seen;
  for (std::uint64_t m = 0; m < window; ++m) {
    auto [it, fresh] = seen.try_emplace(groups[m], P.color(m));
    if (it->second != P.color(m)) return false;
  }
  return true;
}

/// Pair-class analysis of (P, Q) over [0, window). A class is infinite iff
/// it shows up among the last `period` positions of the window.
struct JoinOracle {
  bool bottom = false;
  std::vector<std::vector<std::uint64_t>> finite_blocks;
  std::vector<std::uint64_t> labels;
};

inline JoinOracle fine_join_oracle(const EpPartition& P, const EpPartition& Q,
                                   std::uint64_t window) {
  const std::uint64_t period = std::lcm(P.period_length(), Q.period_length());
  JoinOracle out;
  std::map<std::pair<Color, Color>, std::vector<std::uint64_t>> classes;
  for (std::uint64_t m = 0; m < window; ++m) {
    classes[{P.color(m), Q.color(m)}].push_back(m);
    out.labels.push_back(std::uint64_t{P.color(m)} << 32 | Q.color(m));
  }
  for (auto& [key, members] : classes)
    if (members.back() < window - period) out.finite_blocks.push_back(members);
  std::sort(out.finite_blocks.begin(), out.finite_blocks.end());
  out.bottom = !out.finite_blocks.empty();
  return out;
}

/// Random eventually periodic partition: period length 1..max_period,
/// prefix length 0..max_prefix.
inline EpPartition random_ep(std::mt19937_64& rng, std::size_t max_period = 12,
                             std::size_t max_prefix = 8, bool nontrivial = false) {
  while (true) {
    const std::size_t p = std::uniform_int_distribution<std::size_t>(1, max_period)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_prefix)(rng);
    const Color k = std::uniform_int_distribution<Color>(1, static_cast<Color>(std::min<std::size_t>(p, 5)))(rng);
    std::vector<Color> period(p), prefix(n);
    for (auto& c : period) c = std::uniform_int_distribution<Color>(0, k - 1)(rng);
    for (auto& c : prefix) c = period[std::uniform_int_distribution<std::size_t>(0, p - 1)(rng)];
    auto P = EpPartition::from_coloring(prefix, period);
    if (!nontrivial || !P.is_trivial()) return P;
  }
}

inline ScPartition random_sc(std::mt19937_64& rng, std::size_t max_runs = 3,
                             std::uint64_t max_len = 4) {
  auto runs = [&](std::size_t lo) {
    std::vector<std::uint64_t> v(std::uniform_int_distribution<std::size_t>(lo, max_runs)(rng));
    for (auto& r : v) r = std::uniform_int_distribution<std::uint64_t>(1, max_len)(rng);
    return v;
  };
  auto prefix = runs(0);
  auto periodic = runs(1);
  return ScPartition::from_runs(std::move(prefix), std::move(periodic));
}

/// Smallest n in [1, limit] with glue_below(X, n) coarser than Y.
inline std::optional<std::uint64_t> leq_star_search(const ScPartition& X, const ScPartition& Y,
                                                    std::uint64_t limit) {
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (is_coarser(glue_below(X, n), Y)) return n;
  return std::nullopt;
}

}  // namespace ufspace::testing
