#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ufspace/ep_partition.hpp"

namespace ufspace {

/// Cantor pairing pi(i, j) = (i + j)(i + j + 1)/2 + j.
constexpr std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j) {
  return (i + j) * (i + j + 1) / 2 + j;
}

/// Inverse of `cantor_pair`: m = pi(i, j).
constexpr std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t m) {
  // largest w with w(w+1)/2 <= m
  std::uint64_t w = 0;
  {
    std::uint64_t lo = 0, hi = 1;
    while (hi * (hi + 1) / 2 <= m) hi *= 2;
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo + 1) / 2;
      if (mid * (mid + 1) / 2 <= m) lo = mid;
      else hi = mid - 1;
    }
    w = lo;
  }
  const std::uint64_t j = m - w * (w + 1) / 2;
  return {w - j, j};
}

/// Least element of column j, pi(0, j) = (j^2 + 3j)/2.
constexpr std::uint64_t column_min(std::uint64_t j) { return j * (j + 3) / 2; }

/// Number of columns whose minimum is below n, i.e. the columns that meet
/// {0, ..., n-1}.
constexpr std::uint64_t columns_touched(std::uint64_t n) {
  std::uint64_t j = 0;
  while (column_min(j) < n) ++j;
  return j;
}

/// Partition of omega into infinitely many infinite blocks: the columns
/// {pi(i, j) : i in omega} are grouped into consecutive runs, block t being
/// the union of the t-th run of columns. The run lengths are eventually
/// periodic. Canonical form: primitive periodic part, shortest prefix.
class ScPartition {
 public:
  static ScPartition from_runs(std::vector<std::uint64_t> prefix,
                               std::vector<std::uint64_t> periodic) {
    if (periodic.empty()) throw SyntaxError("periodic runs must be nonempty");
    for (auto r : prefix)
      if (r == 0) throw ZeroRunError();
    for (auto r : periodic)
      if (r == 0) throw ZeroRunError();
    detail::minimize_eventually_periodic(prefix, periodic);
    ScPartition X;
    X.prefix_ = std::move(prefix);
    X.periodic_ = std::move(periodic);
    X.prefix_cuts_.push_back(0);
    for (auto r : X.prefix_) X.prefix_cuts_.push_back(X.prefix_cuts_.back() + r);
    X.periodic_offsets_.push_back(0);
    for (std::size_t i = 0; i + 1 < X.periodic_.size(); ++i)
      X.periodic_offsets_.push_back(X.periodic_offsets_.back() + X.periodic_[i]);
    X.period_extent_ = X.periodic_offsets_.back() + X.periodic_.back();
    if (X.prefix_cuts_.back() > max_horizon || X.period_extent_ > max_horizon)
      throw SizeLimit("run lengths too large");
    return X;
  }

  /// The column partition: every column is its own block.
  static ScPartition columns() { return from_runs({}, {1}); }

  const std::vector<std::uint64_t>& prefix_runs() const { return prefix_; }
  const std::vector<std::uint64_t>& periodic_runs() const { return periodic_; }
  /// Column index where the periodic runs start.
  std::uint64_t prefix_extent() const { return prefix_cuts_.back(); }
  /// Columns covered by one repetition of the periodic runs.
  std::uint64_t period_extent() const { return period_extent_; }

  /// The t-th element of CutSet = {0} ∪ {partial sums of the runs}; block t
  /// spans columns [cut(t), cut(t+1)).
  std::uint64_t cut(std::uint64_t t) const {
    if (t < prefix_cuts_.size()) return prefix_cuts_[t];
    const std::uint64_t u = t - prefix_.size();
    return prefix_extent() + u / periodic_.size() * period_extent_ +
           periodic_offsets_[u % periodic_.size()];
  }

  bool is_cut(std::uint64_t c) const {
    if (c < prefix_extent())
      return std::binary_search(prefix_cuts_.begin(), prefix_cuts_.end(), c);
    const std::uint64_t r = (c - prefix_extent()) % period_extent_;
    return std::binary_search(periodic_offsets_.begin(), periodic_offsets_.end(), r);
  }

  /// Index of the block containing column j.
  std::uint64_t group_of_column(std::uint64_t j) const {
    if (j < prefix_extent())
      return static_cast<std::uint64_t>(
          std::upper_bound(prefix_cuts_.begin(), prefix_cuts_.end(), j) -
          prefix_cuts_.begin() - 1);
    const std::uint64_t u = j - prefix_extent();
    const std::uint64_t r = u % period_extent_;
    const auto idx = static_cast<std::uint64_t>(
        std::upper_bound(periodic_offsets_.begin(), periodic_offsets_.end(), r) -
        periodic_offsets_.begin() - 1);
    return prefix_.size() + u / period_extent_ * periodic_.size() + idx;
  }

  /// Index of the block containing m.
  std::uint64_t block_of(std::uint64_t m) const { return group_of_column(cantor_unpair(m).second); }

  friend bool operator==(const ScPartition& a, const ScPartition& b) {
    return a.prefix_ == b.prefix_ && a.periodic_ == b.periodic_;
  }

 private:
  ScPartition() = default;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> periodic_;
  std::vector<std::uint64_t> prefix_cuts_;       // 0, r1, r1+r2, ..., prefix_extent
  std::vector<std::uint64_t> periodic_offsets_;  // 0, q1, q1+q2, ... (excluding the full sum)
  std::uint64_t period_extent_ = 0;
};

/// Parses `sc;runs=r1,...;periodic=q1,...` (empty prefix written `runs=`).
inline ScPartition parse_sc(std::string_view literal) {
  const auto [runs, periodic] = detail::split_literal(literal, "sc", "runs", "periodic");
  auto q = detail::parse_number_list(periodic, "periodic");
  if (q.empty()) throw SyntaxError("periodic runs must be nonempty");
  return ScPartition::from_runs(detail::parse_number_list(runs, "runs"), std::move(q));
}

inline std::string format(const ScPartition& X) {
  return "sc;runs=" + detail::join_numbers(X.prefix_runs()) +
         ";periodic=" + detail::join_numbers(X.periodic_runs());
}

/// Column count past which both cut sets are periodic with a common period:
/// max prefix extent + lcm of period extents.
inline std::uint64_t horizon(const ScPartition& X, const ScPartition& Y) {
  return std::max(X.prefix_extent(), Y.prefix_extent()) +
         detail::checked_lcm(X.period_extent(), Y.period_extent());
}

/// The first `count` cuts.
inline std::vector<std::uint64_t> first_cuts(const ScPartition& X, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(X.cut(t));
  return out;
}

/// Lazy, unbounded view of the block minima; block t has minimum
/// pi(0, cut(t)), strictly increasing in t.
inline auto mmins(const ScPartition& X) {
  return std::views::iota(std::uint64_t{0}) |
         std::views::transform([X](std::uint64_t t) { return column_min(X.cut(t)); });
}

/// X ⊑ Y: every block of X is a union of blocks of Y, i.e.
/// CutSet(X) ⊆ CutSet(Y).
inline bool is_coarser(const ScPartition& X, const ScPartition& Y) {
  const std::uint64_t h = horizon(X, Y);
  for (std::uint64_t t = 0, c = 0; (c = X.cut(t)) < h; ++t)
    if (!Y.is_cut(c)) return false;
  return true;
}

/// The meet leaves the class: only finitely many common cuts, so the finest
/// common coarsening has finitely many blocks (the last one unbounded).
struct FiniteRemainder {
  std::vector<std::uint64_t> cuts;
  friend bool operator==(const FiniteRemainder&, const FiniteRemainder&) = default;
};

using ScMeet = std::variant<ScPartition, FiniteRemainder>;

/// X ⊓ Y: cuts are CutSet(X) ∩ CutSet(Y).
inline ScMeet coarse_meet(const ScPartition& X, const ScPartition& Y) {
  const std::uint64_t start = std::max(X.prefix_extent(), Y.prefix_extent());
  const std::uint64_t len = detail::checked_lcm(X.period_extent(), Y.period_extent());
  std::vector<std::uint64_t> head, tail;
  for (std::uint64_t t = 0, c = 0; (c = X.cut(t)) < start + len; ++t)
    if (Y.is_cut(c)) (c < start ? head : tail).push_back(c);
  if (tail.empty()) return FiniteRemainder{std::move(head)};

  head.push_back(tail.front());
  tail.push_back(tail.front() + len);
  std::vector<std::uint64_t> prefix, periodic;
  for (std::size_t i = 1; i < head.size(); ++i) prefix.push_back(head[i] - head[i - 1]);
  for (std::size_t i = 1; i < tail.size(); ++i) periodic.push_back(tail[i] - tail[i - 1]);
  return ScPartition::from_runs(std::move(prefix), std::move(periodic));
}

/// The meet is the one-block partition {omega}.
inline bool orth_coarse(const ScPartition& X, const ScPartition& Y) {
  const auto meet = coarse_meet(X, Y);
  const auto* rem = std::get_if<FiniteRemainder>(&meet);
  return rem && rem->cuts == std::vector<std::uint64_t>{0};
}

/// Block n: columns [first_column, end_column).
struct ScBlock {
  std::uint64_t index;
  std::uint64_t first_column;
  std::uint64_t end_column;
  std::uint64_t min;

  bool contains(std::uint64_t m) const {
    const auto j = cantor_unpair(m).second;
    return first_column <= j && j < end_column;
  }
};

inline ScBlock nth_block(const ScPartition& X, std::uint64_t n) {
  const std::uint64_t first = X.cut(n);
  return {n, first, X.cut(n + 1), column_min(first)};
}

/// X ⊓ {n}: glue all blocks that meet {0, ..., n-1}. Those blocks are an
/// initial run of groups, so the result has one enlarged leading run.
inline ScPartition glue_below(const ScPartition& X, std::uint64_t n) {
  if (n == 0) throw IndexOutOfRange("glue_below needs n >= 1");
  const std::uint64_t last_group = X.group_of_column(columns_touched(n) - 1);
  const std::uint64_t next = last_group + 1;
  std::vector<std::uint64_t> prefix{X.cut(next)};
  std::vector<std::uint64_t> periodic = X.periodic_runs();
  const auto& pre = X.prefix_runs();
  if (next <= pre.size()) {
    prefix.insert(prefix.end(), pre.begin() + static_cast<std::ptrdiff_t>(next), pre.end());
  } else {
    const auto shift = static_cast<std::ptrdiff_t>((next - pre.size()) % periodic.size());
    std::rotate(periodic.begin(), periodic.begin() + shift, periodic.end());
  }
  return ScPartition::from_runs(std::move(prefix), std::move(periodic));
}

/// Outcome of X ⊑* Y. When it holds, `threshold` is the least n with
/// glue_below(X, n) ⊑ Y. Otherwise `recurring_cut` is a cut of X missing
/// from Y that recurs every `recurrence` columns, so no gluing removes all
/// such cuts.
struct LeqStar {
  std::optional<std::uint64_t> threshold;
  std::optional<std::uint64_t> recurring_cut;
  std::uint64_t recurrence = 0;
  explicit operator bool() const { return threshold.has_value(); }
};

/// X ⊑* Y  <=>  CutSet(X) \ CutSet(Y) is finite. Gluing below n removes
/// exactly the cuts inside the glued region, so the least threshold is one
/// past the minimum of the column at the largest offending cut.
inline LeqStar leq_star(const ScPartition& X, const ScPartition& Y) {
  const std::uint64_t start = std::max(X.prefix_extent(), Y.prefix_extent());
  const std::uint64_t len = detail::checked_lcm(X.period_extent(), Y.period_extent());
  std::optional<std::uint64_t> last_missing;
  for (std::uint64_t t = 0, c = 0; (c = X.cut(t)) < start + len; ++t) {
    if (Y.is_cut(c)) continue;
    if (c >= start) return {std::nullopt, c, len};
    last_missing = c;
  }
  const std::uint64_t n = last_missing ? column_min(*last_missing) + 1 : 1;
  if (!is_coarser(glue_below(X, n), Y) || (n > 1 && is_coarser(glue_below(X, n - 1), Y)))
    throw std::logic_error("leq_star threshold failed verification");
  return {n, std::nullopt, 0};
}

}  // namespace ufspace
