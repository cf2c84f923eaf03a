#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ufspace/semilattice.hpp"

namespace ufspace {

/// 0 < 1 < ... < n-1
inline Semilattice chain(std::size_t n) {
  if (n < 1) throw InvalidArgument("chain needs n >= 1");
  if (n > Semilattice::max_size) throw SizeLimit("chain too long");
  std::vector<std::string> names;
  std::vector<ElemSet> up(n);
  for (Elem i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (Elem j = i; j < n; ++j) up[i].insert(j);
  }
  return Semilattice::from_order(std::move(names), 0, std::move(up));
}

/// Subsets of {0, ..., n-1} under inclusion. Element k is the subset with
/// bit mask k, named like "{0,2}".
inline Semilattice powerset_lattice(std::size_t n) {
  if (n < 1) throw InvalidArgument("powerset_lattice needs n >= 1");
  if (n > 6) throw SizeLimit("powerset_lattice supports n <= 6");
  const Elem count = Elem{1} << n;
  std::vector<std::string> names;
  std::vector<ElemSet> up(count);
  for (Elem s = 0; s < count; ++s) {
    std::string name = "{";
    for (Elem b = 0; b < n; ++b)
      if (s >> b & 1U) {
        if (name.size() > 1) name += ',';
        name += std::to_string(b);
      }
    names.push_back(name + "}");
    for (Elem t = 0; t < count; ++t)
      if ((s & ~t) == 0) up[s].insert(t);
  }
  return Semilattice::from_order(std::move(names), 0, std::move(up));
}

namespace detail {

// Restricted growth strings of length n in lexicographic order; the first is
// the one-block partition.
inline std::vector<std::vector<unsigned>> set_partitions(std::size_t n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> rgs(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned used) {
    if (i == n) {
      out.push_back(rgs);
      return;
    }
    for (unsigned c = 0; c <= used; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

inline std::string block_notation(const std::vector<unsigned>& rgs) {
  unsigned blocks = 0;
  for (unsigned c : rgs) blocks = std::max(blocks, c + 1);
  std::string out;
  for (unsigned b = 0; b < blocks; ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < rgs.size(); ++i)
      if (rgs[i] == b) out += std::to_string(i);
  }
  return out;
}

}  // namespace detail

/// Partitions of {0, ..., n-1} ordered by coarsening: x <= y iff every block
/// of x is a union of blocks of y. Zero is the one-block partition; the meet
/// is the finest common coarsening. Elements are named in block notation,
/// e.g. "01|2".
inline Semilattice finite_partition_lattice(std::size_t n) {
  if (n < 1) throw InvalidArgument("finite_partition_lattice needs n >= 1");
  if (n > 5) throw SizeLimit("finite_partition_lattice supports n <= 5");
  const auto parts = detail::set_partitions(n);
  std::vector<std::string> names;
  std::vector<ElemSet> up(parts.size());
  for (Elem x = 0; x < parts.size(); ++x) {
    names.push_back(detail::block_notation(parts[x]));
    for (Elem y = 0; y < parts.size(); ++y) {
      bool coarser = true;
      for (std::size_t i = 0; i < n && coarser; ++i)
        for (std::size_t j = 0; j < n && coarser; ++j)
          if (parts[y][i] == parts[y][j] && parts[x][i] != parts[x][j]) coarser = false;
      if (coarser) up[x].insert(y);
    }
  }
  return Semilattice::from_order(std::move(names), 0, std::move(up));
}

/// Streams every meet-semilattice whose carrier is {0, a, b, ...} with zero
/// "0", for carrier sizes 1..max_size. Instances are labeled: isomorphic
/// copies under relabeling of the nonzero elements all appear.
template <typename Visitor>
void for_each_semilattice(std::size_t max_size, Visitor&& visit) {
  if (max_size < 1) throw InvalidArgument("carrier size must be >= 1");
  if (max_size > 5) throw SizeLimit("exhaustive enumeration supports sizes <= 5");
  static const char* const labels[] = {"0", "a", "b", "c", "d"};
  for (std::size_t size = 1; size <= max_size; ++size) {
    const std::size_t k = size - 1;
    std::vector<std::pair<unsigned, unsigned>> slots;
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j)
        if (i != j) slots.emplace_back(i, j);
    const std::vector<std::string> names(labels, labels + size);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      // strict order among the nonzero elements 1..k
      std::vector<ElemSet> up(size);
      up[0] = ElemSet::first(size);
      for (Elem i = 1; i < size; ++i) up[i].insert(i);
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U) up[slots[s].first + 1].insert(slots[s].second + 1);
      bool partial_order = true;
      for (Elem i = 1; i < size && partial_order; ++i)
        for (Elem j : up[i])
          if ((j != i && up[j].contains(i)) || !up[j].subset_of(up[i])) {
            partial_order = false;
            break;
          }
      if (!partial_order) continue;
      std::optional<Semilattice> L;
      try {
        L.emplace(Semilattice::from_order(names, 0, std::move(up)));
      } catch (const NoMeetError&) {
        continue;
      }
      visit(std::move(*L));
    }
  }
}

inline std::vector<Semilattice> all_semilattices(std::size_t max_size) {
  std::vector<Semilattice> out;
  for_each_semilattice(max_size, [&](Semilattice L) { out.push_back(std::move(L)); });
  return out;
}

}  // namespace ufspace
