#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "ufspace/semilattice.hpp"

namespace ufspace {

/// Upward-closed, meet-closed, zero-free, nonempty set of elements.
/// Stored explicitly; the owning semilattice is passed to every operation.
struct Filter {
  ElemSet members;
  friend bool operator==(const Filter&, const Filter&) = default;
  friend auto operator<=>(const Filter& a, const Filter& b) {
    return a.members <=> b.members;
  }
};

/// Limit for operations that search subsets of the carrier.
inline constexpr std::size_t exhaustive_filter_limit = 20;

inline bool is_filter_base(const Semilattice& L, ElemSet s) {
  if (s.empty() || s.contains(L.zero()) || !s.subset_of(L.carrier())) return false;
  for (Elem x : s)
    for (Elem y : s)
      if (y > x && !s.contains(L.meet(x, y))) return false;
  return true;
}

inline bool is_filter(const Semilattice& L, ElemSet s) {
  if (s.empty() || s.contains(L.zero()) || !s.subset_of(L.carrier())) return false;
  for (Elem x : s)
    if (!L.up(x).subset_of(s)) return false;
  return is_filter_base(L, s);
}

inline ElemSet upward_closure(const Semilattice& L, ElemSet s) {
  ElemSet out;
  for (Elem x : s) out |= L.up(x);
  return out;
}

/// Smallest filter containing `seed`. An arbitrary zero-free seed is first
/// closed under meets; throws ZeroGenerated if that closure reaches zero.
inline Filter generated_filter(const Semilattice& L, ElemSet seed) {
  if (seed.empty()) throw InvalidArgument("filter seed must be nonempty");
  if (!seed.subset_of(L.carrier())) throw UnknownElement("seed member outside carrier");
  ElemSet base = seed;
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x : base)
      for (Elem y : base) {
        const Elem m = L.meet(x, y);
        if (!base.contains(m)) {
          base.insert(m);
          grew = true;
        }
      }
  }
  if (base.contains(L.zero())) throw ZeroGenerated();
  return Filter{upward_closure(L, base)};
}

/// [{x}] for nonzero x.
inline Filter principal_filter(const Semilattice& L, Elem x) {
  if (x == L.zero()) throw ZeroGenerated();
  return Filter{L.up(x)};
}

/// Every filter on L, by brute force over subsets of the nonzero elements.
inline std::vector<Filter> all_filters(const Semilattice& L) {
  if (L.size() > exhaustive_filter_limit)
    throw SizeLimit("filter enumeration supports carriers up to " +
                    std::to_string(exhaustive_filter_limit));
  ElemSet nonzero = L.carrier();
  nonzero.erase(L.zero());
  std::vector<Filter> out;
  // Enumerate submasks of `nonzero`.
  const std::uint64_t full = nonzero.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) {
    const auto s = ElemSet::from_bits(sub);
    if (is_filter(L, s)) out.push_back(Filter{s});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// For every x: x in F, or some y in F is orthogonal to x.
inline bool is_ultrafilter_criterion(const Semilattice& L, const Filter& F) {
  if (!is_filter(L, F.members)) return false;
  for (Elem x = 0; x < L.size(); ++x) {
    if (F.members.contains(x)) continue;
    bool refuted = false;
    for (Elem y : F.members)
      if (orthogonal(L, y, x)) {
        refuted = true;
        break;
      }
    if (!refuted) return false;
  }
  return true;
}

/// No filter properly contains F; decided by trying every proper superset.
inline bool is_ultrafilter_maximality(const Semilattice& L, const Filter& F) {
  if (!is_filter(L, F.members)) return false;
  if (L.size() > exhaustive_filter_limit)
    throw SizeLimit("maximality search supports carriers up to " +
                    std::to_string(exhaustive_filter_limit));
  ElemSet outside = F.members.complement(L.size());
  outside.erase(L.zero());
  const std::uint64_t full = outside.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full)
    if (is_filter(L, F.members | ElemSet::from_bits(sub))) return false;
  return true;
}

/// The ultrafilters of a finite semilattice: one principal filter per atom,
/// in atom order.
inline std::vector<Filter> all_ultrafilters(const Semilattice& L) {
  if (L.size() == 1) throw EmptyLattice();
  std::vector<Filter> out;
  for (Elem a : atoms(L)) out.push_back(principal_filter(L, a));
  return out;
}

/// Maximal elements of all_filters(L), by direct search. Used to cross-check
/// all_ultrafilters.
inline std::vector<Filter> maximal_filters(const Semilattice& L) {
  const auto filters = all_filters(L);
  std::vector<Filter> out;
  for (const auto& F : filters) {
    bool maximal = true;
    for (const auto& G : filters)
      if (G != F && F.members.subset_of(G.members)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(F);
  }
  return out;
}

/// Every nonempty subfamily has a nonzero meet (subset search).
inline bool has_fip_exhaustive(const Semilattice& L, ElemSet X) {
  if (X.size() > exhaustive_filter_limit)
    throw SizeLimit("subfamily search supports families up to " +
                    std::to_string(exhaustive_filter_limit));
  const std::uint64_t full = X.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full)
    if (L.meet_all(ElemSet::from_bits(sub)) == L.zero()) return false;
  return true;
}

/// On a finite family the full meet decides the finite intersection property.
inline bool has_fip(const Semilattice& L, ElemSet X) {
  if (!X.subset_of(L.carrier())) throw UnknownElement("family member outside carrier");
  const bool fip = X.empty() || L.meet_all(X) != L.zero();
  assert(X.size() > 12 || fip == has_fip_exhaustive(L, X));
  return fip;
}

/// Greedy ultrafilter through X: start from the filter generated by X, then
/// scan the carrier in index order and adjoin every element compatible with
/// the current filter. A rejected element stays orthogonal to every later
/// generator, so one pass yields an ultrafilter.
inline Filter extend_to_ultrafilter(const Semilattice& L, ElemSet X) {
  if (!has_fip(L, X)) throw NoFip();
  std::optional<Elem> generator;
  if (!X.empty()) generator = L.meet_all(X);
  for (Elem y = 0; y < L.size(); ++y) {
    if (y == L.zero()) continue;
    if (!generator) {
      generator = y;
      continue;
    }
    if (L.leq(*generator, y)) continue;
    const Elem m = L.meet(*generator, y);
    if (m != L.zero()) generator = m;
  }
  if (!generator) throw EmptyLattice();
  return Filter{L.up(*generator)};
}

/// The generating element if F = [{x}], else nothing.
inline std::optional<Elem> is_principal(const Semilattice& L, const Filter& F) {
  if (F.members.empty()) return std::nullopt;
  const Elem m = L.meet_all(F.members);
  if (F.members.contains(m) && L.up(m) == F.members) return m;
  return std::nullopt;
}

}  // namespace ufspace
