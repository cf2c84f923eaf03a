#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ufspace/bitset.hpp"
#include "ufspace/error.hpp"

namespace ufspace {

/// Index of an element in a semilattice carrier.
using Elem = std::uint32_t;

struct ElemTag;
using ElemSet = SmallSet<ElemTag>;

/// Unvalidated description: element names, the designated zero, and
/// generating order pairs (lower, upper). The order is their closure.
struct RawSemilattice {
  std::vector<std::string> elements;
  std::string zero;
  std::vector<std::pair<std::string, std::string>> leq;
};

/// A finite meet-semilattice with least element. Immutable once built; the
/// order is stored as up/down sets and meets as a full table.
class Semilattice {
 public:
  static constexpr std::size_t max_size = ElemSet::capacity;

  /// Builds from a complete order given as up-sets (up[x] = {y : x <= y}).
  /// Reflexivity is added; everything else is checked.
  static Semilattice from_order(std::vector<std::string> names, Elem zero,
                                std::vector<ElemSet> up) {
    const std::size_t n = names.size();
    if (n == 0) throw InvalidArgument("semilattice needs at least one element");
    if (n > max_size)
      throw SizeLimit("semilattice carrier limited to " +
                      std::to_string(max_size) + " elements");
    if (up.size() != n) throw InvalidArgument("order size mismatch");
    if (zero >= n) throw InvalidArgument("zero index out of range");

    Semilattice L;
    L.names_ = std::move(names);
    for (Elem i = 0; i < n; ++i) {
      if (L.names_[i].empty()) throw SyntaxError("empty element identifier");
      if (!L.index_.emplace(L.names_[i], i).second)
        throw SyntaxError("duplicate element '" + L.names_[i] + "'");
    }
    L.zero_ = zero;
    L.up_ = std::move(up);
    L.down_.assign(n, ElemSet{});
    for (Elem x = 0; x < n; ++x) {
      L.up_[x].insert(x);
      if (!L.up_[x].subset_of(ElemSet::first(n)))
        throw InvalidArgument("order mentions elements outside the carrier");
    }
    for (Elem x = 0; x < n; ++x)
      for (Elem y : L.up_[x]) L.down_[y].insert(x);

    for (Elem x = 0; x < n; ++x)
      for (Elem y : L.up_[x]) {
        if (y != x && L.up_[y].contains(x))
          throw CycleError(L.names_[x], L.names_[y]);
        if (!L.up_[y].subset_of(L.up_[x]))
          throw InvalidArgument("order is not transitive at '" + L.names_[x] +
                                "' <= '" + L.names_[y] + "'");
      }
    for (Elem x = 0; x < n; ++x)
      if (!L.up_[zero].contains(x)) throw NoZeroError(L.names_[zero], L.names_[x]);

    L.meet_.assign(n * n, 0);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x; y < n; ++y) {
        const ElemSet lower = L.down_[x] & L.down_[y];
        std::optional<Elem> glb;
        for (Elem z : lower)
          if (lower.subset_of(L.down_[z])) glb = z;
        if (!glb) throw NoMeetError(L.names_[x], L.names_[y]);
        L.meet_[x * n + y] = L.meet_[y * n + x] = *glb;
      }
    }
    return L;
  }

  std::size_t size() const { return names_.size(); }
  Elem zero() const { return zero_; }
  const std::string& name(Elem x) const { return names_.at(check(x)); }
  const std::vector<std::string>& names() const { return names_; }

  Elem index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownElement(id);
    return it->second;
  }

  bool leq(Elem x, Elem y) const { return up_[check(x)].contains(check(y)); }
  Elem meet(Elem x, Elem y) const { return meet_[check(x) * size() + check(y)]; }
  bool leq(const std::string& x, const std::string& y) const {
    return leq(index_of(x), index_of(y));
  }
  const std::string& meet(const std::string& x, const std::string& y) const {
    return names_[meet(index_of(x), index_of(y))];
  }

  /// {y : x <= y}
  ElemSet up(Elem x) const { return up_[check(x)]; }
  /// {y : y <= x}
  ElemSet down(Elem x) const { return down_[check(x)]; }
  ElemSet carrier() const { return ElemSet::first(size()); }

  /// Meet of a nonempty set.
  Elem meet_all(ElemSet s) const {
    if (s.empty()) throw InvalidArgument("meet of an empty family");
    auto it = s.begin();
    Elem m = *it;
    for (++it; it != s.end(); ++it) m = meet(m, *it);
    return m;
  }

  std::vector<std::string> names_of(ElemSet s) const {
    std::vector<std::string> out;
    for (Elem x : s) out.push_back(names_[x]);
    return out;
  }

  ElemSet set_of(const std::vector<std::string>& ids) const {
    ElemSet s;
    for (const auto& id : ids) s.insert(index_of(id));
    return s;
  }

  friend bool operator==(const Semilattice& a, const Semilattice& b) {
    return a.names_ == b.names_ && a.zero_ == b.zero_ && a.up_ == b.up_;
  }

 private:
  Semilattice() = default;

  Elem check(Elem x) const {
    if (x >= names_.size()) throw UnknownElement("#" + std::to_string(x));
    return x;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  Elem zero_ = 0;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<Elem> meet_;
};

/// Closes the generating pairs reflexively and transitively, then checks
/// the semilattice laws and tabulates meets.
inline Semilattice validate(const RawSemilattice& raw) {
  const std::size_t n = raw.elements.size();
  if (n == 0) throw SyntaxError("no elements declared");
  if (n > Semilattice::max_size)
    throw SizeLimit("semilattice carrier limited to " +
                    std::to_string(Semilattice::max_size) + " elements");
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(raw.elements[i], i).second)
      throw SyntaxError("duplicate element '" + raw.elements[i] + "'");
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw UnknownElement(id);
    return it->second;
  };

  std::vector<ElemSet> up(n);
  for (Elem i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [lo, hi] : raw.leq) up[lookup(lo)].insert(lookup(hi));
  // Warshall closure on up-sets.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];

  return Semilattice::from_order(raw.elements, lookup(raw.zero), std::move(up));
}

inline bool orthogonal(const Semilattice& L, Elem x, Elem y) {
  return L.meet(x, y) == L.zero();
}

/// Nonzero elements with nothing strictly between them and zero.
inline ElemSet atoms(const Semilattice& L) {
  ElemSet out;
  for (Elem x = 0; x < L.size(); ++x) {
    if (x == L.zero()) continue;
    ElemSet below = L.down(x);
    below.erase(x);
    below.erase(L.zero());
    if (below.empty()) out.insert(x);
  }
  return out;
}

struct SplitWitness {
  Elem x;
  Elem y0;
  Elem y1;
};

struct DownwardSplitting {
  bool holds = true;
  /// One orthogonal pair below each nonzero non-atom (when `holds`).
  std::vector<SplitWitness> witnesses;
  /// First nonzero non-atom without such a pair (when `!holds`).
  std::optional<Elem> violator;
};

inline DownwardSplitting is_downward_splitting(const Semilattice& L) {
  DownwardSplitting result;
  const ElemSet atom_set = atoms(L);
  for (Elem x = 0; x < L.size(); ++x) {
    if (x == L.zero() || atom_set.contains(x)) continue;
    ElemSet below = L.down(x);
    below.erase(L.zero());
    std::optional<SplitWitness> found;
    for (Elem a : below) {
      for (Elem b : below)
        if (a < b && orthogonal(L, a, b)) {
          found = SplitWitness{x, a, b};
          break;
        }
      if (found) break;
    }
    if (!found) {
      result.holds = false;
      result.witnesses.clear();
      result.violator = x;
      return result;
    }
    result.witnesses.push_back(*found);
  }
  return result;
}

/// An involution ~ with  meet(y, x) = 0  <=>  y <= ~x.
class ComplementMap {
 public:
  explicit ComplementMap(std::vector<Elem> mapping) : mapping_(std::move(mapping)) {}
  Elem operator()(Elem x) const { return mapping_.at(x); }
  const std::vector<Elem>& mapping() const { return mapping_; }
  friend bool operator==(const ComplementMap&, const ComplementMap&) = default;

 private:
  std::vector<Elem> mapping_;
};

struct Complementation {
  std::optional<ComplementMap> map;
  /// First element where the forced candidate fails to exist or to satisfy
  /// (C1)/(C2); set iff `map` is empty.
  std::optional<Elem> failing;
  explicit operator bool() const { return map.has_value(); }
};

/// {y : meet(y, x) = 0}
inline ElemSet orthogonal_set(const Semilattice& L, Elem x) {
  ElemSet s;
  for (Elem y = 0; y < L.size(); ++y)
    if (orthogonal(L, y, x)) s.insert(y);
  return s;
}

/// Checks (C1) and (C2) for every element; returns the first violator.
inline std::optional<Elem> first_complement_violation(const Semilattice& L,
                                                      const ComplementMap& c) {
  if (c.mapping().size() != L.size()) return Elem{0};
  for (Elem x = 0; x < L.size(); ++x) {
    if (c(x) >= L.size() || c(c(x)) != x) return x;
    if (orthogonal_set(L, x) != L.down(c(x))) return x;
  }
  return std::nullopt;
}

/// (C2) pins ~x to the maximum of the orthogonal set of x, so the map is
/// unique when it exists.
inline Complementation complementation(const Semilattice& L) {
  std::vector<Elem> candidate(L.size());
  for (Elem x = 0; x < L.size(); ++x) {
    const ElemSet orth = orthogonal_set(L, x);
    std::optional<Elem> top;
    for (Elem y : orth)
      if (orth.subset_of(L.down(y))) top = y;
    if (!top) return {std::nullopt, x};
    candidate[x] = *top;
  }
  ComplementMap map(std::move(candidate));
  if (auto bad = first_complement_violation(L, map)) return {std::nullopt, bad};
  return {std::move(map), std::nullopt};
}

/// True iff `f` is a bijection with x <= y in A  <=>  f(x) <= f(y) in B.
inline bool is_isomorphism(const Semilattice& A, const Semilattice& B,
                           const std::vector<Elem>& f) {
  if (A.size() != B.size() || f.size() != A.size()) return false;
  ElemSet image;
  for (Elem x : f) {
    if (x >= B.size()) return false;
    image.insert(x);
  }
  if (image.size() != A.size()) return false;
  for (Elem x = 0; x < A.size(); ++x)
    for (Elem y = 0; y < A.size(); ++y)
      if (A.leq(x, y) != B.leq(f[x], f[y])) return false;
  return true;
}

/// The reversed semilattice: same carrier, x below y iff ~x <= ~y, least
/// element ~0. Throws NotComplemented unless `cmap` verifies and ~ is an
/// isomorphism onto the result.
inline Semilattice reversed(const Semilattice& L, const ComplementMap& cmap) {
  if (first_complement_violation(L, cmap))
    throw NotComplemented("map is not a complementation of the semilattice");
  std::vector<ElemSet> up(L.size());
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y)
      if (L.leq(cmap(x), cmap(y))) up[x].insert(y);
  Semilattice R = Semilattice::from_order(L.names(), cmap(L.zero()), std::move(up));
  if (!is_isomorphism(L, R, cmap.mapping()))
    throw NotComplemented("complement map is not an isomorphism onto the reversal");
  return R;
}

}  // namespace ufspace
