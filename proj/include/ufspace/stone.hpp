#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ufspace/filter.hpp"
#include "ufspace/report.hpp"
#include "ufspace/semilattice.hpp"

namespace ufspace {

struct PointTag;
/// Set of ultrafilter points, indexed by position in StoneSpace::points.
using PointSet = SmallSet<PointTag>;

enum class Side { pos, neg };

inline const char* to_string(Side s) { return s == Side::pos ? "pos" : "neg"; }

/// Largest point set for which topologies are materialized (2^n opens).
inline constexpr std::size_t max_points = 20;

/// Explicit topology: every open set, sorted.
class OpenFamily {
 public:
  OpenFamily() = default;
  explicit OpenFamily(std::vector<PointSet> sets) : sets_(std::move(sets)) {
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }
  const std::vector<PointSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(PointSet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s);
  }
  friend bool operator==(const OpenFamily&, const OpenFamily&) = default;

 private:
  std::vector<PointSet> sets_;
};

namespace detail {

inline void check_point_count(std::size_t n) {
  if (n > max_points)
    throw SizeLimit("topologies are materialized for at most " +
                    std::to_string(max_points) + " points");
}

}  // namespace detail

/// Topology on {0..n-1} generated by a subbase: closure under finite
/// intersections first (the empty intersection is the whole space), then
/// under arbitrary unions.
inline OpenFamily topology_from_subbase(const std::vector<PointSet>& subbase,
                                        std::size_t n) {
  detail::check_point_count(n);
  const std::size_t universe = std::size_t{1} << n;
  std::vector<char> in_base(universe, 0);
  std::vector<PointSet> base{PointSet::first(n)};
  in_base[PointSet::first(n).bits()] = 1;
  for (PointSet g : subbase) {
    const std::size_t existing = base.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const PointSet cut = base[i] & g;
      if (!in_base[cut.bits()]) {
        in_base[cut.bits()] = 1;
        base.push_back(cut);
      }
    }
  }
  std::vector<char> is_open(universe, 0);
  std::vector<PointSet> opens{PointSet{}};
  is_open[0] = 1;
  for (PointSet b : base) {
    const std::size_t existing = opens.size();
    for (std::size_t i = 0; i < existing; ++i) {
      const PointSet u = opens[i] | b;
      if (!is_open[u.bits()]) {
        is_open[u.bits()] = 1;
        opens.push_back(u);
      }
    }
  }
  return OpenFamily(std::move(opens));
}

/// {p : x in p}
inline PointSet pos_set(const Semilattice& L, const std::vector<Filter>& points, Elem x) {
  if (x >= L.size()) throw UnknownElement("#" + std::to_string(x));
  PointSet s;
  for (std::uint32_t i = 0; i < points.size(); ++i)
    if (points[i].members.contains(x)) s.insert(i);
  return s;
}

/// {p : x not in p}
inline PointSet neg_set(const Semilattice& L, const std::vector<Filter>& points, Elem x) {
  return pos_set(L, points, x).complement(points.size());
}

/// Ultrafilter space of a finite semilattice with the positive or negative
/// topology materialized.
struct StoneSpace {
  Semilattice lattice;
  std::vector<Filter> points;
  Side side;
  OpenFamily opens;

  std::size_t point_count() const { return points.size(); }
  PointSet all() const { return PointSet::first(points.size()); }
  PointSet pos_set(Elem x) const { return ufspace::pos_set(lattice, points, x); }
  PointSet neg_set(Elem x) const { return ufspace::neg_set(lattice, points, x); }
  bool is_open(PointSet s) const { return opens.contains(s); }

  /// The generating family: (x)+ for POS, (x)- for NEG, over the carrier.
  std::vector<PointSet> generators() const {
    std::vector<PointSet> out;
    for (Elem x = 0; x < lattice.size(); ++x)
      out.push_back(side == Side::pos ? pos_set(x) : neg_set(x));
    return out;
  }

  /// Label "[x]" using the principal generator of the point.
  std::string point_name(std::uint32_t p) const {
    auto g = is_principal(lattice, points.at(p));
    return "[" + (g ? lattice.name(*g) : std::string("?")) + "]";
  }
};

inline StoneSpace generate_space(const Semilattice& L, Side side) {
  auto points = all_ultrafilters(L);
  detail::check_point_count(points.size());
  StoneSpace S{L, std::move(points), side, {}};
  S.opens = topology_from_subbase(S.generators(), S.point_count());
  return S;
}

/// Every singleton is closed.
inline bool is_T1(const StoneSpace& S) {
  for (std::uint32_t p = 0; p < S.point_count(); ++p)
    if (!S.is_open(PointSet::singleton(p).complement(S.point_count()))) return false;
  return true;
}

/// Every singleton is open.
inline bool is_discrete(const StoneSpace& S) {
  for (std::uint32_t p = 0; p < S.point_count(); ++p)
    if (!S.is_open(PointSet::singleton(p))) return false;
  return true;
}

/// Some open set has exactly one point.
inline std::optional<std::uint32_t> principal_point(const StoneSpace& S) {
  for (PointSet u : S.opens.sets())
    if (u.size() == 1) return *u.begin();
  return std::nullopt;
}

inline bool is_principal_space(const StoneSpace& S) {
  return principal_point(S).has_value();
}

/// Intersection of all opens containing p (itself open in a finite space).
inline PointSet minimal_neighbourhood(const StoneSpace& S, std::uint32_t p) {
  PointSet nb = S.all();
  for (PointSet u : S.opens.sets())
    if (u.contains(p)) nb &= u;
  return nb;
}

/// First pair of distinct points that open sets cannot separate.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> hausdorff_violation(
    const StoneSpace& S) {
  const std::uint32_t n = static_cast<std::uint32_t>(S.point_count());
  if (S.side == Side::pos) {
    // (x)+ sets form a base, so basic opens are enough.
    const auto basic = S.generators();
    for (std::uint32_t p = 0; p < n; ++p)
      for (std::uint32_t q = p + 1; q < n; ++q) {
        bool separated = false;
        for (PointSet u : basic) {
          if (!u.contains(p)) continue;
          for (PointSet v : basic)
            if (v.contains(q) && (u & v).empty()) {
              separated = true;
              break;
            }
          if (separated) break;
        }
        if (!separated) return std::pair{p, q};
      }
    return std::nullopt;
  }
  std::vector<PointSet> nb(n);
  for (std::uint32_t p = 0; p < n; ++p) nb[p] = minimal_neighbourhood(S, p);
  for (std::uint32_t p = 0; p < n; ++p)
    for (std::uint32_t q = p + 1; q < n; ++q)
      if (!(nb[p] & nb[q]).empty()) return std::pair{p, q};
  return std::nullopt;
}

inline bool is_hausdorff(const StoneSpace& S) { return !hausdorff_violation(S); }

/// Smallest subfamily of `cover` that still covers the space, searched by
/// increasing size; indices into `cover`. Throws NotACover if the family is
/// not an open cover.
inline std::optional<std::vector<std::size_t>> has_finite_subcover(
    const StoneSpace& S, const std::vector<PointSet>& cover) {
  PointSet covered;
  for (PointSet u : cover) {
    if (!S.is_open(u)) throw NotACover("cover member is not open");
    covered |= u;
  }
  if (covered != S.all()) throw NotACover("family does not cover every point");
  if (cover.size() > 30) throw SizeLimit("subcover search supports at most 30 members");

  const std::size_t m = cover.size();
  for (std::size_t k = 0; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      PointSet u;
      for (std::size_t i : idx) u |= cover[i];
      if (u == S.all()) return idx;
      // next k-combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// Checks the finitely decidable consequences of the ultrafilter-space
/// framework on one semilattice. A FAIL entry is a library bug.
inline Report framework_report(const Semilattice& L) {
  Report r;

  bool agree = true;
  std::string disagreement;
  for (const auto& F : all_filters(L))
    if (is_ultrafilter_criterion(L, F) != is_ultrafilter_maximality(L, F)) {
      agree = false;
      disagreement = "filter {";
      for (const auto& n : L.names_of(F.members)) disagreement += n + ",";
      disagreement.back() = '}';
      break;
    }
  r.add("ultrafilter-criterion", agree, disagreement);

  if (L.size() == 1) {
    for (const char* name :
         {"ultrafilter-enumeration", "neg-union-identity", "neg-open-in-pos",
          "base-identity", "principal-space", "principal-density",
          "complemented-coincidence", "t1-pos", "t1-neg", "discrete-pos", "discrete-neg"})
      r.skip(name, "no ultrafilters");
    return r;
  }

  const StoneSpace pos = generate_space(L, Side::pos);
  const StoneSpace neg = generate_space(L, Side::neg);
  const auto& points = pos.points;

  {
    auto found = points;
    auto search = maximal_filters(L);
    std::sort(found.begin(), found.end());
    bool atomic = true;
    const ElemSet atom_set = atoms(L);
    for (const auto& p : points) {
      auto g = is_principal(L, p);
      atomic = atomic && g && atom_set.contains(*g);
    }
    r.add("ultrafilter-enumeration", found == search && atomic,
          std::to_string(points.size()) + " ultrafilters");
  }

  {
    std::string bad;
    for (Elem x = 0; x < L.size() && bad.empty(); ++x) {
      PointSet u;
      for (Elem y = 0; y < L.size(); ++y)
        if (orthogonal(L, y, x)) u |= pos.pos_set(y);
      if (u != pos.neg_set(x)) bad = "x=" + L.name(x);
    }
    r.add("neg-union-identity", bad.empty(), bad);
  }

  {
    bool inside = true;
    for (PointSet u : neg.opens.sets()) inside = inside && pos.is_open(u);
    r.add("neg-open-in-pos", inside,
          std::to_string(neg.opens.size()) + "/" + std::to_string(pos.opens.size()) +
              " opens");
  }

  {
    std::string bad;
    for (Elem x = 0; x < L.size() && bad.empty(); ++x)
      for (Elem y = 0; y < L.size() && bad.empty(); ++y)
        if ((pos.pos_set(x) & pos.pos_set(y)) != pos.pos_set(L.meet(x, y)))
          bad = "x=" + L.name(x) + " y=" + L.name(y);
    r.add("base-identity", bad.empty(), bad);
  }

  const auto split = is_downward_splitting(L);
  if (split.holds) {
    bool principal_exists = false;
    for (const auto& p : points) principal_exists = principal_exists || is_principal(L, p);
    const auto open_point = principal_point(pos);
    r.add("principal-space", open_point.has_value() == principal_exists,
          open_point ? "open singleton " + pos.point_name(*open_point) : "");
  } else {
    r.skip("principal-space", "not downward splitting at " + L.name(*split.violator));
  }

  bool generated = true;
  for (Elem x = 0; x < L.size() && generated; ++x) {
    if (x == L.zero()) continue;
    bool below = false;
    for (Elem y : L.down(x))
      if (y != L.zero() && is_ultrafilter_criterion(L, principal_filter(L, y))) below = true;
    generated = below;
  }
  if (generated) {
    PointSet principal;
    for (std::uint32_t i = 0; i < points.size(); ++i)
      if (is_principal(L, points[i])) principal.insert(i);
    bool dense = true;
    for (PointSet u : pos.opens.sets())
      if (!u.empty() && (u & principal).empty()) dense = false;
    r.add("principal-density", dense);
  } else {
    r.skip("principal-density", "not principally generated");
  }

  const auto comp = complementation(L);
  if (comp) {
    r.add("complemented-coincidence", pos.opens == neg.opens);
  } else {
    r.skip("complemented-coincidence", "no complementation, fails at " + L.name(*comp.failing));
  }

  r.add("t1-pos", is_T1(pos));
  r.add("t1-neg", is_T1(neg));
  r.add("discrete-pos", is_discrete(pos));
  r.add("discrete-neg", is_discrete(neg));
  return r;
}

}  // namespace ufspace
