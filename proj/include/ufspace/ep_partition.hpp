#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ufspace/error.hpp"

namespace ufspace {

using Color = std::uint32_t;

/// Upper bound on any horizon the partition algorithms will scan.
inline constexpr std::uint64_t max_horizon = 50'000'000;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t l = a / g * b;
  if (l / b != a / g || l > max_horizon)
    throw SizeLimit("combined period exceeds " + std::to_string(max_horizon));
  return l;
}

/// Length of the primitive root of `word`.
template <typename T>
std::size_t primitive_length(const std::vector<T>& word) {
  const std::size_t p = word.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < p && repeats; ++i) repeats = word[i] == word[i - d];
    if (repeats) return d;
  }
  return p;
}

/// Reduces (prefix, period) to the shortest prefix and primitive period
/// describing the same infinite word.
template <typename T>
void minimize_eventually_periodic(std::vector<T>& prefix, std::vector<T>& period) {
  period.resize(primitive_length(period));
  while (!prefix.empty() && prefix.back() == period.back()) {
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    prefix.pop_back();
  }
}

inline std::vector<std::uint64_t> parse_number_list(std::string_view text,
                                                    std::string_view what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    if (item.empty() || item.size() > 12)
      throw SyntaxError("bad number in " + std::string(what) + ": '" + std::string(item) + "'");
    std::uint64_t v = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9')
        throw SyntaxError("bad number in " + std::string(what) + ": '" +
                          std::string(item) + "'");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Splits "tag;key1=v1;key2=v2" and checks tag and keys exactly.
inline std::pair<std::string_view, std::string_view> split_literal(
    std::string_view literal, std::string_view tag, std::string_view key1,
    std::string_view key2) {
  const auto s1 = literal.find(';');
  const auto s2 = s1 == std::string_view::npos ? s1 : literal.find(';', s1 + 1);
  if (s2 == std::string_view::npos || literal.find(';', s2 + 1) != std::string_view::npos)
    throw SyntaxError("expected '" + std::string(tag) + ";" + std::string(key1) + "=...;" +
                      std::string(key2) + "=...', got '" + std::string(literal) + "'");
  const auto head = literal.substr(0, s1);
  const auto part1 = literal.substr(s1 + 1, s2 - s1 - 1);
  const auto part2 = literal.substr(s2 + 1);
  auto value = [&](std::string_view part, std::string_view key) {
    if (part.size() < key.size() + 1 || part.substr(0, key.size()) != key ||
        part[key.size()] != '=')
      throw SyntaxError("expected '" + std::string(key) + "=' in '" + std::string(literal) + "'");
    return part.substr(key.size() + 1);
  };
  if (head != tag)
    throw SyntaxError("literal must start with '" + std::string(tag) + ";'");
  return {value(part1, key1), value(part2, key2)};
}

inline std::string join_numbers(const auto& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace detail

/// Partition of omega into finitely many infinite blocks, given by an
/// eventually periodic coloring c(m) = prefix[m] for m < N, else
/// period[(m - N) mod p]. Always held in canonical form: primitive period,
/// shortest prefix, colors numbered 0, 1, ... by first occurrence.
class EpPartition {
 public:
  /// Validates and canonicalizes. Throws FiniteBlockError if a color of the
  /// prefix never recurs in the period.
  static EpPartition from_coloring(std::vector<Color> prefix, std::vector<Color> period) {
    if (period.empty()) throw SyntaxError("period must be nonempty");
    if (prefix.size() + period.size() > max_horizon)
      throw SizeLimit("coloring too long");
    const std::set<Color> recurring(period.begin(), period.end());
    for (Color c : prefix)
      if (!recurring.contains(c)) throw FiniteBlockError(c);

    std::unordered_map<Color, Color> rename;
    auto relabel = [&](Color& c) {
      auto [it, fresh] = rename.try_emplace(c, static_cast<Color>(rename.size()));
      c = it->second;
    };
    for (Color& c : prefix) relabel(c);
    for (Color& c : period) relabel(c);

    detail::minimize_eventually_periodic(prefix, period);
    EpPartition P;
    P.prefix_ = std::move(prefix);
    P.period_ = std::move(period);
    P.blocks_ = rename.size();
    return P;
  }

  /// Residues modulo `modulus`.
  static EpPartition residues(Color modulus) {
    if (modulus == 0) throw InvalidArgument("modulus must be positive");
    std::vector<Color> period(modulus);
    std::iota(period.begin(), period.end(), Color{0});
    return from_coloring({}, std::move(period));
  }

  /// The one-block partition {omega}.
  static EpPartition trivial() { return from_coloring({}, {0}); }

  const std::vector<Color>& prefix() const { return prefix_; }
  const std::vector<Color>& period() const { return period_; }
  std::uint64_t prefix_length() const { return prefix_.size(); }
  std::uint64_t period_length() const { return period_.size(); }
  std::size_t block_count() const { return blocks_; }
  bool is_trivial() const { return blocks_ == 1; }

  Color color(std::uint64_t m) const {
    if (m < prefix_.size()) return prefix_[m];
    return period_[(m - prefix_.size()) % period_.size()];
  }

  friend bool operator==(const EpPartition&, const EpPartition&) = default;

 private:
  EpPartition() = default;
  std::vector<Color> prefix_;
  std::vector<Color> period_;
  std::size_t blocks_ = 0;
};

/// Parses `ep;prefix=c1,...;period=d1,...` (empty prefix written `prefix=`).
inline EpPartition parse_ep(std::string_view literal) {
  const auto [pre, per] = detail::split_literal(literal, "ep", "prefix", "period");
  auto to_colors = [](const std::vector<std::uint64_t>& v) {
    std::vector<Color> out;
    for (auto x : v) {
      if (x > 0xffffffffULL) throw SyntaxError("color out of range");
      out.push_back(static_cast<Color>(x));
    }
    return out;
  };
  auto period = to_colors(detail::parse_number_list(per, "period"));
  if (period.empty()) throw SyntaxError("period must be nonempty");
  return EpPartition::from_coloring(to_colors(detail::parse_number_list(pre, "prefix")),
                                    std::move(period));
}

inline std::string format(const EpPartition& P) {
  return "ep;prefix=" + detail::join_numbers(P.prefix()) +
         ";period=" + detail::join_numbers(P.period());
}

/// Scan length after which every color/pair incidence of the two colorings
/// has already occurred: max(N) + lcm(p).
inline std::uint64_t horizon(const EpPartition& P, const EpPartition& Q) {
  return std::max(P.prefix_length(), Q.prefix_length()) +
         detail::checked_lcm(P.period_length(), Q.period_length());
}

namespace detail {

inline std::uint64_t checked_horizon(const EpPartition& P, const EpPartition& Q,
                                     std::optional<std::uint64_t> requested) {
  const std::uint64_t h = horizon(P, Q);
  if (!requested) return h;
  if (*requested < h)
    throw InvalidArgument("horizon " + std::to_string(*requested) +
                          " is below the sufficient horizon " + std::to_string(h));
  if (*requested > 2 * max_horizon) throw SizeLimit("horizon too large");
  return *requested;
}

/// Encodes a coloring known to be periodic with period `len` from `start`.
template <typename ColorAt>
EpPartition encode(std::uint64_t start, std::uint64_t len, ColorAt&& color_at) {
  std::vector<Color> prefix(start), period(len);
  for (std::uint64_t m = 0; m < start; ++m) prefix[m] = color_at(m);
  for (std::uint64_t m = 0; m < len; ++m) period[m] = color_at(start + m);
  return EpPartition::from_coloring(std::move(prefix), std::move(period));
}

}  // namespace detail

/// Same partition of omega, decided by matching block structure over the
/// horizon (a color bijection must be consistent at every position).
inline bool equals(const EpPartition& P, const EpPartition& Q) {
  if (P.block_count() != Q.block_count()) return false;
  const std::uint64_t h = horizon(P, Q);
  std::vector<std::optional<Color>> fwd(P.block_count()), bwd(Q.block_count());
  for (std::uint64_t m = 0; m < h; ++m) {
    const Color a = P.color(m), b = Q.color(m);
    if (!fwd[a]) fwd[a] = b;
    if (!bwd[b]) bwd[b] = a;
    if (*fwd[a] != b || *bwd[b] != a) return false;
  }
  return true;
}

/// X ⊓ Y: the finest common coarsening. Blocks are the connected components
/// of the color incidence graph of P and Q.
inline EpPartition coarse_meet(const EpPartition& P, const EpPartition& Q,
                               std::optional<std::uint64_t> scan = std::nullopt) {
  const std::uint64_t h = detail::checked_horizon(P, Q, scan);
  const std::size_t kp = P.block_count();
  detail::DisjointSets sets(kp + Q.block_count());
  for (std::uint64_t m = 0; m < h; ++m) sets.unite(P.color(m), kp + Q.color(m));
  const std::uint64_t start = std::max(P.prefix_length(), Q.prefix_length());
  const std::uint64_t len = detail::checked_lcm(P.period_length(), Q.period_length());
  return detail::encode(start, len, [&](std::uint64_t m) {
    return static_cast<Color>(sets.find(P.color(m)));
  });
}

/// The adjoined least element of the refinement order.
struct Bottom {
  friend bool operator==(Bottom, Bottom) = default;
};

using BottomOrPartition = std::variant<Bottom, EpPartition>;

inline bool is_bottom(const BottomOrPartition& v) {
  return std::holds_alternative<Bottom>(v);
}

/// Blocks of the pair coloring (c_P, c_Q) that are finite and nonempty, each
/// listed explicitly in increasing order. Empty iff X ⊔ Y exists.
inline std::vector<std::vector<std::uint64_t>> finite_join_blocks(
    const EpPartition& P, const EpPartition& Q,
    std::optional<std::uint64_t> scan = std::nullopt) {
  const std::uint64_t h = detail::checked_horizon(P, Q, scan);
  const std::uint64_t start = std::max(P.prefix_length(), Q.prefix_length());
  const std::uint64_t len = detail::checked_lcm(P.period_length(), Q.period_length());
  const std::uint64_t kq = Q.block_count();
  auto pair_at = [&](std::uint64_t m) { return P.color(m) * kq + Q.color(m); };
  std::set<std::uint64_t> recurring;
  for (std::uint64_t m = start; m < start + len; ++m) recurring.insert(pair_at(m));
  std::map<std::uint64_t, std::vector<std::uint64_t>> finite;
  for (std::uint64_t m = 0; m < h; ++m) {
    const auto pr = pair_at(m);
    if (!recurring.contains(pr)) finite[pr].push_back(m);
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (auto& [pr, block] : finite) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

/// X ⊔ Y: the coarsest common refinement, or Bottom when some pair class is
/// finite and nonempty.
inline BottomOrPartition fine_join(const EpPartition& P, const EpPartition& Q,
                                   std::optional<std::uint64_t> scan = std::nullopt) {
  if (!finite_join_blocks(P, Q, scan).empty()) return Bottom{};
  const std::uint64_t start = std::max(P.prefix_length(), Q.prefix_length());
  const std::uint64_t len = detail::checked_lcm(P.period_length(), Q.period_length());
  const std::uint64_t kq = Q.block_count();
  return detail::encode(start, len, [&](std::uint64_t m) {
    return static_cast<Color>(P.color(m) * kq + Q.color(m));
  });
}

/// P ⊑ Q in the coarsening order: every block of P is a union of blocks of
/// Q, i.e. the Q-color determines the P-color.
inline bool is_coarser(const EpPartition& P, const EpPartition& Q,
                       std::optional<std::uint64_t> scan = std::nullopt) {
  const std::uint64_t h = detail::checked_horizon(P, Q, scan);
  std::vector<std::optional<Color>> induced(Q.block_count());
  for (std::uint64_t m = 0; m < h; ++m) {
    auto& slot = induced[Q.color(m)];
    if (!slot) slot = P.color(m);
    else if (*slot != P.color(m)) return false;
  }
  return true;
}

/// Orthogonal in the coarsening order: the meet is {omega}.
inline bool orth_coarse(const EpPartition& P, const EpPartition& Q) {
  return coarse_meet(P, Q).is_trivial();
}

/// Orthogonal in the refinement order: the join is Bottom.
inline bool orth_fine(const EpPartition& P, const EpPartition& Q) {
  return is_bottom(fine_join(P, Q));
}

/// Block minima in increasing order; color k has the k-th minimum.
inline std::vector<std::uint64_t> mmins(const EpPartition& P) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; out.size() < P.block_count(); ++m)
    if (P.color(m) == out.size()) out.push_back(m);
  return out;
}

/// The n-th block in the order of increasing minimum.
struct EpBlock {
  EpPartition partition;
  Color color;
  std::uint64_t min;

  bool contains(std::uint64_t m) const { return partition.color(m) == color; }
  std::vector<std::uint64_t> members_below(std::uint64_t limit) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 0; m < limit; ++m)
      if (contains(m)) out.push_back(m);
    return out;
  }
};

inline EpBlock nth_block(const EpPartition& P, std::uint64_t n) {
  if (n >= P.block_count())
    throw IndexOutOfRange("block index " + std::to_string(n) + " but only " +
                          std::to_string(P.block_count()) + " blocks");
  return {P, static_cast<Color>(n), mmins(P)[n]};
}

/// X ⊓ {n}: glue every block meeting {0, ..., n-1} into one.
inline EpPartition glue_below(const EpPartition& P, std::uint64_t n) {
  if (n == 0) throw IndexOutOfRange("glue_below needs n >= 1");
  std::set<Color> glued;
  const std::uint64_t scan = std::min<std::uint64_t>(n, P.prefix_length() + P.period_length());
  for (std::uint64_t m = 0; m < scan; ++m) glued.insert(P.color(m));
  auto recolor = [&](std::vector<Color> colors) {
    for (Color& c : colors)
      if (glued.contains(c)) c = 0;
    return colors;
  };
  return EpPartition::from_coloring(recolor(P.prefix()), recolor(P.period()));
}

/// Color 0 against everything else.
inline EpPartition two_block_coarsening(const EpPartition& P) {
  if (P.is_trivial()) throw TrivialInput();
  auto squash = [](std::vector<Color> colors) {
    for (Color& c : colors) c = c == 0 ? 0 : 1;
    return colors;
  };
  return EpPartition::from_coloring(squash(P.prefix()), squash(P.period()));
}

/// A 2-block partition Y coarse-orthogonal to every input. Z starts as the
/// block minima of the first partition; each later partition contributes the
/// minimum of every block Z misses. Y(0) = Z plus the even numbers above
/// max(Z), Y(1) the rest.
inline EpPartition witness_coarse_orthogonal(std::span<const EpPartition> family) {
  for (const auto& X : family)
    if (X.is_trivial()) throw TrivialInput();
  std::set<std::uint64_t> z;
  if (!family.empty()) {
    const auto first = mmins(family.front());
    z.insert(first.begin(), first.end());
  }
  for (std::size_t i = 1; i < family.size(); ++i) {
    const auto& X = family[i];
    std::vector<bool> hit(X.block_count(), false);
    for (auto m : z) hit[X.color(m)] = true;
    const auto minima = mmins(X);
    for (Color k = 0; k < X.block_count(); ++k)
      if (!hit[k]) z.insert(minima[k]);
  }
  const std::uint64_t tail = z.empty() ? 0 : *z.rbegin() + 1;
  std::vector<Color> prefix(tail, 1);
  for (auto m : z) prefix[m] = 0;
  std::vector<Color> period = tail % 2 == 0 ? std::vector<Color>{0, 1} : std::vector<Color>{1, 0};
  return EpPartition::from_coloring(std::move(prefix), std::move(period));
}

/// Output of witness_fine_orthogonal: the 2-block partition Y = {I_n, rest},
/// the base class I (by its minimum), the adjoined points, and for each
/// input X_i the finite nonempty block of Y ⊔ X_i through the i-th point.
struct FineWitness {
  EpPartition y;
  std::uint64_t base_class_min;
  std::vector<std::uint64_t> points;
  std::vector<std::vector<std::uint64_t>> certificates;
};

/// Builds Y fine-orthogonal to every input. I is the infinite class (joint
/// color tuple) with least minimum; for each X_i in turn, the least number
/// outside the current set whose X_i-block differs from I's is adjoined.
inline FineWitness witness_fine_orthogonal(std::span<const EpPartition> family) {
  for (const auto& X : family)
    if (X.is_trivial()) throw TrivialInput();
  std::uint64_t start = 0, len = 1;
  for (const auto& X : family) {
    start = std::max(start, X.prefix_length());
    len = detail::checked_lcm(len, X.period_length());
  }
  if (start + len > max_horizon) throw SizeLimit("joint horizon too large");
  auto tuple_at = [&](std::uint64_t m) {
    std::vector<Color> t;
    for (const auto& X : family) t.push_back(X.color(m));
    return t;
  };
  std::set<std::vector<Color>> infinite;
  for (std::uint64_t m = start; m < start + len; ++m) infinite.insert(tuple_at(m));
  std::uint64_t base_min = 0;
  while (!infinite.contains(tuple_at(base_min))) ++base_min;
  const auto base = tuple_at(base_min);
  auto in_base = [&](std::uint64_t m) { return tuple_at(m) == base; };

  std::set<std::uint64_t> chosen;
  std::vector<std::uint64_t> points;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::uint64_t s = 0;
    while (in_base(s) || chosen.contains(s) || family[i].color(s) == base[i]) ++s;
    chosen.insert(s);
    points.push_back(s);
  }

  const std::uint64_t prefix_len = std::max(start, chosen.empty() ? 0 : *chosen.rbegin() + 1);
  auto y = detail::encode(prefix_len, len, [&](std::uint64_t m) {
    return (in_base(m) || chosen.contains(m)) ? Color{0} : Color{1};
  });

  std::vector<std::vector<std::uint64_t>> certificates;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<std::uint64_t> block;
    for (auto s : chosen)
      if (family[i].color(s) == family[i].color(points[i])) block.push_back(s);
    certificates.push_back(std::move(block));
  }
  return {std::move(y), base_min, std::move(points), std::move(certificates)};
}

inline constexpr Color first_primes[] = {2, 3, 5, 7, 11, 13};

/// Residue partitions modulo the first k primes.
inline std::vector<EpPartition> prime_residue_family(std::size_t k) {
  if (k > std::size(first_primes)) throw SizeLimit("prime_residue_family supports k <= 6");
  std::vector<EpPartition> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back(EpPartition::residues(first_primes[i]));
  return out;
}

/// Finite certificate that the opens (X_0)+, ..., (X_n)+ do not cover: a
/// partition Y with the finite intersection property ({Y} alone, so Y must
/// be non-trivial) that is orthogonal to every X_i. Any ultrafilter through
/// Y then avoids every (X_i)+.
struct EscapeCertificate {
  EpPartition y;
  bool y_has_fip;
  std::vector<bool> orthogonal;

  bool holds() const {
    return y_has_fip && std::all_of(orthogonal.begin(), orthogonal.end(), [](bool b) { return b; });
  }
};

inline EscapeCertificate noncompactness_escape(std::span<const EpPartition> family) {
  EscapeCertificate cert{witness_coarse_orthogonal(family), false, {}};
  cert.y_has_fip = !cert.y.is_trivial();
  for (const auto& X : family) cert.orthogonal.push_back(orth_coarse(cert.y, X));
  return cert;
}

}  // namespace ufspace
