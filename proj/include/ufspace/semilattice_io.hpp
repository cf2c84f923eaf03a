#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ufspace/semilattice.hpp"

namespace ufspace {

// Line-based text format:
//
//   semilattice v1
//   elements <id> <id> ...
//   zero <id>
//   leq <id> <id>        (any number; closure is computed)
//
// '#' starts a comment. Blank lines are ignored.

inline RawSemilattice parse_semilattice_raw(std::istream& in) {
  RawSemilattice raw;
  bool header = false, have_elements = false, have_zero = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;

    if (!header) {
      if (tok.size() != 2 || tok[0] != "semilattice" || tok[1] != "v1")
        throw SyntaxError("expected header 'semilattice v1'", lineno);
      header = true;
    } else if (tok[0] == "elements") {
      if (have_elements) throw SyntaxError("duplicate 'elements' line", lineno);
      if (tok.size() < 2) throw SyntaxError("'elements' needs at least one id", lineno);
      raw.elements.assign(tok.begin() + 1, tok.end());
      have_elements = true;
    } else if (tok[0] == "zero") {
      if (have_zero) throw SyntaxError("duplicate 'zero' line", lineno);
      if (tok.size() != 2) throw SyntaxError("'zero' takes exactly one id", lineno);
      raw.zero = tok[1];
      have_zero = true;
    } else if (tok[0] == "leq") {
      if (tok.size() != 3) throw SyntaxError("'leq' takes exactly two ids", lineno);
      raw.leq.emplace_back(tok[1], tok[2]);
    } else {
      throw SyntaxError("unknown directive '" + tok[0] + "'", lineno);
    }
  }
  if (!header) throw SyntaxError("missing header 'semilattice v1'");
  if (!have_elements) throw SyntaxError("missing 'elements' line");
  if (!have_zero) throw SyntaxError("missing 'zero' line");
  return raw;
}

inline Semilattice parse_semilattice(std::istream& in) {
  return validate(parse_semilattice_raw(in));
}

inline Semilattice parse_semilattice(const std::string& text) {
  std::istringstream in(text);
  return parse_semilattice(in);
}

inline Semilattice load_semilattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_semilattice(in);
}

/// Writes the covering pairs only, so the output is minimal and re-parses to
/// the same semilattice.
inline std::string format_semilattice(const Semilattice& L) {
  std::ostringstream out;
  out << "semilattice v1\nelements";
  for (const auto& n : L.names()) out << ' ' << n;
  out << "\nzero " << L.name(L.zero()) << '\n';
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y : L.up(x)) {
      if (y == x) continue;
      bool cover = true;
      for (Elem z : L.up(x))
        if (z != x && z != y && L.leq(z, y)) cover = false;
      if (cover) out << "leq " << L.name(x) << ' ' << L.name(y) << '\n';
    }
  return out.str();
}

}  // namespace ufspace
