#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ufspace/ufspace.hpp"

namespace ufspace::cli {

namespace detail {

inline std::string join(const std::vector<std::string>& items, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

inline std::string join_numbers(const std::vector<std::uint64_t>& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(std::to_string(x));
  return join(s);
}

/// `@path` reads the literal from a file; anything else is taken as is.
inline std::string resolve(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw InvalidArgument("cannot read " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

inline std::vector<EpPartition> parse_all_ep(const std::vector<std::string>& args) {
  std::vector<EpPartition> out;
  for (const auto& a : args) out.push_back(parse_ep(resolve(a)));
  return out;
}

class Printer {
 public:
  Printer(std::ostream& out, bool tsv) : out_(out), tsv_(tsv) {}

  void value(const std::string& v) { out_ << v << '\n'; }
  void row(const std::vector<std::string>& fields) {
    out_ << join(fields, tsv_ ? "\t" : " ") << '\n';
  }
  int report(const Report& r) {
    out_ << (tsv_ ? r.render_tsv() : r.render_text());
    return r.exit_code();
  }

 private:
  std::ostream& out_;
  bool tsv_;
};

/// Folds per-semilattice reports into one line per property name.
inline Report aggregate(const std::vector<Report>& reports) {
  struct Tally {
    std::size_t pass = 0, fail = 0, skip = 0;
    std::optional<std::size_t> first_fail;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tally;
  for (std::size_t i = 0; i < reports.size(); ++i)
    for (const auto& it : reports[i].items()) {
      auto [pos, fresh] = tally.try_emplace(it.name);
      if (fresh) order.push_back(it.name);
      auto& t = pos->second;
      switch (it.status) {
        case Status::pass: ++t.pass; break;
        case Status::skip: ++t.skip; break;
        case Status::fail:
          ++t.fail;
          if (!t.first_fail) t.first_fail = i;
          break;
      }
    }
  Report out;
  for (const auto& name : order) {
    const auto& t = tally[name];
    std::string w = "pass=" + std::to_string(t.pass) + " skip=" + std::to_string(t.skip) +
                    " fail=" + std::to_string(t.fail);
    if (t.first_fail) w += " first-fail=#" + std::to_string(*t.first_fail);
    if (t.pass == 0 && t.fail == 0) out.skip(name, w);
    else out.add(name, t.fail == 0, w);
  }
  return out;
}

// ---- lat ----------------------------------------------------------------

inline int lat_check(Printer& p, const std::string& path) {
  const auto L = load_semilattice(path);
  p.row({"elements", std::to_string(L.size())});
  p.row({"zero", L.name(L.zero())});
  p.row({"atoms", join(L.names_of(atoms(L)))});
  const auto split = is_downward_splitting(L);
  p.row({"downward-splitting", split.holds ? "yes" : "no", split.holds ? "" : L.name(*split.violator)});
  const auto comp = complementation(L);
  if (comp) {
    std::vector<std::string> pairs;
    for (Elem x = 0; x < L.size(); ++x) pairs.push_back(L.name(x) + ":" + L.name((*comp.map)(x)));
    p.row({"complementation", "yes", join(pairs)});
  } else {
    p.row({"complementation", "absent", L.name(*comp.failing)});
  }
  return 0;
}

inline int lat_ultrafilters(Printer& p, const std::string& path) {
  const auto L = load_semilattice(path);
  const auto us = all_ultrafilters(L);
  p.row({"ultrafilters", std::to_string(us.size())});
  for (const auto& F : us) {
    const auto g = is_principal(L, F);
    p.row({"generator", g ? L.name(*g) : "?", "members", join(L.names_of(F.members))});
  }
  return 0;
}

inline int lat_stone(Printer& p, const std::string& path, Side side) {
  const auto L = load_semilattice(path);
  const auto S = generate_space(L, side);
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < S.point_count(); ++i) names.push_back(S.point_name(i));
  p.row({"side", to_string(side)});
  p.row({"points", std::to_string(S.point_count()), join(names)});
  p.row({"opens", std::to_string(S.opens.size())});

  Report r;
  r.add("t1", is_T1(S));
  const auto hv = hausdorff_violation(S);
  r.add("hausdorff", !hv, hv ? S.point_name(hv->first) + "," + S.point_name(hv->second) : "");
  const auto pp = principal_point(S);
  r.add("principal-space", pp.has_value(), pp ? "open singleton " + S.point_name(*pp) : "");
  r.add("discrete", is_discrete(S));
  const auto gens = S.generators();
  std::vector<PointSet> cover;
  std::vector<Elem> source;
  for (Elem x = 0; x < L.size(); ++x)
    if (!gens[x].empty()) {
      cover.push_back(gens[x]);
      source.push_back(x);
    }
  const auto sub = has_finite_subcover(S, cover);
  std::vector<std::string> used;
  if (sub)
    for (auto i : *sub) used.push_back(std::string("(") + L.name(source[i]) + ")" +
                                       (side == Side::pos ? "+" : "-"));
  r.add("finite-subcover", sub.has_value(), join(used));
  return p.report(r);
}

inline int lat_framework(Printer& p, const std::string& path) {
  return p.report(framework_report(load_semilattice(path)));
}

inline int lat_corpus(Printer& p, std::size_t max_size) {
  std::vector<Report> reports;
  for_each_semilattice(max_size, [&](const Semilattice& L) { reports.push_back(framework_report(L)); });
  p.row({"semilattices", std::to_string(reports.size())});
  return p.report(aggregate(reports));
}

// ---- part ---------------------------------------------------------------

inline std::string show(const BottomOrPartition& v) {
  return is_bottom(v) ? "BOTTOM" : format(std::get<EpPartition>(v));
}

inline bool fine_mode(const std::string& mode) { return mode == "fine"; }

inline int part_witness(Printer& p, const std::vector<EpPartition>& family, const std::string& mode) {
  Report r;
  if (!fine_mode(mode)) {
    const auto Y = witness_coarse_orthogonal(family);
    p.row({"Y", format(Y)});
    r.add("two-block", Y.block_count() == 2);
    for (std::size_t i = 0; i < family.size(); ++i)
      r.add("orth-coarse[" + std::to_string(i) + "]", orth_coarse(Y, family[i]));
    return p.report(r);
  }
  const auto w = witness_fine_orthogonal(family);
  p.row({"Y", format(w.y)});
  p.row({"base-class-min", std::to_string(w.base_class_min)});
  p.row({"points", join_numbers(w.points)});
  for (std::size_t i = 0; i < family.size(); ++i) {
    p.row({"certificate[" + std::to_string(i) + "]", join_numbers(w.certificates[i])});
    const auto blocks = finite_join_blocks(w.y, family[i]);
    const bool found = std::find(blocks.begin(), blocks.end(), w.certificates[i]) != blocks.end();
    r.add("orth-fine[" + std::to_string(i) + "]", found && !w.certificates[i].empty());
  }
  return p.report(r);
}

inline int part_primes(Printer& p, std::size_t k) {
  const auto fam = prime_residue_family(k);
  for (std::size_t i = 0; i < fam.size(); ++i)
    p.row({"E" + std::to_string(first_primes[i]), format(fam[i])});
  Report r;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      r.add("orth-coarse[E" + std::to_string(first_primes[i]) + ",E" +
                std::to_string(first_primes[j]) + "]",
            orth_coarse(fam[i], fam[j]));
  return p.report(r);
}

inline int part_demo_noncompact(Printer& p, const std::vector<EpPartition>& family) {
  const auto cert = noncompactness_escape(family);
  p.row({"Y", format(cert.y)});
  Report r;
  r.add("fip", cert.y_has_fip);
  for (std::size_t i = 0; i < family.size(); ++i)
    r.add("orth-coarse[" + std::to_string(i) + "]", cert.orthogonal[i]);
  r.add("escapes-cover", cert.holds(),
        "an ultrafilter through Y avoids all " + std::to_string(family.size()) + " opens");
  return p.report(r);
}

// ---- pinf ---------------------------------------------------------------

inline void show_cuts(Printer& p, const ScPartition& X, std::size_t k) {
  if (k > 0) p.row({"cuts", join_numbers(first_cuts(X, k))});
}

/// Fixed semilattices behind `table`: every corpus member up to size 4 and
/// the named families.
inline std::vector<Semilattice> table_suite() {
  auto out = all_semilattices(4);
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(powerset_lattice(n));
  for (std::size_t n = 3; n <= 4; ++n) out.push_back(finite_partition_lattice(n));
  for (std::size_t n = 2; n <= 5; ++n) out.push_back(chain(n));
  return out;
}

inline int table(Printer& p) {
  const auto suite = table_suite();
  std::vector<Report> reports;
  for (const auto& L : suite) {
    Report r = framework_report(L);
    if (L.size() > 1) {
      r.add("hausdorff-pos", is_hausdorff(generate_space(L, Side::pos)));
      r.add("hausdorff-neg", is_hausdorff(generate_space(L, Side::neg)));
    } else {
      r.skip("hausdorff-pos", "no ultrafilters");
      r.skip("hausdorff-neg", "no ultrafilters");
    }
    reports.push_back(std::move(r));
  }
  p.row({"semilattices", std::to_string(suite.size())});
  return p.report(aggregate(reports));
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 ok, 1 some check failed, 2 bad input or usage.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Ultrafilter spaces of finite semilattices and partitions of omega"};
  app.name("ufspace");
  app.require_subcommand(1);
  std::string fmt = "text";
  app.add_option("--format", fmt, "output format")
      ->check(CLI::IsMember({"text", "tsv"}));
  app.fallthrough();

  std::function<int(Printer&)> action;
  auto bind = [&](CLI::App* cmd, std::function<int(Printer&)> fn) {
    cmd->callback([&action, fn] { action = fn; });
  };

  // lat
  auto* lat = app.add_subcommand("lat", "finite semilattices")->require_subcommand(1);
  lat->fallthrough();
  std::string file;
  Side side = Side::pos;
  std::size_t max_size = 4;
  {
    auto* c = lat->add_subcommand("check", "validate and summarize a semilattice file");
    c->add_option("FILE", file)->required();
    bind(c, [&](Printer& p) { return lat_check(p, file); });

    auto* u = lat->add_subcommand("ultrafilters", "list ultrafilters");
    u->add_option("FILE", file)->required();
    bind(u, [&](Printer& p) { return lat_ultrafilters(p, file); });

    auto* s = lat->add_subcommand("stone", "build a topology and check its properties");
    s->add_option("FILE", file)->required();
    std::map<std::string, Side> sides{{"pos", Side::pos}, {"neg", Side::neg}};
    s->add_option("--side", side)->transform(CLI::CheckedTransformer(sides));
    bind(s, [&](Printer& p) { return lat_stone(p, file, side); });

    auto* f = lat->add_subcommand("framework", "framework property report");
    f->add_option("FILE", file)->required();
    bind(f, [&](Printer& p) { return lat_framework(p, file); });

    auto* k = lat->add_subcommand("corpus", "framework report over all small semilattices");
    k->add_option("--max-size", max_size)->check(CLI::Range(1, 5));
    bind(k, [&](Printer& p) { return lat_corpus(p, max_size); });
  }

  // part
  auto* part = app.add_subcommand("part", "partitions with finitely many blocks")->require_subcommand(1);
  part->fallthrough();
  std::string a, b, mode = "coarse";
  std::uint64_t n = 0;
  std::vector<std::string> family;
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", mode)->check(CLI::IsMember({"coarse", "fine"}));
  };
  {
    auto two = [&](const char* name, const char* help) {
      auto* c = part->add_subcommand(name, help);
      c->add_option("A", a)->required();
      c->add_option("B", b)->required();
      return c;
    };
    bind(two("meet", "finest common coarsening"), [&](Printer& p) {
      p.value(format(coarse_meet(parse_ep(resolve(a)), parse_ep(resolve(b)))));
      return 0;
    });
    bind(two("join", "coarsest common refinement or BOTTOM"), [&](Printer& p) {
      const auto A = parse_ep(resolve(a)), B = parse_ep(resolve(b));
      p.value(show(fine_join(A, B)));
      for (const auto& blk : finite_join_blocks(A, B)) p.row({"finite-block", join_numbers(blk)});
      return 0;
    });
    auto* leq = two("leq", "A below B in the chosen order");
    add_mode(leq);
    bind(leq, [&](Printer& p) {
      const auto A = parse_ep(resolve(a)), B = parse_ep(resolve(b));
      p.value(fine_mode(mode) ? (is_coarser(B, A) ? "true" : "false")
                              : (is_coarser(A, B) ? "true" : "false"));
      return 0;
    });
    auto* orth = two("orth", "orthogonality in the chosen order");
    add_mode(orth);
    bind(orth, [&](Printer& p) {
      const auto A = parse_ep(resolve(a)), B = parse_ep(resolve(b));
      p.value((fine_mode(mode) ? orth_fine(A, B) : orth_coarse(A, B)) ? "true" : "false");
      return 0;
    });

    auto* g = part->add_subcommand("glue", "glue every block meeting {0..N-1}");
    g->add_option("A", a)->required();
    g->add_option("N", n)->required();
    bind(g, [&](Printer& p) {
      p.value(format(glue_below(parse_ep(resolve(a)), n)));
      return 0;
    });

    auto* m = part->add_subcommand("mmins", "block minima");
    m->add_option("A", a)->required();
    bind(m, [&](Printer& p) {
      p.value(join_numbers(mmins(parse_ep(resolve(a)))));
      return 0;
    });

    auto* blk = part->add_subcommand("block", "the N-th block by increasing minimum");
    blk->add_option("A", a)->required();
    blk->add_option("N", n)->required();
    bind(blk, [&](Printer& p) {
      const auto B = nth_block(parse_ep(resolve(a)), n);
      const auto P = B.partition;
      p.row({"block", std::to_string(n), "min", std::to_string(B.min), "members",
             join_numbers(B.members_below(B.min + 3 * (P.prefix_length() + P.period_length()))) +
                 ",..."});
      return 0;
    });

    auto* w = part->add_subcommand("witness", "a partition orthogonal to every input");
    add_mode(w);
    w->add_option("P", family)->required();
    bind(w, [&](Printer& p) { return part_witness(p, parse_all_ep(family), mode); });

    auto* pr = part->add_subcommand("primes", "residue partitions for the first K primes");
    pr->add_option("K", n)->required();
    bind(pr, [&](Printer& p) { return part_primes(p, n); });

    auto* nc = part->add_subcommand("demo-noncompact", "escape a finite subfamily of the canonical cover");
    nc->add_option("P", family);
    bind(nc, [&](Printer& p) { return part_demo_noncompact(p, parse_all_ep(family)); });
  }

  // pinf
  auto* pinf = app.add_subcommand("pinf", "column partitions with infinitely many blocks")->require_subcommand(1);
  pinf->fallthrough();
  std::size_t cuts = 0, count = 8;
  auto add_cuts = [&](CLI::App* c) { c->add_option("--show-cuts", cuts, "print the first K cuts"); };
  {
    auto two = [&](const char* name, const char* help) {
      auto* c = pinf->add_subcommand(name, help);
      c->add_option("A", a)->required();
      c->add_option("B", b)->required();
      add_cuts(c);
      return c;
    };
    bind(two("meet", "finest common coarsening"), [&](Printer& p) {
      const auto M = coarse_meet(parse_sc(resolve(a)), parse_sc(resolve(b)));
      if (const auto* X = std::get_if<ScPartition>(&M)) {
        p.value(format(*X));
        show_cuts(p, *X, cuts);
      } else {
        p.row({"remainder", join_numbers(std::get<FiniteRemainder>(M).cuts)});
      }
      return 0;
    });
    bind(two("leq", "A coarser than B"), [&](Printer& p) {
      p.value(is_coarser(parse_sc(resolve(a)), parse_sc(resolve(b))) ? "true" : "false");
      return 0;
    });
    bind(two("leqstar", "least n with A glued below n coarser than B"), [&](Printer& p) {
      const auto X = parse_sc(resolve(a)), Y = parse_sc(resolve(b));
      const auto r = leq_star(X, Y);
      if (r) {
        p.value(std::to_string(*r.threshold));
        show_cuts(p, glue_below(X, *r.threshold), cuts);
      } else {
        p.value("ABSENT");
        p.row({"missing-cut", std::to_string(*r.recurring_cut), "every",
               std::to_string(r.recurrence)});
      }
      return 0;
    });

    auto* g = pinf->add_subcommand("glue", "glue every block meeting {0..N-1}");
    g->add_option("A", a)->required();
    g->add_option("N", n)->required();
    add_cuts(g);
    bind(g, [&](Printer& p) {
      const auto G = glue_below(parse_sc(resolve(a)), n);
      p.value(format(G));
      show_cuts(p, G, cuts);
      return 0;
    });

    auto* m = pinf->add_subcommand("mmins", "first block minima");
    m->add_option("A", a)->required();
    m->add_option("--count", count, "how many minima")->check(CLI::Range(1, 10000));
    add_cuts(m);
    bind(m, [&](Printer& p) {
      const auto X = parse_sc(resolve(a));
      std::vector<std::uint64_t> mins;
      for (auto v : mmins(X) | std::views::take(count)) mins.push_back(v);
      p.value(join_numbers(mins));
      show_cuts(p, X, cuts);
      return 0;
    });
  }

  auto* tbl = app.add_subcommand("table", "finite-analogue property table");
  bind(tbl, [&](Printer& p) { return table(p); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Printer printer(out, fmt == "tsv");
  try {
    return action ? action(printer) : 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ufspace::cli
