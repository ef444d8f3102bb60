#pragma once

// Command-line front end. run() is the whole program minus process setup so
// that tests can drive it in-process.
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 parse or
// usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bht.hpp"

namespace bht::cli {

  inline constexpr std::uint64_t default_seed = 20240607;

  struct Check {
    std::string name;
    bool        ok;
  };

  namespace detail {

    inline std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot open '" + path + "'", 0, 0);
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    }

    template <typename T>
    void same_space(T const& first, SpaceSpec const& space) {
      require_same_space(first.space(), space);
    }

    inline std::string bool_text(bool b) {
      return b ? "true" : "false";
    }

    // ---- verification of witness documents -------------------------------

    inline Clopen clopen_block(text::Document const& doc, std::string const& name) {
      auto const& b = doc.block(name);
      return text::parse_clopen(b.body, b.first_line);
    }
    inline TableElement table_block(text::Document const& doc, std::string const& name) {
      auto const& b = doc.block(name);
      return text::parse_table(b.body, b.first_line);
    }
    inline PrefixBijection bisection_block(text::Document const& doc, std::string const& name) {
      auto const& b = doc.block(name);
      return text::parse_bisection(b.body, b.first_line);
    }

    inline void add(std::vector<Check>& checks, std::string name, bool ok) {
      checks.push_back({std::move(name), ok});
    }

    inline bool valid_order_three(TableElement const& g) {
      auto o = order(g, 3);
      return o && *o == 3;
    }

    inline std::vector<Check> verify_compress(text::Document const& doc) {
      auto a = clopen_block(doc, "A"), b = clopen_block(doc, "B");
      auto bis = bisection_block(doc, "bisection");
      same_space(a, b.space());
      same_space(bis, a.space());
      std::vector<Check> out;
      add(out, "source-equals-A", bis.source() == a);
      add(out, "range-inside-B", subset_of(bis.range(), b));
      add(out, "range-proper", !(bis.range() == b));
      return out;
    }

    inline std::vector<Check> verify_double(text::Document const& doc) {
      auto x  = clopen_block(doc, "X");
      auto b1 = bisection_block(doc, "first"), b2 = bisection_block(doc, "second");
      same_space(b1, x.space());
      same_space(b2, x.space());
      std::vector<Check> out;
      add(out, "sources-equal-X", b1.source() == x && b2.source() == x);
      add(out, "ranges-disjoint", disjoint(b1.range(), b2.range()));
      auto both = unite(b1.range(), b2.range());
      add(out, "ranges-inside-X", subset_of(both, x));
      add(out, "ranges-proper", !(both == x));
      return out;
    }

    inline std::vector<Check> verify_between(text::Document const& doc) {
      auto a = clopen_block(doc, "A"), b = clopen_block(doc, "B");
      auto bis = bisection_block(doc, "bisection");
      same_space(a, b.space());
      same_space(bis, a.space());
      std::vector<Check> out;
      add(out, "source-equals-A", bis.source() == a);
      add(out, "range-equals-B", bis.range() == b);
      return out;
    }

    inline std::vector<Check> verify_multisection(text::Document const& doc) {
      auto x0 = clopen_block(doc, "X0"), x1 = clopen_block(doc, "X1"),
           x2 = clopen_block(doc, "X2");
      auto g  = table_block(doc, "element");
      same_space(g, x0.space());
      same_space(x1, x0.space());
      same_space(x2, x0.space());
      std::vector<Check> out;
      add(out, "order-3", valid_order_three(g));
      add(out, "support-equals-union", closed_support(g) == unite(unite(x0, x1), x2));
      add(out, "cycles-sets",
          image(g, x0) == x1 && image(g, x1) == x2 && image(g, x2) == x0);
      return out;
    }

    inline std::vector<Check> verify_vigor(text::Document const& doc) {
      auto x = clopen_block(doc, "X"), y1 = clopen_block(doc, "Y1"),
           y2 = clopen_block(doc, "Y2");
      auto g  = table_block(doc, "element");
      same_space(g, x.space());
      same_space(y1, x.space());
      same_space(y2, x.space());
      std::vector<Check> out;
      add(out, "inputs-valid", !x.is_full() && !y2.empty() && subset_of(y1, x)
                                   && subset_of(y2, x));
      add(out, "support-inside-X", subset_of(closed_support(g), x));
      add(out, "image-inside-Y2", subset_of(image(g, y1), y2));
      auto it = doc.attributes.find("case");
      if (it != doc.attributes.end() && it->second == "direct") {
        add(out, "order-3", valid_order_three(g));
      }
      return out;
    }

    inline std::vector<Check> verify_conjugates(text::Document const& doc) {
      auto g     = table_block(doc, "g");
      auto probe = clopen_block(doc, "probe");
      same_space(probe, g.space());
      std::vector<Check>        out;
      std::vector<TableElement> values;
      std::vector<Clopen>       targets;
      bool                      relation = true, landing = true;
      for (std::size_t m = 0; doc.has("conjugator" + std::to_string(m)); ++m) {
        auto h = table_block(doc, "conjugator" + std::to_string(m));
        auto c = table_block(doc, "conjugate" + std::to_string(m));
        auto w = clopen_block(doc, "target" + std::to_string(m));
        same_space(h, g.space());
        same_space(c, g.space());
        same_space(w, g.space());
        relation = relation && equals(c, conjugate(h, g));
        landing  = landing && subset_of(image(c, probe), w);
        values.push_back(std::move(c));
        targets.push_back(std::move(w));
      }
      bool distinct = true, separated = true;
      for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
          distinct  = distinct && !equals(values[i], values[j]);
          separated = separated && disjoint(targets[i], targets[j]);
        }
      }
      add(out, "probe-nonempty", !probe.empty());
      add(out, "conjugacy", relation && !values.empty());
      add(out, "probe-lands-in-target", landing);
      add(out, "targets-disjoint", separated);
      add(out, "pairwise-distinct", distinct);
      return out;
    }

    inline std::vector<Check> verify_compressibility(text::Document const& doc) {
      auto const& pb   = doc.block("point");
      auto        x0   = text::parse_point(pb.body, pb.first_line);
      auto        cond = doc.attributes.count("cond") ? doc.attributes.at("cond") : "";
      auto        nb   = clopen_block(doc, "neighbourhood");
      same_space(nb, x0.space());
      std::vector<Check> out;
      add(out, "neighbourhood-contains-point", point_in(x0, nb));
      if (cond == "1") {
        auto g = table_block(doc, "g");
        auto u = clopen_block(doc, "U");
        same_space(g, x0.space());
        same_space(u, x0.space());
        add(out, "U-avoids-point", !point_in(x0, u));
        add(out, "support-inside-U", subset_of(closed_support(g), u));
        return out;
      }
      auto g  = table_block(doc, "element");
      auto u1 = clopen_block(doc, "U1"), u2 = clopen_block(doc, "U2");
      same_space(g, x0.space());
      add(out, "fixes-neighbourhood", disjoint(closed_support(g), nb));
      if (cond == "2") {
        add(out, "image-inside-U2", subset_of(image(g, u1), u2));
      } else if (cond == "3") {
        auto u3 = clopen_block(doc, "U3");
        add(out, "image-misses-U3", disjoint(image(g, u1), u3));
        add(out, "support-misses-U2", disjoint(closed_support(g), u2));
      } else {
        add(out, "known-condition", false);
      }
      return out;
    }

    inline std::vector<Check> verify_embedding(text::Document const& doc) {
      auto x  = clopen_block(doc, "X"), y = clopen_block(doc, "Y");
      auto s0 = bisection_block(doc, "s0"), s1 = bisection_block(doc, "s1");
      same_space(y, x.space());
      same_space(s0, x.space());
      same_space(s1, x.space());
      std::vector<Check> out;
      add(out, "Y-contains-X", subset_of(x, y));
      add(out, "Y-class-zero", h0_class(y) == 0);
      add(out, "sources-equal-Y", s0.source() == y && s1.source() == y);
      add(out, "ranges-partition-Y", disjoint(s0.range(), s1.range())
                                         && unite(s0.range(), s1.range()) == y);
      if (doc.has("image")) {
        auto g = table_block(doc, "image");
        same_space(g, x.space());
        add(out, "image-support-inside-Y", subset_of(closed_support(g), y));
        if (doc.has("v")) {
          auto const& vb = doc.block("v");
          auto        v  = text::parse_vpair(vb.body, vb.first_line);
          VEmbedding  emb{x.space(), x, y, s0, s1};
          add(out, "image-matches-evaluation", equals(g, evaluate_embedding(emb, v)));
        }
      }
      return out;
    }

    inline std::vector<Check> verify_document(text::Document const& doc) {
      static std::map<std::string, std::function<std::vector<Check>(text::Document const&)>> const
          table = {{"compress", verify_compress},
                   {"double", verify_double},
                   {"between", verify_between},
                   {"multisection", verify_multisection},
                   {"vigor", verify_vigor},
                   {"conjugates", verify_conjugates},
                   {"compressibility", verify_compressibility},
                   {"embedding", verify_embedding}};
      auto it = table.find(doc.kind);
      if (it == table.end()) {
        throw ParseError("unknown witness kind '" + doc.kind + "'", 1, 9);
      }
      return it->second(doc);
    }

  }  // namespace detail

  inline std::vector<Check> verify(std::string const& witness_text) {
    return detail::verify_document(text::parse_document(witness_text));
  }

  inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in Brin-Higman-Thompson groups nV_{k,r}", "bht"};
    app.require_subcommand(1);
    app.fallthrough();
    bool porcelain = false;
    app.add_flag("--porcelain", porcelain, "key=value output for scripting");

    std::vector<std::string>   files;
    std::optional<std::string> point_arg, space_arg, support_arg;
    unsigned                   max_order = 64, count = 10, degree = 0, cond = 0;
    std::size_t                trials = 0, depth = 4;
    std::uint64_t              seed = default_seed;

    std::function<void()> action;
    auto sub = [&](char const* name, char const* help, std::size_t nfiles,
                   std::function<void()> body) {
      auto* s = app.add_subcommand(name, help);
      if (nfiles > 0) {
        s->add_option("files", files, "input files")->expected(static_cast<int>(nfiles))->required();
      }
      s->callback([&action, body] { action = body; });
      return s;
    };

    auto load_table  = [&](std::size_t i) { return text::parse_table(detail::read_file(files.at(i))); };
    auto load_clopen = [&](std::size_t i) { return text::parse_clopen(detail::read_file(files.at(i))); };
    auto emit_doc    = [&](text::Document const& doc) { out << doc.to_string(); };

    sub("compose", "compose A B: apply B, then A", 2, [&] {
      auto f = load_table(0), g = load_table(1);
      out << text::format_table(compose(f, g));
    });
    sub("invert", "inverse of a table", 1, [&] { out << text::format_table(invert(load_table(0))); });
    sub("eq", "decide equality of two tables", 2, [&] {
      auto f = load_table(0), g = load_table(1);
      bool e = equals(f, g);
      out << (porcelain ? "equal=" : "") << detail::bool_text(e) << "\n";
    });
    sub("order", "order of an element up to a bound", 1, [&] {
      auto o = order(load_table(0), max_order);
      if (porcelain) {
        out << "order=" << (o ? std::to_string(*o) : "exceeds") << "\n";
      } else {
        out << (o ? std::to_string(*o) : "exceeds bound " + std::to_string(max_order)) << "\n";
      }
    })->add_option("--max", max_order, "search bound")->check(CLI::PositiveNumber);
    sub("support", "closed support of an element", 1, [&] {
      out << text::format_clopen(closed_support(load_table(0)));
    });
    sub("apply", "image of a rational point", 1, [&] {
      auto g = load_table(0);
      auto p = text::parse_point_line(*point_arg, g.space());
      out << (porcelain ? "point=" : "") << text::format_point_line(apply(g, p)) << "\n";
    })->add_option("--point", point_arg, "point, e.g. 'root:0 1(0)'")->required();

    sub("compress", "bisection from A onto a proper part of B", 2, [&] {
      auto a = load_clopen(0), b = load_clopen(1);
      text::Document doc{"compress", {}, {}};
      doc.add("A", text::format_clopen(a));
      doc.add("B", text::format_clopen(b));
      doc.add("bisection", text::format_bisection(compress(a, b)));
      emit_doc(doc);
    });
    sub("double", "doubling witness inside X", 1, [&] {
      auto x     = load_clopen(0);
      auto [b, c] = doubling_witness(x);
      text::Document doc{"double", {}, {}};
      doc.add("X", text::format_clopen(x));
      doc.add("first", text::format_bisection(b));
      doc.add("second", text::format_bisection(c));
      emit_doc(doc);
    });
    sub("between", "bisection from A exactly onto B", 2, [&] {
      auto a = load_clopen(0), b = load_clopen(1);
      text::Document doc{"between", {}, {}};
      doc.add("A", text::format_clopen(a));
      doc.add("B", text::format_clopen(b));
      doc.add("bisection", text::format_bisection(bisection_between(a, b)));
      emit_doc(doc);
    });
    sub("multisection", "order-3 element cycling X0 -> X1 -> X2", 3, [&] {
      auto x0 = load_clopen(0), x1 = load_clopen(1), x2 = load_clopen(2);
      auto m  = multisection(x0, x1, x2);
      text::Document doc{"multisection", {}, {}};
      doc.add("X0", text::format_clopen(x0));
      doc.add("X1", text::format_clopen(x1));
      doc.add("X2", text::format_clopen(x2));
      doc.add("element", text::format_table(m.element));
      emit_doc(doc);
    });
    sub("vigor", "element supported in X mapping Y1 into Y2", 3, [&] {
      auto x = load_clopen(0), y1 = load_clopen(1), y2 = load_clopen(2);
      auto kind = classify_vigor(x, y1, y2);
      text::Document doc{"vigor", {}, {}};
      doc.attributes["case"] = kind == VigorCase::contained ? "contained"
                               : kind == VigorCase::direct  ? "direct"
                                                            : "two-step";
      doc.add("X", text::format_clopen(x));
      doc.add("Y1", text::format_clopen(y1));
      doc.add("Y2", text::format_clopen(y2));
      doc.add("element", text::format_table(vigor_witness(x, y1, y2)));
      emit_doc(doc);
    });
    sub("conjugates", "pairwise distinct conjugates of G", 1, [&] {
      auto g   = load_table(0);
      auto fam = distinct_conjugates(g, count);
      text::Document doc{"conjugates", {{"count", std::to_string(count)}}, {}};
      doc.add("g", text::format_table(g));
      doc.add("probe", text::format_clopen(fam.probe));
      for (std::size_t m = 0; m < fam.members.size(); ++m) {
        auto const& c = fam.members[m];
        doc.add("conjugator" + std::to_string(m), text::format_table(c.conjugator));
        doc.add("conjugate" + std::to_string(m), text::format_table(c.value));
        doc.add("target" + std::to_string(m), text::format_clopen(c.target));
      }
      emit_doc(doc);
    })->add_option("--count", count, "number of conjugates")->check(CLI::PositiveNumber);

    {
      auto* s = app.add_subcommand("compressibility",
                                   "compressibility witness at a point: --cond 1 G.tbl | "
                                   "--cond 2 U1 U2 | --cond 3 U1 U2 U3");
      s->add_option("--point", point_arg, "the point x0")->required();
      s->add_option("--cond", cond, "condition 1, 2 or 3")->required()->check(CLI::Range(1, 3));
      s->add_option("files", files, "inputs")->required();
      s->callback([&] {
        action = [&] {
          std::size_t const want = cond == 1 ? 1 : cond;
          if (files.size() != want) {
            throw CLI::ValidationError("condition " + std::to_string(cond) + " needs "
                                       + std::to_string(want) + " input files");
          }
          text::Document doc{"compressibility", {{"cond", std::to_string(cond)}}, {}};
          CompressibilityWitness w;
          if (cond == 1) {
            auto g  = load_table(0);
            auto x0 = text::parse_point_line(*point_arg, g.space());
            w       = compressibility_support(x0, g);
            doc.add("point", text::format_point(x0));
            doc.add("g", text::format_table(g));
            doc.add("U", text::format_clopen(*w.subbase_set));
          } else {
            auto u1 = load_clopen(0), u2 = load_clopen(1);
            auto x0 = text::parse_point_line(*point_arg, u1.space());
            doc.add("point", text::format_point(x0));
            doc.add("U1", text::format_clopen(u1));
            doc.add("U2", text::format_clopen(u2));
            if (cond == 2) {
              w = compressibility_compress(x0, u1, u2);
            } else {
              auto u3 = load_clopen(2);
              w       = compressibility_separate(x0, u1, u2, u3);
              doc.add("U3", text::format_clopen(u3));
            }
            doc.add("element", text::format_table(*w.element));
          }
          auto x0 = text::parse_point(doc.block("point").body);
          doc.add("neighbourhood", text::format_clopen(Clopen(x0.space(), {w.neighbourhood})));
          emit_doc(doc);
        };
      });
    }

    {
      auto* s = app.add_subcommand("embed-v", "embed Thompson's group V with support containing X");
      s->add_option("--space", space_arg, "n,k,r")->required();
      s->add_option("--support", support_arg, "clopen file X")->required();
      s->add_option("vpair", files, "optional V element to evaluate")->expected(0, 1);
      s->add_option("--vigor-trials", trials, "random vigor checks to run on the image");
      s->add_option("--depth", depth, "binary cell depth for vigor checks")->check(CLI::PositiveNumber);
      s->add_option("--seed", seed, "random seed");
      s->callback([&] {
        action = [&] {
          auto space = text::parse_space_arg(*space_arg);
          auto x     = text::parse_clopen(detail::read_file(*support_arg));
          require_same_space(x.space(), space);
          auto emb = build_v_embedding(space, x);
          text::Document doc{"embedding", {}, {}};
          doc.add("X", text::format_clopen(x));
          doc.add("Y", text::format_clopen(emb.support));
          doc.add("s0", text::format_bisection(emb.s0));
          doc.add("s1", text::format_bisection(emb.s1));
          if (!files.empty()) {
            auto v = text::parse_vpair(detail::read_file(files[0]));
            doc.add("v", text::format_vpair(v));
            doc.add("image", text::format_table(evaluate_embedding(emb, v)));
          }
          emit_doc(doc);
          if (trials > 0) {
            Rng  rng(seed);
            auto rep = image_vigor_check(emb, trials, depth, rng);
            out << "# vigor trials=" << rep.trials << " successes=" << rep.successes
                << " failures=" << rep.failures << " seed=" << seed << "\n";
            if (rep.failures > 0) {
              throw DomainError("image vigor check failed");
            }
          }
        };
      });
    }

    auto space_sub = [&](char const* name, char const* help, std::function<void(SpaceSpec const&)> body) {
      auto* s = app.add_subcommand(name, help);
      s->add_option("--space", space_arg, "n,k,r or n,k_1:...:k_n,r")->required();
      s->callback([&action, &space_arg, body] {
        action = [&space_arg, body] { body(text::parse_space_arg(*space_arg)); };
      });
      return s;
    };

    space_sub("homology", "groupoid homology in one degree", [&](SpaceSpec const& space) {
      auto h = homology(space, degree);
      if (porcelain) {
        out << "degree=" << degree << "\ngroup=" << h.to_string() << "\norder=" << h.order() << "\n";
      } else {
        out << h.to_string() << "\n";
      }
    })->add_option("--degree", degree, "degree i >= 0")->required();
    space_sub("abelianization", "abelianization of the full group", [&](SpaceSpec const& space) {
      auto a = abelianization(space);
      if (porcelain) {
        out << "group=" << a.to_string() << "\norder=" << a.order() << "\n";
      } else {
        out << a.to_string() << "\n";
      }
    });
    space_sub("characters", "proper characters", [&](SpaceSpec const& space) {
      auto c = proper_characters(space);
      if (porcelain) {
        out << "count=" << c.count() << "\n";
        for (auto const& f : c.families) {
          out << "family=" << f.count << "," << f.order << "\n";
        }
        out << "dual=" << c.dual.to_string() << "\n";
        return;
      }
      if (c.families.empty()) {
        out << "no proper characters\n";
      }
      for (auto const& f : c.families) {
        out << f.count << " of order " << f.order << "\n";
      }
      out << "dual group: " << c.dual.to_string() << "\n";
    });
    space_sub("perfect", "is the group perfect", [&](SpaceSpec const& space) {
      out << (porcelain ? "perfect=" : "") << detail::bool_text(is_perfect(space)) << "\n";
    });

    bool all_ok = true;
    sub("verify", "re-check the postconditions recorded in a witness file", 1, [&] {
      for (auto const& c : verify(detail::read_file(files.at(0)))) {
        out << c.name << (porcelain ? "=" : ": ") << (c.ok ? "ok" : "FAIL") << "\n";
        all_ok = all_ok && c.ok;
      }
    });

    try {
      std::reverse(args.begin(), args.end());
      app.parse(std::move(args));
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    try {
      action();
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return 2;
    } catch (CLI::ValidationError const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    } catch (DomainError const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    return all_ok ? 0 : 1;
  }

}  // namespace bht::cli
