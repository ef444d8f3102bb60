#include <catch_amalgamated.hpp>

#include <bht_cli.hpp>

#include "oracle.hpp"
#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace bht;
using namespace testing;

namespace {

  namespace fs = std::filesystem;

  std::string const data = BHT_SAMPLES_DIR;

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string in(std::string const& name) {
    return data + "/" + name;
  }

  fs::path scratch() {
    static fs::path dir = [] {
      auto d = fs::temp_directory_path() / ("bht_cli_test_" + std::to_string(::getpid()));
      fs::create_directories(d);
      return d;
    }();
    return dir;
  }

  std::string write(std::string const& name, std::string const& content) {
    auto path = scratch() / name;
    std::ofstream(path) << content;
    return path.string();
  }

  bool all_ok(std::string const& report) {
    return report.find("FAIL") == std::string::npos && !report.empty();
  }

}  // namespace

TEST_CASE("groups from the command line") {
  auto r = run({"homology", "--space", "2,3,5", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z_2\n");
  CHECK(run({"abelianization", "--space", "2,7,1"}).out == "Z_12\n");
  CHECK(run({"abelianization", "--space", "3,5,1"}).out == "Z_2 x Z_4 x Z_4\n");
  CHECK(run({"--porcelain", "perfect", "--space", "2,2:3,1"}).out == "perfect=true\n");
  CHECK(run({"perfect", "--space", "1,3,1", "--porcelain"}).out == "perfect=false\n");
  CHECK(run({"characters", "--space", "2,7,1"}).out == "1 of order 12\ndual group: Z_12\n");
  auto mixed = run({"abelianization", "--space", "2,3:5,1"});
  CHECK(mixed.code == 1);
  CHECK(mixed.err.find("not determined") != std::string::npos);
  CHECK(run({"homology", "--space", "2,3:5,1", "--degree", "1"}).out == "Z_2\n");
}

TEST_CASE("element commands") {
  auto r = run({"eq", in("id.tbl"), in("id.tbl")});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"eq", in("swap.tbl"), in("id.tbl")}).out == "false\n");
  CHECK(run({"order", in("a.tbl"), "--max", "64"}).out == "exceeds bound 64\n");
  CHECK(run({"--porcelain", "order", in("swap.tbl")}).out == "order=2\n");
  CHECK(run({"invert", in("a.tbl")}).out
        == "table n=1 k=2 r=1\nroot:0 00 -> root:0 0\nroot:0 01 -> root:0 10\nroot:0 1 -> root:0 11\n");
  CHECK(run({"support", in("id.tbl")}).out == "space n=1 k=2 r=1\n");
  CHECK(run({"apply", in("swap.tbl"), "--point", "root:0 (0)"}).out == "root:0 1(0)\n");
  CHECK(run({"compose", in("swap.tbl"), in("id.tbl")}).code == 0);
  CHECK(run({"compose", in("swap.tbl"), in("g2v2.tbl")}).code == 1);
}

TEST_CASE("emitted files re-parse to equal values") {
  auto composed = run({"compose", in("a.tbl"), in("swap.tbl")});
  REQUIRE(composed.code == 0);
  auto path  = write("composed.tbl", composed.out);
  auto again = run({"compose", path, in("id.tbl")});
  CHECK(again.out == composed.out);
  CHECK(run({"invert", write("inv.tbl", run({"invert", path}).out)}).out == composed.out);

  auto support = run({"support", in("g2v2.tbl")});
  REQUIRE(support.code == 0);
  CHECK(text::format_clopen(text::parse_clopen(support.out)) == support.out);

  // byte-stable
  CHECK(run({"conjugates", in("swap.tbl"), "--count", "4"}).out
        == run({"conjugates", in("swap.tbl"), "--count", "4"}).out);
  CHECK(run({"embed-v", "--space", "1,3,1", "--support", in("v3_X.clp"), in("swap.vpair"),
             "--vigor-trials", "5"}).out
        == run({"embed-v", "--space", "1,3,1", "--support", in("v3_X.clp"), in("swap.vpair"),
                "--vigor-trials", "5"}).out);
}

TEST_CASE("every witness command verifies") {
  std::vector<std::vector<std::string>> commands = {
      {"compress", in("one.clp"), in("X.clp")},
      {"double", in("X.clp")},
      {"between", in("X.clp"), in("one.clp")},
      {"multisection", in("k4_0.clp"), in("k4_1.clp"), in("k4_2.clp")},
      {"vigor", in("X.clp"), in("Y1.clp"), in("Y2.clp")},
      {"conjugates", in("swap.tbl"), "--count", "3"},
      {"compressibility", "--point", "root:0 (0)", "--cond", "1", in("in_one.tbl")},
      {"compressibility", "--point", "root:0 (0)", "--cond", "2", in("U1.clp"), in("U2.clp")},
      {"compressibility", "--point", "root:0 (0)", "--cond", "3", in("U1.clp"), in("U2b.clp"),
       in("U3.clp")},
      {"embed-v", "--space", "1,3,1", "--support", in("v3_X.clp"), in("swap.vpair")},
  };
  for (auto const& cmd : commands) {
    INFO(cmd[0]);
    auto r = run(cmd);
    REQUIRE(r.code == 0);
    auto v = run({"verify", write("w.txt", r.out)});
    CHECK(v.code == 0);
    CHECK(all_ok(v.out));
  }
  auto r = run({"vigor", in("X.clp"), in("Y1.clp"), in("Y2.clp")});
  auto v = run({"verify", write("vigor.txt", r.out)});
  CHECK(v.out == "inputs-valid: ok\nsupport-inside-X: ok\nimage-inside-Y2: ok\norder-3: ok\n");
}

TEST_CASE("exit codes and error positions") {
  auto bad = write("bad.tbl", "table n=1 k=2 r=1\nroot:0 0 -> root:0 1\nroot:0 1 -> root:0 Q\n");
  auto r   = run({"invert", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({"invert", (scratch() / "missing.tbl").string()}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"order", in("a.tbl"), "--max", "0"}).code == 2);
  CHECK(run({"homology", "--space", "2,x,1", "--degree", "0"}).code == 2);
  CHECK(run({"compressibility", "--point", "root:0 (0)", "--cond", "1", in("swap.tbl")}).code == 1);
  CHECK(run({"between", in("k4_0.clp"), write("two.clp", "space n=1 k=4 r=1\nroot:0 1\nroot:0 2\n")})
            .code
        == 1);
  CHECK(run({"embed-v", "--space", "1,2,1", "--support", in("v3_X.clp")}).code == 1);
  auto notwitness = write("nw.txt", "witness teleport\n@X\nspace n=1 k=2 r=1\n");
  CHECK(run({"verify", notwitness}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

namespace {

  // Truth of the module postconditions for a parsed witness, by the oracle.
  bool vigor_truth(text::Document const& doc) {
    auto x  = text::parse_clopen(doc.block("X").body);
    auto y1 = text::parse_clopen(doc.block("Y1").body);
    auto y2 = text::parse_clopen(doc.block("Y2").body);
    auto g  = text::parse_table(doc.block("element").body);
    auto sp = oracle::of(x.space());
    if (!(x.space() == g.space()) || !(y1.space() == x.space()) || !(y2.space() == x.space())) {
      return false;
    }
    return oracle::supported_in(sp, oracle::cells_of(g), x.bricks())
           && oracle::maps_into(sp, oracle::cells_of(g), y1.bricks(), y2.bricks());
  }

  bool multisection_truth(text::Document const& doc) {
    Clopen x[3] = {text::parse_clopen(doc.block("X0").body), text::parse_clopen(doc.block("X1").body),
                   text::parse_clopen(doc.block("X2").body)};
    auto   g    = text::parse_table(doc.block("element").body);
    auto   sp   = oracle::of(g.space());
    auto   c    = oracle::cells_of(g);
    std::vector<Brick> all;
    for (auto const& xi : x) {
      if (!(xi.space() == g.space())) {
        return false;
      }
      all.insert(all.end(), xi.bricks().begin(), xi.bricks().end());
    }
    return oracle::is_identity(sp, {c, c, c}) && !oracle::is_identity(sp, {c})
           && oracle::supported_in(sp, c, all) && oracle::maps_into(sp, c, x[0].bricks(), x[1].bricks())
           && oracle::maps_into(sp, c, x[1].bricks(), x[2].bricks())
           && oracle::maps_into(sp, c, x[2].bricks(), x[0].bricks());
  }

  bool compress_truth(text::Document const& doc) {
    auto a = text::parse_clopen(doc.block("A").body);
    auto b = text::parse_clopen(doc.block("B").body);
    auto s = text::parse_bisection(doc.block("bisection").body);
    if (!(a.space() == b.space()) || !(s.space() == a.space())) {
      return false;
    }
    auto sp = oracle::of(a.space());
    return oracle::same_set(sp, s.dom_bricks(), a.bricks())
           && oracle::inside(sp, s.ran_bricks(), b.bricks())
           && !oracle::inside(sp, b.bricks(), s.ran_bricks());
  }

  std::string mutate(std::string text, Rng& rng) {
    auto header_end = text.find('\n');
    for (;;) {
      auto i = header_end + 1 + detail::uniform_index(rng, text.size() - header_end - 1);
      switch (rng() % 3) {
        case 0:  // change a letter
          if (text[i] >= '0' && text[i] <= '9') {
            text[i] = static_cast<char>('0' + rng() % 4);
            return text;
          }
          break;
        case 1: {  // drop a line
          auto start = text.rfind('\n', i);
          auto stop  = text.find('\n', i);
          if (start != std::string::npos && stop != std::string::npos && text[start + 1] != '@') {
            text.erase(start, stop - start);
            return text;
          }
          break;
        }
        default:  // extend a word
          if (text[i] >= '0' && text[i] <= '9') {
            text.insert(i + 1, 1, static_cast<char>('0' + rng() % 2));
            return text;
          }
          break;
      }
    }
  }

}  // namespace

TEST_CASE("verify never passes a broken witness") {
  Rng rng(43);
  struct Kind {
    std::vector<std::string>                    cmd;
    std::function<bool(text::Document const&)> truth;
  };
  std::vector<Kind> kinds = {
      {{"vigor", in("X.clp"), in("Y1.clp"), in("Y2.clp")}, vigor_truth},
      {{"multisection", in("k4_0.clp"), in("k4_1.clp"), in("k4_2.clp")}, multisection_truth},
      {{"compress", in("one.clp"), in("X.clp")}, compress_truth},
  };
  std::size_t rejected = 0, tried = 0;
  for (auto const& kind : kinds) {
    auto original = run(kind.cmd).out;
    for (int i = 0; i < 300; ++i) {
      auto broken = mutate(original, rng);
      auto v      = run({"verify", write("fuzz.txt", broken)});
      ++tried;
      if (v.code != 0) {
        ++rejected;
        continue;
      }
      INFO(broken);
      CHECK(kind.truth(text::parse_document(broken)));
    }
  }
  // most mutations break something
  CHECK(rejected * 2 > tried);
}
