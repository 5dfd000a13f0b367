#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

namespace fs = std::filesystem;
using monoperad::cli::run;

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool contains(std::string const& haystack, std::string const& needle) {
    return haystack.find(needle) != std::string::npos;
  }

  fs::path scratch(std::string const& name) {
    fs::path dir = fs::temp_directory_path() / "monoperad-cli-test";
    fs::create_directories(dir);
    return dir / name;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream     in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
}  // namespace

TEST_CASE("dims prints the first dimensions") {
  auto r = call({"dims", "--operad", "prt", "--max-arity", "6"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,1,2,5,14,42"));
  CHECK(contains(r.out, "result: pass"));

  r = call({"dims", "--operad", "per", "--max-arity", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "predicate enumeration"));
  CHECK(contains(r.out, "1,2,6,24,120"));

  r = call({"dims", "--operad", "end", "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,4,27,256"));
}

TEST_CASE("dims flags the segmented composition row") {
  auto const r = call({"dims", "--operad", "scomp", "--max-arity", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,3,9,27,81"));
  CHECK(contains(r.out, "suspected misprint"));
}

TEST_CASE("dims from explicit generators") {
  auto r = call({"dims", "--generators", "00,01", "--monoid", "N2",
                 "--max-arity", "5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,2,4,8,16"));
  r = call({"dims", "--generators", "00,01", "--symmetric", "--max-arity", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1,3,13,75"));
}

TEST_CASE("JSON reports parse") {
  auto const r = call({"dims", "--operad", "motz", "--max-arity", "5", "--json"});
  REQUIRE(r.code == 0);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["result"] == "pass");
  CHECK(j["rows"].size() == 5);
  CHECK(j.contains("wall_time_s"));
}

TEST_CASE("gen writes deterministic JSONL") {
  fs::path const a = scratch("a.jsonl");
  fs::path const b = scratch("b.jsonl");
  REQUIRE(call({"gen", "--operad", "comp", "--max-arity", "4", "--out",
                a.string()})
              .code
          == 0);
  REQUIRE(call({"gen", "--operad", "comp", "--max-arity", "4", "--out",
                b.string()})
              .code
          == 0);
  std::string const text = slurp(a);
  CHECK(text == slurp(b));
  std::istringstream lines(text);
  std::string        line;
  std::size_t        count = 0;
  while (std::getline(lines, line)) {
    auto const j = nlohmann::json::parse(line);
    CHECK(j["monoid"] == "N2");
    CHECK(j["letters"].is_array());
    ++count;
  }
  CHECK(count == 1 + 2 + 4 + 8);
  CHECK(text.rfind("{\"monoid\":\"N2\",\"letters\":[0]}\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"gen", "--operad", "end"}).code == 2);
  CHECK(call({"gen", "--operad", "nonsense"}).code == 2);
  CHECK(call({"gen", "--operad", "prt", "--out", "/nonexistent/dir/x.jsonl"})
            .code
        == 2);
  CHECK(call({"dims"}).code == 2);
  CHECK(call({"dims", "--operad", "prt", "--generators", "01"}).code == 2);
  CHECK(call({"dims", "--operad", "prt", "--max-arity", "0"}).code == 2);
  CHECK(call({"check", "wibble"}).code == 2);
  CHECK(call({"check", "axioms"}).code == 2);
  CHECK(call({"check", "relations", "--operad", "per"}).code == 2);
  CHECK(call({"check", "bijections", "--operad", "dias"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"dims", "--generators", "0x"}).code == 2);
  auto const r = call({"gen", "--operad", "end"});
  CHECK(contains(r.err, "not finitely generated"));
}

TEST_CASE("help exits with 0") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"check", "--help"}).code == 0);
}

TEST_CASE("check subcommands pass on the presets") {
  CHECK(call({"check", "axioms", "--monoid", "N2", "--max-arity", "3"}).code
        == 0);
  CHECK(call({"check", "characterization", "--operad", "schr", "--max-arity",
              "5"})
            .code
        == 0);
  CHECK(call({"check", "relations", "--operad", "comp"}).code == 0);
  CHECK(call({"check", "presentation", "--operad", "fcat1", "--max-arity",
              "5"})
            .code
        == 0);
  CHECK(call({"check", "bijections", "--operad", "motz", "--max-arity", "5"})
            .code
        == 0);
  CHECK(call({"check", "functor", "--max-arity", "4"}).code == 0);
}

TEST_CASE("an invalid relation file yields a counterexample") {
  fs::path const p = scratch("bad.rel");
  {
    std::ofstream f(p);
    f << "# not a relation of this operad\n"
         "b(b(.,.),.) == b(.,b(.,.))\n"
         "a(a(.,.),.) == a(.,a(.,.))\n";
  }
  auto const r = call({"check", "relations", "--operad", "fcat1",
                       "--relations", p.string()});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL"));

  fs::path const q = scratch("garbled.rel");
  {
    std::ofstream f(q);
    f << "a(.,.) == \n";
  }
  CHECK(call({"check", "relations", "--operad", "fcat1", "--relations",
              q.string()})
            .code
        == 2);
  CHECK(call({"check", "relations", "--operad", "fcat1", "--relations",
              scratch("missing.rel").string()})
            .code
        == 2);
}
