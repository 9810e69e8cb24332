#include <catch2/catch_amalgamated.hpp>
#include <orbispec/cli.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace orbispec;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string census_fingerprint(const FlatOrbifoldSpec& spec) {
  std::ostringstream os;
  for (const auto& s : singular_strata(spec))
    os << s.dim << '|' << s.isotropy_order << '|' << s.volume.str() << '|'
       << s.orbit_size << ';';
  return os.str();
}

}  // namespace

TEST_CASE("doubles render with twelve significant digits") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(39.47841760435743) == "39.4784176044");
  CHECK(format_double(1e-9) == "1e-09");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("spec JSON round-trips to the identical normalized form") {
  for (const char* name : {"O(4,2)", "M(4,2)", "square_2222", "disk_2star22",
                           "sphere_244", "hex_cone_d6", "klein_bottle", "torus(3)"}) {
    FlatOrbifoldSpec original = catalog(name);
    nlohmann::json j1 = spec_to_json(original);
    FlatOrbifoldSpec reloaded = spec_from_json(j1, "round-trip");
    nlohmann::json j2 = spec_to_json(reloaded);
    CAPTURE(name);
    CHECK(j1 == j2);
    CHECK(j1.dump() == j2.dump());
    REQUIRE(reloaded.holonomy.size() == original.holonomy.size());
    for (size_t i = 0; i < original.holonomy.size(); ++i) {
      CHECK(reloaded.holonomy[i].M == original.holonomy[i].M);
      CHECK(reloaded.holonomy[i].t == original.holonomy[i].t);
    }
    CHECK(census_fingerprint(reloaded) == census_fingerprint(original));
  }
}

TEST_CASE("builtin references resolve through the catalog") {
  FlatOrbifoldSpec via_load = load_spec("builtin:O(4,2)");
  FlatOrbifoldSpec direct = catalog("O(4,2)");
  CHECK(via_load.name == direct.name);
  CHECK(via_load.holonomy.size() == direct.holonomy.size());
  CHECK_THROWS_AS(load_spec("builtin:no_such_entry"), std::exception);
}

TEST_CASE("spec files load from disk and errors carry the file context") {
  std::string path = "io_cli_roundtrip.json";
  {
    std::ofstream f(path);
    f << spec_to_json(catalog("disk_22star")).dump(2);
  }
  FlatOrbifoldSpec loaded = load_spec(path);
  CHECK(loaded.name == "disk_22star");
  CHECK(census_fingerprint(loaded) == census_fingerprint(catalog("disk_22star")));
  std::remove(path.c_str());

  CHECK_THROWS_WITH(load_spec("missing_file.json"),
                    Catch::Matchers::ContainsSubstring("missing_file.json"));
}

TEST_CASE("spec validation rejects malformed input with context") {
  auto parse = [](const std::string& text) {
    return spec_from_json(nlohmann::json::parse(text), "test.json");
  };
  // missing field
  CHECK_THROWS_WITH(parse(R"({"name":"x","dim":2,"gram":[["1","0"],["0","1"]]})"),
                    Catch::Matchers::ContainsSubstring("test.json") &&
                        Catch::Matchers::ContainsSubstring("generators"));
  // gram shape
  CHECK_THROWS_WITH(parse(R"({"name":"x","dim":2,"gram":[["1","0"]],"generators":[]})"),
                    Catch::Matchers::ContainsSubstring("dim x dim"));
  // bad rational
  CHECK_THROWS_WITH(
      parse(R"({"name":"x","dim":1,"gram":[["one"]],"generators":[]})"),
      Catch::Matchers::ContainsSubstring("gram"));
  // non-integer matrix entry
  CHECK_THROWS_WITH(
      parse(
          R"({"name":"x","dim":1,"gram":[["1"]],"generators":[{"matrix":[[0.5]],"a":["0"]}]})"),
      Catch::Matchers::ContainsSubstring("integer"));
  // matrix does not preserve the form
  CHECK_THROWS_WITH(
      parse(
          R"({"name":"x","dim":2,"gram":[["1","0"],["0","2"]],"generators":[{"matrix":[[0,1],[1,0]],"a":["0","0"]}]})"),
      Catch::Matchers::ContainsSubstring("validation failed"));
  // wrong a length
  CHECK_THROWS_WITH(
      parse(
          R"({"name":"x","dim":2,"gram":[["1","0"],["0","1"]],"generators":[{"matrix":[[1,0],[0,-1]],"a":["0"]}]})"),
      Catch::Matchers::ContainsSubstring("'a'"));
}

TEST_CASE("translation data is the matrix times the given lattice coordinates") {
  // a = (0, 1/2) for the glide means t = M a = (0, -1/2) ~ (0, 1/2) mod 1
  auto j = nlohmann::json::parse(
      R"({"name":"kb","dim":2,"gram":[["1","0"],["0","1"]],
          "generators":[{"matrix":[[1,0],[0,-1]],"a":["1/2","0"]}]})");
  FlatOrbifoldSpec kb = spec_from_json(j, "test.json");
  REQUIRE(kb.holonomy.size() == 2);
  CHECK(kb.holonomy[1].t == RatVec{Rat(1, 2), Rat(0)});
  CHECK(singular_strata(kb).empty());
}

TEST_CASE("spectrum tables render exactly") {
  SpectrumTable t = p_spectrum(catalog("sphere_244"), 0, Rat(3));
  CHECK(spectrum_tsv(t) ==
        "# spec\tsphere_244\tp\t0\tcutoff\t3\n"
        "q_num\tq_den\tlambda\tmultiplicity\n"
        "0\t1\t0\t1\n"
        "1\t1\t39.4784176044\t1\n"
        "2\t1\t78.9568352087\t1\n");
  nlohmann::json j = spectrum_json(t);
  CHECK(j["spec"] == "sphere_244");
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][1]["multiplicity"] == 1);
  CHECK(j["rows"][1]["q"] == "1");
}

TEST_CASE("strata tables include orientability and one row per stratum") {
  FlatOrbifoldSpec spec = catalog("O(4,2)");
  auto census = singular_strata(spec);
  std::string tsv = strata_tsv(spec, census);
  CHECK(tsv.find("orientability\tglobally orientable") != std::string::npos);
  CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 2 + 4);  // header lines + strata
  nlohmann::json j = strata_json(spec, census);
  REQUIRE(j["strata"].size() == 4);
  CHECK(j["strata"][0]["codim"] == 2);
  CHECK(j["strata"][0]["volume"] == "1");
}

TEST_CASE("cli krawtchouk value, zero, and scan output") {
  CliRun zeros = cli({"krawtchouk", "--d", "4", "--p", "2", "--zeros"});
  CHECK(zeros.code == 0);
  CHECK(zeros.out == "1 3\n");

  CliRun mid = cli({"krawtchouk", "--d", "6", "--p", "1", "--zeros"});
  CHECK(mid.code == 0);
  CHECK(mid.out == "3\n");

  CliRun table = cli({"krawtchouk", "--d", "4", "--p", "2"});
  CHECK(table.code == 0);
  CHECK(table.out == "x\tvalue\n0\t6\n1\t0\n2\t-2\n3\t0\n4\t6\n");

  CliRun scan = cli({"krawtchouk", "--scan-odd-dims", "9"});
  CHECK(scan.code == 0);
  CHECK(scan.out ==
        "3: none\n"
        "5: none\n"
        "7: none\n"
        "9: (2,3) (2,6) (3,2) (3,7) (6,2) (6,7) (7,3) (7,6)\n");
}

TEST_CASE("cli compare reports equality and divergence with exit codes") {
  CliRun eq = cli({"compare", "--spec-a", "builtin:O(4,2)", "--spec-b", "builtin:M(4,2)",
                   "--p", "1", "--cutoff", "4"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "EQUAL\n");

  CliRun div = cli({"compare", "--spec-a", "builtin:O(4,2)", "--spec-b",
                    "builtin:M(4,2)", "--p", "0", "--cutoff", "4"});
  CHECK(div.code == 3);
  CHECK(div.out == "DIVERGES at q=1: 6 vs 4\n");
}

TEST_CASE("cli table outputs are byte-deterministic") {
  std::vector<std::string> args = {"spectrum", "--spec",   "builtin:hex_cone_d6",
                                   "--p",      "1",        "--cutoff",
                                   "2",        "--format", "json"};
  CliRun first = cli(args);
  CliRun second = cli(args);
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK_FALSE(first.out.empty());

  CliRun strata = cli({"strata", "--spec", "builtin:square_2222"});
  CHECK(strata.code == 0);
  CHECK(strata.out == cli({"strata", "--spec", "builtin:square_2222"}).out);
}

TEST_CASE("cli heat emits invariants and optional trace checks") {
  CliRun plain = cli({"heat", "--spec", "builtin:O(4,1)", "--p", "0"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("B_minus\t1/2") != std::string::npos);
  CHECK(plain.out.find("trace_check") == std::string::npos);

  CliRun checked = cli({"heat", "--spec", "builtin:torus", "--p", "0", "--cutoff", "50",
                        "--t", "0.02", "--format", "json"});
  CHECK(checked.code == 0);
  nlohmann::json j = nlohmann::json::parse(checked.out);
  REQUIRE(j["trace_check"]["rows"].size() == 1);
  CHECK(j["trace_check"]["rows"][0]["rel_error"].get<double>() < 1e-3);
}

TEST_CASE("cli rejects bad input with exit code 2") {
  CHECK(cli({"nonsense"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"spectrum", "--spec", "builtin:torus"}).code == 2);  // missing required
  CHECK(cli({"spectrum", "--spec", "builtin:torus", "--p", "9", "--cutoff", "1"}).code ==
        2);  // p out of range
  CHECK(cli({"spectrum", "--spec", "builtin:torus", "--p", "0", "--cutoff", "x"}).code ==
        2);
  CHECK(cli({"spectrum", "--spec", "no_such.json", "--p", "0", "--cutoff", "1"}).code ==
        2);
  CHECK(cli({"krawtchouk", "--d", "4", "--zeros"}).code == 2);  // --zeros needs --p
  CHECK(cli({"krawtchouk", "--zeros"}).code == 2);
  CHECK(cli({"strata", "--spec", "builtin:torus", "--format", "xml"}).code == 2);
  CliRun bad = cli({"heat", "--spec", "builtin:torus", "--p", "0", "--t", "-1"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli help exits cleanly") {
  CliRun top = cli({"--help"});
  CHECK(top.code == 0);
  CHECK(top.out.find("spectrum") != std::string::npos);
  CHECK(top.out.find("verify-paper") != std::string::npos);
  CliRun sub = cli({"spectrum", "--help"});
  CHECK(sub.code == 0);
  CHECK(sub.out.find("--cutoff") != std::string::npos);
}
