#include <doctest.h>

#include "ambikit/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace ambikit;

namespace {

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const char* path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("AMBIKIT_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "AMBIKIT_CLI must point at the command line binary");
  std::string cmd = std::string("\"") + bin + "\" " + args + " >cli_out.txt 2>cli_err.txt";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp("cli_out.txt");
  r.err = slurp("cli_err.txt");
  std::remove("cli_out.txt");
  std::remove("cli_err.txt");
  return r;
}

void write_file(const char* path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

struct Fixtures {
  Fixtures() {
    write_file("fx_a.json", R"({"coeffs": [[1,0],[2,0],[0,0],[2,0],[4,0]]})");
    write_file("fx_b.json", R"({"coeffs": [[2,0],[4,0],[0,0],[1,0],[2,0]]})");
    write_file("fx_c.json", R"({"coeffs": [[1,0],[3,0]]})");
    write_file("fx_float.json", R"({"coeffs": [[1.5,0],[2,0]]})");
    write_file("fx_bad.json", "{\"coeffs\": [[1,0]");
    write_file("fx_mult.json",
               R"({"support": [0,1,3], "values": [[1,0],[1,0],["3/5","4/5"]]})");
    write_file("fx_m_sig.json", R"({"coeffs": [[1,0],[1,0],[0,0],[1,0]]})");
    write_file("fx_poly.json", R"({"coeffs": [[2,0],[-3,0],[1,0]]})");
    write_file("fx_pulse.json",
               R"({"signal": {"coeffs": [[1,0],[2,0],[0,0],[2,0],[4,0]]}, "eta": "1/3"})");
  }
  ~Fixtures() {
    for (const char* p : {"fx_a.json", "fx_b.json", "fx_c.json", "fx_float.json", "fx_bad.json",
                          "fx_mult.json", "fx_m_sig.json", "fx_poly.json", "fx_pulse.json",
                          "fx_mb.json", "fx_i_a.json", "fx_i_b.json"})
      std::remove(p);
  }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("predicate subcommands use the three-way exit convention") {
    Fixtures fx;

    auto yes = run_cli("partner-check fx_a.json fx_b.json");
    CHECK(yes.code == 0);
    CHECK(Json::parse(yes.out).at("partner").get<bool>());

    auto no = run_cli("partner-check fx_a.json fx_c.json");
    CHECK(no.code == 1);
    CHECK_FALSE(Json::parse(no.out).at("partner").get<bool>());

    auto bad = run_cli("partner-check fx_a.json fx_bad.json");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
    CHECK(bad.err.find("fx_bad.json") != std::string::npos);

    auto missing = run_cli("partner-check fx_a.json no_such.json");
    CHECK(missing.code == 2);
  }

  TEST_CASE("trivial and restricted checks report witnesses") {
    Fixtures fx;

    auto none = run_cli("trivial-check fx_a.json fx_b.json");
    CHECK(none.code == 1);
    CHECK(Json::parse(none.out) == Json("none"));

    auto self = run_cli("trivial-check fx_a.json fx_a.json");
    CHECK(self.code == 0);
    Json w = Json::parse(self.out);
    CHECK(w.at("beta").get<double>() == 0.0);
    CHECK(w.at("reflected").get<bool>() == false);

    // the worked pair is a partner pair but not shift-wise proportional
    auto restricted = run_cli("restricted-check fx_a.json fx_b.json");
    CHECK(restricted.code == 1);
    CHECK(Json::parse(restricted.out) == Json("none"));
  }

  TEST_CASE("mode rules: exact refuses float literals, auto demotes with a note") {
    Fixtures fx;

    auto refused = run_cli("--mode exact partner-check fx_float.json fx_float.json");
    CHECK(refused.code == 2);
    CHECK(refused.err.find("float literal") != std::string::npos);

    auto demoted = run_cli("partner-check fx_float.json fx_float.json");
    CHECK(demoted.code == 0);
    CHECK(demoted.err.find("note: float literal in input, computing in float mode") !=
          std::string::npos);

    auto forced = run_cli("--mode float partner-check fx_a.json fx_b.json");
    CHECK(forced.code == 0);
    CHECK(forced.err.empty());

    auto exact_ok = run_cli("--mode exact partner-check fx_a.json fx_b.json");
    CHECK(exact_ok.code == 0);
    CHECK(exact_ok.err.empty());
  }

  TEST_CASE("multiplier and bset subcommands") {
    Fixtures fx;

    auto cond = run_cli("multiplier check fx_mult.json");
    CHECK(cond.code == 0);
    CHECK(Json::parse(cond.out).at("condition").get<bool>());

    auto applied = run_cli("-o fx_mb.json multiplier apply fx_mult.json fx_m_sig.json");
    CHECK(applied.code == 0);
    auto partner = run_cli("partner-check fx_m_sig.json fx_mb.json");
    CHECK(partner.code == 0);

    // multiplier partners are exactly the shift-wise proportional kind
    auto restricted = run_cli("restricted-check fx_m_sig.json fx_mb.json");
    CHECK(restricted.code == 0);
    CHECK(Json::parse(restricted.out).at("eta").size() == 4);

    CHECK(run_cli("bset test --order 2 0,1,3").code == 0);
    CHECK(run_cli("bset test --order 3 0,1,3").code == 1);
    CHECK(run_cli("bset test 1,2,4,8,16").code == 0);

    auto rec = run_cli("bset recover 0,1,8,11 -- -5,-4,3,6");
    CHECK(rec.code == 0);
    Json rj = Json::parse(rec.out);
    CHECK(rj.at("orientation").get<std::string>() == "direct");
    CHECK(rj.at("m").get<long>() == 5);
  }

  TEST_CASE("matrix gram-check mirrors partner-check") {
    Fixtures fx;
    CHECK(run_cli("matrix gram-check fx_a.json fx_b.json").code == 0);
    CHECK(run_cli("matrix gram-check fx_a.json fx_c.json").code == 1);
  }

  TEST_CASE("interleave output feeds back into partner-check") {
    Fixtures fx;
    auto inter = run_cli("strange interleave --alpha \"1;2;-1\" --lambda 3/2");
    CHECK(inter.code == 0);
    Json j = Json::parse(inter.out);
    CHECK_FALSE(j.at("degenerate").get<bool>());
    write_file("fx_i_a.json", j.at("a").dump());
    write_file("fx_i_b.json", j.at("b").dump());
    CHECK(run_cli("partner-check fx_i_a.json fx_i_b.json").code == 0);
    CHECK(run_cli("trivial-check fx_i_a.json fx_i_b.json").code == 1);
  }

  TEST_CASE("hermite partner-scan lists the reflection pair") {
    Fixtures fx;
    auto scan = run_cli("hermite partner-scan fx_poly.json");
    CHECK(scan.code == 0);
    CHECK(Json::parse(scan.out).at("survivors").size() == 2);

    auto generic = run_cli("hermite generic-check fx_poly.json");
    CHECK(generic.code == 0);
  }

  TEST_CASE("pulse grid prints the CSV header first") {
    Fixtures fx;
    auto grid = run_cli("pulse grid fx_pulse.json --xrange 0:1:0.5 --yrange -1:1:1");
    CHECK(grid.code == 0);
    CHECK(grid.out.rfind("x,y,abs,re,im\n", 0) == 0);
    long rows = std::count(grid.out.begin(), grid.out.end(), '\n');
    CHECK(rows == 1 + 3 * 3);
  }

  TEST_CASE("pulse verify passes the closed form against quadrature") {
    Fixtures fx;
    auto v = run_cli("pulse verify fx_pulse.json --samples 40");
    CHECK(v.code == 0);
    Json j = Json::parse(v.out);
    CHECK(j.at("max_abs_error").get<double>() <= j.at("tol").get<double>());
    CHECK_FALSE(j.contains("warning"));
  }

  TEST_CASE("selftest passes and reports every row") {
    auto text = run_cli("selftest");
    CHECK(text.code == 0);
    CHECK(text.out.find("FAIL") == std::string::npos);

    auto js = run_cli("selftest --json");
    CHECK(js.code == 0);
    Json rows = Json::parse(js.out);
    REQUIRE(rows.is_array());
    CHECK(rows.size() >= 15);
    for (const auto& row : rows) CHECK(row.at("pass").get<bool>());
  }

  TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("partner-check only_one.json").code == 2);
    auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK(help.out.find("partner-check") != std::string::npos);
  }
}
