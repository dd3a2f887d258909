#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("abflux_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const auto out = scratch() / "stdout";
  const auto err = scratch() / "stderr";
  const std::string cmd = env + " '" ABFLUX_CLI_PATH "' " + args + " >'" + out.string() + "' 2>'" +
                          err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("spectrum: Coulomb rows") {
  const auto r = run("spectrum --nu -1 --lambda -1 --mu0 0.5 --n-max 2 --q-max 0 --k 0");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "nu,lambda,mu0,n,q,k,gamma,energy,unit\n"
        "-1,-1,0.5,0,0,0,0.5,-0.111111111111,reduced\n"
        "-1,-1,0.5,1,0,0,0.5,-0.04,reduced\n"
        "-1,-1,0.5,2,0,0,0.5,-0.0204081632653,reduced\n");
}

TEST_CASE("spectrum: oscillator rows") {
  const auto r = run("spectrum --nu 2 --lambda 1 --mu0 0 --n-max 1 --q-max 0 --k 0");
  CHECK(r.code == 0);
  CHECK(r.out == "nu,lambda,mu0,n,q,k,gamma,energy,unit\n2,1,0,0,0,0,0,3,reduced\n"
                 "2,1,0,1,0,0,0,7,reduced\n");
}

TEST_CASE("spectrum: invalid exponent exits 2 with a one-line message") {
  const auto r = run("spectrum --nu 0 --lambda 1");
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("valid ranges") != std::string::npos);
  CHECK(r.err.find('\n') == r.err.size() - 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("spectrum --nu 1 --format xml").code == 2);
  CHECK(run("spectrum --nu 1 --k 0 --k-range -1..1").code == 2);
  CHECK(run("spectrum --nu 1 --k-range 3..1").code == 2);
  CHECK(run("spectrum --nu 1 --units fig2a").code == 2);
  CHECK(run("spectrum --nu 1", "ABFLUX_WORKERS=zero").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify-action --nu -1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("non-convergence exits 3") {
  const auto r = run("shoot --nu 2 --lambda 1 --shoot-max-bisections 2");
  CHECK(r.code == 3);
  CHECK(r.err.find("bisection") != std::string::npos);
}

TEST_CASE("JSON output parses back") {
  const auto r = run("spectrum --nu 1 --lambda 1 --n-max 2 --q-max 1 --k-range -1..1 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 18u);
  CHECK(doc["potential"]["kind"] == "power_law");
}

TEST_CASE("config file supplies values and flags override it") {
  const auto cfg = scratch() / "run.cfg";
  std::ofstream(cfg) << "# test config\nnu=-1\nlambda=-1\nmu0=0.5\nn-max=1\n";
  const auto a = run("spectrum --config '" + cfg.string() + "'");
  CHECK(a.code == 0);
  CHECK(a.out.find("-1,-1,0.5,1,0,0,0.5,-0.04,reduced") != std::string::npos);
  const auto b = run("spectrum --config '" + cfg.string() + "' --n-max 0");
  CHECK(b.out.find("-0.04") == std::string::npos);

  const auto bad = scratch() / "bad.cfg";
  std::ofstream(bad) << "colour=blue\n";
  CHECK(run("spectrum --nu 1 --config '" + bad.string() + "'").code == 2);
}

TEST_CASE("compare-well output and SVG") {
  const auto svg = scratch() / "well.svg";
  const auto r = run("compare-well --gamma 2.5 --n-max 10 --svg '" + svg.string() + "'");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("gamma,n,E_exact,E_semiclassical,diff\n", 0) == 0);
  CHECK(r.out.find("\n2.5,0,4.1244272986,5.0625,0.9380727014\n") != std::string::npos);
  const auto text = slurp(svg);
  CHECK(text.find("viewBox=\"0 0 800 600\"") != std::string::npos);
}

TEST_CASE("single-object drivers") {
  auto j = [](const Run& r) { return nlohmann::json::parse(r.out); };
  const auto va = run("verify-action --nu -1 --lambda -1 --energy -0.25");
  REQUIRE(va.code == 0);
  CHECK(std::abs(j(va)["numeric"].get<double>() - 3.14159265359) < 1e-10);
  CHECK(j(va)["rel_err"].get<double>() < 1e-10);

  const auto q = run("quantize --nu 1 --lambda 1 --gamma 0.5 --n 0");
  REQUIRE(q.code == 0);
  CHECK(std::abs(j(q)["energy"].get<double>() - j(q)["closed_form"].get<double>()) < 1e-6);

  const auto s = run("shoot --nu 1 --lambda 1 --gamma 0 --n 0");
  REQUIRE(s.code == 0);
  CHECK(std::abs(j(s)["energy"].get<double>() - 2.338107) < 1e-5);

  const auto z = run("zeros --order 3 --count 2");
  REQUIRE(z.code == 0);
  CHECK(std::abs(j(z)["zeros"][0].get<double>() - 6.38016189592) < 1e-10);
}

TEST_CASE("tendency grid defaults to the figure unit") {
  const auto r = run("tendency --nu 2 --lambda 1 --mu0 0.5 --n-max 2 --q-max 2");
  CHECK(r.code == 0);
  CHECK(r.out.find(",hbar*omega\n") != std::string::npos);
  const auto j = run("tendency --nu inf --mu0 12 --n-max 3 --q-max 3 --format json");
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["report"]["curvature"] == "bends_up");
}

TEST_CASE("output does not depend on the worker count") {
  const std::string args = "spectrum --nu -0.5 --lambda -2 --n-max 6 --q-max 4 --k-range -3..3";
  const auto one = run(args, "ABFLUX_WORKERS=1");
  const auto many = run(args, "ABFLUX_WORKERS=7");
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
}
