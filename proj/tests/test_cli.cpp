#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "ratcomb/catalog.hpp"
#include "ratcomb/serialize.hpp"

using namespace ratcomb;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(RATCOMB_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path temp_series_file(const std::string& name,
                                       const EgfSeries& s) {
    const auto path = std::filesystem::temp_directory_path() / name;
    write_series_file(path.string(), s);
    return path;
}

} // namespace

TEST_CASE("table command, plain and csv formats") {
    const RunResult plain =
        run_cli("table --kind bernoulli --series zeta:1 --N 1 --max-n 3");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "1,-1/4,1/72,1/96\n");

    const RunResult comp = run_cli("table --kind comp --series exp --N 2 --max-n 4");
    CHECK(comp.exit_code == 0);
    CHECK(comp.output == "1,-2/3,5/6,-68/45\n");

    const RunResult csv =
        run_cli("table --kind bernoulli --series exp --N 1 --max-n 14 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.starts_with("n,value\n0,1\n1,-1/2\n"));
    CHECK(csv.output.find("12,-691/2730\n13,0\n14,7/6\n") != std::string::npos);

    // identical invocations are byte-identical
    CHECK(run_cli("table --kind bernoulli --series exp --N 1 --max-n 14 --format csv")
              .output == csv.output);
}

TEST_CASE("table command, md and json formats") {
    const RunResult md =
        run_cli("table --kind bernoulli --series exp --N 2 --max-n 3 --format md");
    CHECK(md.exit_code == 0);
    CHECK(md.output ==
          "| n | 0 | 1 | 2 | 3 |\n|---|---|---|---|---|\n"
          "| value | 1 | -1/3 | 1/18 | 1/90 |\n");
    const RunResult js =
        run_cli("table --kind bernoulli --series sfac2 --N 1 --max-n 2 --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"values\":[\"1\",\"-1/4\",\"5/72\"]") != std::string::npos);
}

TEST_CASE("poly command") {
    const RunResult bern = run_cli("poly --kind bernoulli --series sfac2 --N 1 --max-n 1");
    CHECK(bern.exit_code == 0);
    CHECK(bern.output == "1\nx - 1/4\n");
    const RunResult comp = run_cli("poly --kind comp --series exp --N 1 --max-n 3");
    CHECK(comp.exit_code == 0);
    CHECK(comp.output == "x\nx^2 - x\nx^3 - 3*x^2 + 2*x\n");
    const RunResult one = run_cli("poly --kind comp --series exp --N 1 --max-n 1");
    CHECK(one.output == "x\n");
}

TEST_CASE("series-op command") {
    const EgfSeries e = builtin_series(SeriesName::parse("exp"), 6);
    const auto path = temp_series_file("ratcomb_test_em1.json",
                                       series_sub(e, EgfSeries::unit(6)));
    const RunResult invert =
        run_cli("series-op invert --in " + path.string() + " -T 6");
    CHECK(invert.exit_code == 0);
    CHECK(invert.output ==
          "{\"coeffs\":[\"0\",\"1\",\"-1\",\"2\",\"-6\",\"24\",\"-120\"],"
          "\"kind\":\"egf\",\"order\":6}\n");
    std::filesystem::remove(path);

    const RunResult hyper =
        run_cli("series-op hypergeom --p 1/1 --q 1/1 --r 1/1 -T 4");
    CHECK(hyper.exit_code == 0);
    CHECK(hyper.output.find("[\"1\",\"1\",\"2\",\"6\",\"24\"]") != std::string::npos);

    const RunResult mul = run_cli("series-op mul --in exp --with exp -T 3");
    CHECK(mul.exit_code == 0);
    CHECK(mul.output.find("[\"1\",\"2\",\"4\",\"8\"]") != std::string::npos);

    const RunResult recip = run_cli("series-op reciprocal --in exp -T 3");
    CHECK(recip.output.find("[\"1\",\"-1\",\"1\",\"-1\"]") != std::string::npos);

    const RunResult add = run_cli("series-op add --in sin --with cos -T 3");
    CHECK(add.output.find("[\"1\",\"1\",\"-1\",\"-1\"]") != std::string::npos);
}

TEST_CASE("exit codes") {
    // 0: success
    CHECK(run_cli("verify --suite tables").exit_code == 0);
    // 2: usage errors
    CHECK(run_cli("table").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    // 3: precondition violations (sin has f_2 = 0)
    const RunResult pivot = run_cli("table --kind bernoulli --series sin --N 2 --max-n 4");
    CHECK(pivot.exit_code == 3);
    CHECK(pivot.output.find("error") != std::string::npos);
    CHECK(run_cli("table --kind bernoulli --series tan --N 1 --max-n 4").exit_code == 3);
    CHECK(run_cli("series-op invert --in exp -T 6").exit_code == 3);
    CHECK(run_cli("verify --suite bogus").exit_code == 3);
    CHECK(run_cli("series-op hypergeom --p 1/2 --q 1/3 --r -2/1 -T 6").exit_code == 3);
}

TEST_CASE("verify command output") {
    const RunResult text = run_cli("verify --suite tables");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("KNOWN-DISCREPANCY") != std::string::npos);
    CHECK(text.output.find("fail: 0") != std::string::npos);
    const RunResult js = run_cli("verify --suite tables --format json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"registry\": \"c2-table/n=6\"") != std::string::npos);
    // deterministic byte-for-byte
    CHECK(run_cli("verify --suite tables --format json").output == js.output);
    const RunResult clamped = run_cli("verify --suite oracles --max-n 7");
    CHECK(clamped.exit_code == 0);
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
}
