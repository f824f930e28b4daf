#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dga/corpus.hpp"
#include "dga/dsl.hpp"

using namespace dga;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(DGA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data_file(const std::string& name) {
    return std::string(DGA_DATA_DIR) + "/" + name;
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/dgakit_cli_" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << text;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cohomology of the shipped torus file") {
    RunResult r = run_cli("cohomology " + data_file("torus.dga"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "H^0 = 1"));
    CHECK(contains(r.output, "H^1 = 2"));
    CHECK(contains(r.output, "H^2 = 1"));
}

TEST_CASE("shipped model files equal their built-in counterparts") {
    CHECK(files_equal(load_presentation_file(data_file("hopf_n2.dga")),
                      PresentationFile{.spec = hopf_model(2)}));
    CHECK(files_equal(load_presentation_file(data_file("hopf_n3.dga")),
                      PresentationFile{.spec = hopf_model(3)}));
    CHECK(files_equal(load_presentation_file(data_file("s3s3.dga")),
                      PresentationFile{.spec = s3s3_model()}));
}

TEST_CASE("antiholomorphic table of the shipped hopf_n3 file") {
    RunResult r = run_cli("dolbeault " + data_file("hopf_n3.dga"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "h^{0,0} = 1"));
    CHECK(contains(r.output, "h^{0,1} = 1"));
    CHECK(contains(r.output, "h^{3,2} = 1"));
    CHECK(contains(r.output, "h^{3,3} = 1"));
}

TEST_CASE("two-differential check fails at degree 2 on the shipped nilmanifold file") {
    RunResult r = run_cli("ddbar-check " + data_file("kodaira_thurston.dga"));
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "first failure in degree 2"));
    CHECK(contains(r.output, "ddbar: FAIL"));
}

TEST_CASE("extension differentials of the rank-one models land in bidegree (1,1)") {
    RunResult r = run_cli("fundamental-check " + data_file("hopf_n2.dga"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "fundamental: PASS"));
}

TEST_CASE("the corpus command runs every entry green") {
    RunResult r = run_cli("corpus");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "corpus: PASS"));
    CHECK(!contains(r.output, "FAIL"));
    CHECK(contains(r.output, "hopf_2: pass"));
    CHECK(contains(r.output, "kodaira_thurston_ce: pass"));
}

TEST_CASE("structured output is byte-identical across runs") {
    std::string args = "dolbeault " + data_file("hopf_n2.dga") + " --structured";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(contains(a.output, "\"schema\": \"dgakit-result/1\""));
    CHECK(contains(a.output, "\"digest\""));
}

TEST_CASE("minimal-model output is itself a loadable presentation file") {
    RunResult r = run_cli("minimal-model " + data_file("heisenberg_3.dga") + " --up-to 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "# certified up to degree 4"));
    PresentationFile f = parse_presentation_file(r.output);
    REQUIRE(f.presentation.has_value());
    CHECK(f.presentation->generator_count() == 3);
}

TEST_CASE("weight-count passes on the shipped rank-one nilmanifold model") {
    RunResult r =
        run_cli("weight-count " + data_file("kodaira_thurston_vaisman.dga") + " --n 2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "weight 1: 2"));
    CHECK(contains(r.output, "weight 2: 2"));
    CHECK(contains(r.output, "dichotomy branch: 1"));
    CHECK(contains(r.output, "weight_count: PASS"));
}

TEST_CASE("dual-lie recovers the nilpotent bracket from both input shapes") {
    RunResult annotated = run_cli("dual-lie " + data_file("kodaira_thurston.dga"));
    CHECK(annotated.exit_code == 0);
    CHECK(contains(annotated.output, "dual_lie: PASS"));
    CHECK(contains(annotated.output, "[om1, omb1] ="));

    RunResult structured =
        run_cli("dual-lie " + data_file("kodaira_thurston_vaisman.dga"));
    CHECK(structured.exit_code == 0);
    CHECK(contains(structured.output, "dual_lie: PASS"));
}

TEST_CASE("kunneth agrees on a product of shipped models") {
    RunResult r =
        run_cli("kunneth " + data_file("torus.dga") + " " + data_file("heisenberg_3.dga"));
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "kunneth: PASS"));
}

TEST_CASE("hirsch reports the page-two identification and the degeneration verdict") {
    std::string free_ext = write_temp(
        "free_ext.dga", "field Q\ncutoff 6\ngrading graded\ngen x degree 1\n"
                        "gen y degree 1\nextend t degree 1\n");
    RunResult free_run = run_cli("hirsch " + free_ext);
    CHECK(free_run.exit_code == 0);
    CHECK(contains(free_run.output, "page_two_identified: PASS"));
    CHECK(contains(free_run.output, "degenerate: PASS"));

    std::string twisted = write_temp(
        "twisted_ext.dga", "field Q\ncutoff 6\ngrading graded\ngen x degree 1\n"
                           "gen y degree 1\nextend t degree 1\nd t = x * y\n");
    RunResult twisted_run = run_cli("hirsch " + twisted);
    CHECK(twisted_run.exit_code == 1);
    CHECK(contains(twisted_run.output, "page_two_identified: PASS"));
    CHECK(contains(twisted_run.output, "degenerate: FAIL"));
}

TEST_CASE("bigrading tables for both input shapes") {
    RunResult spec_run = run_cli("bigrading " + data_file("hopf_n2.dga"));
    CHECK(spec_run.exit_code == 0);
    CHECK(contains(spec_run.output, "H^1: (1,1)=1"));
    CHECK(contains(spec_run.output, "H^4: (3,3)=1"));
    CHECK(contains(spec_run.output, "weight_page_one_identified: PASS"));

    RunResult plain_run = run_cli("bigrading " + data_file("kodaira_thurston.dga"));
    CHECK(plain_run.exit_code == 0);
    CHECK(contains(plain_run.output, "C^1: (0,1)=1 (1,0)=1 (1,1)=2"));
}

TEST_CASE("input failures exit with code 2 and a diagnostic") {
    RunResult missing = run_cli("cohomology /nonexistent/no.dga");
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "cannot read"));

    std::string bad = write_temp("bad.dga", "field Q\ncutoff 4\ngrading graded\n"
                                            "gen x degree 1\ngen z degree 1\nd z = x\n");
    RunResult syntax = run_cli("cohomology " + bad);
    CHECK(syntax.exit_code == 2);
    CHECK(contains(syntax.output, "line 6"));

    RunResult unknown = run_cli("no-such-command");
    CHECK(unknown.exit_code == 2);

    RunResult wrong_kind = run_cli("ddbar-check " + data_file("torus.dga"));
    CHECK(wrong_kind.exit_code == 2);
    CHECK(contains(wrong_kind.output, "bigraded"));
}

TEST_CASE("header overrides reach the computation") {
    RunResult r = run_cli("cohomology " + data_file("torus.dga") + " --cutoff 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "H^2 = 1"));
    CHECK(!contains(r.output, "H^3"));
}
