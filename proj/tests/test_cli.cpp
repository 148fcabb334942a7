#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "zccs/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

class Workspace {
public:
    Workspace() : dir_(fs::temp_directory_path() / ("zccs_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(dir_);
    }
    ~Workspace() { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Run run(const std::string& args) const {
        const auto log = path("stdout.txt");
        const std::string cmd = std::string(ZCCS_CLI_PATH) + " " + args + " > " + log + " 2>&1";
        Run r;
        const int raw = std::system(cmd.c_str());
        r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        r.out = zccs::read_text_file(log);
        return r;
    }

private:
    fs::path dir_;
};

const char* kExample1 =
    "generate thm1 --m1 8 --quadratic 0-1,1-2,2-3,3-0,0-2 --d-vec 1,1,1,1 --d 0 --delete 0,1 --beta1 2 --l 1 --R 2";

}  // namespace

TEST_CASE("generate then verify") {
    Workspace ws;
    const auto file = ws.path("ex1.json");
    const auto gen = ws.run(std::string(kExample1) + " --out " + file);
    REQUIRE(gen.status == 0);
    CHECK(gen.out.find("(M, N, L, Z) = (16, 8, 320, 160)") != std::string::npos);
    CHECK(gen.out.find("optimal: true") != std::string::npos);

    const auto ver = ws.run("verify " + file + " --check-provenance --report " + ws.path("r.csv"));
    CHECK(ver.status == 0);
    CHECK(ver.out.find("optimal: true") != std::string::npos);
    CHECK(ver.out.find("peak: 2560") != std::string::npos);
    CHECK(ver.out.find("oracle mismatches: 0") != std::string::npos);
    CHECK(fs::exists(ws.path("r.csv")));

    CHECK(ws.run("verify " + file + " --z 321").status == 2);
    CHECK(ws.run("report " + file + " --out " + ws.path("full.csv")).status == 0);

    const auto csv = ws.path("ex1.csv");
    CHECK(ws.run("export " + file + " --out " + csv).status == 0);
    CHECK(zccs::read_text_file(csv).rfind("# construction=thm1", 0) == 0);
}

TEST_CASE("a flipped phase fails verification") {
    Workspace ws;
    const auto file = ws.path("ex.json");
    REQUIRE(ws.run("generate thm3 --m1 5 --quadratic '' --d-vec 1 --out " + file).status == 0);
    auto set = zccs::read_code_set(file);
    auto phases = set.codes[1][0].phases();
    phases[5] ^= 1;
    set.codes[1][0] = zccs::PhaseSequence(2, phases);
    zccs::write_code_set(file, set);
    const auto ver = ws.run("verify " + file);
    CHECK(ver.status == 1);
    CHECK(ver.out.find("zccs_ok: false") != std::string::npos);
    CHECK(ws.run("verify " + file + " --check-provenance").status == 1);
}

TEST_CASE("malformed input exits 3") {
    Workspace ws;
    const auto file = ws.path("bad.json");
    zccs::write_text_file(file, "{\"format_version\": 1, \"codes\": 5}");
    CHECK(ws.run("verify " + file).status == 3);
    CHECK(ws.run("verify " + ws.path("missing.json")).status == 3);
}

TEST_CASE("parameter errors exit 2") {
    Workspace ws;
    const auto out = " --out " + ws.path("x.json");
    const auto cycle = ws.run("generate lemma1 --m1 8 --quadratic 0-1,1-2,2-3,3-0,0-2 --d-vec 1,1,1,1 --delete 1" + out);
    CHECK(cycle.status == 2);
    CHECK(cycle.out.find("cycle") != std::string::npos);
    CHECK(ws.run("generate lemma1 --m1 4 --quadratic '' --d-vec ''" + out).status == 2);
    CHECK(ws.run("generate thm5 --m1 5" + out).status == 2);
    CHECK(ws.run("generate thm2 --q 3 --m2 2 --quadratic 0-1" + out).status == 2);
    CHECK(ws.run("frobnicate").status == 2);
}

TEST_CASE("enumerate") {
    Workspace ws;
    const auto two = ws.run("enumerate --quadratic 0-1,1-2,2-3,3-0,0-2 --k 2");
    CHECK(two.status == 0);
    CHECK(two.out.find("delete {0,1}, ends {2,3}, path 2 3") != std::string::npos);
    const auto none = ws.run("enumerate --quadratic 0-1,1-2,2-0 --k 0");
    CHECK(none.status == 0);
    CHECK(none.out.empty());
    CHECK(ws.run("enumerate --quadratic 0-1 --k 2").status == 2);
    const auto weighted = ws.run("enumerate --quadratic 0-1:2,1-2:1 --k 0 --q 4");
    CHECK(weighted.out.empty());
}
