// End-to-end checks of the CLI: exit codes, determinism, cache behaviour.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(DKPENT_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("dkpent-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("basis command: dimensions and caching") {
    TempDir tmp;
    const std::string cache = " --cache-dir " + (tmp.path / "cache").string();

    RunResult t4 = run("basis --algebra t4 --degree 1" + cache);
    CHECK(t4.exit_code == 0);
    json j = json::parse(t4.output);
    CHECK(j["degrees"][0]["dim"] == 6);

    RunResult dk22 = run("basis --algebra dk22 --degree 1" + cache);
    CHECK(json::parse(dk22.output)["degrees"][0]["dim"] == 5);

    RunResult brun4 = run("basis --algebra brun4 --degree 4" + cache);
    CHECK(brun4.exit_code == 0);

    // Cache hit must be byte-identical.
    RunResult again = run("basis --algebra brun4 --degree 4" + cache);
    CHECK(again.output == brun4.output);

    // Corrupt entry: recompute, overwrite, same output.
    bool corrupted = false;
    for (const auto& entry : fs::directory_iterator(tmp.path / "cache")) {
        std::ofstream f(entry.path());
        f << "{not json";
        corrupted = true;
        break;
    }
    CHECK(corrupted);
    RunResult after = run("basis --algebra brun4 --degree 4" + cache);
    CHECK(after.output == brun4.output);

    RunResult bad = run("basis --algebra nope --degree 2" + cache);
    CHECK(bad.exit_code == 2);

    RunResult guard = run("basis --algebra t5 --degree 7" + cache);
    CHECK(guard.exit_code == 2);
}

TEST_CASE("solve command") {
    RunResult dmr = run("solve --system dmr0 --weight 3 --no-cache");
    CHECK(dmr.exit_code == 0);
    json j = json::parse(dmr.output);
    CHECK(j["weights"].back()["dim"] == 1);

    RunResult grt = run("solve --system grt1 --weight 2 --no-cache");
    CHECK(json::parse(grt.output)["weights"].back()["dim"] == 0);

    RunResult pentk = run("solve --system pentk --flavor dmr --k 1 --weight 3 --no-cache");
    json jp = json::parse(pentk.output);
    CHECK(jp["weights"].back()["dim"] == 1);
    // Same span as dmr0: compare the serialized basis elements.
    CHECK(jp["weights"].back()["basis"] == j["weights"].back()["basis"]);

    RunResult bad = run("solve --system unknown --weight 3 --no-cache");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify command exit codes and determinism") {
    RunResult divmu = run("verify --theorem div-mu --max-degree 6 --no-cache");
    CHECK(divmu.exit_code == 0);
    CHECK(json::parse(divmu.output)["pass"] == true);

    RunResult sc = run("verify --theorem shuffle-coproduct --max-degree 4 --samples 3 --seed 7 --no-cache");
    CHECK(sc.exit_code == 0);
    RunResult sc2 = run("verify --theorem shuffle-coproduct --max-degree 4 --samples 3 --seed 7 --no-cache");
    CHECK(sc.output == sc2.output);
    CHECK(json::parse(sc.output)["seed"] == 7);

    RunResult rel = run("verify --theorem relations --max-weight 4 --max-k 2 --no-cache");
    CHECK(rel.exit_code == 0);

    RunResult bad = run("verify --theorem nope --no-cache");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("pent command") {
    // sigma_3 candidate in LieElement JSON.
    json phi;
    phi["alphabet"] = {"x", "y"};
    phi["coords"] = json::array();
    phi["coords"].push_back({{"coeff", "1/1"}, {"lyndon", {"x", "x", "y"}}});
    phi["coords"].push_back({{"coeff", "-1/1"}, {"lyndon", {"x", "y", "y"}}});
    // sigma3 = [x,[x,y]] - [y,[y,x]] has Lyndon coordinates {xxy: 1, xyy: -1}.
    const std::string arg = "pent --flavor dmr --k 1 --phi-json '" + phi.dump() + "' --no-cache";
    RunResult r = run(arg);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["zero"] == true);

    RunResult bad = run("pent --flavor dmr --k 1 --phi-json 'not json' --no-cache");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("braid commands") {
    RunResult pt = run("braid pent-triviality --phi \"s1 s1 S2 S2 S1 S1 s2 s2\" --truncate 5 --no-cache");
    CHECK(pt.exit_code == 0);
    json j = json::parse(pt.output);
    CHECK(j["defined"] == true);

    RunResult ib = run("braid is-brunnian --word \"s1 s1\" --n 2 --no-cache");
    CHECK(ib.exit_code == 0);
    CHECK(json::parse(ib.output)["brunnian"] == false);

    RunResult bad = run("braid pent-triviality --phi \"s9\" --no-cache");
    CHECK(bad.exit_code == 2);
}
