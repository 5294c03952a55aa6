#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CONGRUENT_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("profile command") {
    const Run r = run("profile --p 17 --l 1361");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("+ + + - -", 0) == 0);
    const Run j = run("--json profile --p 17 --l 1361");
    CHECK(json::parse(j.out)["profile"] == json::array({1, 1, 1, -1, -1}));
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("classify").code == 2);
    CHECK(run("survey --p-res 2").code == 2);
    CHECK(run("profile --p 17 --l 41").code == 2);
    CHECK(run("verify-paper").code == 0);
    CHECK(run("table3 --verify").code == 0);
    CHECK(run("--help").code == 0);
}

TEST_CASE("classify text and json") {
    const Run t = run("classify --k 34");
    CHECK(t.code == 0);
    CHECK(t.out.find("Selmer psi  <-1, 2, 17>") != std::string::npos);

    const Run j = run("--json classify --k 1513");
    REQUIRE(j.code == 0);
    const json doc = json::parse(j.out);
    for (const char* key : {"k", "selmer_phi", "selmer_psi", "w_phi_found", "w_psi_found", "sha_phi_lb", "sha_psi_lb",
                            "rank_lower", "rank_upper", "sha2_dim", "noncongruent"})
        CHECK(doc.contains(key));
    CHECK(json::parse(doc.dump()) == doc);
    CHECK(json::parse(doc.dump(2)).dump() == doc.dump());
}

TEST_CASE("classify degrades gracefully outside the families") {
    const Run a = run("classify --k 15");
    CHECK(a.code == 0);
    CHECK(a.out.find("not applicable") != std::string::npos);
    const Run b = run("--json classify --k 60");
    CHECK(b.code == 0);
    const json doc = json::parse(b.out);
    CHECK(doc["k"] == 15);
    CHECK(doc["criteria"] == "not applicable");
}

TEST_CASE("survey writes newline-delimited records") {
    const std::string path = "cli_survey_test.ndjson";
    const Run r = run("survey --two-p --bound 300 --out " + path);
    CHECK(r.code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::array<char, 8192> line{};
    int rows = 0;
    json last;
    while (fgets(line.data(), static_cast<int>(line.size()), f)) {
        last = json::parse(std::string(line.data()));
        ++rows;
    }
    fclose(f);
    std::remove(path.c_str());
    CHECK(rows > 1);
    CHECK(last["summary"] == true);
}
