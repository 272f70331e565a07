// End-to-end drive of the qes binary: every subcommand once, plus the
// documented exit codes. The binary path arrives as argv[1].

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <qes-binary>\n";
        return 1;
    }
    const std::string qes = std::string("\"") + argv[1] + "\"";

    char dir_template[] = "/tmp/qes_cli_XXXXXX";
    const char* dir = mkdtemp(dir_template);
    if (!dir) {
        std::cerr << "cannot create scratch directory\n";
        return 1;
    }
    const std::string base = dir;

    // solve: Hermite frame, n = 2
    write_file(base + "/solve.json",
               R"({"k":2,"n":2,"mode":"float","a":["1","0","0"],"b":["0","-2"],"solver":{"seed":7}})");
    {
        const RunResult r = run(qes + " solve --input " + base + "/solve.json");
        expect(r.exit_code == 0, "solve exits 0");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(!j.is_discarded() && j["command"] == "solve", "solve emits JSON");
        expect(j["solutions"].size() == 1, "solve finds one deduplicated solution");
        const double root = j["solutions"][0]["roots"][1].get<double>();
        expect(std::abs(root - 0.7071067811865476) < 1e-10, "solve root is 1/sqrt(2)");
        expect(j["solutions"][0]["c"][0].get<double>() == 4.0, "solve c0 = 2n = 4");
        expect(j["solutions"][0].contains("residual_norm") &&
                   j["solutions"][0].contains("newton_iterations") &&
                   j["solutions"][0].contains("converged"),
               "solve reports solver diagnostics");
    }

    // constants at k = 2: empty vectors plus an explanatory note
    write_file(base + "/constants_k2.json",
               R"({"k":2,"n":2,"mode":"exact","a":["1","0","0"],"b":["0","-2"],"roots":["1","2"]})");
    {
        const RunResult r = run(qes + " constants --input " + base + "/constants_k2.json");
        expect(r.exit_code == 0, "k=2 constants exits 0");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(j["linear_system"].empty() && j["closed_form"].empty(), "k=2 constants are empty");
        expect(j["note"] == "k=2: no integration constants", "k=2 note present");
    }

    // factorize: the planted k=2 square
    write_file(base + "/factorize.json",
               R"({"k":2,"n":2,"mode":"exact","a":["1","0","0"],"b":["0","0"],"sigma_tilde":["5","0","-1"]})");
    {
        const RunResult r = run(qes + " factorize --input " + base + "/factorize.json");
        expect(r.exit_code == 0, "factorize exits 0");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(j["factorizations"].size() == 2, "factorize returns both branches");
        expect(j["factorizations"][0]["g"][0] == "5", "factorize recovers g = 5");
    }
    {
        const RunResult r = run(qes + " factorize --input " + base + "/solve.json");
        expect(r.exit_code == 2, "factorize without sigma_tilde exits 2");
    }

    // constants: worked example with root {3}
    write_file(base + "/constants.json",
               R"({"k":3,"n":1,"mode":"exact","a":["2","-1","4","0"],"b":["-15","2","1"],"roots":["3"]})");
    {
        const RunResult r = run(qes + " constants --input " + base + "/constants.json");
        expect(r.exit_code == 0, "constants exits 0");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(j["agree"] == true, "constants routes agree");
        expect(j["linear_system"][0] == "-4", "constants C1 = -4");
        expect(j["c"] == Json::array({"-5", "-1"}), "constants c vector");
    }

    // verify: same instance, pass and fail
    write_file(base + "/verify.json",
               R"({"k":3,"n":1,"mode":"exact","a":["2","-1","4","0"],"b":["-15","2","1"],)"
               R"("c":["-5","-1"],"roots":["3"]})");
    {
        const RunResult r = run(qes + " verify --input " + base + "/verify.json");
        expect(r.exit_code == 0, "verify exits 0 on a true solution");
    }
    write_file(base + "/verify_bad.json",
               R"({"k":3,"n":1,"mode":"exact","a":["2","-1","4","0"],"b":["-15","2","1"],)"
               R"("c":["-4","-1"],"roots":["3"]})");
    {
        const RunResult r = run(qes + " verify --input " + base + "/verify_bad.json");
        expect(r.exit_code == 1, "verify exits 1 on a wrong Z");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(j["passed"] == false, "verify reports failure");
    }

    // verify can rebuild Z from the integration constants instead of c
    write_file(base + "/verify_constants.json",
               R"({"k":3,"n":1,"mode":"exact","a":["2","-1","4","0"],"b":["-15","2","1"],)"
               R"("constants":["-4"],"roots":["3"]})");
    {
        const RunResult r = run(qes + " verify --input " + base + "/verify_constants.json");
        expect(r.exit_code == 0, "verify accepts constants in place of c");
    }

    // float-mode verify with numeric roots
    write_file(base + "/verify_float.json",
               R"({"k":2,"n":2,"mode":"float","a":["1","0","0"],"b":["0","-2"],"c":["4"],)"
               R"("roots":[-0.7071067811865476,0.7071067811865476]})");
    {
        const RunResult r = run(qes + " verify --input " + base + "/verify_float.json");
        expect(r.exit_code == 0, "float verify exits 0");
    }

    // check-suite: exact battery, and the float-mode rejection
    {
        const RunResult r = run(qes + " check-suite --input " + base + "/factorize.json --seed 3");
        expect(r.exit_code == 0, "check-suite exits 0");
        const Json j = Json::parse(r.output, nullptr, false);
        expect(j["summary"]["failed"] == 0, "check-suite all green");
        expect(j["seed"] == 3, "check-suite echoes the seed");
    }
    {
        const RunResult r = run(qes + " check-suite --input " + base + "/factorize.json --mode float");
        expect(r.exit_code == 2, "check-suite rejects float mode");
    }

    // malformed input
    write_file(base + "/broken.json", "{");
    {
        const RunResult r = run(qes + " verify --input " + base + "/broken.json");
        expect(r.exit_code == 2, "malformed JSON exits 2");
    }

    if (failures == 0) {
        std::printf("test_cli: all checks passed\n");
        return 0;
    }
    std::printf("test_cli: %d check(s) failed\n", failures);
    return 1;
}
