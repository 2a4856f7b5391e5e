#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

// Runs the built CLI through the shell, capturing stdout and the exit code.
CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string command;
    if (!env.empty()) command += env + " ";
    command += AVOID_CLI_PATH;
    command += " " + args + " 2>/dev/null";

    CliResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json run_json(const std::string& args) {
    const CliResult result = run_cli(args);
    REQUIRE(result.exit_code == 0);
    return json::parse(result.output);
}

}  // namespace

TEST_CASE("borders emits the border report") {
    const json out = run_json("borders 0110");
    CHECK(out["word"] == "0110");
    CHECK(out["k"] == 2);
    CHECK(out["border_lengths"] == json::array({1, 4}));
    CHECK(out["proper_borders"] == json::array({"0"}));
    CHECK(out["borderless"] == false);

    const json wide = run_json("borders 0010010");
    CHECK(wide["border_lengths"] == json::array({1, 4, 7}));

    const CliResult plain = run_cli("borders 01 --format plain");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output ==
          "word: 01\nborder_lengths: 2\nproper_borders:\nborderless: true\n");
}

TEST_CASE("count cross-checks all methods") {
    const json out = run_json("count 0110 --n 5");
    CHECK(out["pattern"] == "0110");
    CHECK(out["k"] == 2);
    CHECK(out["method"] == "all");
    CHECK(out["agreement"] == true);
    CHECK(out["counts"] == json::array({"1", "2", "4", "8", "15", "28"}));

    const json brute = run_json("count 00 --n 3 --method brute");
    CHECK(brute["counts"] == json::array({"1", "2", "3", "5"}));

    const CliResult plain = run_cli("count 0 --n 3 --format plain");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output == "1,1,1,1\n");
}

TEST_CASE("gf emits coefficient arrays lowest degree first") {
    const json out = run_json("gf 0110");
    CHECK(out["numerator"] == json::array({1, 0, 0, 1}));
    CHECK(out["denominator"] == json::array({1, -2, 0, 1, -1}));
}

TEST_CASE("bijection apply reports the image and trace") {
    const json out = run_json("bijection apply --p 011 --q 001 --word 0001001 --trace");
    CHECK(out["input"] == "0001001");
    CHECK(out["output"] == "0111011");
    CHECK(out["direction"] == "L");
    CHECK(out["stepCount"] == 3);
    REQUIRE(out["steps"].size() == 3);
    CHECK(out["steps"][0]["dir"] == "L");
    CHECK(out["steps"][0]["index"] == 1);
    CHECK(out["steps"][0]["before"] == "0001001");
    CHECK(out["steps"][0]["after"] == "0011001");
    CHECK(out["steps"][2]["after"] == "0111011");

    const json barred = run_json("bijection apply --p 011 --q 001 --word 1001000 --direction Rbar");
    CHECK(barred["output"] == "1101110");
    CHECK(barred["stepCount"] == 3);
    CHECK_FALSE(barred.contains("steps"));
}

TEST_CASE("bijection verify reports bijectivity") {
    const json good = run_json("bijection verify --p 1001 --q 1101 --n 6");
    CHECK(good["bijection"] == true);
    CHECK(good["collisions"].empty());
    CHECK(good["imageGaps"].empty());
    CHECK(good["roundtripFailures"].empty());
    CHECK(good["domainSize"] == good["codomainSize"]);

    const json bad = run_json("bijection verify --p 0100 --q 1011 --n 7");
    CHECK(bad["bijection"] == false);
    bool found = false;
    for (const auto& collision : bad["collisions"])
        if (collision["image"] == "0100100") {
            found = true;
            CHECK(collision["preimages"] == json::array({"0101011", "1011100"}));
        }
    CHECK(found);
}

TEST_CASE("bijection conjugation reports both identities") {
    const json out = run_json("bijection conjugation --p 011 --q 001 --n 7");
    CHECK(out["ok"] == true);
    CHECK(out["phiRViolations"].empty());
    CHECK(out["phiLViolations"].empty());
    CHECK(out["checkedPAvoiders"].get<std::uint64_t>() > 0);
}

TEST_CASE("census emits the expected table as CSV") {
    const CliResult single = run_cli("census --length 4");
    CHECK(single.exit_code == 0);
    CHECK(single.output == "length,phiL_pairs,composition_pairs,equivalent_pairs\n4,21,32,32\n");

    const CliResult sweep = run_cli("census --sweep 1..5 --alphabet 2");
    CHECK(sweep.exit_code == 0);
    CHECK(sweep.output ==
          "length,phiL_pairs,composition_pairs,equivalent_pairs\n"
          "1,1,1,1\n"
          "2,1,2,2\n"
          "3,6,8,8\n"
          "4,21,32,32\n"
          "5,88,120,120\n");
}

TEST_CASE("census emits JSON with fractions and unexplained pairs") {
    const json out = run_json("census --length 7 --format json");
    CHECK(out["length"] == 7);
    CHECK(out["phiL_pairs"] == 1212);
    CHECK(out["composition_pairs"] == 1708);
    CHECK(out["equivalent_pairs"] == 1716);
    CHECK(out["unexplained"].size() == 8);
    CHECK(out["unexplained"][0] == json::array({"0010010", "0110110"}));
    CHECK(out["borderless_fraction"]["denominator"].get<std::uint64_t>() >= 1);

    const json swept = run_json("census --sweep 2..3 --format json");
    REQUIRE(swept.is_array());
    REQUIRE(swept.size() == 2);
    CHECK(swept[1]["equivalent_pairs"] == 8);
}

TEST_CASE("unexplained lists the stranded pairs") {
    const json out = run_json("unexplained --length 7");
    CHECK(out["pairs"].size() == 8);
    bool found = false;
    for (const auto& pair : out["pairs"])
        if (pair == json::array({"0010010", "0110110"})) found = true;
    CHECK(found);

    CHECK(run_json("unexplained --length 5")["pairs"].empty());
}

TEST_CASE("stats reports the profile fractions") {
    const json out = run_json("stats --length 2");
    CHECK(out["borderless_fraction"]["numerator"] == 1);
    CHECK(out["borderless_fraction"]["denominator"] == 2);
    CHECK(out["borderless_fraction"]["decimal"] == "0.500000");
    CHECK(out["profile_one_l_fraction"]["numerator"] == 1);
    CHECK(out["profile_one_l_fraction"]["denominator"] == 2);
}

TEST_CASE("classify combines the pair views") {
    const json out = run_json("classify --p 0110 --q 1101");
    CHECK(out["equivalent"] == true);
    CHECK(out["phiL_bijective"] == false);
    CHECK(out["composition_bijective"] == true);
    CHECK(out["first_difference_index"].is_null());

    const json verified = run_json("classify --p 1011 --q 0100 --verify-n 7");
    CHECK(verified["equivalent"] == true);
    CHECK(verified["phiL_bijective"] == false);
    CHECK(verified["composition_bijective"] == true);
    CHECK(verified["verify"]["bijection"] == false);
    CHECK_FALSE(verified["verify"]["collisions"].empty());

    const json divergent = run_json("classify --p 00 --q 01");
    CHECK(divergent["equivalent"] == false);
    CHECK(divergent["first_difference_index"] == 3);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("borders 0120").exit_code == 1);
    CHECK(run_cli("count 0110").exit_code == 1);           // missing --n
    CHECK(run_cli("census").exit_code == 1);               // missing --length/--sweep
    CHECK(run_cli("census --sweep 5..1").exit_code == 1);  // bad range
    CHECK(run_cli("bijection apply --p 011 --q 001 --word 0001001 --direction X").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("budget overruns exit with code 2") {
    CHECK(run_cli("count 0110 --n 5 --method brute --budget 4").exit_code == 2);
    CHECK(run_cli("count 0110 --n 5 --method brute", "AVOID_ENUM_BUDGET=4").exit_code == 2);
    CHECK(run_cli("bijection verify --p 1001 --q 1101 --n 20 --budget 1000").exit_code == 2);
    CHECK(run_cli("census --length 12 --budget 100").exit_code == 2);
    // The flag takes precedence over the environment variable.
    const CliResult ok = run_cli("count 0110 --n 5 --method brute --budget 1000000",
                                 "AVOID_ENUM_BUDGET=4");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("repro succeeds on the bundled examples") {
    const CliResult result = run_cli("repro --max-census-length 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("PASS  census.length.3") != std::string::npos);
    CHECK(result.output.find("FAIL") == std::string::npos);
    CHECK(result.output.find("checks passed") != std::string::npos);
}
