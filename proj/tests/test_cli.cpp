#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mds/cli.hpp"

using mds::cli::run_cli;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::ordered_json run_json(std::vector<std::string> args, int expect_code = 0)
{
    args.emplace_back("--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, expect_code) << r.err;
    return nlohmann::ordered_json::parse(r.out);
}

std::string golden_path(const std::string &name)
{
    return std::string(MDS_GOLDEN_DIR) + "/" + name + ".json";
}

// Set MDS_UPDATE_GOLDEN=1 to rewrite the files after an intended schema change.
void check_golden(const std::string &name, const std::vector<std::string> &args, int expect_code = 0)
{
    const auto j = run_json(args, expect_code);
    const std::string text = j.dump(2) + "\n";
    if (std::getenv("MDS_UPDATE_GOLDEN")) {
        std::ofstream(golden_path(name)) << text;
        return;
    }
    std::ifstream in(golden_path(name));
    ASSERT_TRUE(in) << "missing golden file " << golden_path(name);
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(text, want.str()) << name;
}

} // namespace

TEST(CliGolden, Classify)
{
    check_golden("classify_quartic_141_35", {"classify", "--g", "141", "--d", "35", "--evidence", "quartic"});
    check_golden("classify_ci_4_6", {"classify", "--g", "4", "--d", "6", "--evidence", "ci:2,3"});
    check_golden("classify_unspecified_5_5", {"classify", "--g", "5", "--d", "5"});
    check_golden("classify_linked_47_20",
                 {"classify", "--g", "47", "--d", "20", "--evidence", "linked:2,5,5,5,acm"});
}

TEST(CliGolden, Scan)
{
    check_golden("scan_catalog_15", {"scan", "--d-max", "15", "--catalog"});
    check_golden("scan_raw_10", {"scan", "--d-max", "10", "--raw"});
}

TEST(CliGolden, Pell)
{
    check_golden("pell_32_m8", {"pell", "--D", "32", "--N", "-8"});
    check_golden("pell_73_m8", {"pell", "--D", "73", "--N", "-8"});
}

TEST(CliGolden, OtherCommands)
{
    check_golden("linkage_23_14", {"linkage", "--g", "23", "--d", "14", "--n1", "4", "--n2", "5"});
    check_golden("chambers_5_5", {"chambers", "--n1", "5", "--n2", "5", "--components", "0,1;1,4"});
    check_golden("cones_3_9", {"cones", "--g", "3", "--d", "9", "--surface", "4"});
    check_golden("family_7", {"family", "--n", "7"});
    check_golden("nonopen_2_5_5_5", {"nonopen", "--gp", "2", "--dp", "5", "--n1", "5", "--n2", "5"});
}

TEST(Cli, EnvelopeShapeAndRoundTrip)
{
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"classify", "--g", "3", "--d", "9", "--evidence", "quartic"},
             {"pell", "--D", "5", "--N", "-4"},
             {"family", "--n", "100"}}) {
        const auto j = run_json(args);
        std::vector<std::string> keys;
        for (const auto &[k, v] : j.items()) {
            keys.push_back(k);
        }
        EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "result", "certificates", "citations", "version"}));
        EXPECT_EQ(nlohmann::ordered_json::parse(j.dump()), j);
    }
}

// No JSON payload anywhere carries a native number.
TEST(Cli, NumbersAreStrings)
{
    std::function<void(const nlohmann::ordered_json &)> walk = [&](const nlohmann::ordered_json &j) {
        EXPECT_FALSE(j.is_number()) << j.dump();
        if (j.is_structured()) {
            for (const auto &v : j) {
                walk(v);
            }
        }
    };
    walk(run_json({"family", "--n", "100"}));
    walk(run_json({"chambers", "--n1", "4", "--n2", "9", "--components", "0,1;1,3"}));
    walk(run_json({"scan", "--d-max", "12"}));
}

TEST(Cli, ExamplesFromTheCommandTable)
{
    const auto c = run_json({"classify", "--g", "141", "--d", "35", "--evidence", "quartic"});
    EXPECT_EQ(c["result"]["status"], "NotMDS");
    EXPECT_EQ(c["result"]["r"], "105");
    EXPECT_EQ(c["certificates"][0]["pell"]["certificate"], "ModulusSieve");
    EXPECT_EQ(c["certificates"][0]["pell"]["modulus"], "5");

    EXPECT_EQ(run_json({"classify", "--g", "4", "--d", "6", "--evidence", "ci:2,3"})["result"]["status"], "MDS");
    EXPECT_EQ(run_json({"classify", "--g", "5", "--d", "5"})["result"]["status"], "Inconclusive");

    EXPECT_EQ(run_json({"scan", "--d-max", "15", "--catalog"})["result"]["count"], "4");
    EXPECT_EQ(run_json({"scan", "--d-max", "3", "--raw"})["result"]["count"], "0");

    const auto p = run_json({"pell", "--D", "32", "--N", "-8"});
    EXPECT_EQ(p["result"]["solvable"], false);
    EXPECT_EQ(p["certificates"][0]["certificate"], "ModulusSieve");

    const auto l = run_json({"linkage", "--g", "23", "--d", "14", "--n1", "4", "--n2", "5"});
    EXPECT_EQ(l["result"]["residual"]["g"], "3");
    EXPECT_EQ(l["result"]["residual"]["d"], "6");

    const auto f = run_json({"family", "--n", "7"});
    EXPECT_EQ(f["result"]["record"]["numerics"]["g"], "141");
    EXPECT_EQ(f["result"]["record"]["numerics"]["d"], "35");
}

TEST(Cli, WallSequenceOrder)
{
    const auto j = run_json({"chambers", "--n1", "5", "--n2", "5", "--components", "0,1;1,4"});
    std::vector<std::string> labels;
    for (const auto &w : j["result"]["wall_sequence"]) {
        labels.push_back(w["label"]);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"E", "H", "D_1", "D_2", "S_2", "S_1"}));
}

TEST(Cli, SurdSerialization)
{
    const auto j = run_json({"cones", "--g", "3", "--d", "9", "--surface", "4"});
    const auto &ray = j["result"]["cones"]["movable"]["generators"][1];
    EXPECT_EQ(ray["H"], (nlohmann::ordered_json{{"a", "9"}, {"b", "1"}, {"radicand", "65"}}));
    EXPECT_EQ(ray["rational"], false);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run({"classify", "--g", "-1", "--d", "5"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "1", "--d", "x"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "4", "--d", "7", "--evidence", "ci:2,3"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "4", "--d", "6", "--evidence", "wrong"}).code, 2);
    EXPECT_EQ(run({"classify", "--g", "2", "--d", "9", "--evidence", "quartic"}).code, 3);
    EXPECT_EQ(run({"scan", "--d-max", "2"}).code, 2);
    EXPECT_EQ(run({"scan", "--d-max", "5", "--raw", "--catalog"}).code, 2);
    EXPECT_EQ(run({"pell", "--D", "-1", "--N", "3"}).code, 2);
    EXPECT_EQ(run({"chambers", "--n1", "4", "--n2", "5", "--components", "3,6"}).code, 3);
    EXPECT_EQ(run({"chambers", "--n1", "5", "--n2", "4", "--components", "0,1"}).code, 2);
    EXPECT_EQ(run({"cones", "--g", "1", "--d", "4", "--surface", "4"}).code, 3);
    EXPECT_EQ(run({"cones", "--g", "3", "--d", "9", "--surface", "5"}).code, 2);
    EXPECT_EQ(run({"family", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"family", "--n", "10"}).code, 3);
    EXPECT_EQ(run({"nonopen", "--gp", "3", "--dp", "4", "--n1", "6", "--n2", "6"}).code, 3);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto e = run({"cones", "--g", "1", "--d", "4", "--surface", "4"});
    EXPECT_NE(e.err.find("violated: r not a perfect square"), std::string::npos);
}

TEST(Cli, ScanCsv)
{
    const auto r = run({"scan", "--d-max", "15", "--catalog", "--csv"});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0], "g,d,r,inequality_value,dimension,status,note");
    EXPECT_EQ(lines[1].substr(0, 11), "3,9,65,-4,3");
}

TEST(Cli, TextOutput)
{
    const auto r = run({"linkage", "--g", "23", "--d", "14", "--n1", "4", "--n2", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("command: linkage"), std::string::npos);
    EXPECT_NE(r.out.find("  residual:\n    g: 3\n    d: 6\n"), std::string::npos);
}
