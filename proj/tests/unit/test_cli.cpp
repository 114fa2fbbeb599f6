#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef VERLINDE_KIT_PATH
#error "VERLINDE_KIT_PATH must point at the verlinde-kit binary"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
    const std::string cmd = env + (env.empty() ? "" : " ") + VERLINDE_KIT_PATH + std::string(" ") + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, FusionTable) {
    const auto r = run("fusion-table --p 5");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("L1+L3"), std::string::npos);

    const auto j = nlohmann::json::parse(run("fusion-table --p 3 --format json").out);
    ASSERT_EQ(j["entries"].size(), 4u);
    EXPECT_EQ(j["entries"][3]["mults"], nlohmann::json({1, 0}));

    const auto two = nlohmann::json::parse(run("--format json fusion-table --p 2").out);
    EXPECT_EQ(two["entries"][0]["mults"], nlohmann::json({1}));

    const auto csv = run("fusion-table --p 3 --format csv").out;
    EXPECT_EQ(csv, "x,L1,L2\nL1,L1,L2\nL2,L2,L1\n");
}

TEST(Cli, SymmetricPowers) {
    const auto j = nlohmann::json::parse(run("sympow --p 5 --m 2 --format json").out);
    ASSERT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(j["rows"][0]["mults"], nlohmann::json({1, 0, 0, 0}));
    EXPECT_EQ(j["rows"][1]["mults"], nlohmann::json({0, 1, 0, 0}));
    EXPECT_EQ(j["rows"][2]["mults"], nlohmann::json({0, 0, 1, 0}));
    EXPECT_EQ(j["rows"][2]["invariants"], 0);
    EXPECT_EQ(j["m"], 2);

    const auto one = run("sympow --p 5 --m 2 --i 2");
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("L3"), std::string::npos);
    EXPECT_EQ(run("sympow --p 5 --m 7").code, 2);
}

TEST(Cli, ExteriorPowers) {
    const auto j = nlohmann::json::parse(run("extpow --p 7 --r 3 --format json").out);
    EXPECT_EQ(j["r"], 3);
    ASSERT_EQ(j["rows"].size(), 4u);
    EXPECT_EQ(j["rows"][3]["mults"], nlohmann::json({1, 0, 0, 0, 0, 0}));
}

TEST(Cli, Decompose) {
    EXPECT_EQ(run("decompose --p 5 '[3]_z' '[3]_z'").out, "L3\n");
    EXPECT_EQ(run("decompose --p 5 1 1").out, "L1\n");
    EXPECT_EQ(run("decompose --p 5 '[2]_z' '-[2]_z'").out, "L2\n");
    const auto explained = run("decompose --p 5 --explain '[3]_z' '[3]_z'").out;
    EXPECT_NE(explained.find("r=3"), std::string::npos);
    EXPECT_NE(explained.find("tau=5"), std::string::npos);
    const auto j = nlohmann::json::parse(run("decompose --p 5 --explain --format json '[3]_z' '[3]_z'").out);
    EXPECT_EQ(j["mults"], nlohmann::json({0, 0, 1, 0}));
    EXPECT_EQ(j["terms"].size(), 4u);
}

TEST(Cli, Weyl) {
    EXPECT_EQ(run("weyl --p 7 --m 3 1,0").out, "L3\n");
    const auto j = nlohmann::json::parse(run("weyl --p 7 --m 3 2,1 --format json").out);
    EXPECT_EQ(j["sign"], 1);
    EXPECT_EQ(j["weight"]["parts"], nlohmann::json({2, 1}));
    EXPECT_EQ(run("weyl --p 7 --m 3 6").code, 2);
}

TEST(Cli, Padic) {
    EXPECT_EQ(run("padic --p 5 0,0,1,0").out, "Dim+=-2 Dim-=3\n");
    const auto j = nlohmann::json::parse(run("padic --p 5 0,0,1,0 --format json").out);
    EXPECT_EQ(j["dim_plus"], -2);
    EXPECT_EQ(j["length_identity"], true);
    EXPECT_EQ(run("padic --p 5 -1,0,0,0").code, 2);
}

TEST(Cli, Invariants) {
    const auto j = nlohmann::json::parse(run("invariants --p 13 --m 5 --format json").out);
    ASSERT_EQ(j["rows"].size(), 9u);
    EXPECT_EQ(j["rows"][2]["invariants"], 1);
    EXPECT_EQ(j["rows"][2]["classical"], 1);
}

TEST(Cli, Verify) {
    const auto r = run("verify 3,5", "VERLINDE_KIT_THREADS=2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "PASS\n");
    const auto j = nlohmann::json::parse(run("verify 3 --format json --objects 5").out);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["failures"], 0);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("fusion-table --p 6").code, 2);
    EXPECT_EQ(run("fusion-table").code, 2);
    EXPECT_EQ(run("fusion-table --p 5 --format xml").code, 2);
    EXPECT_EQ(run("decompose --p 5 'z^' 1").code, 2);
    EXPECT_EQ(run("decompose --p 5 1 0").code, 3);
    EXPECT_EQ(run("decompose --p 5 --effective -1 -1").code, 3);
    EXPECT_EQ(run("verify 4").code, 2);
    EXPECT_EQ(run("verify 3", "VERLINDE_KIT_THREADS=abc").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, OutputIsDeterministic) {
    const auto a = run("sympow --p 7 --m 3 --format json").out;
    const auto b = run("sympow --p 7 --m 3 --format json").out;
    EXPECT_EQ(a, b);
    const auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j.dump(2) + "\n", a);
}
