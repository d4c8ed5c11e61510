#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" THETACOB_CLI "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("thetacob_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Cli, GoldenExamples) {
    auto classes = run("classes vn --max-weight 3");
    EXPECT_EQ(classes.status, 0);
    EXPECT_NE(classes.out.find("v3 = t3 - 4*t1*t2 + 3*t1^3"), std::string::npos) << classes.out;
    EXPECT_NE(classes.out.find("q2 = 2"), std::string::npos);
    EXPECT_EQ(run("genus --name todd --of theta:7").out, "-1\n");
    EXPECT_EQ(run("theta intersect --n 2 --k 2").out, "6\n");
    EXPECT_EQ(run("genus --name l --of theta:2").out, "-2\n");
    EXPECT_EQ(run("genus --name euler --of poly:\"t1*t2\"").out, "-12\n");  // chi(t1) chi(t2) = (-2)(6)
    EXPECT_EQ(run("ln apply --partition 1 --expr t1").out, "2\n");
}

TEST(Cli, JsonEnvelopeIsDeterministic) {
    for (const std::string args : {"beta --max-weight 5", "classes wn --max-weight 6", "invariants --n 3 --k 2",
                                   "quantize --expr \"t1*t2 - 1/2*t3\"", "weierstrass verify --lemniscatic"}) {
        auto a = run(args + " --format json"), b = run(args + " --format json");
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        auto j = nlohmann::json::parse(a.out);
        EXPECT_EQ(j["format_version"], "1.0.0");
        EXPECT_TRUE(j.contains("params"));
        EXPECT_TRUE(j["payload"].is_object());
    }
    auto inv = nlohmann::json::parse(run("invariants --n 2 --format json").out);
    EXPECT_EQ(inv["command"], "invariants");
    EXPECT_EQ(inv["payload"]["betti"][2], "16");
    EXPECT_EQ(inv["payload"]["signature"], "-2");
}

TEST(Cli, CongruenceSystemJson) {
    auto j = nlohmann::ordered_json::parse(run("congruences --n 2 --format json").out);
    const auto& p = j["payload"];
    EXPECT_EQ(p["weight"], 2);
    EXPECT_EQ(p["elementary_divisors"], (nlohmann::ordered_json{"1", "12"}));
    EXPECT_EQ(p["functionals"][0]["mu"], "");
    EXPECT_EQ(p["functionals"][0]["coeffs"]["2"], "1/6");
    EXPECT_EQ(p["functionals"][0]["coeffs"]["1,1"], "1/4");
}

TEST(Cli, CongruenceCheckVerdicts) {
    auto good = temp_file("theta3.json", R"({"values": {"3": -24, "2,1": -24, "1,1,1": -24}})");
    auto j = nlohmann::json::parse(run("congruences --n 3 --check " + good + " --format json").out);
    EXPECT_TRUE(j["payload"]["pass"]);
    EXPECT_EQ(j["payload"]["values"][0]["value"], "-1");
    auto bad = temp_file("bad2.json", R"({"values": {"2": "0", "1,1": "1"}})");
    auto r = run("congruences --n 2 --check " + bad);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("verdict: fail"), std::string::npos);
    EXPECT_EQ(run("congruences --n 3 --check " + bad).status, 2);
    auto partial = temp_file("partial.json", R"({"values": {"2": "0"}})");
    EXPECT_EQ(run("congruences --n 2 --check " + partial).status, 2);
}

TEST(Cli, CustomGenusFile) {
    auto todd = temp_file("todd.json", R"({"coeffs": ["1", "1/2", "1/12", "0", "-1/720"]})");
    EXPECT_EQ(run("genus --name file:" + todd + " --of theta:3").out, "-1\n");
    EXPECT_EQ(run("genus --name file:" + todd + " --of theta:5").status, 2);
    auto broken = temp_file("broken.json", R"({"coeffs": ["2"]})");
    EXPECT_EQ(run("genus --name file:" + broken + " --of theta:1").status, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("beta --max-weight 0").status, 2);
    EXPECT_EQ(run("classes xn").status, 2);
    EXPECT_EQ(run("ln apply --partition 2,x --expr t1").status, 2);
    EXPECT_EQ(run("ln apply --partition 1 --expr \"t1 +\"").status, 2);
    EXPECT_EQ(run("genus --name a-hat --of theta:2").status, 2);
    EXPECT_EQ(run("genus --of theta:99").status, 2);
    EXPECT_EQ(run("congruences --n 7").status, 2);
    EXPECT_EQ(run("weierstrass verify --omega1 1 --omega2 2").status, 2);
    EXPECT_EQ(run("weierstrass verify --omega1 1 --omega2 0.3+1.1i").status, 0);
    EXPECT_EQ(run("weierstrass verify --lemniscatic --tol 1e-30").status, 3);
    EXPECT_EQ(run("nosuch").status, 2);
}

TEST(Cli, MaxWeightEnvironmentDefault) {
    auto r = run("classes cpn", "THETA_MAX_WEIGHT=2");
    EXPECT_EQ(r.out, "[CP^1] = -t1\n[CP^2] = -1/2*t2 + 3/2*t1^2\n");
    EXPECT_EQ(run("classes cpn", "THETA_MAX_WEIGHT=two").status, 2);
    EXPECT_EQ(run("classes cpn --max-weight 1", "THETA_MAX_WEIGHT=2").out, "[CP^1] = -t1\n");
}

TEST(Cli, SelfChecks) {
    auto q = run("quantize --expr \"t2*t1 + 3\" --roundtrip");
    EXPECT_EQ(q.status, 0);
    EXPECT_NE(q.out.find("roundtrip: ok"), std::string::npos);
    auto f = nlohmann::json::parse(run("fgl check --order 7 --format json").out);
    EXPECT_TRUE(f["payload"]["pass"]);
    EXPECT_EQ(f["payload"]["F(F(u,v),w) - F(u,F(v,w))"], "0");
    // The selftest matrix reports every criterion; its exit status follows the overall verdict.
    auto s = run("selftest --format json");
    auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["payload"]["criteria"].size(), 9u);
    EXPECT_EQ(s.status, j["payload"]["pass"].get<bool>() ? 0 : 1);
}
