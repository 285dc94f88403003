#include "daisy/edge_list.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = {})
{
    std::string cmd = env + (env.empty() ? "" : " ") + DAISY_CLI_PATH + " " + args + " 2>/dev/null";
    Result res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return res;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.out.append(buf, got);
    }
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name)
{
    auto p = std::filesystem::temp_directory_path() / ("daisy-cli-" + name);
    std::filesystem::remove_all(p);
    return p;
}

}  // namespace

TEST(CliConstruct, ShiftWritesEdgeList)
{
    auto path = scratch("shift.txt");
    Result r = run("construct shift --n 5 --r 3 --t 2 --j 0 --verify 3 --out " + path.string());
    ASSERT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["edges"], 4);
    EXPECT_EQ(j["verify"]["result"], "FREE");
    EXPECT_TRUE(j["verify"]["witness"].is_null());
    auto g = daisy::load_edge_list(path.string());
    EXPECT_EQ(g.edge_count(), 4u);
    std::filesystem::remove(path);
}

TEST(CliConstruct, OtherKinds)
{
    Result h = run("construct h44 --s 2 --verify 4");
    ASSERT_EQ(h.code, 0);
    EXPECT_EQ(parse(h)["edges"], 38);
    EXPECT_EQ(parse(h)["verify"]["result"], "FREE");

    Result a = run("construct augment --n 5 --r 3 --j 0 --fibers 2 --residue 0 --verify 3");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(parse(a)["n"], 10);
    EXPECT_EQ(parse(a)["verify"]["result"], "FREE");

    Result c = run("construct residue --n 7 --r 3 --count 2 --verify 3");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(parse(c)["verify"]["result"], "FREE");
}

TEST(CliConstruct, BadParamsExitTwo)
{
    EXPECT_EQ(run("construct shift --n 5 --r 6").code, 2);
    EXPECT_EQ(run("construct shift --n 5 --r 3 --j 9").code, 2);
    EXPECT_EQ(run("construct h44 --s 9").code, 2);
    EXPECT_EQ(run("construct shift --r 3").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(CliConstruct, BudgetFromEnvironment)
{
    EXPECT_EQ(run("construct shift --n 14 --r 5", "DAISY_BUDGET=100").code, 2);
    EXPECT_EQ(run("construct shift --n 14 --r 5", "DAISY_BUDGET=nonsense").code, 2);
    EXPECT_EQ(run("construct shift --n 14 --r 5", "DAISY_BUDGET=5000").code, 0);
}

TEST(CliVerify, ReportsWitness)
{
    auto path = scratch("k4.txt");
    {
        std::ofstream out{path};
        out << daisy::to_edge_list(daisy::complete_hypergraph(3, 5));
    }
    Result r = run("verify --in " + path.string() + " --k 3");
    EXPECT_EQ(r.code, 1);
    auto j = parse(r);
    EXPECT_EQ(j["result"], "NOT_FREE");
    EXPECT_EQ(j["witness"]["vertex_set"].size(), 4u);
    EXPECT_EQ(run("verify --in " + path.string() + " --k 5").code, 2);
    EXPECT_EQ(run("verify --in /nonexistent/file --k 3").code, 2);
    std::filesystem::remove(path);
}

TEST(CliBound, Values)
{
    Result c = run("bound c3a --n 42 --r 8");
    ASSERT_EQ(c.code, 0);
    EXPECT_EQ(parse(c)["decimal"], "6217014");
    Result t = run("bound t3 --ex 147553 --n 30 --r 7 --k 3");
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(parse(t)["decimal"], "19274108");
    Result b = run("bound blowup --ex 19274108 --n 60 --r 7");
    EXPECT_EQ(parse(b)["decimal"], "0.034701");
    Result p = run("bound pi-r --r 7");
    ASSERT_EQ(p.code, 0);
    EXPECT_EQ(parse(p)["sandwich"]["holds"], true);
    Result ch = run("bound chrom --n 11 --r 5 --daisy 3");
    EXPECT_EQ(parse(ch)["decimal"], "84");
    Result rec = run("bound recurs --ex 147553 --n 30 --r 7 --k 3 --s 3");
    EXPECT_EQ(parse(rec)["formula"], "RECURS");
    EXPECT_EQ(run("bound t3 --ex abc --n 30 --r 7").code, 2);
    EXPECT_EQ(run("bound c3a --n 5 --r 5").code, 2);
    EXPECT_EQ(run("bound chrom --n 11 --r 5").code, 2);
}

TEST(CliOptimize, BestN)
{
    Result r = run("optimize --r 8 --k 3 --pipeline c3a-blowup");
    ASSERT_EQ(r.code, 0);
    auto j = parse(r);
    EXPECT_EQ(j["n_star"], 42);
    EXPECT_EQ(j["density"]["decimal"], "0.025888");
    EXPECT_EQ(run("optimize --r 7 --pipeline c3a-recurs2-blowup").code, 0);
    EXPECT_EQ(run("optimize --r 7 --pipeline nonsense").code, 2);
    EXPECT_EQ(run("optimize --r 7 --pipeline c3a-recurs0-blowup").code, 2);
}

TEST(CliFx, MaximumAndPoint)
{
    Result m = run("fx --max");
    ASSERT_EQ(m.code, 0);
    auto j = parse(m);
    EXPECT_NEAR(j["F"]["x_star"].get<double>(), 1.065, 0.02);
    EXPECT_GT(j["F"]["value"]["lo"].get<double>(), 1.7215);
    EXPECT_NEAR(j["f"]["x0"].get<double>(), 0.762, 0.005);
    Result x = run("fx --x 1.065");
    EXPECT_GT(parse(x)["F"]["lo"].get<double>(), 1.7215);
    EXPECT_EQ(run("fx --x -1").code, 2);
    EXPECT_EQ(run("fx").code, 2);
    Result csv = run("fx --csv --from 1 --to 2 --points 3");
    EXPECT_EQ(csv.out.rfind("x,F_lo,F_hi\n", 0), 0u);
}

TEST(CliSpacing, SeedRequiredAndDeterministic)
{
    EXPECT_EQ(run("spacing --r 3 --t 2 --samples 10000").code, 2);
    Result a = run("spacing --r 3 --t 2 --samples 200000 --seed 42 --threads 1");
    Result b = run("spacing --r 3 --t 2 --samples 200000 --seed 42 --threads 3");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto j = parse(a);
    EXPECT_NEAR(j["mean"].get<double>(), 1.0 / 9, 5 * j["stderr"].get<double>());
    EXPECT_EQ(j["closed_form"], "1/9");
    EXPECT_EQ(run("spacing --r 3 --t 2 --samples 10 --seed 1").code, 2);
}

TEST(CliProfile, CachedTwiceIdentical)
{
    auto dir = scratch("cache");
    Result a = run("profile --n 13 --r 4 --t 2 --cache " + dir.string());
    Result b = run("profile --n 13 --r 4 --t 2 --cache " + dir.string());
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(parse(a)["counts"].size(), 13u);
    std::filesystem::remove_all(dir);
}

TEST(CliBound, RepeatedRunsAreByteIdentical)
{
    for (const char* args : {"bound cinf --ex 147553 --n 30 --r 7 --k 3 --M 8", "bound pair --r 7 --k 3",
                             "construct shift --n 9 --r 3 --verify 3"}) {
        Result a = run(args);
        Result b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}
