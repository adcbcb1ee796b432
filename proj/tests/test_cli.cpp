#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(SORTDEL_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), f)) r.out.append(buf.data(), n);
    const int status = pclose(f);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST(Cli, TriangulateSquare)
{
    const auto p = write_temp("sortdel_cli_square.txt", "0,0\n1,0\n1,1\n0,1\n");
    const auto r = run("tri --input " + p.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 1 3\n1 2 3\n");
}

TEST(Cli, VerifyGeneratedPasses)
{
    const auto r = run("verify --gen 200 --seed 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PROP empty_circumcircle PASS"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find(" FAIL "), std::string::npos) << r.out;
}

TEST(Cli, TriVerifyFlag)
{
    EXPECT_EQ(run("tri --gen 100 --seed 2 --verify --format edges").code, 0);
}

TEST(Cli, Deterministic)
{
    EXPECT_EQ(run("tri --gen 300 --seed 8 --format svg").out, run("tri --gen 300 --seed 8 --format svg").out);
}

TEST(Cli, MalformedInputExitsOne)
{
    const auto p = write_temp("sortdel_cli_bad.txt", "0,0\n1,zz\n");
    EXPECT_EQ(run("tri --input " + p.string()).code, 1);
    EXPECT_EQ(run("tri --input /nonexistent/points.txt").code, 1);
    EXPECT_EQ(run("tri --format png --gen 10").code, 1);
    EXPECT_EQ(run("tri --gen 10 --input " + p.string()).code, 1);
}

TEST(Cli, CollinearExitsTwo)
{
    const auto p = write_temp("sortdel_cli_line.txt", "0,0\n1,1\n2,2\n");
    EXPECT_EQ(run("tri --input " + p.string()).code, 2);
    const auto h = run("hull --input " + p.string());
    EXPECT_EQ(h.code, 2);
    EXPECT_EQ(h.out, "0\n2\n");
}

TEST(Cli, GenRoundTrip)
{
    const auto r = run("gen --gen 5 --seed 1");
    EXPECT_EQ(r.code, 0);
    const auto p = write_temp("sortdel_cli_gen.txt", r.out);
    EXPECT_EQ(run("hull --input " + p.string()).code, 0);
}

TEST(Cli, BenchCsv)
{
    const auto r = run("bench --sizes 100,200 --reps 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("n,sort_ns,build_ns,to_left_calls,in_circle_calls\n", 0), 0u);
    EXPECT_EQ(run("bench --sizes 200,100 --reps 3").code, 1);
}
