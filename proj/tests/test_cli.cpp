#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run shell(const std::string& cmd) {
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run run(const std::string& args) { return shell(std::string(ARRLIE_CLI) + " " + args + " 2>/dev/null"); }

Run pipe(const std::string& left, const std::string& right) {
    return shell(left + " 2>/dev/null | " + std::string(ARRLIE_CLI) + " " + right + " 2>/dev/null");
}

bool has_line(const std::string& out, const std::string& line) {
    return out.find(line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, Decomposable) {
    auto r = run("decomposable builtin:x2 --machine --assert");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("#arrlie 1 decomposable\n", 0), 0u);
    EXPECT_TRUE(has_line(r.out, "rank_q 10"));
    EXPECT_TRUE(has_line(r.out, "falk_bound 10"));
    EXPECT_TRUE(has_line(r.out, "verdict true"));
    EXPECT_TRUE(r.out.ends_with("#end\n"));
}

TEST(Cli, AssertFailsOnFalseVerdict) {
    EXPECT_EQ(run("decomposable builtin:braid4 --machine").code, 0);
    auto r = run("decomposable builtin:braid4 --machine --assert");
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(has_line(r.out, "verdict false"));
}

TEST(Cli, RanksBraid) {
    auto r = run("ranks builtin:braid4 --machine --max-degree 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "degree 3 rank_q 10"));
    EXPECT_TRUE(has_line(r.out, "degree 4 rank_q 21"));
    EXPECT_TRUE(has_line(r.out, "degree 3 falk_bound 8"));
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run("ranks builtin:nope").code, 2);
    EXPECT_EQ(run("ranks /nonexistent/file.json").code, 2);
    EXPECT_EQ(pipe("echo '{\"bad\":1}'", "ranks -").code, 2);
    EXPECT_EQ(pipe("echo '{\"normals\":[[1,0],[2,0]]}'", "ranks -").code, 2);
    EXPECT_EQ(pipe("echo 'not json'", "flats -").code, 2);
    EXPECT_EQ(run("ranks").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, ResourceGuard) {
    EXPECT_EQ(run("").code, 2);
    auto r = shell(std::string("ARRLIE_RESOURCE_LIMIT=50 ") + ARRLIE_CLI + " ranks builtin:braid5 --max-degree 4 2>/dev/null");
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Deterministic) {
    for (const char* args : {"ranks builtin:x2 --machine --field all --max-degree 4", "chen builtin:braid4 --direct --machine",
                             "lcs builtin:x3 --machine"}) {
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, FamilyPipesIntoGraphicLcs) {
    auto r = pipe(std::string(ARRLIE_CLI) + " graph family --i 1", "graph graphic-lcs - --machine --max-degree 5");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has_line(r.out, "series 1,-10,40,-80,80,-32")) << r.out;
}

TEST(Cli, FlatsRoundTrip) {
    auto direct = run("flats builtin:x2 --machine");
    auto trip = pipe(std::string(ARRLIE_CLI) + " flats builtin:x2 --emit-input", "flats - --machine");
    EXPECT_EQ(direct.code, 0);
    EXPECT_EQ(trip.code, 0);
    EXPECT_EQ(direct.out, trip.out);
}

TEST(Cli, HsCheck) {
    EXPECT_EQ(run("hs-check builtin:braid3 --exponents 1,2 --assert").code, 0);
    EXPECT_EQ(run("hs-check builtin:braid3 --exponents 1,1,2 --assert").code, 1);
    EXPECT_EQ(run("hs-check builtin:braid3 --exponents 1,x").code, 2);
}

TEST(Cli, Graph) {
    auto r = run("graph kappa builtin:wheel --machine");
    EXPECT_TRUE(has_line(r.out, "kappa1 8"));
    EXPECT_TRUE(has_line(r.out, "kappa2 4"));
    EXPECT_EQ(run("graph k4-free builtin:braid4 --assert").code, 1);
    EXPECT_EQ(run("graph chordal builtin:wheel --assert").code, 1);
    EXPECT_EQ(run("graph cone builtin:wheel --edge 1,9").code, 2);
    EXPECT_EQ(run("graph kappa").code, 2);
}

TEST(Cli, Examples) {
    auto r = run("examples --machine");
    EXPECT_EQ(r.code, 0);
    for (const char* name : {"x2", "x3", "braid4", "wheel", "gfam-3"}) EXPECT_NE(r.out.find(name), std::string::npos);
}

TEST(Cli, Oracle) {
    auto r = run("oracle builtin:braid4 --machine --assert");
    EXPECT_EQ(r.code, 0) << r.out;
}
