#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#include "json_schema.hpp"

using namespace birmax;
using namespace birmax::testing;

namespace {

struct Run {
    int code;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(BIRMAX_CLI) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) cmd = "printf '%s' " + quote(stdin_text) + " | " + cmd;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    Run r{-1, ""};
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe.release());
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kCurve = "curve genus 1 pic0 { L: inf, M: inf, T: 3, U: 3 }";

}  // namespace

TEST(Cli, ClassifyJson) {
    auto r = run("--format json classify " + quote(kCurve + " ; A31"));
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(valid_report(j));
    EXPECT_EQ(j["maximal"], "yes");
    EXPECT_EQ(j["vertical_group"], "Z3xZ3");
}

TEST(Cli, ClassifyText) {
    auto r = run("classify " + quote(kCurve + " ; P(O + O(L) + O(M))"));
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("maximal: yes"), std::string::npos);
    EXPECT_NE(r.out.find("vertical_group: Gm^2"), std::string::npos);
}

TEST(Cli, ReadsStdin) {
    auto r = run("--format json classify -", kCurve + " ;\n P(E20 + O(M))");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["vertical_group"], "Gm:Ga");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("--format xml classify " + quote(kCurve + " ; A31")).code, 1);
    EXPECT_EQ(run("--b-range 3 catalog " + quote(kCurve)).code, 1);
    EXPECT_EQ(run("classify " + quote(kCurve + " ; P(O +")).code, 2);
    EXPECT_EQ(run("classify " + quote(kCurve + " ; P(O(X))")).code, 3);
    EXPECT_EQ(run("classify " + quote(kCurve + " ; P(O + O)")).code, 3);
    EXPECT_EQ(run("conjugates " + quote(kCurve + " ; A30")).code, 3);
    EXPECT_EQ(run("classify-degree -d 10 " + quote(kCurve)).code, 3);
    EXPECT_EQ(run("--d0 p0 catalog " + quote(kCurve)).code, 3);
    EXPECT_EQ(run("verify-reps").code, 0);
}

TEST(Cli, ClassifyDegree) {
    auto r = run("--format json classify-degree " + quote(kCurve));
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 9u);
    for (const auto& d : j) EXPECT_TRUE(valid_degree(d));
    auto one = Json::parse(run("--format json classify-degree -d 8 " + quote(kCurve)).out);
    EXPECT_EQ(one["aut_if_maximal"], "PGL2");
}

TEST(Cli, Conjugates) {
    auto r = run("--format json --sl2-bound 1 --b-range -1..1 conjugates " + quote(kCurve + " ; P(O + O(T) + O(U))"));
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(valid_descriptor_list(j));
    EXPECT_FALSE(j.empty());
    r = run("--format json conjugates " + quote(kCurve + " ; P(O + O + O(M))"));
    EXPECT_EQ(Json::parse(r.out).size(), 2u);
}

TEST(Cli, IsomAndNormalize) {
    auto r = run("--format json isom " + quote(kCurve + " ; P(O + O(L) + O(M))") + " " +
                 quote(kCurve + " ; P(O(-L) + O + O(M - L))"));
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["isomorphic"], true);
    r = run("--format json isom " + quote(kCurve + " ; A31") + " " + quote(kCurve + " ; A32"));
    EXPECT_EQ(Json::parse(r.out)["isomorphic"], false);
    r = run("--format json normalize " + quote(kCurve + " ; P(O(L) + O(L) + O(L))"));
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["normal_form"], "P(O + O + O)");
    EXPECT_EQ(j["case_tag"], "TrivialProduct");
}

TEST(Cli, Catalog) {
    auto r = run("--format json catalog " + quote(kCurve));
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_TRUE(valid_catalog(j));
    for (const auto& e : j) EXPECT_EQ(e["witness"]["holds"], true);
    auto r2 = run("--format json --d0 '2*p0 + T' catalog " + quote(kCurve));
    EXPECT_EQ(r2.code, 0);
    EXPECT_NE(Json::parse(r2.out), j);
}

TEST(Cli, VerifyReps) {
    auto r = run("--format json verify-reps");
    ASSERT_EQ(r.code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["heisenberg"][0]["commutator_scalar"], "w");
    EXPECT_EQ(j["heisenberg"][1]["commutator_scalar"], "-1 - w");
}
