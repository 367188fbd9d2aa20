#include "dlin/cli.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace dlin;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, SolveCompanionExample) {
    const Outcome o = cli({"solve", "--field", "qz", "-P", "Y^2 - Y*(1/(z-1)) + 1/(z-1)^2", "--inits", "1,0",
                           "--terms", "6"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "n  value\n"
                     "0  1\n"
                     "1  0\n"
                     "2  -1/(z^2-2*z+1)\n"
                     "3  1/(z^3-3*z^2+3*z-1)\n"
                     "4  -2/(z^4-4*z^3+6*z^2-4*z+1)\n"
                     "5  6/(z^5-5*z^4+10*z^3-10*z^2+5*z-1)\n");
}

TEST(Cli, RecurOnReciprocalFindsNothing) {
    const Outcome o = cli({"recur", "--field", "qz", "--target", "1/z", "--bound", "3", "--window", "12"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "none\n");
}

TEST(Cli, RecurFibonacci) {
    const Outcome o = cli({"recur", "--field", "q", "--seq", "[0,1,1,2,3,5,8,13,21,34,55,89]", "--bound", "2",
                           "--window", "8"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "-1, -1, 1\n");
}

TEST(Cli, CheckHopfAxiomsPasses) {
    const Outcome o = cli({"check", "hopf-axioms"});
    EXPECT_EQ(o.code, 0) << o.out;
    EXPECT_EQ(o.out.find("  fail"), std::string::npos);
    EXPECT_NE(o.out.find("takeuchi"), std::string::npos);
}

TEST(Cli, CheckJsonSchema) {
    const Outcome o = cli({"check", "generation", "--json"});
    ASSERT_EQ(o.code, 0) << o.out;
    const auto j = nlohmann::json::parse(o.out);
    ASSERT_TRUE(j.is_array());
    for (const auto& r : j) {
        EXPECT_TRUE(r.contains("check"));
        EXPECT_EQ(r["status"], "pass");
        EXPECT_TRUE(r["first_failure"].is_null());
    }
}

TEST(Cli, AnnihilatePrintsCaveat) {
    const Outcome o = cli({"annihilate", "--field", "qz", "--target", "1/z", "--bound", "2"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(o.out, "annihilator: Y + 1/z\norder: 1\ncertified given order ≤ 2\n");
    const Outcome none = cli({"annihilate", "--seq", "[1, z, z^2, z^3, z^4, z^5, z^6, z^7]", "--bound", "2"});
    ASSERT_EQ(none.code, 0) << none.err;
    EXPECT_EQ(none.out, "annihilator: none\ncertified given order ≤ 2\n");
}

TEST(Cli, ProductJson) {
    const Outcome o = cli({"product", "-P", "Y - z", "--inits", "1", "-Q", "Y - 1/z", "--inits2", "1", "--terms", "3",
                           "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["annihilator"], "Y - (z^2+1)/z");
    EXPECT_EQ(j["inits"], nlohmann::json::array({"1"}));
    EXPECT_EQ(j["field"], "qz");
    EXPECT_EQ(j["terms"].size(), 3u);
}

TEST(Cli, SumAndExpand) {
    const Outcome s = cli({"sum", "--field", "q", "-P", "Y - 1", "--inits", "1", "-Q", "Y + 1", "--inits2", "1",
                           "--terms", "4"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_NE(s.out.find("annihilator: Y^2 - 1"), std::string::npos);
    const Outcome e = cli({"expand", "--target", "1/z", "--terms", "3", "--json"});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(nlohmann::json::parse(e.out)["terms"], nlohmann::json::array({"1/z", "-1/z^2", "2/z^3"}));
}

TEST(Cli, ExpandNeedsOneEmbedding) {
    const Outcome o = cli({"expand", "--terms", "3"});
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("ArityMismatch"), std::string::npos);
}

TEST(Cli, FundAndComult) {
    const Outcome f = cli({"fund", "--field", "q", "-P", "Y^2 + 4", "--terms", "4"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(f.out, "n  o_0  o_1\n0  1    0\n1  0    1\n2  -4   0\n3  0    -4\n");
    const Outcome c = cli({"comult", "--field", "q", "-P", "Y^2 - Y - 1", "--inits", "0,1", "--terms", "4", "--json"});
    ASSERT_EQ(c.code, 0) << c.err;
    const auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j["pairs"][1]["right"], nlohmann::json::array({"0", "1", "1", "2"}));
}

TEST(Cli, AntipodeOfSourceIsTarget) {
    const Outcome o = cli({"antipode", "--source", "1/z", "--terms", "3", "--json"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(nlohmann::json::parse(o.out)["terms"], nlohmann::json::array({"1/z", "-1/z^2", "2/z^3"}));
}

TEST(Cli, ErrorsCarryNames) {
    const Outcome arity = cli({"solve", "-P", "Y^2 + z", "--inits", "1"});
    EXPECT_NE(arity.code, 0);
    EXPECT_NE(arity.err.find("ArityMismatch"), std::string::npos);
    const Outcome syntax = cli({"solve", "-P", "Y^2 +* z", "--inits", "1,2"});
    EXPECT_NE(syntax.code, 0);
    EXPECT_NE(syntax.err.find("SyntaxError"), std::string::npos);
    EXPECT_NE(syntax.err.find("offset 5"), std::string::npos);
    const Outcome monic = cli({"fund", "-P", "2*Y"});
    EXPECT_NE(monic.code, 0);
    EXPECT_NE(monic.err.find("NotMonic"), std::string::npos);
    const Outcome bad_field = cli({"solve", "--field", "r", "-P", "Y", "--inits", "1"});
    EXPECT_NE(bad_field.code, 0);
    EXPECT_NE(cli({}).code, 0);
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"product", "-P", "Y - z", "--inits", "1", "-Q", "Y^2 - Y - (1 - z + z^2)",
                                        "--inits2", "0,1", "--terms", "6"};
    const Outcome a = cli(args);
    const Outcome b = cli(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
}
