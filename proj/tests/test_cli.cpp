#include <cyclic_quiver/json_io.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using cyclic_quiver::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run cqharm(const std::string& args)
{
    auto err_path = std::filesystem::temp_directory_path() / ("cqharm_err_" + std::to_string(::getpid()));
    std::string cmd = std::string(CQHARM_PATH) + " " + args + " 2>" + err_path.string();
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int raw = ::pclose(pipe);
    std::ifstream in(err_path);
    std::stringstream err;
    err << in.rdbuf();
    std::filesystem::remove(err_path);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out, err.str()};
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

const std::string adjoint_k1 = R"({"k":1,"nu":[{"plus":[1],"minus":[1]}]})";

std::string error_code(const Run& r) { return json::parse(r.err)["error"]["code"].get<std::string>(); }

} // namespace

TEST(Cli, StableMult)
{
    auto r = cqharm("stable-mult --ktype " + quoted(adjoint_k1) + " --max-degree 4");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"truncation":4,"coeffs":[0,1,1,1,1]})"));
    auto text = cqharm("stable-mult --ktype " + quoted(adjoint_k1) + " --max-degree 4 --format text");
    EXPECT_EQ(text.out, "q + q^2 + q^3 + q^4 + O(q^5)\n");
}

TEST(Cli, KTypeFromFile)
{
    auto path = std::filesystem::temp_directory_path() / ("cqharm_ktype_" + std::to_string(::getpid()) + ".json");
    std::ofstream(path) << adjoint_k1;
    auto r = cqharm("stable-mult --ktype " + path.string() + " --max-degree 3");
    std::filesystem::remove(path);
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["coeffs"], json::parse("[0,1,1,1]"));
}

TEST(Cli, Lr)
{
    auto r = cqharm("lr --lambda 3,2,1 --alpha '[2,1]' --nu 2,1");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"crystal":2,"classical":2,"agree":true})"));
}

TEST(Cli, VerifyModesPass)
{
    auto trivial = quoted(R"({"k":2,"nu":[{},{}]})");
    auto sep = cqharm("verify --mode separation --ktype " + trivial + " --max-degree 5");
    ASSERT_EQ(sep.status, 0) << sep.err;
    EXPECT_TRUE(json::parse(sep.out)["pass"].get<bool>());
    EXPECT_EQ(cqharm("verify --mode definition --ktype " + quoted(adjoint_k1) + " --max-degree 4").status, 0);
    EXPECT_EQ(cqharm("verify --mode hesselink --ktype " + quoted(adjoint_k1) + " --max-degree 4").status, 0);
    auto arrow = quoted(R"({"k":2,"nu":[{"plus":[1]},{"minus":[1]}]})");
    EXPECT_EQ(cqharm("verify --mode character --ktype " + arrow + " --dims 2,2 --max-degree 2").status, 0);
}

TEST(Cli, Exponents)
{
    auto r = cqharm("exponents --n 3 --weight 1,0,-1");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"truncation":2,"coeffs":[0,1,1]})"));
}

TEST(Cli, OracleAndDistinguishedAreDeterministic)
{
    auto a = cqharm("oracle --dims 2 --k 2 --max-degree 2");
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.out, cqharm("oracle --dims 2,2 --max-degree 2").out);
    auto table = json::parse(a.out)["table"];
    EXPECT_FALSE(table.empty());
    EXPECT_EQ(table[0]["series"]["coeffs"], json::parse("[1,0,0]"));

    std::string args = "distinguished --ktype " + quoted(adjoint_k1) + " --max-degree 5";
    auto one = cqharm(args + " --threads 1"), three = cqharm(args + " --threads 3");
    ASSERT_EQ(one.status, 0);
    EXPECT_EQ(one.out, three.out);
    EXPECT_EQ(json::parse(one.out)["count"], 5);
}

TEST(Cli, ErrorsAreStructured)
{
    auto malformed = cqharm("stable-mult --ktype '{\"k\":1' --max-degree 2");
    EXPECT_EQ(malformed.status, 2);
    EXPECT_EQ(error_code(malformed), "malformed_json");
    EXPECT_TRUE(malformed.out.empty());

    auto schema = cqharm("stable-mult --ktype '{\"k\":2,\"nu\":[{}]}' --max-degree 2");
    EXPECT_EQ(schema.status, 2);
    EXPECT_EQ(error_code(schema), "schema_violation");

    auto missing = cqharm("stable-mult --max-degree 2");
    EXPECT_EQ(missing.status, 2);
    EXPECT_EQ(error_code(missing), "usage");

    auto capacity = cqharm("oracle --dims 4,4 --max-degree 2");
    EXPECT_EQ(capacity.status, 3);
    EXPECT_EQ(error_code(capacity), "capacity_exceeded");

    auto big = cqharm("stable-mult --ktype " + quoted(adjoint_k1) + " --max-degree 99");
    EXPECT_EQ(big.status, 3);

    auto badweight = cqharm("exponents --n 2 --weight 0,1");
    EXPECT_EQ(badweight.status, 2);
    EXPECT_EQ(error_code(badweight), "invalid_argument");
}
