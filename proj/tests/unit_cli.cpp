#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cfrac/cli.hpp"
#include "cfrac/specfile.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cfrac_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "cfrac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cfrac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class SpecDir {
public:
    SpecDir() : root_(fs::temp_directory_path() / ("cfrac-cli-" + std::to_string(::getpid())))
    {
        fs::create_directories(root_);
    }
    ~SpecDir() { fs::remove_all(root_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        const fs::path p = root_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

private:
    fs::path root_;
};

const SpecDir& dir()
{
    static const SpecDir d;
    return d;
}

std::string golden() { return dir().write("golden.json", R"({"mode": "periodic", "a": ["1"], "b": ["1"], "period": 1})"); }
std::string footnote() { return dir().write("footnote.json", R"({"mode": "periodic", "a": ["-1"], "b": ["2"]})"); }
std::string thiele() { return dir().write("thiele.json", R"({"mode": "periodic", "a": ["-3", "1", "1"], "b": ["1", "-1", "-1"], "period": 3})"); }

std::vector<std::string> keys(const json& j)
{
    std::vector<std::string> out;
    for (const auto& [k, _] : j.items()) out.push_back(k);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("eval")
{
    auto r = cfrac_run({"eval", golden(), "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("A(4)/B(4) = 8/5") != std::string::npos);
    r = cfrac_run({"eval", golden(), "--n", "0"});
    CHECK(r.out.find("A(0)/B(0) = 1 ") != std::string::npos);

    const auto bad = dir().write("bad.json", "{\"mode\": \"periodic\",\n  \"a\": [1, 2\n");
    r = cfrac_run({"eval", bad, "--n", "1"});
    CHECK(r.code == cfrac::cli::kExitUsage);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 3, column 1") != std::string::npos);

    const auto zero = dir().write("zero.json", R"({"mode": "finite", "a": ["-1", "-1"], "b": ["1", "1", "1"]})");
    r = cfrac_run({"eval", zero, "--n", "2"});
    CHECK(r.code == cfrac::cli::kExitZeroDenominator);
    CHECK(r.err.find("index 2") != std::string::npos);

    CHECK(cfrac_run({"eval", golden(), "--n", "1000001"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"eval", dir().write("short.json", R"({"mode": "finite", "a": [1], "b": [1, 1]})"), "--n", "3"}).code ==
          cfrac::cli::kExitModuleError);
    CHECK(cfrac_run({"eval", "/nonexistent/spec.json", "--n", "1"}).code == cfrac::cli::kExitUsage);
}

TEST_CASE("continuant")
{
    auto r = cfrac_run({"continuant", "--a", "1", "--b", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "K = 7\n");
    CHECK(cfrac_run({"continuant", "--b", "5"}).out == "K = 5\n");
    r = cfrac_run({"--json", "continuant", "--a", "1,1", "--b", "1,1,1", "--oracle"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["value"] == "3");
    CHECK(j["oracle_value"] == "3");
    CHECK(j["agreement"] == true);
    CHECK(cfrac_run({"continuant", "--a", "1", "--b", "1"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"continuant", "--a", "1,,2", "--b", "1,2,3"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"continuant", "--a", "√2", "--b", "√2,√2"}).out == "K = 2 + √2\n");
}

TEST_CASE("tietze")
{
    const auto s2 = dir().write("sqrt2.json", R"({"mode": "generator", "generator": {"name": "sqrt2"}})");
    auto r = cfrac_run({"--json", "tietze", s2, "--eps", "1e-6"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["semi_regular"]["valid"] == true);
    CHECK(j["float_values"]["value"].get<std::string>().starts_with("1.414213"));
    const auto ok_keys = keys(j);

    const auto bad = dir().write("neg32.json", R"({"mode": "periodic", "a": ["-1"], "b": ["3/2"]})");
    r = cfrac_run({"tietze", bad, "--eps", "1/10"});
    CHECK(r.code == cfrac::cli::kExitNotSemiRegular);
    CHECK(r.out.find("sum_below_one at n=1") != std::string::npos);
    CHECK(r.err.find("sum_below_one at n=1") != std::string::npos);
    r = cfrac_run({"--json", "tietze", bad, "--eps", "1/10"});
    CHECK(keys(json::parse(r.out)) == ok_keys);

    r = cfrac_run({"--json", "tietze", footnote(), "--eps", "1/10"});
    j = json::parse(r.out);
    CHECK(j["value"] == "13/12");
    CHECK(j["error_bound"] == "1/11");
    CHECK(j["n_used"] == 11);

    CHECK(cfrac_run({"tietze", footnote(), "--eps", "0"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"tietze", footnote(), "--eps", "1/10000", "--max-terms", "10"}).code == cfrac::cli::kExitModuleError);
    r = cfrac_run({"tietze", footnote(), "--eps", "1/10", "--certify", "40"});
    CHECK(r.code == 0);
    CHECK(r.out.find("certified for k = 1..40") != std::string::npos);
}

TEST_CASE("classify")
{
    auto r = cfrac_run({"classify", golden()});
    CHECK(r.code == 0);
    CHECK(r.out.starts_with("Convergent, limit = (1 + √5)/2\n"));
    r = cfrac_run({"classify", footnote()});
    CHECK(r.out.starts_with("Convergent, limit = 1 (C1: repeated eigenvalue)\n"));
    r = cfrac_run({"classify", thiele()});
    CHECK(r.out.starts_with("DivergentThiele q=0, x₁=2, x₂=1\n"));

    const auto fin = dir().write("finite.json", R"({"mode": "finite", "a": [1], "b": [1, 1]})");
    CHECK(cfrac_run({"classify", fin}).code == cfrac::cli::kExitNotPeriodic);
    const auto s2 = dir().write("sqrt2g.json", R"({"mode": "generator", "generator": {"name": "sqrt2"}})");
    CHECK(cfrac_run({"classify", s2}).code == cfrac::cli::kExitNotPeriodic);

    const auto cplx = dir().write("cplx.json", R"({"mode": "periodic", "a": [1], "b": [{"re": "0", "im": "3"}]})");
    r = cfrac_run({"--json", "classify", cplx});
    CHECK(r.code == 0);
    const auto jc = json::parse(r.out);
    CHECK(jc["verdict"]["kind"] == "Convergent");
    CHECK(jc["exact_values"]["limit"].is_null());

    const auto jg = json::parse(cfrac_run({"--json", "classify", golden()}).out);
    const auto jt = json::parse(cfrac_run({"--json", "classify", thiele()}).out);
    CHECK(keys(jg) == keys(jt));
    CHECK(keys(jg) == keys(jc));
    CHECK(keys(jg["exact_values"]) == keys(jt["exact_values"]));
    CHECK(jg["exact_values"]["limit"] == "(1 + √5)/2");
}

TEST_CASE("reverse round-trips")
{
    auto r = cfrac_run({"reverse", thiele()});
    REQUIRE(r.code == 0);
    const auto once = dir().write("once.json", r.out);
    CHECK(json::parse(r.out)["a"] == json{"1", "1", "-3"});
    const auto twice = cfrac_run({"reverse", once});
    REQUIRE(twice.code == 0);
    const auto original = cfrac::to_json(cfrac::load_spec_file(thiele()));
    CHECK(json::parse(twice.out) == original);
    CHECK(cfrac_run({"reverse", dir().write("fin2.json", R"({"mode": "finite", "a": [], "b": [1]})")}).code ==
          cfrac::cli::kExitNotPeriodic);
}

TEST_CASE("galois")
{
    const auto r13 = dir().write("r13.json", R"({"mode": "periodic", "a": [1, 1], "b": [2, 1]})");
    auto r = cfrac_run({"--json", "galois", r13});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["relation_holds"] == true);
    CHECK(j["conjugate"]["conjugate"] == "1 - √3");
    CHECK(j["conjugate"]["special_limit"] == "(1 + √3)/2");
    CHECK(j["conjugate"]["identity_verified"] == true);
    r = cfrac_run({"galois", footnote()});
    CHECK(r.code == 0);
    CHECK(r.err.find("conjugate check skipped") != std::string::npos);
    CHECK(cfrac_run({"galois", thiele()}).code == 0);
}

TEST_CASE("power-iter")
{
    auto r = cfrac_run({"power-iter", golden(), "--steps", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("3\t3\t2\t3/2") != std::string::npos);
    r = cfrac_run({"--json", "power-iter", "--matrix", "2,-1,1,0", "--steps", "5"});
    const auto j = json::parse(r.out);
    CHECK(j["case"] == "repeated");
    CHECK(j["steps"].size() == 6);
    CHECK(j["steps"][0]["ratio"].is_null());
    CHECK(j["steps"][5]["ratio"] == "6/5");
    CHECK(cfrac_run({"power-iter", "--matrix", "1,1,0,1"}).code == cfrac::cli::kExitModuleError);
    CHECK(cfrac_run({"power-iter", "--matrix", "1,1,1"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"power-iter"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"power-iter", golden(), "--u0", "0"}).code == cfrac::cli::kExitModuleError);
    r = cfrac_run({"power-iter", golden(), "--u0", "(1 - √5)/2", "--v0", "1", "--steps", "2"});
    CHECK(r.out.find("dominant_degenerate") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(cfrac_run({}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"frobnicate"}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"--precision", "16", "classify", golden()}).code == cfrac::cli::kExitUsage);
    CHECK(cfrac_run({"--help"}).code == 0);
}
