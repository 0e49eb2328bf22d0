#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Out {
    int code;
    std::string text;
};

Out sh(const std::string& args) {
    std::string cmd = std::string(ELLCON_CLI) + " " + args + " 2>&1";
    Out o{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return o;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) o.text.append(buf, n);
    int st = pclose(p);
    o.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    fs::path d = fs::temp_directory_path() / ("ellcon-cli-test-" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_SUITE("cli-harness") {

TEST_CASE("eval") {
    Out o = sh("eval z --at u_l=5 l=2");
    CHECK(o.code == 0);
    CHECK(o.text == "8/3\n");
    CHECK(sh("eval ubar --at l=2 t=3 u_l=5 u_t=7").text == "15/11\n");
}

TEST_CASE("eval at a non-generic point gives a structured error") {
    Out o = sh("eval z --at u_l=l --json");
    CHECK(o.code == 2);
    CHECK(o.text.find("\"error\": \"non-generic\"") != std::string::npos);
    CHECK(o.text.find("u_l = l") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(sh("").code == 2);
    CHECK(sh("verify nogroup").code == 2);
    CHECK(sh("verify tpsi --mode fuzzy").code == 2);
    CHECK(sh("verify tpsi --params 2 3").code == 2);
    CHECK(sh("verify tpsi --params 1 3 1/5").code == 2);
    CHECK(sh("eval z --at u_l").code == 2);
    CHECK(sh("--help").code == 0);
}

TEST_CASE("verify exit codes") {
    fs::path g = scratch("codes");
    CHECK(sh("verify tpsi --golden-dir " + g.string()).code == 0);
    CHECK(sh("verify lagrangian --golden-dir " + g.string()).code == 1);
    Out o = sh("verify involution --params 5 -2 1/3 --params 2 7 1/2 --golden-dir " + g.string());
    CHECK(o.code == 0);
    CHECK(o.text.find("l=2 t=7 nu=1/2") != std::string::npos);
}

TEST_CASE("json output is byte stable") {
    fs::path g = scratch("stable");
    std::string a = sh("verify apparent --json --jobs 1 --golden-dir " + g.string()).text;
    std::string b = sh("verify apparent --json --jobs 4 --golden-dir " + g.string()).text;
    CHECK(a == b);
    CHECK(a.find("\"seconds\"") == std::string::npos);
    CHECK(sh("verify apparent --json --timings --golden-dir " + g.string()).text.find("\"seconds\"") !=
          std::string::npos);
}

TEST_CASE("bless writes goldens and a drifted golden fails") {
    fs::path g = scratch("bless");
    CHECK(sh("verify basechange --bless --golden-dir " + g.string()).code == 0);
    REQUIRE(fs::exists(g / "verify-basechange.json"));
    REQUIRE(fs::exists(g / "eval" / "B.txt"));
    CHECK(sh("verify basechange --golden-dir " + g.string()).code == 0);
    {
        std::ofstream(g / "eval" / "B.txt") << "tampered\n";
    }
    CHECK(sh("verify basechange --golden-dir " + g.string()).code == 1);
}

TEST_CASE("report renders a stored run") {
    fs::path g = scratch("report");
    fs::path rp = g / "r.json";
    CHECK(sh("verify fixedlocus --report " + rp.string() + " --golden-dir " + g.string()).code == 1);
    Out md = sh("report --format markdown --input " + rp.string());
    CHECK(md.text.find("fixedlocus.stated") != std::string::npos);
    CHECK(sh("report --format markdown --input " + rp.string()).text == md.text);
    Out js = sh("report --format json --input " + rp.string());
    CHECK(js.text == slurp(rp));
    CHECK(sh("report --format yaml --input " + rp.string()).code == 2);
    CHECK(sh("report --input " + (g / "missing.json").string()).code == 2);
}

TEST_CASE("shipped goldens match") {
    Out o = sh("verify all");
    CHECK(o.text.find("golden mismatch") == std::string::npos);
}

}
