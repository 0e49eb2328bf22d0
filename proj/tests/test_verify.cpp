#include <doctest.h>

#include "ellcon/evaluate.hpp"
#include "ellcon/verify.hpp"

using namespace ellcon;
using namespace ellcon::verify;

TEST_SUITE("cli-harness") {

TEST_CASE("groups") {
    CHECK(is_group("all"));
    CHECK(is_group("fibers"));
    CHECK_FALSE(is_group("nope"));
    CHECK(group_names().size() == 11);
    CHECK(check_ids("lagrangian") == std::vector<std::string>{"lagrangian.stated", "lagrangian.corrected"});
}

TEST_CASE("reports are identical for any number of jobs") {
    Config a, b;
    a.jobs = 1;
    b.jobs = 6;
    auto ra = run("apparent", a), rb = run("apparent", b);
    CHECK(report_json("apparent", a, ra, false).dump() == report_json("apparent", b, rb, false).dump());
}

TEST_CASE("report schema and exit code") {
    Config c;
    auto rs = run("lagrangian", c);
    Json j = report_json("lagrangian", c, rs, false);
    CHECK(j["schema"] == "ellcon-report/1");
    CHECK(j["exit"] == 1);
    CHECK(j["summary"]["checks"] == 6);
    CHECK(j["summary"]["failed"] == 3);
    CHECK_FALSE(j["records"][0].contains("seconds"));
    CHECK(report_json("lagrangian", c, rs, true)["records"][0].contains("seconds"));
    std::string md = report_markdown(j);
    CHECK(md.find("lagrangian.corrected") != std::string::npos);
    CHECK(md == report_markdown(j));
}

TEST_CASE("exact mode runs the identities symbolically") {
    Config c;
    c.mode = Mode::exact;
    auto rs = run("tpsi", c);
    for (auto& r : rs)
        if (r.id == "tpsi.derived") {
            CHECK(r.mode == "exact-symbolic");
            CHECK(r.pass);
        }
}

TEST_CASE("sampled mode agrees with exact on true identities") {
    Config c;
    c.mode = Mode::sampled;
    c.seed = 17;
    CHECK(all_pass(run("involution", c)));
}

TEST_CASE("user parameters replace the built-in triples") {
    Config c;
    c.params = {Params::at(5, -2, Rat(1, 3))};
    auto rs = run_checks({"involution.t_product"}, c);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].params == "l=5 t=-2 nu=1/3");
    CHECK(rs[0].pass);
}

TEST_CASE("eval objects") {
    CHECK(evaluate("z", {"u_l=5", "l=2"}).text == "8/3");
    CHECK(evaluate("ubar", {"l=2", "t=3", "u_l=5", "u_t=7"}).text == "15/11");
    auto r = evaluate("z", {"u_l=l"});
    CHECK_FALSE(r.ok);
    CHECK(r.error == "non-generic");
    CHECK(r.guards == std::vector<std::string>{"u_l = l"});
    CHECK(evaluate("nothing", {}).error == "usage");
    CHECK(evaluate("z", {"q=1"}).error == "usage");
    for (auto& o : eval_objects()) {
        CAPTURE(o);
        CHECK(evaluate(o, {"l=2", "t=3", "nu=1/5", "u_l=5", "u_t=7"}).ok);
    }
}

}
