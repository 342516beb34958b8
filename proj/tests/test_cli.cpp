#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "pf/cli.hpp"
#include "pf/json_io.hpp"

using namespace pf;

TEST_CASE("hilbert subcommand") {
    CliResult r = run_cli({"hilbert", "--q", "3", "--a", "pi", "--b", "pi"});
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["value"] == -1);
    r = run_cli({"hilbert", "--q", "5", "--a", "pi", "--b", "pi"});
    CHECK(json::parse(r.output)["value"] == 1);
}

TEST_CASE("distinguish subcommand") {
    CliResult r = run_cli({"distinguish", "--q", "3", "--d", "1", "--m", "1", "--e", "1",
                           "--f", "1", "--central-sign", "+1"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["totalDim"] == 4);
    CHECK(j["case"] == "I");
    CHECK(j["tauSplitOrbitCount"] == 1);
}

TEST_CASE("classify subcommand and exit codes") {
    CliResult r = run_cli({"classify", "--q", "3", "--m", "2", "--disc", "-1", "--hasse", "-1"});
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("NotRealizable") != std::string::npos);
    r = run_cli({"classify", "--q", "3", "--m", "4", "--disc", "1", "--hasse", "-1"});
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.output)["splitType"] == "notQuasisplit");
    // parameter validation happens before dispatch
    r = run_cli({"distinguish", "--q", "3", "--d", "4", "--m", "1", "--e", "3", "--f", "1",
                 "--central-sign", "+1"});
    CHECK(r.exit_code == 1);  // p | e
    r = run_cli({"distinguish", "--q", "3", "--d", "5", "--m", "1", "--e", "1", "--f", "2",
                 "--central-sign", "+1"});
    CHECK(r.exit_code == 1);  // t = 2 does not divide d = 5
    r = run_cli({"distinguish", "--q", "3", "--d", "4", "--m", "1", "--e", "2", "--f", "1",
                 "--central-sign", "+1"});
    CHECK(r.exit_code == 1);  // d/t = 2 is not a power of p = 3
}

TEST_CASE("canonical and norm-group subcommands") {
    CliResult r = run_cli({"canonical", "--q", "3", "--entries", "1:u,1:1,0:1"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["jordanType"] == json::parse(R"([{"a":1,"m":2,"eps":"eps0"},{"a":0,"m":1,"eps":"1"}])"));
    r = run_cli({"norm-group", "--q", "3", "--e", "2", "--f", "1"});
    REQUIRE(r.exit_code == 0);
    j = json::parse(r.output);
    CHECK(j["order"] == 2);
    NormSubgroup g = normsubgroup_from_json(j);
    CHECK(g.contains(SquareClass::u_pi()));
}

TEST_CASE("verify-lemmas and finite-check exit status") {
    CliResult r = run_cli({"verify-lemmas", "--grid", "small"});
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["allPass"] == true);
    r = run_cli({"finite-check", "--q", "3"});
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["allPass"] == true);
}

TEST_CASE("json round trips") {
    PadicScalar s = PadicScalar::from_unit(3, -1, 2, 12);
    json js = to_json(s);
    CHECK(js["val"] == -1);
    CHECK(js["unit"] == "2");
    PadicScalar s2 = scalar_from_json(js);
    CHECK(s2.eq(s));
    CHECK(s2.valuation() == -1);

    PadicMatrix m = j_matrix(5, 3);
    PadicMatrix m2 = matrix_from_json(to_json(m));
    CHECK((m - m2).is_zero_to(10));

    DiagonalForm f{ResidueField(3), {{0, UnitClass::nonsquare}, {1, UnitClass::square}}};
    json jf = to_json(f);
    DiagonalForm f2 = form_from_json(jf);
    CHECK(invariants(f) == invariants(f2));
    CHECK(jf == json::parse(R"({"q":3,"entries":[{"val":0,"unit":"u"},{"val":1,"unit":"1"}]})"));

    JordanType jt{{{1, 2, UnitClass::nonsquare}, {0, 1, UnitClass::square}}};
    CHECK(jordan_from_json(to_json(jt)) == jt);
}

TEST_CASE("help and table format") {
    CliResult r = run_cli({"--help"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("hilbert") != std::string::npos);
    r = run_cli({"hilbert", "--q", "3", "--a", "pi", "--b", "pi", "--format", "table"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("value: -1") != std::string::npos);
    r = run_cli({"finite-check", "--q", "3", "--format", "table"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("allPass: true") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run_cli({"hilbert", "--q", "3", "--a", "bogus", "--b", "1"}).exit_code == 1);
    CHECK(run_cli({"nonsense"}).exit_code == 1);
    CHECK(run_cli({"norm-group", "--q", "3", "--e", "3", "--f", "1"}).exit_code == 1);  // p | e
    CHECK(run_cli({"finite-check", "--q", "25"}).exit_code == 1);
}

TEST_CASE("FORMS_PRECISION env override") {
    setenv("FORMS_PRECISION", "8", 1);
    CliResult r = run_cli({"embed", "--p", "3", "--e", "1", "--f", "2", "--emit-matrices"});
    unsetenv("FORMS_PRECISION");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    CHECK(j["persymmetric"] == true);
    CHECK(j["zeta"][0][0]["prec"] <= 8);
}
