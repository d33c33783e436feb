#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "tropdiff/capi.h"

TEST_CASE("polynomial handles") {
    td_poly* p = nullptr;
    REQUIRE(td_poly_parse("t*x(1,1) + t^2*x(1,3) + t^3", 32, &p) == TD_OK);
    CHECK(td_poly_n_vars(p) == 1);
    CHECK(std::string(td_poly_format(p)) == "t^3 + t*x(1,1) + t^2*x(1,3)");
    const char* trop = nullptr;
    REQUIRE(td_poly_trop_format(p, &trop) == TD_OK);
    CHECK(std::string(trop) == "min{3, 1+x11, 2+x13}");
    td_poly_free(p);
}

TEST_CASE("error codes") {
    td_poly* p = nullptr;
    CHECK(td_poly_parse("t +", 8, &p) == TD_ERR_SYNTAX);
    CHECK(std::strlen(td_last_error()) > 0);
    CHECK(td_poly_parse("x(0,1)", 8, &p) == TD_ERR_VARIABLE_INDEX);

    td_report* r = nullptr;
    CHECK(td_run_denef("2", 5, &r) == TD_ERR_NATURAL_POLE);
    CHECK(td_run_qab_audit(nullptr, 0, 8, 4, 3, 0, 1, &r) == TD_ERR_BAD_PAIR);
}

TEST_CASE("natset handles") {
    td_natset* s = nullptr;
    REQUIRE(td_natset_parse("{0,1,2,3,7,8}", &s) == TD_OK);
    CHECK(td_natset_was_canonical(s) == 1);
    int64_t v = 0;
    REQUIRE(td_natset_val(s, 4, &v) == TD_OK);
    CHECK(v == 3);
    REQUIRE(td_natset_val(s, 9, &v) == TD_OK);
    CHECK(v == -1);
    CHECK(td_natset_contains(s, 7) == 1);
    CHECK(td_natset_contains(s, 5) == 0);
    td_natset_free(s);

    REQUIRE(td_natset_parse("{}+per(0;6;0,2,4)", &s) == TD_OK);
    CHECK(td_natset_was_canonical(s) == 0);
    CHECK(std::string(td_natset_format(s)) == "{}+per(0;2;0)");
    td_natset_free(s);
}

TEST_CASE("reports carry text and JSON") {
    td_report* r = nullptr;
    const uint32_t js[2] = {4, 9};
    REQUIRE(td_run_val("{0,1,2,3,7,8}", js, 2, &r) == TD_OK);
    const std::string text = td_report_text(r);
    const std::string json = td_report_json(r);
    CHECK(text.find("Val_S(4) = 3") != std::string::npos);
    CHECK(json.find("\"val\": \"3\"") != std::string::npos);
    CHECK(td_report_status(r) == 0);
    td_report_free(r);
}

TEST_CASE("command round trip through the C surface") {
    td_report* r = nullptr;
    const char* gens[2] = {"x(1,0)+x(1,1)+x(1,2)", "x(1,0)-x(1,3)"};
    REQUIRE(td_run_solve(gens, 2, 24, 9, 3, 3, &r) == TD_OK);
    const std::string text = td_report_text(r);
    CHECK(text.find("solutions (5):") != std::string::npos);
    td_report_free(r);

    const char* sets[1] = {"{2,3}"};
    REQUIRE(td_run_initial("t*x(1,1)+t^2*x(1,3)+t^3", 32, sets, 1, 0, &r) == TD_OK);
    CHECK(std::string(td_report_text(r)).find("x(1,1) + x(1,3)") != std::string::npos);
    td_report_free(r);
}

TEST_CASE("paper examples pass through the C surface") {
    td_report* r = nullptr;
    REQUIRE(td_run_paper_examples(&r) == TD_OK);
    CHECK(td_report_status(r) == 0);
    td_report_free(r);
}
