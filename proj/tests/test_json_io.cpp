#include <string>

#include "doctest.h"
#include "json.hpp"
#include "json_io.hpp"
#include "reference.hpp"

using nlohmann::json;
using qfq::Series;

TEST_CASE("univariate series text") {
    CHECK(qfq::render_series(qfq::macmahon(4), QFQ_FORMAT_TEXT) ==
          "1 + t + 3t^2 + 6t^3 + 13t^4\n");

    Series s(1, 2);
    s.add({0}, -1);
    s.add({1}, 2);
    CHECK(qfq::render_series(s, QFQ_FORMAT_TEXT) == "-1 + 2t\n");

    Series neg(1, 1);
    neg.add({1}, -1);
    CHECK(qfq::render_series(neg, QFQ_FORMAT_TEXT) == "-t\n");

    CHECK(qfq::render_series(Series(1, 3), QFQ_FORMAT_TEXT) == "0\n");
}

TEST_CASE("multivariate series text uses orbit notation when symmetric") {
    qfq::SignedSeriesReport rep = qfq::dt_quiver_series(1, 1);
    CHECK(qfq::render_series(rep.multivariate, QFQ_FORMAT_TEXT) ==
          "1 + t^(0,0,0,0,1)\n");
}

TEST_CASE("multivariate series text falls back to plain monomials") {
    Series z = qfq::colored_gf({5, 1, 1, 3}, 2, 1);
    CHECK(qfq::render_series(z, QFQ_FORMAT_TEXT) ==
          "1 + t0 + t0 t3 + 2 t0 t1\n");
}

TEST_CASE("series CSV") {
    CHECK(qfq::render_series(qfq::macmahon(2), QFQ_FORMAT_CSV) ==
          "degree,coefficient\n0,1\n1,1\n2,3\n");
    Series z = qfq::colored_gf({5, 1, 1, 3}, 2, 1);
    CHECK(qfq::render_series(z, QFQ_FORMAT_CSV) ==
          "e0,e1,e2,e3,e4,coefficient\n"
          "0,0,0,0,0,1\n"
          "1,0,0,0,0,1\n"
          "1,0,0,1,0,1\n"
          "1,1,0,0,0,2\n");
}

TEST_CASE("series JSON carries exponents and decimal coefficients") {
    std::string out = qfq::render_series(qfq::macmahon(2), QFQ_FORMAT_JSON);
    CHECK(out.back() == '\n');
    json j = json::parse(out);
    CHECK(j["variables"] == 1);
    CHECK(j["truncation"] == 2);
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["exponent"] == json::array({0}));
    CHECK(j["terms"][0]["coefficient"] == "1");
    CHECK(j["terms"][2]["exponent"] == json::array({2}));
    CHECK(j["terms"][2]["coefficient"] == "3");
    // key order is part of the contract
    CHECK(out.find("\"variables\"") < out.find("\"truncation\""));
    CHECK(out.find("\"truncation\"") < out.find("\"terms\""));
}

TEST_CASE("pp counts renders") {
    std::vector<long long> counts = {1, 1, 3};
    CHECK(qfq::render_pp_counts(counts, QFQ_FORMAT_TEXT) ==
          "0: 1\n1: 1\n2: 3\n");
    CHECK(qfq::render_pp_counts(counts, QFQ_FORMAT_CSV) ==
          "size,count\n0,1\n1,1\n2,3\n");
    json j = json::parse(qfq::render_pp_counts(counts, QFQ_FORMAT_JSON));
    CHECK(j["max_size"] == 2);
    CHECK(j["counts"] == json::array({1, 1, 3}));
}

TEST_CASE("quiver renders") {
    qfq::Quiver q = qfq::mckay_quiver({5, 1, 1, 3});
    std::string text = qfq::render_quiver(q, QFQ_FORMAT_TEXT);
    CHECK(text.substr(0, 12) == "vertices: 5\n");
    CHECK(text.find("x: 0 -> 1\n") != std::string::npos);
    CHECK(text.find("z: 4 -> 2\n") != std::string::npos);

    std::string csv = qfq::render_quiver(q, QFQ_FORMAT_CSV);
    CHECK(csv.substr(0, 20) == "source,target,label\n");
    CHECK(csv.find("0,3,z\n") != std::string::npos);

    json j = json::parse(qfq::render_quiver(q, QFQ_FORMAT_JSON));
    CHECK(j["vertices"] == 5);
    REQUIRE(j["arrows"].size() == 15);
    CHECK(j["arrows"][0] == json::array({0, 1, "x"}));
    CHECK(j["arrows"][2] == json::array({0, 3, "z"}));
}

TEST_CASE("count table renders") {
    qfq::CountTable t = qfq::table_from_series(qfq::multicolor_product(2, 1));
    std::string text = qfq::render_count_table(t, QFQ_FORMAT_TEXT);
    CHECK(text.substr(0, 16) == "(0,0,0,0,0): 1\n(");
    CHECK(text.find("(1,1,0,0,0): 3\n") != std::string::npos);

    std::string csv = qfq::render_count_table(t, QFQ_FORMAT_CSV);
    CHECK(csv.substr(0, 21) == "d0,d1,d2,d3,d4,count\n");
    CHECK(csv.find("1,1,0,0,0,3\n") != std::string::npos);

    json j = json::parse(qfq::render_count_table(t, QFQ_FORMAT_JSON));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 16);
    CHECK(j[0]["dimension"] == json::array({0, 0, 0, 0, 0}));
    CHECK(j[0]["count"] == 1);
}

TEST_CASE("report text lists the univariate series and anomalies") {
    qfq::SignedSeriesReport rep = qfq::dt_quiver_series(5, 2);
    CHECK(qfq::render_report(rep, false, QFQ_FORMAT_TEXT) ==
          "univariate: 1 + 5t + 5t^2 + 20t^3 - 210t^4 + 89t^5\n"
          "anomaly: degree 5 orbit t^(0,0,2,1,2): enumerated 4, published -4\n"
          "anomaly: degree 5 orbit t^(0,0,2,2,1): enumerated 3, published -3\n"
          "anomaly: degree 5 orbit t^(0,2,1,1,1): enumerated -20, published "
          "20\n"
          "anomaly: degree 5 univariate coefficient: enumerated 89, published "
          "-131\n");

    std::string orbit_text = qfq::render_report(rep, true, QFQ_FORMAT_TEXT);
    CHECK(orbit_text.find("multivariate: ") != std::string::npos);
    CHECK(orbit_text.find("t^(0,1,2,1,1)") != std::string::npos);
}

TEST_CASE("report CSV switches with the orbit view") {
    qfq::SignedSeriesReport rep = qfq::dt_quiver_series(2, 1);
    CHECK(qfq::render_report(rep, false, QFQ_FORMAT_CSV) ==
          "degree,coefficient\n0,1\n1,5\n2,5\n");
    CHECK(qfq::render_report(rep, true, QFQ_FORMAT_CSV) ==
          "rep0,rep1,rep2,rep3,rep4,coefficient,orbit_size\n"
          "0,0,0,0,0,1,1\n"
          "0,0,0,0,1,1,5\n"
          "0,0,0,1,1,3,5\n"
          "0,0,1,0,1,-2,5\n");
}

TEST_CASE("report JSON carries all four sections") {
    qfq::SignedSeriesReport rep = qfq::dt_quiver_series(5, 2);
    json j = json::parse(qfq::render_report(rep, true, QFQ_FORMAT_JSON));
    CHECK(j["multivariate"]["variables"] == 5);
    CHECK(j["univariate"]["variables"] == 1);
    CHECK(j["orbits"].size() == 27);
    CHECK(j["orbits"][1]["rep"] == json::array({0, 0, 0, 0, 1}));
    CHECK(j["orbits"][1]["coefficient"] == "1");
    CHECK(j["orbits"][1]["orbit_size"] == 5);
    REQUIRE(j["anomalies"].size() == 4);
    CHECK(j["anomalies"][3] ==
          "degree 5 univariate coefficient: enumerated 89, published -131");
}

TEST_CASE("euler renders") {
    qfq::EulerStrata e = qfq::stratum_euler_chars(4);
    CHECK(qfq::render_euler(e, QFQ_FORMAT_TEXT) ==
          "chi(X_(0)) = 10\n"
          "chi(X_(1)) = -10\n"
          "chi(X_(2)) = 5\n"
          "chi(X_(3)) = -1\n"
          "weighted = -10\n"
          "total = 4\n");
    CHECK(qfq::render_euler(e, QFQ_FORMAT_CSV) ==
          "stratum,value\n"
          "X_(0),10\n"
          "X_(1),-10\n"
          "X_(2),5\n"
          "X_(3),-1\n"
          "weighted,-10\n"
          "total,4\n");
    json j = json::parse(qfq::render_euler(e, QFQ_FORMAT_JSON));
    CHECK(j["ambient"] == 4);
    CHECK(j["chis"] == json::array({10, -10, 5, -1}));
    CHECK(j["weighted"] == -10);
    CHECK(j["total"] == 4);
}

TEST_CASE("check renders") {
    qfq::CheckReport rep = qfq::run_check(2, 5, 1);
    std::string text = qfq::render_check(rep, QFQ_FORMAT_TEXT);
    CHECK(text.find("macmahon_vs_enumeration: pass (") == 0);
    CHECK(text.find("published_univariate_deg5: skipped (requires truncation "
                    ">= 5)\n") != std::string::npos);
    const std::string tail =
        "result: ok (19 checks, 0 failed, 1 anomalies, 4 skipped)\n";
    REQUIRE(text.size() >= tail.size());
    CHECK(text.substr(text.size() - tail.size()) == tail);

    std::string csv = qfq::render_check(rep, QFQ_FORMAT_CSV);
    CHECK(csv.substr(0, 19) == "name,status,detail\n");
    // details with commas are quoted
    CHECK(csv.find("euler_x0_published,paper_anomaly,\"computed chi(X_(0)) = "
                   "10, published proof text states 0; the tenth power in the "
                   "quintic assembly requires 10\"\n") != std::string::npos);

    json j = json::parse(qfq::render_check(rep, QFQ_FORMAT_JSON));
    CHECK(j["truncation"] == 2);
    CHECK(j["oracle_ceiling"] == 5);
    CHECK(j["ok"] == true);
    REQUIRE(j["entries"].size() == 19);
    CHECK(j["entries"][0]["name"] == "macmahon_vs_enumeration");
    CHECK(j["entries"][0]["status"] == "pass");
}

TEST_CASE("ext chain renders") {
    qfq::ExtChain chain = qfq::ext_chain();
    std::string text = qfq::render_ext_chain(chain, QFQ_FORMAT_TEXT);
    CHECK(text.find("global exponent matrix (mod 5):\n  0 1 4 1 4\n") == 0);
    CHECK(text.find("local exponent matrix at base 0 (mod 5):\n  0 3 4 3\n") !=
          std::string::npos);
    CHECK(text.find("isomorphism: vertex map [0,2,4,1,3], labels x->x y->z "
                    "z->y\n") != std::string::npos);

    CHECK(qfq::render_ext_chain(chain, QFQ_FORMAT_CSV)
              .find("source,target,label\n0,3,x\n0,4,y\n0,3,z\n") == 0);

    json j = json::parse(qfq::render_ext_chain(chain, QFQ_FORMAT_JSON));
    CHECK(j["global"]["modulus"] == 5);
    CHECK(j["local"]["exponents"][0] == json::array({0, 3, 4, 3}));
    CHECK(j["ext_quiver"]["vertices"] == 5);
    CHECK(j["mckay"]["arrows"].size() == 15);
    CHECK(j["isomorphism"]["vertex_map"] == json::array({0, 2, 4, 1, 3}));
    CHECK(j["isomorphism"]["label_map"]["y"] == "z");
}

TEST_CASE("renders are byte-deterministic") {
    qfq::SignedSeriesReport rep = qfq::dt_quiver_series(3, 2);
    for (qfq_format fmt : {QFQ_FORMAT_TEXT, QFQ_FORMAT_JSON, QFQ_FORMAT_CSV}) {
        std::string a = qfq::render_report(rep, true, fmt);
        std::string b =
            qfq::render_report(qfq::dt_quiver_series(3, 4), true, fmt);
        CHECK(a == b);
        CHECK(!a.empty());
        CHECK(a.back() == '\n');
    }
}
