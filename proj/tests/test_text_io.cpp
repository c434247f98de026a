#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frieze/text_io.hpp"
#include "support/generators.hpp"

using namespace frieze;
using testsupport::random_quadrat;

TEST_CASE("rational parsing") {
    CHECK(parse_rat("5") == Rat(5));
    CHECK(parse_rat("-2/47") == Rat(-2, 47));
    CHECK(parse_rat(" 6/4 ") == Rat(3, 2));
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("element parsing") {
    FieldTag t(-13);
    CHECK(parse_quadrat("-2/47+5/47*sqrt(-13)", t) == QuadRat(t, Rat(-2, 47), Rat(5, 47)));
    CHECK(parse_quadrat("3", t) == QuadRat::from_rational(t, 3));
    CHECK(parse_quadrat("-sqrt(-13)", t) == QuadRat(t, Rat(0), Rat(-1)));
    CHECK(parse_quadrat("w", t) == QuadRat::omega(t));
    CHECK_THROWS_AS(parse_quadrat("sqrt(-11)", t), std::invalid_argument);

    FieldTag h(-7);
    CHECK(parse_quadrat("w", h) == QuadRat::omega(h));
    CHECK(parse_quadrat("wbar", h) == QuadRat::omega(h).conj());
    CHECK(parse_quadrat("1-2*w", h) == QuadRat::one(h) - QuadRat::from_rational(h, 2) * QuadRat::omega(h));

    CHECK(parse_quadint("6-1*w", t) == QuadInt(t, 6, -1));
    CHECK_THROWS_AS(parse_quadint("1/2", t), std::invalid_argument);
}

TEST_CASE("parse of printed forms round-trips") {
    std::mt19937_64 rng(3);
    FieldTag tags[] = {FieldTag(-1), FieldTag(-7), FieldTag(-13)};
    for (int iter = 0; iter < 100; ++iter) {
        FieldTag tag = tags[iter % 3];
        QuadRat z = random_quadrat(rng, tag);
        CHECK(parse_quadrat(z.str(), tag) == z);
        CHECK(parse_quadrat(display_entry(z), tag) == z);
    }
}

TEST_CASE("cycle parsing") {
    FieldTag t(-2);
    QuiddityCycle c = parse_cycle("w,wbar,w,wbar", t);
    CHECK(c.size() == 4);
    CHECK(is_quiddity_cycle(c));
}

TEST_CASE("element JSON round trip") {
    FieldTag t(-11);
    QuadInt z(t, -34, 9);
    CHECK(quadint_from_json(json_of(z), t) == z);
    QuadRat q(t, Rat(1, 2), Rat(-5, 3));
    CHECK(quadrat_from_json(json_of(q), t) == q);
}

TEST_CASE("cycle JSON round trip") {
    FieldTag t(-11);
    QuadRat w = QuadRat::omega(t);
    QuiddityCycle c(t, {w, w.conj(), w, w.conj(), w, w.conj()});
    CHECK(cycle_from_json(json_of_cycle(c)) == c);

    // non-integral entries fall back to the sqrt basis
    FieldTag z = Ring::integers().tag();
    QuiddityCycle r(z, {QuadRat::from_rational(z, 4), QuadRat::from_rational(z, Rat(1, 2)),
                        QuadRat::from_rational(z, 4), QuadRat::from_rational(z, Rat(1, 2))});
    CHECK(cycle_from_json(json_of_cycle(r)) == r);
}

TEST_CASE("frieze JSON round trip") {
    FriezePattern f = from_quiddity(make_integer_cycle({-1, -2, -1, -2}), Ring::integers());
    Classification cls = classify(f);
    Json j = json_of_frieze(f, cls);
    auto [f2, cls2] = frieze_from_json(j);
    CHECK(f2 == f);
    CHECK(cls2.cls == cls.cls);
}

TEST_CASE("census JSON and CSV") {
    SearchConfig cfg{Ring::quadratic(FieldTag(-2)), 1, Rat(16), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    Json j = json_of_census(census);
    CHECK(j.at("friezes").size() == census.friezes.size());
    for (const auto& jf : j.at("friezes")) {
        auto [f, cls] = frieze_from_json(jf);
        CHECK(validate(f).unimodular);
    }

    std::string csv = census_csv(census);
    CHECK(csv.find("d,height,quiddity,class") == 0);
    CHECK(csv.find("-2,1,w wbar w wbar,NonIntegral") != std::string::npos);
}

TEST_CASE("reduction trace JSON") {
    ReductionTrace trace = reduce_to_canonical(make_integer_cycle({-1, -2, -1, -2}));
    Json j = json_of_trace(trace);
    CHECK(j.at("status") == "terminal");
    CHECK(j.at("steps").size() == trace.steps.size());
    CHECK(j.at("sign_flips") == 2);
}

TEST_CASE("unit certificate JSON") {
    FieldTag t(-13);
    UnitSearchResult res = find_infinite_unit(QuadRat(t, Rat(-2, 47), Rat(5, 47)), t);
    REQUIRE(res.status == UnitSearchResult::Status::Found);
    Json j = json_of_unit_result(res);
    CHECK(j.at("status") == "found");
    CHECK(j.at("k") == 3);
    CHECK(j.at("unit_norm") == "10779215329");
    CHECK(j.at("unit") == Json::array({"68102", "21735"}));
}
