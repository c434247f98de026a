#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frieze/qint.hpp"
#include "support/generators.hpp"

using namespace frieze;
using testsupport::random_quadint;
using testsupport::random_quadrat;

TEST_CASE("field tag validation") {
    CHECK_THROWS_AS(FieldTag(0), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag(1), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag(5), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag(-4), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag(-12), std::invalid_argument);
    CHECK_THROWS_AS(FieldTag(-18), std::invalid_argument);

    FieldTag g(-1);
    CHECK(g.omega_kind() == OmegaKind::Sqrt);
    CHECK(g.disc() == -4);

    FieldTag e(-3);
    CHECK(e.omega_kind() == OmegaKind::HalfIntegral);
    CHECK(e.disc() == -3);

    FieldTag t(-13);
    CHECK(t.omega_kind() == OmegaKind::Sqrt);
    CHECK(t.disc() == -52);
    CHECK(t.omega_trace() == 0);
    CHECK(t.omega_norm() == 13);

    FieldTag s(-7);
    CHECK(s.omega_trace() == 1);
    CHECK(s.omega_norm() == 2);
}

TEST_CASE("gaussian product (1+i)(1-i) = 2") {
    FieldTag t(-1);
    QuadRat z(t, Rat(1), Rat(1));
    CHECK(z * z.conj() == QuadRat::from_rational(t, 2));
    CHECK(abs_sq(z) == 2);
}

TEST_CASE("omega times conjugate") {
    FieldTag t11(-11);
    QuadRat w = QuadRat::omega(t11);
    CHECK(w * w.conj() == QuadRat::from_rational(t11, 3));

    FieldTag t7(-7);
    CHECK(abs_sq(QuadRat::omega(t7)) == 2);
}

TEST_CASE("arithmetic identities on random elements") {
    std::mt19937_64 rng(20240811);
    FieldTag tags[] = {FieldTag(-1), FieldTag(-3), FieldTag(-13), FieldTag(-7), FieldTag(-10)};
    for (int iter = 0; iter < 200; ++iter) {
        FieldTag tag = tags[iter % 5];
        QuadRat a = random_quadrat(rng, tag), b = random_quadrat(rng, tag),
                c = random_quadrat(rng, tag);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == QuadRat::zero(tag));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK(abs_sq(a * b) == abs_sq(a) * abs_sq(b));
        if (!a.is_zero()) CHECK(a / a == QuadRat::one(tag));
        CHECK(abs_sq(a) >= 0);
        CHECK((abs_sq(a) == 0) == a.is_zero());
    }
}

TEST_CASE("division by zero") {
    FieldTag t(-5);
    CHECK_THROWS_AS(QuadRat::one(t) / QuadRat::zero(t), std::domain_error);
}

TEST_CASE("tag mismatch") {
    QuadRat a = QuadRat::one(FieldTag(-5));
    QuadRat b = QuadRat::one(FieldTag(-6));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
}

TEST_CASE("integrality tests") {
    FieldTag t11(-11);
    auto z = is_integral(QuadRat(t11, Rat(1, 2), Rat(1, 2)));  // (1+sqrt(-11))/2
    REQUIRE(z.has_value());
    CHECK(z->a() == 0);
    CHECK(z->b() == 1);

    FieldTag t13(-13);
    CHECK_FALSE(is_integral(QuadRat(t13, Rat(-2, 47), Rat(5, 47))).has_value());

    FieldTag t5(-5);
    auto w = is_integral(QuadRat(t5, Rat(3), Rat(-2)));
    REQUIRE(w.has_value());
    CHECK(w->a() == 3);
    CHECK(w->b() == -2);
}

TEST_CASE("integral closure under ring operations") {
    std::mt19937_64 rng(7);
    FieldTag tags[] = {FieldTag(-2), FieldTag(-7), FieldTag(-15)};
    for (int iter = 0; iter < 100; ++iter) {
        FieldTag tag = tags[iter % 3];
        QuadInt z = random_quadint(rng, tag), w = random_quadint(rng, tag);
        CHECK(is_integral(z.embed() * w.embed()).has_value());
        CHECK(is_integral(z.embed() + w.embed()).has_value());
        // embedding is a ring homomorphism
        CHECK((z * w).embed() == z.embed() * w.embed());
        CHECK((z + w).embed() == z.embed() + w.embed());
        CHECK(Rat(z.norm()) == abs_sq(z.embed()));
        CHECK(z.conj().embed() == z.embed().conj());
    }
}

TEST_CASE("abs_sq of -34 + 9*sqrt(-13) is 47^2") {
    FieldTag t(-13);
    CHECK(abs_sq(QuadRat(t, Rat(-34), Rat(9))) == 2209);
}

namespace {

// independent lattice scan: plain integer arithmetic, no QuadInt::norm
std::vector<std::pair<long, long>> brute_small(long d, long bound_sq) {
    std::vector<std::pair<long, long>> out;
    bool half = ((d % 4) + 4) % 4 == 1;
    for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b) {
            long n = half ? a * a + a * b + b * b * (1 - d) / 4 : a * a - d * b * b;
            if (n < bound_sq) out.emplace_back(a, b);
        }
    return out;
}

}  // namespace

TEST_CASE("small elements match a brute-force lattice scan") {
    for (long d : {-1L, -2L, -3L, -7L, -11L, -5L, -15L}) {
        FieldTag tag(d);
        auto got = small_elements(tag, Rat(4));
        auto expected = brute_small(d, 4);
        REQUIRE(got.size() == expected.size());
        for (const auto& z : got) {
            bool found = false;
            for (auto [a, b] : expected)
                if (z.a() == a && z.b() == b) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("small elements of O_-5 below 4 are 0 and +-1") {
    auto got = small_elements(FieldTag(-5), Rat(4));
    REQUIRE(got.size() == 3);
    CHECK(got[0] == QuadInt(FieldTag(-5), 0, 0));
    CHECK(got[1] == QuadInt(FieldTag(-5), -1, 0));
    CHECK(got[2] == QuadInt(FieldTag(-5), 1, 0));
}

TEST_CASE("gaussian elements below 4") {
    auto got = small_elements(FieldTag(-1), Rat(4));
    CHECK(got.size() == 9);  // 0, 4 units, 1+-i and -1+-i
}

TEST_CASE("eisenstein elements below 4") {
    auto got = small_elements(FieldTag(-3), Rat(4));
    CHECK(got.size() == 13);  // 0, 6 units, 6 elements of norm 3
}

TEST_CASE("only 0, +-1 below 4 outside the exceptional rings") {
    for (long d = -200; d <= -2; ++d) {
        if (!is_square_free(d)) continue;
        if (d == -1 || d == -2 || d == -3 || d == -7 || d == -11) continue;
        auto got = small_elements(FieldTag(d), Rat(4));
        CHECK(got.size() == 3);
    }
}

TEST_CASE("canonical ordering is by norm then coordinates") {
    auto got = small_elements(FieldTag(-2), Rat(10));
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(cmp_canonical(got[i - 1], got[i]) < 0);
}

TEST_CASE("unit groups") {
    CHECK(unit_group(FieldTag(-1)).size() == 4);
    CHECK(unit_group(FieldTag(-3)).size() == 6);
    CHECK(unit_group(FieldTag(-7)).size() == 2);
    for (const auto& u : unit_group(FieldTag(-3))) CHECK(u.norm() == 1);
}

TEST_CASE("textual forms") {
    FieldTag t(-11);
    CHECK(QuadInt(t, 0, 1).str() == "w");
    CHECK(QuadInt(t, 1, -2).str() == "1-2*w");
    CHECK(QuadInt(t, -3, 0).str() == "-3");
    CHECK(QuadRat(t, Rat(1, 2), Rat(-1, 2)).str() == "1/2-1/2*sqrt(-11)");
    CHECK(display_entry(QuadRat::omega(t).conj()) == "wbar");
}
