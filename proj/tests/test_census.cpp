#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>

#include "frieze/census.hpp"
#include "frieze/text_io.hpp"
#include "frieze/triangulate.hpp"

using namespace frieze;

namespace {

std::set<std::string> quiddity_keys(const CensusResult& census) {
    std::set<std::string> keys;
    for (const auto& rec : census.friezes) keys.insert(extract_quiddity(rec.pattern).str());
    return keys;
}

// Independent oracle: try every tuple of nonzero small elements as a cycle,
// keep those whose eta-product is -id and whose frieze has no interior zero.
// No pruning and no forced closure, just the definitions; prefix products
// are shared across the enumeration.
std::set<std::string> brute_force_census(Ring ring, long height, long bound_sq) {
    FieldTag tag = ring.tag();
    std::vector<QuadRat> candidates;
    for (const QuadInt& z : small_elements(tag, Rat(bound_sq + 1))) {
        if (z.is_zero()) continue;
        if (ring.is_integers() && z.b() != 0) continue;
        candidates.push_back(z.embed());
    }
    std::vector<Mat2> etas;
    for (const auto& c : candidates) etas.push_back(eta(c));

    const std::size_t m = static_cast<std::size_t>(height + 3);
    const Mat2 neg_id = Mat2::neg_identity(tag);
    std::set<std::string> found;
    std::vector<QuadRat> entries(m, QuadRat::zero(tag));

    std::function<void(std::size_t, const Mat2&)> walk = [&](std::size_t depth, const Mat2& prod) {
        if (depth == m) {
            if (prod == neg_id) {
                QuiddityCycle cycle(tag, entries);
                FriezePattern f = from_quiddity(cycle, ring);
                if (validate(f).nonzero) found.insert(cycle.str());
            }
            return;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            entries[depth] = candidates[i];
            walk(depth + 1, prod * etas[i]);
        }
    };
    walk(0, Mat2::identity(tag));
    return found;
}

}  // namespace

TEST_CASE("search engine agrees with the definition-level brute force") {
    // O_-5 at height 1: the four divisor-pair cycles of 2
    Ring r5 = Ring::quadratic(FieldTag(-5));
    SearchConfig cfg5{r5, 1, Rat(16), Positivity::All, 1};
    CHECK(quiddity_keys(enumerate_friezes(cfg5)) == brute_force_census(r5, 1, 16));

    // O_-2 at height 1 picks up the non-integral cycles as well
    Ring r2 = Ring::quadratic(FieldTag(-2));
    SearchConfig cfg2{r2, 1, Rat(16), Positivity::All, 1};
    CHECK(quiddity_keys(enumerate_friezes(cfg2)) == brute_force_census(r2, 1, 16));

    // integers at height 2
    SearchConfig cfgz{Ring::integers(), 2, Rat(9), Positivity::All, 1};
    CHECK(quiddity_keys(enumerate_friezes(cfgz)) == brute_force_census(Ring::integers(), 2, 9));
}

TEST_CASE("height-1 census over Z") {
    SearchConfig cfg{Ring::integers(), 1, Rat(4), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    CHECK(census.friezes.size() == 4);
    CHECK(census.complete);
    auto keys = quiddity_keys(census);
    CHECK(keys.count("(1, 2, 1, 2)"));
    CHECK(keys.count("(2, 1, 2, 1)"));
    CHECK(keys.count("(-1, -2, -1, -2)"));
    CHECK(keys.count("(-2, -1, -2, -1)"));
    auto counts = count_by_class(census);
    CHECK(counts[FriezeClass::ConwayCoxeter] == 2);
    CHECK(counts[FriezeClass::TwistedConwayCoxeter] == 2);
}

TEST_CASE("height-2 positive census equals the pentagon triangulation image") {
    SearchConfig cfg{Ring::integers(), 2, Rat(9), Positivity::PositiveOnly, 1};
    CensusResult census = enumerate_friezes(cfg);
    CHECK(census.friezes.size() == 5);

    std::set<std::string> oracle;
    for (const auto& t : enumerate_triangulations(5))
        oracle.insert(quiddity_of_triangulation(t).str());
    CHECK(quiddity_keys(census) == oracle);

    auto counts = count_by_class(census);
    CHECK(counts[FriezeClass::ConwayCoxeter] == 5);
    CHECK(counts.count(FriezeClass::TwistedConwayCoxeter) == 0);  // even height
}

TEST_CASE("census over O_-5 at height 1") {
    SearchConfig cfg{Ring::quadratic(FieldTag(-5)), 1, Rat(16), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    CHECK(census.friezes.size() == 4);
    auto keys = quiddity_keys(census);
    CHECK(keys.count("(1, 2, 1, 2)"));
    CHECK(keys.count("(2, 1, 2, 1)"));
    CHECK(keys.count("(-1, -2, -1, -2)"));
    CHECK(keys.count("(-2, -1, -2, -1)"));
    for (const auto& rec : census.friezes) {
        bool integral = rec.cls.cls == FriezeClass::ConwayCoxeter ||
                        rec.cls.cls == FriezeClass::TwistedConwayCoxeter;
        CHECK(integral);
    }
}

TEST_CASE("census over O_-13 at height 1 stays integral") {
    SearchConfig cfg{Ring::quadratic(FieldTag(-13)), 1, Rat(16), Positivity::All, 1};
    auto counts = count_by_class(enumerate_friezes(cfg));
    CHECK(counts[FriezeClass::ConwayCoxeter] == 2);
    CHECK(counts[FriezeClass::TwistedConwayCoxeter] == 2);
    CHECK(counts.count(FriezeClass::NonIntegral) == 0);
}

TEST_CASE("census over O_-2 includes the known non-integral cycle") {
    SearchConfig cfg{Ring::quadratic(FieldTag(-2)), 1, Rat(16), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    FieldTag t(-2);
    QuadRat w = QuadRat::omega(t);
    QuiddityCycle fig(t, {w, w.conj(), w, w.conj()});
    CHECK(quiddity_keys(census).count(fig.str()) == 1);
    CHECK_FALSE(census.complete);
}

TEST_CASE("every census frieze validates fully") {
    SearchConfig cfg{Ring::quadratic(FieldTag(-7)), 2, Rat(9), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    CHECK(!census.friezes.empty());
    for (const auto& rec : census.friezes) CHECK(validate(rec.pattern).all());
}

TEST_CASE("worker count does not change the census bytes") {
    for (int workers : {2, 8}) {
        SearchConfig base{Ring::quadratic(FieldTag(-2)), 2, Rat(16), Positivity::All, 1};
        SearchConfig par = base;
        par.workers = workers;
        CHECK(census_csv(enumerate_friezes(base)) == census_csv(enumerate_friezes(par)));
    }
}

TEST_CASE("fixed-width and exact kernels agree") {
    for (long d : {-3L, -13L}) {
        SearchConfig fast{Ring::quadratic(FieldTag(d)), 2, Rat(9), Positivity::All, 1};
        SearchConfig exact = fast;
        exact.exact_kernel = true;
        CHECK(census_csv(enumerate_friezes(fast)) == census_csv(enumerate_friezes(exact)));
    }
    SearchConfig fast{Ring::integers(), 3, Rat(16), Positivity::All, 1};
    SearchConfig exact = fast;
    exact.exact_kernel = true;
    CHECK(census_csv(enumerate_friezes(fast)) == census_csv(enumerate_friezes(exact)));
}

TEST_CASE("odd-height integer census is closed under twisting") {
    SearchConfig cfg{Ring::integers(), 3, Rat(16), Positivity::All, 1};
    CensusResult census = enumerate_friezes(cfg);
    auto keys = quiddity_keys(census);
    std::size_t cc = 0, twisted = 0;
    for (const auto& rec : census.friezes) {
        if (rec.cls.cls == FriezeClass::ConwayCoxeter) ++cc;
        if (rec.cls.cls == FriezeClass::TwistedConwayCoxeter) ++twisted;
        CHECK(keys.count(extract_quiddity(twist(rec.pattern)).str()) == 1);
    }
    CHECK(cc == twisted);
    CHECK(cc == 14);  // hexagon triangulations
}

TEST_CASE("subring report: plain integers for d = -10, the full ring for d = -2") {
    std::vector<CensusResult> a;
    for (long n : {1L, 2L})
        a.push_back(enumerate_friezes({Ring::quadratic(FieldTag(-10)), n, Rat(16), Positivity::All, 1}));
    SubringReport ra = frieze_subring_report(a);
    CHECK(ra.is_integers);
    CHECK(ra.describe() == "Z");

    std::vector<CensusResult> b;
    for (long n : {1L, 2L})
        b.push_back(enumerate_friezes({Ring::quadratic(FieldTag(-2)), n, Rat(16), Positivity::All, 1}));
    SubringReport rb = frieze_subring_report(b);
    CHECK_FALSE(rb.is_integers);
    CHECK(rb.omega_index == 1);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(enumerate_friezes({Ring::integers(), 1, Rat(3), Positivity::All, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_friezes({Ring::integers(), -1, Rat(4), Positivity::All, 1}),
                    std::invalid_argument);
}

TEST_CASE("height-0 census is the single trivial frieze") {
    CensusResult census = enumerate_friezes({Ring::integers(), 0, Rat(4), Positivity::All, 1});
    REQUIRE(census.friezes.size() == 1);
    CHECK(extract_quiddity(census.friezes[0].pattern) == make_integer_cycle({1, 1, 1}));
}
