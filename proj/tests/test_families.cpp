#include "klb2/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace klb2;

namespace {

std::set<Element> as_set(const std::vector<Element>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("theta and t") {
    CHECK(theta(0, 0) == elt("1212"));
    CHECK(theta(1, 0) == elt("1210202"));
    CHECK(length(theta(1, 0)) == 7);
    CHECK(t_gen(0) == 0);
    CHECK(t_gen(3) == 1);
}

TEST_CASE("thick and thin elements") {
    CHECK(thick_element(Family::X, 3) == elt("121"));
    CHECK(thick_element(Family::E, 2) == elt("102"));
    CHECK(length(thick_element(Family::E, 2)) == 3);
    CHECK(thick_element(Family::XBar, 6) == elt("120121"));
    CHECK(length(thick_element(Family::XBar, 6)) == 6);
    CHECK(thin_element(Family::D, 3) == elt("212"));
    CHECK(thin_element(Family::DBar, 3) == elt("0212"));
    CHECK(length(thin_element(Family::DBar, 3)) == 4);
}

TEST_CASE("classification round trips") {
    auto t = classify(theta(2, 1));
    REQUIRE(t);
    CHECK(t->region == Region::BigC);
    CHECK(t->family == Family::Theta);
    CHECK(t->m == 2);
    CHECK(t->n == 1);
    CHECK(t->xk == 0);
    CHECK(t->yk == 0);
    CHECK_FALSE(t->primed);

    auto tp = classify(phi(theta(1, 0)));
    REQUIRE(tp);
    CHECK(tp->region == Region::BigPhiC);
    CHECK(tp->m == 1);
    CHECK(tp->n == 0);
    CHECK(tp->primed);

    auto xb = classify(elt("120121"));
    REQUIRE(xb);
    CHECK(xb->family == Family::XBar);
    CHECK(xb->n == 6);
    CHECK(xb->region == Region::ThickNorth);
}

TEST_CASE("every element up to length 20 has exactly one tag") {
    for (const auto& level : ball(20)) {
        for (const auto& w : level) {
            if (w.is_identity()) continue;
            auto tags = classify_all(w);
            if (tags.size() != 1) FAIL_CHECK(str(w) << " has " << tags.size() << " tags");
            for (const auto& t : tags) CHECK(rebuild(t) == w);
        }
    }
}

TEST_CASE("interval sizes") {
    CHECK(interval_size(big_tag(0, 4, 0, 0)) == 200);
    CHECK(interval_size(thick_tag(Family::X, 7)) == 40);
    CHECK(interval_size(thick_tag(Family::E, 5)) == 32);
    CHECK(interval_size(thick_tag(Family::X, 7)) == long(lower_interval(thick_element(Family::X, 7)).size()));
    CHECK(interval_size(thick_tag(Family::E, 5)) == long(lower_interval(thick_element(Family::E, 5)).size()));
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 2; ++n)
            CHECK(interval_size(big_tag(0, m, n, 0)) == long(lower_interval(theta(m, n)).size()));
}

TEST_CASE("coatom formulas") {
    auto x6 = coatom_formula(thick_tag(Family::X, 6));
    CHECK(x6.size() == 4);
    CHECK(as_set(x6) == as_set(coatoms(thick_element(Family::X, 6))));
    auto d7 = coatom_formula(thin_tag(Family::D, 7));
    CHECK(d7.size() == 4);
    CHECK(as_set(d7) == as_set(coatoms(thin_element(Family::D, 7))));
    auto t11 = coatom_formula(big_tag(0, 1, 1, 0));
    CHECK(t11.size() == 4);
    CHECK(as_set(t11) == as_set(coatoms(theta(1, 1))));
}

TEST_CASE("formula errors") {
    CHECK_THROWS_AS(coatom_formula(thick_tag(Family::X, 3)), FormulaError);
    CHECK_THROWS_AS(big_element(4, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("lower interval of theta(m,n) is the square with rings") {
    // alcove centroids below theta(m,n) fill S(m,n): (m+1)^2 squares plus
    // 4(m+1)n + 2n(n-1) more, eight alcoves each
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; m + n <= 4; ++n) {
            long long squares = (m + 1) * (m + 1) + 4 * (m + 1) * n + 2 * n * (n - 1);
            CHECK(long(lower_interval(theta(m, n)).size()) == 8 * squares);
        }
}
