#include "klb2/laurent.hpp"

#include <doctest.h>

#include <random>

using namespace klb2;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vi = LaurentPoly::v(-1);

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-4, 4), coeff(-3, 3), count(0, 5);
    LaurentPoly p;
    for (int i = count(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("addition") {
    CHECK(add(v + vi, 0) == v + vi);
    CHECK(add(v, -v).is_zero());
    CHECK(add(v, -v).terms().empty());
    CHECK(add(LaurentPoly{{0, 1}, {2, 1}}, LaurentPoly{{0, 2}, {2, 2}}) == LaurentPoly{{0, 3}, {2, 3}});
}

TEST_CASE("multiplication") {
    CHECK(mul(v, vi) == LaurentPoly(1));
    CHECK(mul(v + vi, v + vi) == LaurentPoly{{-2, 1}, {0, 2}, {2, 1}});
    CHECK(mul(f_poly(2), v) == LaurentPoly{{1, 1}, {3, 1}});
}

TEST_CASE("bar involution") {
    CHECK(bar(v) == vi);
    CHECK(bar(LaurentPoly{{0, 3}, {2, 1}}) == LaurentPoly{{0, 3}, {-2, 1}});
    LaurentPoly p{{3, 1}, {1, -2}};
    CHECK(bar(bar(p)) == p);
}

TEST_CASE("F polynomials") {
    CHECK(f_poly(2) == LaurentPoly{{0, 1}, {2, 1}});
    CHECK(f_poly(0).is_zero());
    CHECK(f_poly(-2).is_zero());
    CHECK(f_poly(3) == LaurentPoly{{0, 1}, {2, 1}, {4, 1}});
}

TEST_CASE("non-negativity and evaluation at one") {
    CHECK(is_nonneg(v + vi));
    CHECK_FALSE(is_nonneg(v - 1));
    CHECK(is_nonneg(LaurentPoly()));
    CHECK(eval_at_one(v + vi) == 2);
    CHECK(eval_at_one(LaurentPoly()) == 0);
    CHECK(eval_at_one(LaurentPoly{{0, 1}, {2, 3}, {5, 2}}) == 6);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 300; ++i) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK(add(p, -p).terms().empty());
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(bar(p * q) == bar(p) * bar(q));
        CHECK(bar(bar(p)) == p);
        CHECK(eval_at_one(p * q) == eval_at_one(p) * eval_at_one(q));
        CHECK(eval_at_one(p + q) == eval_at_one(p) + eval_at_one(q));
    }
}

TEST_CASE("coefficients do not overflow") {
    LaurentPoly p = LaurentPoly{{0, 1}, {1, 1}};
    LaurentPoly q = 1;
    for (int i = 0; i < 100; ++i) q *= p;
    // central binomial coefficient C(100, 50) exceeds 64 bits
    CHECK(q.coeff(50) == Integer("100891344545564193334812497256"));
}

TEST_CASE("text form") {
    CHECK(LaurentPoly().str() == "0");
    CHECK_FALSE((v + vi).str().empty());
}
