#include "klb2/coxeter.hpp"
#include "klb2/families.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace klb2;

TEST_CASE("generators and relations") {
    Element s1 = apply_gen(Element::identity(), 1, Side::Right);
    CHECK(s1.a == std::array<std::int8_t, 4>{0, 1, 1, 0});
    CHECK(s1.tx == 0);
    CHECK(s1.ty == 0);
    CHECK(apply_gen(s1, 1, Side::Right).is_identity());
    CHECK(elt("1010").is_identity());
    CHECK(from_word({1, 0, 1, 0}) == from_word({0, 1, 0, 1}));
    CHECK((from_word({1, 0}) * from_word({1, 0})) * (from_word({1, 0}) * from_word({1, 0})) == Element::identity());
    CHECK(from_word({1, 2, 1, 2, 1, 2, 1, 2}).is_identity());
    CHECK(from_word({0, 2, 0, 2, 0, 2, 0, 2}).is_identity());
    CHECK(from_word({0, 1, 0, 1}) == from_word({1, 0, 1, 0}));
    CHECK(from_word({1, 1}).is_identity());
}

TEST_CASE("descents") {
    CHECK(descents(Element::identity(), Side::Left).size() == 0);
    CHECK(descents(elt("12"), Side::Right) == [] { GenSet g; g.insert(2); return g; }());
    CHECK(descents(elt("12"), Side::Left) == [] { GenSet g; g.insert(1); return g; }());
    GenSet d = descents(theta(1, 0), Side::Right);
    CHECK(d.list() == std::vector<Generator>{0, 2});
}

TEST_CASE("length") {
    CHECK(length(Element::identity()) == 0);
    CHECK(length(theta(0, 0)) == 4);
    for (auto [m, n] : {std::pair{1, 0}, {0, 1}, {2, 1}}) CHECK(length(theta(m, n)) == 4 + 3 * m + 4 * n);
    for (const auto& level : ball(10))
        for (const auto& w : level) CHECK(length(w) == length_by_stripping(w));
}

TEST_CASE("canonical words, inverse, phi") {
    CHECK(canonical_word(Element::identity()).empty());
    CHECK(canonical_word(elt("21")) == Word{2, 1});
    CHECK(inverse(Element::identity()).is_identity());
    CHECK(inverse(elt("12")) == elt("21"));
    CHECK(phi(elt("02")) == elt("12"));
    CHECK(phi(elt("2")) == elt("2"));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> gen(0, 2), len(0, 20);
    for (int i = 0; i < 1000; ++i) {
        Word u;
        for (int j = len(rng); j > 0; --j) u.push_back(gen(rng));
        Element w = from_word(u);
        Word c = canonical_word(w);
        CHECK(from_word(c) == w);
        CHECK(is_reduced(c));
        CHECK(int(c.size()) == length(w));
        CHECK(inverse(inverse(w)) == w);
        CHECK(phi(phi(w)) == w);
        CHECK(length(phi(w)) == length(w));
    }
}

TEST_CASE("word text") {
    CHECK(parse_word("1212") == Word{1, 2, 1, 2});
    CHECK(parse_word("1.2.1.2", '.') == Word{1, 2, 1, 2});
    CHECK(parse_word("").empty());
    CHECK_THROWS_AS(parse_word("13"), std::invalid_argument);
    CHECK(word_str({0, 2, 1}) == "021");
}

TEST_CASE("growth series") {
    // (1+t)(1+t+t^2+t^3) / ((1-t)(1-t^3))
    std::vector<long long> num{1, 2, 2, 2, 1};
    std::vector<long long> series(13, 0);
    for (int d = 0; d <= 12; ++d) {
        long long c = 0;
        // coefficient of t^d in 1/((1-t)(1-t^3)) is floor(d/3)+1
        for (int i = 0; i < int(num.size()) && i <= d; ++i) c += num[i] * ((d - i) / 3 + 1);
        series[d] = c;
    }
    auto levels = ball(12);
    REQUIRE(levels.size() == 13);
    for (int d = 0; d <= 12; ++d) CHECK(levels[d].size() == std::size_t(series[d]));
}

namespace {

// every element reachable as a subword of u
std::set<Element> subword_closure(const Word& u) {
    std::set<Element> out;
    const int n = int(u.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Word sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(u[i]);
        out.insert(from_word(sub));
    }
    return out;
}

}  // namespace

TEST_CASE("Bruhat order agrees with subword enumeration") {
    CHECK(bruhat_leq(Element::identity(), theta(2, 1)));
    CHECK_FALSE(bruhat_leq(elt("0"), theta(0, 0)));
    CHECK(bruhat_leq(elt("212"), theta(0, 0)));

    auto levels = ball(10);
    std::vector<Element> all;
    for (const auto& l : levels) all.insert(all.end(), l.begin(), l.end());
    for (const auto& w : all) {
        auto below = subword_closure(canonical_word(w));
        for (const auto& x : all) {
            if (length(x) > length(w)) continue;
            bool expected = below.count(x) > 0;
            if (bruhat_leq(x, w) != expected) FAIL_CHECK("bruhat mismatch at " << str(x) << " <= " << str(w));
        }
        auto li = lower_interval(w);
        CHECK(std::set<Element>(li.begin(), li.end()) == below);
    }
}

TEST_CASE("lower intervals and coatoms") {
    CHECK(lower_interval(theta(0, 0)).size() == 8);
    CHECK(lower_interval(thick_element(Family::X, 3)).size() == 6);
    CHECK(lower_interval(thick_element(Family::E, 2)).size() == 8);
    CHECK(coatoms(elt("1")) == std::vector<Element>{Element::identity()});
    CHECK(coatoms(thick_element(Family::X, 6)).size() == 4);
    CHECK(coatoms(theta(1, 1)).size() == 4);
    CHECK_THROWS_AS(coatoms(Element::identity()), std::invalid_argument);
}
