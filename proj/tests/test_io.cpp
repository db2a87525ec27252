#include "klb2/json.hpp"
#include "klb2/svg.hpp"

#include <doctest.h>

#include <map>

using namespace klb2;

TEST_CASE("Laurent JSON") {
    LaurentPoly p{{1, 1}, {-1, 1}};
    CHECK(to_json(p).dump() == R"({"-1":1,"1":1})");
    CHECK(laurent_from_json(to_json(p)) == p);
    CHECK(to_json(LaurentPoly()).dump() == "{}");
    LaurentPoly big = LaurentPoly::monomial(0, Integer("123456789012345678901234567890"));
    CHECK(to_json(big).dump() == R"({"0":"123456789012345678901234567890"})");
    CHECK(laurent_from_json(to_json(big)) == big);
    LaurentPoly spread{{10, 2}, {-3, 1}, {2, 5}};
    CHECK(to_json(spread).dump() == R"({"-3":1,"2":5,"10":2})");
}

TEST_CASE("element and Hecke JSON") {
    CHECK(to_json(Element::identity()).dump() == R"({"word":""})");
    CHECK(to_json(elt("2121")).dump() == to_json(elt("1212")).dump());
    HeckeElem N = n_elem(elt("12"));
    Json j = to_json(N);
    REQUIRE(j["terms"].size() == 4);
    CHECK(j["terms"][0]["word"] == "");
    CHECK(j["terms"][3]["word"] == "12");
    CHECK(hecke_from_json(j) == N);
}

TEST_CASE("tag and report JSON") {
    Json t = to_json(big_tag(1, 2, 1, 3, true));
    CHECK(t["m"] == 2);
    CHECK(t["n"] == 1);
    CHECK(t["primed"] == true);
    CHECK(t.contains("region"));
    CHECK(t.contains("family"));
    CHECK(t.contains("x"));
    CHECK(t.contains("y"));

    VerifyRecord ok;
    ok.identity = "sample";
    ok.params = {{"k", 2}};
    CHECK(to_json(ok)["status"] == "ok");
    CHECK(to_json(ok)["first_diff"].is_null());
    VerifyRecord bad = ok;
    bad.ok = false;
    bad.diff_element = "12";
    bad.lhs_poly = LaurentPoly::v(2);
    bad.rhs_poly = LaurentPoly(0);
    Json jb = to_json(bad);
    CHECK(jb["status"] == "fail");
    CHECK(jb["first_diff"]["element"] == "12");
    CHECK(jb["first_diff"]["lhs"].dump() == R"({"2":1})");
    CHECK(jb["first_diff"]["rhs"].dump() == "{}");
}

TEST_CASE("SVG scenes") {
    SvgScene s0 = build_scene(0, "region");
    REQUIRE(s0.triangles.size() == 1);
    CHECK(s0.triangles[0].element.is_identity());
    CHECK(render_svg(s0).find("class=\"identity\"") != std::string::npos);

    SvgScene sq = build_scene(4, "interval:1212");
    int shaded = 0;
    for (const auto& t : sq.triangles) shaded += t.shade == Shade::InInterval;
    CHECK(shaded == 8);

    SvgScene reg = build_scene(10, "region");
    std::map<int, int> thin_per_length;
    for (const auto& t : reg.triangles)
        if (t.shade == Shade::Thin) ++thin_per_length[length(t.element)];
    // d_3 and d'_3 at length 3; the barred walls start at length 4
    CHECK(thin_per_length[3] == 2);
    for (int l = 4; l <= 10; ++l) CHECK(thin_per_length[l] == 4);

    std::size_t expected = 0;
    for (const auto& level : ball(10)) expected += level.size();
    CHECK(reg.triangles.size() == expected);

    CHECK_THROWS_AS(build_scene(3, "colors"), std::invalid_argument);
    CHECK_THROWS_AS(build_scene(-1, "region"), std::invalid_argument);
}

TEST_CASE("SVG alcoves are closed under the generator reflections") {
    SvgScene s = build_scene(6, "region");
    std::set<Element> inside;
    for (const auto& t : s.triangles) inside.insert(t.element);
    for (const auto& t : s.triangles) {
        if (length(t.element) == 6) continue;
        for (Generator g = 0; g < 3; ++g) CHECK(inside.count(apply_gen(t.element, g, Side::Right)) == 1);
    }
}
