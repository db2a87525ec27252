#include "klb2/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace klb2 {

namespace {

using Params = std::map<std::string, long long>;

const LaurentPoly kV = LaurentPoly::v();
const LaurentPoly kVV = LaurentPoly{{-1, 1}, {1, 1}};  // v + v^-1

Element B(int xk, int m, int n, int yk, bool p = false) { return big_element(xk, m, n, yk, p); }
Element X(int n, bool p = false) { return thick_element(Family::X, n, p); }
Element XBar(int n) { return thick_element(Family::XBar, n); }
Element E(int n, bool p = false) { return thick_element(Family::E, n, p); }
Element U(int n) { return thick_element(Family::U, n); }

HeckeElem right(const HeckeElem& X, Generator s) { return mul_kl_gen(X, s, Side::Right); }
HeckeElem left(Generator s, const HeckeElem& X) { return mul_kl_gen(X, s, Side::Left); }
HeckeElem rights(HeckeElem X, const Word& u) { return mul_kl_word(std::move(X), u, Side::Right); }
HeckeElem lefts(const Word& u, HeckeElem X) { return mul_kl_word(std::move(X), u, Side::Left); }

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

class Recorder {
public:
    Recorder(std::string suite, int max_len) {
        rep_.suite = std::move(suite);
        rep_.max_len = max_len;
    }

    void check(const std::string& name, Params params, const HeckeElem& lhs, const HeckeElem& rhs) {
        VerifyRecord r = fresh(name, std::move(params));
        if (auto d = first_diff(lhs, rhs)) {
            r.ok = false;
            r.diff_element = word_str(canonical_word(*d));
            r.lhs_poly = lhs.coeff(*d);
            r.rhs_poly = rhs.coeff(*d);
            r.lhs = r.lhs_poly->str();
            r.rhs = r.rhs_poly->str();
        }
        rep_.records.push_back(std::move(r));
    }

    void check(const std::string& name, Params params, const LaurentPoly& lhs, const LaurentPoly& rhs) {
        VerifyRecord r = fresh(name, std::move(params));
        if (!(lhs == rhs)) {
            r.ok = false;
            r.lhs_poly = lhs;
            r.rhs_poly = rhs;
            r.lhs = lhs.str();
            r.rhs = rhs.str();
        }
        rep_.records.push_back(std::move(r));
    }

    void check(const std::string& name, Params params, long long lhs, long long rhs) {
        VerifyRecord r = fresh(name, std::move(params));
        if (lhs != rhs) {
            r.ok = false;
            r.lhs = std::to_string(lhs);
            r.rhs = std::to_string(rhs);
        }
        rep_.records.push_back(std::move(r));
    }

    void check(const std::string& name, Params params, bool ok, const std::string& element = "") {
        VerifyRecord r = fresh(name, std::move(params));
        if (!ok) {
            r.ok = false;
            if (!element.empty()) r.diff_element = element;
        }
        rep_.records.push_back(std::move(r));
    }

    VerifyReport take() { return std::move(rep_); }

    static VerifyRecord fresh(const std::string& name, Params params) {
        VerifyRecord r;
        r.identity = name;
        r.params = std::move(params);
        return r;
    }

private:
    VerifyReport rep_;
};

Params tag_params(const FamilyTag& t, const Element& w) {
    Params p{{"length", length(w)}};
    if (t.family == Family::Theta) {
        p["x"] = t.xk;
        p["m"] = t.m;
        p["n"] = t.n;
        p["y"] = t.yk;
    } else {
        p["n"] = t.n;
    }
    p["primed"] = t.primed;
    return p;
}

std::string tag_name(const FamilyTag& t) { return region_name(t.region) + ":" + family_name(t.family); }

// N-element helper honouring the negative-index convention
struct NTerms {
    ClosedForms& cf;
    HeckeElem big(int xk, int m, int n, int yk, bool p = false) const {
        if (m < 0 || n < 0) return {};
        return cf.n(B(xk, m, n, yk, p));
    }
    HeckeElem th(int m, int n) const { return big(0, m, n, 0); }
    const HeckeElem& of(const Element& w) const { return cf.n(w); }
};

}  // namespace

bool VerifyReport::ok() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return std::size_t(std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.ok; }));
}

std::vector<std::string> suite_names() {
    return {"big", "thick", "thin", "intervals", "coatoms", "mult-lemmas", "hecke", "intro"};
}

int default_depth(const std::string& suite) {
    if (suite == "big") return 20;
    if (suite == "thick") return 24;
    if (suite == "thin") return 12;
    if (suite == "intervals" || suite == "coatoms") return 24;
    if (suite == "mult-lemmas") return 22;
    if (suite == "hecke") return 16;
    if (suite == "intro") return 27;
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

VerifyReport run_suite(const std::string& suite, int max_len, ClosedForms& cf) {
    if (suite == "big") return verify_big(max_len, cf);
    if (suite == "thick") return verify_thick(max_len, cf);
    if (suite == "thin") return verify_thin(max_len, cf);
    if (suite == "intervals") return verify_intervals(max_len);
    if (suite == "coatoms") return verify_coatoms(max_len);
    if (suite == "mult-lemmas") return verify_mult_lemmas(max_len, cf);
    if (suite == "hecke") return verify_hecke(max_len, cf.oracle());
    if (suite == "intro") return verify_intro(cf);
    throw std::invalid_argument("unknown suite '" + suite + "'");
}

VerifyReport verify_big(int max_len, ClosedForms& cf) {
    Recorder rec("big", max_len);
    KLTable& T = cf.oracle();
    for (const auto& level : ball(max_len))
        for (const auto& w : level) {
            auto tag = classify(w);
            if (!w.is_identity())
                rec.check("classified", {{"length", length(w)}}, tag.has_value(), word_str(canonical_word(w)));
            if (!tag || !is_big(tag->region)) continue;
            Params p = tag_params(*tag, w);
            const HeckeElem& oracle = T.kl_basis(w);
            rec.check("closed=oracle", p, cf.kl_closed(w).value, oracle);
            rec.check("factor-table=chain", p, cf.kl_big_factor(*tag), cf.kl_big(*tag));
        }
    for (int n = 0; 4 * n + 4 <= max_len; ++n)
        for (int m = 0; 3 * m + 4 * n + 4 <= max_len; ++m) {
            HeckeElem h = cf.kl_theta_hat(m, n);
            rec.check("theta-hat self-dual", {{"m", m}, {"n", n}}, bar(h), h);
            // the right descents of theta(m,n) are s2 and t'_m (= t_{m-1}), not t_m
            GenSet expect;
            expect.insert(2);
            expect.insert(t_gen(m - 1));
            Element th = theta(m, n);
            rec.check("theta right descents s2 t'", {{"m", m}, {"n", n}}, descents(th, Side::Right) == expect,
                      word_str(canonical_word(th)));
        }
    return rec.take();
}

VerifyReport verify_thick(int max_len, ClosedForms& cf) {
    Recorder rec("thick", max_len);
    KLTable& T = cf.oracle();
    auto H = [&](const Element& w) -> const HeckeElem& { return T.kl_basis(w); };

    for (const auto& level : ball(max_len))
        for (const auto& w : level) {
            auto tag = classify(w);
            if (!tag || !is_thick(tag->region)) continue;
            ClosedResult r = cf.kl_closed(w);
            if (r.route == Route::Fallback) continue;
            rec.check("closed=oracle " + tag_name(*tag), tag_params(*tag, w), r.value, H(w));
        }

    // north: the x_{3k+1} sum, its step, and the three recurrences
    for (int k = 2; 3 * k + 1 <= max_len; ++k) rec.check("x sum=oracle", {{"k", k}}, cf.hat_x(k), H(X(3 * k + 1)));
    auto hx = [&](int k) { return k >= 2 ? cf.hat_x(k) : H(X(3 * k + 1)); };
    auto Hb = [&](int xk, int m, int n, int yk, bool p = false) -> HeckeElem {
        if (m < 0 || n < 0) return {};
        return H(B(xk, m, n, yk, p));
    };
    NTerms N{cf};
    for (int k = 2; 3 * k + 4 <= max_len; ++k) {
        HeckeElem lhs = rights(hx(k), {2, 1, 0}) - right(hx(k), 0);
        HeckeElem rhs = hx(k + 1) + hx(k - 1) + Hb(1, k - 2, 0, 1, true) + Hb(0, k - 1, 0, 1) + Hb(0, k - 3, 0, 1) +
                        Hb(3, k - 2, 0, 1);
        rec.check("x sum times Y", {{"k", k}}, lhs, rhs);
        HeckeElem step = N.of(X(3 * k + 4));
        step.add_scaled(N.of(E(3 * k - 2)), 1, 1);
        step.add_scaled(N.of(U(3 * k - 2)), 1, 1);
        step.add_scaled(N.of(X(3 * k - 2)), -1, 2);
        step.add_scaled(hx(k), 1, 1);
        rec.check("x sum step", {{"k", k}}, hx(k + 1), step);
    }
    for (int k = 2; 3 * k + 3 <= max_len; ++k) {
        const HeckeElem& x1 = H(X(3 * k + 1));
        const HeckeElem& x2 = H(X(3 * k + 2));
        rec.check("north A", {{"k", k}}, right(x1, 2), x2);
        HeckeElem with_bar = H(XBar(3 * k + 3)) + x1 + Hb(0, k - 1, 0, 0) + Hb(1, k - 2, 0, 0, true) + Hb(0, k - 3, 0, 0);
        HeckeElem with_x = H(X(3 * k + 3)) + x1 + Hb(3, k - 2, 0, 0);
        bool even = k % 2 == 0;
        rec.check("north B", {{"k", k}}, right(x2, 0), even ? with_bar : with_x);
        rec.check("north C", {{"k", k}}, right(x2, 1), even ? with_x : with_bar);
    }

    // east and west
    for (int n = 4; n + 1 <= max_len; ++n) {
        int k = (n - 1) / 3, j = n - 3 * k;
        rec.check("e sum=oracle", {{"k", k}, {"j", j}}, cf.hat_e(k, j), H(E(n)));
    }
    auto he = [&](int k) { return k >= 1 ? cf.hat_e(k, 1) : H(E(1)); };
    for (int k = 1; 3 * k + 5 <= max_len; ++k) {
        HeckeElem lhs = rights(he(k), {2, t_gen(k), t_gen(k + 1)});
        HeckeElem rhs = he(k + 1) + kVV * he(k) + he(k - 1) + Hb(1, k - 1, 0, 1) + Hb(1, k - 1, 0, 1, true);
        rec.check("e sum times s2 t t'", {{"k", k}}, lhs, rhs);
    }
    for (int k = 1; 3 * k + 4 <= max_len; ++k) {
        rec.check("e step s2", {{"k", k}}, right(H(E(3 * k + 1)), 2), H(E(3 * k + 2)));
        rec.check("e step t", {{"k", k}}, right(H(E(3 * k + 2)), t_gen(k)) - H(E(3 * k + 1)) - Hb(1, k - 1, 0, 0),
                  H(E(3 * k + 3)));
    }
    for (int n = 1; n + 2 <= max_len; ++n)
        rec.check("west", {{"n", n}}, left(2, H(E(n))), H(thick_element(Family::W, n)));
    return rec.take();
}

VerifyReport verify_thin_k(int max_k, ClosedForms& cf) {
    Recorder rec("thin", 4 * max_k + 4);
    for (int k = 1; k <= max_k; ++k)
        for (const auto& c : check_thin_conjecture(k, cf)) {
            HeckeElem l, r;
            if (c.diff_at) {
                l.add_term(*c.diff_at, c.lhs);
                r.add_term(*c.diff_at, c.rhs);
            }
            rec.check(c.identity, {{"k", k}}, l, r);
        }
    return rec.take();
}

VerifyReport verify_thin(int max_len, ClosedForms& cf) {
    VerifyReport r = verify_thin_k(std::max(0, (max_len - 4) / 4), cf);
    r.max_len = max_len;
    return r;
}

VerifyReport verify_intervals(int max_len) {
    Recorder rec("intervals", max_len);
    for (const auto& level : ball(max_len))
        for (const auto& w : level) {
            for (const auto& tag : classify_all(w)) {
                long long formula;
                try {
                    formula = interval_size(tag);
                } catch (const FormulaError&) {
                    continue;
                }
                rec.check("size " + tag_name(tag), tag_params(tag, w), formula, (long long)lower_interval(w).size());
            }
        }
    return rec.take();
}

VerifyReport verify_coatoms(int max_len) {
    Recorder rec("coatoms", max_len);
    for (const auto& level : ball(max_len))
        for (const auto& w : level) {
            for (const auto& tag : classify_all(w)) {
                std::vector<Element> formula;
                try {
                    formula = coatom_formula(tag);
                } catch (const FormulaError&) {
                    continue;
                }
                std::vector<Element> actual = coatoms(w);
                std::string diff;
                if (formula != actual) {
                    for (const auto& z : formula)
                        if (!std::binary_search(actual.begin(), actual.end(), z)) diff = "extra " + str(z);
                    for (const auto& z : actual)
                        if (!std::binary_search(formula.begin(), formula.end(), z)) diff = "missing " + str(z);
                }
                rec.check("coatoms " + tag_name(tag), tag_params(tag, w), formula == actual, diff);
            }
        }
    return rec.take();
}

VerifyReport verify_mult_lemmas(int max_len, ClosedForms& cf) {
    Recorder rec("mult-lemmas", max_len);
    KLTable& T = cf.oracle();
    NTerms N{cf};
    auto fits = [&](const Element& w) { return length(w) <= max_len; };
    auto Hb = [&](int xk, int m, int n, int yk, bool p = false) -> HeckeElem {
        if (m < 0 || n < 0) return {};
        return T.kl_basis(B(xk, m, n, yk, p));
    };
    const HeckeElem Ns1s0 = N.of(from_word({1, 0}));

    for (int m = 0; fits(theta(m, 0)); ++m)
        for (int n = 0; fits(theta(m, n)); ++n) {
            Params p{{"m", m}, {"n", n}};
            const Generator t = t_gen(m);
            const HeckeElem& Nt = N.of(theta(m, n));
            bool grown = fits(B(0, m, n, 3)) && fits(theta(m + 1, n));
            if (m > 0 && n > 0) {
                rec.check("N theta H t", p, right(Nt, t), N.big(0, m, n, 1) + kV * N.big(0, m - 1, n, 1));
                if (grown) {
                    HeckeElem lhs = rights(Nt, {t, 2, t});
                    HeckeElem rhs = N.th(m + 1, n) + N.th(m - 1, n + 1) + N.th(m + 1, n - 1) + N.th(m - 1, n);
                    HeckeElem twice = right(Nt, t);
                    twice += twice;
                    rec.check("N theta H t s2 t", p, lhs, twice + rhs);
                    rec.check("N theta (H t s2 t - 2 t)", p, lhs - twice, rhs);
                }
            }
            if (m == 0 && n > 0) {
                rec.check("N theta(0,n) H s0", p, right(Nt, 0), N.big(0, 0, n, 1) + LaurentPoly::v(2) * N.big(0, 0, n - 1, 1));
                if (fits(B(0, 0, n, 2)))
                    rec.check("N theta(0,n)s0 H s2", p,
                              right(N.big(0, 0, n, 1), 2) + LaurentPoly::v(2) * N.big(0, 0, n - 1, 2),
                              N.big(0, 0, n, 2) + Nt + kV * N.th(1, n - 1));
            }
            if (n == 0 && m > 0) {
                rec.check("N theta(m,0) H t", p, right(Nt, t), N.big(0, m, 0, 1) + kV * N.big(0, m - 1, 0, 1));
                if (fits(B(1, m, 0, 1)))
                    rec.check("N s0 theta(m,0) H t", p, right(N.big(1, m, 0, 0), t),
                              N.big(1, m, 0, 1) + kV * N.big(1, m - 1, 0, 1));
                if (fits(B(3, m, 0, 1)))
                    rec.check("N s1s2s0 theta(m,0) H t", p, right(N.big(3, m, 0, 0), t),
                              N.big(3, m, 0, 1) + kV * N.big(3, m - 1, 0, 1));
            }
            if (m == 0 && n == 0) {
                rec.check("N theta(0,0) H s0", p, right(Nt, 0), N.big(0, 0, 0, 1));
                rec.check("N s0 theta(0,0) H s0", p, right(N.big(1, 0, 0, 0), 0),
                          N.big(1, 0, 0, 1) + LaurentPoly::v(2) * Ns1s0);
            }
            if (n == 0) {
                if (fits(B(1, m, 0, 0)))
                    rec.check("H s0 N theta(m,0)", p, left(0, Nt), N.big(1, m, 0, 0) + kV * N.big(1, m - 1, 0, 0, true));
                if (grown) {
                    HeckeElem lhs = rights(Nt, {t, 2, t});
                    HeckeElem twice = right(Nt, t);
                    twice += twice;
                    rec.check("N theta(m,0) (H t s2 t - 2 t)", p, lhs - twice,
                              N.th(m + 1, 0) + N.th(m - 1, 1) + LaurentPoly{{0, 1}, {2, 1}} * N.th(m - 1, 0));
                }
                if (fits(B(3, m, 0, 0))) {
                    HeckeElem lhs = lefts({1, 2, 0}, Nt) - left(0, Nt);
                    HeckeElem rhs;
                    if (m == 0) {
                        rhs = N.big(3, 0, 0, 0) + kVV * Nt;
                    } else {
                        rhs = N.big(3, m, 0, 0) + LaurentPoly{{-1, 1}, {1, 2}} * Nt +
                              kV * (N.th(m - 2, 1) + N.big(1, m - 1, 0, 0, true)) +
                              LaurentPoly::v(2) * (N.big(1, m - 2, 0, 0) - N.big(3, m - 2, 0, 0));
                    }
                    rec.check("(H s1s2s0 - H s0) N theta(m,0)", p, lhs, rhs);
                }
            }
            if (m == 0 && fits(theta(1, n))) {
                HeckeElem lhs = rights(Nt, {0, 2, 0});
                HeckeElem twice = right(Nt, 0);
                twice += twice;
                rec.check("N theta(0,n) (H s0 s2 s0 - 2 s0)", p, lhs - twice,
                          N.th(1, n) + LaurentPoly{{0, 1}, {2, 1}} * N.th(1, n - 1) + LaurentPoly::v(2) * N.th(1, n - 2));
            }
            if (m == 0 && n > 2 && fits(theta(0, n + 1))) {
                HeckeElem s02 = rights(Nt, {0, 2});
                HeckeElem four = rights(s02, {1, 2});
                const LaurentPoly v2 = LaurentPoly::v(2), v4 = LaurentPoly::v(4);
                rec.check("N theta(0,n) H s0 s2", p, s02,
                          N.big(0, 0, n, 2) + Nt + kV * N.th(1, n - 1) + v2 * N.th(0, n - 1) +
                              LaurentPoly::v(3) * N.th(1, n - 2) - v4 * N.big(0, 0, n - 2, 2));
                HeckeElem rhs4 = N.th(0, n + 1) + N.big(0, 0, n, 2) + N.big(0, 0, n, 2) + v2 * Nt + N.th(2, n - 1) +
                                 LaurentPoly(3) * Nt + LaurentPoly::monomial(1, 2) * N.th(1, n - 1) + v2 * N.th(2, n - 2) +
                                 LaurentPoly::v(-2) * Nt + LaurentPoly::monomial(2, 3) * N.th(0, n - 1) +
                                 LaurentPoly::monomial(3, 2) * N.th(1, n - 2) + N.th(0, n - 1);
                rec.check("N theta(0,n) H s0 s2 s1 s2", p, four + LaurentPoly::monomial(4, 2) * N.big(0, 0, n - 2, 2), rhs4);
                HeckeElem lhs = four - s02 - s02 + Nt - kVV * kVV * Nt;
                rec.check("N theta(0,n) step to n+1", p, lhs,
                          N.th(0, n + 1) + LaurentPoly{{0, 1}, {2, 1}} * N.th(0, n - 1) + v2 * N.th(2, n - 2) +
                              N.th(2, n - 1));
            }
        }

    // thick-region N identities, each with Y and with Y'
    for (int k = 2; fits(X(3 * k + 4)); ++k) {
        Params p{{"k", k}};
        for (int primed = 0; primed < 2; ++primed) {
            Word y = primed ? Word{2, 0, 1} : Word{2, 1, 0};
            Generator last = primed ? 1 : 0;
            auto Y = [&](const HeckeElem& Z) { return rights(Z, y) - right(Z, last); };
            std::string tag = primed ? " Y'" : " Y";
            rec.check("N x" + tag, p, Y(N.of(X(3 * k + 1))),
                      N.of(X(3 * k + 4)) + N.of(X(3 * k - 2)) + N.big(0, k - 1, 0, 1) + N.big(3, k - 2, 0, 1) +
                          N.big(1, k - 2, 0, 1, true) + kV * N.big(0, k - 2, 0, 1));
            // the u_{f(k-1)} term is written twice, with coefficients 1 and v^2
            rec.check("N u" + tag, p, Y(N.of(U(3 * k + 1))),
                      N.of(U(3 * k + 4)) + N.of(U(3 * k - 2)) + N.big(0, k - 2, 1, 1) + kVV * N.big(0, k - 1, 0, 1) +
                          LaurentPoly::v(2) * N.of(U(3 * k - 2)));
            rec.check("N e" + tag, p, Y(N.of(E(3 * k + 1))),
                      N.of(E(3 * k + 4)) + N.of(E(3 * k - 2)) + N.big(1, k - 1, 0, 1) + N.big(1, k - 1, 0, 1, true) +
                          kV * N.big(1, k - 2, 0, 1) + kV * N.big(1, k - 2, 0, 1, true));
        }
    }

    // explicit big-region expansions, checked against the oracle
    for (int m = 0; fits(B(3, m + 1, 0, 1)); ++m) {
        Params p{{"m", m}};
        rec.check("H theta(m,0)t", p, Hb(0, m, 0, 1), N.big(0, m, 0, 1) + kV * Hb(0, m - 1, 0, 1));
        rec.check("H s0 theta(m,0)", p, Hb(1, m, 0, 0), N.big(1, m, 0, 0) + kV * Hb(1, m - 1, 0, 0, true));
        HeckeElem e = N.big(3, m, 0, 0);
        for (int i = 0; i <= floor_div2(m - 1); ++i)
            e += LaurentPoly::v(2 * i + 1) * (N.th(m - 2 * i, 0) + N.big(1, m - 1 - 2 * i, 0, 0, true));
        for (int i = 1; i <= m / 2; ++i)
            e += LaurentPoly::v(2 * i - 1) * N.th(m - 2 * i, 1) + LaurentPoly::v(2 * i) * N.big(1, m - 2 * i, 0, 0);
        rec.check("H s1s2s0 theta(m,0)", p, Hb(3, m, 0, 0), e);
        if (m >= 1) {
            // the N_{s1s0} term carries v^(m+2)
            HeckeElem c = N.big(3, m, 0, 1) + kV * N.big(3, m - 1, 0, 1) + LaurentPoly::v(m + 2) * Ns1s0;
            for (int i = 0; i <= m; ++i) c += LaurentPoly::v(i + 1) * N.big(0, m - i, 0, 1);
            for (int i = 1; i <= m; ++i) c += LaurentPoly::v(i) * N.big(1, m - i, 0, 1, true);
            for (int i = 2; i <= m; ++i)
                c += LaurentPoly::v(i - 1) * N.big(0, m - i, 1, 1) + LaurentPoly::v(i) * N.big(1, m - i, 0, 1);
            rec.check("H s1s2s0 theta(m,0)t", p, Hb(3, m, 0, 1), c);
            rec.check("H s1s2s0 theta(m+1,0)t step", p, Hb(3, m + 1, 0, 1),
                      N.big(3, m + 1, 0, 1) + kV * Hb(3, m, 0, 1) - LaurentPoly::v(2) * N.big(3, m - 1, 0, 1) +
                          kV * N.big(0, m + 1, 0, 1) + kV * N.big(1, m, 0, 1, true) + kV * N.big(0, m - 1, 1, 1) +
                          LaurentPoly::v(2) * N.big(1, m - 1, 0, 1));
        }
        rec.check("H s0 theta(m+1,0)t step", p, Hb(1, m + 1, 0, 1),
                  N.big(1, m + 1, 0, 1) + kV * N.big(1, m, 0, 1, true) + kV * Hb(1, m, 0, 1));
        rec.check("H s1 theta'(m+1,0)t' step", p, Hb(1, m + 1, 0, 1, true),
                  N.big(1, m + 1, 0, 1, true) + kV * N.big(1, m, 0, 1) + kV * Hb(1, m, 0, 1, true));
    }
    return rec.take();
}

VerifyReport verify_hecke(int max_len, KLTable& T) {
    Recorder rec("hecke", max_len);
    T.fill_to_length(max_len);
    for (const auto& level : ball(max_len))
        for (const auto& w : level) {
            Params p{{"length", length(w)}};
            std::string word = str(w);
            const HeckeElem& Hw = T.kl_basis(w);
            HeckeElem Nw = n_elem(w);
            rec.check("self-dual " + word, p, bar(Hw), Hw);
            rec.check("monotonic H " + word, p, is_monotonic(Hw, w));
            rec.check("monotonic N " + word, p, is_monotonic(Nw, w));
            GenSet dr = descents(w, Side::Right), dl = descents(w, Side::Left);
            for (Generator s = 0; s < 3; ++s) {
                if (dr.contains(s)) {
                    rec.check("absorb right " + word, p, right(Hw, s), kVV * Hw);
                    rec.check("absorb N " + word, p, right(Nw, s), kVV * Nw);
                    // recursion result must not depend on the chosen descent
                    rec.check("pivot " + word, p, T.step(w, s), Hw);
                }
                if (dl.contains(s)) rec.check("absorb left " + word, p, left(s, Hw), kVV * Hw);
            }
            bool descent_ok = true;
            std::string bad;
            for (const auto& [x, h] : Hw.terms()) {
                if (h.coeff(1) == 0 || length(w) - length(x) <= 1) continue;
                if (!dr.subset_of(descents(x, Side::Right)) || !dl.subset_of(descents(x, Side::Left))) {
                    descent_ok = false;
                    bad = str(x);
                }
            }
            rec.check("mu descent sets " + word, p, descent_ok, bad);
        }
    return rec.take();
}

VerifyReport verify_intro(ClosedForms& cf) {
    Recorder rec("intro", 27);
    KLTable& T = cf.oracle();
    auto h = [&](const Element& x, const Element& w) { return T.h_poly(x, w); };
    auto F = [](int l) { return f_poly(l); };
    const LaurentPoly vinv = LaurentPoly::v(-1);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {4, 5}}) {
        Params p{{"n", n}, {"m", m}};
        const int d = m - n;
        Element xb = XBar(3 * n), xm = X(3 * m), xm1 = X(3 * m - 1), xm2 = X(3 * m - 2);
        Element z = B(3, m - 3, 0, 0);
        rec.check("chain A", p, vinv * h(xb, xm1) + h(X(3 * n - 1), xm1), h(xb, xm) + h(xb, xm2) + h(xb, z));
        rec.check("chain B", p, h(xb, xm1), kV * h(xb, xm2) + h(B(3, n - 2, 0, 0), xm2));
        rec.check("chain C", p, h(X(3 * n - 1), xm1), vinv * h(X(3 * n - 1), xm2) + h(X(3 * n - 2), xm2));
        rec.check("h xbar x(3m-2)", p, h(xb, xm2), LaurentPoly::v(d) * (F(d) + F(d - 2)));
        rec.check("h s1s2s0theta x(3m-2)", p, h(B(3, n - 2, 0, 0), xm2), LaurentPoly::v(d + 1) * (F(d - 1) + F(d - 3)));
        rec.check("h x(3n-1) x(3m-2)", p, h(X(3 * n - 1), xm2), LaurentPoly::v(d + 1) * (F(d) + F(d - 2)));
        rec.check("h x(3n-2) x(3m-2)", p, h(X(3 * n - 2), xm2), LaurentPoly::v(d) * (F(d + 1) + F(d - 1)));
        rec.check("h xbar s1s2s0theta", p, h(xb, z), LaurentPoly::v(d) * (F(d) + F(d - 2)));
        rec.check("h xbar x closed", p, h(xb, xm), h_xbar_x_closed(n, m));
    }
    for (int m = 3; 3 * m <= 27; m += 2)
        for (int n = 2; n < m; n += 2) {
            Integer mu = T.mu(XBar(3 * n), X(3 * m));
            rec.check("mu xbar x", {{"n", n}, {"m", m}}, (long long)mu, m - n == 1 ? 1LL : 0LL);
        }
    return rec.take();
}

}  // namespace klb2
