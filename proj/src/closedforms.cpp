#include "klb2/closedforms.hpp"

#include <algorithm>

namespace klb2 {

namespace {

const LaurentPoly kV = LaurentPoly::v();

Element B(int xk, int m, int n, int yk, bool primed = false) { return big_element(xk, m, n, yk, primed); }

HeckeElem right(const HeckeElem& X, Generator s) { return mul_kl_gen(X, s, Side::Right); }
HeckeElem left(Generator s, const HeckeElem& X) { return mul_kl_gen(X, s, Side::Left); }

[[noreturn]] void out_of_range(const std::string& what) {
    throw FormulaError(FormulaErrc::FormulaOutOfRange, what);
}

}  // namespace

SuppSet supp(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("supp needs m, n >= 0");
    SuppSet out;
    for (int a = m; a >= 0; a -= 2)
        for (int b = n; b >= 0; --b) {
            if (m % 2 == 0 && a == 0 && (b - n) % 2 != 0) continue;
            out.insert({a, b});
        }
    return out;
}

TruncatedN truncated_n(const Element& x, const Element& z) {
    TruncatedN t{x, z, {}};
    const int lx = length(x);
    for (const auto& w : lower_interval(x))
        if (!bruhat_leq(w, z)) t.realized.add_term(w, LaurentPoly::v(lx - length(w)));
    return t;
}

HeckeElem u_elem(const Element& x) { return n_elem(x) + truncated_n(phi(x), x).realized; }

const HeckeElem& ClosedForms::n(const Element& w) {
    auto it = n_cache_.find(w);
    if (it == n_cache_.end()) it = n_cache_.emplace(w, n_elem(w)).first;
    return it->second;
}

HeckeElem ClosedForms::kl_theta_hat(int m, int n) {
    if (m < 0 || n < 0) return {};
    auto key = std::make_pair(m, n);
    if (auto it = theta_cache_.find(key); it != theta_cache_.end()) return it->second;
    HeckeElem out;
    for (auto [a, b] : supp(m, n)) out.add_scaled(this->n(theta(a, b)), 1, (m - a) + 2 * (n - b));
    theta_cache_.emplace(key, out);
    return out;
}

const HeckeElem& ClosedForms::big_cached(const FamilyTag& tag) {
    Element w = rebuild(tag);
    if (auto it = big_cache_.find(w); it != big_cache_.end()) return it->second;
    HeckeElem out;
    const int m = tag.m, n = tag.n;
    if (tag.primed) {
        out = phi(big_cached(big_tag(tag.xk, m, n, tag.yk)));
    } else if (tag.xk > 0) {
        const HeckeElem& prev = big_cached(big_tag(tag.xk - 1, m, n, tag.yk));
        switch (tag.xk) {
            case 1: out = left(0, prev); break;
            case 2: out = left(2, prev) - big_cached(big_tag(0, m, n, tag.yk)); break;
            default: out = left(1, prev) - big_cached(big_tag(1, m, n, tag.yk)); break;
        }
    } else if (tag.yk > 0) {
        const HeckeElem& prev = big_cached(big_tag(0, m, n, tag.yk - 1));
        switch (tag.yk) {
            case 1: out = right(prev, t_gen(m)); break;
            case 2: out = right(prev, 2) - big_cached(big_tag(0, m, n, 0)); break;
            default: out = right(prev, t_gen(m + 1)) - big_cached(big_tag(0, m, n, 1)); break;
        }
    } else {
        out = kl_theta_hat(m, n);
    }
    return big_cache_.emplace(w, std::move(out)).first->second;
}

HeckeElem ClosedForms::kl_big(const FamilyTag& tag) {
    if (!is_big(tag.region) || tag.family != Family::Theta)
        throw FormulaError(FormulaErrc::WrongRegion, "kl_big needs a big-region tag, got " + describe(tag));
    return big_cached(tag);
}

HeckeElem ClosedForms::kl_big_factor(const FamilyTag& tag) {
    if (!is_big(tag.region) || tag.family != Family::Theta)
        throw FormulaError(FormulaErrc::WrongRegion, "kl_big_factor needs a big-region tag, got " + describe(tag));
    const HeckeElem H = kl_theta_hat(tag.m, tag.n);
    const Generator t = t_gen(tag.m), tp = t_gen(tag.m + 1);
    HeckeElem Z;
    switch (tag.yk) {
        case 0: Z = H; break;
        case 1: Z = right(H, t); break;
        case 2: Z = right(right(H, t), 2) - H; break;
        default: Z = right(right(right(H, t), 2), tp) - right(H, t) - right(H, tp); break;
    }
    HeckeElem out;
    switch (tag.xk) {
        case 0: out = Z; break;
        case 1: out = left(0, Z); break;
        case 2: out = left(2, left(0, Z)) - Z; break;
        default: out = left(1, left(2, left(0, Z))) - left(1, Z) - left(0, Z); break;
    }
    return tag.primed ? phi(out) : out;
}

HeckeElem ClosedForms::hat_x(int k) {
    if (k < 2) out_of_range("the x_{3k+1} sum needs k >= 2");
    HeckeElem out = n(thick_element(Family::X, 3 * k + 1));
    out.add_scaled(n(thick_element(Family::X, 3 * k - 2)), 1, 1);
    for (int j = 2; j <= k - 1; ++j) {
        int f = 3 * (k - j) + 1;
        out.add_scaled(n(thick_element(Family::E, f)), 1, j - 1);
        out.add_scaled(n(thick_element(Family::U, f)), 1, j - 1);
    }
    out.add_scaled(n(from_word({1, 0})), 1, k - 1);
    return out;
}

HeckeElem ClosedForms::kl_thick_north(int k, NorthBranch branch) {
    if (k < 2) out_of_range("north thick formulas need k >= 2");
    auto key = std::make_pair(k, int(branch));
    if (auto it = north_cache_.find(key); it != north_cache_.end()) return it->second;
    HeckeElem out;
    auto big = [&](int xk, int m, bool primed = false) -> HeckeElem {
        if (m < 0) return {};
        return big_cached(big_tag(xk, m, 0, 0, primed));
    };
    switch (branch) {
        case NorthBranch::X3k1: out = hat_x(k); break;
        case NorthBranch::X3k2: out = right(kl_thick_north(k, NorthBranch::X3k1), 2); break;
        default: {
            // x_{3k+2} s0 and x_{3k+2} s1: one gives x_{3k+3}, the other xbar_{3k+3}
            bool to_x = branch == NorthBranch::X3k3;
            Generator s = (to_x == (k % 2 == 1)) ? 0 : 1;
            out = right(kl_thick_north(k, NorthBranch::X3k2), s) - kl_thick_north(k, NorthBranch::X3k1);
            if (to_x) {
                out -= big(3, k - 2);
            } else {
                out -= big(0, k - 1);
                out -= big(1, k - 2, true);
                out -= big(0, k - 3);
            }
        }
    }
    north_cache_.emplace(key, out);
    return out;
}

HeckeElem ClosedForms::hat_e(int k, int j) {
    if (k < 1 || j < 1 || j > 3) out_of_range("east sums need k >= 1 and j in 1..3");
    auto E = [](int n, bool p = false) { return thick_element(Family::E, n, p); };
    HeckeElem out;
    switch (j) {
        case 1:
            for (int i = 0; i <= k; ++i) out.add_scaled(n(E(3 * (k - i) + 1)), 1, i);
            break;
        case 2:
            out = n(E(3 * k + 2));
            for (int i = 1; i <= k; ++i) out.add_scaled(n(E(3 * (k - i) + 2)), 2, i);
            break;
        default:
            out = n(E(3 * k + 3));
            out.add_scaled(n(E(3 * k, true)), 1, 1);
            for (int i = 1; i <= k; ++i) {
                out.add_scaled(n(E(3 * (k - i) + 1)), 1, i);
                if (k - i - 1 >= 0) out.add_scaled(n(B(1, k - i - 1, 0, 0, i % 2 == 1)), 1, i);
            }
    }
    return out;
}

HeckeElem ClosedForms::kl_thick_east_west(Family family, int n, bool* fallback) {
    if (family == Family::E) {
        if (n < 4) out_of_range("east formulas need n >= 4");
        if (auto it = east_cache_.find(n); it != east_cache_.end()) return it->second;
        int k = (n - 1) / 3, j = n - 3 * k;
        HeckeElem out = hat_e(k, j);
        east_cache_.emplace(n, out);
        return out;
    }
    if (family == Family::W) {
        if (n < 1) out_of_range("west formulas need n >= 1");
        HeckeElem e;
        if (n >= 4) {
            e = kl_thick_east_west(Family::E, n);
        } else {
            e = oracle_.kl_basis(thick_element(Family::E, n));
            if (fallback) *fallback = true;
        }
        return left(2, e);
    }
    throw std::invalid_argument("kl_thick_east_west takes family e or w");
}

HeckeElem ClosedForms::kl_thick(const FamilyTag& tag, bool* fallback) {
    if (!is_thick(tag.region))
        throw FormulaError(FormulaErrc::WrongRegion, "kl_thick needs a thick-region tag, got " + describe(tag));
    auto use_oracle = [&]() {
        if (fallback) *fallback = true;
        return oracle_.kl_basis(rebuild(tag));
    };
    const int n = tag.n;
    HeckeElem out;
    switch (tag.family) {
        case Family::X:
            if (n < 7) return use_oracle();
            if (n % 3 == 1) out = kl_thick_north((n - 1) / 3, NorthBranch::X3k1);
            else if (n % 3 == 2) out = kl_thick_north((n - 2) / 3, NorthBranch::X3k2);
            else out = kl_thick_north(n / 3 - 1, NorthBranch::X3k3);
            break;
        case Family::XBar:
            if (n < 9) return use_oracle();
            out = kl_thick_north(n / 3 - 1, NorthBranch::XBar3k3);
            break;
        case Family::E:
            if (n < 4) return use_oracle();
            out = kl_thick_east_west(Family::E, n);
            break;
        case Family::W: out = kl_thick_east_west(Family::W, n, fallback); break;
        default: return use_oracle();
    }
    return tag.primed ? phi(out) : out;
}

ClosedResult ClosedForms::kl_closed(const Element& w) {
    ClosedResult r;
    if (w.is_identity()) {
        r.value = HeckeElem::standard(w);
        r.formula = "identity";
        return r;
    }
    auto tag = classify(w);
    if (tag && is_big(tag->region)) {
        r.value = kl_big(*tag);
        r.formula = "big";
        return r;
    }
    if (tag && is_thick(tag->region)) {
        bool fb = false;
        r.value = kl_thick(*tag, &fb);
        r.route = fb ? Route::Fallback : Route::Closed;
        r.formula = fb ? "oracle" : "thick";
        return r;
    }
    r.value = oracle_.kl_basis(w);
    r.route = Route::Fallback;
    r.formula = "oracle";
    return r;
}

LaurentPoly h_xbar_x_closed(int n, int m) {
    if (!(m > n && n >= 2 && m % 2 == 1 && n % 2 == 0))
        throw std::invalid_argument("h_xbar_x_closed needs m > n >= 2, m odd, n even");
    int d = m - n;
    LaurentPoly p = f_poly(d + 1);
    p.add_scaled(f_poly(d - 1), 2, 0);
    p += f_poly(d - 3);
    return p.scale(1, d);
}

std::optional<Element> first_diff(const HeckeElem& X, const HeckeElem& Y) {
    HeckeElem d = X - Y;
    if (d.is_zero()) return std::nullopt;
    return d.support().front();
}

std::vector<ConjectureCheck> check_thin_conjecture(int k, ClosedForms& cf, ThinBoundary boundary) {
    if (k < 1) throw std::invalid_argument("the thin conjecture is stated for k >= 1");
    KLTable& T = cf.oracle();
    auto D = [](int n) { return thin_element(Family::D, n); };
    auto Dbar = [](int n) { return thin_element(Family::DBar, n); };
    // H of a big-region element; negative indices give zero
    auto Hb = [&](int xk, int m, int n, int yk, bool p = false) -> HeckeElem {
        if (m < 0 || n < 0) return {};
        return cf.kl_big(big_tag(xk, m, n, yk, p));
    };
    auto sum = [](int lo, int hi, auto term) {
        HeckeElem s;
        for (int i = lo; i <= hi; ++i) s += term(i);
        return s;
    };

    std::vector<ConjectureCheck> out;
    auto record = [&](const std::string& name, const HeckeElem& lhs, const HeckeElem& rhs) {
        ConjectureCheck c;
        c.identity = name;
        c.k = k;
        c.diff_at = first_diff(lhs, rhs);
        c.holds = !c.diff_at;
        if (c.diff_at) {
            c.lhs = lhs.coeff(*c.diff_at);
            c.rhs = rhs.coeff(*c.diff_at);
        }
        out.push_back(std::move(c));
    };

    {
        HeckeElem rhs = cf.n(D(4 * k + 3));
        HeckeElem trunc;
        if (k >= 2) trunc = truncated_n(theta(0, k - 1), B(2, 0, k - 2, 2, true)).realized;
        else if (boundary == ThinBoundary::EmptyCut) trunc = cf.n(theta(0, 0));
        else if (boundary == ThinBoundary::Formal) {
            Element theta_m1 = theta(0, 0) * inverse(from_word({0, 2, 1, 2}));
            Element z = from_word({2, 1}) * phi(theta_m1) * from_word({1, 2});
            trunc = truncated_n(theta(0, 0), z).realized;
        }
        rhs += kV * trunc;
        rhs += LaurentPoly{{1, 1}, {3, 1}} * Hb(0, 0, k - 2, 0);
        rhs += kV * cf.kl_closed(thick_element(Family::W, 2)).value;
        rhs += kV * sum(3, k, [&](int i) { return Hb(0, 0, k - i, 0) + Hb(0, 0, k - i, 0, true); });
        rhs += kV * sum(2, k, [&](int i) {
            return u_elem(B(2, 0, k - i, 2, true)) + u_elem(B(0, 0, k - i, 2)) + Hb(2, 0, k - i, 0) +
                   Hb(2, 0, k - i, 0, true);
        });
        record("thin-1", T.kl_basis(D(4 * k + 3)), rhs);
    }

    auto H = [&](const Element& w) { return T.kl_basis(w); };
    record("thin-2a", right(H(D(4 * k)), 2),
           H(D(4 * k + 1)) + H(D(4 * k - 1)) + sum(0, k - 2, [&](int i) { return Hb(0, 1, i, 0); }) +
               sum(0, k - 3, [&](int i) { return Hb(2, 1, i, 0); }));
    record("thin-2b", right(H(D(4 * k + 1)), 1),
           H(D(4 * k + 2)) + sum(0, k - 2, [&](int i) { return Hb(0, 0, i, 0); }) +
               sum(0, k - 3, [&](int i) { return Hb(2, 0, i, 0); }));
    record("thin-2c", right(H(D(4 * k + 2)), 2),
           H(D(4 * k + 3)) + H(D(4 * k + 1)) + sum(0, k - 2, [&](int i) { return Hb(2, 1, i, 0, true); }) +
               sum(0, k - 3, [&](int i) { return Hb(0, 1, i, 0, true); }));
    record("thin-2d", right(H(D(4 * k + 3)), 0),
           H(D(4 * k + 4)) + sum(0, k - 2, [&](int i) { return Hb(2, 0, i, 0, true); }) +
               sum(0, k - 3, [&](int i) { return Hb(0, 0, i, 0, true); }));

    record("thin-3a", left(0, H(D(4 * k))),
           H(Dbar(4 * k)) + sum(0, k - 3, [&](int i) { return Hb(0, 0, i, 3, true) + Hb(0, 0, i, 1, true); }));
    record("thin-3b", left(0, H(D(4 * k + 1))),
           H(Dbar(4 * k + 1)) + sum(0, k - 2, [&](int i) { return Hb(0, 0, i, 0, true); }) +
               sum(0, k - 3, [&](int i) { return Hb(0, 0, i, 2, true); }));
    record("thin-3c", left(0, H(D(4 * k + 2))),
           H(Dbar(4 * k + 2)) + Hb(0, 0, k - 2, 1, true) + sum(0, k - 3, [&](int i) {
               HeckeElem t = Hb(0, 0, i, 1, true);
               t += t;
               return t + Hb(0, 1, i, 0, true);
           }));
    record("thin-3d", left(0, H(D(4 * k + 3))),
           H(Dbar(4 * k + 3)) + sum(0, k - 2, [&](int i) { return Hb(0, 0, i, 2, true); }) +
               sum(0, k - 3, [&](int i) { return Hb(0, 0, i, 0, true); }));
    return out;
}

}  // namespace klb2
