#include "klb2/hecke.hpp"

#include <algorithm>

namespace klb2 {

namespace {

const LaurentPoly kZero;

}  // namespace

HeckeElem HeckeElem::standard(const Element& w, LaurentPoly c) {
    HeckeElem X;
    X.add_term(w, c);
    return X;
}

const LaurentPoly& HeckeElem::coeff(const Element& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? kZero : it->second;
}

std::vector<Element> HeckeElem::support() const {
    std::vector<std::pair<std::pair<int, Word>, Element>> keyed;
    keyed.reserve(terms_.size());
    for (const auto& [w, p] : terms_) keyed.push_back({{length(w), canonical_word(w)}, w});
    std::sort(keyed.begin(), keyed.end());
    std::vector<Element> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(k.second);
    return out;
}

void HeckeElem::add_term(const Element& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElem::add_scaled(const HeckeElem& X, const Integer& c, int shift) {
    if (&X == this) {
        HeckeElem copy = X;
        add_scaled(copy, c, shift);
        return;
    }
    for (const auto& [w, p] : X.terms_) {
        auto [it, fresh] = terms_.try_emplace(w);
        it->second.add_scaled(p, c, shift);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& X) {
    add_scaled(X, 1);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& X) {
    add_scaled(X, -1);
    return *this;
}

HeckeElem& HeckeElem::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, p] : terms_) p = p * c;
    return *this;
}

HeckeElem HeckeElem::operator-() const {
    HeckeElem X = *this;
    for (auto& [w, p] : X.terms_) p = -p;
    return X;
}

HeckeElem mul_gen(const HeckeElem& X, Generator s, Side side) {
    HeckeElem out;
    const LaurentPoly q = LaurentPoly{{-1, 1}, {1, -1}};
    for (const auto& [w, p] : X.terms()) {
        Element ws = apply_gen(w, s, side);
        out.add_term(ws, p);
        if (is_descent(w, s, side)) out.add_term(w, p * q);
    }
    return out;
}

HeckeElem mul_kl_gen(const HeckeElem& X, Generator s, Side side) {
    HeckeElem out;
    for (const auto& [w, p] : X.terms()) {
        out.add_term(apply_gen(w, s, side), p);
        out.add_term(w, LaurentPoly(p).scale(1, is_descent(w, s, side) ? -1 : 1));
    }
    return out;
}

HeckeElem mul_kl_word(HeckeElem X, const Word& u, Side side) {
    if (side == Side::Right) {
        for (Generator s : u) X = mul_kl_gen(X, s, side);
    } else {
        for (auto it = u.rbegin(); it != u.rend(); ++it) X = mul_kl_gen(X, *it, side);
    }
    return X;
}

namespace {

// d(H_w) = d(H_{ws}) (H_s + v - v^-1) for s a right descent of w
const HeckeElem& bar_standard(const Element& w) {
    thread_local std::unordered_map<Element, HeckeElem, ElementHash> cache;
    if (auto it = cache.find(w); it != cache.end()) return it->second;
    HeckeElem r;
    if (w.is_identity()) {
        r = HeckeElem::standard(w);
    } else {
        Generator s = descents(w, Side::Right).list().front();
        HeckeElem prev = bar_standard(apply_gen(w, s, Side::Right));
        r = mul_gen(prev, s, Side::Right);
        r.add_scaled(prev, 1, 1);
        r.add_scaled(prev, -1, -1);
    }
    return cache.emplace(w, std::move(r)).first->second;
}

}  // namespace

HeckeElem bar(const HeckeElem& X) {
    HeckeElem out;
    for (const auto& [w, p] : X.terms()) {
        LaurentPoly bp = bar(p);
        const HeckeElem& d = bar_standard(w);
        for (const auto& [x, q] : d.terms()) out.add_term(x, bp * q);
    }
    return out;
}

HeckeElem phi(const HeckeElem& X) {
    HeckeElem out;
    for (const auto& [w, p] : X.terms()) out.add_term(phi(w), p);
    return out;
}

HeckeElem n_elem(const Element& w) {
    HeckeElem out;
    int lw = length(w);
    for (const auto& x : lower_interval(w)) out.add_term(x, LaurentPoly::v(lw - length(x)));
    return out;
}

LaurentPoly g_coeff(const Element& w, const HeckeElem& X) { return X.coeff(w); }

Integer content(const HeckeElem& X) {
    Integer c = 0;
    for (const auto& [w, p] : X.terms()) c += eval_at_one(p);
    return c;
}

bool h_geq(const HeckeElem& X, const HeckeElem& Y) {
    HeckeElem d = X - Y;
    return std::all_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return is_nonneg(t.second); });
}

// Checking G_y >= v G_x on covering pairs y <. x suffices: the general
// inequality follows along a maximal chain.
bool is_monotonic(const HeckeElem& X, const Element& w) {
    if (!(X.coeff(w) == LaurentPoly(1))) return false;
    for (const auto& [x, p] : X.terms()) {
        if (!is_nonneg(p)) return false;
        if (!bruhat_leq(x, w)) return false;
    }
    const LaurentPoly v = LaurentPoly::v();
    for (const auto& x : lower_interval(w)) {
        if (x.is_identity()) continue;
        const LaurentPoly& gx = X.coeff(x);
        for (const auto& y : coatoms(x))
            if (!is_nonneg(X.coeff(y) - v * gx)) return false;
    }
    return true;
}

HeckeElem KLTable::compute(const Element& w, Generator s) {
    Element ws = apply_gen(w, s, Side::Right);
    const HeckeElem& prev = memo_.at(ws);
    HeckeElem out = mul_kl_gen(prev, s, Side::Right);
    for (const auto& [x, p] : prev.terms()) {
        if (x == ws) continue;
        Integer m = p.coeff(1);
        if (m == 0 || !is_descent(x, s, Side::Right)) continue;
        out.add_scaled(memo_.at(x), -m);
    }
    return out;
}

const HeckeElem& KLTable::kl_basis(const Element& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    // Fill the whole lower interval in length order so every term the
    // recursion needs is already present.
    for (const auto& y : lower_interval(w)) {
        if (memo_.count(y)) continue;
        if (y.is_identity()) {
            memo_.emplace(y, HeckeElem::standard(y));
            continue;
        }
        Generator s = descents(y, Side::Right).list().front();
        memo_.emplace(y, compute(y, s));
    }
    return memo_.at(w);
}

HeckeElem KLTable::step(const Element& w, Generator s) {
    if (!is_descent(w, s, Side::Right)) throw std::invalid_argument("pivot must be a right descent");
    kl_basis(apply_gen(w, s, Side::Right));
    return compute(w, s);
}

void KLTable::fill_to_length(int n) {
    for (const auto& level : ball(n))
        for (const auto& w : level) kl_basis(w);
}

const HeckeElem* KLTable::find(const Element& w) const {
    auto it = memo_.find(w);
    return it == memo_.end() ? nullptr : &it->second;
}

LaurentPoly KLTable::h_poly(const Element& x, const Element& w) { return kl_basis(w).coeff(x); }

Integer KLTable::mu(const Element& x, const Element& w) { return h_poly(x, w).coeff(1); }

const HeckeElem& kl_basis(const Element& w, KLTable& table) { return table.kl_basis(w); }
LaurentPoly h_poly(const Element& x, const Element& w, KLTable& table) { return table.h_poly(x, w); }
Integer mu(const Element& x, const Element& w, KLTable& table) { return table.mu(x, w); }

}  // namespace klb2
