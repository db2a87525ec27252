#include "klb2/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace klb2 {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) terms_.push_back({0, Integer(c)});
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
    for (auto [e, c] : terms) *this += monomial(e, c);
}

LaurentPoly LaurentPoly::monomial(int exp, Integer coeff) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.push_back({exp, std::move(coeff)});
    return p;
}

Integer LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
}

int LaurentPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().exp; }
int LaurentPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().exp; }

// merge c*v^shift*q into *this
void LaurentPoly::add_scaled(const LaurentPoly& q, const Integer& c, int shift) {
    if (q.terms_.empty() || c == 0) return;
    if (&q == this) {
        LaurentPoly copy = q;
        add_scaled(copy, c, shift);
        return;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    auto a = terms_.begin();
    auto b = q.terms_.begin();
    while (a != terms_.end() || b != q.terms_.end()) {
        if (b == q.terms_.end() || (a != terms_.end() && a->exp < b->exp + shift)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp + shift < a->exp) {
            out.push_back({b->exp + shift, b->coeff * c});
            ++b;
        } else {
            Integer s = a->coeff + b->coeff * c;
            if (s != 0) out.push_back({a->exp, std::move(s)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    add_scaled(q, 1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    add_scaled(q, -1, 0);
    return *this;
}

LaurentPoly& LaurentPoly::scale(const Integer& c, int shift) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.exp += shift;
        if (c != 1) t.coeff *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    if (p.size() == 1) return LaurentPoly(q).scale(p.terms_[0].coeff, p.terms_[0].exp);
    if (q.size() == 1) return LaurentPoly(p).scale(q.terms_[0].coeff, q.terms_[0].exp);
    std::map<int, Integer> acc;
    for (const auto& a : p.terms_)
        for (const auto& b : q.terms_) acc[a.exp + b.exp] += a.coeff * b.coeff;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) { return *this = *this * q; }

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Integer c = t.coeff;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (c < 0) c = -c;
        first = false;
        if (t.exp == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << "v";
        if (t.exp != 1) os << "^" << t.exp;
    }
    return os.str();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly r;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        r += LaurentPoly::monomial(-it->exp, it->coeff);
    return r;
}

LaurentPoly f_poly(int l) {
    LaurentPoly r;
    for (int i = 0; i < l; ++i) r += LaurentPoly::monomial(2 * i);
    return r;
}

bool is_nonneg(const LaurentPoly& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const LaurentPoly::Term& t) { return t.coeff > 0; });
}

Integer eval_at_one(const LaurentPoly& p) {
    Integer s = 0;
    for (const auto& t : p.terms()) s += t.coeff;
    return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace klb2
