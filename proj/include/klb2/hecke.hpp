#pragma once

#include "klb2/coxeter.hpp"
#include "klb2/laurent.hpp"

#include <unordered_map>
#include <utility>
#include <vector>

namespace klb2 {

// Element of the Hecke algebra in the standard basis {H_w}.
class HeckeElem {
public:
    using Map = std::unordered_map<Element, LaurentPoly, ElementHash>;

    HeckeElem() = default;
    static HeckeElem standard(const Element& w, LaurentPoly c = 1);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // coefficient of H_w, zero if absent
    const LaurentPoly& coeff(const Element& w) const;
    // support sorted by (length, canonical word)
    std::vector<Element> support() const;

    void add_term(const Element& w, const LaurentPoly& c);
    // *this += c * v^shift * X
    void add_scaled(const HeckeElem& X, const Integer& c, int shift = 0);
    HeckeElem& operator+=(const HeckeElem& X);
    HeckeElem& operator-=(const HeckeElem& X);
    HeckeElem& operator*=(const LaurentPoly& c);
    HeckeElem operator-() const;

    friend HeckeElem operator+(HeckeElem X, const HeckeElem& Y) { return X += Y; }
    friend HeckeElem operator-(HeckeElem X, const HeckeElem& Y) { return X -= Y; }
    friend HeckeElem operator*(const LaurentPoly& c, HeckeElem X) { return X *= c; }
    friend HeckeElem operator*(HeckeElem X, const LaurentPoly& c) { return X *= c; }
    bool operator==(const HeckeElem& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

// X * H_s or H_s * X
HeckeElem mul_gen(const HeckeElem& X, Generator s, Side side);
// X * (H_s + v) or (H_s + v) * X
HeckeElem mul_kl_gen(const HeckeElem& X, Generator s, Side side);
// successive right (left) multiplication by H̲_s for s in the word
HeckeElem mul_kl_word(HeckeElem X, const Word& u, Side side);
HeckeElem bar(const HeckeElem& X);
HeckeElem phi(const HeckeElem& X);

HeckeElem n_elem(const Element& w);
LaurentPoly g_coeff(const Element& w, const HeckeElem& X);
Integer content(const HeckeElem& X);
bool h_geq(const HeckeElem& X, const HeckeElem& Y);
bool is_monotonic(const HeckeElem& X, const Element& w);

// Memoized KL basis.  Population is single-threaded; once filled, const
// lookups through find() may be shared.
class KLTable {
public:
    const HeckeElem& kl_basis(const Element& w);
    LaurentPoly h_poly(const Element& x, const Element& w);
    Integer mu(const Element& x, const Element& w);
    const HeckeElem* find(const Element& w) const;
    std::size_t size() const { return memo_.size(); }
    // One recursion step for w using right descent s as pivot; the result
    // must not depend on s.
    HeckeElem step(const Element& w, Generator s);
    // fill the table for every element of length <= n
    void fill_to_length(int n);

private:
    HeckeElem compute(const Element& w, Generator s);
    std::unordered_map<Element, HeckeElem, ElementHash> memo_;
};

const HeckeElem& kl_basis(const Element& w, KLTable& table);
LaurentPoly h_poly(const Element& x, const Element& w, KLTable& table);
Integer mu(const Element& x, const Element& w, KLTable& table);

}  // namespace klb2
