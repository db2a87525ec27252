#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace klb2 {

using Integer = boost::multiprecision::cpp_int;

// Element of Z[v, v^-1].  Terms are kept sorted by exponent with no zero
// coefficients, so equality is plain vector equality.
class LaurentPoly {
public:
    struct Term {
        int exp;
        Integer coeff;
        bool operator==(const Term&) const = default;
    };

    LaurentPoly() = default;
    LaurentPoly(long long c);  // NOLINT: constants convert implicitly
    LaurentPoly(std::initializer_list<std::pair<int, long long>> terms);

    static LaurentPoly monomial(int exp, Integer coeff = 1);
    static LaurentPoly v(int exp = 1) { return monomial(exp); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Integer coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;

    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);
    // multiply by c * v^shift in place
    LaurentPoly& scale(const Integer& c, int shift = 0);
    LaurentPoly operator-() const;
    // *this += c * v^shift * q
    void add_scaled(const LaurentPoly& q, const Integer& c, int shift = 0);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    bool operator==(const LaurentPoly&) const = default;

    std::string str() const;

private:
    std::vector<Term> terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly bar(const LaurentPoly& p);
// F_l = 1 + v^2 + ... + v^(2l-2); zero for l <= 0
LaurentPoly f_poly(int l);
bool is_nonneg(const LaurentPoly& p);
Integer eval_at_one(const LaurentPoly& p);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace klb2
