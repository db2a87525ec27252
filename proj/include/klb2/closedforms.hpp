#pragma once

#include "klb2/families.hpp"
#include "klb2/hecke.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace klb2 {

using SuppSet = std::set<std::pair<int, int>>;

// Support of the theta sum: (m-2i, n-j) in N^2, and for even m the pairs
// (0,b) with b of the wrong parity removed.
SuppSet supp(int m, int n);

// sum over w <= x, w not <= z of v^(l(x)-l(w)) H_w
struct TruncatedN {
    Element top;
    Element cut;
    HeckeElem realized;
};
TruncatedN truncated_n(const Element& x, const Element& z);
// N_x + D_{x'}^x
HeckeElem u_elem(const Element& x);

enum class NorthBranch { X3k1, X3k2, X3k3, XBar3k3 };

enum class Route { Closed, Fallback };

struct ClosedResult {
    HeckeElem value;
    Route route = Route::Closed;
    // short name of the formula that served the query
    std::string formula;
};

// Closed formulas for the big and thick regions.  Every entry point is
// memoized; the oracle table serves fallbacks and the thin conjecture's
// left-hand sides.
class ClosedForms {
public:
    explicit ClosedForms(KLTable& oracle) : oracle_(oracle) {}

    KLTable& oracle() { return oracle_; }
    const HeckeElem& n(const Element& w);

    HeckeElem kl_theta_hat(int m, int n);
    // solving chain: right suffix first, then the left prefix, then phi
    HeckeElem kl_big(const FamilyTag& tag);
    // X * H_theta * Y with the factor table of the introduction
    HeckeElem kl_big_factor(const FamilyTag& tag);
    HeckeElem kl_thick_north(int k, NorthBranch branch);
    // family E needs n >= 4; family W uses the oracle for e_n when n < 4
    HeckeElem kl_thick_east_west(Family family, int n, bool* fallback = nullptr);
    HeckeElem kl_thick(const FamilyTag& tag, bool* fallback = nullptr);
    ClosedResult kl_closed(const Element& w);

    // N-sum for x_{3k+1}; equals kl_thick_north(k, X3k1) for k >= 2
    HeckeElem hat_x(int k);
    // east sums for e_{3k+j}, k >= 1
    HeckeElem hat_e(int k, int j);

private:
    const HeckeElem& big_cached(const FamilyTag& tag);

    KLTable& oracle_;
    std::unordered_map<Element, HeckeElem, ElementHash> n_cache_;
    std::unordered_map<Element, HeckeElem, ElementHash> big_cache_;
    std::map<std::pair<int, int>, HeckeElem> theta_cache_;
    std::map<std::pair<int, int>, HeckeElem> north_cache_;
    std::map<int, HeckeElem> east_cache_;
};

// v^(m-n) (F_{m-n+1} + 2F_{m-n-1} + F_{m-n-3}) for m > n >= 2, m odd, n even
LaurentPoly h_xbar_x_closed(int n, int m);

// one conjectured thin-region identity at one k
struct ConjectureCheck {
    std::string identity;
    int k = 0;
    bool holds = false;
    // first differing coefficient when the identity fails
    std::optional<Element> diff_at;
    LaurentPoly lhs;
    LaurentPoly rhs;
};

// How the k = 1 boundary term D_{theta(0,0)}^z of the first identity is
// read, since z involves theta'(0,-1).  Formal extends theta(0,n) = a s2 d^n
// to n = -1 as a group element (theta(0,-1) = s1 s0); EmptyCut drops the cut
// and ZeroTerm drops the whole term.
enum class ThinBoundary { Formal, EmptyCut, ZeroTerm };

std::vector<ConjectureCheck> check_thin_conjecture(int k, ClosedForms& cf,
                                                   ThinBoundary boundary = ThinBoundary::Formal);

// first element (by length, then word) where X and Y differ
std::optional<Element> first_diff(const HeckeElem& X, const HeckeElem& Y);

}  // namespace klb2
