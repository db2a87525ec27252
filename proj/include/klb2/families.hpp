#pragma once

#include "klb2/coxeter.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klb2 {

enum class Region {
    Identity,
    BigC,
    BigPhiC,
    ThickNorth,
    ThickSouth,
    ThickEast,
    ThickWest,
    ThinNW,
    ThinSW,
    ThinNE,
    ThinSE,
};

enum class Family { Identity, Theta, X, XBar, E, U, W, Sporadic, D, DBar };

// Named element.  For the big region the element is
//   phi^primed( prefix(xk) * theta(m,n) * suffix(yk) )
// with prefix(0..3) = 1, s0, s2s0, s1s2s0 and
// suffix(0..3) = 1, t_m, t_m s2, t_m s2 t'_m.
// Thick and thin tags use n as the index.  Sporadic west elements
// s2, s2s1, s2s0 use n = 0, 1, 2.
struct FamilyTag {
    Region region = Region::Identity;
    Family family = Family::Identity;
    int m = 0;
    int n = 0;
    int xk = 0;
    int yk = 0;
    bool primed = false;

    bool operator==(const FamilyTag&) const = default;
};

enum class FormulaErrc { NoFormula, FormulaOutOfRange, WrongRegion };

class FormulaError : public std::runtime_error {
public:
    FormulaError(FormulaErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    FormulaErrc code() const { return code_; }

private:
    FormulaErrc code_;
};

Generator t_gen(int m);
Word theta_word(int m, int n);
Element theta(int m, int n);
// prefix(xk) theta(m,n) suffix(yk), phi applied when primed
Element big_element(int xk, int m, int n, int yk, bool primed = false);
Word thick_word(Family f, int n);
Element thick_element(Family f, int n, bool primed = false);
Word thin_word(Family f, int n);
Element thin_element(Family f, int n, bool primed = false);

FamilyTag big_tag(int xk, int m, int n, int yk, bool primed = false);
FamilyTag thick_tag(Family f, int n, bool primed = false);
FamilyTag thin_tag(Family f, int n, bool primed = false);

// Preferred reduced word of the tagged element.
Word tag_word(const FamilyTag& tag);
Element rebuild(const FamilyTag& tag);

std::optional<FamilyTag> classify(const Element& w);
// every tag whose rebuild equals w; used to check that families do not overlap
std::vector<FamilyTag> classify_all(const Element& w);

bool is_big(Region r);
bool is_thick(Region r);
bool is_thin(Region r);

long long interval_size(const FamilyTag& tag);
std::vector<Element> coatom_formula(const FamilyTag& tag);
// the word with the given 1-based positions removed, one at a time
std::vector<Element> single_deletions(const Word& u, const std::vector<int>& positions);

std::string region_name(Region r);
std::string family_name(Family f);
std::string prefix_name(int xk);
std::string suffix_name(int yk);
// human readable, e.g. "s0 theta(2,1) t s2" or "x'_7"
std::string describe(const FamilyTag& tag);

}  // namespace klb2
