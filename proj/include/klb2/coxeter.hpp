#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace klb2 {

// Generators are the integers 0, 1, 2 naming s0, s1, s2.
using Generator = int;
using Word = std::vector<Generator>;

enum class Side { Left, Right };

// Small bitset over {s0, s1, s2}.
struct GenSet {
    std::uint8_t bits = 0;
    bool contains(Generator s) const { return (bits >> s) & 1; }
    void insert(Generator s) { bits |= std::uint8_t(1u << s); }
    bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
    int size() const { return __builtin_popcount(bits); }
    std::vector<Generator> list() const;
    bool operator==(const GenSet&) const = default;
};

// Affine isometry p -> A p + t of the plane, with the fundamental alcove
// (0,0), (2,0), (1,1).  A is a signed permutation matrix.
struct Element {
    std::array<std::int8_t, 4> a{1, 0, 0, 1};  // row major
    std::int32_t tx = 0;
    std::int32_t ty = 0;

    static Element identity() { return {}; }
    static Element generator(Generator s);

    bool is_identity() const { return *this == Element{}; }
    bool operator==(const Element&) const = default;
    auto operator<=>(const Element&) const = default;

    // composition: (*this)(o(p))
    Element operator*(const Element& o) const;

    // image of a point given in 3x-scaled coordinates
    std::array<std::int64_t, 2> map_scaled(std::int64_t X, std::int64_t Y) const;
    // image of the alcove centroid, 3x-scaled
    std::array<std::int64_t, 2> sample() const { return map_scaled(3, 1); }
};

struct ElementHash {
    std::size_t operator()(const Element& w) const noexcept;
};

Element apply_gen(const Element& w, Generator s, Side side);
Element from_word(const Word& u);
Element inverse(const Element& w);
Element phi(const Element& w);
int length(const Element& w);
// length by repeatedly stripping left descents; slower, used as a cross-check
int length_by_stripping(const Element& w);
GenSet descents(const Element& w, Side side);
bool is_descent(const Element& w, Generator s, Side side);
Word canonical_word(const Element& w);
bool is_reduced(const Word& u);

bool bruhat_leq(const Element& x, const Element& w);
// sorted by length, ties broken by the Element ordering
std::vector<Element> lower_interval(const Element& w);
std::vector<Element> coatoms(const Element& w);
// all elements of length <= radius, grouped by length
std::vector<std::vector<Element>> ball(int radius);

// Word text: digits over {0,1,2}; with sep, tokens between separators.
Word parse_word(std::string_view text, char sep = '\0');
std::string word_str(const Word& u);
Word swap01(Word u);
inline Element elt(std::string_view text) { return from_word(parse_word(text)); }
std::string str(const Element& w);

// Ordering by (length, canonical word).
bool shortlex_less(const Element& x, const Element& y);

}  // namespace klb2

template <>
struct std::hash<klb2::Element> : klb2::ElementHash {};
