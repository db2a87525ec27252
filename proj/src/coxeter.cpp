#include "klb2/coxeter.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace klb2 {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_gen(Generator s) {
    if (s < 0 || s > 2) throw std::invalid_argument("generator index must be 0, 1 or 2");
}

const std::array<Element, 3> kGens = [] {
    std::array<Element, 3> g;
    g[0] = Element{{0, -1, -1, 0}, 2, 2};
    g[1] = Element{{0, 1, 1, 0}, 0, 0};
    g[2] = Element{{1, 0, 0, -1}, 0, 0};
    return g;
}();

// reflection in x = 1; it preserves the fundamental alcove and swaps the
// s0 and s1 walls
const Element kSigma{{-1, 0, 0, 1}, 2, 0};

}  // namespace

std::vector<Generator> GenSet::list() const {
    std::vector<Generator> out;
    for (Generator s = 0; s < 3; ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

Element Element::generator(Generator s) {
    check_gen(s);
    return kGens[s];
}

Element Element::operator*(const Element& o) const {
    Element r;
    r.a[0] = std::int8_t(a[0] * o.a[0] + a[1] * o.a[2]);
    r.a[1] = std::int8_t(a[0] * o.a[1] + a[1] * o.a[3]);
    r.a[2] = std::int8_t(a[2] * o.a[0] + a[3] * o.a[2]);
    r.a[3] = std::int8_t(a[2] * o.a[1] + a[3] * o.a[3]);
    r.tx = a[0] * o.tx + a[1] * o.ty + tx;
    r.ty = a[2] * o.tx + a[3] * o.ty + ty;
    return r;
}

std::array<std::int64_t, 2> Element::map_scaled(std::int64_t X, std::int64_t Y) const {
    return {a[0] * X + a[1] * Y + 3 * std::int64_t(tx), a[2] * X + a[3] * Y + 3 * std::int64_t(ty)};
}

std::size_t ElementHash::operator()(const Element& w) const noexcept {
    std::uint64_t h = 0;
    for (auto c : w.a) h = h * 3 + std::uint64_t(c + 1);
    h ^= std::uint64_t(std::uint32_t(w.tx)) * 0x9E3779B97F4A7C15ull;
    h ^= std::uint64_t(std::uint32_t(w.ty)) * 0xC2B2AE3D27D4EB4Full;
    h ^= h >> 29;
    return std::size_t(h * 0xBF58476D1CE4E5B9ull);
}

Element apply_gen(const Element& w, Generator s, Side side) {
    check_gen(s);
    return side == Side::Right ? w * kGens[s] : kGens[s] * w;
}

Element from_word(const Word& u) {
    Element w;
    for (Generator s : u) w = apply_gen(w, s, Side::Right);
    return w;
}

Element inverse(const Element& w) {
    Element r;
    r.a = {w.a[0], w.a[2], w.a[1], w.a[3]};
    r.tx = -(r.a[0] * w.tx + r.a[1] * w.ty);
    r.ty = -(r.a[2] * w.tx + r.a[3] * w.ty);
    return r;
}

Element phi(const Element& w) { return kSigma * w * kSigma; }

// Reflecting lines in scaled coordinates are X, Y, X+Y, X-Y in 6Z; the
// fundamental sample (3,1) sits in the cell with all four floors zero.
int length(const Element& w) {
    auto [X, Y] = w.sample();
    std::int64_t n = 0;
    for (std::int64_t f : {X, Y, X + Y, X - Y}) n += std::abs(floor_div(f, 6));
    return int(n);
}

bool is_descent(const Element& w, Generator s, Side side) {
    check_gen(s);
    if (side == Side::Right) return is_descent(inverse(w), s, Side::Left);
    auto [X, Y] = w.sample();
    switch (s) {
        case 0: return X + Y > 6;
        case 1: return X - Y < 0;
        default: return Y < 0;
    }
}

GenSet descents(const Element& w, Side side) {
    Element u = side == Side::Right ? inverse(w) : w;
    GenSet d;
    for (Generator s = 0; s < 3; ++s)
        if (is_descent(u, s, Side::Left)) d.insert(s);
    return d;
}

int length_by_stripping(const Element& w) {
    Element u = w;
    int n = 0;
    while (!u.is_identity()) {
        GenSet d = descents(u, Side::Left);
        if (d.bits == 0) throw std::logic_error("non-identity element without descents");
        u = apply_gen(u, d.list().back(), Side::Left);
        ++n;
    }
    return n;
}

Word canonical_word(const Element& w) {
    Word out;
    Element u = w;
    while (!u.is_identity()) {
        GenSet d = descents(u, Side::Left);
        Generator s = d.list().front();
        out.push_back(s);
        u = apply_gen(u, s, Side::Left);
    }
    return out;
}

bool is_reduced(const Word& u) { return length(from_word(u)) == int(u.size()); }

bool bruhat_leq(const Element& x0, const Element& w0) {
    Element x = x0, w = w0;
    int lx = length(x), lw = length(w);
    while (true) {
        if (lx > lw) return false;
        if (x.is_identity()) return true;
        if (lx == lw) return x == w;
        GenSet dw = descents(w, Side::Left);
        Generator s = dw.list().front();
        w = apply_gen(w, s, Side::Left);
        --lw;
        if (is_descent(x, s, Side::Left)) {
            x = apply_gen(x, s, Side::Left);
            --lx;
        }
    }
}

std::vector<Element> lower_interval(const Element& w) {
    std::vector<Element> out{Element::identity()};
    std::vector<Element> level{Element::identity()};
    int lw = length(w);
    for (int k = 0; k < lw; ++k) {
        std::unordered_set<Element, ElementHash> next;
        for (const auto& y : level)
            for (Generator s = 0; s < 3; ++s) {
                if (is_descent(y, s, Side::Right)) continue;
                Element z = apply_gen(y, s, Side::Right);
                if (!next.count(z) && bruhat_leq(z, w)) next.insert(z);
            }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Element> coatoms(const Element& w) {
    Word u = canonical_word(w);
    if (u.empty()) throw std::invalid_argument("coatoms of the identity are undefined");
    std::vector<Element> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Word d = u;
        d.erase(d.begin() + std::ptrdiff_t(i));
        Element y = from_word(d);
        if (length(y) + 1 == int(u.size())) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<Element>> ball(int radius) {
    std::vector<std::vector<Element>> levels;
    if (radius < 0) return levels;
    levels.push_back({Element::identity()});
    for (int k = 0; k < radius; ++k) {
        std::unordered_set<Element, ElementHash> next;
        for (const auto& y : levels.back())
            for (Generator s = 0; s < 3; ++s)
                if (!is_descent(y, s, Side::Right)) next.insert(apply_gen(y, s, Side::Right));
        std::vector<Element> lv(next.begin(), next.end());
        std::sort(lv.begin(), lv.end(), shortlex_less);
        levels.push_back(std::move(lv));
    }
    return levels;
}

Word parse_word(std::string_view text, char sep) {
    Word u;
    for (char c : text) {
        if (sep != '\0' && c == sep) continue;
        if (c < '0' || c > '2')
            throw std::invalid_argument("bad word '" + std::string(text) + "': letters must be 0, 1 or 2");
        u.push_back(c - '0');
    }
    return u;
}

std::string word_str(const Word& u) {
    std::string s;
    for (Generator g : u) s.push_back(char('0' + g));
    return s;
}

Word swap01(Word u) {
    for (auto& g : u)
        if (g != 2) g = 1 - g;
    return u;
}

std::string str(const Element& w) { return word_str(canonical_word(w)); }

bool shortlex_less(const Element& x, const Element& y) {
    int lx = length(x), ly = length(y);
    if (lx != ly) return lx < ly;
    return canonical_word(x) < canonical_word(y);
}

}  // namespace klb2
