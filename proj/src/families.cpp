#include "klb2/families.hpp"

#include <algorithm>
#include <sstream>

namespace klb2 {

namespace {

const Word kA{1, 2, 1}, kB{0, 2, 0}, kC{1, 2, 0, 2}, kD{0, 2, 1, 2};
const Word kXSeq{1, 2, 1, 0, 2, 0};
const Word kDSeq{2, 1, 2, 0};

void append(Word& u, const Word& v) { u.insert(u.end(), v.begin(), v.end()); }

Word prefix_word(int xk) {
    switch (xk) {
        case 0: return {};
        case 1: return {0};
        case 2: return {2, 0};
        case 3: return {1, 2, 0};
    }
    throw std::invalid_argument("big-region prefix index must be 0..3");
}

Word suffix_word(int yk, int m) {
    Generator t = t_gen(m), tp = t_gen(m + 1);
    switch (yk) {
        case 0: return {};
        case 1: return {t};
        case 2: return {t, 2};
        case 3: return {t, 2, tp};
    }
    throw std::invalid_argument("big-region suffix index must be 0..3");
}

Word maybe_swap(Word u, bool primed) { return primed ? swap01(std::move(u)) : u; }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

[[noreturn]] void out_of_range(const FamilyTag& tag) {
    throw FormulaError(FormulaErrc::FormulaOutOfRange, "no formula in range for " + describe(tag));
}

[[noreturn]] void no_formula(const FamilyTag& tag) {
    throw FormulaError(FormulaErrc::NoFormula, "no closed formula for " + describe(tag));
}

Element B(int xk, int m, int n, int yk, bool primed = false) { return big_element(xk, m, n, yk, primed); }
Element X(int n, bool primed = false) { return thick_element(Family::X, n, primed); }
Element XBar(int n) { return thick_element(Family::XBar, n); }
Element E(int n, bool primed = false) { return thick_element(Family::E, n, primed); }
Element Wl(int n) { return thick_element(Family::W, n); }

std::vector<Element> theta_coatoms(int m, int n, int yk) {
    switch (yk) {
        case 0:
            return {B(2, m - 1, n, 0, true), B(0, m - 1, n, 2), B(3, m, n - 1, 0), B(0, m, n - 1, 3)};
        case 1:
            return {B(2, m - 1, n, 1, true), B(0, m - 1, n, 3), B(3, m, n - 1, 1), B(0, m + 1, n - 1, 1),
                    B(0, m, n, 0)};
        case 2:
            return {B(2, m - 1, n, 2, true), B(0, m - 1, n + 1, 0), B(3, m, n - 1, 2), B(0, m + 1, n - 1, 2),
                    B(0, m, n, 1)};
        default:
            return {B(2, m - 1, n, 3, true), B(0, m - 1, n + 1, 1), B(3, m, n - 1, 3), B(0, m + 2, n - 1, 0),
                    B(0, m, n, 2)};
    }
}

std::vector<Element> normalize(std::vector<Element> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

Generator t_gen(int m) { return (m % 2 == 0) ? 0 : 1; }

Word theta_word(int m, int n) {
    require(m >= 0 && n >= 0, "theta(m,n) needs m, n >= 0");
    Word u;
    int k = m / 2;
    if (m % 2 == 0) {
        for (int i = 0; i < k; ++i) append(u, kA), append(u, kB);
        append(u, kA);
        u.push_back(2);
        for (int i = 0; i < n; ++i) append(u, kD);
    } else {
        for (int i = 0; i <= k; ++i) append(u, kA), append(u, kB);
        u.push_back(2);
        for (int i = 0; i < n; ++i) append(u, kC);
    }
    return u;
}

Element theta(int m, int n) { return from_word(theta_word(m, n)); }

Element big_element(int xk, int m, int n, int yk, bool primed) {
    return rebuild(big_tag(xk, m, n, yk, primed));
}

Word thick_word(Family f, int n) {
    Word u;
    switch (f) {
        case Family::X:
            require(n >= 0, "x_n needs n >= 0");
            for (int i = 0; i < n; ++i) u.push_back(kXSeq[i % 6]);
            return u;
        case Family::XBar:
            require(n >= 3 && n % 3 == 0, "xbar_n needs n a positive multiple of 3");
            u = {1, 2, 0};
            append(u, thick_word(Family::X, n - 3));
            return u;
        case Family::E:
            require(n >= 0, "e_n needs n >= 0");
            u = {1};
            append(u, swap01(thick_word(Family::X, n)));
            return u;
        case Family::U:
            require(n >= 0, "u_n needs n >= 0");
            u = {2};
            append(u, thick_word(Family::X, n));
            return u;
        case Family::W:
            require(n >= 0, "w_n needs n >= 0");
            u = {2};
            append(u, thick_word(Family::E, n));
            return u;
        case Family::Sporadic:
            require(n >= 0 && n <= 2, "sporadic index must be 0, 1 or 2");
            if (n == 0) return {2};
            return n == 1 ? Word{2, 1} : Word{2, 0};
        default:
            throw std::invalid_argument("not a thick-region family");
    }
}

Element thick_element(Family f, int n, bool primed) { return from_word(maybe_swap(thick_word(f, n), primed)); }

Word thin_word(Family f, int n) {
    require(n >= 3, "thin-wall elements need n >= 3");
    Word u;
    if (f == Family::DBar) u.push_back(0);
    else if (f != Family::D) throw std::invalid_argument("not a thin-region family");
    for (int i = 0; i < n; ++i) u.push_back(kDSeq[i % 4]);
    return u;
}

Element thin_element(Family f, int n, bool primed) { return from_word(maybe_swap(thin_word(f, n), primed)); }

FamilyTag big_tag(int xk, int m, int n, int yk, bool primed) {
    require(m >= 0 && n >= 0, "theta(m,n) needs m, n >= 0");
    require(xk >= 0 && xk <= 3 && yk >= 0 && yk <= 3, "prefix/suffix index must be 0..3");
    return {primed ? Region::BigPhiC : Region::BigC, Family::Theta, m, n, xk, yk, primed};
}

FamilyTag thick_tag(Family f, int n, bool primed) {
    FamilyTag t;
    t.family = f;
    t.n = n;
    t.primed = primed;
    switch (f) {
        case Family::X:
        case Family::XBar: t.region = primed ? Region::ThickSouth : Region::ThickNorth; break;
        case Family::E: t.region = Region::ThickEast; break;
        case Family::W:
        case Family::Sporadic: t.region = Region::ThickWest; break;
        case Family::U: {
            // u_n is a helper element; its region is wherever it lands
            auto c = classify(thick_element(f, n, primed));
            t.region = c ? c->region : Region::Identity;
            break;
        }
        default: throw std::invalid_argument("not a thick-region family");
    }
    thick_word(f, n);  // validates n
    return t;
}

FamilyTag thin_tag(Family f, int n, bool primed) {
    FamilyTag t;
    t.family = f;
    t.n = n;
    t.primed = primed;
    if (f == Family::D) t.region = primed ? Region::ThinSW : Region::ThinNW;
    else if (f == Family::DBar) t.region = primed ? Region::ThinNE : Region::ThinSE;
    else throw std::invalid_argument("not a thin-region family");
    thin_word(f, n);
    return t;
}

Word tag_word(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::Identity: return {};
        case Family::Theta: {
            Word u = prefix_word(tag.xk);
            append(u, theta_word(tag.m, tag.n));
            append(u, suffix_word(tag.yk, tag.m));
            return maybe_swap(u, tag.primed);
        }
        case Family::D:
        case Family::DBar: return maybe_swap(thin_word(tag.family, tag.n), tag.primed);
        default: return maybe_swap(thick_word(tag.family, tag.n), tag.primed);
    }
}

Element rebuild(const FamilyTag& tag) { return from_word(tag_word(tag)); }

std::vector<FamilyTag> classify_all(const Element& w) {
    std::vector<FamilyTag> out;
    if (w.is_identity()) {
        out.push_back(FamilyTag{});
        return out;
    }
    const int L = length(w);
    auto try_tag = [&](const FamilyTag& t) {
        if (rebuild(t) == w) out.push_back(t);
    };

    for (bool p : {false, true}) {
        try_tag(thick_tag(Family::X, L, p));
        if (L % 3 == 0) try_tag(thick_tag(Family::XBar, L, p));
        if (L >= 2 && (!p || (L - 1) % 3 == 0)) try_tag(thick_tag(Family::E, L - 1, p));
        if (L >= 3 && (!p || (L - 2) % 3 == 0)) try_tag(thick_tag(Family::W, L - 2, p));
        if (L >= 3) try_tag(thin_tag(Family::D, L, p));
        if (L >= 4) try_tag(thin_tag(Family::DBar, L - 1, p));
    }
    if (L == 1) try_tag(thick_tag(Family::Sporadic, 0));
    if (L == 2) try_tag(thick_tag(Family::Sporadic, 1)), try_tag(thick_tag(Family::Sporadic, 2));

    // Big region: strip a prefix and a suffix, require theta's left descent
    // set {s1, s2}, then compare against the few theta(m,n) of the remaining
    // length with the right parity of m.
    const GenSet theta_left{0b110};
    for (bool p : {false, true}) {
        Element w0 = p ? phi(w) : w;
        for (int xk = 0; xk <= 3; ++xk) {
            Element z1 = inverse(from_word(prefix_word(xk))) * w0;
            if (length(z1) != L - xk) continue;
            for (int yk = 0; yk <= 3; ++yk) {
                for (int parity = 0; parity < 2; ++parity) {
                    if (yk == 0 && parity == 1) continue;
                    Element z = z1 * inverse(from_word(suffix_word(yk, parity)));
                    int lz = L - xk - yk;
                    if (lz < 4 || length(z) != lz) continue;
                    if (!(descents(z, Side::Left) == theta_left)) continue;
                    for (int n = 0; 4 * n <= lz - 4; ++n) {
                        int r = lz - 4 - 4 * n;
                        if (r % 3 != 0) continue;
                        int m = r / 3;
                        if (yk > 0 && m % 2 != parity) continue;
                        if (theta(m, n) == z) out.push_back(big_tag(xk, m, n, yk, p));
                    }
                }
            }
        }
    }
    return out;
}

std::optional<FamilyTag> classify(const Element& w) {
    auto all = classify_all(w);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool is_big(Region r) { return r == Region::BigC || r == Region::BigPhiC; }
bool is_thick(Region r) {
    return r == Region::ThickNorth || r == Region::ThickSouth || r == Region::ThickEast || r == Region::ThickWest;
}
bool is_thin(Region r) {
    return r == Region::ThinNW || r == Region::ThinSW || r == Region::ThinNE || r == Region::ThinSE;
}

long long interval_size(const FamilyTag& tag) {
    const long long m = tag.m, n = tag.n;
    switch (tag.family) {
        case Family::Theta: {
            const long long q = m * m + 4 * m * n + 2 * n * n;
            // (linear m coefficient, linear n coefficient, constant, extra)
            static const long long tbl[4][4][4] = {
                {{2, 2, 1, 0}, {3, 4, 2, 0}, {4, 5, 3, 0}, {5, 6, 4, 0}},
                {{3, 4, 2, 0}, {4, 6, 3, 4}, {5, 8, 4, 0}, {6, 8, 6, 4}},
                {{4, 6, 2, 0}, {5, 8, 5, 0}, {6, 9, 5, 6}, {7, 9, 8, 4}},
                {{5, 8, 2, 0}, {6, 10, 6, 4}, {7, 10, 7, 4}, {8, 10, 10, 4}},
            };
            const auto& c = tbl[tag.xk][tag.yk];
            return 8 * (q + c[0] * m + c[1] * n + c[2]) + c[3];
        }
        case Family::X: {
            if (tag.n < 3) out_of_range(tag);
            long long k = tag.n / 3;
            switch (tag.n % 3) {
                case 0: return 8 * k * k - 2 * k;
                case 1: return 8 * k * k + 4 * k;
                default: return 8 * k * k + 12 * k;
            }
        }
        case Family::E: {
            if (tag.n < 1) out_of_range(tag);
            long long k = tag.n / 3;
            switch (tag.n % 3) {
                case 0: return 8 * k * k + 4 * k;
                case 1: return 8 * k * k + 8 * k + 4;
                default: return 8 * (k + 1) * (k + 1);
            }
        }
        default: no_formula(tag);
    }
}

std::vector<Element> single_deletions(const Word& u, const std::vector<int>& positions) {
    std::vector<Element> out;
    for (int i : positions) {
        require(i >= 1 && i <= int(u.size()), "deletion position out of range");
        Word d = u;
        d.erase(d.begin() + (i - 1));
        out.push_back(from_word(d));
    }
    return normalize(out);
}

std::vector<Element> coatom_formula(const FamilyTag& tag) {
    std::vector<Element> out;
    const bool p = tag.primed;
    switch (tag.family) {
        case Family::X: {
            int k = tag.n / 3;
            if (k < 2) out_of_range(tag);
            switch (tag.n % 3) {
                case 0: out = {Wl(3 * k - 3), B(1, k - 2, 0, 0, true), B(0, k - 2, 0, 1), X(3 * k - 1)}; break;
                case 1: out = {Wl(3 * k - 2), B(1, k - 2, 0, 1, true), XBar(3 * k), X(3 * k)}; break;
                default:
                    out = {Wl(3 * k - 1), B(1, k - 2, 0, 2, true), B(3, k - 2, 0, 0), B(0, k - 1, 0, 0),
                           X(3 * k + 1)};
            }
            break;
        }
        case Family::XBar: {
            int k = tag.n / 3;
            if (k < 3) out_of_range(tag);
            // the w coatom is primed here, unlike the x_{3k} case
            out = {thick_element(Family::W, 3 * k - 3, true), B(1, k - 3, 0, 3, true), B(3, k - 3, 0, 1),
                   X(3 * k - 1)};
            break;
        }
        case Family::E: {
            int k = tag.n / 3;
            if (k < 2) out_of_range(tag);
            switch (tag.n % 3) {
                case 0: out = {X(3 * k, true), XBar(3 * k), B(1, k - 2, 0, 1, true), E(3 * k - 1)}; break;
                case 1: out = {X(3 * k + 1, true), X(3 * k + 1), E(3 * k, true), E(3 * k)}; break;
                default:
                    out = {X(3 * k + 2, true), X(3 * k + 2), B(1, k - 1, 0, 0), B(1, k - 1, 0, 0, true),
                           E(3 * k + 1)};
            }
            break;
        }
        case Family::D: {
            int n = tag.n;
            if (n < 7) out_of_range(tag);
            std::vector<int> pos = n % 2 == 0 ? std::vector<int>{1, 3, n - 3, n - 1, n}
                                              : std::vector<int>{1, 3, n - 2, n};
            out = single_deletions(thin_word(Family::D, n), pos);
            break;
        }
        case Family::Theta: {
            if (tag.m <= 0 || tag.n <= 0) out_of_range(tag);
            if (tag.xk > 0 && tag.yk == 0) no_formula(tag);
            auto inner = theta_coatoms(tag.m, tag.n, tag.yk);
            if (tag.xk == 0) {
                out = inner;
            } else {
                Element pre = from_word(prefix_word(tag.xk));
                for (const auto& z : inner) out.push_back(pre * z);
                out.push_back(B(tag.xk - 1, tag.m, tag.n, tag.yk));
            }
            break;
        }
        default: no_formula(tag);
    }
    if (p)
        for (auto& z : out) z = phi(z);
    return normalize(out);
}

std::string region_name(Region r) {
    switch (r) {
        case Region::Identity: return "Identity";
        case Region::BigC: return "BigC";
        case Region::BigPhiC: return "BigPhiC";
        case Region::ThickNorth: return "ThickNorth";
        case Region::ThickSouth: return "ThickSouth";
        case Region::ThickEast: return "ThickEast";
        case Region::ThickWest: return "ThickWest";
        case Region::ThinNW: return "ThinNW";
        case Region::ThinSW: return "ThinSW";
        case Region::ThinNE: return "ThinNE";
        case Region::ThinSE: return "ThinSE";
    }
    return "?";
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Identity: return "identity";
        case Family::Theta: return "theta";
        case Family::X: return "x";
        case Family::XBar: return "xbar";
        case Family::E: return "e";
        case Family::U: return "u";
        case Family::W: return "w";
        case Family::Sporadic: return "sporadic";
        case Family::D: return "d";
        case Family::DBar: return "dbar";
    }
    return "?";
}

std::string prefix_name(int xk) {
    static const char* names[] = {"1", "s0", "s2s0", "s1s2s0"};
    return names[xk];
}

std::string suffix_name(int yk) {
    static const char* names[] = {"1", "t", "t s2", "t s2 t'"};
    return names[yk];
}

std::string describe(const FamilyTag& tag) {
    std::ostringstream os;
    const char* prime = tag.primed ? "'" : "";
    switch (tag.family) {
        case Family::Identity: return "e";
        case Family::Theta:
            if (tag.xk) os << prefix_name(tag.xk) << " ";
            os << "theta" << prime << "(" << tag.m << "," << tag.n << ")";
            if (tag.yk) os << " " << suffix_name(tag.yk);
            return os.str();
        case Family::Sporadic: return word_str(thick_word(Family::Sporadic, tag.n));
        default: os << family_name(tag.family) << prime << "_" << tag.n; return os.str();
    }
}

}  // namespace klb2
