// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "klb2/closedforms.hpp"
#include "klb2/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace klb2;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome from_report(const VerifyReport& r) {
    std::ostringstream os;
    os << r.records.size() << " checks, " << r.failures() << " failed";
    for (const auto& rec : r.records) {
        if (rec.ok) continue;
        os << "; first failure " << rec.identity;
        for (const auto& [k, v] : rec.params) os << " " << k << "=" << v;
        if (!rec.lhs.empty() || !rec.rhs.empty()) os << " (" << rec.lhs << " vs " << rec.rhs << ")";
        break;
    }
    return {r.ok(), os.str()};
}

Outcome mu_correction(ClosedForms& cf) {
    KLTable& t = cf.oracle();
    Element xb6 = thick_element(Family::XBar, 6), xb12 = thick_element(Family::XBar, 12);
    Element x9 = thick_element(Family::X, 9), x15 = thick_element(Family::X, 15);
    Integer a = t.mu(xb6, x9), b = t.mu(xb6, x15), c = t.mu(xb12, x15);
    std::ostringstream os;
    os << "mu(xbar6,x9)=" << a << " mu(xbar6,x15)=" << b << " mu(xbar12,x15)=" << c;
    return {a == 1 && b == 0 && c == 1, os.str()};
}

std::set<Element> subwords(const Word& u) {
    std::set<Element> out;
    const int n = int(u.size());
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Word sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(u[i]);
        out.insert(from_word(sub));
    }
    return out;
}

Outcome group_engine() {
    auto levels = ball(12);
    bool growth = true;
    for (int d = 0; d <= 12; ++d) {
        // (1+t)(1+t+t^2+t^3) / ((1-t)(1-t^3))
        const long long num[5] = {1, 2, 2, 2, 1};
        long long c = 0;
        for (int i = 0; i < 5 && i <= d; ++i) c += num[i] * ((d - i) / 3 + 1);
        growth = growth && levels[d].size() == std::size_t(c);
    }
    std::vector<Element> all;
    for (int d = 0; d <= 10; ++d) all.insert(all.end(), levels[d].begin(), levels[d].end());
    long long pairs = 0, bad = 0;
    for (const auto& w : all) {
        auto below = subwords(canonical_word(w));
        for (const auto& x : all) {
            ++pairs;
            if (bruhat_leq(x, w) != (below.count(x) > 0)) ++bad;
        }
    }
    std::ostringstream os;
    os << "growth series to length 12 " << (growth ? "matches" : "differs") << ", " << pairs << " Bruhat pairs, "
       << bad << " mismatches";
    return {growth && bad == 0, os.str()};
}

}  // namespace

int main() {
    KLTable table;
    ClosedForms cf(table);
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "big region closed formulas equal the recursion (length <= 24)",
         [&] { return from_report(verify_big(24, cf)); }},
        {2, "thick region closed formulas and recurrences equal the recursion (length <= 24)",
         [&] { return from_report(verify_thick(24, cf)); }},
        {3, "interval size formulas match enumeration (length <= 24)",
         [&] { return from_report(verify_intervals(24)); }},
        {4, "coatom formulas match enumeration (length <= 24)", [&] { return from_report(verify_coatoms(24)); }},
        {5, "mu correction for xbar and x", [&] { return mu_correction(cf); }},
        {6, "worked example h(xbar_3n, x_3m) and its intermediate identities",
         [&] { return from_report(verify_intro(cf)); }},
        {7, "Hecke invariants: self-duality, absorption, monotonicity, descents (length <= 16)",
         [&] { return from_report(verify_hecke(16, table)); }},
        {8, "N multiplication lemmas (length <= 22)", [&] { return from_report(verify_mult_lemmas(22, cf)); }},
        {9, "thin region conjecture for k <= 3", [&] { return from_report(verify_thin_k(3, cf)); }},
        {10, "group engine: growth series and Bruhat order by subwords", [&] { return group_engine(); }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.ok;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << o.detail << ", "
                  << timing << "]" << std::endl;
    }
    return all ? 0 : 1;
}
