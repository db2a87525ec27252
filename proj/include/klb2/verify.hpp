#pragma once

#include "klb2/closedforms.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klb2 {

struct VerifyRecord {
    std::string identity;
    std::map<std::string, long long> params;
    bool ok = true;
    // set on failure: where the two sides first differ and their values there
    std::optional<std::string> diff_element;
    std::string lhs;
    std::string rhs;
    // the same values as polynomials, when the compared sides are polynomials
    std::optional<LaurentPoly> lhs_poly;
    std::optional<LaurentPoly> rhs_poly;
};

struct VerifyReport {
    std::string suite;
    int max_len = 0;
    std::vector<VerifyRecord> records;

    bool ok() const;
    std::size_t failures() const;
};

// Suites: big, thick, thin, intervals, coatoms, mult-lemmas, hecke, intro.
std::vector<std::string> suite_names();
int default_depth(const std::string& suite);
VerifyReport run_suite(const std::string& suite, int max_len, ClosedForms& cf);

VerifyReport verify_big(int max_len, ClosedForms& cf);
VerifyReport verify_thick(int max_len, ClosedForms& cf);
// the thin conjecture for every k whose largest element has length <= max_len
VerifyReport verify_thin(int max_len, ClosedForms& cf);
VerifyReport verify_thin_k(int max_k, ClosedForms& cf);
VerifyReport verify_intervals(int max_len);
VerifyReport verify_coatoms(int max_len);
VerifyReport verify_mult_lemmas(int max_len, ClosedForms& cf);
VerifyReport verify_hecke(int max_len, KLTable& table);
// the worked example h(xbar_{3n}, x_{3m}) and the mu correction
VerifyReport verify_intro(ClosedForms& cf);

}  // namespace klb2
