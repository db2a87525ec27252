#include "klb2/closedforms.hpp"
#include "klb2/json.hpp"
#include "klb2/svg.hpp"
#include "klb2/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

using namespace klb2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string sep;
};

Element parse_element(const std::string& text, const Globals& g) {
    char sep = g.sep.empty() ? '\0' : g.sep.front();
    try {
        return from_word(parse_word(text, sep));
    } catch (const std::invalid_argument& e) {
        throw UsageError("cannot parse word '" + text + "': " + e.what());
    }
}

std::string word_text(const Element& w) { return word_str(canonical_word(w)); }

std::string descent_text(GenSet d) {
    std::string s = "{";
    bool first = true;
    for (Generator g : d.list()) {
        s += (first ? "s" : ", s") + std::to_string(g);
        first = false;
    }
    return s + "}";
}

Json descent_json(GenSet d) {
    Json j = Json::array();
    for (Generator g : d.list()) j.push_back(g);
    return j;
}

int cmd_element(const std::string& word, bool as_json, const Globals& g) {
    Element w = parse_element(word, g);
    auto tag = classify(w);
    Json verts = Json::array();
    for (auto c : {std::array<std::int64_t, 2>{0, 0}, {6, 0}, {3, 3}}) {
        auto p = w.map_scaled(c[0], c[1]);
        verts.push_back(Json::array({p[0], p[1]}));
    }
    if (as_json) {
        Json j{{"word", word_text(w)},
               {"length", length(w)},
               {"left_descents", descent_json(descents(w, Side::Left))},
               {"right_descents", descent_json(descents(w, Side::Right))},
               {"tag", tag ? to_json(*tag) : Json(nullptr)},
               {"alcove", verts}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "word:           " << (w.is_identity() ? "(identity)" : word_text(w)) << "\n"
              << "length:         " << length(w) << "\n"
              << "left descents:  " << descent_text(descents(w, Side::Left)) << "\n"
              << "right descents: " << descent_text(descents(w, Side::Right)) << "\n"
              << "family:         " << (tag ? describe(*tag) + " [" + region_name(tag->region) + "]" : "Unrecognized")
              << "\n"
              << "alcove (x3):    " << verts.dump() << "\n";
    return kExitOk;
}

int cmd_kl(const std::string& xs, const std::string& ws, bool as_json, const Globals& g, ClosedForms& cf) {
    Element x = parse_element(xs, g);
    Element w = parse_element(ws, g);
    ClosedResult r = cf.kl_closed(w);
    LaurentPoly h = r.value.coeff(x);
    const char* route = r.route == Route::Closed ? "closed" : "fallback";
    if (as_json) {
        Json j{{"x", word_text(x)}, {"w", word_text(w)}, {"h", to_json(h)}, {"route", route}, {"formula", r.formula}};
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "h = " << h.str() << "\n"
              << "served by: " << route << " (" << r.formula << ")\n"
              << to_json(h).dump() << "\n";
    return kExitOk;
}

int cmd_basis(const std::string& ws, bool as_json, const Globals& g, ClosedForms& cf) {
    Element w = parse_element(ws, g);
    ClosedResult r = cf.kl_closed(w);
    if (as_json) {
        Json j = to_json(r.value);
        j["route"] = r.route == Route::Closed ? "closed" : "fallback";
        j["formula"] = r.formula;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& x : r.value.support()) {
        std::string name = x.is_identity() ? "e" : word_text(x);
        std::cout << name << "\t" << r.value.coeff(x).str() << "\n";
    }
    std::cout << "served by: " << (r.route == Route::Closed ? "closed" : "fallback") << " (" << r.formula << ")\n";
    return kExitOk;
}

int cmd_mu(const std::string& xs, const std::string& ws, bool as_json, const Globals& g, ClosedForms& cf) {
    Element x = parse_element(xs, g);
    Element w = parse_element(ws, g);
    Integer m = cf.kl_closed(w).value.coeff(x).coeff(1);
    if (as_json) {
        std::cout << Json{{"x", word_text(x)}, {"w", word_text(w)}, {"mu", m.str()}}.dump(2) << "\n";
    } else {
        std::cout << m << "\n";
    }
    return kExitOk;
}

int cmd_interval(const std::string& ws, bool list, bool as_json, const Globals& g) {
    Element w = parse_element(ws, g);
    auto below = lower_interval(w);
    std::sort(below.begin(), below.end(), shortlex_less);
    auto tag = classify(w);
    Json predicted = nullptr;
    if (tag) {
        try {
            predicted = interval_size(*tag);
        } catch (const FormulaError&) {
        }
    }
    if (as_json) {
        Json j{{"word", word_text(w)}, {"size", below.size()}, {"formula_size", predicted}};
        if (list) {
            Json items = Json::array();
            for (const auto& x : below) items.push_back(word_text(x));
            j["elements"] = items;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "size: " << below.size() << "\n";
    if (!predicted.is_null()) std::cout << "formula size: " << predicted.get<long long>() << "\n";
    if (list)
        for (const auto& x : below) std::cout << (x.is_identity() ? "e" : word_text(x)) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& suite, int max_len, const std::string& json_path, ClosedForms& cf) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
    if (max_len < 0) max_len = default_depth(suite);
    if (max_len < 1) throw UsageError("--max-len must be at least 1");
    VerifyReport rep = run_suite(suite, max_len, cf);
    for (const auto& r : rep.records) {
        if (r.ok) continue;
        std::cout << "FAIL " << r.identity;
        for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
        if (r.diff_element) std::cout << " at " << (r.diff_element->empty() ? "e" : *r.diff_element);
        if (!r.lhs.empty() || !r.rhs.empty()) std::cout << ": lhs " << r.lhs << " rhs " << r.rhs;
        std::cout << "\n";
    }
    std::cout << suite << " (max length " << max_len << "): " << rep.records.size() << " checked, " << rep.failures()
              << " failed\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write " + json_path);
        out << to_json(rep).dump(2) << "\n";
    }
    return rep.ok() ? kExitOk : kExitFail;
}

int cmd_conjecture(int max_k, ClosedForms& cf) {
    if (max_k < 1) throw UsageError("--max-k must be at least 1");
    bool all = true;
    for (int k = 1; k <= max_k; ++k) {
        for (const auto& c : check_thin_conjecture(k, cf)) {
            all = all && c.holds;
            std::cout << "k=" << k << " " << c.identity << ": " << (c.holds ? "holds" : "FAILS");
            if (!c.holds && c.diff_at)
                std::cout << " at " << word_text(*c.diff_at) << " lhs " << c.lhs.str() << " rhs " << c.rhs.str();
            std::cout << "\n";
        }
    }
    return all ? kExitOk : kExitFail;
}

int cmd_tessellate(int radius, const std::string& color_by, const std::string& out_path, const Globals& g) {
    std::string mode = color_by;
    if (!g.sep.empty() && mode.rfind("interval:", 0) == 0) {
        Element w = parse_element(mode.substr(9), g);
        mode = "interval:" + word_text(w);
    }
    SvgScene scene;
    try {
        scene = build_scene(radius, mode);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << render_svg(scene);
    std::cout << scene.triangles.size() << " triangles written to " << out_path << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig basis engine for the affine Weyl group of type B2"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--sep", g.sep, "separator for dotted words, e.g. '.' for 1.2.1.2");

    std::string x, w, suite, color_by = "region", out_path, json_path;
    bool as_json = false, list = false;
    int max_len = -1, max_k = 3, radius = 6;

    auto* element = app.add_subcommand("element", "length, descents, family and alcove of an element");
    element->add_option("word", w, "word over 0,1,2")->required();
    element->add_flag("--json", as_json, "print JSON");

    auto* kl = app.add_subcommand("kl", "KL polynomial h(x, w)");
    kl->add_option("x", x)->required();
    kl->add_option("w", w)->required();
    kl->add_flag("--json", as_json, "print JSON");

    auto* basis = app.add_subcommand("basis", "KL basis element of w in the standard basis");
    basis->add_option("w", w)->required();
    basis->add_flag("--json", as_json, "print JSON");

    auto* mu = app.add_subcommand("mu", "coefficient of v in h(x, w)");
    mu->add_option("x", x)->required();
    mu->add_option("w", w)->required();
    mu->add_flag("--json", as_json, "print JSON");

    auto* interval = app.add_subcommand("interval", "lower Bruhat interval of w");
    interval->add_option("w", w)->required();
    interval->add_flag("--list", list, "list the elements");
    interval->add_flag("--json", as_json, "print JSON");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "big, thick, thin, intervals, coatoms, mult-lemmas, hecke, intro")->required();
    verify->add_option("--max-len", max_len, "length bound (suite default if omitted)");
    verify->add_option("--json", json_path, "write the JSON report to this path");

    auto* conjecture = app.add_subcommand("conjecture", "check the thin-region conjecture");
    conjecture->add_option("--max-k", max_k, "largest k to check");

    auto* tess = app.add_subcommand("tessellate", "render the alcove picture as SVG");
    tess->add_option("--radius", radius, "largest element length drawn")->check(CLI::NonNegativeNumber);
    tess->add_option("--color-by", color_by, "region or interval:<word>");
    tess->add_option("-o,--output", out_path, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        KLTable table;
        ClosedForms cf(table);
        if (*element) return cmd_element(w, as_json, g);
        if (*kl) return cmd_kl(x, w, as_json, g, cf);
        if (*basis) return cmd_basis(w, as_json, g, cf);
        if (*mu) return cmd_mu(x, w, as_json, g, cf);
        if (*interval) return cmd_interval(w, list, as_json, g);
        if (*verify) return cmd_verify(suite, max_len, json_path, cf);
        if (*conjecture) return cmd_conjecture(max_k, cf);
        if (*tess) return cmd_tessellate(radius, color_by, out_path, g);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
