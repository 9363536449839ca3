// vinco: exact enumeration of permutations avoiding vincular, covincular,
// mesh, and barred patterns.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "vinco/closed_forms.hpp"
#include "vinco/enumeration.hpp"
#include "vinco/errors.hpp"
#include "vinco/lattice.hpp"
#include "vinco/patterns.hpp"
#include "vinco/qpolynomial.hpp"
#include "vinco/recurrences.hpp"
#include "vinco/reference.hpp"
#include "vinco/series.hpp"
#include "vinco/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format = "json";
    int jobs = 0;  // 0: use hardware parallelism
    int cap = vinco::kDefaultCap;
};

int effective_jobs(const GlobalOptions& g) {
    if (g.jobs > 0) return g.jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Rows of short cells; JSON is canonical, csv/table derive from it.
void emit_table(const GlobalOptions& g, const json& canonical,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (g.format == "json") {
        std::cout << canonical.dump(2) << "\n";
        return;
    }
    if (g.format == "csv") {
        auto emit_row = [](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0) std::cout << ',';
                bool quote = row[i].find(',') != std::string::npos;
                if (quote) std::cout << '"';
                std::cout << row[i];
                if (quote) std::cout << '"';
            }
            std::cout << "\n";
        };
        emit_row(header);
        for (const auto& row : rows) emit_row(row);
        return;
    }
    // table
    std::vector<std::size_t> width(header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header);
    for (const auto& row : rows) widen(row);
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i == 0 ? "" : "  ") << row[i]
                      << std::string(width[i] - row[i].size(), ' ');
        }
        std::cout << "\n";
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
}

json counts_to_json(const vinco::CountSequence& seq) {
    json arr = json::array();
    for (auto c : seq.counts) arr.push_back(std::to_string(c));
    return arr;
}

json string_series(const std::vector<vinco::Int>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

int cmd_count(const GlobalOptions& g, const std::string& pair_text,
              const std::vector<std::string>& pattern_texts, int n_max) {
    std::vector<vinco::Pattern> patterns;
    std::string echo;
    if (!pair_text.empty()) {
        vinco::PatternPair pr = vinco::parse_pair(pair_text);
        patterns.push_back(pr.first);
        patterns.push_back(pr.second);
        echo = vinco::format_pair(pr);
    }
    for (const auto& t : pattern_texts) {
        patterns.push_back(vinco::parse_pattern(t));
        if (!echo.empty()) echo += " & ";
        echo += vinco::format_pattern(patterns.back());
    }
    auto t0 = std::chrono::steady_clock::now();
    vinco::CountSequence seq = vinco::count_sequence(patterns, n_max, g.cap, effective_jobs(g));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json out;
    out["command"] = "count";
    out["patterns"] = echo;
    out["n_max"] = n_max;
    out["counts"] = counts_to_json(seq);
    out["wall_seconds"] = secs;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t n = 0; n < seq.counts.size(); ++n)
        rows.push_back({std::to_string(n), std::to_string(seq.counts[n])});
    emit_table(g, out, {"n", "count"}, rows);
    return 0;
}

int cmd_classify(const GlobalOptions& g, int n_max) {
    if (n_max < 6) {
        std::cerr << "classify needs --n >= 6 to separate the classes\n";
        return kExitUsage;
    }
    auto t0 = std::chrono::steady_clock::now();
    vinco::Classification cls = vinco::classify(n_max, g.cap, effective_jobs(g));
    auto refs = vinco::reference_sequences(n_max);
    auto pairs = vinco::pair_universe();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    json out;
    out["command"] = "classify";
    out["n_max"] = n_max;
    out["total_pairs"] = 216;
    out["class_count"] = cls.classes.size();
    json jclasses = json::array();
    std::vector<std::vector<std::string>> rows;
    for (auto& c : cls.classes) {
        std::string label = "finite";
        if (!c.finite) {
            auto m = vinco::match_reference(refs, c.prefix);
            label = m.value_or("(unmatched)");
        }
        c.label = label;
        std::string oeis = "-";
        for (const auto& ref : refs)
            if (ref.name == label) oeis = ref.oeis_label;
        json jc;
        std::string prefix;
        for (std::size_t i = 0; i < c.prefix.size(); ++i)
            prefix += (i ? "," : "") + std::to_string(c.prefix[i]);
        jc["sequence"] = c.finite ? "finite" : prefix;
        jc["pairs"] = c.pair_indices.size();
        jc["orbits"] = c.orbit_count;
        jc["label"] = label;
        jc["oeis"] = oeis;
        json members = json::array();
        for (int idx : c.pair_indices)
            members.push_back(vinco::format_pair(pairs[static_cast<std::size_t>(idx)]));
        jc["members"] = members;
        jclasses.push_back(jc);
        rows.push_back({c.finite ? "finite" : prefix, std::to_string(c.pair_indices.size()),
                        std::to_string(c.orbit_count), label, oeis});
    }
    out["classes"] = jclasses;
    out["wall_seconds"] = secs;
    emit_table(g, out, {"sequence (n=0..)", "pairs", "orbits", "label", "oeis"}, rows);
    return 0;
}

int cmd_orbits(const GlobalOptions& g) {
    auto pairs = vinco::pair_universe();
    auto orbits = vinco::symmetry_orbits(pairs);
    json out;
    out["command"] = "orbits";
    out["total_pairs"] = pairs.size();
    out["orbit_count"] = orbits.size();
    json jorbits = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& orbit : orbits) {
        json jo;
        jo["size"] = orbit.size();
        json members = json::array();
        for (int idx : orbit) members.push_back(vinco::format_pair(pairs[static_cast<std::size_t>(idx)]));
        jo["members"] = members;
        jorbits.push_back(jo);
        rows.push_back({vinco::format_pair(pairs[static_cast<std::size_t>(orbit[0])]),
                        std::to_string(orbit.size())});
    }
    out["orbits"] = jorbits;
    emit_table(g, out, {"representative", "size"}, rows);
    return 0;
}

int cmd_verify(const GlobalOptions& g, const std::string& suite, int n_max) {
    vinco::RunReport report = vinco::run_suite(suite, n_max, g.cap, effective_jobs(g));
    json out;
    out["command"] = "verify";
    out["suite"] = report.suite;
    out["n_max"] = report.n_max;
    json checks = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : report.checks) {
        json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.passed) jc["counterexample"] = c.counterexample;
        checks.push_back(jc);
        rows.push_back({c.name, c.passed ? "pass" : "FAIL", c.counterexample});
    }
    out["checks"] = checks;
    out["all_passed"] = report.all_passed();
    out["wall_seconds"] = report.wall_seconds;
    emit_table(g, out, {"check", "result", "counterexample"}, rows);
    return report.all_passed() ? 0 : kExitVerificationFailure;
}

int cmd_biject(const GlobalOptions& g, const std::string& map_name) {
    json out;
    out["command"] = "biject";
    out["map"] = map_name;
    json items = json::array();
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        vinco::Permutation pi = vinco::Permutation::parse(line);
        json item;
        item["permutation"] = pi.str();
        if (map_name == "lattice") {
            vinco::LatticePath w = vinco::perm_to_path(pi);
            item["path"] = w.str();
            item["area"] = vinco::path_area(w);
            rows.push_back({pi.str(), w.str(), std::to_string(vinco::path_area(w))});
        } else {
            vinco::LatticePath w = vinco::perm_to_restricted_path(pi);
            vinco::IntegerPartition lam = vinco::path_to_partition(w);
            item["path"] = w.str();
            item["partition"] = lam.str();
            rows.push_back({pi.str(), w.str(), lam.str()});
        }
        items.push_back(item);
    }
    out["results"] = items;
    emit_table(g, out, {"permutation", "path", map_name == "lattice" ? "area" : "partition"}, rows);
    return 0;
}

int cmd_formula(const GlobalOptions& g, const std::string& what, int n, int m, int order) {
    json out;
    out["command"] = "formula";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    if (what == "gaussian") {
        vinco::QPolynomial p = vinco::gaussian_binomial(n, m);
        out["what"] = "gaussian";
        out["n"] = n;
        out["m"] = m;
        out["coefficients"] = json::parse(p.json());
        header = {"q^a", "coefficient"};
        for (int a = 0; a <= p.degree(); ++a) rows.push_back({std::to_string(a), p.coeff(a).str()});
    } else if (what == "L") {
        vinco::QPolynomial p = (m < 0) ? vinco::l_poly(n) : vinco::l_nk_poly(n, m);
        out["what"] = (m < 0) ? "L_n" : "L_nk";
        out["n"] = n;
        if (m >= 0) out["k"] = m;
        out["coefficients"] = json::parse(p.json());
        header = {"q^a", "coefficient"};
        for (int a = 0; a <= p.degree(); ++a) rows.push_back({std::to_string(a), p.coeff(a).str()});
    } else if (what == "ogf-lattice" || what == "ogf-partition") {
        vinco::TruncatedSeries s =
            (what == "ogf-lattice") ? vinco::ogf_lattice(order) : vinco::ogf_partition(order);
        out["what"] = what;
        out["order"] = order;
        out["coefficients"] = json::parse(s.json());
        header = {"x^n", "coefficient"};
        for (int i = 0; i <= s.order(); ++i) rows.push_back({std::to_string(i), s.coeff(i).str()});
    } else if (what == "recurrence-blocks" || what == "recurrence-ceiling") {
        std::vector<vinco::Int> seq = (what == "recurrence-blocks")
                                          ? vinco::recurrence_blocks(n).sequence
                                          : vinco::recurrence_ceiling(n).sequence;
        out["what"] = what;
        out["n_max"] = n;
        out["values"] = string_series(seq);
        header = {"n", "value"};
        for (std::size_t i = 0; i < seq.size(); ++i)
            rows.push_back({std::to_string(i), seq[i].str()});
    } else {
        // closed-form family by name
        vinco::ClosedFormFamily fam = vinco::parse_family(what);
        std::vector<vinco::Int> seq;
        for (int i = 0; i <= n; ++i) seq.push_back(vinco::closed_form(fam, i));
        out["what"] = what;
        out["n_max"] = n;
        out["values"] = string_series(seq);
        header = {"n", "value"};
        for (std::size_t i = 0; i < seq.size(); ++i)
            rows.push_back({std::to_string(i), seq[i].str()});
    }
    emit_table(g, out, header, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact pattern-avoidance enumeration for vincular/covincular, mesh, and barred patterns"};
    app.require_subcommand(1);

    GlobalOptions g;
    if (const char* env = std::getenv("VINCO_CAP")) g.cap = std::atoi(env);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "parallel workers (0 = hardware)")->capture_default_str();
    app.add_option("--cap-override", g.cap, "enumeration length cap")->capture_default_str();

    std::string pair_text;
    std::vector<std::string> pattern_texts;
    int n_max = 8;
    auto* count = app.add_subcommand("count", "count avoiders of a pattern set by length");
    count->add_option("--pair", pair_text, "vincular|covincular pair, e.g. \"123;x=2 | 123;y=1\"");
    count->add_option("--pattern", pattern_texts, "additional pattern (repeatable)");
    count->add_option("--n", n_max, "maximum length")->required();

    int classify_n = 8;
    auto* classify = app.add_subcommand("classify", "group all 216 study pairs by count sequence");
    classify->add_option("--n", classify_n, "maximum length (>= 6)");

    auto* orbits = app.add_subcommand("orbits", "symmetry orbits of the 216 study pairs");

    std::string suite = "all";
    int verify_n = 7;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "shading|symmetry|barred|bijections|recurrences|ogf|all")
        ->check(CLI::IsMember({"shading", "symmetry", "barred", "bijections", "recurrences", "ogf", "all"}));
    verify->add_option("--n", verify_n, "maximum length");

    std::string map_name = "lattice";
    auto* biject = app.add_subcommand("biject", "map stdin permutations through a boundary bijection");
    biject->add_option("--map", map_name, "lattice|partition")
        ->check(CLI::IsMember({"lattice", "partition"}));

    std::string what;
    int fn = 10, fm = -1, forder = 20;
    auto* formula = app.add_subcommand("formula", "evaluate closed forms, polynomials, and series");
    formula->add_option("what", what,
                        "catalan|motzkin|central_polygonal|power2|A121690|A098569|gaussian|L|"
                        "ogf-lattice|ogf-partition|recurrence-blocks|recurrence-ceiling")
        ->required();
    formula->add_option("--n", fn, "index / maximum index");
    formula->add_option("--m", fm, "second index (gaussian m, L_nk k)");
    formula->add_option("--order", forder, "series truncation order");

    // Global flags remain valid after a subcommand name.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) {
            if (pair_text.empty() && pattern_texts.empty()) {
                std::cerr << "count needs --pair or --pattern\n";
                return kExitUsage;
            }
            return cmd_count(g, pair_text, pattern_texts, n_max);
        }
        if (classify->parsed()) return cmd_classify(g, classify_n);
        if (orbits->parsed()) return cmd_orbits(g);
        if (verify->parsed()) return cmd_verify(g, suite, verify_n);
        if (biject->parsed()) return cmd_biject(g, map_name);
        if (formula->parsed()) return cmd_formula(g, what, fn, fm, forder);
    } catch (const vinco::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const vinco::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
