// frz: frieze patterns over rings of imaginary quadratic integers.
//
// Subcommands map 1:1 onto library operations; all numeric output is exact
// (decimal strings / rationals), so identical invocations produce identical
// bytes regardless of --workers.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "frieze/census.hpp"
#include "frieze/eta.hpp"
#include "frieze/frieze_pattern.hpp"
#include "frieze/orders.hpp"
#include "frieze/reference_checks.hpp"
#include "frieze/text_io.hpp"
#include "frieze/triangulate.hpp"

namespace {

using namespace frieze;

struct OutputOpts {
    std::string format = "pretty";
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOpts& opts, const std::string& default_format) {
    opts.format = default_format;
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

int emit(const OutputOpts& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(opts.out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open " << opts.out_path << "\n";
        return 1;
    }
    os << text;
    return 0;
}

Ring ring_from_d(const std::optional<long>& d) {
    return d ? Ring::quadratic(FieldTag(*d)) : Ring::integers();
}

std::string pretty_census(const CensusResult& census) {
    std::ostringstream os;
    os << "ring " << census.ring.label() << ", height " << census.height << ", bound_sq "
       << to_decimal(census.bound_sq) << ", "
       << (census.positivity == Positivity::PositiveOnly ? "positive entries" : "all signs")
       << "\n";
    os << census.friezes.size() << " friezes ("
       << (census.complete ? "complete" : "bound-relative") << ": " << census.completeness_note
       << ")\n";
    std::map<FriezeClass, std::size_t> counts = count_by_class(census);
    for (const auto& [cls, cnt] : counts) os << "  " << class_name(cls) << ": " << cnt << "\n";
    for (const auto& rec : census.friezes) {
        QuiddityCycle c = extract_quiddity(rec.pattern);
        os << c.str() << "  " << class_name(rec.cls.cls) << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact frieze patterns over imaginary quadratic integer rings"};
    app.require_subcommand(1);

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "Census of non-zero friezes of a height");
    std::optional<long> en_d;
    long en_height = 1;
    std::string en_bound;
    bool en_positive = false;
    int en_workers = 1;
    OutputOpts en_out;
    cmd_enum->add_option("--d", en_d, "Square-free d < 0 (omit for the ring Z)");
    cmd_enum->add_option("--height", en_height, "Frieze height n >= 0")->required();
    cmd_enum->add_option("--bound-sq", en_bound, "Quiddity |z|^2 bound (default (n+1)^2)");
    cmd_enum->add_flag("--positive", en_positive, "Positive integer entries only");
    cmd_enum->add_option("--workers", en_workers, "Parallel search workers")
        ->check(CLI::Range(1, 64));
    add_output_flags(cmd_enum, en_out, "csv");

    // classify
    auto* cmd_cls = app.add_subcommand("classify", "Build a frieze from a quiddity cycle and classify it");
    std::optional<long> cl_d;
    std::string cl_quiddity;
    OutputOpts cl_out;
    cmd_cls->add_option("--d", cl_d, "Square-free d < 0 (omit for rational entries)");
    cmd_cls->add_option("--quiddity", cl_quiddity, "Comma-separated entries, e.g. \"w,wbar,w,wbar\"")
        ->required();
    add_output_flags(cmd_cls, cl_out, "pretty");

    // triangulations
    auto* cmd_tri = app.add_subcommand("triangulations", "Triangulations of the N-gon and their quiddities");
    int tri_n = 0;
    OutputOpts tri_out;
    cmd_tri->add_option("--n", tri_n, "Polygon size N (3..14)")->required();
    add_output_flags(cmd_tri, tri_out, "csv");

    // reduce
    auto* cmd_red = app.add_subcommand("reduce", "Reduce a quiddity cycle to (0,0) / (1,1,1)");
    std::optional<long> rd_d;
    std::string rd_quiddity;
    OutputOpts rd_out;
    cmd_red->add_option("--d", rd_d, "Square-free d < 0 (omit for integer entries)");
    cmd_red->add_option("--quiddity", rd_quiddity, "Comma-separated entries")->required();
    add_output_flags(cmd_red, rd_out, "pretty");

    // quiddity-check
    auto* cmd_chk = app.add_subcommand("quiddity-check", "Test the eta-product condition");
    std::optional<long> qc_d;
    std::string qc_quiddity;
    OutputOpts qc_out;
    cmd_chk->add_option("--d", qc_d, "Square-free d < 0 (omit for rational entries)");
    cmd_chk->add_option("--quiddity", qc_quiddity, "Comma-separated entries")->required();
    add_output_flags(cmd_chk, qc_out, "pretty");

    // unit-search
    auto* cmd_unit = app.add_subcommand("unit-search", "Unit of infinite order in Z[alpha]");
    long us_d = 0;
    std::string us_alpha;
    long us_budget = 8;
    int us_nmax = 16;
    OutputOpts us_out;
    cmd_unit->add_option("--d", us_d, "Square-free d < 0")->required();
    cmd_unit->add_option("--alpha", us_alpha, "Element, e.g. \"-2/47+5/47*sqrt(-13)\"")->required();
    cmd_unit->add_option("--power-budget", us_budget, "Largest power k to try");
    cmd_unit->add_option("--nmax", us_nmax, "Largest polynomial degree to try");
    add_output_flags(cmd_unit, us_out, "pretty");

    // class-number
    auto* cmd_h = app.add_subcommand("class-number", "Class number of O_d");
    long h_d = 0;
    OutputOpts h_out;
    cmd_h->add_option("--d", h_d, "Square-free d < 0")->required();
    add_output_flags(cmd_h, h_out, "pretty");

    // verify-paper
    auto* cmd_ver = app.add_subcommand("verify-paper", "Replay the published worked examples");
    OutputOpts ver_out;
    add_output_flags(cmd_ver, ver_out, "pretty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage and validation errors exit with 1
    }

    try {
        if (cmd_enum->parsed()) {
            Ring ring = ring_from_d(en_d);
            SearchConfig cfg{ring, en_height,
                             en_bound.empty() ? Rat((en_height + 1)) * Rat(en_height + 1)
                                              : parse_rat(en_bound),
                             en_positive ? Positivity::PositiveOnly : Positivity::All, en_workers};
            if (cfg.quiddity_bound_sq < 4) cfg.quiddity_bound_sq = 4;
            if (isatty(fileno(stderr))) {
                cfg.progress = [](std::size_t done, std::size_t total) {
                    std::cerr << "\rsearched " << done << "/" << total << " branches";
                    if (done == total) std::cerr << "\n";
                    std::cerr.flush();
                };
            }
            CensusResult census = enumerate_friezes(cfg);
            std::string text;
            if (en_out.format == "csv")
                text = census_csv(census);
            else if (en_out.format == "json")
                text = json_of_census(census).dump(2) + "\n";
            else
                text = pretty_census(census);
            if (!census.complete)
                std::cerr << "note: " << census.completeness_note << "\n";
            int rc = emit(en_out, text);
            return rc != 0 ? rc : (census.complete ? 0 : 2);
        }

        if (cmd_cls->parsed()) {
            FieldTag tag = ring_from_d(cl_d).tag();
            QuiddityCycle cycle = parse_cycle(cl_quiddity, tag);
            FriezePattern f = from_quiddity(cycle, ring_from_d(cl_d));
            Classification cls = classify(f);
            ValidationReport rep = validate(f);
            if (cl_out.format == "json") {
                Json j = json_of_frieze(f, cls);
                j["valid"] = Json{{"unimodular", rep.unimodular},
                                  {"tame", rep.tame},
                                  {"nonzero", rep.nonzero},
                                  {"glide", rep.glide}};
                return emit(cl_out, j.dump(2) + "\n");
            }
            std::ostringstream os;
            os << f.staircase();
            os << "class: " << class_name(cls.cls) << "\n";
            os << "valid: unimodular=" << rep.unimodular << " tame=" << rep.tame
               << " nonzero=" << rep.nonzero << " glide=" << rep.glide << "\n";
            return emit(cl_out, os.str());
        }

        if (cmd_tri->parsed()) {
            auto tris = enumerate_triangulations(tri_n);
            if (tri_out.format == "json") {
                Json arr = Json::array();
                for (const auto& t : tris) {
                    Json dd = Json::array();
                    for (auto [u, v] : t.diagonals) dd.push_back(Json::array({u, v}));
                    QuiddityCycle q = quiddity_of_triangulation(t);
                    Json qq = Json::array();
                    for (const auto& e : q.entries) qq.push_back(display_entry(e));
                    arr.push_back(Json{{"diagonals", dd}, {"quiddity", qq}});
                }
                return emit(tri_out, Json{{"n", tri_n}, {"count", tris.size()}, {"triangulations", arr}}.dump(2) + "\n");
            }
            std::ostringstream os;
            if (tri_out.format == "csv") {
                os << "diagonals,quiddity\n";
                for (const auto& t : tris) {
                    QuiddityCycle q = quiddity_of_triangulation(t);
                    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
                        if (i) os << " ";
                        os << t.diagonals[i].first << "-" << t.diagonals[i].second;
                    }
                    os << ",";
                    for (std::size_t i = 0; i < q.entries.size(); ++i) {
                        if (i) os << " ";
                        os << display_entry(q.entries[i]);
                    }
                    os << "\n";
                }
            } else {
                os << tris.size() << " triangulations of the " << tri_n << "-gon\n";
                for (const auto& t : tris) {
                    QuiddityCycle q = quiddity_of_triangulation(t);
                    for (auto [u, v] : t.diagonals) os << "(" << u << "," << v << ") ";
                    os << " -> " << q.str() << "\n";
                }
            }
            return emit(tri_out, os.str());
        }

        if (cmd_red->parsed()) {
            FieldTag tag = ring_from_d(rd_d).tag();
            QuiddityCycle cycle = parse_cycle(rd_quiddity, tag);
            ReductionTrace trace = reduce_to_canonical(cycle);
            if (rd_out.format == "json") return emit(rd_out, json_of_trace(trace).dump(2) + "\n");
            std::ostringstream os;
            os << "initial:  " << trace.initial.str() << "\n";
            for (const auto& s : trace.steps) {
                os << "  " << rule_name(s.rule) << " @ " << s.position
                   << (s.sign_flip ? " (sign flip)" : "") << " -> " << s.after.str() << "\n";
            }
            os << (trace.terminated() ? "terminal: " : "stuck:    ") << trace.terminal.str()
               << "\n";
            return emit(rd_out, os.str());
        }

        if (cmd_chk->parsed()) {
            FieldTag tag = ring_from_d(qc_d).tag();
            QuiddityCycle cycle = parse_cycle(qc_quiddity, tag);
            bool ok = is_quiddity_cycle(cycle);
            Mat2 p = eta_product(cycle);
            if (qc_out.format == "json") {
                Json j{{"quiddity_cycle", ok},
                       {"eta_product", Json::array({json_of(p.m11), json_of(p.m12), json_of(p.m21),
                                                    json_of(p.m22)})}};
                return emit(qc_out, j.dump(2) + "\n");
            }
            std::ostringstream os;
            os << (ok ? "true" : "false") << "\n";
            os << "eta-product: [[" << p.m11.str() << ", " << p.m12.str() << "], [" << p.m21.str()
               << ", " << p.m22.str() << "]]\n";
            return emit(qc_out, os.str());
        }

        if (cmd_unit->parsed()) {
            FieldTag tag{us_d};
            QuadRat alpha = parse_quadrat(us_alpha, tag);
            UnitSearchResult res = find_infinite_unit(alpha, tag, us_budget, us_nmax);
            if (us_out.format == "json") return emit(us_out, json_of_unit_result(res).dump(2) + "\n");
            std::ostringstream os;
            if (res.status == UnitSearchResult::Status::Found) {
                const UnitCertificate& c = *res.certificate;
                os << "alpha   = " << c.alpha.str() << "\n";
                os << "h       = " << c.h << "\n";
                os << "gamma1  = " << c.gamma1.str() << ", gamma2 = " << c.gamma2.str()
                   << "  (alpha^h = gamma1/gamma2)\n";
                os << "k       = " << c.k << "\n";
                auto poly_str = [](const std::vector<Int>& cs) {
                    std::ostringstream ps;
                    bool first = true;
                    for (std::size_t i = cs.size(); i-- > 0;) {
                        if (cs[i] == 0) continue;
                        Int a = cs[i];
                        if (!first) ps << (a < 0 ? " - " : " + ");
                        else if (a < 0) ps << "-";
                        first = false;
                        Int aa = abs(a);
                        if (aa != 1 || i == 0) ps << to_decimal(aa);
                        if (i >= 1) {
                            if (aa != 1) ps << "*";
                            ps << "alpha";
                            if (i > 1) ps << "^" << i;
                        }
                    }
                    if (first) ps << "0";
                    return ps.str();
                };
                os << "unit    = " << c.unit.str() << " = " << poly_str(c.unit_coeffs) << "\n";
                os << "unit^-1 = " << c.unit_inverse.str() << " = " << poly_str(c.inverse_coeffs)
                   << "\n";
                os << "unit * unit^-1 = 1\n";
                os << "N(unit) = " << to_decimal(c.unit_norm) << " != 1  (infinite order)\n";
            } else if (res.status == UnitSearchResult::Status::NoDenominator) {
                os << "no-denominator: " << res.detail << "\n";
            } else {
                os << "budget-exceeded: " << res.detail << "\n";
            }
            return emit(us_out, os.str());
        }

        if (cmd_h->parsed()) {
            FieldTag tag{h_d};
            long h = class_number(tag);
            if (h_out.format == "json")
                return emit(h_out, Json{{"d", h_d}, {"h", h}}.dump(2) + "\n");
            return emit(h_out, std::to_string(h) + "\n");
        }

        if (cmd_ver->parsed()) {
            auto checks = run_reference_checks();
            bool all = true;
            std::ostringstream os;
            if (ver_out.format == "json") {
                Json arr = Json::array();
                for (const auto& c : checks) {
                    all = all && c.passed;
                    arr.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                }
                int rc = emit(ver_out, Json{{"checks", arr}, {"all_passed", all}}.dump(2) + "\n");
                return rc != 0 ? rc : (all ? 0 : 1);
            }
            for (const auto& c : checks) {
                all = all && c.passed;
                os << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
                if (!c.detail.empty()) os << "  [" << c.detail << "]";
                os << "\n";
            }
            os << (all ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
            int rc = emit(ver_out, os.str());
            return rc != 0 ? rc : (all ? 0 : 1);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
