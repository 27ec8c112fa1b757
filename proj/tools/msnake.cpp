#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "msnake/constructor.hpp"
#include "msnake/matchings.hpp"
#include "msnake/newton.hpp"
#include "msnake/oracle.hpp"
#include "msnake/poly.hpp"
#include "msnake/render.hpp"
#include "msnake/saturation.hpp"
#include "msnake/snake.hpp"
#include "msnake/words.hpp"

namespace {

using namespace msnake;

enum class OutKind { Text, Json, Svg, Tikz };

struct Options {
    std::string rho_str;
    bool json = false, svg = false, tikz = false;
    std::string out;
    std::string method = "dp";
    std::string point_str;
    bool do_sweep = false;
    int max_sum = 10;
    std::uint64_t cap = kDefaultMatchingCap;
};

OutKind out_kind(const Options& o) {
    if (o.json) return OutKind::Json;
    if (o.svg) return OutKind::Svg;
    if (o.tikz) return OutKind::Tikz;
    return OutKind::Text;
}

void emit(const std::string& doc, const std::string& out) {
    if (out.empty()) {
        std::cout << doc;
        if (!doc.empty() && doc.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out);
    f << doc;
    if (!f) throw std::runtime_error("cannot write " + out);
}

LatticePoint parse_point(const std::string& s) {
    std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected i,j: " + s);
    std::size_t used = 0;
    int i = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("expected i,j: " + s);
    int j = std::stoi(s.substr(comma + 1), &used);
    if (used != s.size() - comma - 1) throw std::invalid_argument("expected i,j: " + s);
    return {i, j};
}

std::string monomial_str(ExpTriple e) { return TriPoly::monomial(e).str(); }

RenderSpec render_spec(const Options& o, const Matching* highlight = nullptr,
                       bool show_weights = false) {
    RenderSpec spec;
    spec.format = o.tikz ? RenderFormat::Tikz : RenderFormat::Svg;
    spec.highlight = highlight;
    spec.show_weights = show_weights;
    return spec;
}

int run_word(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    std::string word = christoffel_word(rho);
    std::string modified = modify_word(word);
    if (out_kind(o) == OutKind::Json) {
        Json j{{"word", word}, {"modified", modified}, {"runs", run_profile(modified)}};
        emit(j.dump(), o.out);
    } else {
        emit(word + " / " + modified, o.out);
    }
    return 0;
}

int run_snake(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    SnakeGraph g = build_snake(rho);
    switch (out_kind(o)) {
        case OutKind::Json: emit(snake_to_json(g).dump(), o.out); break;
        case OutKind::Svg:
        case OutKind::Tikz: emit(render_snake(g, render_spec(o, nullptr, true)), o.out); break;
        case OutKind::Text: {
            std::string dirs;
            for (Dir d : g.dirs) dirs += d == Dir::Right ? 'R' : 'U';
            emit("T=" + std::to_string(g.tile_count) + " dirs=" + dirs +
                     " edges=" + std::to_string(g.edges.size()),
                 o.out);
            break;
        }
    }
    return 0;
}

int run_poly(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    TriPoly numerator;
    if (o.method == "dp") {
        numerator = numerator_dp(build_snake(rho));
    } else if (o.method == "enumerate") {
        numerator = numerator_from_enumeration(build_snake(rho), o.cap);
    } else if (o.method == "mutation") {
        TriPoly laurent = mutation_polynomial(rho);
        laurent.scale({rho.a - 1, rho.b - 1, rho.a + rho.b - 1}, 1);
        numerator = poly_halve_exponents(laurent);
    } else {
        throw std::invalid_argument("unknown method: " + o.method);
    }
    if (out_kind(o) == OutKind::Json)
        emit(numerator_to_json(rho, numerator).dump(), o.out);
    else
        emit(numerator.str(), o.out);
    return 0;
}

int run_newton(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    std::vector<LatticePoint> path;
    if (!o.point_str.empty()) {
        ConstructionState s = match_for_point(rho, parse_point(o.point_str));
        LatticePoint p{0, rho.a + rho.b - 1};
        path.push_back(p);
        for (std::size_t k = 1; k < s.ops.size(); ++k) {
            LatticePoint d = s.ops[k].shift();
            p = {p.i + d.i, p.j + d.j};
            path.push_back(p);
        }
    }
    switch (out_kind(o)) {
        case OutKind::Json: emit(newton_to_json(rho).dump(), o.out); break;
        case OutKind::Svg:
        case OutKind::Tikz: emit(render_newton(rho, render_spec(o), path), o.out); break;
        case OutKind::Text: {
            std::string s = "vertices:";
            for (LatticePoint v : newton_vertices(rho))
                s += " (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
            s += "  lattice points: " + std::to_string(lattice_points(rho).size());
            emit(s, o.out);
            break;
        }
    }
    return 0;
}

int run_match(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    if (o.point_str.empty()) throw CLI::RequiredError("--point");
    ConstructionState s = match_for_point(rho, parse_point(o.point_str));
    switch (out_kind(o)) {
        case OutKind::Json: emit(match_to_json(s).dump(), o.out); break;
        case OutKind::Svg:
        case OutKind::Tikz:
            emit(render_snake(s.graph, render_spec(o, &s.matching, false)), o.out);
            break;
        case OutKind::Text: {
            std::string line = "point (" + std::to_string(s.point.i) + "," +
                               std::to_string(s.point.j) +
                               "): " + monomial_str(matching_monomial(s.graph, s.matching)) +
                               " via";
            for (const RewriteOp& op : s.ops) line += " " + op.name();
            emit(line, o.out);
            break;
        }
    }
    return 0;
}

int run_verify(const Options& o) {
    RationalIndex rho = parse_rational(o.rho_str);
    bool pass = true;
    std::string report;
    auto check = [&](const std::string& label, bool ok) {
        report += label + ": " + (ok ? "ok" : "FAIL") + "\n";
        pass = pass && ok;
    };

    SnakeGraph g = build_snake(rho);
    TriPoly dp = numerator_dp(g);

    mpz_class count = markov_number(rho);
    if (count <= mpz_class(o.cap)) {
        try {
            check("dp == enumeration", dp == numerator_from_enumeration(g, o.cap));
        } catch (const CapExceeded&) {
            report += "dp == enumeration: skipped (matching count above cap)\n";
        }
    } else {
        report += "dp == enumeration: skipped (matching count above cap)\n";
    }

    check("mutation * denominator == dp in squared variables",
          laurent_from_numerator(rho, dp) == mutation_polynomial(rho));
    check("matching count == Vieta recurrence", count == markov_number_vieta(rho));

    // Farey parents of rho give the triple (M_lo, M_rho, M_hi) to test.
    TriPoly lo = TriPoly::x(), hi = mutation_polynomial(RationalIndex(1, 1));
    if (rho != RationalIndex(1, 1)) {
        long la = 0, lb = 1, ha = 1, hb = 1;
        while (true) {
            long ma = la + ha, mb = lb + hb;
            if (ma == rho.a && mb == rho.b) break;
            if (static_cast<long>(rho.a) * mb < ma * static_cast<long>(rho.b)) {
                ha = ma;
                hb = mb;
            } else {
                la = ma;
                lb = mb;
            }
        }
        lo = la == 0 ? TriPoly::x() : mutation_polynomial(RationalIndex(int(la), int(lb)));
        hi = mutation_polynomial(RationalIndex(int(ha), int(hb)));
    } else {
        hi = TriPoly::y();  // seed triple (x, y, M_{1/1})
    }
    check("Markov identity on the Farey triple",
          verify_markov_identity(lo, mutation_polynomial(rho), hi));

    report += std::string(pass ? "pass" : "fail");
    emit(report, o.out);
    return pass ? 0 : 1;
}

int run_saturate(const Options& o) {
    if (o.do_sweep) {
        std::filesystem::path dir =
            o.out.empty() ? default_results_dir() : std::filesystem::path(o.out);
        SweepSummary s = sweep(o.max_sum, dir);
        if (out_kind(o) == OutKind::Json) {
            std::cout << sweep_to_json(s).dump() << '\n';
        } else {
            std::cout << "checked " << s.total << " indices up to a+b=" << s.max_sum << " ("
                      << s.reused << " reused): " << s.passed << " passed";
            if (!s.failures.empty()) {
                std::cout << ", failures:";
                for (const std::string& f : s.failures) std::cout << ' ' << f;
            }
            std::cout << "  [" << s.seconds << "s]\n";
        }
        return s.failures.empty() ? 0 : 1;
    }
    RationalIndex rho = parse_rational(o.rho_str);
    SaturationReport r = saturation_report(rho);
    if (out_kind(o) == OutKind::Json) {
        emit(report_to_json(r).dump(), o.out);
    } else {
        std::string line = "rho " + rho.str() + ": " + std::to_string(r.lattice_count) +
                           " lattice points, support " +
                           (r.support_minus_polygon.empty() && r.polygon_minus_support.empty()
                                ? std::string("== polygon")
                                : std::string("!= polygon")) +
                           ", " + (r.pass ? "pass" : "fail");
        emit(line, o.out);
    }
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Markov snake graphs: words, matchings, polynomials, Newton polygons"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* sub, bool needs_rho) {
        if (needs_rho)
            sub->add_option("rho", o.rho_str, "rational index a/b in (0,1]")->required();
        auto* j = sub->add_flag("--json", o.json, "machine-readable JSON");
        sub->add_option("--out", o.out, "write output to this file");
        return j;
    };
    auto add_render = [&](CLI::App* sub, CLI::Option* j) {
        auto* s = sub->add_flag("--svg", o.svg, "render as SVG");
        auto* t = sub->add_flag("--tikz", o.tikz, "render as TikZ");
        j->excludes(s)->excludes(t);
        s->excludes(t);
    };

    auto* word = app.add_subcommand("word", "Christoffel word and its modified form");
    add_common(word, true);

    auto* snake = app.add_subcommand("snake", "build the weighted snake graph");
    add_render(snake, add_common(snake, true));

    auto* poly = app.add_subcommand("poly", "numerator polynomial of the Markov element");
    add_common(poly, true);
    poly->add_option("--method", o.method, "dp | enumerate | mutation")
        ->check(CLI::IsMember({"dp", "enumerate", "mutation"}));
    poly->add_option("--cap", o.cap, "enumeration cap");

    auto* newton = app.add_subcommand("newton", "Newton polygon of the numerator");
    add_render(newton, add_common(newton, true));
    newton->add_option("--point", o.point_str, "overlay the construction path to i,j");

    auto* match = app.add_subcommand("match", "construct a matching for one lattice point");
    add_render(match, add_common(match, true));
    match->add_option("--point", o.point_str, "target lattice point i,j")->required();

    auto* verify = app.add_subcommand("verify", "cross-check all computation paths");
    add_common(verify, true);
    verify->add_option("--cap", o.cap, "enumeration cap");

    auto* saturate = app.add_subcommand("saturate", "support vs polygon, point by point");
    saturate->add_option("rho", o.rho_str, "rational index a/b in (0,1]");
    saturate->add_flag("--json", o.json, "machine-readable JSON");
    saturate->add_option("--out", o.out, "report file, or results directory with --sweep");
    saturate->add_flag("--sweep", o.do_sweep, "all coprime indices with a+b <= max-sum");
    saturate->add_option("--max-sum", o.max_sum, "sweep bound on a+b")->check(CLI::Range(2, 1000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (word->parsed()) return run_word(o);
        if (snake->parsed()) return run_snake(o);
        if (poly->parsed()) return run_poly(o);
        if (newton->parsed()) return run_newton(o);
        if (match->parsed()) return run_match(o);
        if (verify->parsed()) return run_verify(o);
        if (saturate->parsed()) {
            if (!o.do_sweep && o.rho_str.empty()) {
                std::cerr << "saturate needs a rho or --sweep\n";
                return 2;
            }
            return run_saturate(o);
        }
    } catch (const CLI::RequiredError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const msnake::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
