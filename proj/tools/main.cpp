// knets command-line interface: verification, family generation, Latin
// square tooling, perspectivity and pencil reports, point-set discovery,
// projective-plane synthesis, parameter sampling and SVG rendering.
// Exit codes: 0 pass, 1 mathematical failure, 2 I/O or format error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knets/error.hpp"
#include "knets/families.hpp"
#include "knets/json_io.hpp"
#include "knets/latin.hpp"
#include "knets/net.hpp"
#include "knets/pencil.hpp"
#include "knets/plane.hpp"
#include "knets/render.hpp"

using namespace knets;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitFormat = 2;

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t comma = text.find(',', start);
        std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                        : comma - start);
        out.push_back(rational_from_string(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// "p/q" means the ratio [p : q]; "a,b" (or "a,b,c") is an explicit tuple.
std::vector<Rational> parse_projective_param(const std::string& text, size_t expected) {
    std::vector<Rational> vals;
    if (text.find(',') == std::string::npos && expected == 2) {
        Rational r = rational_from_string(text);
        vals = {Rational(numerator(r)), Rational(denominator(r))};
    } else {
        vals = parse_rational_list(text);
    }
    if (vals.size() != expected)
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) +
                                               " coordinates in '" + text + "'");
    return vals;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + out_path);
        f << text;
    }
}

std::string perm_str(const Perm& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(p[i] + 1);
    }
    return s + ")";
}

struct VerifySummary {
    VerificationReport report;
    std::vector<LatinSquare> squares;
    std::vector<std::string> isotopy;
    bool orthogonal = false;
    std::optional<PencilCertificate> certificate;
    bool pass = false;
};

VerifySummary summarize_net(const KNetConfig& config) {
    VerifySummary s;
    s.report = verify_net(config);
    s.pass = s.report.pass();
    if (!s.pass) return s;
    s.squares = derive_latin_squares(config);
    s.orthogonal = is_orthogonal_set(s.squares);
    s.pass = s.pass && s.orthogonal;
    for (const auto& sq : s.squares) {
        if (sq.order() <= 5) {
            auto g = is_group_isotopic(sq);
            s.isotopy.push_back(g ? ("group " + *g) : "not isotopic to any group table");
        } else {
            s.isotopy.push_back("order > 5: not classified");
        }
    }
    s.certificate = net_pencil_certificate(config);
    s.pass = s.pass && s.certificate->rank == 2 && s.certificate->base_points_ok;
    return s;
}

void print_summary(const VerifySummary& s, bool json_mode) {
    if (json_mode) {
        Json j;
        j["pass"] = s.pass;
        j["k"] = s.report.k;
        j["d"] = s.report.d;
        Json checks = Json::array();
        for (const auto& c : s.report.checks)
            checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
        j["checks"] = checks;
        Json squares = Json::array();
        for (const auto& sq : s.squares) squares.push_back(latin_to_json(sq));
        j["latin_squares"] = squares;
        j["isotopy"] = s.isotopy;
        j["orthogonal_set"] = s.orthogonal;
        if (s.certificate) {
            Json coords = Json::array();
            for (const auto& c : s.certificate->class_coords) coords.push_back(c.str());
            j["pencil"] = {{"rank", s.certificate->rank},
                           {"class_coords", coords},
                           {"base_points_ok", s.certificate->base_points_ok}};
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << s.report.str();
    if (!s.report.pass()) return;
    for (size_t i = 0; i < s.squares.size(); ++i) {
        std::cout << "M" << (i + 3) << ":\n" << s.squares[i].str();
        std::cout << "  isotopy: " << s.isotopy[i] << "\n";
    }
    if (s.squares.size() >= 2)
        std::cout << "orthogonal set: " << (s.orthogonal ? "yes" : "NO") << "\n";
    if (s.certificate) {
        std::cout << "pencil rank: " << s.certificate->rank << "\n";
        for (size_t i = 0; i < s.certificate->class_coords.size(); ++i)
            std::cout << "  class " << (i + 1) << " [lambda:mu] = "
                      << s.certificate->class_coords[i].str() << "\n";
        std::cout << "base points: " << (s.certificate->base_points_ok ? "all on pencil" : "MISMATCH")
                  << "\n";
    }
    std::cout << (s.pass ? "PASS" : "FAIL") << "\n";
}

P1 to_p1(const NumberField& f, const std::vector<Rational>& v) {
    return P1{Scalar(f, v[0]), Scalar(f, v[1])};
}

P2 to_p2(const NumberField& f, const std::vector<Rational>& v) {
    return P2{Scalar(f, v[0]), Scalar(f, v[1]), Scalar(f, v[2])};
}

int run(int argc, char** argv) {
    CLI::App app{"exact k-net constructions, verification and discovery"};
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "machine-readable output where supported");

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "verify a net file and report its structure");
    std::string verify_file;
    cmd_verify->add_option("file", verify_file, "net JSON file")->required();

    // family
    auto* cmd_family = app.add_subcommand("family", "generate a named configuration");
    std::string family_name, family_out, family_params_file;
    std::string opt_s, opt_t, opt_u;
    int family_d = 3, family_bound = 5;
    bool family_verify = false, family_auto = false;
    cmd_family->add_option("name", family_name,
                           "conic|fermat|cubic|hesse|quartic-cyclic|quartic-klein|"
                           "quintic-cyclic|quintic-nongroup")
        ->required();
    cmd_family->add_option("--s", opt_s, "s parameter (ratio p/q or tuple a,b[,c])");
    cmd_family->add_option("--t", opt_t, "t parameter");
    cmd_family->add_option("--u", opt_u, "u parameter");
    cmd_family->add_option("--d", family_d, "degree (fermat)");
    cmd_family->add_option("--params", family_params_file, "hypersurface point JSON (quintics)");
    cmd_family->add_flag("--auto-sample", family_auto, "sample hypersurface parameters (quintics)");
    cmd_family->add_option("--bound", family_bound, "sampling bound");
    cmd_family->add_option("-o,--output", family_out, "output file (default stdout)");
    cmd_family->add_flag("--verify", family_verify, "print the verification report to stderr");

    // latin
    auto* cmd_latin = app.add_subcommand("latin", "Latin square tooling");
    auto* latin_classify = cmd_latin->add_subcommand("classify", "isotopy classes of order d");
    int latin_d = 3;
    latin_classify->add_option("-d,--order", latin_d, "order (<= 5)")->required();
    auto* latin_orth = cmd_latin->add_subcommand("check-orthogonal", "pairwise orthogonality");
    std::vector<std::string> latin_files;
    latin_orth->add_option("files", latin_files, "square JSON files")->required()->expected(-2);
    auto* latin_group = cmd_latin->add_subcommand("group-test", "group isotopy recognition");
    std::string latin_group_file;
    latin_group->add_option("file", latin_group_file, "square JSON file")->required();
    cmd_latin->require_subcommand(1);

    // persp
    auto* cmd_persp = app.add_subcommand("persp", "perspectivities between two d-gons");
    std::string persp_a, persp_b;
    std::vector<int> persp_classes;
    cmd_persp->add_option("A", persp_a, "line-class JSON (or a net file with --classes)")
        ->required();
    cmd_persp->add_option("B", persp_b, "line-class JSON");
    cmd_persp->add_option("--classes", persp_classes, "two 1-based class indices into a net file")
        ->expected(2);
    bool persp_allow6 = false;
    cmd_persp->add_flag("--allow-order-6", persp_allow6, "enable the 720-permutation search");

    // pencil
    auto* cmd_pencil = app.add_subcommand("pencil", "pencil certificate of a net");
    std::string pencil_file;
    cmd_pencil->add_option("file", pencil_file, "net JSON file")->required();

    // discover
    auto* cmd_discover = app.add_subcommand("discover", "parallel classes through a point set");
    std::string discover_file;
    int discover_d = 0;
    cmd_discover->add_option("file", discover_file, "points JSON file")->required();
    cmd_discover->add_option("-d,--degree", discover_d, "degree d with d^2 points")->required();

    // plane
    auto* cmd_plane = app.add_subcommand("plane", "projective plane from a complete MOLS set");
    std::vector<std::string> plane_files;
    cmd_plane->add_option("files", plane_files, "Latin square JSON files")->required()->expected(-1);
    std::string plane_out;
    cmd_plane->add_option("-o,--output", plane_out, "write the incidence structure as JSON");

    // render
    auto* cmd_render = app.add_subcommand("render", "draw a rational net as SVG");
    std::string render_file, render_out = "out.svg", render_viewbox;
    cmd_render->add_option("file", render_file, "net JSON file")->required();
    cmd_render->add_option("-o,--output", render_out, "output SVG path");
    cmd_render->add_option("--viewbox", render_viewbox, "minx,miny,maxx,maxy (default -5,-5,5,5)");

    // sample-params
    auto* cmd_sample = app.add_subcommand("sample-params", "exact quintic hypersurface point");
    std::string sample_which, sample_out;
    int sample_bound = 5;
    cmd_sample->add_option("which", sample_which, "cyclic5|nongroup5")->required();
    cmd_sample->add_option("--bound", sample_bound, "enumeration bound");
    cmd_sample->add_option("-o,--output", sample_out, "output file (default stdout)");

    // admissible
    auto* cmd_adm = app.add_subcommand("admissible", "check the (k,d) admissibility table");
    int adm_k = 0, adm_d = 0;
    cmd_adm->add_option("k", adm_k)->required();
    cmd_adm->add_option("d", adm_d)->required();

    CLI11_PARSE(app, argc, argv);

    if (cmd_verify->parsed()) {
        KNetConfig config = net_from_json(load_json_file(verify_file));
        VerifySummary s = summarize_net(config);
        print_summary(s, json_mode);
        return s.pass ? kExitPass : kExitMathFail;
    }

    if (cmd_family->parsed()) {
        NumberField q = NumberField::rationals();
        KNetConfig config = [&]() -> KNetConfig {
            if (family_name == "conic") return conic_net();
            if (family_name == "fermat") return fermat_net(family_d);
            if (family_name == "hesse") return hesse_net();
            if (family_name == "cubic") {
                if (opt_s.empty() || opt_t.empty())
                    throw Error(ErrorCode::InvalidArgument, "cubic needs --s and --t");
                return cubic_net(to_p1(q, parse_projective_param(opt_s, 2)),
                                 to_p1(q, parse_projective_param(opt_t, 2)));
            }
            if (family_name == "quartic-cyclic" || family_name == "quartic-klein") {
                if (opt_s.empty() || opt_t.empty() || opt_u.empty())
                    throw Error(ErrorCode::InvalidArgument, "quartics need --s, --t and --u");
                P1 s = to_p1(q, parse_projective_param(opt_s, 2));
                P1 t = to_p1(q, parse_projective_param(opt_t, 2));
                P1 u = to_p1(q, parse_projective_param(opt_u, 2));
                return family_name == "quartic-cyclic" ? quartic_net_cyclic(s, t, u)
                                                       : quartic_net_klein(s, t, u);
            }
            if (family_name == "quintic-cyclic" || family_name == "quintic-nongroup") {
                QuinticKind kind = family_name == "quintic-cyclic" ? QuinticKind::Cyclic
                                                                   : QuinticKind::NonGroup;
                if (family_auto) {
                    HypersurfacePoint p = sample_hypersurface(kind, family_bound);
                    std::cerr << "sampled parameters: "
                              << hypersurface_point_to_json(p).dump() << "\n";
                    return quintic_net(p);
                }
                if (!family_params_file.empty()) {
                    HypersurfacePoint p =
                        hypersurface_point_from_json(load_json_file(family_params_file));
                    if (p.kind != kind)
                        throw Error(ErrorCode::InvalidArgument,
                                    "parameter file belongs to the other quintic family");
                    return quintic_net(p);
                }
                if (opt_s.empty() || opt_t.empty())
                    throw Error(ErrorCode::InvalidArgument,
                                "quintics need --auto-sample, --params or --s/--t tuples");
                return quintic_net(kind, to_p2(q, parse_projective_param(opt_s, 3)),
                                   to_p2(q, parse_projective_param(opt_t, 3)));
            }
            throw Error(ErrorCode::InvalidArgument, "unknown family '" + family_name + "'");
        }();
        if (family_verify) {
            VerifySummary s = summarize_net(config);
            std::cerr << s.report.str();
            if (!s.pass) return kExitMathFail;
        }
        emit(net_to_json(config).dump(2) + "\n", family_out);
        return kExitPass;
    }

    if (cmd_latin->parsed()) {
        if (latin_classify->parsed()) {
            auto classes = classify_isotopy_classes(latin_d);
            auto reduced = enumerate_reduced(latin_d);
            if (json_mode) {
                Json j;
                j["order"] = latin_d;
                j["reduced_count"] = reduced.size();
                j["class_count"] = classes.size();
                Json reps = Json::array();
                for (const auto& c : classes) reps.push_back(latin_to_json(c));
                j["representatives"] = reps;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "order " << latin_d << ": " << reduced.size()
                          << " reduced squares, " << classes.size() << " isotopy classes\n";
                for (size_t i = 0; i < classes.size(); ++i) {
                    std::cout << "class " << (i + 1) << " canonical representative:\n"
                              << classes[i].str();
                    auto g = is_group_isotopic(classes[i]);
                    std::cout << "  " << (g ? ("group " + *g) : "not a group table class") << "\n";
                }
            }
            return kExitPass;
        }
        if (latin_orth->parsed()) {
            std::vector<LatinSquare> squares;
            for (const auto& f : latin_files) squares.push_back(latin_from_json(load_json_file(f)));
            bool ok = is_orthogonal_set(squares);
            std::cout << (ok ? "orthogonal set" : "NOT an orthogonal set") << "\n";
            return ok ? kExitPass : kExitMathFail;
        }
        LatinSquare sq = latin_from_json(load_json_file(latin_group_file));
        auto g = is_group_isotopic(sq);
        std::cout << (g ? ("isotopic to the multiplication table of " + *g)
                        : "not isotopic to any group multiplication table")
                  << "\n";
        return kExitPass;
    }

    if (cmd_persp->parsed()) {
        auto [a, b] = [&]() -> std::pair<LineClass, LineClass> {
            if (!persp_classes.empty()) {
                KNetConfig config = net_from_json(load_json_file(persp_a));
                int i = persp_classes[0], j = persp_classes[1];
                if (i < 1 || j < 1 || i > config.k() || j > config.k() || i == j)
                    throw Error(ErrorCode::InvalidArgument, "class indices out of range");
                return {config.classes[static_cast<size_t>(i - 1)],
                        config.classes[static_cast<size_t>(j - 1)]};
            }
            if (persp_b.empty())
                throw Error(ErrorCode::InvalidArgument, "need two class files or --classes i j");
            return {line_class_from_json(load_json_file(persp_a)).second,
                    line_class_from_json(load_json_file(persp_b)).second};
        }();
        PerspectivitySearch res = find_perspectivities(a, b, persp_allow6);
        if (json_mode) {
            Json j;
            j["count"] = res.perspectivities.size();
            Json list = Json::array();
            for (const auto& p : res.perspectivities)
                list.push_back({{"sigma", p.sigma}, {"axis", p.axis.str()}});
            j["perspectivities"] = list;
            j["degenerate_count"] = res.degenerate.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << res.perspectivities.size() << " perspectivities\n";
            for (const auto& p : res.perspectivities)
                std::cout << "  sigma " << perm_str(p.sigma) << "  axis " << p.axis.str() << "\n";
            if (!res.degenerate.empty())
                std::cout << res.degenerate.size() << " degenerate permutations (meets coincide)\n";
        }
        return kExitPass;
    }

    if (cmd_pencil->parsed()) {
        KNetConfig config = net_from_json(load_json_file(pencil_file));
        PencilCertificate cert = net_pencil_certificate(config);
        if (json_mode) {
            Json j;
            j["rank"] = cert.rank;
            j["generators"] = {form_to_json(cert.pencil.f), form_to_json(cert.pencil.g)};
            Json coords = Json::array();
            for (const auto& c : cert.class_coords) coords.push_back(c.str());
            j["class_coords"] = coords;
            j["base_points_ok"] = cert.base_points_ok;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "rank: " << cert.rank << "\n";
            std::cout << "F = " << cert.pencil.f.str() << "\n";
            std::cout << "G = " << cert.pencil.g.str() << "\n";
            for (size_t i = 0; i < cert.class_coords.size(); ++i)
                std::cout << "class " << (i + 1) << " [lambda:mu] = " << cert.class_coords[i].str()
                          << "\n";
            std::cout << "base points: " << (cert.base_points_ok ? "ok" : "MISMATCH") << "\n";
        }
        return cert.rank == 2 && cert.base_points_ok ? kExitPass : kExitMathFail;
    }

    if (cmd_discover->parsed()) {
        auto [field, points] = points_from_json(load_json_file(discover_file));
        auto classes = discover_parallel_classes(points, discover_d);
        if (json_mode) {
            Json j;
            j["k"] = classes.size();
            Json cls = Json::array();
            for (const auto& c : classes) {
                Json lines = Json::array();
                for (const auto& l : c.lines()) lines.push_back(l.str());
                cls.push_back(lines);
            }
            j["classes"] = cls;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << classes.size() << " parallel classes (k = " << classes.size() << ")\n";
            for (size_t i = 0; i < classes.size(); ++i) {
                std::cout << "class " << (i + 1) << ":\n";
                for (const auto& l : classes[i].lines()) std::cout << "  " << l.str() << "\n";
            }
        }
        return kExitPass;
    }

    if (cmd_plane->parsed()) {
        std::vector<LatinSquare> squares;
        for (const auto& f : plane_files) squares.push_back(latin_from_json(load_json_file(f)));
        IncidenceStructure plane = build_projective_plane(squares);
        int order = squares[0].order();
        auto checks = check_plane_axioms(plane, order);
        bool ok = true;
        std::cout << "projective plane of order " << order << ": " << plane.point_labels.size()
                  << " points, " << plane.lines.size() << " lines\n";
        for (const auto& c : checks) {
            ok = ok && c.pass;
            std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.pass && !c.witness.empty()) std::cout << " -- " << c.witness;
            std::cout << "\n";
        }
        if (!plane_out.empty()) {
            Json j;
            j["order"] = order;
            j["points"] = plane.point_labels;
            j["lines"] = plane.lines;
            save_json_file(plane_out, j);
        }
        return ok ? kExitPass : kExitMathFail;
    }

    if (cmd_render->parsed()) {
        KNetConfig config = net_from_json(load_json_file(render_file));
        RenderOptions opts;
        if (!render_viewbox.empty()) {
            auto vals = parse_rational_list(render_viewbox);
            if (vals.size() != 4)
                throw Error(ErrorCode::ParseError, "viewbox needs 4 comma-separated numbers");
            opts.min_x = numerator(vals[0]).convert_to<double>() /
                         denominator(vals[0]).convert_to<double>();
            opts.min_y = numerator(vals[1]).convert_to<double>() /
                         denominator(vals[1]).convert_to<double>();
            opts.max_x = numerator(vals[2]).convert_to<double>() /
                         denominator(vals[2]).convert_to<double>();
            opts.max_y = numerator(vals[3]).convert_to<double>() /
                         denominator(vals[3]).convert_to<double>();
        }
        emit(render_svg(config, opts), render_out);
        return kExitPass;
    }

    if (cmd_sample->parsed()) {
        QuinticKind kind;
        if (sample_which == "cyclic5") kind = QuinticKind::Cyclic;
        else if (sample_which == "nongroup5") kind = QuinticKind::NonGroup;
        else throw Error(ErrorCode::InvalidArgument, "which must be cyclic5 or nongroup5");
        HypersurfacePoint p = sample_hypersurface(kind, sample_bound);
        emit(hypersurface_point_to_json(p).dump(2) + "\n", sample_out);
        return kExitPass;
    }

    if (cmd_adm->parsed()) {
        bool ok = is_admissible(adm_k, adm_d);
        std::cout << "(" << adm_k << "," << adm_d << ") " << (ok ? "admissible" : "not admissible")
                  << "\n";
        return ok ? kExitPass : kExitMathFail;
    }

    return kExitFormat;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? kExitFormat : kExitMathFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
}
