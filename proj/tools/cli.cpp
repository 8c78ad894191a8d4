#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lcgauss/error.hpp"
#include "lcgauss/expr.hpp"
#include "lcgauss/gaussmap.hpp"
#include "lcgauss/minkowski.hpp"
#include "lcgauss/report.hpp"
#include "lcgauss/revolution.hpp"
#include "lcgauss/surface.hpp"
#include "lcgauss/verify.hpp"

namespace lcgauss::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FamilyConstants {
    std::optional<double> C, C1, C2, C3, B, m, k;
    std::string sign = "+";
};

struct RunConfig {
    std::array<std::optional<std::string>, 4> X;
    std::optional<std::string> surface_file;
    std::optional<std::string> family;
    FamilyConstants constants;
    std::optional<std::string> u_range, v_range;
    std::optional<double> margin;
    std::vector<double> r;
    std::string grid = "20x20";
    std::optional<double> tol;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::uint64_t seed = kDefaultSeed;

    // subcommand-specific
    std::string suite;
    std::string projection = "drop-x4";
    std::string vector;
    std::optional<std::string> point;
};

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

int exit_code_for(const Error& e) { return e.is_geometric() ? kGeometricFailure : kInputError; }

double constant_value(const std::string& text) {
    const Expr e = parse(text);
    if (e.depends_on(Var::U) || e.depends_on(Var::V)) input_error("'" + text + "' must not depend on u or v");
    return e.eval(0.0, 0.0);
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) input_error(std::string(flag) + " expects a:b, got '" + text + "'");
    const double a = constant_value(text.substr(0, colon));
    const double b = constant_value(text.substr(colon + 1));
    if (!(a < b)) input_error(std::string(flag) + " needs a < b, got '" + text + "'");
    return {a, b};
}

std::pair<int, int> parse_grid(const std::string& text) {
    const auto x = text.find('x');
    auto to_int = [&](std::string_view s) {
        int n = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc() || p != s.data() + s.size()) input_error("--grid expects NUxNV, got '" + text + "'");
        return n;
    };
    if (x == std::string::npos) input_error("--grid expects NUxNV, got '" + text + "'");
    const std::string_view view(text);
    const int nu = to_int(view.substr(0, x)), nv = to_int(view.substr(x + 1));
    if (nu < 2 || nv < 2) input_error("grid sizes must be at least 2");
    return {nu, nv};
}

std::vector<double> r_values(const RunConfig& cfg) {
    std::vector<double> r = cfg.r.empty() ? std::vector<double>{1.0} : cfg.r;
    for (double x : r)
        if (!(x > 0.0) || !std::isfinite(x)) input_error("every --r value must be positive, got " + format_real(x));
    return r;
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    input_error("--sign expects + or -, got '" + s + "'");
}

struct FamilySurface {
    ProfileCurve profile;
    RevolutionKind kind;
    std::string description;
};

FamilySurface build_family(const std::string& name, const FamilyConstants& c) {
    const int sign = parse_sign(c.sign);
    const double C1 = c.C1.value_or(0.0), m = c.m.value_or(0.0), k = c.k.value_or(0.0);
    std::string tail = " C1=" + format_real(C1) + " m=" + format_real(m) + " k=" + format_real(k) +
                       " sign=" + (sign > 0 ? "+" : "-");
    if (name == "umbilic-hyperbolic") {
        const double C = c.C.value_or(1.0), C2 = c.C2.value_or(0.0);
        return {family_umbilic_hyperbolic(C, C2, C1, m, k, sign), RevolutionKind::HyperbolicType,
                "C=" + format_real(C) + " C2=" + format_real(C2) + tail};
    }
    if (name == "maximal-hyperbolic") {
        const double C3 = c.C3.value_or(1.0), C2 = c.C2.value_or(0.0);
        return {family_maximal_hyperbolic(C3, C2, C1, m, k, sign), RevolutionKind::HyperbolicType,
                "C3=" + format_real(C3) + " C2=" + format_real(C2) + tail};
    }
    if (name == "umbilic-elliptic") {
        const double B = c.B.value_or(1.0), C = c.C.value_or(1.5);
        return {family_umbilic_elliptic(B, C, C1, m, k, sign), RevolutionKind::EllipticType,
                "B=" + format_real(B) + " C=" + format_real(C) + tail};
    }
    if (name == "maximal-elliptic") {
        const double C = c.C.value_or(1.0), C2 = c.C2.value_or(1.5);
        return {family_maximal_elliptic(C, C2, C1, m, k, sign), RevolutionKind::EllipticType,
                "C=" + format_real(C) + " C2=" + format_real(C2) + tail};
    }
    input_error("unknown family '" + name +
                "' (expected umbilic-hyperbolic, maximal-hyperbolic, umbilic-elliptic or maximal-elliptic)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) input_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Immersion load_surface(const RunConfig& cfg) {
    const bool inline_given = cfg.X[0] || cfg.X[1] || cfg.X[2] || cfg.X[3];
    const int sources = int(inline_given) + int(cfg.surface_file.has_value()) + int(cfg.family.has_value());
    if (sources != 1)
        input_error("give exactly one surface source: --X1..--X4, --surface-file or --family");

    std::optional<Immersion> s;
    if (inline_given) {
        std::array<std::string, 4> x;
        for (int i = 0; i < 4; ++i) {
            if (!cfg.X[static_cast<std::size_t>(i)]) input_error("inline surfaces need all of --X1..--X4");
            x[static_cast<std::size_t>(i)] = *cfg.X[static_cast<std::size_t>(i)];
        }
        if (!cfg.u_range || !cfg.v_range) input_error("inline surfaces need --u-range and --v-range");
        s = Immersion::from_strings(x, Domain{}, cfg.margin.value_or(kDefaultMargin));
    } else if (cfg.surface_file) {
        s = parse_surface_definition(read_file(*cfg.surface_file));
    } else {
        const FamilySurface f = build_family(*cfg.family, cfg.constants);
        s = build_revolution(f.profile, f.kind);
    }

    Domain d = s->domain();
    if (cfg.u_range) std::tie(d.u_min, d.u_max) = parse_range(*cfg.u_range, "--u-range");
    if (cfg.v_range) std::tie(d.v_min, d.v_max) = parse_range(*cfg.v_range, "--v-range");
    const double margin = cfg.margin.value_or(s->margin());
    if (!(margin >= 0.0 && margin < 0.5)) input_error("--margin must lie in [0, 0.5)");
    return s->with_domain(d, margin);
}

std::string output_format(const RunConfig& cfg, const char* fallback, std::initializer_list<const char*> allowed) {
    const std::string f = cfg.format.value_or(fallback);
    for (const char* a : allowed)
        if (f == a) return f;
    input_error("--format " + f + " is not supported by this subcommand");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (!cfg.out) {
        out << text;
        return;
    }
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) input_error("cannot write '" + *cfg.out + "'");
    file << text;
}

Json vector_json(const MVec4& x) { return Json::array({x[0], x[1], x[2], x[3]}); }

Json surface_json(const Immersion& s) {
    Json j;
    for (int i = 0; i < 4; ++i) j["X" + std::to_string(i + 1)] = s.components()[static_cast<std::size_t>(i)].str();
    j["u_min"] = s.domain().u_min;
    j["u_max"] = s.domain().u_max;
    j["v_min"] = s.domain().v_min;
    j["v_max"] = s.domain().v_max;
    j["margin"] = s.margin();
    return j;
}

struct PointResult {
    double u, v, r;
    std::optional<CurvatureReport> report;
    std::string error;
};

struct Summary {
    double r = 1.0;
    int points = 0;
    double umbilic_defect_plus = 0.0, umbilic_defect_minus = 0.0;
    double max_abs_H_plus = 0.0, max_abs_H_minus = 0.0, max_H_vec_norm = 0.0;
    double flat_defect_plus = 0.0, flat_defect_minus = 0.0;
    bool umbilic_plus = true, umbilic_minus = true, flat_plus = true, flat_minus = true, maximal = true;

    void add(const CurvatureReport& rep) {
        ++points;
        umbilic_defect_plus = std::max(umbilic_defect_plus, rep.plus.k1 - rep.plus.k2);
        umbilic_defect_minus = std::max(umbilic_defect_minus, rep.minus.k1 - rep.minus.k2);
        max_abs_H_plus = std::max(max_abs_H_plus, std::abs(rep.plus.H));
        max_abs_H_minus = std::max(max_abs_H_minus, std::abs(rep.minus.H));
        max_H_vec_norm = std::max(max_H_vec_norm, rep.H_vec_norm);
        flat_defect_plus = std::max({flat_defect_plus, std::abs(rep.plus.k1), std::abs(rep.plus.k2)});
        flat_defect_minus = std::max({flat_defect_minus, std::abs(rep.minus.k1), std::abs(rep.minus.k2)});
        umbilic_plus = umbilic_plus && rep.flags.umbilic_plus;
        umbilic_minus = umbilic_minus && rep.flags.umbilic_minus;
        flat_plus = flat_plus && rep.flags.flat_plus;
        flat_minus = flat_minus && rep.flags.flat_minus;
        maximal = maximal && rep.flags.maximal;
    }

    Json json() const {
        Json j;
        j["r"] = r;
        j["points"] = points;
        j["max_umbilicity_defect_plus"] = umbilic_defect_plus;
        j["max_umbilicity_defect_minus"] = umbilic_defect_minus;
        j["max_abs_H_plus"] = max_abs_H_plus;
        j["max_abs_H_minus"] = max_abs_H_minus;
        j["max_H_vec_norm"] = max_H_vec_norm;
        j["max_flatness_defect_plus"] = flat_defect_plus;
        j["max_flatness_defect_minus"] = flat_defect_minus;
        const bool any = points > 0;
        j["umbilic"] = any && umbilic_plus && umbilic_minus;
        j["umbilic_plus"] = any && umbilic_plus;
        j["umbilic_minus"] = any && umbilic_minus;
        j["flat_plus"] = any && flat_plus;
        j["flat_minus"] = any && flat_minus;
        j["maximal"] = any && maximal;
        return j;
    }
};

Json fits_json(const std::vector<MVec4>& cloud) {
    Json fits;
    try {
        const HyperplaneFit h = fit_hyperplane(cloud);
        Json j;
        j["normal"] = vector_json(h.plane.normal);
        j["offset"] = h.plane.offset;
        j["rms_residual"] = h.rms_residual;
        j["type"] = to_string(hyperplane_character(h.plane));
        fits["hyperplane"] = j;
    } catch (const Error& e) {
        fits["hyperplane"] = Json{{"error", e.what()}};
    }
    for (auto [kind, key] : {std::pair{QuadricKind::DeSitter, "de_sitter"}, std::pair{QuadricKind::Hyperbolic, "hyperbolic"}}) {
        try {
            const QuadricFit q = fit_quadric_sphere(cloud, kind);
            Json j;
            j["center"] = vector_json(q.quadric.center);
            j["radius"] = q.quadric.radius;
            j["rms_residual"] = q.rms_residual;
            fits[key] = j;
        } catch (const Error& e) {
            fits[key] = Json{{"error", e.what()}};
        }
    }
    return fits;
}

void flatten(const Json& j, const std::string& prefix, std::string& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten(*it, key, out);
        } else {
            out += " " + key + "=";
            if (it->is_array()) {
                std::string parts;
                for (const auto& x : *it) parts += (parts.empty() ? "" : ",") + dump_json(x, 0);
                out += parts;
            } else if (it->is_string()) {
                out += it->get<std::string>();
            } else {
                out += dump_json(*it, 0);
            }
        }
    }
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Immersion s = load_surface(cfg);
    const auto [nu, nv] = parse_grid(cfg.grid);
    const auto rs = r_values(cfg);
    const std::string format = output_format(cfg, "json", {"json", "csv"});

    std::vector<PointResult> results;
    std::vector<MVec4> cloud;
    int code = kSuccess;
    std::string first_error;
    for (double u : grid_axis(s.domain().u_min, s.domain().u_max, nu, s.margin())) {
        for (double v : grid_axis(s.domain().v_min, s.domain().v_max, nv, s.margin())) {
            std::optional<SurfaceJet> jet;
            std::string jet_error;
            try {
                jet = s.jet(u, v);
                cloud.push_back(jet->X);
            } catch (const Error& e) {
                jet_error = e.what();
                code = std::max(code, exit_code_for(e));
            }
            for (double r : rs) {
                PointResult p{u, v, r, std::nullopt, jet_error};
                if (jet) {
                    try {
                        p.report = classify_jet(*jet, r, cfg.tol.value_or(kDefaultTol));
                    } catch (const Error& e) {
                        p.error = e.what();
                        code = std::max(code, exit_code_for(e));
                    }
                }
                if (!p.error.empty() && first_error.empty()) first_error = p.error;
                results.push_back(std::move(p));
            }
        }
    }

    std::vector<Summary> summaries;
    for (double r : rs) {
        Summary sm;
        sm.r = r;
        for (const auto& p : results)
            if (p.r == r && p.report) sm.add(*p.report);
        summaries.push_back(sm);
    }
    const Json fits = fits_json(cloud);

    std::string text;
    if (format == "json") {
        Json j;
        j["surface"] = surface_json(s);
        j["grid"] = Json::array({nu, nv});
        j["r"] = rs;
        j["tol"] = cfg.tol.value_or(kDefaultTol);
        Json points = Json::array();
        for (const auto& p : results) {
            Json row;
            row["u"] = p.u;
            row["v"] = p.v;
            row["r"] = p.r;
            if (p.report)
                row["report"] = to_json(*p.report);
            else
                row["error"] = p.error;
            points.push_back(row);
        }
        j["points"] = points;
        Json summary = Json::array();
        for (const auto& sm : summaries) summary.push_back(sm.json());
        j["summary"] = summary;
        j["fits"] = fits;
        text = dump_json(j) + "\n";
    } else {
        text = "u,v,r," + csv_header() + "\n";
        for (const auto& p : results) {
            const std::string lead = format_real(p.u) + "," + format_real(p.v) + "," + format_real(p.r) + ",";
            if (p.report)
                text += lead + csv_row(*p.report) + "\n";
            else
                text += "# error at " + lead + " " + p.error + "\n";
        }
        for (const auto& sm : summaries) {
            text += "# summary";
            flatten(sm.json(), "", text);
            text += "\n";
        }
        text += "# fits";
        flatten(fits, "", text);
        text += "\n";
    }
    emit(cfg, text, out);
    if (code != kSuccess) err << "error: " << first_error << "\n";
    return code;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto suite = parse_suite(cfg.suite);
    if (!suite) input_error("unknown suite '" + cfg.suite + "' (expected odes, closed-forms, families, theorems or all)");
    const VerifyReport report = run_verify(*suite, cfg.seed);
    emit(cfg, format_report(report), out);
    return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_mesh(const RunConfig& cfg, std::ostream& err) {
    if (!cfg.out) input_error("mesh needs --out <file.obj>");
    output_format(cfg, "obj", {"obj"});
    static const char* const kProjections[] = {"drop-x1", "drop-x2", "drop-x3", "drop-x4"};
    int dropped = -1;
    for (int i = 0; i < 4; ++i)
        if (cfg.projection == kProjections[i]) dropped = i;
    if (dropped < 0) input_error("--projection must be one of drop-x1, drop-x2, drop-x3, drop-x4");

    const Immersion s = load_surface(cfg);
    const auto [nu, nv] = parse_grid(cfg.grid);
    const auto rs = r_values(cfg);
    if (rs.size() > 1) err << "note: mesh curvature sidecar uses r=" << format_real(rs.front()) << " only\n";
    const double r = rs.front();

    std::string obj = "# lcgauss mesh " + std::to_string(nu) + "x" + std::to_string(nv) + " " + cfg.projection + "\n";
    std::string csv = "vertex,u,v,r,k1_plus,k2_plus,H_plus,k1_minus,k2_minus,H_minus\n";
    int index = 0;
    for (const auto& pt : sample_grid(s, nu, nv)) {
        const CurvatureReport rep = classify_jet(pt.jet, r, cfg.tol.value_or(kDefaultTol));
        obj += "v";
        for (int i = 0; i < 4; ++i)
            if (i != dropped) obj += " " + format_real(pt.jet.X[i]);
        obj += "\n";
        csv += std::to_string(++index) + "," + format_real(pt.u) + "," + format_real(pt.v) + "," + format_real(r);
        for (double x : {rep.plus.k1, rep.plus.k2, rep.plus.H, rep.minus.k1, rep.minus.k2, rep.minus.H})
            csv += "," + format_real(x);
        csv += "\n";
    }
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = i * nv + j + 1, b = a + nv, c = b + 1, d = a + 1;
            obj += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
            obj += "f " + std::to_string(a) + " " + std::to_string(c) + " " + std::to_string(d) + "\n";
        }
    }

    std::filesystem::path sidecar(*cfg.out);
    sidecar.replace_extension(".csv");
    if (sidecar == std::filesystem::path(*cfg.out)) sidecar += ".vertices.csv";
    RunConfig obj_cfg = cfg;
    emit(obj_cfg, obj, err);
    obj_cfg.out = sidecar.string();
    emit(obj_cfg, csv, err);
    return kSuccess;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.family) input_error("family needs --name");
    const FamilySurface f = build_family(*cfg.family, cfg.constants);
    const Immersion s = build_revolution(f.profile, f.kind);
    std::string text = "# " + *cfg.family + " " + f.description + "\n";
    text += format_surface_definition(s);
    emit(cfg, text, out);
    return kSuccess;
}

int cmd_classify_vector(const RunConfig& cfg, std::ostream& out) {
    const std::string format = output_format(cfg, "json", {"json", "csv"});
    const MVec4 x = parse_vector(cfg.vector);
    const CausalCharacter c = causal_character(x, cfg.tol.value_or(kDefaultCausalTol));
    std::string text;
    if (format == "json") {
        Json j;
        j["vector"] = vector_json(x);
        j["inner"] = inner(x, x);
        j["character"] = to_string(c);
        text = dump_json(j) + "\n";
    } else {
        text = "x1,x2,x3,x4,inner,character\n" + format_vector(x) + "," + format_real(inner(x, x)) + "," +
               to_string(c) + "\n";
    }
    emit(cfg, text, out);
    return kSuccess;
}

int cmd_gauss(const RunConfig& cfg, std::ostream& out) {
    const Immersion s = load_surface(cfg);
    const auto rs = r_values(cfg);
    const std::string format = output_format(cfg, "json", {"json", "csv"});
    std::vector<std::pair<double, double>> points;
    if (cfg.point) {
        const auto colon = cfg.point->find(':');
        if (colon == std::string::npos) input_error("--point expects u:v");
        points.emplace_back(constant_value(cfg.point->substr(0, colon)), constant_value(cfg.point->substr(colon + 1)));
    } else {
        const auto [nu, nv] = parse_grid(cfg.grid);
        for (const auto& pt : sample_grid(s, nu, nv)) points.emplace_back(pt.u, pt.v);
    }

    Json rows = Json::array();
    std::string csv = "u,v,r,l_plus_1,l_plus_2,l_plus_3,l_plus_4,l_minus_1,l_minus_2,l_minus_3,l_minus_4\n";
    for (const auto& [u, v] : points) {
        const SurfaceJet j = s.jet(u, v);
        for (double r : rs) {
            const LightconePair pair = solve_lightcone_normals(j, r);
            Json row;
            row["u"] = u;
            row["v"] = v;
            row["r"] = r;
            row["l_plus"] = vector_json(pair.plus);
            row["l_minus"] = vector_json(pair.minus);
            rows.push_back(row);
            csv += format_real(u) + "," + format_real(v) + "," + format_real(r) + "," + format_vector(pair.plus) + "," +
                   format_vector(pair.minus) + "\n";
        }
    }
    emit(cfg, format == "json" ? dump_json(rows) + "\n" : csv, out);
    return kSuccess;
}

void add_surface_flags(CLI::App& app, RunConfig& cfg) {
    for (int i = 0; i < 4; ++i) {
        const std::string name = "--X" + std::to_string(i + 1);
        app.add_option(name, cfg.X[static_cast<std::size_t>(i)], "component x" + std::to_string(i + 1) + "(u,v)")
            ->group("Surface");
    }
    app.add_option("--surface-file", cfg.surface_file, "surface definition file")->group("Surface");
    app.add_option("--family", cfg.family, "family name (see `family --help`)")->group("Surface");
    app.add_option("--u-range", cfg.u_range, "u interval a:b")->group("Surface");
    app.add_option("--v-range", cfg.v_range, "v interval a:b")->group("Surface");
    app.add_option("--margin", cfg.margin, "fraction trimmed from each side of the domain")->group("Surface");
}

void add_family_constants(CLI::App& app, FamilyConstants& c) {
    app.add_option("--C", c.C, "family constant C")->group("Family");
    app.add_option("--C1", c.C1, "family constant C1 (shift)")->group("Family");
    app.add_option("--C2", c.C2, "family constant C2")->group("Family");
    app.add_option("--C3", c.C3, "family constant C3 (maximal-hyperbolic)")->group("Family");
    app.add_option("--B", c.B, "family constant B (umbilic-elliptic)")->group("Family");
    app.add_option("--m", c.m, "family constant m")->group("Family");
    app.add_option("--k", c.k, "family constant k")->group("Family");
    app.add_option("--sign", c.sign, "sign of rho: + or -")->group("Family");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Lightcone Gauss maps and curvature of spacelike surfaces in R^4_1", "lcgauss"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--tol", cfg.tol, "classification tolerance (default 1e-8; 1e-10 for classify-vector)");
    app.add_option("--r", cfg.r, "lightcone scale(s), comma separated")->delimiter(',');
    app.add_option("--grid", cfg.grid, "grid size NUxNV")->capture_default_str();
    app.add_option("--out", cfg.out, "output file (default stdout)");
    app.add_option("--format", cfg.format, "json, csv or obj");
    app.add_option("--seed", cfg.seed, "random seed for verify suites")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "curvature report over a grid");
    add_surface_flags(*analyze, cfg);
    add_family_constants(*analyze, cfg.constants);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", cfg.suite, "odes, closed-forms, families, theorems or all")->required();

    auto* mesh = app.add_subcommand("mesh", "export a triangulated grid as OBJ plus a curvature CSV");
    add_surface_flags(*mesh, cfg);
    add_family_constants(*mesh, cfg.constants);
    mesh->add_option("--projection", cfg.projection, "drop-x1, drop-x2, drop-x3 or drop-x4")->capture_default_str();

    auto* family = app.add_subcommand("family", "print the surface definition of a named family");
    family->add_option("--name", cfg.family, "umbilic-hyperbolic, maximal-hyperbolic, umbilic-elliptic, maximal-elliptic")
        ->required();
    add_family_constants(*family, cfg.constants);

    auto* classify = app.add_subcommand("classify-vector", "causal character of x1,x2,x3,x4");
    classify->add_option("vector", cfg.vector, "x1,x2,x3,x4 (use -- before a leading minus)")->required();

    auto* gauss = app.add_subcommand("gauss", "lightcone normal pairs at a point or over a grid");
    add_surface_flags(*gauss, cfg);
    add_family_constants(*gauss, cfg.constants);
    gauss->add_option("--point", cfg.point, "single parameter point u:v");

    // CLI11 consumes the arguments back to front, without the program name.
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(std::move(rest));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*analyze) return cmd_analyze(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out);
        if (*mesh) return cmd_mesh(cfg, err);
        if (*family) return cmd_family(cfg, out);
        if (*classify) return cmd_classify_vector(cfg, out);
        if (*gauss) return cmd_gauss(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace lcgauss::cli
