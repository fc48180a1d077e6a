#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "normvol/harness.hpp"
#include "normvol/voldefs.hpp"
#include "normvol/zonoid.hpp"

namespace normvol::cli {

using nlohmann::json;

namespace {

constexpr int kIsoDirections = 256;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Vector parse_vector(const std::string& s) {
    std::vector<double> xs;
    for (const auto& tok : split(s, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error(ErrorKind::InvalidArgument, "not a number: '" + tok + "'");
        xs.push_back(x);
    }
    return Eigen::Map<Vector>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
        f << content;
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    }
    std::filesystem::rename(tmp, path);
}

OptOptions make_options(double tol, int max_iter, int restarts, std::uint64_t seed) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "--tol must be positive");
    if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "--max-iter must be positive");
    if (restarts < 0) throw Error(ErrorKind::InvalidArgument, "--restarts must be nonnegative");
    return {tol, max_iter, restarts, seed};
}

// ---- compute ----

int cmd_compute(const std::string& path, const std::string& defs, const OptOptions& opts, std::ostream& out) {
    const auto file = read_body_file(path);
    const UnitBall b(to_polytope(file));
    std::vector<Definition> wanted;
    if (defs == "all") {
        wanted = all_definitions();
    } else {
        for (const auto& name : split(defs, ',')) wanted.push_back(parse_definition(name));
    }
    const auto report = compute_report(b, file.name.value_or(path), wanted, opts);
    json j;
    j["body"] = report.body_id;
    j["dim"] = b.dim();
    j["volume"] = b.body.volume();
    j["values"] = report.values;
    if (report.new_optimum) {
        const auto& o = *report.new_optimum;
        j["new_optimizer"] = {{"gap", o.gap},
                              {"iterations", o.iterations},
                              {"converged", o.converged},
                              {"objective", o.objective},
                              {"weights", o.weights}};
    }
    out << j.dump(2) << '\n';
    return kOk;
}

// ---- density ----

int cmd_density(const std::string& path, const std::string& def, int k, const std::vector<std::string>& vecs,
                const OptOptions& opts, std::ostream& out) {
    const UnitBall b(to_polytope(read_body_file(path)));
    const auto d = parse_definition(def);
    if (static_cast<int>(vecs.size()) != k) {
        throw Error(ErrorKind::InvalidArgument, "--k " + std::to_string(k) + " needs exactly that many --vectors");
    }
    std::vector<Vector> a;
    for (const auto& s : vecs) {
        a.push_back(parse_vector(s));
        if (a.back().size() != b.dim()) throw Error(ErrorKind::InvalidArgument, "vector dimension mismatch");
    }
    Matrix m(b.dim(), k);
    for (int j = 0; j < k; ++j) m.col(j) = a[j];
    if (rank(m) < k) throw Error(ErrorKind::Degenerate, "dependent vectors");
    out << std::setprecision(12) << induced_density(d, b, a, opts) << '\n';
    return kOk;
}

// ---- sweep ----

int default_dimension(const std::string& experiment) {
    return (experiment == "ordering" || experiment == "bp_centroid") ? 2 : 3;
}

int cmd_sweep(const std::string& experiment, int n, int trials, std::uint64_t seed, const std::string& out_path,
              const std::string& summary_path, const OptOptions& opts, std::ostream& out) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), experiment) == names.end()) {
        throw Error(ErrorKind::InvalidArgument, "unknown experiment: " + experiment);
    }
    if (n == 0) n = default_dimension(experiment);
    const auto records = run_experiment(experiment, n, trials, seed, opts);

    std::string csv = "experiment,trial,seed,lhs,rhs,margin,pass\n";
    for (const auto& r : records) {
        csv += r.experiment + ',' + std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' + fmt17(r.lhs) + ',' +
               fmt17(r.rhs) + ',' + fmt17(r.margin) + ',' + (r.pass ? "true" : "false") + '\n';
    }
    if (!out_path.empty()) write_atomically(out_path, csv);

    const auto s = summarize(experiment, records);
    json j = {{"experiment", s.experiment},
              {"n", n},
              {"trials", trials},
              {"seed", seed},
              {"records", s.records},
              {"failures", s.failures},
              {"pass_rate", s.pass_rate},
              {"min_margin", s.min_margin}};
    if (s.conjecture_observations > 0) {
        j["conjecture_observations"] = s.conjecture_observations;
        j["conjecture_flagged_trials"] = s.flagged_trials;
    }
    const std::string text = j.dump(2) + '\n';
    if (!summary_path.empty()) write_atomically(summary_path, text);
    out << text;
    return s.failures == 0 ? kOk : kAssertFailed;
}

// ---- plot ----

std::vector<Vector> sorted_by_angle(std::vector<Vector> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const Vector& a, const Vector& b) { return std::atan2(a(1), a(0)) < std::atan2(b(1), b(0)); });
    return pts;
}

std::vector<Vector> isoperimetrix_outline(const UnitBall& b, const OptOptions& opts) {
    std::vector<Vector> dirs;
    std::vector<double> h;
    for (int j = 0; j < kIsoDirections; ++j) {
        const double t = 2.0 * std::numbers::pi * j / kIsoDirections;
        Vector u(2);
        u << std::cos(t), std::sin(t);
        h.push_back(isoperimetrix_support(b, u, opts));
        dirs.push_back(std::move(u));
    }
    std::vector<Vector> pts;
    for (int j = 0; j < kIsoDirections; ++j) {
        const int i = (j + 1) % kIsoDirections;
        Eigen::Matrix2d m;
        m << dirs[j](0), dirs[j](1), dirs[i](0), dirs[i](1);
        Eigen::Vector2d rhs(h[j], h[i]);
        pts.push_back(m.inverse() * rhs);
    }
    return pts;
}

struct Outline {
    std::string id;
    std::string label;
    std::string color;
    std::vector<Vector> points;
};

std::string render_svg(const std::vector<Outline>& outlines) {
    double extent = 0.0;
    for (const auto& o : outlines) {
        for (const auto& p : o.points) extent = std::max(extent, p.cwiseAbs().maxCoeff());
    }
    const double size = 480.0;
    const double scale = 0.42 * size / extent;
    auto px = [&](double x) { return fmt6(0.5 * size + scale * x); };
    auto py = [&](double y) { return fmt6(0.5 * size - scale * y); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"0\" y1=\"" << size / 2 << "\" x2=\"" << size << "\" y2=\"" << size / 2
      << "\" stroke=\"#ccc\"/>\n"
      << "<line x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2 << "\" y2=\"" << size
      << "\" stroke=\"#ccc\"/>\n";
    int row = 0;
    for (const auto& o : outlines) {
        s << "<path id=\"" << o.id << "\" fill=\"none\" stroke=\"" << o.color << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t i = 0; i < o.points.size(); ++i) {
            s << (i == 0 ? "M" : " L") << px(o.points[i](0)) << ',' << py(o.points[i](1));
        }
        s << " Z\"><title>" << o.label << "</title></path>\n";
        s << "<text x=\"8\" y=\"" << 18 + 16 * row++ << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
          << o.color << "\">" << o.label << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

int cmd_plot(const std::string& path, const std::string& svg_path, const std::string& overlays,
             const OptOptions& opts) {
    const auto file = read_body_file(path);
    if (file.dim != 2) throw Error(ErrorKind::Degenerate, "plot needs a 2-dimensional body");
    const UnitBall b(to_polytope(file));

    bool polar = false;
    bool gamma = false;
    bool iso = false;
    if (overlays == "all") {
        polar = gamma = iso = true;
    } else if (overlays != "none") {
        for (const auto& o : split(overlays, ',')) {
            if (o == "polar") {
                polar = true;
            } else if (o == "gamma") {
                gamma = true;
            } else if (o == "isoperimetrix") {
                iso = true;
            } else {
                throw Error(ErrorKind::InvalidArgument, "unknown overlay: " + o);
            }
        }
    }

    std::vector<Outline> outlines;
    outlines.push_back({"body", "B", "#000000", sorted_by_angle(b.body.vertices())});
    if (polar) outlines.push_back({"polar", "polar body", "#1f77b4", sorted_by_angle(b.polar.vertices())});
    if (gamma) {
        const auto opt = maximize(b.polar.generators(), opts);
        const DiscreteMeasure nu{b.polar.generators(), opt.weights};
        const auto z = centroid_body_discrete(nu).to_polytope();
        outlines.push_back({"gamma", "optimal centroid body", "#d62728", sorted_by_angle(z.vertices())});
    }
    if (iso) outlines.push_back({"isoperimetrix", "isoperimetrix", "#2ca02c", isoperimetrix_outline(b, opts)});
    write_atomically(svg_path, render_svg(outlines));
    return kOk;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return kUsage;
        case ErrorKind::Degenerate:
        case ErrorKind::ScaleExceeded: return kDegenerate;
        case ErrorKind::NotConverged: return kAssertFailed;
    }
    return kAssertFailed;
}

}  // namespace

BodyFile parse_body_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("body file: ") + e.what());
    }
    if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "body file: expected a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw Error(ErrorKind::InvalidArgument, "body file: 'dim' must be an integer");
    }
    if (!j.contains("generators") || !j["generators"].is_array()) {
        throw Error(ErrorKind::InvalidArgument, "body file: 'generators' must be an array");
    }
    BodyFile f;
    f.dim = j["dim"].get<int>();
    if (f.dim < 1 || f.dim > kMaxDim) throw Error(ErrorKind::InvalidArgument, "body file: dim out of range");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw Error(ErrorKind::InvalidArgument, "body file: 'name' must be a string");
        f.name = j["name"].get<std::string>();
    }
    for (const auto& g : j["generators"]) {
        if (!g.is_array() || static_cast<int>(g.size()) != f.dim) {
            throw Error(ErrorKind::InvalidArgument, "body file: each generator needs dim coordinates");
        }
        Vector v(f.dim);
        for (int i = 0; i < f.dim; ++i) {
            if (!g[i].is_number()) throw Error(ErrorKind::InvalidArgument, "body file: non-numeric coordinate");
            v(i) = g[i].get<double>();
        }
        f.generators.push_back(std::move(v));
    }
    return f;
}

BodyFile read_body_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_body_file(ss.str());
}

std::string format_body_file(const BodyFile& f) {
    json j;
    j["dim"] = f.dim;
    if (f.name) j["name"] = *f.name;
    j["generators"] = json::array();
    for (const auto& g : f.generators) j["generators"].push_back(std::vector<double>(g.data(), g.data() + g.size()));
    return j.dump(2) + '\n';
}

BodyFile to_body_file(const SymmetricPolytope& p, std::optional<std::string> name) {
    return {p.dim(), std::move(name), p.generators()};
}

SymmetricPolytope to_polytope(const BodyFile& f) { return SymmetricPolytope::from_generators(f.dim, f.generators); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Definitions of volume for polytopal normed spaces"};
    app.name("normvol");
    app.require_subcommand(1);

    double tol = 1e-9;
    int max_iter = 50000;
    int restarts = 3;
    std::uint64_t seed = 0;
    auto add_opt_flags = [&](CLI::App* c) {
        c->add_option("--tol", tol, "optimizer gap tolerance")->capture_default_str();
        c->add_option("--max-iter", max_iter, "optimizer iteration cap")->capture_default_str();
        c->add_option("--restarts", restarts, "perturbed restarts")->capture_default_str();
        c->add_option("--seed", seed, "RNG seed")->capture_default_str();
    };

    std::string body_path;
    std::string defs = "all";
    auto* compute = app.add_subcommand("compute", "all volume invariants of one body, as JSON");
    compute->add_option("body", body_path, "body file (JSON)")->required();
    compute->add_option("--definitions", defs, "comma-separated subset, or all")->capture_default_str();
    add_opt_flags(compute);

    std::string def = "new";
    int k = 1;
    std::vector<std::string> vecs;
    auto* density = app.add_subcommand("density", "induced k-density of a simple k-vector");
    density->add_option("body", body_path, "body file (JSON)")->required();
    density->add_option("--definition", def, "definition of volume")->capture_default_str();
    density->add_option("--k", k, "grade")->required();
    density->add_option("--vectors", vecs, "k comma-separated vectors")->required();
    add_opt_flags(density);

    std::string experiment;
    int n = 0;
    int trials = 100;
    std::string out_path;
    std::string summary_path;
    auto* sweep = app.add_subcommand("sweep", "randomized experiment sweep to CSV");
    sweep->add_option("experiment", experiment, "experiment name")->required();
    sweep->add_option("--n", n, "dimension (default depends on the experiment)");
    sweep->add_option("--trials", trials, "number of trials")->capture_default_str();
    sweep->add_option("--out", out_path, "CSV output path");
    sweep->add_option("--summary", summary_path, "summary JSON output path");
    add_opt_flags(sweep);

    std::string svg_path;
    std::string overlays = "all";
    auto* plot = app.add_subcommand("plot", "SVG drawing of a planar body and its derived bodies");
    plot->add_option("body", body_path, "body file (JSON)")->required();
    plot->add_option("svg", svg_path, "output SVG path")->required();
    plot->add_option("--overlays", overlays, "all, none, or a list of polar,gamma,isoperimetrix")
        ->capture_default_str();
    add_opt_flags(plot);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "normvol: " << e.what() << '\n';
        return kUsage;
    }

    try {
        const auto opts = make_options(tol, max_iter, restarts, seed);
        if (*compute) return cmd_compute(body_path, defs, opts, out);
        if (*density) return cmd_density(body_path, def, k, vecs, opts, out);
        if (*sweep) return cmd_sweep(experiment, n, trials, seed, out_path, summary_path, opts, out);
        if (*plot) return cmd_plot(body_path, svg_path, overlays, opts);
    } catch (const Error& e) {
        err << "normvol: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "normvol: " << e.what() << '\n';
        return kAssertFailed;
    }
    return kUsage;
}

}  // namespace normvol::cli
