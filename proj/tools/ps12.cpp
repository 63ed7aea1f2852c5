#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "ps12/io.hpp"
#include "ps12/marsden.hpp"
#include "ps12/simplex_oracle.hpp"
#include "ps12/smoothness.hpp"
#include "ps12/verify.hpp"

namespace {

using ps12::BasisId;
using ps12::json;
using ps12::Rational;

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

template <class T>
ps12::Triangle<T> load_triangle(const std::string& path) {
    if (path.empty())
        return ps12::Triangle<T>({T(0), T(0)}, {T(1), T(0)}, {T(0), T(1)});
    return ps12::triangle_from_json<T>(load_json(path));
}

template <class T>
ps12::Point2<T> parse_dir(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--dir expects ax,ay");
    const std::string xs = s.substr(0, comma), ys = s.substr(comma + 1);
    if constexpr (std::is_same_v<T, double>) {
        return {std::stod(xs), std::stod(ys)};
    } else {
        // exact mode accepts integers and num/den fractions
        return {ps12::parse_fraction(xs), ps12::parse_fraction(ys)};
    }
}

struct EvalOptions {
    std::string basis = "s3";
    std::string triangle_file;
    std::string coeff_file;
    int index = 0;  // 1-based basis function; 0 means use coefficients
    bool all = false;
    int grid = 20;
    bool interior_only = false;
    bool exact = false;
    std::vector<std::string> dirs;
    std::string out;
};

template <class T>
void run_eval_typed(const EvalOptions& opt, std::ostream& os) {
    const BasisId b = BasisId::parse(opt.basis);
    const ps12::Triangle<T> tri = load_triangle<T>(opt.triangle_file);
    if (opt.all && (opt.index > 0 || !opt.coeff_file.empty()))
        throw std::runtime_error("--all cannot be combined with --index or --coeffs");
    if (opt.all && !opt.dirs.empty())
        throw std::runtime_error("--all emits basis values only; drop --dir");
    std::vector<T> coeffs(b.dimension(), T(1));
    if (opt.index > 0) {
        if (opt.index > b.dimension()) throw std::runtime_error("basis index out of range");
        coeffs.assign(b.dimension(), T(0));
        coeffs[opt.index - 1] = T(1);
    } else if (!opt.coeff_file.empty()) {
        coeffs.clear();
        for (const json& c : load_json(opt.coeff_file)) coeffs.push_back(ps12::scalar_from_json<T>(c));
        if (static_cast<int>(coeffs.size()) != b.dimension())
            throw std::runtime_error("coefficient count must be " + std::to_string(b.dimension()));
    }
    std::vector<ps12::Point2<T>> dirs;
    for (const std::string& s : opt.dirs) dirs.push_back(parse_dir<T>(s));

    if (opt.all) {
        os << "x,y";
        for (int j = 1; j <= b.dimension(); ++j) os << ",s" << j;
    } else {
        os << "x,y,value";
        for (size_t m = 1; m <= dirs.size(); ++m) os << ",d" << m;
    }
    os << "\n";
    os << std::setprecision(17);
    const int n = opt.grid;
    if (n < 2) throw std::runtime_error("grid resolution must be at least 2");
    const int lo = opt.interior_only ? 1 : 0;
    for (int i = lo; i <= n - lo; ++i)
        for (int j = lo; j <= n - i - lo; ++j) {
            ps12::Bary<T> beta{T(n - i - j) / T(n), T(i) / T(n), T(j) / T(n)};
            const ps12::Point2<T> x = tri.from_bary(beta);
            std::vector<T> row;
            if (opt.all) {
                row = ps12::eval_basis_bary(b, beta);
            } else {
                const std::vector<T> vals = ps12::eval_basis_bary(b, beta);
                T s(0);
                for (int q = 0; q < b.dimension(); ++q) s += coeffs[q] * vals[q];
                row.push_back(s);
            }
            for (size_t m = 1; m <= dirs.size(); ++m) {
                std::vector<ps12::Point2<T>> stack(dirs.begin(), dirs.begin() + m);
                const std::vector<T> vals = ps12::eval_derivatives_cartesian(b, tri, x, stack);
                T s(0);
                for (int q = 0; q < b.dimension(); ++q) s += coeffs[q] * vals[q];
                row.push_back(s);
            }
            if constexpr (std::is_same_v<T, double>) {
                os << x.x << "," << x.y;
                for (double v : row) os << "," << v;
            } else {
                os << ps12::to_fraction_string(x.x) << "," << ps12::to_fraction_string(x.y);
                for (const Rational& v : row) os << "," << ps12::to_fraction_string(v);
            }
            os << "\n";
        }
}

int run_eval(const EvalOptions& opt) {
    std::ofstream file;
    std::ostream& os = open_output(file, opt.out);
    if (opt.exact) run_eval_typed<Rational>(opt, os);
    else run_eval_typed<double>(opt, os);
    return 0;
}

double builtin_function(const std::string& name, const ps12::Point2<double>& p) {
    if (name == "one") return 1.0;
    if (name == "linear") return p.x + 2.0 * p.y;
    if (name == "quadratic") return p.x * p.x + p.x * p.y + p.y * p.y;
    if (name == "cubic") return p.x * p.x * p.x - 2.0 * p.x * p.x * p.y + p.y * p.y * p.y;
    if (name == "trig") return std::sin(3.0 * p.x) * std::cos(2.0 * p.y);
    throw std::runtime_error("unknown builtin function '" + name + "'");
}

struct QiOptions {
    std::string basis = "s3";
    std::string triangle_file;
    std::string func = "one";
    std::string samples_file;
    std::string out;
};

int run_qi(const QiOptions& opt) {
    const BasisId b = BasisId::parse(opt.basis);
    const ps12::Triangle<double> tri = load_triangle<double>(opt.triangle_file);
    ps12::SplineFunction<double> result = [&] {
        if (opt.samples_file.empty())
            return ps12::qi_apply(b, tri, [&](const ps12::Point2<double>& p) {
                return builtin_function(opt.func, p);
            });
        // sampled values at the quasi-interpolation points, matched by coordinates
        std::ifstream in(opt.samples_file);
        if (!in) throw std::runtime_error("cannot open " + opt.samples_file);
        std::vector<std::array<double, 3>> rows;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            if (line.find("x,") == 0 || line.find("x ,") == 0) continue;  // header
            std::replace(line.begin(), line.end(), ',', ' ');
            std::istringstream ls(line);
            std::array<double, 3> row{};
            if (!(ls >> row[0] >> row[1] >> row[2]))
                throw std::runtime_error("malformed sample row: " + line);
            rows.push_back(row);
        }
        auto lookup = [&](const ps12::Point2<double>& p) {
            const double tol = 1e-9 * (1.0 + std::abs(p.x) + std::abs(p.y));
            for (const auto& r : rows)
                if (std::abs(r[0] - p.x) <= tol && std::abs(r[1] - p.y) <= tol) return r[2];
            std::ostringstream msg;
            msg << "no sample found for evaluation point (" << p.x << ", " << p.y << ")";
            throw std::runtime_error(msg.str());
        };
        return ps12::qi_apply(b, tri, lookup);
    }();

    std::ofstream file;
    std::ostream& os = open_output(file, opt.out);
    os << ps12::spline_to_json(result).dump(2) << "\n";
    return 0;
}

struct JoinOptions {
    std::string input;
    std::string out;
};

int run_join(const JoinOptions& opt) {
    const json j = load_json(opt.input);
    ps12::SplineFunction<double> left = ps12::spline_from_json<double>(j.at("left"));
    if (left.basis.degree != 3 || left.basis.tilde)
        throw std::runtime_error("joins are defined for the standard cubic basis");
    const ps12::Point2<double> apex = ps12::point_from_json<double>(j.at("right_apex"));
    const int order = j.value("order", 2);
    std::vector<double> free;
    if (j.contains("free"))
        for (const json& v : j.at("free")) free.push_back(ps12::scalar_from_json<double>(v));

    ps12::JoinConfiguration<double> cfg(left.triangle, apex);
    const std::vector<double> c_sigma = ps12::sigma_reorder(left.coeffs);
    const std::vector<double> chat_sigma = ps12::join_map(cfg, c_sigma, order, free);
    const std::vector<double> residuals = ps12::verify_join(cfg, c_sigma, chat_sigma, order, 50);

    json out;
    out["chat_sigma"] = chat_sigma;
    out["right"] = ps12::spline_to_json(
        ps12::SplineFunction<double>(left.basis, cfg.right(), ps12::sigma_inverse_reorder(chat_sigma)));
    json res = json::array();
    for (double r : residuals) res.push_back(r);
    out["residuals"] = res;

    std::ofstream file;
    std::ostream& os = open_output(file, opt.out);
    os << out.dump(2) << "\n";
    return 0;
}

int run_enumerate(int degree, bool filter, const std::string& out) {
    std::ofstream file;
    std::ostream& os = open_output(file, out);
    for (const ps12::KnotMultiset& k : ps12::enumerate_simplex_splines(degree, filter))
        os << k.to_string() << "\n";
    return 0;
}

int run_tabulate(const std::string& what, const std::string& basis, const std::string& out) {
    std::ofstream file;
    std::ostream& os = open_output(file, out);
    if (what == "dims") {
        os << "d,n_d\n";
        for (int d = 0; d <= 3; ++d) os << d << "," << ps12::basis_dimension(d) << "\n";
        return 0;
    }
    if (what == "domain-points") {
        const BasisId b = BasisId::parse(basis);
        os << "j,b1,b2,b3\n";
        int j = 1;
        for (const auto& xi : ps12::domain_points(b)) {
            os << j++ << "," << ps12::to_fraction_string(xi.b1) << ","
               << ps12::to_fraction_string(xi.b2) << "," << ps12::to_fraction_string(xi.b3) << "\n";
        }
        return 0;
    }
    if (what == "kappa") {
        os << "basis,kappa,decimal\n";
        for (const BasisId& b : ps12::all_bases()) {
            if (b.degree < 1) continue;
            const Rational k = ps12::condition_number(b);
            os << b.name() << "," << ps12::to_fraction_string(k) << "," << std::setprecision(17)
               << k.get_d() << "\n";
        }
        return 0;
    }
    if (what == "qi-points") {
        // evaluation points of the quasi-interpolant, barycentric, in the
        // order the qi subcommand matches sample rows against
        const BasisId b = BasisId::parse(basis);
        os << "i,b1,b2,b3\n";
        int i = 1;
        for (const auto& p : ps12::qi_points(b))
            os << i++ << "," << ps12::to_fraction_string(p.b1) << ","
               << ps12::to_fraction_string(p.b2) << "," << ps12::to_fraction_string(p.b3) << "\n";
        return 0;
    }
    throw std::runtime_error("tabulate expects dims, domain-points, kappa or qi-points");
}

int run_verify(const std::vector<std::string>& suites, std::uint64_t seed, const std::string& out) {
    const std::vector<ps12::Report> reports = ps12::run_suites(suites, seed);
    bool all_pass = true;
    json jreports = json::array();
    for (const ps12::Report& r : reports) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << "  worst=" << std::scientific
                  << std::setprecision(3) << r.worst_residual << "  t=" << std::fixed
                  << std::setprecision(2) << r.seconds << "s";
        if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        jreports.push_back({{"suite", r.suite},
                            {"pass", r.pass},
                            {"worst_residual", r.worst_residual},
                            {"seconds", r.seconds},
                            {"detail", r.detail}});
    }
    if (!out.empty()) {
        std::ofstream file(out);
        file << jreports.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplex-spline S-bases on the Powell-Sabin 12-split"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "sample a spline (or basis function) on a grid");
    eval->add_option("--basis", eval_opt.basis, "basis: s0,s1,s2,s2t,s3,s3t");
    eval->add_option("--triangle", eval_opt.triangle_file, "triangle JSON file");
    eval->add_option("--coeffs", eval_opt.coeff_file, "coefficient JSON array");
    eval->add_option("--index", eval_opt.index, "evaluate basis function j instead of coefficients");
    eval->add_flag("--all", eval_opt.all, "emit one column per basis function");
    eval->add_option("--grid", eval_opt.grid, "points per barycentric direction (>= 2)");
    eval->add_flag("--interior", eval_opt.interior_only, "skip boundary grid points");
    eval->add_flag("--exact", eval_opt.exact, "exact rational arithmetic");
    eval->add_option("--dir", eval_opt.dirs, "derivative direction ax,ay (repeatable, cumulative)");
    eval->add_option("--out", eval_opt.out, "output CSV file (default stdout)");

    QiOptions qi_opt;
    CLI::App* qi = app.add_subcommand("qi", "quasi-interpolate a function");
    qi->add_option("--basis", qi_opt.basis, "basis: s1,s2,s2t,s3,s3t");
    qi->add_option("--triangle", qi_opt.triangle_file, "triangle JSON file");
    qi->add_option("--func", qi_opt.func, "builtin function: one,linear,quadratic,cubic,trig");
    qi->add_option("--samples", qi_opt.samples_file, "CSV of x,y,f rows at the evaluation points");
    qi->add_option("--out", qi_opt.out, "output JSON file");

    JoinOptions join_opt;
    CLI::App* join = app.add_subcommand("join", "C^r join of two cubic patches");
    join->add_option("input", join_opt.input, "JSON with left, right_apex, order, free")->required();
    join->add_option("--out", join_opt.out, "output JSON file");

    int enum_degree = 3;
    bool enum_filter = true;
    std::string enum_out;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list simplex spline classes");
    enumerate->add_option("--degree", enum_degree, "degree 0..3")->check(CLI::Range(0, 3));
    enumerate->add_flag("!--no-filter", enum_filter, "drop the boundary B-spline filter");
    enumerate->add_option("--out", enum_out, "output file");

    std::string tab_what = "dims", tab_basis = "s3", tab_out;
    CLI::App* tabulate = app.add_subcommand("tabulate", "print reference tables");
    tabulate->add_option("what", tab_what, "dims | domain-points | kappa | qi-points")->required();
    tabulate->add_option("--basis", tab_basis, "basis for domain-points / qi-points");
    tabulate->add_option("--out", tab_out, "output file");

    std::vector<std::string> verify_suites;
    std::uint64_t verify_seed = 0;
    std::string verify_out;
    CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--suite", verify_suites, "suite subset (default: all)");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--out", verify_out, "JSON report file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return run_eval(eval_opt);
        if (*qi) return run_qi(qi_opt);
        if (*join) return run_join(join_opt);
        if (*enumerate) return run_enumerate(enum_degree, enum_filter, enum_out);
        if (*tabulate) return run_tabulate(tab_what, tab_basis, tab_out);
        if (*verify) return run_verify(verify_suites, verify_seed, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
