/**
 * @file gporo.cpp
 * @brief Command-line front end: expression evaluation, sponge/carpet
 *        geometry, porosity tables, retention-curve evaluation and fitting.
 *
 * Exit codes: 0 success, 1 domain or data error, 2 usage error.
 * csv and json outputs are byte-deterministic for identical inputs; exact
 * rationals are emitted as "p/q" strings next to a separate approx field.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <gporo/gporo.hpp>

namespace {

using nlohmann::ordered_json;
using namespace gporo;

/// Malformed flag values (exit 2), as opposed to domain errors (exit 1).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, Json };

Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw usage_error("unknown output format '" + s + "' (use table, csv, or json)");
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Approximate decimal of the finite part; absent for unbounded / vanishing
/// values, where a decimal would be meaningless.
std::optional<double> approx_of(const GrossValue& v) {
    NumClass c = v.classify();
    if (c == NumClass::Finite) return v.finite_part().to_double();
    if (c == NumClass::Zero) return 0.0;
    return std::nullopt;
}

void put_value(ordered_json& j, const std::string& name, const GrossValue& v) {
    j[name] = v.str();
    j[name + "_class"] = to_string(v.classify());
    if (v.classify() == NumClass::Finite && !v.is_rational()) {
        j[name + "_finite_part"] = v.finite_part().str();
        j[name + "_infinitesimal_correction"] = true;
    }
    auto a = approx_of(v);
    if (a)
        j[name + "_approx"] = *a;
    else
        j[name + "_approx"] = nullptr;
}

std::string table_value(const GrossValue& v) {
    std::string s = v.str();
    NumClass c = v.classify();
    if (c == NumClass::Zero) return s;
    if (c == NumClass::Finite) {
        if (v.is_rational()) {
            if (v.as_rational().is_integer()) return s;
            return s + "  (approx " + fmt_double(v.finite_part().to_double()) + ")";
        }
        return s + "  (rational part " + v.finite_part().str() + ", infinitesimal correction)";
    }
    return s + "  [" + to_string(c) + "]";
}

std::string csv_value_row(const std::string& name, const GrossValue& v) {
    auto a = approx_of(v);
    return name + "," + v.str() + "," + to_string(v.classify()) + "," +
           (a ? fmt_double(*a) : "") + "\n";
}

void emit(const std::string& text) { std::cout << text; }

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- eval ----

struct EvalOpts {
    std::string expr;
    std::string format = "table";
};

void run_eval(const EvalOpts& o) {
    Format f = parse_format(o.format);
    GrossValue v = parse(o.expr);
    if (f == Format::Json) {
        ordered_json j;
        j["canonical"] = v.str();
        j["class"] = to_string(v.classify());
        j["finite_part"] = v.finite_part().str();
        j["finite_approx"] = v.finite_part().to_double();
        j["has_infinite_terms"] = v.has_infinite_terms();
        j["has_infinitesimal_terms"] = v.has_infinitesimal_terms();
        emit_json(j);
        return;
    }
    if (f == Format::Csv) {
        emit("canonical,class,finite_part,finite_approx,infinite_terms,infinitesimal_terms\n");
        emit(v.str() + "," + to_string(v.classify()) + "," + v.finite_part().str() + "," +
             fmt_double(v.finite_part().to_double()) + "," +
             (v.has_infinite_terms() ? "1" : "0") + "," +
             (v.has_infinitesimal_terms() ? "1" : "0") + "\n");
        return;
    }
    emit("canonical: " + v.str() + "\n");
    emit("class:     " + std::string(to_string(v.classify())) + "\n");
    emit("finite:    " + v.finite_part().str() + " (approx " +
         fmt_double(v.finite_part().to_double()) + ")\n");
    if (v.has_infinite_terms()) emit("note:      infinite terms present\n");
    if (v.has_infinitesimal_terms()) emit("note:      infinitesimal terms present\n");
}

// ---- sponge / carpet ----

struct GeometryOpts {
    long long k = 1;
    std::string n = "1";
    unsigned digits = 9;
    std::string format = "table";
};

SpongeQuery make_query(const GeometryOpts& o) {
    try {
        return {o.k, IterationIndex::parse(o.n)};
    } catch (const domain_error& e) {
        throw usage_error(e.what());
    }
}

void run_geometry(const GeometryOpts& o, FractalObject object) {
    Format f = parse_format(o.format);
    SpongeQuery q = make_query(o);
    GrossValue count, side, measure;
    const char* measure_name;
    if (object == FractalObject::Sponge) {
        auto geo = menger_geometry(q);
        count = geo.count;
        side = geo.side;
        measure = geo.volume;
        measure_name = "volume";
    } else {
        auto geo = carpet_geometry(q);
        count = geo.count;
        side = geo.side;
        measure = geo.area;
        measure_name = "area";
    }
    std::string dim = fractal_dimension(object, o.digits);
    if (f == Format::Json) {
        ordered_json j;
        j["k"] = q.k;
        j["n"] = q.n.str();
        put_value(j, "count", count);
        put_value(j, "side", side);
        put_value(j, measure_name, measure);
        j["dimension"] = dim;
        emit_json(j);
        return;
    }
    if (f == Format::Csv) {
        emit("quantity,canonical,class,approx\n");
        emit(csv_value_row("count", count));
        emit(csv_value_row("side", side));
        emit(csv_value_row(measure_name, measure));
        emit(std::string("dimension,") + dim + ",," + "\n");
        return;
    }
    emit("k: " + std::to_string(q.k) + "\n");
    emit("n: " + q.n.str() + "\n");
    emit("count:     " + table_value(count) + "\n");
    emit("side:      " + table_value(side) + "\n");
    emit(std::string(measure_name) + (object == FractalObject::Sponge ? ":    " : ":      ") +
         table_value(measure) + "\n");
    emit("dimension: " + dim + "\n");
}

// ---- porosity ----

struct PorosityOpts {
    std::string model;
    long long k = 1;
    std::string n;
    bool has_n = false;
    std::string r0 = "1";
    std::string rho0 = "1";
    double r = 0;
    bool has_r = false;
    double d_f = 0;
    bool has_df = false;
    unsigned digits = 34;
    std::string format = "table";
};

void emit_porosity_values(Format f, ordered_json& j, std::vector<std::string>& table,
                          std::string& csv, const PorosityResult& res) {
    put_value(j, "solid", res.solid_volume);
    put_value(j, "void", res.void_volume);
    put_value(j, "phi", res.phi);
    csv += csv_value_row("solid", res.solid_volume);
    csv += csv_value_row("void", res.void_volume);
    csv += csv_value_row("phi", res.phi);
    table.push_back("solid: " + table_value(res.solid_volume));
    table.push_back("void:  " + table_value(res.void_volume));
    table.push_back("phi:   " + table_value(res.phi));
    (void)f;
}

void run_porosity(const PorosityOpts& o) {
    Format f = parse_format(o.format);
    ordered_json j;
    std::vector<std::string> table;
    std::string csv = "quantity,canonical,class,approx\n";
    j["model"] = o.model;
    table.push_back("model: " + o.model);

    if (o.model == "classical") {
        if (!o.has_n) throw usage_error("classical porosity needs --n");
        long long n;
        try {
            n = IterationIndex::parse(o.n).finite_n();
        } catch (const std::exception&) {
            throw usage_error("classical porosity needs a finite --n");
        }
        j["n"] = n;
        table.push_back("n: " + std::to_string(n));
        emit_porosity_values(f, j, table, csv, porosity_classical(n));
    } else if (o.model == "grossone") {
        if (!o.has_n) throw usage_error("grossone porosity needs --n (an integer, 'g', or 'g-M')");
        SpongeQuery q = make_query({o.k, o.n, 9, o.format});
        j["k"] = q.k;
        j["n"] = q.n.str();
        table.push_back("k: " + std::to_string(q.k));
        table.push_back("n: " + q.n.str());
        emit_porosity_values(f, j, table, csv, porosity_grossone(q));
    } else if (o.model == "turcotte") {
        if (o.has_r) {
            // power-law scaling path, decimal at the working precision
            hp::PrecisionGuard guard(o.digits);
            hp::Real r0, df;
            try {
                r0 = hp::to_real(BigRational::parse(o.r0));
            } catch (const std::invalid_argument&) {
                throw usage_error("--r0 must be an integer or rational p/q");
            }
            df = o.has_df ? hp::Real(o.d_f) : dimension_value(FractalObject::Sponge, o.digits);
            auto res = turcotte_scaling(r0, hp::Real(o.r), df, o.digits);
            std::string phi = hp::significant(res.phi, o.digits);
            std::string ratio = hp::significant(res.density_ratio, o.digits);
            std::string dfs = hp::significant(df, o.digits);
            j["r0"] = o.r0;
            j["r"] = o.r;
            j["d_f"] = dfs;
            j["digits"] = o.digits;
            j["phi"] = phi;
            j["density_ratio"] = ratio;
            if (f == Format::Json) {
                emit_json(j);
            } else if (f == Format::Csv) {
                emit("r0,r,d_f,digits,phi,density_ratio\n");
                emit(o.r0 + "," + fmt_double(o.r) + "," + dfs + "," + std::to_string(o.digits) +
                     "," + phi + "," + ratio + "\n");
            } else {
                emit("model: turcotte (scaling)\n");
                emit("r0: " + o.r0 + "\n");
                emit("r: " + fmt_double(o.r) + "\n");
                emit("d_f: " + dfs + "\n");
                emit("digits: " + std::to_string(o.digits) + "\n");
                emit("phi: " + phi + "\n");
                emit("density_ratio: " + ratio + "\n");
            }
            return;
        }
        if (!o.has_n) throw usage_error("turcotte porosity needs --n (order) or --r (scaling)");
        long long n;
        try {
            n = IterationIndex::parse(o.n).finite_n();
        } catch (const std::exception&) {
            throw usage_error("turcotte order needs a finite --n");
        }
        TurcotteSponge base;
        try {
            base.r0 = BigRational::parse(o.r0);
            base.rho0 = BigRational::parse(o.rho0);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
        auto res = turcotte_order(n, base);
        j["n"] = n;
        j["r0"] = base.r0.str();
        j["rho0"] = base.rho0.str();
        table.push_back("n: " + std::to_string(n));
        auto put_rat = [&](const char* name, const BigRational& v) {
            j[name] = v.str();
            j[std::string(name) + "_approx"] = v.to_double();
            csv += std::string(name) + "," + v.str() + ",Finite," + fmt_double(v.to_double()) + "\n";
            table.push_back(std::string(name) + ": " + v.str() + "  (approx " +
                            fmt_double(v.to_double()) + ")");
        };
        put_rat("phi", res.phi);
        put_rat("density_ratio", res.density_ratio);
        put_rat("size", res.size);
        put_rat("density", res.density);
    } else {
        throw usage_error("unknown porosity model '" + o.model +
                          "' (use classical, grossone, or turcotte)");
    }

    if (f == Format::Json) {
        emit_json(j);
    } else if (f == Format::Csv) {
        emit(csv);
    } else {
        for (const auto& line : table) emit(line + "\n");
    }
}

// ---- wrc-eval ----

struct WrcEvalOpts {
    std::string model = "psf";
    double theta_s = 0.5;
    std::optional<double> a, p, s, phi_max;
    double h_min = 1.0;
    double h_max = std::numeric_limits<double>::infinity();
    std::optional<double> d_f;
    double alpha = 1.0;
    std::string h_grid;
    bool loglog = false;
    std::string format = "table";
};

WrcModel parse_model(const std::string& s) {
    if (s == "psf") return WrcModel::PSF;
    if (s == "tw") return WrcModel::TW;
    if (s == "rs") return WrcModel::RS;
    throw usage_error("unknown model '" + s + "' (use psf, tw, or rs)");
}

std::vector<double> parse_grid(const std::string& text) {
    double lo = 0, hi = 0;
    long steps = 0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &lo, &hi, &steps, &extra) != 3 || lo <= 0 ||
        hi < lo || steps < 1)
        throw usage_error("--h-grid must be lo:hi:steps with 0 < lo <= hi and steps >= 1");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        grid.push_back(lo);
        return grid;
    }
    // geometric spacing: straight lines in log-log space get evenly spaced x
    double ratio = hi / lo;
    for (long i = 0; i < steps; ++i)
        grid.push_back(lo * std::pow(ratio, static_cast<double>(i) / static_cast<double>(steps - 1)));
    return grid;
}

WrcParams make_params(const WrcEvalOpts& o) {
    WrcParams params;
    params.model = parse_model(o.model);
    params.theta_s = o.theta_s;
    params.A = o.a;
    params.p = o.p;
    params.s = o.s;
    params.h_min = o.h_min;
    params.h_max = o.h_max;
    params.alpha = o.alpha;
    params.phi_max = o.phi_max;
    params.d_f = o.d_f ? *o.d_f
                       : dimension_value(FractalObject::Sponge, 30).convert_to<double>();
    return params;
}

void run_wrc_eval(const WrcEvalOpts& o) {
    Format f = parse_format(o.format);
    if (o.h_grid.empty()) throw usage_error("wrc-eval needs --h-grid lo:hi:steps");
    std::vector<double> grid = parse_grid(o.h_grid);
    WrcParams params = make_params(o);
    params.validate();

    std::vector<RetentionPoint> points;
    std::vector<bool> clamped;
    points.reserve(grid.size());
    for (double h : grid) {
        ThetaResult t = theta(params, h);
        points.push_back({h, t.value});
        clamped.push_back(t.clamped);
    }

    std::vector<std::pair<double, double>> xy;
    if (o.loglog) {
        WrcParams tp = params;
        if (tp.model != WrcModel::PSF) {
            // the reductions pin A, so the transform is well defined
            tp.A = tp.effective_A();
            tp.model = WrcModel::PSF;
        }
        xy = loglog_transform(tp, points);
    }

    if (f == Format::Json) {
        ordered_json j;
        j["model"] = o.model;
        j["theta_s"] = params.theta_s;
        j["a"] = params.effective_A();
        j["h_min"] = params.h_min;
        if (std::isfinite(params.h_max))
            j["h_max"] = params.h_max;
        else
            j["h_max"] = nullptr;
        j["d_f"] = params.d_f;
        ordered_json pts = ordered_json::array();
        for (std::size_t i = 0; i < points.size(); ++i) {
            ordered_json pt;
            pt["h"] = points[i].h;
            pt["theta"] = points[i].theta;
            pt["clamped"] = static_cast<bool>(clamped[i]);
            pts.push_back(std::move(pt));
        }
        j["points"] = std::move(pts);
        if (o.loglog) {
            ordered_json ll = ordered_json::array();
            for (const auto& [x, y] : xy) {
                ordered_json e;
                e["x"] = x;
                e["y"] = y;
                ll.push_back(std::move(e));
            }
            j["loglog"] = std::move(ll);
        }
        emit_json(j);
        return;
    }
    if (f == Format::Csv) {
        // two plottable columns: the curve itself, or its log-log transform
        if (o.loglog) {
            emit("x,y\n");
            for (const auto& [x, y] : xy) emit(fmt_double(x) + "," + fmt_double(y) + "\n");
        } else {
            emit("h,theta\n");
            for (const auto& pt : points) emit(fmt_double(pt.h) + "," + fmt_double(pt.theta) + "\n");
        }
        return;
    }
    emit("model: " + o.model + "  theta_s: " + fmt_double(params.theta_s) +
         "  A: " + fmt_double(params.effective_A()) + "  h_min: " + fmt_double(params.h_min) +
         "  d_f: " + fmt_double(params.d_f) + "\n");
    emit(o.loglog ? "h\ttheta\tx\ty\n" : "h\ttheta\n");
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::string line = fmt_double(points[i].h) + "\t" + fmt_double(points[i].theta);
        if (clamped[i]) line += " (clamped)";
        if (o.loglog) line += "\t" + fmt_double(xy[i].first) + "\t" + fmt_double(xy[i].second);
        emit(line + "\n");
    }
}

// ---- wrc-fit ----

struct WrcFitOpts {
    std::string input;
    std::string mode = "single";
    double theta_s = 0.5;
    std::optional<double> a;
    std::optional<double> h_min;
    double h_max = std::numeric_limits<double>::infinity();
    std::string format = "table";
};

void run_wrc_fit(const WrcFitOpts& o) {
    Format f = parse_format(o.format);
    if (o.mode != "single" && o.mode != "bimodal")
        throw usage_error("--mode must be single or bimodal");
    std::vector<RetentionPoint> points = load_retention_csv_file(o.input);

    WrcParams params;
    params.model = WrcModel::PSF;
    params.theta_s = o.theta_s;
    // without an explicit A the transform uses the TW reduction A = theta_s
    params.A = o.a ? *o.a : o.theta_s;
    params.h_max = o.h_max;
    if (o.h_min) {
        params.h_min = *o.h_min;
    } else {
        double lo = std::numeric_limits<double>::infinity();
        for (const auto& pt : points) lo = std::min(lo, pt.h);
        params.h_min = lo;
    }
    params.d_f = 2.5;  // placeholder within (0,3); the fit estimates it

    FitResult res = o.mode == "single" ? fit_single(points, params) : fit_bimodal(points, params);

    if (f == Format::Json) {
        ordered_json j;
        j["mode"] = o.mode;
        j["input"] = o.input;
        j["points"] = points.size();
        ordered_json regimes = ordered_json::array();
        for (const auto& r : res.regimes) {
            ordered_json e;
            e["d_f_hat"] = r.d_f_hat;
            e["intercept"] = r.intercept;
            e["h_low"] = r.h_low;
            e["h_high"] = r.h_high;
            regimes.push_back(std::move(e));
        }
        j["regimes"] = std::move(regimes);
        if (res.breakpoint_h)
            j["breakpoint_h"] = *res.breakpoint_h;
        else
            j["breakpoint_h"] = nullptr;
        j["sse"] = res.sse;
        emit_json(j);
        return;
    }
    if (f == Format::Csv) {
        emit("regime,d_f_hat,intercept,h_low,h_high,breakpoint_h,sse\n");
        for (std::size_t i = 0; i < res.regimes.size(); ++i) {
            const auto& r = res.regimes[i];
            emit(std::to_string(i + 1) + "," + fmt_double(r.d_f_hat) + "," +
                 fmt_double(r.intercept) + "," + fmt_double(r.h_low) + "," + fmt_double(r.h_high) +
                 "," + (res.breakpoint_h ? fmt_double(*res.breakpoint_h) : "") + "," +
                 fmt_double(res.sse) + "\n");
        }
        return;
    }
    emit("mode: " + o.mode + "\n");
    emit("points: " + std::to_string(points.size()) + "\n");
    for (std::size_t i = 0; i < res.regimes.size(); ++i) {
        const auto& r = res.regimes[i];
        emit("regime " + std::to_string(i + 1) + ": h in [" + fmt_double(r.h_low) + ", " +
             fmt_double(r.h_high) + "]  d_f_hat = " + fmt_double(r.d_f_hat) +
             "  intercept = " + fmt_double(r.intercept) + "\n");
    }
    if (res.breakpoint_h) emit("breakpoint_h: " + fmt_double(*res.breakpoint_h) + "\n");
    emit("sse: " + fmt_double(res.sse) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Menger sponge geometry, porosity, and fractal water retention toolkit"};
    app.require_subcommand(1);

    EvalOpts eval_opts;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate a gross-number expression");
    eval_cmd->add_option("expr", eval_opts.expr, "expression, e.g. \"(20/27)^(g-1)\"")->required();
    eval_cmd->add_option("--output", eval_opts.format, "table|csv|json");

    GeometryOpts sponge_opts;
    auto* sponge_cmd = app.add_subcommand("sponge", "Menger sponge count, side, and volume");
    sponge_cmd->add_option("--k", sponge_opts.k, "starting level (default 1)");
    sponge_cmd->add_option("--n", sponge_opts.n, "iterations: integer, 'g', or 'g-M'")->required();
    sponge_cmd->add_option("--digits", sponge_opts.digits, "fractal dimension digits (default 9)");
    sponge_cmd->add_option("--output", sponge_opts.format, "table|csv|json");

    GeometryOpts carpet_opts;
    auto* carpet_cmd = app.add_subcommand("carpet", "Sierpinski carpet count, side, and area");
    carpet_cmd->add_option("--k", carpet_opts.k, "starting level (default 1)");
    carpet_cmd->add_option("--n", carpet_opts.n, "iterations: integer, 'g', or 'g-M'")->required();
    carpet_cmd->add_option("--digits", carpet_opts.digits, "fractal dimension digits (default 9)");
    carpet_cmd->add_option("--output", carpet_opts.format, "table|csv|json");

    PorosityOpts por_opts;
    auto* por_cmd = app.add_subcommand("porosity", "porosity of the sponge");
    por_cmd->add_option("--model", por_opts.model, "classical|grossone|turcotte")->required();
    por_cmd->add_option("--k", por_opts.k, "starting level (grossone)");
    auto* por_n = por_cmd->add_option("--n", por_opts.n, "iterations (integer; grossone also 'g', 'g-M')");
    por_cmd->add_option("--r0", por_opts.r0, "zero-order cube size (turcotte, rational)");
    por_cmd->add_option("--rho0", por_opts.rho0, "zero-order density (turcotte, rational)");
    auto* por_r = por_cmd->add_option("--r", por_opts.r, "sponge size (turcotte scaling path)");
    auto* por_df = por_cmd->add_option("--d-f", por_opts.d_f, "fractal dimension (default ln20/ln3)");
    por_cmd->add_option("--digits", por_opts.digits, "working decimal digits (default 34)");
    por_cmd->add_option("--output", por_opts.format, "table|csv|json");

    WrcEvalOpts we_opts;
    auto* we_cmd = app.add_subcommand("wrc-eval", "evaluate a water retention curve model");
    we_cmd->add_option("--model", we_opts.model, "psf|tw|rs (default psf)");
    we_cmd->add_option("--theta-s", we_opts.theta_s, "saturated water content")->required();
    double we_a, we_p, we_s, we_phimax, we_df;
    auto* a_opt = we_cmd->add_option("--a", we_a, "PSF parameter A = p/(p+s)");
    auto* p_opt = we_cmd->add_option("--p", we_p, "pore fraction per scale");
    auto* s_opt = we_cmd->add_option("--s", we_s, "solid fraction per scale");
    we_cmd->add_option("--h-min", we_opts.h_min, "air-entry head, cm (default 1)");
    we_cmd->add_option("--h-max", we_opts.h_max, "largest head, cm (default unbounded)");
    auto* df_opt = we_cmd->add_option("--d-f", we_df, "fractal dimension (default ln20/ln3)");
    we_cmd->add_option("--alpha", we_opts.alpha, "capillarity length, cm (default 1)");
    auto* pm_opt = we_cmd->add_option("--phi-max", we_phimax, "saturated porosity (rs)");
    we_cmd->add_option("--h-grid", we_opts.h_grid, "lo:hi:steps, geometric spacing")->required();
    we_cmd->add_flag("--loglog", we_opts.loglog, "also emit the log-log transform");
    we_cmd->add_option("--output", we_opts.format, "table|csv|json");

    WrcFitOpts wf_opts;
    auto* wf_cmd = app.add_subcommand("wrc-fit", "fit fractal dimension(s) to retention data");
    wf_cmd->add_option("--input", wf_opts.input, "CSV file with header h,theta")->required();
    wf_cmd->add_option("--mode", wf_opts.mode, "single|bimodal (default single)");
    wf_cmd->add_option("--theta-s", wf_opts.theta_s, "saturated water content")->required();
    double wf_a, wf_hmin;
    auto* wfa_opt = wf_cmd->add_option("--a", wf_a, "PSF parameter A (default theta-s)");
    auto* wfh_opt = wf_cmd->add_option("--h-min", wf_hmin, "air-entry head (default: smallest h)");
    wf_cmd->add_option("--h-max", wf_opts.h_max, "largest head (default unbounded)");
    wf_cmd->add_option("--output", wf_opts.format, "table|csv|json");

    try {
        app.parse(argc, argv);

        if (*eval_cmd) run_eval(eval_opts);
        if (*sponge_cmd) run_geometry(sponge_opts, FractalObject::Sponge);
        if (*carpet_cmd) run_geometry(carpet_opts, FractalObject::Carpet);
        if (*por_cmd) {
            por_opts.has_n = por_n->count() > 0;
            por_opts.has_r = por_r->count() > 0;
            por_opts.has_df = por_df->count() > 0;
            run_porosity(por_opts);
        }
        if (*we_cmd) {
            if (a_opt->count()) we_opts.a = we_a;
            if (p_opt->count()) we_opts.p = we_p;
            if (s_opt->count()) we_opts.s = we_s;
            if (pm_opt->count()) we_opts.phi_max = we_phimax;
            if (df_opt->count()) we_opts.d_f = we_df;
            run_wrc_eval(we_opts);
        }
        if (*wf_cmd) {
            if (wfa_opt->count()) wf_opts.a = wf_a;
            if (wfh_opt->count()) wf_opts.h_min = wf_hmin;
            run_wrc_fit(wf_opts);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
