// eimquad: train magic-point quadrature models for parametric integrand
// families, evaluate parametric integrals online, and run the offline /
// out-of-sample studies that produce the CSV artifacts.
//
// Subcommands: train, eval, study, bounds, info.
// Exit codes: 0 success, 1 usage error, 2 numeric failure, 3 io error.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "eimq/analysis.hpp"
#include "eimq/eim.hpp"
#include "eimq/errors.hpp"
#include "eimq/model_io.hpp"
#include "eimq/models.hpp"
#include "eimq/study.hpp"
#include "eimq/text.hpp"

namespace fs = std::filesystem;
using namespace eimq;

namespace {

struct RunConfig {
    std::string family = "cgmy";
    std::string box_spec;   // "lo,hi;lo,hi;..." per coordinate, empty = preset default
    std::string omega_spec; // "a,b", empty = preset default
    std::size_t cloud_size = 4000;
    std::size_t grid_size = 1500;
    std::string grid_kind = "uniform";
    std::string tol_spec = "1e-12"; // "none" disables the tolerance stop
    std::size_t max_m = 150;
    std::uint64_t seed = 7;
    std::uint64_t test_seed = 1234;
    std::size_t n_test = 1000;
    double quad_tol = 0.0; // 0 = auto: min(1e-13, tol / 10)
    std::string out_dir = ".";
    std::string model_path;
    bool serial = false;
};

std::vector<double> parse_numbers(const std::string& spec, char sep) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (item.empty()) throw ConfigError("empty number in '" + spec + "'");
        out.push_back(text::parse_double(item));
    }
    if (out.empty()) throw ConfigError("expected numbers in '" + spec + "'");
    return out;
}

Interval parse_interval(const std::string& spec) {
    const auto vals = parse_numbers(spec, ',');
    if (vals.size() != 2) throw ConfigError("expected 'lo,hi', got '" + spec + "'");
    return {vals[0], vals[1]};
}

std::vector<Interval> parse_box(const std::string& spec) {
    std::vector<Interval> box;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ';')) box.push_back(parse_interval(item));
    if (box.empty()) throw ConfigError("empty box spec");
    return box;
}

double effective_quad_tol(const RunConfig& cfg, double tol) {
    if (cfg.quad_tol > 0.0) return cfg.quad_tol;
    if (tol > 0.0) return std::min(1e-13, tol / 10.0);
    return 1e-13;
}

double parse_tol(const std::string& spec) {
    if (spec == "none") return 0.0;
    const double tol = text::parse_double(spec);
    if (!(tol > 0.0)) throw ConfigError("tolerance must be positive or 'none'");
    return tol;
}

models::FamilyPreset preset_from(const RunConfig& cfg) {
    const std::vector<Interval> box =
        cfg.box_spec.empty() ? std::vector<Interval>{} : parse_box(cfg.box_spec);
    std::optional<Interval> omega;
    if (!cfg.omega_spec.empty()) omega = parse_interval(cfg.omega_spec);
    return models::make_preset(cfg.family, box, omega);
}

DiscreteDomain make_grid(const RunConfig& cfg, Interval domain) {
    if (cfg.grid_kind == "uniform") return DiscreteDomain::uniform(domain, cfg.grid_size);
    if (cfg.grid_kind == "chebyshev") return DiscreteDomain::chebyshev(domain, cfg.grid_size);
    throw ConfigError("grid kind must be uniform or chebyshev");
}

fs::path model_output_path(const RunConfig& cfg) {
    if (!cfg.model_path.empty()) return cfg.model_path;
    return fs::path(cfg.out_dir) / (cfg.family + "_model.json");
}

std::map<std::string, std::string> config_echo(const RunConfig& cfg, double tol) {
    return {
        {"family", cfg.family},
        {"cloud_size", std::to_string(cfg.cloud_size)},
        {"grid_size", std::to_string(cfg.grid_size)},
        {"grid", cfg.grid_kind},
        {"tol", text::fmt_double(tol)},
        {"max_m", std::to_string(cfg.max_m)},
        {"seed", std::to_string(cfg.seed)},
        {"quad_tol", text::fmt_double(effective_quad_tol(cfg, tol))},
    };
}

/// Trains, computes weights, persists the model, writes the residual CSV.
template <EimScalar Scalar>
io::ModelFile<Scalar> train_pipeline(const RunConfig& cfg, const models::FamilyPreset& preset) {
    const double tol = parse_tol(cfg.tol_spec);
    const auto cloud = ParameterCloud::sample_uniform(preset.box, cfg.cloud_size, cfg.seed);
    const auto domain = make_grid(cfg, preset.family.domain);
    TrainOptions opts;
    opts.tol = tol;
    opts.max_terms = cfg.max_m;
    opts.parallel = !cfg.serial;

    auto report = train<Scalar>(preset.family, cloud, domain, opts);
    const double quad_tol = effective_quad_tol(cfg, tol);
    report.model.weights = quad_weights(report.model, preset.family, {.abs_tol = quad_tol});

    io::ModelFile<Scalar> file;
    file.model = std::move(report.model);
    file.stop_reason = report.stop_reason;
    file.config_echo = config_echo(cfg, tol);

    io::save(model_output_path(cfg), file);
    study::write_residual_csv(fs::path(cfg.out_dir) / (cfg.family + "_residuals.csv"),
                              file.model.history);

    std::cout << "family:         " << cfg.family << "\n"
              << "terms (M):      " << file.model.size() << "\n"
              << "stop reason:    " << to_string(file.stop_reason) << "\n"
              << "final residual: "
              << (file.model.history.empty() ? std::string("n/a")
                                             : text::fmt_double(file.model.history.back()))
              << "\n"
              << "model:          " << model_output_path(cfg).string() << "\n";
    return file;
}

int cmd_train(const RunConfig& cfg) {
    const auto preset = preset_from(cfg);
    if (preset.family.kind == ValueKind::Real)
        train_pipeline<double>(cfg, preset);
    else
        train_pipeline<std::complex<double>>(cfg, preset);
    return 0;
}

/// Family reconstruction for a loaded model: preset id + stored box + the
/// grid hull as the integration interval.
template <EimScalar Scalar>
models::FamilyPreset preset_for_model(const MagicModel<Scalar>& model) {
    const Interval omega{model.grid.front(), model.grid.back()};
    return models::make_preset(model.family_tag, model.box, omega);
}

template <EimScalar Scalar>
int eval_with(const io::ModelFile<Scalar>& file, const std::vector<double>& param,
              bool with_oracle, double quad_tol) {
    const auto& model = file.model;
    if (param.size() != model.param_dim())
        throw ConfigError("--param needs " + std::to_string(model.param_dim()) +
                          " coordinates for this model");
    if (model.weights.size() != model.size())
        throw ConfigError("model file has no quadrature weights; re-run train");
    const auto preset = preset_for_model(model);

    if (!inside_box(model.box, param))
        std::cout << "note: parameter outside the trained box (extrapolation)\n";

    // exactly M family evaluations online; the counter makes that observable
    auto evals = std::make_shared<std::atomic<std::size_t>>(0);
    ParametricFamily counted = preset.family;
    auto inner = preset.family.eval;
    counted.eval = [inner, evals](std::span<const double> p, double z) {
        evals->fetch_add(1, std::memory_order_relaxed);
        return inner(p, z);
    };

    const Scalar value = integrate(model, std::span<const Scalar>(model.weights), counted, param);
    const std::complex<double> cval(value);
    std::cout << "value:          " << text::fmt_double(cval.real());
    if constexpr (std::same_as<Scalar, std::complex<double>>)
        std::cout << " + " << text::fmt_double(cval.imag()) << "i";
    std::cout << "\n"
              << "family evals:   " << evals->load() << " (M = " << model.size() << ")\n";

    if (with_oracle) {
        const Interval dom{model.grid.front(), model.grid.back()};
        quad::QuadResult oracle;
        if constexpr (std::same_as<Scalar, double>) {
            oracle = quad::integrate_adaptive(
                [&](double z) {
                    return detail::to_scalar<double>(preset.family.eval(param, z), z);
                },
                dom.lo, dom.hi, quad_tol);
        } else {
            oracle = quad::integrate_complex([&](double z) { return preset.family.eval(param, z); },
                                             dom.lo, dom.hi, quad_tol);
        }
        if (!oracle.converged)
            throw QuadratureNonConvergenceError("oracle quadrature did not converge");
        const double abs_err = std::abs(cval - oracle.value);
        std::cout << "oracle:         " << text::fmt_double(oracle.value.real());
        if constexpr (std::same_as<Scalar, std::complex<double>>)
            std::cout << " + " << text::fmt_double(oracle.value.imag()) << "i";
        std::cout << "\n"
                  << "abs error:      " << text::fmt_double(abs_err) << "\n";
        if (std::abs(oracle.value) > 0.0)
            std::cout << "rel error:      " << text::fmt_double(abs_err / std::abs(oracle.value))
                      << "\n";
    }
    return 0;
}

int cmd_eval(const RunConfig& cfg, const std::string& param_spec, bool with_oracle) {
    if (cfg.model_path.empty()) throw ConfigError("eval requires --model");
    const auto loaded = io::load(cfg.model_path);
    const auto param = parse_numbers(param_spec, ',');
    const double quad_tol = cfg.quad_tol > 0.0 ? cfg.quad_tol : 1e-13;
    return std::visit(
        [&](const auto& file) { return eval_with(file, param, with_oracle, quad_tol); },
        loaded);
}

template <EimScalar Scalar>
int study_with(const io::ModelFile<Scalar>& file, const RunConfig& cfg) {
    const auto& model = file.model;
    const auto preset = preset_for_model(model);

    study::StudyOptions opts;
    opts.n_test = cfg.n_test;
    opts.test_seed = cfg.test_seed;
    opts.quad_tol = cfg.quad_tol > 0.0 ? cfg.quad_tol : 1e-13;
    if (auto it = file.config_echo.find("seed"); it != file.config_echo.end())
        opts.train_seed = std::stoull(it->second);

    const auto result = study::run_study(model, preset.family, opts);

    const fs::path out(cfg.out_dir);
    study::write_decay_csv(out / (model.family_tag + "_oos_decay.csv"), result.per_m_linf);
    study::write_samples_csv(out / (model.family_tag + "_samples.csv"), model.family_tag, result);
    study::write_scatter_csv(out / (model.family_tag + "_scatter.csv"), model, result);

    std::cout << "test samples:   " << result.rows.size() << "\n";
    if (!result.per_m_linf.empty()) {
        std::cout << "oos linf (M=1): " << text::fmt_double(result.per_m_linf.front()) << "\n"
                  << "oos linf (M=" << model.size()
                  << "): " << text::fmt_double(result.per_m_linf.back()) << "\n";
    }
    std::cout << "csv dir:        " << out.string() << "\n";
    return 0;
}

int cmd_study(const RunConfig& cfg) {
    if (!cfg.model_path.empty() && fs::exists(cfg.model_path)) {
        const auto loaded = io::load(cfg.model_path);
        return std::visit([&](const auto& file) { return study_with(file, cfg); }, loaded);
    }
    // no model on disk: train first with this config
    const auto preset = preset_from(cfg);
    if (preset.family.kind == ValueKind::Real) {
        const auto file = train_pipeline<double>(cfg, preset);
        return study_with(file, cfg);
    }
    const auto file = train_pipeline<std::complex<double>>(cfg, preset);
    return study_with(file, cfg);
}

/// sup of |e^{pz}| over p in [p_lo, p_hi] and z in the generalized Bernstein
/// ellipse: the exponent is maximized at a corner of [p_lo, p_hi] x [min Re,
/// max Re].
double exp_family_ellipse_sup(Interval p_range, Interval omega, double rho) {
    const double mid = omega.midpoint();
    const double half = 0.5 * omega.length();
    const double re_hi = mid + half * analysis::semimajor(rho);
    const double re_lo = mid - half * analysis::semimajor(rho);
    const double expo = std::max({p_range.hi * re_hi, p_range.hi * re_lo,
                                  p_range.lo * re_hi, p_range.lo * re_lo});
    return std::exp(expo);
}

int cmd_bounds(const RunConfig& cfg, std::optional<double> rho_flag,
               std::optional<double> eta_flag, std::optional<double> c_flag) {
    std::vector<double> measured;
    std::vector<Interval> box;
    Interval omega{0.0, 0.0};
    bool have_model = false;
    std::string family = cfg.family;

    if (!cfg.model_path.empty()) {
        const auto loaded = io::load(cfg.model_path);
        std::visit(
            [&](const auto& file) {
                measured = file.model.history;
                box = file.model.box;
                omega = {file.model.grid.front(), file.model.grid.back()};
                family = file.model.family_tag;
            },
            loaded);
        have_model = true;
    }
    if (!have_model) {
        const auto preset = preset_from(cfg);
        omega = preset.family.domain;
        box = preset.box;
    }

    double rho = 0.0;
    if (rho_flag) {
        rho = *rho_flag;
    } else if (eta_flag) {
        rho = analysis::rho_from_eta(*eta_flag, omega.length());
    } else if (family == "exp-test") {
        rho = 8.0; // documented default for the bound-validation family
    } else if (family == "cgmy") {
        // the integrands extend to the strip |Im z| < min(G, M) over the box
        const double eta = std::min(box.at(1).lo, box.at(2).lo);
        rho = analysis::rho_from_eta(eta, omega.length());
    } else {
        throw ConfigError("bounds needs --rho or --eta for this family");
    }

    if (!(rho > 4.0)) {
        std::cout << "a priori bound inapplicable: rho = " << text::fmt_double(rho)
                  << " <= 4 (no Bernstein ellipse with rho > 4 on which the integrands are "
                     "analytic); no bound curve written\n";
        return 0;
    }

    double c = 0.0;
    if (c_flag) {
        c = *c_flag;
    } else if (family == "exp-test") {
        c = analysis::explicit_bound_constant(rho, exp_family_ellipse_sup(box.at(0), omega, rho), 1.0);
    } else {
        throw ConfigError("bounds needs --bound-c for this family");
    }

    const analysis::BoundSpec spec(rho, c, omega.length());
    const std::size_t m_max = measured.empty() ? cfg.max_m : measured.size();
    const auto curve = analysis::bound_curve(spec, m_max);
    const fs::path out = fs::path(cfg.out_dir) / (family + "_bounds.csv");
    study::write_bounds_csv(out, curve, measured);
    std::cout << "rho:            " << text::fmt_double(rho) << "\n"
              << "constant C:     " << text::fmt_double(c) << "\n"
              << "bound csv:      " << out.string() << "\n";
    return 0;
}

int cmd_info(const RunConfig& cfg) {
    if (cfg.model_path.empty()) throw ConfigError("info requires --model");
    const auto loaded = io::load(cfg.model_path);
    std::visit(
        [&](const auto& file) {
            const auto& model = file.model;
            validate_model(model);
            std::cout << "family:         " << model.family_tag << "\n"
                      << "value kind:     "
                      << (std::holds_alternative<io::ModelFile<double>>(loaded) ? "real"
                                                                                : "complex")
                      << "\n"
                      << "terms (M):      " << model.size() << "\n"
                      << "grid size:      " << model.grid.size() << "\n"
                      << "omega:          [" << text::fmt_double(model.grid.front()) << ", "
                      << text::fmt_double(model.grid.back()) << "]\n"
                      << "stop reason:    " << to_string(file.stop_reason) << "\n"
                      << "tolerance:      " << text::fmt_double(model.tolerance) << "\n"
                      << "final residual: "
                      << (model.history.empty() ? std::string("n/a")
                                                : text::fmt_double(model.history.back()))
                      << "\n"
                      << "weights:        " << (model.weights.empty() ? "absent" : "present")
                      << "\n"
                      << "box:            ";
            for (std::size_t d = 0; d < model.box.size(); ++d) {
                if (d) std::cout << " x ";
                std::cout << "[" << text::fmt_double(model.box[d].lo) << ", "
                          << text::fmt_double(model.box[d].hi) << "]";
            }
            std::cout << "\n"
                      << "invariants:     ok\n"
                      << "config echo:    ";
            bool first = true;
            for (const auto& [k, v] : file.config_echo) {
                if (!first) std::cout << ", ";
                std::cout << k << "=" << v;
                first = false;
            }
            std::cout << "\n";
        },
        loaded);
    return 0;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--family", cfg.family, "family id (cgmy | stft-gauss | exp-test)");
    cmd->add_option("--model", cfg.model_path, "model file path");
    cmd->add_option("--out", cfg.out_dir, "output directory for CSV/model artifacts");
    cmd->add_option("--quad-tol", cfg.quad_tol,
                    "absolute quadrature tolerance (default: min(1e-13, tol/10))");
}

void add_train_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--box", cfg.box_spec,
                    "parameter box override: 'lo,hi;lo,hi;...' per coordinate");
    cmd->add_option("--omega", cfg.omega_spec, "integration interval 'a,b'");
    cmd->add_option("--cloud-size", cfg.cloud_size, "number of parameter cloud samples");
    cmd->add_option("--grid-size", cfg.grid_size, "number of domain grid points");
    cmd->add_option("--grid", cfg.grid_kind, "grid kind (uniform | chebyshev)");
    cmd->add_option("--tol", cfg.tol_spec, "training sup-residual tolerance, or 'none'");
    cmd->add_option("--max-m", cfg.max_m, "maximum number of basis functions");
    cmd->add_option("--seed", cfg.seed, "training cloud seed");
    cmd->add_flag("--serial", cfg.serial, "disable the parallel training kernels");
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

const std::vector<std::string>& known_config_keys() {
    static const std::vector<std::string> keys = {
        "family", "box",      "omega",   "cloud-size", "grid-size", "grid",
        "tol",    "max-m",    "seed",    "test-seed",  "n-test",    "quad-tol",
        "out",    "model",    "rho",     "eta",        "bound-c",   "param",
        "oracle", "serial",
    };
    return keys;
}

/// Applies a flat `key = value` config file: `--config PATH` is removed from
/// the argument list and each file entry becomes `--key value` unless that
/// flag was already given on the command line (flags override the file).
std::vector<std::string> apply_config_file(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw ConfigError("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (path.empty()) return args;

    auto given = [&](const std::string& flag) {
        for (const std::string& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };

    std::istringstream in(text::read_file(path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#' || stripped[0] == ';') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        const auto& keys = known_config_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key +
                              "'");
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        if (key == "oracle" || key == "serial") {
            if (value == "true" || value == "1") args.push_back(flag);
            else if (value != "false" && value != "0")
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": flag value must be true/false");
            continue;
        }
        args.push_back(flag);
        args.push_back(value);
    }
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"magic point quadrature for parametric integrals"};
    app.require_subcommand(1);
    app.footer("Every subcommand also accepts --config <file> with flat 'key = value' lines;\n"
               "command-line flags override file values.");

    RunConfig cfg;
    std::string param_spec;
    bool with_oracle = false;
    std::optional<double> rho_flag, eta_flag, c_flag;

    CLI::App* ctrain = app.add_subcommand("train", "offline phase: build and persist a model");
    add_common_options(ctrain, cfg);
    add_train_options(ctrain, cfg);

    CLI::App* ceval = app.add_subcommand("eval", "online phase: evaluate one integral");
    add_common_options(ceval, cfg);
    ceval->add_option("--param", param_spec, "parameter coordinates 'p0,p1,...'")->required();
    ceval->add_flag("--oracle", with_oracle, "also run the adaptive-quadrature reference");

    CLI::App* cstudy = app.add_subcommand("study", "out-of-sample error study (CSV artifacts)");
    add_common_options(cstudy, cfg);
    add_train_options(cstudy, cfg);
    cstudy->add_option("--n-test", cfg.n_test, "number of fresh test samples");
    cstudy->add_option("--test-seed", cfg.test_seed, "seed for the fresh samples");

    CLI::App* cbounds = app.add_subcommand("bounds", "a priori error bound curves (CSV)");
    add_common_options(cbounds, cfg);
    cbounds->add_option("--omega", cfg.omega_spec, "integration interval 'a,b'");
    cbounds->add_option("--max-m", cfg.max_m, "number of bound curve entries");
    double rho_val = 0.0, eta_val = 0.0, c_val = 0.0;
    auto* orho = cbounds->add_option("--rho", rho_val, "ellipse parameter (> 4 applies)");
    auto* oeta = cbounds->add_option("--eta", eta_val, "analyticity strip half-width");
    auto* oc = cbounds->add_option("--bound-c", c_val, "explicit bound constant C");

    CLI::App* cinfo = app.add_subcommand("info", "print a model file summary");
    add_common_options(cinfo, cfg);

    std::vector<std::string> raw_args(argv + 1, argv + argc);
    try {
        std::vector<std::string> args = apply_config_file(std::move(raw_args));
        std::vector<const char*> cargs;
        cargs.push_back(argv[0]);
        for (const std::string& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    if (orho->count() > 0) rho_flag = rho_val;
    if (oeta->count() > 0) eta_flag = eta_val;
    if (oc->count() > 0) c_flag = c_val;

    try {
        if (app.got_subcommand(ctrain)) return cmd_train(cfg);
        if (app.got_subcommand(ceval)) return cmd_eval(cfg, param_spec, with_oracle);
        if (app.got_subcommand(cstudy)) return cmd_study(cfg);
        if (app.got_subcommand(cbounds)) return cmd_bounds(cfg, rho_flag, eta_flag, c_flag);
        if (app.got_subcommand(cinfo)) return cmd_info(cfg);
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
