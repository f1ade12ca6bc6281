#include "holonoise/cli.hpp"

#include "holonoise/constants.hpp"
#include "holonoise/detection.hpp"
#include "holonoise/errors.hpp"
#include "holonoise/holo_model.hpp"
#include "holonoise/io.hpp"
#include "holonoise/rng.hpp"
#include "holonoise/slit_demo.hpp"
#include "holonoise/spectral.hpp"
#include "holonoise/synthesis.hpp"
#include "holonoise/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace holonoise::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Opens `path` for writing, or returns nullptr when output goes to stdout.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
    if (path.empty() || path == "-") {
        return nullptr;
    }
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*f) {
        throw IoError("cannot write " + path);
    }
    return f;
}

void finish_output(std::ofstream* f, const std::string& path) {
    if (f != nullptr) {
        f->close();
        if (!*f) {
            throw IoError("failed writing " + path);
        }
    }
}

std::string utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream ss;
    ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return ss.str();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json constants_json(const PhysicalConstants& k) {
    return ordered_json{{"c", k.c},     {"hbar", k.hbar},       {"G", k.G},    {"t_P", k.t_P},
                        {"l_P", k.l_P}, {"omega_P", k.omega_P}, {"m_P", k.m_P}};
}

ordered_json config_json(const ExperimentConfig& c) {
    return ordered_json{{"arm_length", c.arm_length},         {"shot_asd", c.shot_asd},
                        {"sample_rate", c.sample_rate},       {"n_samples", c.n_samples},
                        {"seed", c.seed},                     {"holo_scale", c.holo_scale},
                        {"segment_length", c.segment_length}, {"overlap", c.overlap}};
}

ordered_json report_json(const DetectionReport& r) {
    return ordered_json{{"band_hz", {r.band.lo_hz, r.band.hi_hz}},
                        {"n_bins", r.n_bins},
                        {"n_avg", r.n_avg},
                        {"integration_time_s", r.integration_time},
                        {"mean_re_csd", r.mean_re_csd},
                        {"null_sigma", r.null_sigma},
                        {"sigma_level", r.sigma_level},
                        {"snr", r.snr},
                        {"null_pvalue", r.null_pvalue}};
}

Band parse_band(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw DomainError("band must be given as f_lo:f_hi");
    }
    try {
        return {io::parse_double(text.substr(0, colon)), io::parse_double(text.substr(colon + 1))};
    } catch (const FormatError&) {
        throw DomainError("band must be given as f_lo:f_hi, got '" + text + "'");
    }
}

// ---- subcommand bodies -------------------------------------------------

struct PredictArgs {
    double arm_length = 40.0;
    std::size_t points = 201;
    std::string out;
};

void cmd_predict(const PredictArgs& a, std::ostream& stdout_) {
    if (a.points < 2) {
        throw DomainError("--points must be >= 2");
    }
    const HolographicModel model(a.arm_length);
    auto file = open_output(a.out);
    std::ostream& o = file ? *file : stdout_;
    o << "# holonoise model curves\n"
      << "# arm_length_m=" << io::format_double(model.arm_length()) << '\n'
      << "# sigma2_m2=" << io::format_double(model.sigma2()) << '\n'
      << "# tau_c_s=" << io::format_double(model.tau_c()) << '\n'
      << "# psd_convention=one-sided m^2/Hz\n"
      << "# acf abscissa: lag_s over [0, 2 tau_c]; psd abscissa: freq_hz over [0, 10/tau_c]\n"
      << "curve,abscissa,value\n";
    const double n = static_cast<double>(a.points - 1);
    for (std::size_t i = 0; i < a.points; ++i) {
        const double lag = 2.0 * model.tau_c() * static_cast<double>(i) / n;
        o << "acf," << io::format_double(lag) << ',' << io::format_double(model.autocorrelation(lag)) << '\n';
    }
    for (std::size_t i = 0; i < a.points; ++i) {
        const double f = 10.0 / model.tau_c() * static_cast<double>(i) / n;
        o << "psd," << io::format_double(f) << ',' << io::format_double(model.psd(f)) << '\n';
    }
    finish_output(file.get(), a.out);
}

void cmd_info(double length, const std::string& out_path, std::ostream& stdout_) {
    const InfoBudget b = info_budget(length);
    ordered_json j{{"L", b.length},
                   {"pixel_size", b.pixel_size},
                   {"refresh", b.refresh},
                   {"dof_radial", b.dof_radial},
                   {"dof_angular", b.dof_angular},
                   {"total_info", b.total_info},
                   {"field_theory_info", b.field_theory_info},
                   {"ratio", b.ratio}};
    auto file = open_output(out_path);
    (file ? *file : stdout_) << j.dump(2) << '\n';
    finish_output(file.get(), out_path);
}

struct SlitArgs {
    double screen_distance = 1.0;
    double separation = 0.0;
    std::optional<double> wavelength;
    std::optional<double> slit_width;
    std::optional<double> angle_span;
    std::size_t n_angles = 4096;
    bool sweep = false;
    std::size_t sweep_points = 61;
    std::string out;
};

void cmd_slits(const SlitArgs& a, std::ostream& stdout_) {
    SlitSetup setup = SlitSetup::planck(a.screen_distance, a.separation);
    if (a.wavelength) {
        setup.wavelength = *a.wavelength;
    }
    setup.slit_width = a.slit_width.value_or(setup.wavelength);
    setup.n_angles = a.n_angles;
    setup.angle_span = a.angle_span;
    setup.validate();

    auto file = open_output(a.out);
    std::ostream& o = file ? *file : stdout_;
    const double bound = transverse_uncertainty(a.screen_distance);
    o << "# holonoise two-slit information bound\n"
      << "# screen_distance_m=" << io::format_double(a.screen_distance) << '\n'
      << "# wavelength_m=" << io::format_double(setup.wavelength) << '\n'
      << "# slit_width_m=" << io::format_double(setup.slit_width) << '\n'
      << "# bound_m=" << io::format_double(bound) << '\n';
    if (a.sweep) {
        const auto sweep = separation_sweep(setup, bound / 30.0, bound * 30.0, a.sweep_points);
        if (const auto cross = threshold_crossing(sweep)) {
            o << "# crossing_m=" << io::format_double(*cross) << '\n';
        }
        o << "# threshold=" << io::format_double(kDistinguishableThreshold) << '\n'
          << "separation,distance_metric,bound\n";
        for (const auto& p : sweep) {
            o << io::format_double(p.separation) << ',' << io::format_double(p.distance_metric) << ','
              << io::format_double(p.bound) << '\n';
        }
    } else {
        const Pattern p = information_blurred_pattern(setup);
        o << "# separation_m=" << io::format_double(a.separation) << '\n' << "angle,intensity\n";
        for (std::size_t i = 0; i < p.angles.size(); ++i) {
            o << io::format_double(p.angles[i]) << ',' << io::format_double(p.intensity[i]) << '\n';
        }
    }
    finish_output(file.get(), a.out);
}

struct SimulateArgs {
    std::string config;
    std::string out_dir;
    std::string dump_timeseries;
};

ordered_json output_entry(const fs::path& path) {
    return ordered_json{{"file", path.filename().string()},
                        {"path", path.string()},
                        {"bytes", fs::file_size(path)},
                        {"sha256", sha256_file(path.string())}};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot write " + path.string());
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

void cmd_simulate(const SimulateArgs& a, std::ostream& stdout_) {
    const std::string started = utc_now();
    const std::string text = read_file(a.config);
    const ExperimentConfig config = parse_config(text, a.config);
    config.validate();

    fs::path dir = a.out_dir;
    if (dir.empty()) {
        const char* env = std::getenv(kOutputDirEnv);
        dir = env != nullptr && *env != '\0' ? fs::path(env) : fs::current_path();
    }
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    }

    const TimeSeriesPair pair = synthesize_pair(config);
    const WelchParams params{config.segment_length, config.overlap, Window::Hann};
    const SpectralEstimate est = welch_csd(pair, params);

    const HolographicModel model(config.arm_length);
    const Band band = default_band(model, config.sample_rate, config.segment_length);
    const DetectorSetup setup{config.shot_asd, config.sample_rate, config.segment_length,
                              config.overlap, config.holo_scale};

    ordered_json detection;
    detection["predicted_snr"] = predicted_snr(model, setup, est.n_avg, band);
    if (est.n_avg >= 30) {
        detection["report"] = report_json(null_significance(est, band));
    } else {
        detection["report"] = nullptr;
        detection["note"] = "fewer than 30 averages; Gaussian null not applicable";
    }

    std::vector<fs::path> outputs;
    {
        const fs::path p = dir / "spectra.csv";
        std::ostringstream ss;
        io::write_spectra_csv(ss, est);
        write_text(p, ss.str());
        outputs.push_back(p);
    }
    {
        const fs::path p = dir / "detection.json";
        write_text(p, detection.dump(2) + "\n");
        outputs.push_back(p);
    }
    if (!a.dump_timeseries.empty()) {
        const fs::path p = a.dump_timeseries;
        std::ofstream f(p, std::ios::binary);
        if (!f) {
            throw IoError("cannot write " + p.string());
        }
        io::write_timeseries_csv(f, pair,
                                 {{"segment_length", std::to_string(config.segment_length)},
                                  {"overlap", io::format_double(config.overlap)}});
        f.close();
        if (!f) {
            throw IoError("failed writing " + p.string());
        }
        outputs.push_back(p);
    }

    ordered_json manifest;
    manifest["software"] = {{"name", "holonoise"}, {"version", kVersion}};
    manifest["prng"] = std::string(kPrngName);
    manifest["config"] = config_json(config);
    manifest["constants"] = constants_json(codata_constants());
    manifest["analysis"] = {{"window", std::string(window_name(params.window))},
                            {"segment_length", params.segment_length},
                            {"overlap", params.overlap},
                            {"band_hz", {band.lo_hz, band.hi_hz}}};
    manifest["started_utc"] = started;
    manifest["finished_utc"] = utc_now();
    manifest["outputs"] = ordered_json::array();
    for (const auto& p : outputs) {
        manifest["outputs"].push_back(output_entry(p));
    }
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");

    stdout_ << detection.dump(2) << '\n';
}

struct AnalyzeArgs {
    std::string timeseries;
    std::optional<std::size_t> segment_length;
    std::optional<double> overlap;
    std::string window = "hann";
    std::string out;
};

void cmd_analyze(const AnalyzeArgs& a, std::ostream& stdout_) {
    std::ifstream in(a.timeseries);
    if (!in) {
        throw IoError("cannot open " + a.timeseries);
    }
    const auto header = io::read_header(in);
    in.clear();
    in.seekg(0);
    const TimeSeriesPair pair = io::read_timeseries_csv(in);

    WelchParams params;
    params.window = parse_window(a.window);
    if (a.segment_length) {
        params.segment_length = *a.segment_length;
    } else if (const auto it = header.find("segment_length"); it != header.end()) {
        params.segment_length = std::stoul(it->second);
    }
    if (a.overlap) {
        params.overlap = *a.overlap;
    } else if (const auto it = header.find("overlap"); it != header.end()) {
        params.overlap = io::parse_double(it->second);
    }
    const SpectralEstimate est = welch_csd(pair, params);
    auto file = open_output(a.out);
    io::write_spectra_csv(file ? *file : stdout_, est);
    finish_output(file.get(), a.out);
}

void cmd_detect(const std::string& estimate_path, const std::string& band_text,
                const std::string& out_path, std::ostream& stdout_) {
    const Band band = parse_band(band_text);
    const SpectralEstimate est = io::read_spectra_file(estimate_path);
    const DetectionReport r = null_significance(est, band);
    auto file = open_output(out_path);
    (file ? *file : stdout_) << report_json(r).dump(2) << '\n';
    finish_output(file.get(), out_path);
}

} // namespace

std::string sha256_file(const std::string& path) {
    const std::string data = read_file(path);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw IoError("sha256 failed for " + path);
    }
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) {
        ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return ss.str();
}

ExperimentConfig parse_config(std::string_view json_text, std::string_view source) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column(json_text, e.byte > 0 ? e.byte - 1 : 0);
        throw FormatError(std::string(source) + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": malformed JSON");
    }
    if (!j.is_object()) {
        throw FormatError(std::string(source) + ": top level must be an object");
    }
    ExperimentConfig c;
    auto number = [&](const std::string& key, const ordered_json& v) {
        if (!v.is_number()) {
            throw FormatError(std::string(source) + ": field '" + key + "' must be a number");
        }
        return v.get<double>();
    };
    auto count = [&](const std::string& key, const ordered_json& v) -> std::uint64_t {
        if (!v.is_number_unsigned()) {
            throw FormatError(std::string(source) + ": field '" + key +
                              "' must be a non-negative integer");
        }
        return v.get<std::uint64_t>();
    };
    for (const auto& [key, v] : j.items()) {
        if (key == "arm_length") {
            c.arm_length = number(key, v);
        } else if (key == "shot_asd") {
            c.shot_asd = number(key, v);
        } else if (key == "sample_rate") {
            c.sample_rate = number(key, v);
        } else if (key == "n_samples") {
            c.n_samples = count(key, v);
        } else if (key == "seed") {
            c.seed = count(key, v);
        } else if (key == "holo_scale") {
            c.holo_scale = number(key, v);
        } else if (key == "segment_length") {
            c.segment_length = count(key, v);
        } else if (key == "overlap") {
            c.overlap = number(key, v);
        } else {
            throw FormatError(std::string(source) + ": unknown field '" + key + "'");
        }
    }
    return c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Planck-scale holographic noise model and twin-interferometer simulator",
                 "holonoise"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string out_path;

    auto* constants = app.add_subcommand("constants", "Print fundamental constants and Planck units as JSON");
    constants->add_option("--out", out_path, "Output file (default stdout)");

    PredictArgs predict;
    auto* predict_cmd = app.add_subcommand("predict", "Model autocorrelation and PSD curves as CSV");
    predict_cmd->add_option("--arm-length", predict.arm_length, "Arm length L, m")->required();
    predict_cmd->add_option("--points", predict.points, "Points per curve");
    predict_cmd->add_option("--out", predict.out, "Output file (default stdout)");

    double info_length = 0.0;
    auto* info = app.add_subcommand("info", "Information budget of a region as JSON");
    info->add_option("--length", info_length, "Region scale L, m")->required();
    info->add_option("--out", out_path, "Output file (default stdout)");

    SlitArgs slits;
    auto* slits_cmd = app.add_subcommand("slits", "Two-slit pattern under the transverse information bound");
    slits_cmd->add_option("--screen-distance", slits.screen_distance, "Screen distance L, m")->required();
    slits_cmd->add_option("--separation", slits.separation, "Slit separation, m");
    slits_cmd->add_option("--wavelength", slits.wavelength, "Wavelength, m (default Planck length)");
    slits_cmd->add_option("--slit-width", slits.slit_width, "Slit width, m (default one wavelength)");
    slits_cmd->add_option("--n-angles", slits.n_angles, "Angle grid size");
    slits_cmd->add_option("--angle-span", slits.angle_span, "Full angular span, rad");
    slits_cmd->add_flag("--sweep", slits.sweep, "Sweep separation over [bound/30, 30 bound]");
    slits_cmd->add_option("--sweep-points", slits.sweep_points, "Points in the sweep");
    slits_cmd->add_option("--out", slits.out, "Output file (default stdout)");

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Simulate a twin-interferometer run and analyze it");
    simulate->add_option("--config", sim.config, "JSON experiment config")->required();
    simulate->add_option("--out-dir", sim.out_dir,
                         std::string("Output directory (default $") + kOutputDirEnv + " or cwd)");
    simulate->add_option("--dump-timeseries", sim.dump_timeseries, "Write time series CSV here");

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Welch spectra of a dumped time series");
    analyze_cmd->add_option("--timeseries", analyze.timeseries, "Time series CSV")->required();
    analyze_cmd->add_option("--segment-length", analyze.segment_length, "Welch segment length");
    analyze_cmd->add_option("--overlap", analyze.overlap, "Welch overlap fraction");
    analyze_cmd->add_option("--window", analyze.window, "hann or rectangular");
    analyze_cmd->add_option("--out", analyze.out, "Output file (default stdout)");

    std::string estimate_path;
    std::string band_text;
    auto* detect = app.add_subcommand("detect", "Null significance of a spectra CSV");
    detect->add_option("--estimate", estimate_path, "Spectra CSV")->required();
    detect->add_option("--band", band_text, "Band f_lo:f_hi in Hz")->required();
    detect->add_option("--out", out_path, "Output file (default stdout)");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    if (!argv_rev.empty()) {
        argv_rev.pop_back(); // program name
    }
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*constants) {
            auto file = open_output(out_path);
            (file ? *file : out) << constants_json(codata_constants()).dump(2) << '\n';
            finish_output(file.get(), out_path);
        } else if (*predict_cmd) {
            cmd_predict(predict, out);
        } else if (*info) {
            cmd_info(info_length, out_path, out);
        } else if (*slits_cmd) {
            cmd_slits(slits, out);
        } else if (*simulate) {
            cmd_simulate(sim, out);
        } else if (*analyze_cmd) {
            cmd_analyze(analyze, out);
        } else if (*detect) {
            cmd_detect(estimate_path, band_text, out_path, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const fs::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        // DomainError, FormatError, SynthesisError, UnreachableTargetError
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace holonoise::cli
