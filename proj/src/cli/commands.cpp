#include "gacfit/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include <CLI11.hpp>

#include "gacfit/cli/plot.hpp"
#include "gacfit/cli/report.hpp"
#include "gacfit/dataset_io.hpp"
#include "gacfit/error.hpp"

namespace gacfit::cli {

namespace {

constexpr double kEquivalenceThreshold = 1e-9;

struct Algorithm {
    const char* name;
    FitMode mode;
    FitMethod method;
};

constexpr std::array<Algorithm, 8> kAlgorithms{{
    {"Q", FitMode::General, FitMethod::Eigen},
    {"QAL", FitMode::AxesAligned, FitMethod::Eigen},
    {"Q0", FitMode::OriginCentred, FitMethod::Eigen},
    {"Q0-dir", FitMode::OriginCentred, FitMethod::Direct},
    {"Q0-sym", FitMode::OriginCentred, FitMethod::Symmetrize},
    {"QAL0", FitMode::AxesAlignedOriginCentred, FitMethod::Eigen},
    {"QAL0-dir", FitMode::AxesAlignedOriginCentred, FitMethod::Direct},
    {"QAL0-sym", FitMode::AxesAlignedOriginCentred, FitMethod::Symmetrize},
}};

constexpr std::array<FitMode, 4> kModes{FitMode::General, FitMode::AxesAligned, FitMode::OriginCentred,
                                        FitMode::AxesAlignedOriginCentred};

void require_admissible(const CliConfig& c)
{
    if (!is_admissible(c.mode, c.method))
        throw Error(ErrorCode::MethodModeMismatch, "method " + std::string(to_string(c.method)) +
                                                       " is not available for mode " + std::string(to_string(c.mode)));
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
        throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
    f << content;
    f.flush();
    if (!f)
        throw Error(ErrorCode::IoError, "cannot write " + path);
}

Dataset load(const CliConfig& c)
{
    Dataset ds = load_dataset(c.input);
    if (c.dump_path)
        write_file(*c.dump_path, serialize_csv(ds));
    return ds;
}

void emit_report(const FitResult& r, OutputFormat format, std::ostream& out)
{
    if (format == OutputFormat::Json)
        out << dump_json(fit_report(r)) << '\n';
    else
        out << text_report(r);
}

double max_coefficient_gap(const ConicIPNS& a, const ConicIPNS& b)
{
    const auto ca = canonicalize(a).coefficients();
    const auto cb = canonicalize(b).coefficients();
    double gap = 0.0;
    for (std::size_t i = 0; i < ca.size(); ++i)
        gap = std::max(gap, std::abs(ca[i] - cb[i]));
    return gap;
}

} // namespace

int run_fit(const CliConfig& config, std::ostream& out)
{
    require_admissible(config);
    const Dataset ds = load(config);
    emit_report(fit(ds.points, config.mode, config.method), config.format, out);
    return 0;
}

int run_plot(const CliConfig& config, std::ostream& out)
{
    require_admissible(config);
    const Dataset ds = load(config);
    const FitResult r = fit(ds.points, config.mode, config.method);
    const RenderedPlot plot = render_plot(ds.points, r, {config.grid, config.margin});
    if (config.svg_path) {
        write_file(*config.svg_path, plot.svg);
        emit_report(r, config.format, out);
    } else {
        out << plot.svg;
    }
    return 0;
}

int run_bench(const CliConfig& config, std::ostream& out)
{
    const Dataset ds = load(config);

    struct Row {
        const Algorithm* alg;
        std::optional<FitResult> result;
        std::optional<Error> error;
        double ms = 0.0;
    };
    std::vector<Row> rows;
    for (const Algorithm& alg : kAlgorithms) {
        Row row{&alg, {}, {}, 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
            row.result = fit(ds.points, alg.mode, alg.method);
        } catch (const Error& e) {
            row.error = e;
        }
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        rows.push_back(std::move(row));
    }

    bool pass = true;
    Json gaps = Json::object();
    for (FitMode mode : kModes) {
        const FitResult* ref = nullptr;
        double gap = 0.0;
        bool complete = true;
        for (const Row& row : rows) {
            if (row.alg->mode != mode)
                continue;
            if (!row.result) {
                complete = false;
                continue;
            }
            if (!ref)
                ref = &*row.result;
            else
                gap = std::max(gap, max_coefficient_gap(ref->conic, row.result->conic));
        }
        complete = complete && ref;
        pass = pass && complete && gap <= kEquivalenceThreshold;
        gaps[std::string(to_string(mode))] = complete ? Json(gap) : Json(nullptr);
    }

    if (config.format == OutputFormat::Json) {
        Json j;
        j["input"] = ds.source;
        j["rows"] = Json::array();
        for (const Row& row : rows) {
            Json r;
            r["algorithm"] = row.alg->name;
            r["mode"] = std::string(to_string(row.alg->mode));
            r["method"] = std::string(to_string(row.alg->method));
            r["dof"] = degrees_of_freedom(row.alg->mode);
            if (row.result) {
                r["objective"] = row.result->objective;
                r["lambda"] = row.result->lambda;
                r["status"] = "ok";
            } else {
                r["objective"] = nullptr;
                r["lambda"] = nullptr;
                r["status"] = error_report(*row.error)["error"];
            }
            r["time_ms"] = row.ms;
            j["rows"].push_back(std::move(r));
        }
        j["discrepancy"] = gaps;
        j["threshold"] = kEquivalenceThreshold;
        j["pass"] = pass;
        out << dump_json(j) << '\n';
    } else {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-10s %-17s %-7s %4s %14s %10s  %s\n", "algorithm", "mode", "method", "dof",
                      "objective", "time_ms", "status");
        out << buf;
        for (const Row& row : rows) {
            const std::string status = row.result ? "ok" : std::string(to_string(row.error->code()));
            std::snprintf(buf, sizeof buf, "%-10s %-17s %-7s %4d %14.10f %10.4f  %s\n", row.alg->name,
                          std::string(to_string(row.alg->mode)).c_str(),
                          std::string(to_string(row.alg->method)).c_str(), degrees_of_freedom(row.alg->mode),
                          row.result ? row.result->objective : std::nan(""), row.ms, status.c_str());
            out << buf;
        }
        out << "max canonical discrepancy per mode (threshold 1e-9):\n";
        for (const auto& [mode, gap] : gaps.items()) {
            if (gap.is_null())
                std::snprintf(buf, sizeof buf, "  %-17s failed\n", mode.c_str());
            else
                std::snprintf(buf, sizeof buf, "  %-17s %.3e\n", mode.c_str(), gap.get<double>());
            out << buf;
        }
        out << (pass ? "PASS\n" : "FAIL\n");
    }
    return pass ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fit conic sections to planar point sets in the geometric algebra for conics"};
    app.require_subcommand(1);

    CliConfig config;
    const std::map<std::string, FitMode> modes{{"general", FitMode::General},
                                               {"aligned", FitMode::AxesAligned},
                                               {"centered", FitMode::OriginCentred},
                                               {"aligned-centered", FitMode::AxesAlignedOriginCentred}};
    const std::map<std::string, FitMethod> methods{
        {"eig", FitMethod::Eigen}, {"direct", FitMethod::Direct}, {"sym", FitMethod::Symmetrize}};
    const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::Json}, {"text", OutputFormat::Text}};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", config.input, "CSV file or builtin:table3")->capture_default_str();
        sub->add_option_function<std::string>(
               "--format", [&](const std::string& s) { config.format = formats.at(s); }, "json or text")
            ->check(CLI::IsMember(formats));
        sub->add_option("--dump", config.dump_path, "Write the loaded dataset as CSV");
    };
    auto add_fit_options = [&](CLI::App* sub) {
        add_common(sub);
        // Parsed as text: CLI11 cannot bind enums that have a free to_string.
        sub->add_option_function<std::string>(
               "--mode,-m", [&](const std::string& s) { config.mode = modes.at(s); },
               "general, aligned, centered or aligned-centered")
            ->check(CLI::IsMember(modes));
        sub->add_option_function<std::string>(
               "--method", [&](const std::string& s) { config.method = methods.at(s); }, "eig, direct or sym")
            ->check(CLI::IsMember(methods));
    };

    CLI::App* fit_cmd = app.add_subcommand("fit", "Fit one conic and report it");
    add_fit_options(fit_cmd);
    CLI::App* bench_cmd = app.add_subcommand("bench", "Run all eight algorithms on one dataset");
    add_common(bench_cmd);
    CLI::App* plot_cmd = app.add_subcommand("plot", "Fit and render an SVG figure");
    add_fit_options(plot_cmd);
    plot_cmd->add_option("--svg", config.svg_path, "Output SVG path (stdout when omitted)");
    plot_cmd->add_option("--grid", config.grid, "Contour samples per axis")
        ->check(CLI::Range(2, 8192))
        ->capture_default_str();
    plot_cmd->add_option("--margin", config.margin, "Padding as a fraction of the data span")
        ->check(CLI::Range(0.0, 10.0))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << dump_json(error_report(to_string(ErrorCode::InvalidArgument), e.what())) << '\n';
        return 1;
    }

    try {
        if (fit_cmd->parsed())
            config.command = Command::Fit;
        else if (bench_cmd->parsed())
            config.command = Command::Bench;
        else
            config.command = Command::Plot;
        switch (config.command) {
        case Command::Fit: return run_fit(config, out);
        case Command::Bench: return run_bench(config, out);
        case Command::Plot: return run_plot(config, out);
        }
    } catch (const Error& e) {
        err << dump_json(error_report(e)) << '\n';
    } catch (const std::exception& e) {
        err << dump_json(error_report("Internal", e.what())) << '\n';
    }
    return 1;
}

} // namespace gacfit::cli
