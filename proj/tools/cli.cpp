// Copyright 2026 The mzteleport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "mzt/error.hpp"
#include "mzt/teleporter.hpp"

namespace mzt::cli {

namespace {

const std::map<std::string, Command> kCommands = {
    {"sweep", Command::Sweep},
    {"figure", Command::Figure},
    {"classical-max", Command::ClassicalMax},
    {"fidelity", Command::Fidelity},
    {"lock-curve", Command::LockCurve},
};

const std::map<std::string, Layout> kLayouts = {
    {"a", Layout::OneArm},
    {"b", Layout::Balanced},
    {"c", Layout::DualArm},
};

const std::map<std::string, TeleporterKind> kSources = {
    {"two-mode", TeleporterKind::TwoMode},
    {"single", TeleporterKind::SingleSqueezer},
    {"none", TeleporterKind::Classical},
};

const std::map<std::string, Format> kFormats = {
    {"csv", Format::Csv},
    {"tsv", Format::Tsv},
    {"gnuplot", Format::Gnuplot},
};

template <typename T>
T lookup(const std::map<std::string, T>& table, const std::string& key, const char* what) {
    auto it = table.find(key);
    if (it == table.end()) {
        throw UsageError(std::string("unknown ") + what + " '" + key + "'");
    }
    return it->second;
}

double parse_double(const std::string& text, const char* what) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw UsageError(std::string("invalid number for ") + what + ": '" + text + "'");
    }
    return value;
}

bool is_known_figure(const std::string& name) { return name == "fig3" || name == "fig4" || name == "fig5"; }

class TableWriter {
  public:
    TableWriter(std::ostream& out, Format format, int precision)
        : out_(out), format_(format), precision_(precision) {}

    void header(const std::vector<std::string>& names) {
        if (format_ == Format::Gnuplot) {
            out_ << "# ";
        }
        row_of(names);
    }

    void row(const std::vector<double>& values) {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (double v : values) {
            cells.push_back(format_number(v, precision_));
        }
        row_of(cells);
    }

    void comment(const std::string& text) {
        if (format_ == Format::Gnuplot) {
            out_ << "# " << text << '\n';
        }
    }

    void block_break() { out_ << "\n\n"; }

  private:
    void row_of(const std::vector<std::string>& cells) {
        const char* sep = format_ == Format::Csv ? "," : format_ == Format::Tsv ? "\t" : " ";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != 0) {
                out_ << sep;
            }
            out_ << cells[i];
        }
        out_ << '\n';
    }

    std::ostream& out_;
    Format format_;
    int precision_;
};

double visibility_or_nan(const SweepRow& row) {
    return row.visibility.value_or(std::numeric_limits<double>::quiet_NaN());
}

std::string squeezing_label(double parametric_gain, int precision) {
    return format_number(parametric_gain_to_squeezing(parametric_gain), precision);
}

ScenarioConfig scenario_of(const RunConfig& config, Layout layout) {
    ScenarioConfig sc;
    sc.layout = layout;
    sc.teleporter = {config.source, 1.0, config.parametric_gain};
    if (layout == Layout::Balanced) {
        sc.eta = config.eta.value_or(EtaSetting::optimal());
    }
    return sc;
}

void emit_figure(const RunConfig& config, std::ostream& out) {
    const auto gains = gain_grid(config.gain_min, config.gain_max, config.steps);
    const auto curves = figure_curves(config.figure, gains);
    TableWriter writer(out, config.format, config.precision);

    if (config.format == Format::Gnuplot) {
        for (std::size_t c = 0; c < curves.size(); ++c) {
            if (c != 0) {
                writer.block_break();
            }
            writer.comment(curves[c].name);
            writer.header({"lambda", "visibility"});
            for (const auto& row : curves[c].table.rows) {
                writer.row({row.gain, visibility_or_nan(row)});
            }
        }
        return;
    }

    std::vector<std::string> names{"lambda"};
    for (const auto& c : curves) {
        names.push_back(c.name);
    }
    writer.header(names);
    for (std::size_t i = 0; i < gains.size(); ++i) {
        std::vector<double> values{gains[i]};
        for (const auto& c : curves) {
            values.push_back(visibility_or_nan(c.table.rows[i]));
        }
        writer.row(values);
    }
}

}  // namespace

std::string format_number(double value, int precision) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, precision);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return std::string(buf, ptr);
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Mach-Zehnder teleportation visibility simulator", "mzteleport"};
    std::string command;
    std::string figure;
    std::string scenario = "a";
    std::string source = "two-mode";
    std::string eta;
    std::string format = "csv";
    RunConfig config;
    double squeezing = 0.0;
    double parametric_gain = 1.0;

    app.add_option("command", command, "sweep | figure | classical-max | fidelity | lock-curve")->required();
    app.add_option("figure", figure, "fig3 | fig4 | fig5 (figure command only)");
    auto* scenario_opt = app.add_option("--scenario", scenario, "layout a | b | c");
    auto* source_opt = app.add_option("--source", source, "two-mode | single | none");
    auto* squeezing_opt = app.add_option("--squeezing", squeezing, "fractional noise reduction s in [0, 1)");
    auto* h_opt = app.add_option("--H", parametric_gain, "parametric gain H >= 1");
    app.add_option("--gain-min", config.gain_min, "first feedforward gain of the grid");
    app.add_option("--gain-max", config.gain_max, "last feedforward gain of the grid");
    app.add_option("--steps", config.steps, "number of grid points");
    auto* eta_opt = app.add_option("--eta", eta, "attenuator transmission for layout b: auto | value");
    app.add_option("--format", format, "csv | tsv | gnuplot");
    app.add_option("--out", config.out_path, "output file (default: standard output)");
    app.add_option("--precision", config.precision, "significant digits");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    config.command = lookup(kCommands, command, "command");
    config.format = lookup(kFormats, format, "format");
    config.layout = lookup(kLayouts, scenario, "scenario");
    config.source = lookup(kSources, source, "source");

    if (config.precision < 1 || config.precision > 17) {
        throw UsageError("--precision must lie in [1, 17]");
    }
    if (config.steps < 2) {
        throw UsageError("--steps must be at least 2");
    }
    if (!(config.gain_min >= 0.0) || !(config.gain_min < config.gain_max) || !std::isfinite(config.gain_max)) {
        throw UsageError("gain grid needs 0 <= --gain-min < --gain-max");
    }

    const bool has_s = squeezing_opt->count() > 0;
    const bool has_h = h_opt->count() > 0;
    if (has_s && has_h) {
        throw UsageError("give either --squeezing or --H, not both");
    }
    if (has_s && !(squeezing >= 0.0 && squeezing < 1.0)) {
        throw UsageError("--squeezing must lie in [0, 1)");
    }
    if (has_h && !(parametric_gain >= 1.0 && std::isfinite(parametric_gain))) {
        throw UsageError("--H must be finite and >= 1");
    }

    const bool shapes_source = config.command != Command::Figure && config.command != Command::ClassicalMax;
    if (config.command == Command::Figure) {
        if (!is_known_figure(figure)) {
            throw UsageError(figure.empty() ? "figure command needs a name (fig3, fig4, fig5)"
                                            : "unknown figure '" + figure + "'");
        }
        config.figure = figure;
        if (scenario_opt->count() || source_opt->count() || has_s || has_h || eta_opt->count()) {
            throw UsageError("figure curves are fixed; only grid, format, output and precision flags apply");
        }
    } else if (!figure.empty()) {
        throw UsageError("unexpected argument '" + figure + "'");
    }

    if (config.command == Command::ClassicalMax) {
        if (source_opt->count() || has_s || has_h) {
            throw UsageError("classical-max always uses the unentangled teleporter");
        }
        config.source = TeleporterKind::Classical;
    }
    if (config.command == Command::LockCurve) {
        if (scenario_opt->count() && config.layout != Layout::DualArm) {
            throw UsageError("lock-curve is defined for the dual-teleporter layout c only");
        }
        config.layout = Layout::DualArm;
    }
    if (config.command == Command::Fidelity && scenario_opt->count()) {
        throw UsageError("fidelity does not depend on the interferometer layout");
    }

    if (shapes_source) {
        if (config.source == TeleporterKind::Classical) {
            if ((has_s && squeezing != 0.0) || (has_h && parametric_gain != 1.0)) {
                throw UsageError("source none has no squeezing (use --squeezing 0 or omit it)");
            }
            config.parametric_gain = 1.0;
        } else if (has_s) {
            config.parametric_gain = squeezing_to_parametric_gain(squeezing);
        } else if (has_h) {
            config.parametric_gain = parametric_gain;
        } else {
            throw UsageError("source " + source + " needs --squeezing or --H");
        }
    }

    if (eta_opt->count()) {
        if (config.command != Command::Sweep || config.layout != Layout::Balanced) {
            throw UsageError("--eta applies only to sweeps of layout b");
        }
        if (eta == "auto") {
            config.eta = EtaSetting::optimal();
        } else {
            const double value = parse_double(eta, "--eta");
            if (!(value >= 0.0 && value <= 1.0)) {
                throw UsageError("--eta must lie in [0, 1]");
            }
            config.eta = EtaSetting::fixed(value);
        }
    }
    return config;
}

std::vector<Curve> figure_curves(const std::string& name, const std::vector<double>& gains) {
    if (!is_known_figure(name)) {
        throw UsageError("unknown figure '" + name + "'");
    }
    const Layout layout = name == "fig3" ? Layout::OneArm : name == "fig4" ? Layout::Balanced : Layout::DualArm;

    struct Source {
        TeleporterKind kind;
        double squeezing;
    };
    std::vector<Source> sources{{TeleporterKind::TwoMode, 0.0}, {TeleporterKind::TwoMode, 0.5},
                                {TeleporterKind::TwoMode, 0.9}};
    if (layout != Layout::DualArm) {
        sources.push_back({TeleporterKind::SingleSqueezer, 0.875});
    }

    std::vector<Curve> curves;
    for (const auto& s : sources) {
        ScenarioConfig sc;
        sc.layout = layout;
        sc.teleporter = {s.kind, 1.0, squeezing_to_parametric_gain(s.squeezing)};
        if (layout == Layout::Balanced) {
            sc.eta = EtaSetting::optimal();
        }
        curves.push_back({std::string(to_string(s.kind)) + "_s" + format_number(s.squeezing, 6), sweep_gain(sc, gains)});
    }
    return curves;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        TableWriter writer(out, config.format, config.precision);
        switch (config.command) {
            case Command::Sweep:
            case Command::LockCurve: {
                const auto gains = gain_grid(config.gain_min, config.gain_max, config.steps);
                const auto table = sweep_gain(scenario_of(config, config.layout), gains);
                const bool lock = config.command == Command::LockCurve;
                writer.comment("scenario " + std::string(to_string(config.layout)) + ", source " +
                               std::string(to_string(config.source)) + ", H " +
                               format_number(config.parametric_gain, config.precision));
                if (lock) {
                    writer.header({"lambda", "dark_count", "visibility"});
                } else {
                    writer.header({"lambda", "count_a", "count_b", "visibility"});
                }
                for (const auto& row : table.rows) {
                    if (lock) {
                        writer.row({row.gain, row.counts.b, visibility_or_nan(row)});
                    } else {
                        writer.row({row.gain, row.counts.a, row.counts.b, visibility_or_nan(row)});
                    }
                }
                break;
            }
            case Command::Figure:
                emit_figure(config, out);
                break;
            case Command::ClassicalMax: {
                const auto gains = gain_grid(config.gain_min, config.gain_max, config.steps);
                const auto peak = peak_visibility(sweep_gain(scenario_of(config, config.layout), gains));
                if (!peak) {
                    err << "mzteleport: no gain on the grid gives a defined visibility\n";
                    return kExitNumerical;
                }
                writer.header({"lambda", "visibility"});
                writer.row({peak->gain, *peak->visibility});
                break;
            }
            case Command::Fidelity: {
                const TeleporterSpec spec{config.source, 1.0, config.parametric_gain};
                writer.header({"source", "squeezing", "H", "fidelity"});
                const char* sep = config.format == Format::Csv ? "," : config.format == Format::Tsv ? "\t" : " ";
                out << to_string(config.source) << sep << squeezing_label(config.parametric_gain, config.precision)
                    << sep << format_number(config.parametric_gain, config.precision) << sep
                    << format_number(coherent_fidelity(spec), config.precision) << '\n';
                break;
            }
        }
    } catch (const UsageError& e) {
        err << "mzteleport: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "mzteleport: " << e.what() << '\n';
        return kExitNumerical;
    }
    return out ? kExitOk : kExitNumerical;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_args(args);
    } catch (const HelpRequested& e) {
        out << e.what();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "mzteleport: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "mzteleport: " << e.what() << '\n';
        return kExitUsage;
    }

    if (config.out_path.empty()) {
        return run(config, out, err);
    }
    std::ofstream file(config.out_path);
    if (!file) {
        err << "mzteleport: cannot open '" << config.out_path << "' for writing\n";
        return kExitUsage;
    }
    return run(config, file, err);
}

}  // namespace mzt::cli
