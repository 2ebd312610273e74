#include "cli.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcorr/errors.hpp"

namespace qcorr::cli {

namespace {

ConfigKind parse_channel(const std::string& name) {
    if (name == "dephasing") return ConfigKind::Dephasing;
    if (name == "gad") return ConfigKind::GAD;
    if (name == "depolarizing") return ConfigKind::Depolarizing;
    if (name == "dephasing+gad") return ConfigKind::DephasingPlusGAD;
    throw Error("unknown channel: " + name);
}

StateFamily parse_state(const std::string& name) {
    if (name == "werner") return StateFamily::Werner;
    if (name == "phi") return StateFamily::Phi;
    throw Error("unknown state family: " + name);
}

const char* channel_name(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::Dephasing: return "dephasing";
        case ConfigKind::GAD: return "gad";
        case ConfigKind::Depolarizing: return "depolarizing";
        case ConfigKind::DephasingPlusGAD: return "dephasing+gad";
    }
    return "?";
}

const char* state_name(StateFamily family) {
    return family == StateFamily::Werner ? "werner" : "phi";
}

struct FigureSpec {
    ChannelConfig config;
};

FigureSpec figure_spec(const std::string& id) {
    if (id == "1") return {{ConfigKind::Dephasing, StateFamily::Werner, 1.0}};
    if (id == "2a" || id == "2b") return {{ConfigKind::GAD, StateFamily::Phi, 1.0}};
    if (id == "2c" || id == "2d") return {{ConfigKind::GAD, StateFamily::Phi, 2.0 / 3.0}};
    if (id == "3") return {{ConfigKind::Depolarizing, StateFamily::Phi, 1.0}};
    if (id == "4") return {{ConfigKind::DephasingPlusGAD, StateFamily::Phi, 1.0}};
    throw Error("unknown figure id: " + id);
}

int write_sweep_file(const SweepGrid& grid, const std::string& path, const std::string& format,
                     std::ostream& err) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file: " << path << "\n";
        return kExitIo;
    }
    if (format == "csv") {
        file << csv_header() << "\n";
        for (const SweepCell& cell : grid.rows)
            file << csv_row(make_record(cell.alpha, cell.gamma, cell.report)) << "\n";
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const SweepCell& cell : grid.rows)
            arr.push_back(record_json(make_record(cell.alpha, cell.gamma, cell.report)));
        file << arr.dump(2) << "\n";
    }
    file.flush();
    if (!file.good()) {
        err << "error: failed writing " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_point(const ChannelConfig& config, double alpha, double gamma, std::ostream& out) {
    const OutputRecord rec = make_record(alpha, gamma, discord(evolve(config, alpha, gamma)));
    nlohmann::ordered_json j = record_json(rec);
    if (config.kind == ConfigKind::Dephasing && config.state_family == StateFamily::Werner) {
        j["concurrence_closed_form"] = dephased_werner_concurrence_closed_form(alpha, gamma);
        const auto d = dephased_werner_discord_closed_form(alpha, gamma);
        if (d)
            j["discord_closed_form"] = *d;
        else
            j["discord_closed_form"] = nullptr;
    }
    out << j.dump() << "\n";
    return kExitOk;
}

int run_figure(const std::string& id, const std::string& out_dir, int steps, int threads,
               std::ostream& err) {
    const FigureSpec spec = figure_spec(id);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        err << "error: cannot create output directory: " << out_dir << "\n";
        return kExitIo;
    }

    const SweepGrid grid = sweep(spec.config, steps, steps, threads);
    const std::filesystem::path dir(out_dir);

    for (const char* which : {"concurrence", "discord"}) {
        std::ofstream file(dir / (id + "_" + which + ".csv"), std::ios::binary);
        if (!file) {
            err << "error: cannot write into " << out_dir << "\n";
            return kExitIo;
        }
        file << "alpha,gamma," << which << "\n";
        for (const SweepCell& cell : grid.rows) {
            const double value = which[0] == 'c' ? cell.report.concurrence : cell.report.discord;
            file << format_double(cell.alpha) << "," << format_double(cell.gamma) << ","
                 << format_double(value) << "\n";
        }
        if (!file.good()) {
            err << "error: failed writing into " << out_dir << "\n";
            return kExitIo;
        }
    }

    nlohmann::ordered_json meta;
    meta["id"] = id;
    meta["channel"] = channel_name(spec.config.kind);
    meta["state"] = state_name(spec.config.state_family);
    meta["q"] = spec.config.q;
    meta["alpha_steps"] = steps;
    meta["gamma_steps"] = steps;
    std::ofstream metafile(dir / (id + "_meta.json"), std::ios::binary);
    if (!metafile) {
        err << "error: cannot write into " << out_dir << "\n";
        return kExitIo;
    }
    metafile << meta.dump(2) << "\n";
    return metafile.good() ? kExitOk : kExitIo;
}

}  // namespace

OutputRecord make_record(double alpha, double gamma, const CorrelationReport& report) {
    return {alpha,
            gamma,
            report.concurrence,
            report.discord,
            report.mutual_info,
            report.classical_corr,
            report.argmax.theta,
            report.argmax.phi};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string csv_header() {
    return "alpha,gamma,concurrence,discord,mutual_info,classical_corr,theta_opt,phi_opt";
}

std::string csv_row(const OutputRecord& r) {
    std::string row = format_double(r.alpha);
    for (double v : {r.gamma, r.concurrence, r.discord, r.mutual_info, r.classical_corr,
                     r.theta_opt, r.phi_opt}) {
        row += ',';
        row += format_double(v);
    }
    return row;
}

OutputRecord parse_csv_row(const std::string& line) {
    std::array<double, 8> fields{};
    std::size_t start = 0;
    for (std::size_t k = 0; k < 8; ++k) {
        const std::size_t end = line.find(',', start);
        if ((end == std::string::npos) != (k == 7)) throw Error("malformed CSV row: " + line);
        const std::string cell = line.substr(start, end - start);
        char* rest = nullptr;
        fields[k] = std::strtod(cell.c_str(), &rest);
        if (rest == cell.c_str()) throw Error("malformed CSV number: " + cell);
        start = end + 1;
    }
    return {fields[0], fields[1], fields[2], fields[3], fields[4], fields[5], fields[6], fields[7]};
}

nlohmann::ordered_json record_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["alpha"] = r.alpha;
    j["gamma"] = r.gamma;
    j["concurrence"] = r.concurrence;
    j["discord"] = r.discord;
    j["mutual_info"] = r.mutual_info;
    j["classical_corr"] = r.classical_corr;
    j["theta_opt"] = r.theta_opt;
    j["phi_opt"] = r.phi_opt;
    return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two-qubit Markovian decoherence: concurrence and quantum discord along "
                 "Kraus-channel trajectories"};
    app.require_subcommand(1);

    const std::vector<std::string> channels{"dephasing", "gad", "depolarizing", "dephasing+gad"};
    const std::vector<std::string> states{"werner", "phi"};
    const std::vector<std::string> figure_ids{"1", "2a", "2b", "2c", "2d", "3", "4"};

    struct {
        std::string channel, state;
        double alpha = 0.0, gamma = 0.0, q = 1.0;
    } point_opts;
    CLI::App* point = app.add_subcommand("point", "Evaluate correlations at one (alpha, gamma)");
    point->add_option("--channel", point_opts.channel)->required()->check(CLI::IsMember(channels));
    point->add_option("--state", point_opts.state)->required()->check(CLI::IsMember(states));
    point->add_option("--alpha", point_opts.alpha)->required()->check(CLI::Range(0.0, 1.0));
    point->add_option("--gamma", point_opts.gamma)->required()->check(CLI::Range(0.0, 1.0));
    point->add_option("--q", point_opts.q)->check(CLI::Range(0.0, 1.0));

    struct {
        std::string channel, state, outfile, format = "csv";
        double q = 1.0;
        int alpha_steps = 0, gamma_steps = 0, threads = 1;
    } sweep_opts;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Write a full (alpha, gamma) grid to a file");
    sweep_cmd->add_option("--channel", sweep_opts.channel)->required()->check(CLI::IsMember(channels));
    sweep_cmd->add_option("--state", sweep_opts.state)->required()->check(CLI::IsMember(states));
    sweep_cmd->add_option("--q", sweep_opts.q)->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--alpha-steps", sweep_opts.alpha_steps)
        ->required()
        ->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--gamma-steps", sweep_opts.gamma_steps)
        ->required()
        ->check(CLI::Range(2, 100000));
    sweep_cmd->add_option("--out", sweep_opts.outfile)->required();
    sweep_cmd->add_option("--format", sweep_opts.format)
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--threads", sweep_opts.threads)->check(CLI::Range(1, 256));

    struct {
        std::string channel, state;
        double alpha = 0.0, q = 1.0, tol = 1e-6;
    } esd_opts;
    CLI::App* esd_cmd =
        app.add_subcommand("esd", "Locate the sudden-death gamma for one alpha, or print 'none'");
    esd_cmd->add_option("--channel", esd_opts.channel)->required()->check(CLI::IsMember(channels));
    esd_cmd->add_option("--state", esd_opts.state)->required()->check(CLI::IsMember(states));
    esd_cmd->add_option("--alpha", esd_opts.alpha)->required()->check(CLI::Range(0.0, 1.0));
    esd_cmd->add_option("--q", esd_opts.q)->check(CLI::Range(0.0, 1.0));
    esd_cmd->add_option("--tol", esd_opts.tol)->check(CLI::Range(1e-12, 0.1));

    struct {
        std::string id, out_dir;
        int steps = 101, threads = 1;
    } fig_opts;
    CLI::App* figure_cmd =
        app.add_subcommand("figure", "Export concurrence and discord surfaces for a figure id");
    figure_cmd->add_option("--id", fig_opts.id)->required()->check(CLI::IsMember(figure_ids));
    figure_cmd->add_option("--out", fig_opts.out_dir)->required();
    figure_cmd->add_option("--steps", fig_opts.steps)->check(CLI::Range(2, 100000));
    figure_cmd->add_option("--threads", fig_opts.threads)->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (point->parsed()) {
            const ChannelConfig config{parse_channel(point_opts.channel),
                                       parse_state(point_opts.state), point_opts.q};
            return run_point(config, point_opts.alpha, point_opts.gamma, out);
        }
        if (sweep_cmd->parsed()) {
            const ChannelConfig config{parse_channel(sweep_opts.channel),
                                       parse_state(sweep_opts.state), sweep_opts.q};
            const SweepGrid grid = sweep(config, sweep_opts.alpha_steps, sweep_opts.gamma_steps,
                                         sweep_opts.threads);
            return write_sweep_file(grid, sweep_opts.outfile, sweep_opts.format, err);
        }
        if (esd_cmd->parsed()) {
            const ChannelConfig config{parse_channel(esd_opts.channel),
                                       parse_state(esd_opts.state), esd_opts.q};
            const EsdResult r = esd_gamma(config, esd_opts.alpha, esd_opts.tol);
            out << (r.gamma_esd ? format_double(*r.gamma_esd) : "none") << "\n";
            return kExitOk;
        }
        if (figure_cmd->parsed())
            return run_figure(fig_opts.id, fig_opts.out_dir, fig_opts.steps, fig_opts.threads,
                              err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}

}  // namespace qcorr::cli
