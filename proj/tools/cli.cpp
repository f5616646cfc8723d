#include "cli.hpp"

#include "brokenstick/fractal.hpp"
#include "brokenstick/montecarlo.hpp"
#include "brokenstick/probability.hpp"
#include "brokenstick/render.hpp"
#include "brokenstick/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace brokenstick::cli {

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

// Flag values shared by the subcommands; each one binds the subset it uses.
struct Options {
    int level = 12;
    int depth = 12;
    std::string mode = "both";
    std::string policy = "default";
    std::string predicate = "triangle";
    std::string sampler = "physical";
    long long n = 1'000'000;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string format = "json";
    std::string out_path;
    bool show_residual = true;
    bool labels = false;
    int width = 512;
    int height = 512;
};

// Write to the path when given, else to the stream. Binary mode keeps the
// bytes identical on every platform.
bool emit(const std::string& text, const std::string& path, std::ostream& out,
          std::ostream& err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::vector<Mode> modes_of(const std::string& mode) {
    if (mode == "paper") {
        return {Mode::Paper};
    }
    if (mode == "measured") {
        return {Mode::Measured};
    }
    return {Mode::Paper, Mode::Measured};
}

// Reports for the requested modes, all backed by one audit at `depth`.
std::vector<ProbabilityReport> reports_for(const Options& opt) {
    const AuditReport a = audit(build(opt.depth, Policy::parse(opt.policy)));
    std::vector<ProbabilityReport> reports;
    for (Mode m : modes_of(opt.mode)) {
        reports.push_back(probability_report(m, opt.depth, &a));
    }
    return reports;
}

int run_build(const Options& opt, std::ostream& out, std::ostream& err) {
    const FractalApprox a = build(opt.level, Policy::parse(opt.policy));
    return emit(to_json(a), opt.out_path, out, err) ? 0 : kExitInternal;
}

int run_audit(const Options& opt, std::ostream& out, std::ostream& err) {
    const AuditReport r = audit(build(opt.level, Policy::parse(opt.policy)));
    const std::string text = opt.format == "csv" ? to_csv(r) : to_json(r);
    return emit(text, opt.out_path, out, err) ? 0 : kExitInternal;
}

int run_prob(const Options& opt, std::ostream& out, std::ostream& err) {
    const std::vector<ProbabilityReport> reports = reports_for(opt);
    std::string text;
    if (opt.format == "csv") {
        text = delta_table_csv(reports);
    } else {
        text = reports.size() == 1 ? to_json(reports.front()) : to_json(reports);
    }
    return emit(text, opt.out_path, out, err) ? 0 : kExitInternal;
}

int run_delta(const Options& opt, std::ostream& out, std::ostream& err) {
    return emit(delta_table_csv(reports_for(opt)), opt.out_path, out, err) ? 0 : kExitInternal;
}

int run_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
    const Predicate predicate = Predicate::parse(opt.predicate);
    FractalApprox approx;
    Sampler sampler = Sampler::physical();
    if (opt.sampler == "fractal") {
        approx = build(opt.level, Policy::parse(opt.policy));
        sampler = Sampler::fractal(approx);
    }
    EstimateOptions eopt;
    eopt.threads = opt.threads;
    const Estimate estimate = estimate_probability(sampler, predicate, opt.n, opt.seed, eopt);
    const EstimateRecord record = make_record(sampler, predicate, estimate);
    return emit(to_json(record), opt.out_path, out, err) ? 0 : kExitInternal;
}

int run_render(const Options& opt, std::ostream& out, std::ostream& err) {
    const FractalApprox a = build(opt.level, Policy::parse(opt.policy));
    RenderStyle style;
    style.width_px = opt.width;
    style.height_px = opt.height;
    style.show_residual = opt.show_residual;
    style.show_labels = opt.labels;
    return emit(render_svg(a, style), opt.out_path, out, err) ? 0 : kExitInternal;
}

void add_out_flag(CLI::App* sub, Options& opt) {
    sub->add_option("--out", opt.out_path, "Write the document to this file instead of stdout");
}

void add_level_flag(CLI::App* sub, Options& opt, int min_level) {
    sub->add_option("--level", opt.level, "Construction depth n")
        ->check(CLI::Range(min_level, kMaxLevel))
        ->capture_default_str();
}

void add_policy_flag(CLI::App* sub, Options& opt) {
    sub->add_option("--policy", opt.policy,
                    "Corner policy pattern, e.g. 'default', '3f', '1s2f'")
        ->capture_default_str();
}

void add_mode_flag(CLI::App* sub, Options& opt) {
    sub->add_option("--mode", opt.mode, "Closed forms to evaluate")
        ->check(CLI::IsMember({"paper", "measured", "both"}))
        ->capture_default_str();
}

void add_depth_flag(CLI::App* sub, Options& opt) {
    sub->add_option("--depth", opt.depth, "Number of delta-table rows")
        ->check(CLI::Range(1, kMaxLevel))
        ->capture_default_str();
}

void add_format_flag(CLI::App* sub, Options& opt) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact geometry and Monte Carlo toolkit for the broken-stick sample space"};
    app.name("brokenstick");
    app.require_subcommand(1);

    CLI::App* build_cmd = app.add_subcommand("build", "Construct the level-n approximation");
    add_level_flag(build_cmd, opt, 0);
    add_policy_flag(build_cmd, opt);
    add_out_flag(build_cmd, opt);

    CLI::App* audit_cmd = app.add_subcommand("audit", "Audit areas, ratios and conservation");
    add_level_flag(audit_cmd, opt, 1);
    add_policy_flag(audit_cmd, opt);
    add_format_flag(audit_cmd, opt);
    add_out_flag(audit_cmd, opt);

    CLI::App* prob_cmd = app.add_subcommand("prob", "Probability report with the delta table");
    add_mode_flag(prob_cmd, opt);
    add_depth_flag(prob_cmd, opt);
    add_policy_flag(prob_cmd, opt);
    add_format_flag(prob_cmd, opt);
    add_out_flag(prob_cmd, opt);

    CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of an event");
    sim_cmd->add_option("--sampler", opt.sampler, "Sampling process")
        ->check(CLI::IsMember({"physical", "fractal"}))
        ->capture_default_str();
    sim_cmd->add_option("--predicate", opt.predicate,
                        "Event: 'triangle', 'delta=<p/q>' or 'band=<p/q>,<p/q>'")
        ->capture_default_str();
    sim_cmd->add_option("--n", opt.n, "Sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sim_cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--threads", opt.threads, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_level_flag(sim_cmd, opt, 1);
    add_policy_flag(sim_cmd, opt);
    add_out_flag(sim_cmd, opt);

    CLI::App* delta_cmd = app.add_subcommand("delta", "Delta-table CSV");
    add_mode_flag(delta_cmd, opt);
    add_depth_flag(delta_cmd, opt);
    add_policy_flag(delta_cmd, opt);
    add_out_flag(delta_cmd, opt);

    CLI::App* render_cmd = app.add_subcommand("render", "SVG picture of the approximation");
    add_level_flag(render_cmd, opt, 0);
    add_policy_flag(render_cmd, opt);
    render_cmd->add_flag("--show-residual,!--no-show-residual", opt.show_residual,
                         "Fill the residual triangle (default on)");
    render_cmd->add_flag("--labels", opt.labels, "Label pieces and the residual");
    render_cmd->add_option("--width", opt.width, "Canvas width in px")->capture_default_str();
    render_cmd->add_option("--height", opt.height, "Canvas height in px")->capture_default_str();
    add_out_flag(render_cmd, opt);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (build_cmd->parsed()) {
            return run_build(opt, out, err);
        }
        if (audit_cmd->parsed()) {
            return run_audit(opt, out, err);
        }
        if (prob_cmd->parsed()) {
            return run_prob(opt, out, err);
        }
        if (sim_cmd->parsed()) {
            return run_simulate(opt, out, err);
        }
        if (delta_cmd->parsed()) {
            return run_delta(opt, out, err);
        }
        if (render_cmd->parsed()) {
            return run_render(opt, out, err);
        }
    } catch (const std::invalid_argument& e) {
        // Precondition broken by a flag value: an argument error.
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}

}  // namespace brokenstick::cli
