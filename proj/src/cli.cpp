#include "kli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "kli/analysis.hpp"
#include "kli/errors.hpp"
#include "kli/flow.hpp"
#include "kli/io.hpp"
#include "kli/slerp.hpp"

namespace kli::cli {

namespace {

namespace fs = std::filesystem;

class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error(what) {}
};

struct Options {
    std::string p;
    std::string r;
    std::string pairs;
    double epsilon = KliConfig::kDefaultEpsilon;
    double delta = KliConfig::kDefaultDelta;
    double step = KliConfig::kDefaultStep;
    double t_max = KliConfig::kDefaultTMax;
    bool shortest = false;
    int samples = 101;
    bool hopf = false;
    std::string frames;
    std::string format = "csv";
    std::string out;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, /*force_flush=*/true);
    auto log = std::make_shared<spdlog::logger>("interp", std::move(sink));
    log->set_pattern("interp: %l: %v");
    log->set_level(spdlog::level::info);
    if (const char* env = std::getenv("INTERP_LOG")) {
        const std::string level = env;
        if (level == "debug") {
            log->set_level(spdlog::level::debug);
        } else if (level == "quiet") {
            log->set_level(spdlog::level::err);
        } else if (level != "info" && !level.empty()) {
            log->warn("unknown INTERP_LOG value '{}', using info", level);
        }
    }
    return log;
}

std::vector<io::QuaternionPair> resolve_pairs(const Options& opt) {
    const bool inline_given = !opt.p.empty() || !opt.r.empty();
    if (inline_given && !opt.pairs.empty()) {
        throw InputError("give either --p/--r or --pairs, not both");
    }
    if (!opt.pairs.empty()) {
        return io::read_pairs(fs::path(opt.pairs));
    }
    if (opt.p.empty() || opt.r.empty()) {
        throw InputError("both --p and --r are required (or --pairs <file>)");
    }
    auto parse = [](const std::string& flag, const std::string& text) {
        try {
            return UnitQuaternion::from(io::parse_quaternion(text));
        } catch (const InputError& e) {
            throw InputError(flag + ": " + e.what());
        }
    };
    return {{parse("--p", opt.p), parse("--r", opt.r)}};
}

// output_path("dir/curve.csv", "_3") -> "dir/curve_3.csv"
fs::path output_path(const std::string& out, const std::string& suffix) {
    const fs::path base(out);
    return base.parent_path() / (base.stem().string() + suffix + base.extension().string());
}

void write_to(const std::optional<fs::path>& path, std::ostream& fallback,
              const std::function<void(std::ostream&)>& writer) {
    if (!path) {
        writer(fallback);
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw IoFailure("cannot open " + path->string() + " for writing");
    writer(file);
    if (!file.flush()) throw IoFailure("failed writing " + path->string());
}

void write_curve(std::ostream& os, const InterpolationCurve& curve, const Options& opt,
                 const std::optional<KliConfig>& cfg, std::string_view method) {
    if (opt.format == "json") {
        io::write_curve_json(os, curve, opt.hopf, cfg, method);
    } else {
        io::write_curve_csv(os, curve, opt.hopf);
    }
}

enum class Mode { kKli, kSlerp, kCompare };

int execute(Mode mode, const Options& opt, std::ostream& out, spdlog::logger& log) {
    const auto pairs = resolve_pairs(opt);
    const bool batch = !opt.pairs.empty();
    if (batch && opt.out.empty() && mode != Mode::kCompare) {
        throw InputError("--pairs needs --out to name the per-pair output files");
    }
    if (!opt.frames.empty() && opt.out.empty()) {
        throw InputError("--frames needs --out; frames are written next to the curve");
    }
    const std::vector<double> frame_times = opt.frames.empty() ? std::vector<double>{}
                                                               : io::parse_real_list(opt.frames);

    std::optional<KliConfig> cfg;
    if (mode != Mode::kSlerp) {
        cfg.emplace(opt.epsilon, opt.delta, opt.step, opt.t_max, opt.shortest);
        log.debug("config: epsilon={} delta={} step={} t_max={} shortest={}", cfg->epsilon(), cfg->delta(),
                  cfg->step_h(), cfg->t_max(), cfg->shortest_path());
    }
    log.debug("{} pair(s) to process", pairs.size());

    std::vector<PathComparison> comparisons;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [p, r] = pairs[i];
        const std::string tag = batch ? "_" + std::to_string(i) : "";
        std::optional<fs::path> path;
        if (!opt.out.empty()) path = output_path(opt.out, tag);

        try {
            switch (mode) {
                case Mode::kKli: {
                    const auto curve = kli_interpolate(p, r, *cfg);
                    log.info("pair {}: converged at T = {} after {} samples", i, io::format_real(curve.converged_time),
                             curve.samples.size());
                    write_to(path, out, [&](std::ostream& os) { write_curve(os, curve, opt, cfg, "kli"); });
                    if (!frame_times.empty()) {
                        const auto corners = unit_cube_corners();
                        const auto frames = generate_frames(p, r, frame_times, corners, *cfg);
                        write_to(output_path(opt.out, tag + "_frames"), out, [&](std::ostream& os) {
                            if (opt.format == "json") {
                                io::write_frames_json(os, frames);
                            } else {
                                io::write_frames_csv(os, frames);
                            }
                        });
                    }
                    break;
                }
                case Mode::kSlerp: {
                    const auto curve = slerp_sample(p, r, opt.samples, opt.shortest);
                    log.info("pair {}: {} slerp samples", i, curve.samples.size());
                    write_to(path, out, [&](std::ostream& os) { write_curve(os, curve, opt, std::nullopt, "slerp"); });
                    break;
                }
                case Mode::kCompare: {
                    const auto curve = kli_interpolate(p, r, *cfg);
                    comparisons.push_back(path_deviation(curve, p, curve.target));
                    log.info("pair {}: max deviation {} rad", i, io::format_real(comparisons.back().max_deviation));
                    break;
                }
            }
        } catch (const Error& e) {
            if (!batch) throw;
            // Re-raise with the pair index, keeping the error family.
            const std::string msg = "pair " + std::to_string(i) + ": " + e.what();
            if (dynamic_cast<const FlowError*>(&e)) throw FlowError(msg);
            if (dynamic_cast<const InputError*>(&e)) throw InputError(msg);
            throw IoFailure(msg);
        }
    }

    if (mode == Mode::kCompare && !comparisons.empty()) {
        std::optional<fs::path> path;
        if (!opt.out.empty()) path = fs::path(opt.out);
        write_to(path, out, [&](std::ostream& os) { io::write_comparison_json(os, comparisons); });
    }
    return kOk;
}

void add_common(CLI::App& sub, Options& opt) {
    sub.add_option("--p", opt.p, "start rotation as w,x,y,z");
    sub.add_option("--r", opt.r, "target rotation as w,x,y,z");
    sub.add_option("--pairs", opt.pairs, "CSV file of pw,px,py,pz,rw,rx,ry,rz lines");
    sub.add_flag("--shortest", opt.shortest, "negate r when p.r < 0");
    sub.add_option("--out", opt.out, "output file (stdout when omitted); batch runs add _<index>");
}

void add_kli_config(CLI::App& sub, Options& opt) {
    sub.add_option("--epsilon", opt.epsilon, "stopping tolerance on |r - q(T)|")->capture_default_str();
    sub.add_option("--delta", opt.delta, "horizon increment between stopping checks")->capture_default_str();
    sub.add_option("--step", opt.step, "RK4 step; must divide delta")->capture_default_str();
    sub.add_option("--t-max", opt.t_max, "give up once the horizon passes this time")->capture_default_str();
}

void add_output(CLI::App& sub, Options& opt) {
    sub.add_flag("--hopf", opt.hopf, "append Hopf projection columns hx,hy,hz");
    sub.add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto log = make_logger(err);

    Options opt;
    CLI::App app{"Rotation interpolation between unit quaternions (w,x,y,z order)", "interp"};
    app.require_subcommand(1);

    auto* kli = app.add_subcommand("kli", "integrate the Kuramoto-Lohe flow from p to r");
    add_common(*kli, opt);
    add_kli_config(*kli, opt);
    add_output(*kli, opt);
    kli->add_option("--frames", opt.frames, "times t1,t2,... at which to pose a unit cube");

    auto* slerp = app.add_subcommand("slerp", "sample spherical linear interpolation from p to r");
    add_common(*slerp, opt);
    add_output(*slerp, opt);
    slerp->add_option("--samples", opt.samples, "number of uniformly spaced samples (>= 2)")
        ->capture_default_str();

    auto* compare = app.add_subcommand("compare", "report how far the KLI path strays from the SLERP arc");
    add_common(*compare, opt);
    add_kli_config(*compare, opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        log->error("{}", e.what());
        return kInvalidInput;
    }

    const Mode mode = kli->parsed() ? Mode::kKli : slerp->parsed() ? Mode::kSlerp : Mode::kCompare;
    try {
        return execute(mode, opt, out, *log);
    } catch (const FlowError& e) {
        log->error("{}", e.what());
        return kFlowFailure;
    } catch (const InputError& e) {
        log->error("{}", e.what());
        return kInvalidInput;
    } catch (const std::exception& e) {
        log->error("{}", e.what());
        return kIoFailure;
    }
}

}  // namespace kli::cli
