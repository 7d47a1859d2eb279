#include "qbip/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <string>

#include "qbip/bitplane.hpp"
#include "qbip/image_io.hpp"
#include "qbip/metrics.hpp"
#include "qbip/noise.hpp"
#include "qbip/pipeline.hpp"

namespace qbip::cli {

namespace fs = std::filesystem;

namespace {

/// Raised for argument problems found after parsing (exit code 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const CLI::Validator kOddWindow(
    [](std::string& s) -> std::string {
        int w = 0;
        try {
            w = std::stoi(s);
        } catch (...) {
            return "window must be an integer";
        }
        if (w < 3 || w % 2 == 0) return "window must be odd and >= 3, got " + s;
        return {};
    },
    "ODD>=3");

Channel parse_channel(const std::string& s) {
    if (s == "g") return Channel::Green;
    if (s == "b") return Channel::Blue;
    return Channel::Red;
}

const GrayImage& select_channel(const Image& img, Channel ch) {
    if (const auto* g = std::get_if<GrayImage>(&img)) return *g;
    return std::get<ColorImage>(img).channel(ch);
}

std::string image_ext(const Image& img) {
    return std::holds_alternative<GrayImage>(img) ? ".pgm" : ".ppm";
}

void check_distinct(const fs::path& in, const fs::path& out) {
    std::error_code ec;
    if (fs::exists(out, ec) && fs::equivalent(in, out, ec)) {
        throw UsageError("output path must differ from input path: " + out.string());
    }
}

struct NoiseArgs {
    std::string in, out;
    double density = 0.05;
    std::uint64_t seed = kDefaultSeed;
    bool couple = false;
    unsigned threads = 1;
};

struct SliceArgs {
    std::string in, outdir;
    std::string channel = "r";
    int bpp = kDefaultBpp;
};

struct ReassembleArgs {
    std::string indir, out;
    int bpp = kDefaultBpp;
};

struct DenoiseArgs {
    std::string in, out;
    std::string method = "qbmf";
    int window = 3;
    int passes = 1;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

struct CompareArgs {
    std::string original;
    double density = 0.05;
    int window = 3;
    int passes = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string out_prefix = "qbip_";
    std::string format = "table";
    std::string channel = "r";
    bool couple = false;
    unsigned threads = 1;
};

struct MetricsArgs {
    std::string a, b;
    std::string format = "csv";
};

struct DiffArgs {
    std::string a, b, out;
    std::string channel = "r";
};

int cmd_noise(const NoiseArgs& args, std::ostream& out) {
    const Image img = read_image(args.in);
    check_distinct(args.in, args.out);
    NoiseSpec spec{args.density, args.seed, args.couple};
    write_image(salt_pepper(img, spec, args.threads), args.out);
    out << "seed=" << args.seed << '\n';
    return kSuccess;
}

int cmd_slice(const SliceArgs& args, std::ostream& out) {
    const Image img = read_image(args.in);
    const BitplaneStack stack = slice(select_channel(img, parse_channel(args.channel)), args.bpp);
    fs::create_directories(args.outdir);
    for (int b = 0; b < stack.bpp(); ++b) {
        const fs::path path = fs::path(args.outdir) / ("plane" + std::to_string(b) + ".pgm");
        write_image(render_plane(stack.plane(b)), path);
    }
    out << "wrote " << stack.bpp() << " planes to " << args.outdir << '\n';
    return kSuccess;
}

int cmd_reassemble(const ReassembleArgs& args, std::ostream& out) {
    std::vector<Bitplane> planes;
    for (int b = 0; b < args.bpp; ++b) {
        const Image img = read_image(fs::path(args.indir) / ("plane" + std::to_string(b) + ".pgm"));
        const auto* gray = std::get_if<GrayImage>(&img);
        if (!gray) throw FormatError("plane renderings must be grayscale (P5)");
        planes.push_back(plane_from_rendering(*gray));
    }
    write_image(reassemble(BitplaneStack(std::move(planes))), args.out);
    out << "wrote " << args.out << '\n';
    return kSuccess;
}

int cmd_denoise(const DenoiseArgs& args, std::ostream& out) {
    const Image img = read_image(args.in);
    check_distinct(args.in, args.out);
    ExperimentConfig cfg;
    cfg.window = args.window;
    cfg.passes = args.passes;
    cfg.seed = args.seed;
    cfg.threads = args.threads;
    const Image result = args.method == "mean" ? classical_denoise(img, cfg) : quantum_boolean_denoise(img, cfg);
    write_image(result, args.out);
    out << "method=" << args.method << " window=" << args.window << " passes=" << args.passes
        << " seed=" << args.seed << '\n';
    return kSuccess;
}

int cmd_compare(const CompareArgs& args, std::ostream& out) {
    const Image original = read_image(args.original);
    ExperimentConfig cfg;
    cfg.window = args.window;
    cfg.passes = args.passes;
    cfg.seed = args.seed;
    cfg.noise = NoiseSpec{args.density, args.seed, args.couple};
    cfg.report_channel = parse_channel(args.channel);
    cfg.threads = args.threads;

    const ComparisonResult res = run_comparison(original, cfg);
    const std::string& p = args.out_prefix;
    if (const fs::path parent = fs::path(p + "x").parent_path(); !parent.empty()) fs::create_directories(parent);

    const std::string ext = image_ext(original);
    write_image(res.noisy, p + "noisy" + ext);
    write_image(res.classical, p + "classical" + ext);
    write_image(res.quantum_boolean, p + "quantum_boolean" + ext);
    write_image(res.classical_diff, p + "diff_classical.pgm");
    write_image(res.quantum_boolean_diff, p + "diff_quantum_boolean.pgm");
    write_image(render_plane(res.stages.noisy_msb), p + "msb_noisy.pgm");
    write_image(res.stages.machine_alpha, p + "alpha_noisy.pgm");
    write_image(res.stages.machine_alpha_denoised, p + "alpha_denoised.pgm");
    write_image(render_plane(res.stages.denoised_msb), p + "msb_denoised.pgm");

    const std::string csv = comparison_csv(res.classical_report, res.quantum_boolean_report);
    const std::string table = comparison_table(res.classical_report, res.quantum_boolean_report);
    write_text_file(p + "metrics.csv", csv);
    write_text_file(p + "metrics.txt", table);
    write_text_file(p + "metrics_noisy.csv", report_csv(res.noisy_baseline, "noisy"));
    write_text_file(p + "provenance.txt", provenance(cfg));

    out << (args.format == "csv" ? csv : table);
    return kSuccess;
}

int cmd_metrics(const MetricsArgs& args, std::ostream& out) {
    const Image a = read_image(args.a);
    const Image b = read_image(args.b);
    const MetricsReport r = compute_report(a, b);
    out << (args.format == "csv" ? report_csv(r) : report_table(r));
    return kSuccess;
}

int cmd_diffmap(const DiffArgs& args, std::ostream& out) {
    const Image a = read_image(args.a);
    const Image b = read_image(args.b);
    if (a.index() != b.index()) throw ShapeError("cannot diff a grayscale image against a color image");
    const Channel ch = parse_channel(args.channel);
    write_image(diff_map(select_channel(a, ch), select_channel(b, ch)), args.out);
    out << "wrote " << args.out << '\n';
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum-Boolean image denoising toolkit", "qbip"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    const auto channels = CLI::IsMember({"r", "g", "b"});
    const auto formats = CLI::IsMember({"csv", "table"});

    NoiseArgs noise;
    auto* noise_cmd = app.add_subcommand("noise", "Add seeded salt-and-pepper noise");
    noise_cmd->add_option("input", noise.in, "Input P5/P6 image")->required();
    noise_cmd->add_option("output", noise.out, "Output image")->required();
    noise_cmd->add_option("--density", noise.density, "Noise density in [0, 1]")->check(CLI::Range(0.0, 1.0));
    noise_cmd->add_option("--seed", noise.seed, "Random seed");
    noise_cmd->add_flag("--couple-channels", noise.couple, "Corrupt all channels of a pixel together");
    noise_cmd->add_option("--threads", noise.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    SliceArgs sl;
    auto* slice_cmd = app.add_subcommand("slice", "Write the bitplanes of one channel as P5 renderings");
    slice_cmd->add_option("input", sl.in, "Input P5/P6 image")->required();
    slice_cmd->add_option("outdir", sl.outdir, "Directory for plane0.pgm .. planeN.pgm")->required();
    slice_cmd->add_option("--channel", sl.channel, "Channel of a color input")->check(channels);
    slice_cmd->add_option("--bpp", sl.bpp, "Bit depth")->check(CLI::Range(1, 8));

    ReassembleArgs ra;
    auto* reassemble_cmd = app.add_subcommand("reassemble", "Rebuild a channel from plane renderings");
    reassemble_cmd->add_option("indir", ra.indir, "Directory holding plane0.pgm .. planeN.pgm")->required();
    reassemble_cmd->add_option("output", ra.out, "Output P5 image")->required();
    reassemble_cmd->add_option("--bpp", ra.bpp, "Bit depth")->check(CLI::Range(1, 8));

    DenoiseArgs dn;
    auto* denoise_cmd = app.add_subcommand("denoise", "Denoise with the mean filter or the quantum-Boolean filter");
    denoise_cmd->add_option("input", dn.in, "Input P5/P6 image")->required();
    denoise_cmd->add_option("output", dn.out, "Output image")->required();
    denoise_cmd->add_option("--method", dn.method, "mean or qbmf")->check(CLI::IsMember({"mean", "qbmf"}));
    denoise_cmd->add_option("--window", dn.window, "Odd kernel side")->check(kOddWindow);
    denoise_cmd->add_option("--passes", dn.passes, "Filter passes")->check(CLI::PositiveNumber);
    denoise_cmd->add_option("--seed", dn.seed, "Measurement seed");
    denoise_cmd->add_option("--threads", dn.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    CompareArgs cmp;
    auto* compare_cmd = app.add_subcommand("compare", "Run the classical vs quantum-Boolean experiment");
    compare_cmd->add_option("original", cmp.original, "Noiseless P5/P6 image")->required();
    compare_cmd->add_option("--density", cmp.density, "Noise density in [0, 1]")->check(CLI::Range(0.0, 1.0));
    compare_cmd->add_option("--window", cmp.window, "Odd kernel side")->check(kOddWindow);
    compare_cmd->add_option("--passes", cmp.passes, "Filter passes")->check(CLI::PositiveNumber);
    compare_cmd->add_option("--seed", cmp.seed, "Noise and measurement seed");
    compare_cmd->add_option("--out-prefix", cmp.out_prefix, "Prefix for every written file");
    compare_cmd->add_option("--format", cmp.format, "stdout format")->check(formats);
    compare_cmd->add_option("--channel", cmp.channel, "Channel for diff maps and stage dumps")->check(channels);
    compare_cmd->add_flag("--couple-channels", cmp.couple, "Corrupt all channels of a pixel together");
    compare_cmd->add_option("--threads", cmp.threads, "Worker threads")->check(CLI::Range(1u, 256u));

    MetricsArgs mt;
    auto* metrics_cmd = app.add_subcommand("metrics", "MAE, MSE and PSNR of the second image against the first");
    metrics_cmd->add_option("reference", mt.a, "Reference image")->required();
    metrics_cmd->add_option("candidate", mt.b, "Candidate image")->required();
    metrics_cmd->add_option("--format", mt.format, "csv or table")->check(formats);

    DiffArgs df;
    auto* diff_cmd = app.add_subcommand("diffmap", "Per-pixel absolute error map of one channel");
    diff_cmd->add_option("reference", df.a, "Reference image")->required();
    diff_cmd->add_option("candidate", df.b, "Candidate image")->required();
    diff_cmd->add_option("output", df.out, "Output P5 map")->required();
    diff_cmd->add_option("--channel", df.channel, "Channel of color inputs")->check(channels);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*noise_cmd) return cmd_noise(noise, out);
        if (*slice_cmd) return cmd_slice(sl, out);
        if (*reassemble_cmd) return cmd_reassemble(ra, out);
        if (*denoise_cmd) return cmd_denoise(dn, out);
        if (*compare_cmd) return cmd_compare(cmp, out);
        if (*metrics_cmd) return cmd_metrics(mt, out);
        if (*diff_cmd) return cmd_diffmap(df, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
    return kUsageError;
}

}  // namespace qbip::cli
