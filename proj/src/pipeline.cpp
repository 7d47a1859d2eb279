#include "qbip/pipeline.hpp"

#include <array>
#include <sstream>
#include <thread>
#include <vector>

#include "qbip/qsim.hpp"
#include "qbip/random.hpp"

namespace qbip {

void ExperimentConfig::validate() const {
    KernelSpec{window};
    if (passes < 1) throw DomainError("passes must be >= 1, got " + std::to_string(passes));
    if (bpp < 1 || bpp > 8) throw DomainError("bpp must lie in [1, 8], got " + std::to_string(bpp));
    if (debug_plane && (*debug_plane < 0 || *debug_plane >= bpp)) {
        throw DomainError("debug plane index out of range");
    }
    if (!(noise.density >= 0.0 && noise.density <= 1.0)) {
        throw DomainError("noise density must lie in [0, 1]");
    }
}

namespace {

template <typename Fn>
ColorImage per_channel(const ColorImage& img, unsigned threads, Fn&& fn) {
    std::array<std::optional<GrayImage>, 3> out;
    if (threads > 1) {
        std::vector<std::jthread> pool;
        for (std::size_t ch = 0; ch < 3; ++ch) {
            pool.emplace_back([&, ch] { out[ch] = fn(img.channel(ch), ch); });
        }
    } else {
        for (std::size_t ch = 0; ch < 3; ++ch) out[ch] = fn(img.channel(ch), ch);
    }
    return ColorImage(std::move(*out[0]), std::move(*out[1]), std::move(*out[2]));
}

std::uint64_t measurement_seed(std::uint64_t seed, std::size_t channel, int pass) {
    return RandomStream::derive(seed, {0x5132u, channel, static_cast<std::uint64_t>(pass)})();
}

}  // namespace

GrayImage classical_denoise(const GrayImage& ch, const ExperimentConfig& cfg) {
    cfg.validate();
    const KernelSpec k(cfg.window);
    GrayImage out = mean_filter(ch, k);
    for (int i = 1; i < cfg.passes; ++i) out = mean_filter(out, k);
    return out;
}

ColorImage classical_denoise(const ColorImage& img, const ExperimentConfig& cfg) {
    cfg.validate();
    return per_channel(img, cfg.threads, [&](const GrayImage& ch, std::size_t) { return classical_denoise(ch, cfg); });
}

Image classical_denoise(const Image& img, const ExperimentConfig& cfg) {
    return std::visit([&](const auto& x) -> Image { return classical_denoise(x, cfg); }, img);
}

GrayImage quantum_boolean_denoise(const GrayImage& ch, const ExperimentConfig& cfg, std::size_t channel_index,
                                  QuantumStages* stages) {
    cfg.validate();
    const KernelSpec k(cfg.window);
    const BitplaneStack stack = slice(ch, cfg.bpp);
    const int routed = cfg.debug_plane.value_or(cfg.bpp - 1);
    const Bitplane& msb = stack.plane(routed);

    const QuantumPlane machine = c2q_plane(msb);
    QuantumPlane filtered = qbmf_quantum(machine, k);
    for (int pass = 1; pass < cfg.passes; ++pass) filtered = qbmf_quantum(filtered, k);
    Bitplane denoised = q2c_plane(filtered, measurement_seed(cfg.seed, channel_index, cfg.passes), cfg.strict_cbs);

    if (stages) {
        stages->noisy_msb = msb;
        stages->machine_alpha = render_alpha(machine);
        stages->machine_alpha_denoised = render_alpha(filtered);
        stages->denoised_msb = denoised;
    }
    return reassemble(replace_plane(stack, routed, std::move(denoised)));
}

ColorImage quantum_boolean_denoise(const ColorImage& img, const ExperimentConfig& cfg) {
    cfg.validate();
    return per_channel(img, cfg.threads, [&](const GrayImage& ch, std::size_t index) {
        return quantum_boolean_denoise(ch, cfg, index);
    });
}

Image quantum_boolean_denoise(const Image& img, const ExperimentConfig& cfg) {
    return std::visit([&](const auto& x) -> Image { return quantum_boolean_denoise(x, cfg); }, img);
}

namespace {

const GrayImage& pick_channel(const Image& img, Channel ch) {
    if (const auto* g = std::get_if<GrayImage>(&img)) return *g;
    return std::get<ColorImage>(img).channel(ch);
}

}  // namespace

ComparisonResult run_comparison(const Image& original, const ExperimentConfig& cfg) {
    cfg.validate();
    Image noisy = salt_pepper(original, cfg.noise, cfg.threads);
    Image classical = classical_denoise(noisy, cfg);
    Image quantum = quantum_boolean_denoise(noisy, cfg);

    // Stage dumps for the report channel; recomputed so the per-image path stays stage-free.
    const std::size_t report_index = std::holds_alternative<GrayImage>(original)
                                         ? 0
                                         : static_cast<std::size_t>(cfg.report_channel);
    const GrayImage& noisy_channel = pick_channel(noisy, cfg.report_channel);
    const std::size_t rows = noisy_channel.rows(), cols = noisy_channel.cols();
    QuantumStages stages{Bitplane(rows, cols), GrayImage(rows, cols), GrayImage(rows, cols), Bitplane(rows, cols)};
    quantum_boolean_denoise(noisy_channel, cfg, report_index, &stages);

    const GrayImage& ref = pick_channel(original, cfg.report_channel);
    GrayImage classical_diff = diff_map(ref, pick_channel(classical, cfg.report_channel));
    GrayImage quantum_diff = diff_map(ref, pick_channel(quantum, cfg.report_channel));

    const int bits = 8;
    MetricsReport noisy_report = compute_report(original, noisy, bits);
    MetricsReport classical_report = compute_report(original, classical, bits);
    MetricsReport quantum_report = compute_report(original, quantum, bits);

    return ComparisonResult{cfg,
                            std::move(noisy),
                            std::move(classical),
                            std::move(quantum),
                            noisy_report,
                            classical_report,
                            quantum_report,
                            std::move(classical_diff),
                            std::move(quantum_diff),
                            std::move(stages)};
}

std::string provenance(const ExperimentConfig& cfg) {
    static constexpr const char* kChannelNames[] = {"red", "green", "blue"};
    std::ostringstream out;
    out << "tool=qbip\n";
    out << "version=" << kToolVersion << '\n';
    out << "seed=" << cfg.seed << '\n';
    out << "noise_seed=" << cfg.noise.seed << '\n';
    out << "density=" << format_full(cfg.noise.density) << '\n';
    out << "couple_channels=" << (cfg.noise.couple_channels ? "true" : "false") << '\n';
    out << "window=" << cfg.window << '\n';
    out << "passes=" << cfg.passes << '\n';
    out << "bpp=" << cfg.bpp << '\n';
    out << "strict_cbs=" << (cfg.strict_cbs ? "true" : "false") << '\n';
    out << "report_channel=" << kChannelNames[static_cast<int>(cfg.report_channel)] << '\n';
    out << "routed_plane=" << cfg.debug_plane.value_or(cfg.bpp - 1) << '\n';
    return out.str();
}

}  // namespace qbip
