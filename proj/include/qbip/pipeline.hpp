#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qbip/bitplane.hpp"
#include "qbip/filters.hpp"
#include "qbip/image_io.hpp"
#include "qbip/metrics.hpp"
#include "qbip/noise.hpp"

namespace qbip {

inline constexpr const char* kToolVersion = "1.0.0";

struct ExperimentConfig {
    int window = 3;
    int passes = 1;
    NoiseSpec noise{};
    int bpp = kDefaultBpp;
    bool strict_cbs = true;
    /// Seeds the measurement sub-streams of the quantum-to-classical interface.
    std::uint64_t seed = kDefaultSeed;
    /// Channel used for diff maps and stage dumps.
    Channel report_channel = Channel::Red;
    unsigned threads = 1;
    /// Debug only: route this plane through the quantum stages instead of the MSB.
    std::optional<int> debug_plane;

    /// Throws DomainError for an even/small window, passes < 1, or bad bpp.
    void validate() const;
};

/// Intermediate bitplanes of the quantum-Boolean flow for one channel.
struct QuantumStages {
    Bitplane noisy_msb;
    /// |alpha| of each in-machine state before filtering, 0..255.
    GrayImage machine_alpha;
    /// |alpha| after filtering, still inside the machine.
    GrayImage machine_alpha_denoised;
    Bitplane denoised_msb;
};

GrayImage classical_denoise(const GrayImage& ch, const ExperimentConfig& cfg);
ColorImage classical_denoise(const ColorImage& img, const ExperimentConfig& cfg);
Image classical_denoise(const Image& img, const ExperimentConfig& cfg);

/// slice -> MSB -> c2q -> quantum filter (x passes) -> q2c -> replace MSB -> reassemble.
/// `channel_index` keys the measurement sub-streams; `stages` receives intermediates.
GrayImage quantum_boolean_denoise(const GrayImage& ch, const ExperimentConfig& cfg, std::size_t channel_index = 0,
                                  QuantumStages* stages = nullptr);
ColorImage quantum_boolean_denoise(const ColorImage& img, const ExperimentConfig& cfg);
Image quantum_boolean_denoise(const Image& img, const ExperimentConfig& cfg);

struct ComparisonResult {
    ExperimentConfig config;
    Image noisy;
    Image classical;
    Image quantum_boolean;
    MetricsReport noisy_baseline;
    MetricsReport classical_report;
    MetricsReport quantum_boolean_report;
    /// |original - denoised| for `config.report_channel`.
    GrayImage classical_diff;
    GrayImage quantum_boolean_diff;
    QuantumStages stages;
};

/// Corrupts `original`, denoises both ways, and scores everything against `original`.
ComparisonResult run_comparison(const Image& original, const ExperimentConfig& cfg);

/// key=value provenance listing of a configuration.
std::string provenance(const ExperimentConfig& cfg);

}  // namespace qbip
