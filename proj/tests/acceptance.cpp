// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbip/bitplane.hpp"
#include "qbip/filters.hpp"
#include "qbip/image_io.hpp"
#include "qbip/metrics.hpp"
#include "qbip/noise.hpp"
#include "qbip/pipeline.hpp"
#include "qbip/qsim.hpp"
#include "test_support.hpp"

namespace {

using namespace qbip;
using Clock = std::chrono::steady_clock;

int g_failures = 0;

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

void criterion(const std::string& name, double budget_seconds, const std::function<std::string()>& body) {
    const auto start = Clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (ok && budget_seconds > 0 && elapsed >= budget_seconds) {
        ok = false;
        detail += " (runtime " + std::to_string(elapsed) + " s exceeds " + std::to_string(budget_seconds) + " s)";
    }
    if (!ok) ++g_failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed << std::setprecision(3) << elapsed
              << " s)" << (detail.empty() ? "" : ": " + detail) << std::endl;
}

std::vector<Bitplane> plane_corpus(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(7, 64);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    std::vector<Bitplane> planes;
    for (std::size_t i = 0; i < count; ++i) planes.push_back(testing::random_plane(rng, dim(rng), dim(rng), density(rng)));
    return planes;
}

}  // namespace

int main() {
    const std::vector<Bitplane> corpus = plane_corpus(200, 0xAC2);

    criterion("AC1 bitplane round-trip exactness", 5.0, [] {
        std::mt19937_64 rng(0xAC1);
        std::uniform_int_distribution<std::size_t> dim(1, 128);
        for (int i = 0; i < 100; ++i) {
            const GrayImage g = testing::random_gray(rng, dim(rng), dim(rng));
            require(reassemble(slice(g, 8)) == g, "reassemble(slice(x)) != x on image " + std::to_string(i));
        }
        for (unsigned p = 0; p < 256; ++p) require(bits_to_pixel(pixel_to_bits(p, 8)) == p, "value " + std::to_string(p));
        return std::string("100 images, 256 values");
    });

    criterion("AC2 qbmf equals brute-force majority oracle", 10.0, [&] {
        require(KernelSpec(3).threshold() == 5, "h != 5 for w = 3");
        for (int w : {3, 5, 7}) {
            const KernelSpec k(w);
            for (const auto& p : corpus) require(qbmf(p, k) == majority_oracle(p, k), "mismatch at w=" + std::to_string(w));
        }
        return std::string("200 planes x w in {3,5,7}");
    });

    criterion("AC3 self-duality invert.qbmf == qbmf.invert", 10.0, [&] {
        for (int w : {3, 5, 7}) {
            const KernelSpec k(w);
            for (const auto& p : corpus) require(invert_plane(qbmf(p, k)) == qbmf(invert_plane(p), k), "w=" + std::to_string(w));
        }
        return std::string("200 planes x w in {3,5,7}");
    });

    criterion("AC4 commuting square q2c.qbmf_quantum.c2q == qbmf", 0.0, [&] {
        const KernelSpec k(3);
        for (std::size_t i = 0; i < 50; ++i) {
            const Bitplane& p = corpus[i];
            require(q2c_plane(qbmf_quantum(c2q_plane(p), k), i) == qbmf(p, k), "plane " + std::to_string(i));
        }
        return std::string("50 planes");
    });

    criterion("AC5 CBS measurement invariance", 0.0, [] {
        const auto z = MeasurementOperatorSet::z_basis();
        RandomStream rng(0xAC5);
        for (int bit : {0, 1}) {
            const QubitState q = c2q(bit);
            const auto p = outcome_probabilities(q, z);
            require(std::abs(p[static_cast<std::size_t>(bit)].probability - 1.0) <= 1e-12, "p(own outcome) != 1");
            require(std::abs(p[static_cast<std::size_t>(1 - bit)].probability) <= 1e-12, "p(other outcome) != 0");
            for (int i = 0; i < 1000; ++i) {
                const auto r = measure(q, z, rng);
                require(r.outcome == bit, "outcome flipped");
                require(equal_up_to_global_phase(r.post_state, q), "post-state changed");
            }
        }
        return std::string("|0> and |1> fixed under Z measurement");
    });

    criterion("AC6 measurement statistics", 0.0, [] {
        const auto z = MeasurementOperatorSet::z_basis();
        std::mt19937_64 gen(0xAC6);
        constexpr int n = 100000;
        double worst_z = 0.0;
        for (int s = 0; s < 20; ++s) {
            const QubitState q = testing::random_state(gen);
            const auto p = outcome_probabilities(q, z);
            require(std::abs(p[0].probability + p[1].probability - 1.0) <= 1e-12, "probabilities do not sum to 1");
            RandomStream rng = RandomStream::derive(0xAC6, {static_cast<std::uint64_t>(s)});
            int ones = 0;
            for (int i = 0; i < n; ++i) {
                const auto r = measure(q, z, rng);
                require(std::abs(r.post_state.norm_squared() - 1.0) <= 1e-12, "post-state not normalized");
                ones += r.outcome;
            }
            const double expected = std::norm(q.beta());
            const double sigma = std::sqrt(expected * (1 - expected) / n);
            const double dev = std::abs(static_cast<double>(ones) / n - expected);
            require(dev <= 3 * sigma, "state " + std::to_string(s) + " frequency outside 3 sigma");
            if (sigma > 0) worst_z = std::max(worst_z, dev / sigma);
        }
        std::ostringstream msg;
        msg << "20 states x 1e5 samples, worst deviation " << std::setprecision(3) << worst_z << " sigma";
        return msg.str();
    });

    criterion("AC7 metric fixtures", 0.0, [] {
        const GrayImage a = testing::gray_from({{0, 255}, {128, 64}});
        const GrayImage b = testing::gray_from({{1, 255}, {128, 64}});
        const MetricsReport r = compute_report(a, b);
        require(std::abs(r.mae - 0.25) <= 1e-9, "MAE");
        require(std::abs(r.mse - 0.25) <= 1e-9, "MSE");
        require(std::abs(r.psnr - 10 * std::log10(255.0 * 255.0 / 0.25)) <= 1e-9, "PSNR");
        const MetricsReport same = compute_report(a, a);
        require(same.mae == 0 && same.mse == 0 && std::isinf(same.psnr) && same.psnr > 0, "identical images");
        return std::string("PSNR ") + format_full(r.psnr);
    });

    criterion("AC8 salt-and-pepper statistics and determinism", 0.0, [] {
        const ColorImage img(256, 256, 128);  // 196608 samples, none at 0 or 255
        const NoiseSpec spec{0.05, 0xAC8};
        const ColorImage noisy = salt_pepper(img, spec, 1);
        std::size_t corrupted = 0, n = 0;
        for (std::size_t ch = 0; ch < 3; ++ch) {
            for (auto v : noisy.channel(ch).data()) {
                ++n;
                if (v != 128) {
                    require(v == 0 || v == 255, "corrupted value not 0/255");
                    ++corrupted;
                }
            }
        }
        const double sigma = std::sqrt(n * 0.05 * 0.95);
        require(std::abs(static_cast<double>(corrupted) - 0.05 * n) <= 3 * sigma, "count outside 3 sigma");
        const std::string bytes = encode_netpbm(noisy);
        require(encode_netpbm(salt_pepper(img, spec, 1)) == bytes, "second run differs");
        require(encode_netpbm(salt_pepper(img, spec, 4)) == bytes, "4-thread run differs");
        return std::to_string(corrupted) + " of " + std::to_string(n) + " samples corrupted";
    });

    criterion("AC9 quantum-Boolean denoise only changes bit 7", 0.0, [] {
        std::mt19937_64 rng(0xAC9);
        std::uniform_int_distribution<std::size_t> dim(3, 64);
        for (int i = 0; i < 20; ++i) {
            const ColorImage img = testing::random_color(rng, dim(rng), dim(rng));
            const ColorImage out = quantum_boolean_denoise(img, ExperimentConfig{});
            for (std::size_t ch = 0; ch < 3; ++ch) {
                for (std::size_t j = 0; j < img.channel(ch).size(); ++j) {
                    const int d = int{out.channel(ch).data()[j]} - int{img.channel(ch).data()[j]};
                    require(d % 128 == 0, "non-MSB change in image " + std::to_string(i));
                }
            }
        }
        return std::string("20 images");
    });

    criterion("AC10 end-to-end improvement on 512x512 test image", 30.0, [] {
        const Image original = read_image(QBIP_TEST_IMAGE);
        const auto* rgb = std::get_if<ColorImage>(&original);
        require(rgb && rgb->rows() == 512 && rgb->cols() == 512, "test image must be 512x512 color");

        ExperimentConfig cfg;
        cfg.window = 3;
        cfg.noise = NoiseSpec{0.05, kDefaultSeed};
        cfg.seed = kDefaultSeed;
        const ComparisonResult res = run_comparison(original, cfg);

        const double gain = res.quantum_boolean_report.psnr - res.noisy_baseline.psnr;
        require(gain > 3.0, "PSNR gain " + std::to_string(gain) + " dB <= 3 dB");

        const std::string csv = comparison_csv(res.classical_report, res.quantum_boolean_report);
        std::istringstream lines(csv);
        std::string line;
        std::vector<std::string> rows;
        while (std::getline(lines, line)) rows.push_back(line);
        require(rows.size() == 4 && rows[0] == "metric,classical,quantum_boolean", "CSV header");
        const char* names[] = {"MAE,", "MSE,", "PSNR,"};
        for (int i = 0; i < 3; ++i) {
            const std::string& row = rows[static_cast<std::size_t>(i + 1)];
            require(row.rfind(names[i], 0) == 0, "CSV row order");
            require(std::count(row.begin(), row.end(), ',') == 2, "CSV column count");
        }

        std::ostringstream msg;
        msg << std::setprecision(4) << std::fixed << "PSNR noisy " << res.noisy_baseline.psnr << " dB, classical "
            << res.classical_report.psnr << " dB, quantum-Boolean " << res.quantum_boolean_report.psnr << " dB (+"
            << gain << " dB)";
        std::cout << comparison_table(res.classical_report, res.quantum_boolean_report);
        return msg.str();
    });

    criterion("AC11 completeness relation", 0.0, [] {
        const auto z = MeasurementOperatorSet::z_basis();
        const auto full = check_completeness(z);
        require(full.complete && full.max_deviation == 0.0, "Z basis must be complete with zero deviation");
        for (std::size_t drop = 0; drop < 2; ++drop) {
            auto partial = z;
            partial.operators.erase(partial.operators.begin() + static_cast<long>(drop));
            require(!check_completeness(partial).complete, "set missing operator passed");
        }
        return std::string("deviation 0; each single-operator set rejected");
    });

    std::cout << (g_failures == 0 ? "ALL ACCEPTANCE CRITERIA PASSED" : std::to_string(g_failures) + " CRITERIA FAILED")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
