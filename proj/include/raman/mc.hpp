#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "raman/photon_table.hpp"

namespace raman {

/// Finalizer of the splitmix64 generator: a bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t z);

/// splitmix64 stream: state advances by the golden-ratio increment and each
/// output is mix64 of the new state. Small, fast, and trivially splittable,
/// which the chunked sampling below relies on.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) from the top 53 bits of next().
    double next_double();

  private:
    std::uint64_t state_;
};

/// Draws per sampling chunk. Chunking is part of the reproducibility
/// contract: results are bit-identical for a given seed no matter how chunks
/// are distributed over workers, because chunk c always uses the generator
/// seeded with chunk_seed(seed, c) and counts merge by addition.
inline constexpr std::uint64_t kChunkDraws = 1u << 16;

/// Seed of the c-th chunk: mix64(seed + (c + 1) * golden ratio increment),
/// so chunk streams coincide with successive outputs of splitmix64(seed).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

/// Monte Carlo estimate of the source figures with delta-method standard
/// errors. Estimates are count-ratio combinations in which the sample-size
/// normalization cancels, so they converge to the analytic table figures.
/// When no heralds occur (possible only in unconditional mode) the estimates
/// are NaN and no_heralds is set.
struct McEstimate {
    double purity_hat = 0.0;
    double purity_stderr = 0.0;
    double efficiency_hat = 0.0;
    double efficiency_stderr = 0.0;
    std::uint64_t herald_count = 0;
    std::uint64_t trial_count = 0;
    std::uint64_t seed = 0;
    /// Outcome labels with their accumulated counts, in a fixed order.
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    bool no_heralds = false;
};

/// Samples partner-band counts conditioned on a herald, drawing heralds
/// times from conditional_distribution(t, herald). This importance form
/// spends no trials on vacuum windows. purity_hat = 2 N0 N2 / N1^2 and
/// efficiency_hat = (N1/N0)/mu_partner. workers > 1 distributes chunks over
/// that many threads; results are bit-identical for any workers value.
/// Throws domain_error when heralds is zero or the herald channel is empty.
McEstimate sample_heralded(const JointPhotonTable& t, std::uint64_t heralds, std::uint64_t seed,
                           HeraldChannel herald = HeraldChannel::OneStokes,
                           unsigned workers = 0);

/// Samples whole counting windows from the joint table. Heralds are the
/// windows with exactly one Stokes photon; purity and efficiency come from
/// the same normalization-free count ratios as the heralded mode, with the
/// unconditional partner rate N01/N supplying the efficiency denominator.
/// Throws domain_error when trials is zero.
McEstimate sample_unconditional(const JointPhotonTable& t, std::uint64_t trials,
                                std::uint64_t seed, unsigned workers = 0);

}  // namespace raman
