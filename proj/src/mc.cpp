#include "raman/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <thread>

#include "raman/errors.hpp"

namespace raman {

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix64(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    return mix64(seed + (chunk + 1) * 0x9E3779B97F4A7C15ull);
}

namespace {

const double kNan = std::numeric_limits<double>::quiet_NaN();

/// Inverse-CDF sampling of `draws` categorical outcomes, accumulated into
/// per-outcome counts. Chunk c always runs the generator seeded with
/// chunk_seed(seed, c), so the totals do not depend on how chunks are
/// distributed over workers.
std::vector<std::uint64_t> categorical_counts(const std::vector<double>& prob,
                                              std::uint64_t draws, std::uint64_t seed,
                                              unsigned workers) {
    const std::size_t k = prob.size();
    std::vector<double> cum(k, 0.0);
    double running = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        running += prob[i];
        cum[i] = running;
    }

    const std::uint64_t chunks = (draws + kChunkDraws - 1) / kChunkDraws;
    auto run_chunks = [&cum, draws, seed, chunks, k](std::uint64_t first, std::uint64_t stride,
                                                     std::vector<std::uint64_t>& local) {
        for (std::uint64_t c = first; c < chunks; c += stride) {
            SplitMix64 rng(chunk_seed(seed, c));
            const std::uint64_t begin = c * kChunkDraws;
            const std::uint64_t len = std::min<std::uint64_t>(kChunkDraws, draws - begin);
            for (std::uint64_t i = 0; i < len; ++i) {
                const double u = rng.next_double();
                std::size_t pick = k - 1;  // top bucket absorbs rounding slack
                for (std::size_t j = 0; j + 1 < k; ++j) {
                    if (u < cum[j]) {
                        pick = j;
                        break;
                    }
                }
                ++local[pick];
            }
        }
    };

    std::vector<std::uint64_t> total(k, 0);
    const unsigned pool_size =
        workers > 1 ? static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks)) : 1;
    if (pool_size <= 1) {
        run_chunks(0, 1, total);
        return total;
    }
    std::vector<std::vector<std::uint64_t>> locals(pool_size, std::vector<std::uint64_t>(k, 0));
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (unsigned w = 0; w < pool_size; ++w) {
        pool.emplace_back(run_chunks, w, pool_size, std::ref(locals[w]));
    }
    for (auto& worker : pool) worker.join();
    for (const auto& local : locals) {
        for (std::size_t i = 0; i < k; ++i) total[i] += local[i];
    }
    return total;
}

/// purity_hat = 2 n0 n2 / n1^2 over (herald-only, one-one, two-partner)
/// counts, with the delta-method standard error; the multinomial covariance
/// terms cancel because the ratio is scale-free in the counts.
void fill_purity(McEstimate& e, std::uint64_t n0, std::uint64_t n1, std::uint64_t n2) {
    const double d0 = static_cast<double>(n0);
    const double d1 = static_cast<double>(n1);
    const double d2 = static_cast<double>(n2);
    if (n1 > 0) {
        e.purity_hat = 2.0 * d0 * d2 / (d1 * d1);
        e.purity_stderr = n0 > 0 && n2 > 0
                              ? e.purity_hat * std::sqrt(1.0 / d0 + 4.0 / d1 + 1.0 / d2)
                              : 0.0;
    } else if (n2 == 0) {
        e.purity_hat = 0.0;  // no coincidences observed at all
        e.purity_stderr = 0.0;
    } else {
        e.purity_hat = kNan;
        e.purity_stderr = kNan;
    }
}

}  // namespace

McEstimate sample_heralded(const JointPhotonTable& t, std::uint64_t heralds, std::uint64_t seed,
                           HeraldChannel herald, unsigned workers) {
    if (heralds == 0) {
        throw domain_error("heralded sampling needs at least one herald");
    }
    const std::array<double, 3> q = conditional_distribution(t, herald);
    const std::vector<std::uint64_t> n =
        categorical_counts({q[0], q[1], q[2]}, heralds, seed, workers);

    McEstimate e;
    e.herald_count = heralds;
    e.trial_count = heralds;
    e.seed = seed;
    e.counts = {{"partner0", n[0]}, {"partner1", n[1]}, {"partner2", n[2]}};

    fill_purity(e, n[0], n[1], n[2]);

    const double mu_partner = herald == HeraldChannel::OneStokes ? t.mu_ast : t.mu_st;
    if (n[0] > 0 && mu_partner > 0.0) {
        const double d0 = static_cast<double>(n[0]);
        const double d1 = static_cast<double>(n[1]);
        e.efficiency_hat = (d1 / d0) / mu_partner;
        e.efficiency_stderr =
            n[1] > 0 ? e.efficiency_hat * std::sqrt(1.0 / d0 + 1.0 / d1) : 0.0;
    } else {
        e.efficiency_hat = kNan;
        e.efficiency_stderr = kNan;
    }
    return e;
}

McEstimate sample_unconditional(const JointPhotonTable& t, std::uint64_t trials,
                                std::uint64_t seed, unsigned workers) {
    if (trials == 0) {
        throw domain_error("unconditional sampling needs at least one trial");
    }

    // Fixed outcome order, vacuum first; part of the determinism contract.
    static constexpr int cells[10][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0},
                                         {0, 2}, {2, 1}, {1, 2}, {3, 0}, {0, 3}};
    std::vector<double> prob;
    prob.reserve(10);
    for (const auto& cell : cells) prob.push_back(t.p[cell[0]][cell[1]]);

    const std::vector<std::uint64_t> n = categorical_counts(prob, trials, seed, workers);

    McEstimate e;
    e.trial_count = trials;
    e.seed = seed;
    for (std::size_t i = 0; i < 10; ++i) {
        e.counts.emplace_back("n" + std::to_string(cells[i][0]) + std::to_string(cells[i][1]),
                              n[i]);
    }

    const std::uint64_t n10 = n[1];
    const std::uint64_t n01 = n[2];
    const std::uint64_t n11 = n[3];
    const std::uint64_t n12 = n[7];
    e.herald_count = n10 + n11 + n12;
    if (e.herald_count == 0) {
        e.no_heralds = true;
        e.purity_hat = e.purity_stderr = kNan;
        e.efficiency_hat = e.efficiency_stderr = kNan;
        return e;
    }

    fill_purity(e, n10, n11, n12);

    if (n10 > 0 && n01 > 0) {
        const double total = static_cast<double>(trials);
        const double d10 = static_cast<double>(n10);
        const double d01 = static_cast<double>(n01);
        const double d11 = static_cast<double>(n11);
        e.efficiency_hat = (d11 / d10) / (d01 / total);
        e.efficiency_stderr =
            n11 > 0 ? e.efficiency_hat *
                          std::sqrt(1.0 / d11 + 1.0 / d10 + 1.0 / d01 - 1.0 / total)
                    : 0.0;
    } else {
        e.efficiency_hat = kNan;
        e.efficiency_stderr = kNan;
    }
    return e;
}

}  // namespace raman
