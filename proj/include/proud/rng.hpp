#pragma once

#include <cstdint>
#include <vector>

namespace proud {

// Mixes a base seed with a stream label; used to give every stage of a run
// (init, pretrain, training, data) its own independent stream.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Deterministic RNG with hand-rolled distributions. std:: distributions are
// implementation-defined, which would tie reproducibility to one standard
// library; the transforms here pin the exact draw sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    // Uniform on [0, 1), 53-bit resolution.
    double uniform();
    double uniform(double lo, double hi);
    // Uniform integer in [0, n), n >= 1.
    std::size_t uniform_index(std::size_t n);
    // Standard normal via Box-Muller; the spare value is cached.
    double normal();
    double normal(double mean, double stddev);
    // Beta(a, b) via Marsaglia-Tsang gamma sampling.
    double beta(double a, double b);
    // Fisher-Yates over indices 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform_index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    Rng fork(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

private:
    double gamma(double shape);

    std::uint64_t state_[4];
    std::uint64_t seed_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace proud
