#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace stakesim {

// Counter-based splittable random stream. Every consumer forks its own
// substream from the master seed, keyed by a label (and optional index),
// so adding or reordering consumers never perturbs unrelated draws.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(mix(seed ^ kGolden)) {}

    RngStream fork(std::string_view label) const {
        std::uint64_t h = fnv1a(label);
        return RngStream(mix(state_ ^ h), Tag{});
    }

    RngStream fork(std::string_view label, std::uint64_t index) const {
        std::uint64_t h = fnv1a(label);
        return RngStream(mix(mix(state_ ^ h) + index), Tag{});
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe as a log argument.
    double uniform_pos() { return 1.0 - uniform(); }

    std::uint64_t uniform_below(std::uint64_t bound) {
        // Rejection-free modulo is fine here: bound << 2^64, bias negligible,
        // and determinism is what matters.
        return next_u64() % bound;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Exponential with RATE lambda (mean 1/lambda).
    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    // Standard normal via Box-Muller; two uniforms per draw, no cache.
    double normal() {
        double u1 = uniform_pos();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    // Chi-squared with k degrees of freedom (sum of k squared normals).
    double chi_squared(unsigned k) {
        double s = 0.0;
        for (unsigned i = 0; i < k; ++i) {
            double z = normal();
            s += z * z;
        }
        return s;
    }

private:
    struct Tag {};
    RngStream(std::uint64_t raw_state, Tag) : state_(raw_state) {}

    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t fnv1a(std::string_view s) {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    std::uint64_t state_;
};

} // namespace stakesim
