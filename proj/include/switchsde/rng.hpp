#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace switchsde {

/// Identifies one logical random stream: a user seed plus a stream index.
/// The same (seed, index) always reproduces the same draw sequence.
struct StreamId {
    std::uint64_t seed = 0;
    std::uint64_t index = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0xD1B54A32D192ED03ull;
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x9E3779B97F4A7C15ull);
}

} // namespace detail

/// Deterministic random stream for exclusive use by one caller.
/// Gaussian draws use Box-Muller on top of the engine's uniforms so the
/// sequence is pinned by this code, not by library internals.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t index)
        : engine_(detail::mix_stream(seed, index)), id_{seed, index} {}

    [[nodiscard]] StreamId id() const noexcept { return id_; }

    /// Uniform draw on the open interval (0,1).
    double uniform() {
        for (;;) {
            const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
            if (u > 0.0) return u;
        }
    }

    /// Standard normal draw.
    double gaussian() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index m) {
        Eigen::VectorXd z(m);
        for (Eigen::Index i = 0; i < m; ++i) z[i] = gaussian();
        return z;
    }

private:
    std::mt19937_64 engine_;
    StreamId id_;
};

} // namespace switchsde
