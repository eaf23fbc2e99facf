#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "switchsde/rng.hpp"

namespace switchsde {

/// Validated generator of an irreducible, conservative continuous-time
/// Markov chain: off-diagonal rates are nonnegative, rows sum to zero, and
/// the off-diagonal support graph is strongly connected.
class GeneratorMatrix {
public:
    /// Validates a raw square matrix. Throws Error with code
    /// markov.NegativeOffDiagonal, markov.RowSumNonzero or markov.Reducible
    /// naming the violated hypothesis.
    static GeneratorMatrix validate(const Eigen::MatrixXd& raw);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(q_.rows()); }
    [[nodiscard]] const Eigen::MatrixXd& q() const noexcept { return q_; }

private:
    explicit GeneratorMatrix(Eigen::MatrixXd q) : q_(std::move(q)) {}
    Eigen::MatrixXd q_;
};

/// One-step transition matrix P(delta) = exp(delta * Q).
struct TransitionMatrix {
    Eigen::MatrixXd p;
    double delta = 0.0;

    [[nodiscard]] int size() const noexcept { return static_cast<int>(p.rows()); }
};

/// Stationary distribution mu of the chain: mu Q = 0, sum(mu) = 1, mu >> 0.
struct StationaryDistribution {
    Eigen::VectorXd mu;
};

/// Discrete switching path r_0..r_K with its step size and seed provenance.
/// Regimes are 0-based indices in [0, num_states).
struct ChainPath {
    std::vector<int> states;
    int num_states = 0;
    double delta = 0.0;
    StreamId seed;

    [[nodiscard]] std::int64_t steps() const noexcept {
        return static_cast<std::int64_t>(states.size()) - 1;
    }
};

/// Solves mu Q = 0 with the normalization row replacing one redundant
/// equation. Throws markov.SingularSystem on numerically reducible input.
StationaryDistribution stationary_distribution(const GeneratorMatrix& gen);

/// exp(delta*Q) by scaling-and-squaring with a truncated Taylor series
/// (truncation below 1e-14 in max norm). Roundoff negatives are clamped and
/// rows renormalized; clamping beyond 1e-12 is treated as an internal error.
TransitionMatrix transition_matrix(const GeneratorMatrix& gen, double delta);

/// Simulates r_0=initial_state and K further states by the inverse-CDF rule:
/// r_{k+1} is the smallest state s with u < sum_{j<=s} P_{r_k j}, the last
/// state when u reaches the partial sum through N-1.
ChainPath sample_chain(const TransitionMatrix& p, int initial_state,
                       std::int64_t steps, RngStream& rng);

/// Fraction of path entries spent in each state; sums to one.
Eigen::VectorXd occupation_fractions(const ChainPath& path);

} // namespace switchsde
