#include "switchsde/markov.hpp"

#include <cmath>
#include <string>

#include "switchsde/errors.hpp"

namespace switchsde {

namespace {

constexpr double kRowSumTol = 1e-12;
constexpr double kClampTol = 1e-12;

// Strong connectivity of the off-diagonal support graph: DFS from state 0
// along edges, then along reversed edges.
bool strongly_connected(const Eigen::MatrixXd& q) {
    const int n = static_cast<int>(q.rows());
    if (n <= 1) return true;

    auto reach_all = [&](bool reversed) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (w == v || seen[w]) continue;
                const double rate = reversed ? q(w, v) : q(v, w);
                if (rate > 0.0) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
            }
        }
        return count == n;
    };

    return reach_all(false) && reach_all(true);
}

} // namespace

GeneratorMatrix GeneratorMatrix::validate(const Eigen::MatrixXd& raw) {
    if (raw.rows() != raw.cols() || raw.rows() < 1) {
        throw Error("markov.BadShape", "generator must be a square matrix with N >= 1");
    }
    const int n = static_cast<int>(raw.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && raw(i, j) < 0.0) {
                throw Error("markov.NegativeOffDiagonal",
                            "q(" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + std::to_string(raw(i, j)) +
                                " violates q_lj >= 0 for l != j");
            }
        }
        const double row_sum = raw.row(i).sum();
        if (std::abs(row_sum) > kRowSumTol) {
            throw Error("markov.RowSumNonzero",
                        "row " + std::to_string(i) + " sums to " +
                            std::to_string(row_sum) +
                            "; a conservative generator needs zero row sums");
        }
    }
    if (!strongly_connected(raw)) {
        throw Error("markov.Reducible",
                    "off-diagonal support graph is not strongly connected");
    }
    return GeneratorMatrix(raw);
}

StationaryDistribution stationary_distribution(const GeneratorMatrix& gen) {
    const int n = gen.size();
    // mu Q = 0  <=>  Q^T mu^T = 0; the last equation is redundant and is
    // replaced by the normalization sum(mu) = 1.
    Eigen::MatrixXd a = gen.q().transpose();
    a.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs[n - 1] = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible()) {
        throw Error("markov.SingularSystem",
                    "stationary system is singular; generator is numerically reducible");
    }
    Eigen::VectorXd mu = lu.solve(rhs);

    const double total = mu.sum();
    if (!(total > 0.0) || !mu.allFinite()) {
        throw Error("markov.SingularSystem", "stationary solve produced invalid mass");
    }
    mu /= total;

    if ((mu.array() <= 0.0).any()) {
        throw Error("markov.SingularSystem",
                    "stationary distribution has a non-positive component");
    }
    const double residual = (mu.transpose() * gen.q()).cwiseAbs().maxCoeff();
    if (residual > 1e-10) {
        throw Error("markov.SingularSystem",
                    "mu Q residual " + std::to_string(residual) + " exceeds 1e-10");
    }
    return StationaryDistribution{std::move(mu)};
}

TransitionMatrix transition_matrix(const GeneratorMatrix& gen, double delta) {
    if (!(delta >= 0.0)) {
        throw Error("markov.InvalidDelta", "delta must be nonnegative");
    }
    const int n = gen.size();
    Eigen::MatrixXd a = delta * gen.q();

    // Scale so the argument has max norm <= 1/2, sum the Taylor series to
    // below 1e-16 relative (tail then geometric with ratio <= 1/2), square back.
    const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        a /= std::pow(2.0, squarings);
    }

    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= 64; ++k) {
        term = (term * a / static_cast<double>(k)).eval();
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-16 * std::max(1.0, result.cwiseAbs().maxCoeff())) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) result = (result * result).eval();

    // Stochastic-matrix cleanup: clamp roundoff negatives, renormalize rows.
    double worst_clamp = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (result(i, j) < 0.0) {
                worst_clamp = std::max(worst_clamp, -result(i, j));
                result(i, j) = 0.0;
            }
        }
        result.row(i) /= result.row(i).sum();
    }
    if (worst_clamp > kClampTol) {
        throw Error("markov.ExpFailure",
                    "matrix exponential produced a negative entry of magnitude " +
                        std::to_string(worst_clamp));
    }
    return TransitionMatrix{std::move(result), delta};
}

ChainPath sample_chain(const TransitionMatrix& p, int initial_state,
                       std::int64_t steps, RngStream& rng) {
    const int n = p.size();
    if (initial_state < 0 || initial_state >= n) {
        throw Error("markov.BadState", "initial state out of range");
    }
    if (steps < 0) {
        throw Error("markov.BadStepCount", "step count must be nonnegative");
    }
    ChainPath path;
    path.states.reserve(static_cast<std::size_t>(steps) + 1);
    path.states.push_back(initial_state);
    path.num_states = n;
    path.delta = p.delta;
    path.seed = rng.id();

    int current = initial_state;
    for (std::int64_t k = 0; k < steps; ++k) {
        const double u = rng.uniform();
        int next = n - 1;
        double cum = 0.0;
        for (int s = 0; s < n - 1; ++s) {
            cum += p.p(current, s);
            if (u < cum) {
                next = s;
                break;
            }
        }
        path.states.push_back(next);
        current = next;
    }
    return path;
}

Eigen::VectorXd occupation_fractions(const ChainPath& path) {
    if (path.states.empty() || path.num_states < 1) {
        throw Error("markov.EmptyPath", "occupation fractions need a nonempty path");
    }
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(path.num_states);
    for (const int s : path.states) counts[s] += 1.0;
    return counts / static_cast<double>(path.states.size());
}

} // namespace switchsde
