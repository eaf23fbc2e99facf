#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "switchsde/rng.hpp"

namespace switchsde {

/// Structural constants declared for a hybrid model: per-regime one-sided
/// Lipschitz constants of the drift (alpha), per-regime diffusion structure
/// constants (h_vec), and the global diffusion Lipschitz constant h > 0.
/// Declared by the model author and audited empirically; never derived
/// symbolically.
struct ConditionConstants {
    Eigen::VectorXd alpha;
    Eigen::VectorXd h_vec;
    double h = 0.0;
};

/// Coefficients of the scalar hybrid cubic family
/// dY = (b(r) Y + a(r) Y^3) dt + rho(r) Y dB with a(.) <= 0.
struct GinzburgLandauCoefficients {
    Eigen::VectorXd b;
    Eigen::VectorXd a;
    Eigen::VectorXd rho;
};

/// Regime-indexed drift f(x,j) and diffusion g(x,j) with declared condition
/// constants. Evaluators must be pure and total on R^n x {0..N-1}.
class HybridModel {
public:
    using Drift = std::function<Eigen::VectorXd(const Eigen::VectorXd&, int)>;
    using Diffusion = std::function<Eigen::MatrixXd(const Eigen::VectorXd&, int)>;
    using Jacobian = std::function<Eigen::MatrixXd(const Eigen::VectorXd&, int)>;

    HybridModel(std::string name, int state_dim, int noise_dim, int regime_count,
                Drift drift, Diffusion diffusion, ConditionConstants declared,
                Jacobian drift_jacobian = nullptr);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] int state_dim() const noexcept { return state_dim_; }
    [[nodiscard]] int noise_dim() const noexcept { return noise_dim_; }
    [[nodiscard]] int regime_count() const noexcept { return regime_count_; }
    [[nodiscard]] const ConditionConstants& declared() const noexcept { return declared_; }
    [[nodiscard]] bool has_jacobian() const noexcept { return static_cast<bool>(jacobian_); }

    /// f(x,j). Throws model.NonFiniteOutput if any component is not finite.
    [[nodiscard]] Eigen::VectorXd drift(const Eigen::VectorXd& x, int regime) const;

    /// g(x,j) as an n x m matrix. Same finiteness contract as drift.
    [[nodiscard]] Eigen::MatrixXd diffusion(const Eigen::VectorXd& x, int regime) const;

    /// Jacobian of the drift in x; only valid when has_jacobian().
    [[nodiscard]] Eigen::MatrixXd drift_jacobian(const Eigen::VectorXd& x, int regime) const;

private:
    void check_regime(int regime) const;

    std::string name_;
    int state_dim_;
    int noise_dim_;
    int regime_count_;
    Drift drift_;
    Diffusion diffusion_;
    Jacobian jacobian_;
    ConditionConstants declared_;
};

/// Axis-aligned box used to draw audit probe points.
struct ProbeBox {
    Eigen::VectorXd lo;
    Eigen::VectorXd hi;

    static ProbeBox centered(int dim, double half_width);
};

/// Empirical supremum of (u-v)^T (f(u,j)-f(v,j)) / |u-v|^2 over `count`
/// uniform pairs in the box. A certificate check, not a proof: the declared
/// alpha_j must dominate the returned estimate.
double estimate_alpha(const HybridModel& model, int regime, const ProbeBox& box,
                      int count, RngStream& rng);

struct HPairEstimate {
    double h_j = 0.0; ///< sup of (|u-v|^2 |dg|^2 - 2 |(u-v)^T dg|^2) / |u-v|^4
    double h = 0.0;   ///< sup of |dg|^2 / |u-v|^2
};

/// Empirical suprema for the diffusion structure constants, dg = g(u,j)-g(v,j).
HPairEstimate estimate_h_pair(const HybridModel& model, int regime,
                              const ProbeBox& box, int count, RngStream& rng);

/// Largest relative mismatch between the supplied drift Jacobian and central
/// finite differences over `count` probe points.
double jacobian_mismatch(const HybridModel& model, const ProbeBox& box,
                         int count, RngStream& rng);

/// Audits all declared constants against empirical estimates; returns true
/// when every declared value dominates its estimate. When `report` is given
/// it receives one line per violated bound.
bool audit_constants(const HybridModel& model, const ProbeBox& box, int count,
                     RngStream& rng, std::string* report = nullptr);

/// The two-dimensional switching system of the worked 2-D example: cubic
/// dissipative drift with constant diffusion in regime 0, radially damped
/// drift with linear diffusion in regime 1. Declared alpha=(2,1),
/// h_vec=(0,-3), h=7.
HybridModel make_example41_model();

/// Scalar hybrid cubic model for the given coefficients. Constants are exact
/// for this family: alpha_j = b_j (valid since a_j <= 0), h_j = -rho_j^2,
/// h = max_j rho_j^2.
HybridModel make_ginzburg_landau_model(const GinzburgLandauCoefficients& coeffs);

} // namespace switchsde
