#pragma once

#include "liemax/lie_algebra.hpp"
#include "liemax/matrix.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace liemax::flows {

enum class Normalization { none, unit_determinant, unit_bracket_norm };

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);

/// dg/dt = -a Ric(g) - b scal(g) g, integrated with fixed-step RK4.
struct FlowProblem {
  LieAlgebra alg;
  Eigen::MatrixXd g0;
  double a = 2.0;
  double b = 0.0;
  double t_end = 1.0;
  double step = 1e-3;
  Normalization normalization = Normalization::unit_determinant;
  std::size_t sample_every = 10;  // steps between recorded samples
};

struct FlowSample {
  double t;
  Eigen::MatrixXd gram;
  Eigen::VectorXd eigenvalues;  // Ricci operator, ascending
  double scal;
  double soliton_residual;  // relative least-squares residual of Ric = cI + D
};

enum class FlowStatus { completed, not_positive_definite, blow_up };
std::string to_string(FlowStatus s);

struct FlowTrajectory {
  std::vector<FlowSample> samples;
  FlowStatus status = FlowStatus::completed;
  std::size_t steps = 0;
};

/// Float Ricci data at an arbitrary Gram matrix.
struct FloatRicci {
  Eigen::MatrixXd form;      // Ric(v_i, v_j) over the input basis
  Eigen::MatrixXd ric_operator;  // Ricci operator in the Cholesky orthonormal basis
  double scal;
};

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kBlowUpThreshold = 1e12;
inline constexpr double kSelfSimilarityTolerance = 1e-6;

Eigen::MatrixXd to_eigen(const RatMatrix& m);

/// Throws std::domain_error when gram is not positive definite.
FloatRicci ricci_at(const LieAlgebra& alg, const Eigen::MatrixXd& gram);

/// -a Ric(gram) - b scal(gram) gram.
Eigen::MatrixXd flow_field(const LieAlgebra& alg, const Eigen::MatrixXd& gram, double a, double b);

/// ||[,]||^2 measured in gram.
double bracket_norm_sq(const LieAlgebra& alg, const Eigen::MatrixXd& gram);

/// Throws std::invalid_argument for step <= 0, non-finite coefficients or an
/// asymmetric g0. Blow-up and loss of definiteness truncate with a flag.
FlowTrajectory integrate(const FlowProblem& problem);

struct Diagnostics {
  double ratio_drift;
  double max_soliton_residual;
};

/// Throws std::invalid_argument for fewer than two samples.
Diagnostics self_similarity_diagnostics(const FlowTrajectory& traj);

/// max_t |g_t - (tr g_t / tr g_0) g_0|_inf.
double scaling_deviation(const FlowTrajectory& traj);

} // namespace liemax::flows
