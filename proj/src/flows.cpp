#include "liemax/flows.hpp"

#include "liemax/lie_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace liemax::flows {

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::none: return "none";
    case Normalization::unit_determinant: return "unit_determinant";
    case Normalization::unit_bracket_norm: return "unit_bracket_norm";
  }
  return "none";
}

Normalization normalization_from_string(const std::string& s) {
  std::string t = s;
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "none") return Normalization::none;
  if (t == "unit_determinant" || t == "det") return Normalization::unit_determinant;
  if (t == "unit_bracket_norm" || t == "bracket") return Normalization::unit_bracket_norm;
  throw std::invalid_argument("unknown normalization '" + s + "'");
}

std::string to_string(FlowStatus s) {
  switch (s) {
    case FlowStatus::completed: return "completed";
    case FlowStatus::not_positive_definite: return "not_positive_definite";
    case FlowStatus::blow_up: return "blow_up";
  }
  return "completed";
}

Eigen::MatrixXd to_eigen(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

namespace {

// Dense structure constants c[(i*n + j)*n + k].
using Constants = std::vector<double>;

Constants dense_constants(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  Constants c(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, v] : alg.bracket_basis(i, j)) c[(i * n + j) * n + k] = v.get_d();
  return c;
}

struct Frame {
  Eigen::MatrixXd lower;  // gram = L L^T
  Eigen::MatrixXd basis;  // U = L^{-T}; columns are orthonormal vectors
};

Frame orthonormal_frame(const Eigen::MatrixXd& gram) {
  Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) throw std::domain_error("Gram matrix is not positive definite");
  Frame f;
  f.lower = llt.matrixL();
  f.basis = f.lower.transpose().triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(gram.rows(), gram.cols()));
  return f;
}

// c'_{ab}^{d} = sum U_ia U_jb c_ij^k L_kd
Constants rotate(const Constants& c, const Frame& f, std::size_t n) {
  Constants t1(n * n * n, 0.0), t2(n * n * n, 0.0), out(n * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double v = c[(i * n + j) * n + k];
        if (v == 0.0) continue;
        for (std::size_t d = 0; d < n; ++d) t1[(i * n + j) * n + d] += v * f.lower(k, d);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t j = 0; j < n; ++j) {
        const double u = f.basis(j, b);
        if (u == 0.0) continue;
        for (std::size_t d = 0; d < n; ++d) t2[(i * n + b) * n + d] += u * t1[(i * n + j) * n + d];
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      const double u = f.basis(i, a);
      if (u == 0.0) continue;
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) out[(a * n + b) * n + d] += u * t2[(i * n + b) * n + d];
    }
  return out;
}

// Same decomposition as the exact module, in an orthonormal basis.
Eigen::MatrixXd orthonormal_ricci(const Constants& c, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; };
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd h = Eigen::VectorXd::Zero(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < n; ++k) h(x) += at(x, k, k);
  Eigen::MatrixXd ad_h = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (h(i) != 0.0)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) ad_h(k, j) += h(i) * at(i, j, k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      double m = 0.0, killing = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          m -= 0.5 * at(x, i, k) * at(y, i, k);
          m += 0.25 * at(i, k, x) * at(i, k, y);
          killing += at(x, i, k) * at(y, k, i);
        }
      const double value = m - 0.5 * killing - 0.5 * (ad_h(x, y) + ad_h(y, x));
      ric(x, y) = ric(y, x) = value;
    }
  return ric;
}

} // namespace

FloatRicci ricci_at(const LieAlgebra& alg, const Eigen::MatrixXd& gram) {
  const std::size_t n = alg.dim();
  if (static_cast<std::size_t>(gram.rows()) != n || static_cast<std::size_t>(gram.cols()) != n)
    throw std::invalid_argument("Gram matrix size does not match the algebra");
  const Frame f = orthonormal_frame(gram);
  const Eigen::MatrixXd r = orthonormal_ricci(rotate(dense_constants(alg), f, n), n);
  FloatRicci out;
  out.ric_operator = r;
  out.form = f.lower * r * f.lower.transpose();
  out.form = 0.5 * (out.form + out.form.transpose());
  out.scal = r.trace();
  return out;
}

Eigen::MatrixXd flow_field(const LieAlgebra& alg, const Eigen::MatrixXd& gram, double a, double b) {
  const FloatRicci ric = ricci_at(alg, gram);
  return -a * ric.form - b * ric.scal * gram;
}

double bracket_norm_sq(const LieAlgebra& alg, const Eigen::MatrixXd& gram) {
  const std::size_t n = alg.dim();
  const auto c = rotate(dense_constants(alg), orthonormal_frame(gram), n);
  double s = 0.0;
  for (double v : c) s += v * v;
  return s;
}

namespace {

struct SolitonFit {
  std::vector<Eigen::MatrixXd> der;  // exact derivation basis over the input basis
};

double soliton_residual(const SolitonFit& fit, const Eigen::MatrixXd& gram, const Eigen::MatrixXd& ric_op) {
  const Eigen::Index n = gram.rows();
  const double norm = ric_op.norm();
  if (norm == 0.0) return 0.0;
  const Frame f = orthonormal_frame(gram);
  // D' = U^{-1} D U with U^{-1} = L^T.
  Eigen::MatrixXd design(n * n, static_cast<Eigen::Index>(fit.der.size()) + 1);
  design.col(0) = Eigen::Map<const Eigen::VectorXd>(Eigen::MatrixXd::Identity(n, n).eval().data(), n * n);
  for (std::size_t k = 0; k < fit.der.size(); ++k) {
    const Eigen::MatrixXd d = f.lower.transpose() * fit.der[k] * f.basis;
    design.col(static_cast<Eigen::Index>(k) + 1) = Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  }
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(ric_op.data(), n * n);
  const Eigen::VectorXd coeffs = design.completeOrthogonalDecomposition().solve(rhs);
  return (design * coeffs - rhs).norm() / norm;
}

FlowSample make_sample(double t, const Eigen::MatrixXd& gram, const LieAlgebra& alg, const SolitonFit& fit) {
  const FloatRicci ric = ricci_at(alg, gram);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(ric.ric_operator, Eigen::EigenvaluesOnly);
  return {t, gram, eig.eigenvalues(), ric.scal, soliton_residual(fit, gram, ric.ric_operator)};
}

void normalize(Eigen::MatrixXd& g, Normalization mode, const LieAlgebra& alg) {
  switch (mode) {
    case Normalization::none: return;
    case Normalization::unit_determinant: {
      const double det = g.determinant();
      if (det > 0.0) g /= std::pow(det, 1.0 / static_cast<double>(g.rows()));
      return;
    }
    case Normalization::unit_bracket_norm: {
      // ||[,]||^2 scales as 1/lambda under g -> lambda g.
      const double s = bracket_norm_sq(alg, g);
      if (s > 0.0) g *= s;
      return;
    }
  }
}

bool blown_up(const Eigen::MatrixXd& g) {
  return !g.allFinite() || g.cwiseAbs().maxCoeff() > kBlowUpThreshold;
}

} // namespace

FlowTrajectory integrate(const FlowProblem& p) {
  if (!(p.step > 0.0)) throw std::invalid_argument("flow step must be positive");
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.t_end))
    throw std::invalid_argument("flow coefficients must be finite");
  const auto n = static_cast<Eigen::Index>(p.alg.dim());
  if (p.g0.rows() != n || p.g0.cols() != n) throw std::invalid_argument("g0 size does not match the algebra");
  if ((p.g0 - p.g0.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance)
    throw std::invalid_argument("g0 is not symmetric");

  SolitonFit fit;
  const MatrixSubspace der = core::derivation_algebra(p.alg);
  for (const auto& d : der.basis()) fit.der.push_back(to_eigen(d));

  FlowTrajectory traj;
  Eigen::MatrixXd g = 0.5 * (p.g0 + p.g0.transpose());
  normalize(g, p.normalization, p.alg);
  try {
    traj.samples.push_back(make_sample(0.0, g, p.alg, fit));
  } catch (const std::domain_error&) {
    traj.status = FlowStatus::not_positive_definite;
    return traj;
  }

  const auto steps = static_cast<std::size_t>(std::llround(p.t_end / p.step));
  const std::size_t stride = std::max<std::size_t>(1, p.sample_every);
  auto field = [&](const Eigen::MatrixXd& x) { return flow_field(p.alg, x, p.a, p.b); };
  for (std::size_t s = 1; s <= steps; ++s) {
    const double h = p.step;
    try {
      const Eigen::MatrixXd k1 = field(g);
      const Eigen::MatrixXd k2 = field(g + 0.5 * h * k1);
      const Eigen::MatrixXd k3 = field(g + 0.5 * h * k2);
      const Eigen::MatrixXd k4 = field(g + h * k3);
      g += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      g = 0.5 * (g + g.transpose());
      normalize(g, p.normalization, p.alg);
      traj.steps = s;
      if (blown_up(g)) {
        traj.status = FlowStatus::blow_up;
        break;
      }
      if (s % stride == 0 || s == steps) traj.samples.push_back(make_sample(static_cast<double>(s) * h, g, p.alg, fit));
    } catch (const std::domain_error&) {
      traj.status = FlowStatus::not_positive_definite;
      break;
    }
  }
  return traj;
}

namespace {

Eigen::VectorXd normalized_spectrum(const Eigen::VectorXd& ev) {
  const double scale = ev.size() ? ev.cwiseAbs().maxCoeff() : 0.0;
  if (scale == 0.0) return Eigen::VectorXd::Zero(ev.size());
  return ev / scale;
}

} // namespace

Diagnostics self_similarity_diagnostics(const FlowTrajectory& traj) {
  if (traj.samples.size() < 2) throw std::invalid_argument("diagnostics need at least two samples");
  const Eigen::VectorXd ref = normalized_spectrum(traj.samples.front().eigenvalues);
  Diagnostics d{0.0, 0.0};
  for (const auto& s : traj.samples) {
    d.ratio_drift = std::max(d.ratio_drift, (normalized_spectrum(s.eigenvalues) - ref).cwiseAbs().maxCoeff());
    d.max_soliton_residual = std::max(d.max_soliton_residual, s.soliton_residual);
  }
  return d;
}

double scaling_deviation(const FlowTrajectory& traj) {
  if (traj.samples.empty()) return 0.0;
  const Eigen::MatrixXd& g0 = traj.samples.front().gram;
  double worst = 0.0;
  for (const auto& s : traj.samples) {
    const Eigen::MatrixXd scaled = (s.gram.trace() / g0.trace()) * g0;
    worst = std::max(worst, (s.gram - scaled).cwiseAbs().maxCoeff());
  }
  return worst;
}

} // namespace liemax::flows
