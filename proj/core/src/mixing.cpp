#include "rpp/mixing.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <sstream>

#include "nlohmann/json.hpp"
#include "rpp/errors.hpp"

namespace rpp {

namespace {

double operator_norm(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

double spectral_radius_dense(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw NumericalFailureError("spectral radius: eigen solver failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

Eigen::VectorXd power_iterate(const Eigen::MatrixXd& m, Eigen::VectorXd x,
                              const char* what) {
  constexpr double kTol = 1e-12;
  constexpr int kMaxIter = 100000;
  const double n = static_cast<double>(m.rows());
  double residual = 0.0;
  for (int it = 0; it < kMaxIter; ++it) {
    Eigen::VectorXd next = m * x;
    const double total = next.sum();
    if (total == 0.0)
      throw NumericalFailureError(std::string(what) + ": degenerate iterate (zero sum)");
    next *= n / total;
    residual = (m * next - next).norm() / next.norm();
    x = std::move(next);
    if (residual <= kTol) return x;
  }
  throw NumericalFailureError(std::string(what) + ": power iteration did not converge",
                              residual);
}

// Lemma-style eigenvectors are nonnegative; entries that come out barely
// negative are rounding noise, anything larger means the assumption failed.
void clamp_nonnegative(Eigen::VectorXd& x, const char* what) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i) < 0.0) {
      if (x(i) < -1e-12)
        throw AssumptionViolationError(std::string(what) +
                                       ": eigenvector has a negative entry");
      x(i) = 0.0;
    }
  }
}

}  // namespace

Eigen::MatrixXd build_pull_matrix(const DirectedGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double w = 1.0 / (g.in_degree(i) + 1.0);
    double off_diag = 0.0;
    for (int j : g.in_neighbors(i)) {
      if (j == i) continue;
      r(i, j) = w;
      off_diag += w;
    }
    r(i, i) = 1.0 - off_diag;  // row sums to one exactly in floating point
  }
  return r;
}

Eigen::MatrixXd build_push_matrix(const DirectedGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double w = 1.0 / (g.out_degree(i) + 1.0);
    double off_diag = 0.0;
    for (int l : g.out_neighbors(i)) {
      if (l == i) continue;
      c(l, i) = w;
      off_diag += w;
    }
    c(i, i) = 1.0 - off_diag;
  }
  return c;
}

Eigen::MatrixXd lazy_blend(const Eigen::MatrixXd& m, double theta) {
  if (!(theta > 0.0 && theta <= 1.0))
    throw InvalidParameterError("lazy_blend: theta must lie in (0,1]");
  if (m.rows() != m.cols())
    throw InvalidParameterError("lazy_blend: matrix must be square");
  Eigen::MatrixXd out = theta * m;
  out.diagonal().array() += 1.0 - theta;
  return out;
}

PerronPair perron_vectors(const Eigen::MatrixXd& R, const Eigen::MatrixXd& C,
                          const Eigen::VectorXd& u0, const Eigen::VectorXd& v0) {
  if (R.rows() != R.cols() || C.rows() != C.cols() || R.rows() != C.rows())
    throw InvalidParameterError("perron_vectors: R and C must be square and same size");
  const int n = static_cast<int>(R.rows());
  Eigen::VectorXd ustart = u0.size() == n ? u0 : Eigen::VectorXd::Ones(n);
  Eigen::VectorXd vstart = v0.size() == n ? v0 : Eigen::VectorXd::Ones(n);

  PerronPair p;
  p.u = power_iterate(R.transpose(), std::move(ustart), "perron u");
  p.v = power_iterate(C, std::move(vstart), "perron v");
  clamp_nonnegative(p.u, "perron u");
  clamp_nonnegative(p.v, "perron v");
  if (p.u.dot(p.v) <= 0.0)
    throw AssumptionViolationError(
        "perron_vectors: u.v <= 0, the graphs share no spanning-tree root");
  return p;
}

ContractionTransform contraction_transform(const Eigen::MatrixXd& m_blend,
                                           const Eigen::VectorXd& w,
                                           ContractionSide side, double slack) {
  if (m_blend.rows() != m_blend.cols())
    throw InvalidParameterError("contraction_transform: matrix must be square");
  if (w.size() != m_blend.rows())
    throw InvalidParameterError("contraction_transform: eigenvector size mismatch");
  if (!(slack > 0.0 && slack < 1.0))
    throw InvalidParameterError("contraction_transform: slack must lie in (0,1)");
  const int n = static_cast<int>(m_blend.rows());
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

  Eigen::MatrixXd wmat =
      side == ContractionSide::Row
          ? Eigen::MatrixXd(m_blend - ones * w.transpose() / n)
          : Eigen::MatrixXd(m_blend - w * ones.transpose() / n);

  const double rho = spectral_radius_dense(wmat);
  if (rho >= 1.0)
    throw AssumptionViolationError(
        "contraction_transform: rho(W) >= 1; stochasticity or the spanning-tree "
        "condition does not hold (rho = " + std::to_string(rho) + ")");

  const double tau_target = rho + slack * (1.0 - rho);

  // P = sum_k (W/tau)^k^T (W/tau)^k by doubling: converges in O(log) sweeps
  // even when rho(W)/tau is close to one.
  const Eigen::MatrixXd a = wmat / tau_target;
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd m = a;
  bool converged = false;
  for (int it = 0; it < 128; ++it) {
    Eigen::MatrixXd term = m.transpose() * p * m;
    p += term;
    if (term.norm() <= 1e-15 * p.norm()) {
      converged = true;
      break;
    }
    m = m * m;
  }
  if (!converged)
    throw NumericalFailureError("contraction_transform: Lyapunov sum did not converge");

  p = 0.5 * (p + p.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
  if (es.info() != Eigen::Success)
    throw NumericalFailureError("contraction_transform: eigen solver failed on P");
  Eigen::VectorXd lam = es.eigenvalues();
  // P >= I by construction; guard the square root against rounding.
  const double lmin = lam.minCoeff();
  if (lmin <= 0.0)
    throw NumericalFailureError("contraction_transform: P lost positive definiteness");
  const double lift = lmin < 1.0 ? 1.0 / lmin : 1.0;

  ContractionTransform out;
  out.t = es.eigenvectors() * (lift * lam).cwiseSqrt().asDiagonal() *
          es.eigenvectors().transpose();
  out.t_inv = es.eigenvectors() * (lift * lam).cwiseSqrt().cwiseInverse().asDiagonal() *
              es.eigenvectors().transpose();

  const double certified = operator_norm(out.t * wmat * out.t_inv);
  out.tau = std::min(std::max(certified, rho + 1e-12 * (1.0 - rho)), tau_target);
  return out;
}

EquivalenceConstants equivalence_constants(const Eigen::MatrixXd& r_tilde,
                                           const Eigen::MatrixXd& c_tilde) {
  if (r_tilde.rows() != r_tilde.cols() || c_tilde.rows() != c_tilde.cols() ||
      r_tilde.rows() != c_tilde.rows())
    throw InvalidParameterError("equivalence_constants: transforms must be square, same size");
  Eigen::FullPivLU<Eigen::MatrixXd> lu_r(r_tilde);
  Eigen::FullPivLU<Eigen::MatrixXd> lu_c(c_tilde);
  if (!lu_r.isInvertible() || !lu_c.isInvertible())
    throw InvalidParameterError("equivalence_constants: singular transform");
  EquivalenceConstants d;
  d.delta_cr = operator_norm(c_tilde * lu_r.inverse());
  d.delta_c2 = operator_norm(c_tilde);
  d.delta_rc = operator_norm(r_tilde * lu_c.inverse());
  d.delta_r2 = operator_norm(r_tilde);
  return d;
}

double MixingEnsemble::matrix_norm_r(const Eigen::MatrixXd& m) const {
  return operator_norm(R_tilde * m * R_tilde_inv);
}

double MixingEnsemble::matrix_norm_c(const Eigen::MatrixXd& m) const {
  return operator_norm(C_tilde * m * C_tilde_inv);
}

MixingEnsemble build_mixing_ensemble(const DirectedGraph& gR, const DirectedGraph& gC,
                                     double eta, double gamma, double slack) {
  Assumption3Report rep = assumption3_holds(gR, gC);
  if (!rep.holds)
    throw AssumptionViolationError("build_mixing_ensemble: " + rep.message);

  MixingEnsemble mix;
  mix.graph_r = gR;
  mix.graph_c = gC;
  mix.eta = eta;
  mix.gamma = gamma;
  mix.slack = slack;
  mix.R = build_pull_matrix(gR);
  mix.C = build_push_matrix(gC);
  mix.R_eta = lazy_blend(mix.R, eta);
  mix.C_gamma = lazy_blend(mix.C, gamma);

  PerronPair p = perron_vectors(mix.R, mix.C);
  mix.u = std::move(p.u);
  mix.v = std::move(p.v);

  ContractionTransform tr =
      contraction_transform(mix.R_eta, mix.u, ContractionSide::Row, slack);
  ContractionTransform tc =
      contraction_transform(mix.C_gamma, mix.v, ContractionSide::Column, slack);
  mix.R_tilde = std::move(tr.t);
  mix.R_tilde_inv = std::move(tr.t_inv);
  mix.C_tilde = std::move(tc.t);
  mix.C_tilde_inv = std::move(tc.t_inv);
  mix.tau_R = tr.tau;
  mix.tau_C = tc.tau;
  mix.deltas = equivalence_constants(mix.R_tilde, mix.C_tilde);
  return mix;
}

MixingEnsemble build_mixing_ensemble(const DirectedGraph& g, double eta, double gamma,
                                     double slack) {
  return build_mixing_ensemble(g, g, eta, gamma, slack);
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
  std::ostringstream os;
  os.precision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ",";
      os << m(i, j);
    }
    os << "\n";
  }
  return os.str();
}

std::string ensemble_summary_json(const MixingEnsemble& mix) {
  nlohmann::ordered_json j;
  j["n"] = mix.size();
  j["eta"] = mix.eta;
  j["gamma"] = mix.gamma;
  j["slack"] = mix.slack;
  j["tau_R"] = mix.tau_R;
  j["tau_C"] = mix.tau_C;
  j["u"] = std::vector<double>(mix.u.data(), mix.u.data() + mix.u.size());
  j["v"] = std::vector<double>(mix.v.data(), mix.v.data() + mix.v.size());
  j["delta_CR"] = mix.deltas.delta_cr;
  j["delta_C2"] = mix.deltas.delta_c2;
  j["delta_RC"] = mix.deltas.delta_rc;
  j["delta_R2"] = mix.deltas.delta_r2;
  return j.dump(2);
}

}  // namespace rpp
