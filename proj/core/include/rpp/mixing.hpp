#pragma once

#include <Eigen/Dense>
#include <string>

#include "rpp/graph.hpp"

namespace rpp {

/// Row-stochastic pull weights: R_ij = 1/(in_degree(i)+1) for each in-neighbor
/// j != i, diagonal takes the remainder so rows sum to one exactly.
Eigen::MatrixXd build_pull_matrix(const DirectedGraph& g);

/// Column-stochastic push weights: C_li = 1/(out_degree(i)+1) for each
/// out-neighbor l != i, diagonal takes the remainder so columns sum to one.
Eigen::MatrixXd build_push_matrix(const DirectedGraph& g);

/// (1-theta)*I + theta*M for theta in (0,1]. Preserves row/column sums.
Eigen::MatrixXd lazy_blend(const Eigen::MatrixXd& m, double theta);

struct PerronPair {
  Eigen::VectorXd u;  // u^T R = u^T, u^T 1 = n, u >= 0
  Eigen::VectorXd v;  // C v = v,     1^T v = n, v >= 0
};

/// Power iteration on R^T and C (tolerance 1e-12 on the residual, capped at
/// 1e5 sweeps). Requires the graphs inducing R and C to satisfy the common
/// spanning-tree-root condition; also verifies u.v > 0.
PerronPair perron_vectors(const Eigen::MatrixXd& R, const Eigen::MatrixXd& C,
                          const Eigen::VectorXd& u0 = Eigen::VectorXd(),
                          const Eigen::VectorXd& v0 = Eigen::VectorXd());

enum class ContractionSide { Row, Column };

struct ContractionTransform {
  Eigen::MatrixXd t;      // invertible, smallest singular value >= 1
  Eigen::MatrixXd t_inv;
  double tau = 0.0;       // certified ||t W t^{-1}||_2, rho(W) < tau < 1
};

/// Builds a weighted 2-norm in which the consensus-error propagator
///   W = M_blend - 1 w^T / n   (row side)   or   M_blend - w 1^T / n  (column)
/// contracts with certified factor tau <= rho(W) + slack*(1-rho(W)).
/// The transform is the symmetric square root of the discrete-Lyapunov
/// solution P = sum_k (W/tau_t)^k^T (W/tau_t)^k, so P >= I and the returned
/// matrix automatically has smallest singular value >= 1.
ContractionTransform contraction_transform(const Eigen::MatrixXd& m_blend,
                                           const Eigen::VectorXd& w,
                                           ContractionSide side,
                                           double slack = 0.01);

struct EquivalenceConstants {
  double delta_cr = 0.0;  // ||x||_C <= delta_cr * ||x||_R
  double delta_c2 = 0.0;  // ||x||_C <= delta_c2 * ||x||_2
  double delta_rc = 0.0;  // ||x||_R <= delta_rc * ||x||_C
  double delta_r2 = 0.0;  // ||x||_R <= delta_r2 * ||x||_2
};

/// Operator 2-norms of C̃R̃^{-1}, C̃, R̃C̃^{-1}, R̃.
EquivalenceConstants equivalence_constants(const Eigen::MatrixXd& r_tilde,
                                           const Eigen::MatrixXd& c_tilde);

/// Everything the algorithms and the convergence calculator need about the
/// communication weights. Immutable after construction.
struct MixingEnsemble {
  DirectedGraph graph_r{1, {{0, 0}}};  // induces R (pull links)
  DirectedGraph graph_c{1, {{0, 0}}};  // induces C (push links)
  Eigen::MatrixXd R, C;
  double eta = 0.0, gamma = 0.0;
  Eigen::MatrixXd R_eta, C_gamma;
  Eigen::VectorXd u, v;
  Eigen::MatrixXd R_tilde, R_tilde_inv;
  Eigen::MatrixXd C_tilde, C_tilde_inv;
  double tau_R = 0.0, tau_C = 0.0;
  EquivalenceConstants deltas;
  double slack = 0.0;

  int size() const { return static_cast<int>(R.rows()); }

  /// Weighted norms of stacked per-agent states (n x p), column-wise 2-norms
  /// combined in l2; equals the Frobenius norm of the transformed matrix.
  double norm_r(const Eigen::MatrixXd& x) const { return (R_tilde * x).norm(); }
  double norm_c(const Eigen::MatrixXd& x) const { return (C_tilde * x).norm(); }

  /// Induced matrix norms ||T M T^{-1}||_2.
  double matrix_norm_r(const Eigen::MatrixXd& m) const;
  double matrix_norm_c(const Eigen::MatrixXd& m) const;
};

/// Builds R from gR, C from gC, blends them, and computes Perron vectors,
/// contraction transforms and norm-equivalence constants. Throws
/// AssumptionViolationError when the pair of graphs has no common root.
MixingEnsemble build_mixing_ensemble(const DirectedGraph& gR, const DirectedGraph& gC,
                                     double eta, double gamma, double slack = 0.01);
MixingEnsemble build_mixing_ensemble(const DirectedGraph& g, double eta, double gamma,
                                     double slack = 0.01);

/// Plain CSV (one row per line, comma separated), for debugging dumps.
std::string matrix_to_csv(const Eigen::MatrixXd& m);

/// JSON summary of the ensemble: tau_R, tau_C, u, v, deltas, slack.
std::string ensemble_summary_json(const MixingEnsemble& mix);

}  // namespace rpp
