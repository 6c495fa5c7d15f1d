#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>

#include "rpp/mixing.hpp"
#include "rpp/noise.hpp"
#include "rpp/objective.hpp"

namespace rpp {

enum class Method { RPushPull, PushPull, PushDiging };

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Robust push-pull state. The tracker S accumulates history gradients; the
/// effective direction y_k = S_{k+1} - S_k is cached after each step so the
/// gradient-tracking residual is observable without recomputation.
struct RPushPullState {
  Eigen::MatrixXd X, S;
  double alpha = 0.0;
  long k = 0;
  Eigen::MatrixXd last_y;                // S_k - S_{k-1}
  Eigen::RowVectorXd last_grad_colsum;   // 1^T grad F(X_{k-1})
  bool has_lookahead = false;
};

struct PushPullState {
  Eigen::MatrixXd X, Y;
  double alpha = 0.0;
  long k = 0;
  Eigen::MatrixXd grad;  // grad F(X) at the current iterate; empty until used
};

/// Push-sum gradient tracking. Iterates are the ratio X = W ./ z.
struct PushDigingState {
  Eigen::MatrixXd W, Y, X;
  Eigen::VectorXd z;
  double alpha = 0.0;
  long k = 0;
  Eigen::MatrixXd grad;
};

RPushPullState rpushpull_init(Eigen::MatrixXd x0, Eigen::MatrixXd s0, double alpha);
PushPullState pushpull_init(Eigen::MatrixXd x0, Eigen::MatrixXd y0, double alpha);
PushDigingState pushdiging_init(Eigen::MatrixXd x0, double alpha, const Objective& prob);

/// One synchronous round:
///   S+ = C_gamma S + gamma*eps + grad F(X)
///   X+ = R_eta X + eta*xi - alpha (S+ - S)
/// Draws one exchange-noise sample before touching the state.
void rpushpull_step(RPushPullState& s, const MixingEnsemble& mix, const Objective& prob,
                    const NoiseChannel& channel, std::mt19937_64& rng);

/// Baseline tracker exchange:
///   X+ = R_eta X + eta*xi - alpha Y
///   Y+ = C_gamma Y + grad F(X+) - grad F(X) + gamma*eps
void pushpull_step(PushPullState& s, const MixingEnsemble& mix, const Objective& prob,
                   const NoiseChannel& channel, std::mt19937_64& rng);

/// Push-sum gradient tracking baseline; every transmitted C-weighted quantity
/// (z, W - alpha Y, Y) picks up link noise. Aborts the trial when a push-sum
/// weight drops below 1e-9.
void pushdiging_step(PushDigingState& s, const MixingEnsemble& mix, const Objective& prob,
                     const NoiseChannel& channel, std::mt19937_64& rng);

/// || 1^T y_{k-1} - 1^T grad F(X_{k-1}) ||_2 from the cached lookahead; requires
/// at least one completed step.
double tracking_residual(const RPushPullState& s);

/// || 1^T Y_k - 1^T grad F(X_k) ||_2 at the current iterate.
double tracking_residual(const PushPullState& s, const Objective& prob);

}  // namespace rpp
