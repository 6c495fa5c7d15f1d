#include "rpp/algorithms.hpp"

#include "rpp/errors.hpp"

namespace rpp {

Method parse_method(const std::string& name) {
  if (name == "r-push-pull") return Method::RPushPull;
  if (name == "push-pull") return Method::PushPull;
  if (name == "push-diging") return Method::PushDiging;
  throw InvalidParameterError("unknown algorithm '" + name +
                              "' (expected r-push-pull | push-pull | push-diging)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::RPushPull: return "r-push-pull";
    case Method::PushPull: return "push-pull";
    case Method::PushDiging: return "push-diging";
  }
  throw InvalidParameterError("unknown method enum value");
}

namespace {

void check_init(const Eigen::MatrixXd& x0, const Eigen::MatrixXd& t0, double alpha,
                const char* what) {
  if (x0.rows() != t0.rows() || x0.cols() != t0.cols())
    throw InvalidParameterError(std::string(what) + ": iterate/tracker shape mismatch");
  if (x0.rows() < 1 || x0.cols() < 1)
    throw InvalidParameterError(std::string(what) + ": empty state");
  if (!(alpha > 0.0))
    throw InvalidParameterError(std::string(what) + ": stepsize must be > 0");
}

void check_dims(const Eigen::MatrixXd& x, const MixingEnsemble& mix,
                const Objective& prob, const char* what) {
  if (x.rows() != mix.size() || x.rows() != prob.agents() || x.cols() != prob.dim())
    throw InvalidParameterError(std::string(what) +
                                ": state/ensemble/objective dimensions disagree");
}

void check_finite(const Eigen::MatrixXd& x, const Eigen::MatrixXd& t, long k,
                  const char* what) {
  if (!x.allFinite() || !t.allFinite())
    throw TrialAbortError(std::string(what) + ": non-finite state at iteration " +
                              std::to_string(k),
                          k);
}

}  // namespace

RPushPullState rpushpull_init(Eigen::MatrixXd x0, Eigen::MatrixXd s0, double alpha) {
  check_init(x0, s0, alpha, "rpushpull_init");
  RPushPullState s;
  s.X = std::move(x0);
  s.S = std::move(s0);
  s.alpha = alpha;
  return s;
}

PushPullState pushpull_init(Eigen::MatrixXd x0, Eigen::MatrixXd y0, double alpha) {
  check_init(x0, y0, alpha, "pushpull_init");
  PushPullState s;
  s.X = std::move(x0);
  s.Y = std::move(y0);
  s.alpha = alpha;
  return s;
}

PushDigingState pushdiging_init(Eigen::MatrixXd x0, double alpha, const Objective& prob) {
  if (!(alpha > 0.0))
    throw InvalidParameterError("pushdiging_init: stepsize must be > 0");
  if (x0.rows() != prob.agents() || x0.cols() != prob.dim())
    throw InvalidParameterError("pushdiging_init: iterate shape mismatch");
  PushDigingState s;
  s.W = x0;
  s.X = std::move(x0);
  s.z = Eigen::VectorXd::Ones(s.X.rows());
  s.grad = prob.gradient_matrix(s.X);
  s.Y = s.grad;
  s.alpha = alpha;
  return s;
}

void rpushpull_step(RPushPullState& s, const MixingEnsemble& mix, const Objective& prob,
                    const NoiseChannel& channel, std::mt19937_64& rng) {
  check_dims(s.X, mix, prob, "rpushpull_step");
  const auto [eps, xi] = sample_exchange_noise(mix, channel, prob.dim(), rng);

  Eigen::MatrixXd grad = prob.gradient_matrix(s.X);
  Eigen::MatrixXd s_next = mix.C_gamma * s.S + grad;
  if (!channel.silent()) s_next += mix.gamma * eps;
  Eigen::MatrixXd y = s_next - s.S;
  Eigen::MatrixXd x_next = mix.R_eta * s.X - s.alpha * y;
  if (!channel.silent()) x_next += mix.eta * xi;

  check_finite(x_next, s_next, s.k, "rpushpull_step");
  s.last_grad_colsum = grad.colwise().sum();
  s.last_y = std::move(y);
  s.has_lookahead = true;
  s.X = std::move(x_next);
  s.S = std::move(s_next);
  ++s.k;
}

void pushpull_step(PushPullState& s, const MixingEnsemble& mix, const Objective& prob,
                   const NoiseChannel& channel, std::mt19937_64& rng) {
  check_dims(s.X, mix, prob, "pushpull_step");
  const auto [eps, xi] = sample_exchange_noise(mix, channel, prob.dim(), rng);

  if (s.grad.size() == 0) s.grad = prob.gradient_matrix(s.X);
  Eigen::MatrixXd x_next = mix.R_eta * s.X - s.alpha * s.Y;
  if (!channel.silent()) x_next += mix.eta * xi;
  Eigen::MatrixXd grad_next = prob.gradient_matrix(x_next);
  Eigen::MatrixXd y_next = mix.C_gamma * s.Y + (grad_next - s.grad);
  if (!channel.silent()) y_next += mix.gamma * eps;

  check_finite(x_next, y_next, s.k, "pushpull_step");
  s.X = std::move(x_next);
  s.Y = std::move(y_next);
  s.grad = std::move(grad_next);
  ++s.k;
}

void pushdiging_step(PushDigingState& s, const MixingEnsemble& mix, const Objective& prob,
                     const NoiseChannel& channel, std::mt19937_64& rng) {
  check_dims(s.X, mix, prob, "pushdiging_step");
  constexpr double kWeightFloor = 1e-9;
  const int p = prob.dim();

  // Three push exchanges per round: z, W - alpha*Y, Y (in that draw order).
  Eigen::MatrixXd ez, ew, ey;
  if (!channel.silent()) {
    ez = push_noise_aggregate(mix.graph_c, channel, 1, rng);
    ew = push_noise_aggregate(mix.graph_c, channel, p, rng);
    ey = push_noise_aggregate(mix.graph_c, channel, p, rng);
  }

  Eigen::VectorXd z_next = mix.C_gamma * s.z;
  if (!channel.silent()) z_next += mix.gamma * ez.col(0);
  if ((z_next.array() < kWeightFloor).any())
    throw TrialAbortError("pushdiging_step: push-sum weight underflow at iteration " +
                              std::to_string(s.k),
                          s.k);

  Eigen::MatrixXd w_next = mix.C_gamma * (s.W - s.alpha * s.Y);
  if (!channel.silent()) w_next += mix.gamma * ew;
  Eigen::MatrixXd x_next = z_next.cwiseInverse().asDiagonal() * w_next;

  if (s.grad.size() == 0) s.grad = prob.gradient_matrix(s.X);
  Eigen::MatrixXd grad_next = prob.gradient_matrix(x_next);
  Eigen::MatrixXd y_next = mix.C_gamma * s.Y + (grad_next - s.grad);
  if (!channel.silent()) y_next += mix.gamma * ey;

  check_finite(x_next, y_next, s.k, "pushdiging_step");
  s.W = std::move(w_next);
  s.X = std::move(x_next);
  s.z = std::move(z_next);
  s.Y = std::move(y_next);
  s.grad = std::move(grad_next);
  ++s.k;
}

double tracking_residual(const RPushPullState& s) {
  if (!s.has_lookahead)
    throw PreconditionError("tracking_residual: no completed step to observe");
  return (s.last_y.colwise().sum() - s.last_grad_colsum).norm();
}

double tracking_residual(const PushPullState& s, const Objective& prob) {
  const Eigen::MatrixXd& grad = s.grad.size() != 0 ? s.grad : prob.gradient_matrix(s.X);
  return (s.Y.colwise().sum() - grad.colwise().sum()).norm();
}

}  // namespace rpp
