#include "rpp/objective.hpp"

#include <random>

#include "nlohmann/json.hpp"
#include "rpp/errors.hpp"
#include "rpp/rng.hpp"

namespace rpp {

Eigen::MatrixXd Objective::gradient_matrix(const Eigen::MatrixXd& x) const {
  if (x.rows() != agents() || x.cols() != dim())
    throw InvalidParameterError("gradient_matrix: state shape mismatch");
  Eigen::MatrixXd g(x.rows(), x.cols());
  for (int i = 0; i < agents(); ++i)
    g.row(i) = local_gradient(i, x.row(i).transpose()).transpose();
  return g;
}

RidgeProblem::RidgeProblem(Eigen::MatrixXd features, Eigen::VectorXd outputs,
                           double rho, std::uint64_t seed)
    : features_(std::move(features)), outputs_(std::move(outputs)), rho_(rho),
      seed_(seed) {
  if (rho_ <= 0.0) throw InvalidParameterError("RidgeProblem: rho must be > 0");
  if (features_.rows() < 1 || features_.cols() < 1)
    throw InvalidParameterError("RidgeProblem: need at least one agent and one dimension");
  if (outputs_.size() != features_.rows())
    throw InvalidParameterError("RidgeProblem: outputs length must equal agent count");
  x_star_ = analytic_optimum(*this);
}

double RidgeProblem::local_value(int i, const Eigen::VectorXd& x) const {
  if (i < 0 || i >= agents()) throw InvalidParameterError("local_value: agent out of range");
  const double r = features_.row(i).dot(x) - outputs_(i);
  return r * r + rho_ * x.squaredNorm();
}

Eigen::VectorXd RidgeProblem::local_gradient(int i, const Eigen::VectorXd& x) const {
  if (i < 0 || i >= agents())
    throw InvalidParameterError("local_gradient: agent out of range");
  const double r = features_.row(i).dot(x) - outputs_(i);
  return 2.0 * r * features_.row(i).transpose() + 2.0 * rho_ * x;
}

double RidgeProblem::lipschitz() const {
  return 2.0 * (features_.rowwise().squaredNorm().maxCoeff() + rho_);
}

std::string RidgeProblem::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = agents();
  j["p"] = dim();
  j["rho"] = rho_;
  j["seed"] = seed_;
  std::vector<std::vector<double>> feats(agents());
  for (int i = 0; i < agents(); ++i)
    feats[i].assign(features_.row(i).begin(), features_.row(i).end());
  j["features"] = feats;
  j["outputs"] = std::vector<double>(outputs_.begin(), outputs_.end());
  return j.dump(2);
}

RidgeProblem RidgeProblem::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int n = j.at("n").get<int>();
  const int p = j.at("p").get<int>();
  Eigen::MatrixXd feats(n, p);
  const auto& rows = j.at("features");
  if (static_cast<int>(rows.size()) != n)
    throw InvalidParameterError("RidgeProblem::from_json: feature row count mismatch");
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) feats(i, k) = rows.at(i).at(k).get<double>();
  Eigen::VectorXd outs(n);
  for (int i = 0; i < n; ++i) outs(i) = j.at("outputs").at(i).get<double>();
  return RidgeProblem(std::move(feats), std::move(outs), j.at("rho").get<double>(),
                      j.at("seed").get<std::uint64_t>());
}

RidgeProblem make_ridge(int n, int p, double rho, std::uint64_t seed) {
  if (n < 1 || p < 1)
    throw InvalidParameterError("make_ridge: n and p must be >= 1");
  if (rho <= 0.0) throw InvalidParameterError("make_ridge: rho must be > 0");

  std::mt19937_64 rng = make_engine(seed);
  std::uniform_real_distribution<double> feat(-1.0, 1.0);
  std::normal_distribution<double> noise(0.0, 5.0);

  Eigen::MatrixXd features(n, p);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) features(i, k) = feat(rng);

  Eigen::VectorXd outputs(n);
  for (int i = 0; i < n; ++i) {
    const double level = n > 1 ? 10.0 * i / (n - 1.0) : 0.0;
    outputs(i) = level * features.row(i).sum() + noise(rng);
  }
  return RidgeProblem(std::move(features), std::move(outputs), rho, seed);
}

Eigen::RowVectorXd analytic_optimum(const RidgeProblem& prob) {
  const int n = prob.agents();
  const Eigen::MatrixXd& u = prob.features();
  Eigen::MatrixXd gram = u.transpose() * u;
  gram.diagonal().array() += n * prob.rho();
  Eigen::VectorXd rhs = u.transpose() * prob.outputs();
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success)
    throw NumericalFailureError("analytic_optimum: normal equations solve failed");
  Eigen::VectorXd x = ldlt.solve(rhs);
  if (!x.allFinite())
    throw NumericalFailureError("analytic_optimum: non-finite solution");
  return x.transpose();
}

}  // namespace rpp
