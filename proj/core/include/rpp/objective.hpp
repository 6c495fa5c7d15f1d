#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace rpp {

/// Per-agent objective contract: n smooth, strongly convex local costs.
class Objective {
public:
  virtual ~Objective() = default;

  virtual int agents() const = 0;
  virtual int dim() const = 0;

  virtual double local_value(int i, const Eigen::VectorXd& x) const = 0;
  virtual Eigen::VectorXd local_gradient(int i, const Eigen::VectorXd& x) const = 0;

  /// Strong-convexity modulus (common to all agents).
  virtual double mu() const = 0;
  /// Gradient Lipschitz modulus (worst case over agents).
  virtual double lipschitz() const = 0;

  /// Rows are the local gradients evaluated at the matching rows of x (n x p).
  Eigen::MatrixXd gradient_matrix(const Eigen::MatrixXd& x) const;
};

/// Per-agent scalar regression losses f_i(x) = (u_i.x - v_i)^2 + rho*||x||^2.
/// mu = 2*rho, L = 2*(max_i ||u_i||^2 + rho); the unique minimizer of the
/// average cost has the closed form (sum u_i u_i^T + n rho I)^{-1} sum u_i v_i.
class RidgeProblem final : public Objective {
public:
  /// Direct-data constructor; features is n x p, outputs has length n.
  RidgeProblem(Eigen::MatrixXd features, Eigen::VectorXd outputs, double rho,
               std::uint64_t seed = 0);

  int agents() const override { return static_cast<int>(features_.rows()); }
  int dim() const override { return static_cast<int>(features_.cols()); }

  double local_value(int i, const Eigen::VectorXd& x) const override;
  Eigen::VectorXd local_gradient(int i, const Eigen::VectorXd& x) const override;

  double mu() const override { return 2.0 * rho_; }
  double lipschitz() const override;

  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& outputs() const { return outputs_; }
  double rho() const { return rho_; }
  std::uint64_t seed() const { return seed_; }

  /// The stored closed-form minimizer of (1/n) sum f_i.
  const Eigen::RowVectorXd& optimum() const { return x_star_; }

  /// JSON round-trip carrying features, outputs, rho and the seed echo.
  std::string to_json() const;
  static RidgeProblem from_json(const std::string& text);

private:
  Eigen::MatrixXd features_;  // rows u_i
  Eigen::VectorXd outputs_;   // v_i
  double rho_;
  std::uint64_t seed_;
  Eigen::RowVectorXd x_star_;
};

/// Random instance: u_i ~ Uniform[-1,1]^p i.i.d., ground-truth parameters
/// evenly spaced on the diagonal segment from 0 to 10*ones, outputs
/// v_i = u_i . x~_i + eps_i with eps_i ~ Normal(0, 25). Deterministic per seed.
RidgeProblem make_ridge(int n, int p, double rho, std::uint64_t seed);

/// Closed-form minimizer, recomputed from the problem data.
Eigen::RowVectorXd analytic_optimum(const RidgeProblem& prob);

}  // namespace rpp
