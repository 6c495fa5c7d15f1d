#include "rpp/noise.hpp"

#include <cmath>

#include "rpp/errors.hpp"

namespace rpp {

NoiseChannel make_noise_channel(double sigma_link2, const std::string& distribution) {
  if (sigma_link2 < 0.0)
    throw InvalidParameterError("noise channel: variance must be >= 0");
  if (distribution != "gaussian")
    throw InvalidParameterError("noise channel: unsupported distribution '" +
                                distribution + "'");
  return NoiseChannel{sigma_link2, distribution};
}

Eigen::MatrixXd push_noise_aggregate(const DirectedGraph& g, const NoiseChannel& channel,
                                     int cols, std::mt19937_64& rng) {
  const int n = g.size();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, cols);
  if (channel.silent()) return out;
  std::normal_distribution<double> link(0.0, std::sqrt(channel.sigma_link2));
  for (int i = 0; i < n; ++i)
    for (int j : g.in_neighbors(i)) {
      if (j == i) continue;
      for (int c = 0; c < cols; ++c) out(i, c) += link(rng);
    }
  return out;
}

Eigen::MatrixXd pull_noise_aggregate(const DirectedGraph& g,
                                     const Eigen::MatrixXd& pull_weights,
                                     const NoiseChannel& channel, int cols,
                                     std::mt19937_64& rng) {
  const int n = g.size();
  if (pull_weights.rows() != n || pull_weights.cols() != n)
    throw InvalidParameterError("pull_noise_aggregate: weight matrix size mismatch");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, cols);
  if (channel.silent()) return out;
  std::normal_distribution<double> link(0.0, std::sqrt(channel.sigma_link2));
  for (int i = 0; i < n; ++i)
    for (int j : g.in_neighbors(i)) {
      if (j == i) continue;
      const double w = pull_weights(i, j);
      for (int c = 0; c < cols; ++c) out(i, c) += w * link(rng);
    }
  return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_exchange_noise(
    const MixingEnsemble& mix, const NoiseChannel& channel, int cols,
    std::mt19937_64& rng) {
  Eigen::MatrixXd eps = push_noise_aggregate(mix.graph_c, channel, cols, rng);
  Eigen::MatrixXd xi = pull_noise_aggregate(mix.graph_r, mix.R, channel, cols, rng);
  return {std::move(eps), std::move(xi)};
}

NoiseVariances exchange_noise_variances(const DirectedGraph& g,
                                        const Eigen::MatrixXd& pull_weights,
                                        const NoiseChannel& channel, int cols) {
  NoiseVariances v;
  for (int i = 0; i < g.size(); ++i)
    for (int j : g.in_neighbors(i)) {
      if (j == i) continue;
      v.sigma_eps2 += channel.sigma_link2;
      v.sigma_xi2 += pull_weights(i, j) * pull_weights(i, j) * channel.sigma_link2;
    }
  v.sigma_eps2 *= cols;
  v.sigma_xi2 *= cols;
  return v;
}

}  // namespace rpp
