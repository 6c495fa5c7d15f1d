#pragma once

#include <Eigen/Dense>
#include <random>
#include <string>
#include <utility>

#include "rpp/graph.hpp"
#include "rpp/mixing.hpp"

namespace rpp {

/// Zero-mean per-link corruption of transmitted values. Every directed link
/// adds independent noise to each scalar component it carries.
struct NoiseChannel {
  double sigma_link2 = 0.0;            // per-link per-component variance
  std::string distribution = "gaussian";

  bool silent() const { return sigma_link2 == 0.0; }
};

NoiseChannel make_noise_channel(double sigma_link2,
                                const std::string& distribution = "gaussian");

/// Noise collected by each receiver on a push exchange: the transmitted value
/// is already sender-weighted, so per-link draws aggregate unweighted,
///   out.row(i) = sum over in-neighbors j != i of nu_ij,  nu ~ N(0, sigma^2 I).
/// Draw order is fixed (receiver-major, neighbors ascending) for replay.
Eigen::MatrixXd push_noise_aggregate(const DirectedGraph& g, const NoiseChannel& channel,
                                     int cols, std::mt19937_64& rng);

/// Noise collected on a pull exchange: raw values are corrupted in transit and
/// weighted by the receiver, out.row(i) = sum_j R(i,j) * omega_ij.
Eigen::MatrixXd pull_noise_aggregate(const DirectedGraph& g, const Eigen::MatrixXd& pull_weights,
                                     const NoiseChannel& channel, int cols,
                                     std::mt19937_64& rng);

/// One round of exchange noise: (epsilon_k, xi_k), both n x p. The push side
/// aggregates over the ensemble's C-graph links, the pull side over the
/// R-graph links with the receiver's R weights applied. Self-loop terms are
/// noiseless. Draws push first, then pull.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> sample_exchange_noise(
    const MixingEnsemble& mix, const NoiseChannel& channel, int cols,
    std::mt19937_64& rng);

struct NoiseVariances {
  double sigma_eps2 = 0.0;  // E ||epsilon_k||_F^2
  double sigma_xi2 = 0.0;   // E ||xi_k||_F^2
};

/// Exact second moments of the aggregates above, summed over agents and
/// components; these are the variance bounds consumed by the theory module.
NoiseVariances exchange_noise_variances(const DirectedGraph& g,
                                        const Eigen::MatrixXd& pull_weights,
                                        const NoiseChannel& channel, int cols);

}  // namespace rpp
