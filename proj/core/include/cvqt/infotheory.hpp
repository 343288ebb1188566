#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cvqt {

struct JointDistribution {
  Eigen::MatrixXd probabilities;

  explicit JointDistribution(Eigen::MatrixXd p);
  std::vector<double> marginal_a() const;  // row sums
  std::vector<double> marginal_b() const;  // column sums
};

// Entropies are in nats; discord is reported in bits.
double shannon_entropy(const std::vector<double>& p);
double kl_divergence(const std::vector<double>& p, const std::vector<double>& q);
double mutual_information(const JointDistribution& j);
double discord_tmss(double r);
double discord_asymptote(double r);

}  // namespace cvqt
