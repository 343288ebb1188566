#include "cvqt/infotheory.hpp"

#include <cmath>
#include <stdexcept>

namespace cvqt {

namespace {

void check_distribution(const std::vector<double>& p) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw std::invalid_argument("probabilities must be nonnegative and finite");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("probabilities must sum to 1");
}

double plogp(double p) {
  return p > 0.0 ? p * std::log(p) : 0.0;
}

}  // namespace

JointDistribution::JointDistribution(Eigen::MatrixXd p) : probabilities(std::move(p)) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probabilities.rows(); ++i)
    for (Eigen::Index j = 0; j < probabilities.cols(); ++j) {
      double x = probabilities(i, j);
      if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("JointDistribution: entries must be nonnegative");
      sum += x;
    }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("JointDistribution: entries must sum to 1");
}

std::vector<double> JointDistribution::marginal_a() const {
  std::vector<double> out(probabilities.rows());
  for (Eigen::Index i = 0; i < probabilities.rows(); ++i)
    out[i] = probabilities.row(i).sum();
  return out;
}

std::vector<double> JointDistribution::marginal_b() const {
  std::vector<double> out(probabilities.cols());
  for (Eigen::Index j = 0; j < probabilities.cols(); ++j)
    out[j] = probabilities.col(j).sum();
  return out;
}

double shannon_entropy(const std::vector<double>& p) {
  check_distribution(p);
  double s = 0.0;
  for (double x : p) s -= plogp(x);
  return s;
}

double kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  check_distribution(p);
  check_distribution(q);
  if (p.size() != q.size())
    throw std::invalid_argument("kl_divergence: size mismatch");
  double d = 0.0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] <= 0.0)
      throw std::invalid_argument("kl_divergence: q vanishes on the support of p");
    d += p[i] * std::log(p[i] / q[i]);
  }
  return d;
}

double mutual_information(const JointDistribution& j) {
  double sj = 0.0;
  for (Eigen::Index a = 0; a < j.probabilities.rows(); ++a)
    for (Eigen::Index b = 0; b < j.probabilities.cols(); ++b)
      sj -= plogp(j.probabilities(a, b));
  return shannon_entropy(j.marginal_a()) + shannon_entropy(j.marginal_b()) - sj;
}

double discord_tmss(double r) {
  if (r < 0.0) throw std::invalid_argument("discord_tmss: r must be >= 0");
  if (r == 0.0) return 0.0;
  double c = std::cosh(r) * std::cosh(r);
  double s = std::sinh(r) * std::sinh(r);
  if (s == 0.0) return c * std::log(c) / std::log(2.0);
  // c log c - s log s with s = c - 1; the direct difference loses ~8 digits
  // by r = 10, so pull out the common log and keep the remainder in log1p.
  double nats = -c * std::log1p(-1.0 / c) + std::log(s);
  return nats / std::log(2.0);
}

double discord_asymptote(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("discord_asymptote: r must be positive");
  double ln2 = std::log(2.0);
  return 2.0 * r / ln2 - 2.0 + 1.0 / ln2;
}

}  // namespace cvqt
