#pragma once

#include <string>
#include <vector>

namespace equibound {

/// A finite set of M >= 2 distinct hypothesis labels.
struct HypothesisSet {
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(labels.size()); }

  /// Builds {"H0", ..., "H<m-1>"}.
  static HypothesisSet indexed(int m);

  /// Throws std::invalid_argument if M < 2 or labels repeat.
  void validate() const;
};

/// Prior PMF over M hypotheses. Entries are nonnegative and sum to 1
/// within 1e-12.
struct Prior {
  std::vector<double> p;

  int size() const { return static_cast<int>(p.size()); }

  static Prior uniform(int m);

  void validate() const;
};

/// H(Theta) = -sum_m p_m ln p_m, in nats. Exact, with 0 ln 0 = 0.
double prior_entropy(const Prior& prior);

}  // namespace equibound
