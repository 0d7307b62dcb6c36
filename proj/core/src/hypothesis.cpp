#include "equibound/hypothesis.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace equibound {

HypothesisSet HypothesisSet::indexed(int m) {
  HypothesisSet set;
  set.labels.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) set.labels.push_back("H" + std::to_string(i));
  return set;
}

void HypothesisSet::validate() const {
  if (size() < 2) throw std::invalid_argument("HypothesisSet: need M >= 2");
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (static_cast<int>(seen.size()) != size())
    throw std::invalid_argument("HypothesisSet: labels must be distinct");
}

Prior Prior::uniform(int m) {
  if (m < 2) throw std::invalid_argument("Prior::uniform: need M >= 2");
  return Prior{std::vector<double>(static_cast<std::size_t>(m), 1.0 / m)};
}

void Prior::validate() const {
  if (size() < 2) throw std::invalid_argument("Prior: need M >= 2");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw std::invalid_argument("Prior: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("Prior: entries must sum to 1");
}

double prior_entropy(const Prior& prior) {
  double h = 0.0;
  for (double v : prior.p)
    if (v > 0.0) h -= v * std::log(v);
  return h;
}

}  // namespace equibound
