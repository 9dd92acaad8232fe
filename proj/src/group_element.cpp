#include "lgen/group_element.hpp"

namespace lgen {

Eigen::MatrixXcd random_group_element(GaugeGroup group, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (group) {
    case GaugeGroup::SU3: return random_special_unitary<double>(3, rng);
    case GaugeGroup::SU2: return random_special_unitary<double>(2, rng);
    case GaugeGroup::U1: {
      Eigen::MatrixXcd phase(1, 1);
      phase(0, 0) = random_phase<double>(rng);
      return phase;
    }
  }
  return {};
}

}  // namespace lgen
