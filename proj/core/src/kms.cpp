#include "udw/motion/kms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "udw/errors.hpp"

namespace udw::motion {

double kms_defect(const StationaryWightman& wightman, double temperature,
                  const std::vector<double>& sample_taus, std::optional<double> strip_halfwidth) {
  if (!(temperature > 0.0)) throw InvalidArgument("kms_defect: temperature must be positive");
  if (sample_taus.empty()) throw InvalidArgument("kms_defect: no sample points");
  const double shift = std::isinf(temperature) ? 0.0 : 1.0 / temperature;
  if (strip_halfwidth && shift > *strip_halfwidth) {
    throw DomainError("kms_defect: shift 1/T = " + std::to_string(shift) +
                      " leaves the analyticity strip of half-width " +
                      std::to_string(*strip_halfwidth));
  }
  double worst = 0.0;
  double scale = 0.0;
  for (double tau : sample_taus) {
    const std::complex<double> shifted = wightman({tau, -shift});
    const std::complex<double> reversed = wightman({-tau, 0.0});
    if (!std::isfinite(std::abs(shifted)) || !std::isfinite(std::abs(reversed))) {
      throw DomainError("kms_defect: Wightman function not finite at tau = " +
                        std::to_string(tau));
    }
    worst = std::max(worst, std::abs(shifted - reversed));
    scale = std::max(scale, std::abs(reversed));
  }
  if (!(scale > 0.0)) throw DomainError("kms_defect: Wightman function vanishes on the samples");
  return worst / scale;
}

}  // namespace udw::motion
