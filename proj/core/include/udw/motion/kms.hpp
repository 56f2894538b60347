#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace udw::motion {

/// Stationary two-point function of the proper-time difference, evaluable at
/// complex arguments.
using StationaryWightman = std::function<std::complex<double>(std::complex<double>)>;

/// Relative KMS defect at temperature T:
///   max_k |W(tau_k - i/T) - W(-tau_k)| / max_k |W(-tau_k)|.
/// Zero means W(tau - i/T, tau') = W(tau', tau) on the samples.
///
/// When `strip_halfwidth` is given, shifts 1/T beyond it raise DomainError;
/// otherwise W is taken to be continued meromorphically.
double kms_defect(const StationaryWightman& wightman, double temperature,
                  const std::vector<double>& sample_taus,
                  std::optional<double> strip_halfwidth = std::nullopt);

}  // namespace udw::motion
