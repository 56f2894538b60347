#pragma once

namespace udw::numerics {

/// Complementary error function.
///
/// |x| < 2 uses the positive-term series erf(x) = (2/sqrt(pi)) e^{-x^2} sum 2^n x^{2n+1}/(2n+1)!!;
/// x >= 2 uses the Laplace continued fraction evaluated with the modified Lentz method.
/// Negative arguments go through erfc(-x) = 2 - erfc(x).
/// Maximum relative error is below 1e-13 wherever the result is a normal double
/// (|x| <~ 26.5); past that the result is subnormal and loses relative precision.
double erfc(double x);

/// Error function, consistent with erfc: erf(x) = 1 - erfc(x).
double erf(double x);

}  // namespace udw::numerics
