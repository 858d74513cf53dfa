#pragma once

#include <complex>

namespace schurproc {

/// Li2(z) = sum_{n>=1} z^n / n^2, analytically continued with a cut along
/// (1, +inf). Throws on the cut.
std::complex<double> li2(std::complex<double> z);

/// dil(w) = Li2(1 - w): the convention in which dil(1-z) = sum z^n/n^2.
std::complex<double> dil(std::complex<double> w);

}  // namespace schurproc
