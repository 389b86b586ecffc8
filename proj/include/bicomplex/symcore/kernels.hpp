#pragma once

#include <cstddef>

#include "bicomplex/symcore/poly.hpp"

/// Term-parallel kernels for the two hot polynomial operations. Each has a
/// serial reference and an OpenMP version; both return the same canonical
/// Poly, so results do not depend on the thread count.
namespace bicomplex::symcore::kernels {

Poly multiply_serial(const Poly& a, const Poly& b);
Poly multiply_parallel(const Poly& a, const Poly& b);

Poly total_derivative_serial(const Poly& p, std::size_t mu);
Poly total_derivative_parallel(const Poly& p, std::size_t mu);

/// Work size (term products or terms) above which the dispatching entry
/// points switch to the parallel kernels.
std::size_t parallel_threshold();
void set_parallel_threshold(std::size_t work);

Poly multiply(const Poly& a, const Poly& b);
Poly total_derivative(const Poly& p, std::size_t mu);

}  // namespace bicomplex::symcore::kernels
