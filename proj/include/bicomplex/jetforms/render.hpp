#pragma once

#include <string>

#include "bicomplex/jetforms/form.hpp"

namespace bicomplex::jetforms {

/// "u w[u] ^ eta - 1/2 dt ^ w[v_x]". Top-degree horizontal terms are shown
/// against eta (omega factors first) when their coefficient is divisible by
/// rho; everything else is shown in the plain dx basis.
std::string to_text(const Form& w, const Chart& chart);

/// Same layout with \omega^{u}_{x}, \eta and \wedge.
std::string to_latex(const Form& w, const Chart& chart);

}  // namespace bicomplex::jetforms
