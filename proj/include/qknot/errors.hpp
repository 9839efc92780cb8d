#pragma once

#include <stdexcept>
#include <string>

namespace qknot {

struct error : std::runtime_error {
  explicit error(const std::string& m) : std::runtime_error(m) {}
};

#define QKNOT_ERROR(name)                                        \
  struct name : error {                                          \
    explicit name(const std::string& m = #name) : error(m) {}    \
  }

QKNOT_ERROR(zero_constant_term);
QKNOT_ERROR(negative_n);
QKNOT_ERROR(unsupported_weight);
QKNOT_ERROR(non_convergent);
QKNOT_ERROR(truncation_unstable);
QKNOT_ERROR(unknown_identity);
QKNOT_ERROR(unsupported_knot);
QKNOT_ERROR(on_unit_circle);
QKNOT_ERROR(slow_convergence);
QKNOT_ERROR(eval_domain_error);
QKNOT_ERROR(quadrature_not_converged);
QKNOT_ERROR(insufficient_coefficients);
QKNOT_ERROR(sector_unsupported);
QKNOT_ERROR(singular_matrix);
QKNOT_ERROR(pi_residue);
QKNOT_ERROR(branch_error);
QKNOT_ERROR(non_integral);
QKNOT_ERROR(no_stored_data);
QKNOT_ERROR(not_coprime);
QKNOT_ERROR(pole_hit);
QKNOT_ERROR(pole_at_gamma_inverse_infinity);
QKNOT_ERROR(root_finding_failed);
QKNOT_ERROR(strip_degenerate);
QKNOT_ERROR(cut_violation);
QKNOT_ERROR(unknown_suite);

#undef QKNOT_ERROR

}  // namespace qknot
