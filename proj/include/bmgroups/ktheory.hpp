#pragma once

// Shift group C = coker(I - M1, I - M2), the K-groups of the associated
// rank-2 Cuntz-Krieger algebra, and the order of the unit class in C.

#include <stdexcept>
#include <string>

#include "bmgroups/tilingshift.hpp"
#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

enum class BoundCheck { exact_rho, rho_or_half, violated };

std::string to_string(BoundCheck b);

struct KTheoryReport {
  AbelianGroup C;
  AbelianGroup K0;
  AbelianGroup K1;
  Integer identity_class_order = 1;
  Integer rho = 1;
  BoundCheck bound_check = BoundCheck::violated;
};

/// Raised when an internal consistency check fails (never on validated data).
class KTheoryInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The mn x 2mn block matrix (I - M1 | I - M2).
IntMatrix shift_relation_matrix(TransitionMatrices const& tm);

AbelianGroup shift_group(TransitionMatrices const& tm);

/// Also checks that the transposed blocks give the same cokernel.
/// Throws KTheoryInconsistency.
KTheoryReport k_groups(BMDatum const& datum, TransitionMatrices const& tm);

/// Order of the all-ones vector in C. Throws KTheoryInconsistency if infinite.
Integer identity_class_order(TransitionMatrices const& tm);

struct OrderBound {
  Integer rho;
  Integer k;          // 2 rho
  Integer phi_order;  // order of mn in Z/k
  Integer measured;
  BoundCheck verdict = BoundCheck::violated;
};

OrderBound order_bound_check(BMDatum const& datum, Integer const& measured);

/// Z^{2ab} + (Z/(b-1))^a + (Z/(a-1))^b + Z/rho, with identity order rho.
/// Throws std::invalid_argument unless alpha, beta >= 2.
KTheoryReport free_product_closed_form(int alpha, int beta);

}  // namespace bmg
