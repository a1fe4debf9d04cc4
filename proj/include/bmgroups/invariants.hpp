#pragma once

// Homological invariants read off the presentation.

#include "bmgroups/tilingshift.hpp"
#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

struct InvariantsReport {
  AbelianGroup H1;
  long chi = 0;
  long h2_rank = 0;
  bool rank_conjecture_holds = false;    // rank C == rank H2
  bool identity_order_equals_rho = false;
};

/// (alpha + beta) x (#relators) matrix; relator ab = b'a' gives the column
/// a + b - b' - a' with x and x^-1 sharing a coordinate.
IntMatrix abelianized_relator_matrix(VHDatum const& datum);

AbelianGroup abelianization(VHDatum const& datum);

long euler_characteristic(VHDatum const& datum);

/// chi - 1 + rank H1. Throws std::logic_error if negative.
long h2_rank(VHDatum const& datum);
long h2_rank(VHDatum const& datum, AbelianGroup const& H1);

/// Records the two conjectures as booleans; never throws on disagreement.
InvariantsReport conjecture_checks(BMDatum const& datum, TransitionMatrices const& tm);
InvariantsReport conjecture_checks(BMDatum const& datum, AbelianGroup const& C,
                                   Integer const& identity_order);

}  // namespace bmg
