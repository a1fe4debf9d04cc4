#include "bmgroups/invariants.hpp"

#include <cstdlib>
#include <stdexcept>

#include "bmgroups/ktheory.hpp"

namespace bmg {

IntMatrix abelianized_relator_matrix(VHDatum const& datum) {
  std::size_t const gens = static_cast<std::size_t>(datum.alpha + datum.beta);
  IntMatrix R(gens, datum.relators.size());
  auto add = [&](Letter x, int sign, std::size_t col) {
    std::size_t const row = static_cast<std::size_t>(std::abs(x) - 1);
    if (row >= gens) {
      throw std::invalid_argument("abelianization: letter out of range");
    }
    R(row, col) += x > 0 ? sign : -sign;
  };
  for (std::size_t j = 0; j < datum.relators.size(); ++j) {
    auto const& t = datum.relators[j];
    add(t.a, 1, j);
    add(t.b, 1, j);
    add(t.b2, -1, j);
    add(t.a2, -1, j);
  }
  return R;
}

AbelianGroup abelianization(VHDatum const& datum) {
  return cokernel(abelianized_relator_matrix(datum));
}

long euler_characteristic(VHDatum const& datum) {
  return static_cast<long>(datum.alpha - 1) * static_cast<long>(datum.beta - 1);
}

long h2_rank(VHDatum const& datum, AbelianGroup const& H1) {
  long const r = euler_characteristic(datum) - 1 + static_cast<long>(H1.rank());
  if (r < 0) {
    throw std::logic_error("h2_rank: negative rank " + std::to_string(r));
  }
  return r;
}

long h2_rank(VHDatum const& datum) {
  return h2_rank(datum, abelianization(datum));
}

InvariantsReport conjecture_checks(BMDatum const& datum, AbelianGroup const& C,
                                   Integer const& identity_order) {
  VHDatum const raw = datum.datum();
  InvariantsReport rep;
  rep.H1 = abelianization(raw);
  rep.chi = euler_characteristic(raw);
  rep.h2_rank = h2_rank(raw, rep.H1);
  rep.rank_conjecture_holds = static_cast<long>(C.rank()) == rep.h2_rank;
  rep.identity_order_equals_rho = identity_order == datum.rho();
  return rep;
}

InvariantsReport conjecture_checks(BMDatum const& datum, TransitionMatrices const& tm) {
  auto const k = k_groups(datum, tm);
  return conjecture_checks(datum, k.C, k.identity_class_order);
}

}  // namespace bmg
