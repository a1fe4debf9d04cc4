#include "bmgroups/ktheory.hpp"

#include <numeric>
#include <vector>

namespace bmg {

std::string to_string(BoundCheck b) {
  switch (b) {
    case BoundCheck::exact_rho: return "exact-rho";
    case BoundCheck::rho_or_half: return "rho-or-half";
    case BoundCheck::violated: return "violated";
  }
  return "violated";
}

namespace {

  IntMatrix relation_blocks(BinaryMatrix const& M1, BinaryMatrix const& M2) {
    std::size_t const N = M1.size();
    IntMatrix A(N, 2 * N);
    for (std::size_t s = 0; s < N; ++s) {
      for (std::size_t r = 0; r < N; ++r) {
        A(s, r) = (s == r ? 1 : 0) - M1(s, r);
        A(s, N + r) = (s == r ? 1 : 0) - M2(s, r);
      }
    }
    return A;
  }

  AbelianGroup doubled(AbelianGroup const& C) {
    return C + AbelianGroup(C.rank(), {});
  }

}  // namespace

IntMatrix shift_relation_matrix(TransitionMatrices const& tm) {
  return relation_blocks(tm.M1, tm.M2);
}

AbelianGroup shift_group(TransitionMatrices const& tm) {
  return cokernel(shift_relation_matrix(tm));
}

Integer identity_class_order(TransitionMatrices const& tm) {
  std::vector<Integer> ones(tm.size(), Integer(1));
  auto order = element_order_in_cokernel(shift_relation_matrix(tm), ones);
  if (!order) {
    throw KTheoryInconsistency("identity class has infinite order");
  }
  return *order;
}

OrderBound order_bound_check(BMDatum const& datum, Integer const& measured) {
  OrderBound b;
  b.rho = datum.rho();
  b.k = 2 * b.rho;
  Integer const mn = Integer(datum.m()) * datum.n();
  Integer g;
  mpz_gcd(g.get_mpz_t(), b.k.get_mpz_t(), mn.get_mpz_t());
  b.phi_order = b.k / g;
  b.measured = measured;
  bool const odd = mpz_odd_p(b.rho.get_mpz_t()) != 0;
  if (odd) {
    b.verdict = measured == b.rho ? BoundCheck::exact_rho : BoundCheck::violated;
  } else if (measured == b.rho || 2 * measured == b.rho) {
    b.verdict = BoundCheck::rho_or_half;
  }
  return b;
}

KTheoryReport k_groups(BMDatum const& datum, TransitionMatrices const& tm) {
  std::vector<Integer> ones(tm.size(), Integer(1));
  auto const both = cokernel_with_element(shift_relation_matrix(tm), ones);
  if (!both.order) {
    throw KTheoryInconsistency("identity class has infinite order");
  }
  auto const transposed = cokernel(relation_blocks(tm.M1.transposed(), tm.M2.transposed()));
  if (!(transposed == both.group)) {
    throw KTheoryInconsistency("coker of transposed blocks differs: " + transposed.to_string()
                               + " vs " + both.group.to_string());
  }
  KTheoryReport rep;
  rep.C = both.group;
  rep.K0 = doubled(rep.C);
  rep.K1 = rep.K0;
  rep.identity_class_order = *both.order;
  auto const bound = order_bound_check(datum, rep.identity_class_order);
  rep.rho = bound.rho;
  rep.bound_check = bound.verdict;
  return rep;
}

KTheoryReport free_product_closed_form(int alpha, int beta) {
  if (alpha < 2 || beta < 2) {
    throw std::invalid_argument("free_product_closed_form: alpha, beta >= 2 required");
  }
  int const rho = std::gcd(alpha - 1, beta - 1);
  std::vector<Integer> orders;
  orders.insert(orders.end(), static_cast<std::size_t>(alpha), Integer(beta - 1));
  orders.insert(orders.end(), static_cast<std::size_t>(beta), Integer(alpha - 1));
  orders.emplace_back(rho);
  KTheoryReport rep;
  rep.K0 = AbelianGroup::from_cyclic_orders(static_cast<std::size_t>(2 * alpha * beta), orders);
  rep.K1 = rep.K0;
  // K0 = C + Z^rank C
  rep.C = AbelianGroup(static_cast<std::size_t>(alpha * beta), rep.K0.invariant_factors());
  rep.identity_class_order = rho;
  rep.rho = rho;
  rep.bound_check = rho % 2 == 1 ? BoundCheck::exact_rho : BoundCheck::rho_or_half;
  return rep;
}

}  // namespace bmg
