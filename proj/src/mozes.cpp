#include "bmgroups/mozes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bmg {

LipschitzQuaternion operator*(LipschitzQuaternion const& x, LipschitzQuaternion const& y) noexcept {
  return {
      x.a0 * y.a0 - x.a1 * y.a1 - x.a2 * y.a2 - x.a3 * y.a3,
      x.a0 * y.a1 + x.a1 * y.a0 + x.a2 * y.a3 - x.a3 * y.a2,
      x.a0 * y.a2 - x.a1 * y.a3 + x.a2 * y.a0 + x.a3 * y.a1,
      x.a0 * y.a3 + x.a1 * y.a2 - x.a2 * y.a1 + x.a3 * y.a0,
  };
}

bool is_prime(long long p) noexcept {
  if (p < 2) {
    return false;
  }
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

namespace {

  void check_prime(long long p) {
    if (!is_prime(p) || p % 4 != 1) {
      throw std::invalid_argument(std::to_string(p) + " is not a prime congruent to 1 mod 4");
    }
  }

  long long isqrt(long long v) {
    long long r = 0;
    while ((r + 1) * (r + 1) <= v) {
      ++r;
    }
    return r;
  }

  // Representative of {q, -q}: first nonzero component positive.
  LipschitzQuaternion up_to_sign(LipschitzQuaternion const& q) {
    for (long long c : {q.a0, q.a1, q.a2, q.a3}) {
      if (c != 0) {
        return c > 0 ? q : -q;
      }
    }
    return q;
  }

}  // namespace

MozesGeneratorSet generator_set(long long p, int first) {
  check_prime(p);
  MozesGeneratorSet set;
  set.p = p;
  long long const r = isqrt(p);
  for (long long a0 = 1; a0 <= r; a0 += 2) {
    for (long long a1 = -r; a1 <= r; ++a1) {
      for (long long a2 = -r; a2 <= r; ++a2) {
        for (long long a3 = -r; a3 <= r; ++a3) {
          LipschitzQuaternion const q{a0, a1, a2, a3};
          if (a1 % 2 == 0 && a2 % 2 == 0 && a3 % 2 == 0 && q.norm() == p) {
            set.elements.push_back(q);
          }
        }
      }
    }
  }
  std::sort(set.elements.begin(), set.elements.end());
  if (set.elements.size() != static_cast<std::size_t>(p + 1)) {
    throw std::logic_error("generator_set(" + std::to_string(p) + "): found "
                           + std::to_string(set.elements.size()) + " elements");
  }
  set.letters.assign(set.elements.size(), 0);
  int next = first;
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    if (set.letters[i] != 0) {
      continue;
    }
    auto const it = std::lower_bound(set.elements.begin(), set.elements.end(),
                                     set.elements[i].conjugate());
    auto const j = static_cast<std::size_t>(it - set.elements.begin());
    if (it == set.elements.end() || j == i) {
      throw std::logic_error("generator_set: conjugation is not a free involution");
    }
    set.letters[i] = next;
    set.letters[j] = -next;
    ++next;
  }
  return set;
}

VHDatum mozes_datum(long long p, long long l) {
  if (p == l) {
    throw std::invalid_argument("mozes_datum: p and l must differ");
  }
  auto const A = generator_set(p, 1);
  int const alpha = static_cast<int>((p + 1) / 2);
  auto const B = generator_set(l, alpha + 1);

  std::map<LipschitzQuaternion, std::vector<std::pair<Letter, Letter>>> products;
  for (std::size_t j = 0; j < B.size(); ++j) {
    for (std::size_t i = 0; i < A.size(); ++i) {
      products[up_to_sign(B.elements[j] * A.elements[i])].emplace_back(B.letters[j], A.letters[i]);
    }
  }

  std::vector<RelationTuple> tuples;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      auto const it = products.find(up_to_sign(A.elements[i] * B.elements[j]));
      std::size_t const hits = it == products.end() ? 0 : it->second.size();
      if (hits != 1) {
        throw std::logic_error("mozes_datum: " + std::to_string(hits) + " factorisations for ("
                               + std::to_string(A.letters[i]) + ","
                               + std::to_string(B.letters[j]) + ")");
      }
      auto const [b2, a2] = it->second.front();
      tuples.push_back({A.letters[i], B.letters[j], b2, a2});
    }
  }
  std::sort(tuples.begin(), tuples.end());

  VHDatum d{alpha, static_cast<int>((l + 1) / 2), {}};
  for (auto const& sq : squares_of(tuples)) {
    d.relators.push_back(sq.representative());
  }
  std::sort(d.relators.begin(), d.relators.end());
  return d;
}

int mozes_r(long long p, long long l) {
  check_prime(p);
  check_prime(l);
  return static_cast<int>(std::gcd(std::gcd((p - 1) / 4, (l - 1) / 4), 6LL));
}

AbelianGroup conjectured_h1(long long p, long long l) {
  std::vector<Integer> orders;
  switch (mozes_r(p, l)) {
    case 1: orders = {2, 4, 4, 4}; break;
    case 2: orders = {2, 2, 2, 8, 8}; break;
    case 3: orders = {2, 3, 4, 4, 4}; break;
    case 6: orders = {2, 2, 2, 3, 8, 8}; break;
    default: throw std::logic_error("conjectured_h1: r outside {1,2,3,6}");
  }
  return AbelianGroup::from_cyclic_orders(0, orders);
}

long long rho_mozes(long long p, long long l) {
  return std::gcd(p - 1, l - 1) / 2;
}

}  // namespace bmg
