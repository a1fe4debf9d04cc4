#pragma once

// Quaternion lattices of Mozes type as VH-data.

#include <array>
#include <vector>

#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

struct LipschitzQuaternion {
  long long a0 = 0;
  long long a1 = 0;
  long long a2 = 0;
  long long a3 = 0;

  long long norm() const noexcept { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
  LipschitzQuaternion conjugate() const noexcept { return {a0, -a1, -a2, -a3}; }
  LipschitzQuaternion operator-() const noexcept { return {-a0, -a1, -a2, -a3}; }

  friend LipschitzQuaternion operator*(LipschitzQuaternion const& x,
                                       LipschitzQuaternion const& y) noexcept;
  friend bool operator==(LipschitzQuaternion const&, LipschitzQuaternion const&) = default;
  friend auto operator<=>(LipschitzQuaternion const&, LipschitzQuaternion const&) = default;
};

bool is_prime(long long p) noexcept;

struct MozesGeneratorSet {
  long long p = 0;
  /// Sorted by (a0, a1, a2, a3).
  std::vector<LipschitzQuaternion> elements;
  /// letter[i] is the signed generator number of elements[i]; conjugates
  /// carry opposite signs.
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Quaternions of norm p with a0 > 0 odd and a1, a2, a3 even, numbered
/// +1, -1, +2, ... (plus `first - 1`) in sorted order.
/// Throws std::invalid_argument unless p is a prime = 1 mod 4; std::logic_error
/// if the count is not p + 1.
MozesGeneratorSet generator_set(long long p, int first = 1);

/// A from norm p, B from norm l; (a,b,b',a') whenever ab = +-b'a'.
/// Throws std::invalid_argument on bad primes, std::logic_error if a pair
/// (a,b) has no or several factorisations.
VHDatum mozes_datum(long long p, long long l);

/// gcd((p-1)/4, (l-1)/4, 6)
int mozes_r(long long p, long long l);
AbelianGroup conjectured_h1(long long p, long long l);
/// gcd(p - 1, l - 1) / 2
long long rho_mozes(long long p, long long l);

}  // namespace bmg
