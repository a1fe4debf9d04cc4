#pragma once

// Reference computations used only by the tests. They are deliberately
// naive and share no code with the library algorithms.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "bmgroups/tilingshift.hpp"
#include "bmgroups/zmatrix.hpp"

namespace oracle {

using bmg::IntMatrix;
using bmg::Integer;

// Fraction-free Gaussian elimination.
inline Integer bareiss_det(IntMatrix M) {
  std::size_t const n = M.rows();
  if (n == 0) {
    return 1;
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) {
        ++p;
      }
      if (p == n) {
        return 0;
      }
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        M(i, j) = v / prev;
      }
    }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

inline std::size_t rational_rank(IntMatrix const& A) {
  std::vector<std::vector<mpq_class>> M(A.rows(), std::vector<mpq_class>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      M[i][j] = A(i, j);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < A.cols() && rank < A.rows(); ++c) {
    std::size_t p = rank;
    while (p < A.rows() && M[p][c] == 0) {
      ++p;
    }
    if (p == A.rows()) {
      continue;
    }
    std::swap(M[p], M[rank]);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i != rank && M[i][c] != 0) {
        mpq_class const f = M[i][c] / M[rank][c];
        for (std::size_t j = c; j < A.cols(); ++j) {
          M[i][j] -= f * M[rank][j];
        }
      }
    }
    ++rank;
  }
  return rank;
}

// Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}.
inline std::vector<Integer> determinantal_divisors(IntMatrix const& A) {
  std::size_t const r = std::min(A.rows(), A.cols());
  std::vector<Integer> D{Integer(1)};
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    std::vector<bool> rs(A.rows(), false), cs(A.cols(), false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        IntMatrix sub(k, k);
        std::size_t si = 0;
        for (std::size_t i = 0; i < A.rows(); ++i) {
          if (!rs[i]) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < A.cols(); ++j) {
            if (!cs[j]) continue;
            sub(si, sj++) = A(i, j);
          }
          ++si;
        }
        Integer const d = bareiss_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    D.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= r; ++k) {
    out.push_back(D[k] == 0 ? Integer(0) : Integer(D[k] / D[k - 1]));
  }
  return out;
}

// Basis of the column lattice of A in echelon form, by gcd column operations.
inline std::vector<std::vector<Integer>> lattice_basis(IntMatrix const& A) {
  std::vector<std::vector<Integer>> cols(A.cols(), std::vector<Integer>(A.rows()));
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t i = 0; i < A.rows(); ++i) {
      cols[j][i] = A(i, j);
    }
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t row = 0; row < A.rows(); ++row) {
    while (true) {
      std::size_t nz = 0;
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j][row] != 0) {
          ++nz;
          if (!best || abs(cols[j][row]) < abs(cols[*best][row])) best = j;
        }
      }
      if (nz <= 1) {
        if (best) {
          basis.push_back(cols[*best]);
          cols.erase(cols.begin() + static_cast<long>(*best));
        }
        break;
      }
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j == *best || cols[j][row] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), cols[j][row].get_mpz_t(), cols[*best][row].get_mpz_t());
        for (std::size_t i = 0; i < A.rows(); ++i) {
          cols[j][i] -= q * cols[*best][i];
        }
      }
    }
  }
  return basis;
}

inline bool in_lattice(std::vector<std::vector<Integer>> const& basis, std::vector<Integer> v) {
  for (auto const& b : basis) {
    std::size_t lead = 0;
    while (b[lead] == 0) ++lead;
    if (v[lead] % b[lead] != 0) {
      return false;
    }
    Integer const q = v[lead] / b[lead];
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] -= q * b[i];
    }
  }
  return std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; });
}

// Order of v + im(A) by trying k = 1, 2, ...; infinite when [A | v] has
// larger rational rank than A.
inline std::optional<Integer> brute_order(IntMatrix const& A, std::vector<Integer> const& v,
                                          long limit = 100000) {
  IntMatrix Av(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) Av(i, j) = A(i, j);
    Av(i, A.cols()) = v[i];
  }
  if (rational_rank(Av) > rational_rank(A)) {
    return std::nullopt;
  }
  auto const basis = lattice_basis(A);
  for (long k = 1; k <= limit; ++k) {
    std::vector<Integer> kv(v);
    for (auto& x : kv) x *= k;
    if (in_lattice(basis, kv)) {
      return Integer(k);
    }
  }
  return Integer(-1);
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix M(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) M(i, j) = d(rng);
  }
  return M;
}

// Counts valid words of the given shape by filling cells one at a time.
inline std::size_t brute_word_count(bmg::TransitionMatrices const& tm, int w, int h) {
  std::vector<std::size_t> cells(static_cast<std::size_t>((w + 1) * (h + 1)));
  std::size_t count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    int const x = static_cast<int>(k) % (w + 1);
    int const y = static_cast<int>(k) / (w + 1);
    for (std::size_t t = 0; t < tm.size(); ++t) {
      if (x > 0 && tm.M1(t, cells[k - 1]) == 0) continue;
      if (y > 0 && tm.M2(t, cells[k - static_cast<std::size_t>(w + 1)]) == 0) continue;
      cells[k] = t;
      fill(k + 1);
    }
  };
  fill(0);
  return count;
}

}  // namespace oracle
