#pragma once

// Exact integer matrices, Smith normal form and finitely generated abelian
// groups. Everything here works over GMP integers; nothing overflows.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bmg {

using Integer = mpz_class;

/// Dense rows x cols matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Integer const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(IntMatrix const& x, IntMatrix const& y);
  friend bool operator==(IntMatrix const& x, IntMatrix const& y);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, Integer const& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, Integer const& factor);
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * A * V == D with U, V unimodular and D in Smith normal form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d_1 | d_2 | ... (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
};

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k, d_i | d_{i+1},
/// every d_i > 1.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Throws std::invalid_argument unless `factors` is an ascending divisibility
  /// chain of integers > 1.
  AbelianGroup(std::size_t rank, std::vector<Integer> factors);

  /// Normalizes an arbitrary list of cyclic orders: 1 is dropped, 0 adds a
  /// free summand, the rest are regrouped into invariant factors.
  static AbelianGroup from_cyclic_orders(std::size_t rank,
                                         std::vector<Integer> const& orders);

  /// Parses "m[a,b,...]" with "(j)a" repetitions, e.g. "0[(2)2,4,8]".
  static AbelianGroup from_table_notation(std::string const& text);

  std::size_t rank() const noexcept { return rank_; }
  std::vector<Integer> const& invariant_factors() const noexcept { return factors_; }
  bool is_finite() const noexcept { return rank_ == 0; }
  bool is_trivial() const noexcept { return rank_ == 0 && factors_.empty(); }
  Integer torsion_order() const;

  /// Direct sum.
  AbelianGroup operator+(AbelianGroup const& other) const;

  /// "Z^2 + Z/4 + Z/4", or "0" for the trivial group.
  std::string to_string() const;
  /// Primary-decomposition rendering used by the classification tables.
  std::string table_notation() const;

  friend bool operator==(AbelianGroup const&, AbelianGroup const&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> factors_;
};

/// Prime power p^k together with its prime.
struct PrimePower {
  Integer prime;
  Integer value;
  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

/// Smith normal form with both transforms.
SmithDecomposition smith_normal_form(IntMatrix const& A);

/// Invariant diagonal only (no transforms tracked); same result as
/// smith_normal_form(A).diagonal().
std::vector<Integer> smith_diagonal(IntMatrix const& A);

/// Cokernel of A : Z^cols -> Z^rows.
AbelianGroup cokernel(IntMatrix const& A);

/// Order of v + im(A) in coker(A); std::nullopt means infinite order.
/// Throws std::invalid_argument if v.size() != A.rows().
std::optional<Integer> element_order_in_cokernel(IntMatrix const& A,
                                                 std::span<Integer const> v);

struct CokernelWithElement {
  AbelianGroup group;
  std::optional<Integer> order;  // nullopt: infinite
};

/// coker(A) and the order of v + im(A), from a single reduction.
CokernelWithElement cokernel_with_element(IntMatrix const& A, std::span<Integer const> v);

/// Prime powers of every invariant factor, sorted by prime then value.
std::vector<PrimePower> primary_decomposition(AbelianGroup const& G);

/// Prime factorisation by trial division; n > 0.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

}  // namespace bmg
