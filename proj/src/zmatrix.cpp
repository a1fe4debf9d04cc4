#include "bmgroups/zmatrix.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bmg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("IntMatrix: ragged initializer");
    }
    for (long x : row) {
      data_.emplace_back(x);
    }
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    I(i, i) = 1;
  }
  return I;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      T(j, i) = (*this)(i, j);
    }
  }
  return T;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && sgn((*this)(i, j)) != 0) {
        return false;
      }
    }
  }
  return true;
}

IntMatrix operator*(IntMatrix const& x, IntMatrix const& y) {
  if (x.cols_ != y.rows_) {
    throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  }
  IntMatrix z(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      Integer const& xik = x(i, k);
      if (sgn(xik) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y.cols_; ++j) {
        mpz_addmul(z(i, j).get_mpz_t(), xik.get_mpz_t(), y(k, j).get_mpz_t());
      }
    }
  }
  return z;
}

bool operator==(IntMatrix const& x, IntMatrix const& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    std::swap((*this)(i, c), (*this)(j, c));
  }
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    std::swap((*this)(r, i), (*this)(r, j));
  }
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Integer const& factor) {
  if (sgn(factor) == 0) {
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    Integer const& s = (*this)(src, c);
    if (sgn(s) != 0) {
      mpz_addmul((*this)(dst, c).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
    }
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Integer const& factor) {
  if (sgn(factor) == 0) {
    return;
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer const& s = (*this)(r, src);
    if (sgn(s) != 0) {
      mpz_addmul((*this)(r, dst).get_mpz_t(), factor.get_mpz_t(), s.get_mpz_t());
    }
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) {
    mpz_neg((*this)(i, c).get_mpz_t(), (*this)(i, c).get_mpz_t());
  }
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out << (j == 0 ? "" : " ") << (*this)(i, j);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  std::size_t const k = std::min(D.rows(), D.cols());
  d.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    d.push_back(D(i, i));
  }
  return d;
}

namespace {

  bool abs_less(Integer const& x, Integer const& y) {
    return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()) < 0;
  }

  // Runs the elimination in place on D, optionally accumulating U (row
  // operations) and V (column operations).
  class SmithReducer {
   public:
    SmithReducer(IntMatrix& D, IntMatrix* U, IntMatrix* V) : D_(D), U_(U), V_(V) {}

    void run() {
      std::size_t const limit = std::min(D_.rows(), D_.cols());
      std::size_t t = 0;
      for (; t < limit; ++t) {
        if (!select_pivot(t)) {
          break;
        }
        clear_cross(t);
      }
      rank_ = t;
      for (std::size_t i = 0; i < rank_; ++i) {
        if (sgn(D_(i, i)) < 0) {
          D_.negate_row(i);
          if (U_ != nullptr) {
            U_->negate_row(i);
          }
        }
      }
      fix_divisibility();
    }

   private:
    // Smallest nonzero |entry| in D[t.., t..], row-major ties, moved to (t,t).
    bool select_pivot(std::size_t t) {
      std::size_t best_i = 0;
      std::size_t best_j = 0;
      Integer const* best = nullptr;
      for (std::size_t i = t; i < D_.rows() && !is_unit(best); ++i) {
        for (std::size_t j = t; j < D_.cols(); ++j) {
          Integer const& x = D_(i, j);
          if (sgn(x) != 0 && (best == nullptr || abs_less(x, *best))) {
            best = &x;
            best_i = i;
            best_j = j;
            if (is_unit(best)) {
              break;
            }
          }
        }
      }
      if (best == nullptr) {
        return false;
      }
      swap_rows(t, best_i);
      swap_cols(t, best_j);
      return true;
    }

    static bool is_unit(Integer const* x) {
      return x != nullptr && mpz_cmpabs_ui(x->get_mpz_t(), 1) == 0;
    }

    void clear_cross(std::size_t t) {
      Integer q;
      while (true) {
        bool residue = false;
        for (std::size_t i = t + 1; i < D_.rows(); ++i) {
          if (sgn(D_(i, t)) == 0) {
            continue;
          }
          mpz_fdiv_q(q.get_mpz_t(), D_(i, t).get_mpz_t(), D_(t, t).get_mpz_t());
          q = -q;
          add_row(i, t, q);
          residue = residue || sgn(D_(i, t)) != 0;
        }
        for (std::size_t j = t + 1; j < D_.cols(); ++j) {
          if (sgn(D_(t, j)) == 0) {
            continue;
          }
          mpz_fdiv_q(q.get_mpz_t(), D_(t, j).get_mpz_t(), D_(t, t).get_mpz_t());
          q = -q;
          add_col(j, t, q);
          residue = residue || sgn(D_(t, j)) != 0;
        }
        if (!residue) {
          return;
        }
        // Remainders are smaller than the pivot; bring the smallest one in.
        std::size_t bi = t;
        std::size_t bj = t;
        for (std::size_t i = t + 1; i < D_.rows(); ++i) {
          if (sgn(D_(i, t)) != 0 && abs_less(D_(i, t), D_(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < D_.cols(); ++j) {
          if (sgn(D_(t, j)) != 0 && abs_less(D_(t, j), D_(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
      }
    }

    // Turns the nonzero diagonal into a divisibility chain with the unimodular
    // 2x2 step diag(a, b) -> diag(gcd, lcm).
    void fix_divisibility() {
      Integer g, s, c, a_g, b_g;
      for (std::size_t i = 0; i < rank_; ++i) {
        for (std::size_t j = i + 1; j < rank_; ++j) {
          Integer const a = D_(i, i);
          Integer const b = D_(j, j);
          if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0) {
            continue;
          }
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t(),
                     b.get_mpz_t());
          mpz_divexact(a_g.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
          mpz_divexact(b_g.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
          D_(i, i) = g;
          D_(j, j) = a_g * b;
          if (U_ != nullptr) {
            // [row_i; row_j] <- [[s, c], [-b/g, a/g]] [row_i; row_j]
            IntMatrix& U = *U_;
            for (std::size_t col = 0; col < U.cols(); ++col) {
              Integer const ui = U(i, col);
              Integer const uj = U(j, col);
              U(i, col) = s * ui + c * uj;
              U(j, col) = a_g * uj - b_g * ui;
            }
          }
          if (V_ != nullptr) {
            // [col_i, col_j] <- [col_i, col_j] [[1, -c b/g], [1, s a/g]]
            IntMatrix& V = *V_;
            for (std::size_t row = 0; row < V.rows(); ++row) {
              Integer const vi = V(row, i);
              Integer const vj = V(row, j);
              V(row, i) = vi + vj;
              V(row, j) = s * a_g * vj - c * b_g * vi;
            }
          }
        }
      }
    }

    void swap_rows(std::size_t i, std::size_t j) {
      D_.swap_rows(i, j);
      if (U_ != nullptr) {
        U_->swap_rows(i, j);
      }
    }
    void swap_cols(std::size_t i, std::size_t j) {
      D_.swap_cols(i, j);
      if (V_ != nullptr) {
        V_->swap_cols(i, j);
      }
    }
    void add_row(std::size_t dst, std::size_t src, Integer const& f) {
      D_.add_row_multiple(dst, src, f);
      if (U_ != nullptr) {
        U_->add_row_multiple(dst, src, f);
      }
    }
    void add_col(std::size_t dst, std::size_t src, Integer const& f) {
      D_.add_col_multiple(dst, src, f);
      if (V_ != nullptr) {
        V_->add_col_multiple(dst, src, f);
      }
    }

    IntMatrix& D_;
    IntMatrix* U_;
    IntMatrix* V_;
    std::size_t rank_ = 0;
  };

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix const& A) {
  SmithDecomposition result{IntMatrix::identity(A.rows()), A,
                            IntMatrix::identity(A.cols())};
  SmithReducer(result.D, &result.U, &result.V).run();
  return result;
}

std::vector<Integer> smith_diagonal(IntMatrix const& A) {
  IntMatrix D = A;
  SmithReducer(D, nullptr, nullptr).run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) {
    d.push_back(D(i, i));
  }
  return d;
}

namespace {
  AbelianGroup group_from_diagonal(std::size_t rows, std::vector<Integer> const& diag) {
    std::size_t nonzero = 0;
    std::vector<Integer> factors;
    for (auto const& d : diag) {
      if (sgn(d) != 0) {
        ++nonzero;
        if (d > 1) {
          factors.push_back(d);
        }
      }
    }
    return AbelianGroup(rows - nonzero, std::move(factors));
  }
}  // namespace

AbelianGroup cokernel(IntMatrix const& A) {
  if (A.cols() == 0) {
    return AbelianGroup(A.rows(), {});
  }
  return group_from_diagonal(A.rows(), smith_diagonal(A));
}

CokernelWithElement cokernel_with_element(IntMatrix const& A, std::span<Integer const> v) {
  if (v.size() != A.rows()) {
    throw std::invalid_argument("element_order_in_cokernel: vector length "
                                + std::to_string(v.size()) + " != rows "
                                + std::to_string(A.rows()));
  }
  // U maps im(A) onto im(D), so v + im(A) corresponds to Uv + im(D).
  IntMatrix U = IntMatrix::identity(A.rows());
  IntMatrix D = A;
  SmithReducer(D, &U, nullptr).run();
  std::size_t const k = std::min(D.rows(), D.cols());
  std::vector<Integer> diag;
  diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    diag.push_back(D(i, i));
  }
  CokernelWithElement out{group_from_diagonal(A.rows(), diag), Integer(1)};
  Integer coord, g, part;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    coord = 0;
    for (std::size_t j = 0; j < A.rows(); ++j) {
      if (sgn(U(i, j)) != 0 && sgn(v[j]) != 0) {
        mpz_addmul(coord.get_mpz_t(), U(i, j).get_mpz_t(), v[j].get_mpz_t());
      }
    }
    if (sgn(coord) == 0) {
      continue;
    }
    Integer const d = i < k ? D(i, i) : Integer(0);
    if (sgn(d) == 0) {
      out.order.reset();
      return out;
    }
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), coord.get_mpz_t());
    mpz_divexact(part.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    mpz_lcm(out.order->get_mpz_t(), out.order->get_mpz_t(), part.get_mpz_t());
  }
  return out;
}

std::optional<Integer> element_order_in_cokernel(IntMatrix const& A,
                                                 std::span<Integer const> v) {
  return cokernel_with_element(A, v).order;
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  if (n <= 0) {
    throw std::invalid_argument("factorize: expected a positive integer");
  }
  std::vector<std::pair<Integer, unsigned>> result;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
      n /= p;
      ++e;
    }
    if (e > 0) {
      result.emplace_back(p, e);
    }
  }
  if (n > 1) {
    result.emplace_back(n, 1);
  }
  return result;
}

AbelianGroup::AbelianGroup(std::size_t rank, std::vector<Integer> factors)
    : rank_(rank), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) {
      throw std::invalid_argument("AbelianGroup: invariant factors must exceed 1");
    }
    if (i > 0 && mpz_divisible_p(factors_[i].get_mpz_t(), factors_[i - 1].get_mpz_t()) == 0) {
      throw std::invalid_argument("AbelianGroup: factors must form a divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::from_cyclic_orders(std::size_t rank,
                                              std::vector<Integer> const& orders) {
  // prime -> powers of that prime
  std::map<Integer, std::vector<Integer>> by_prime;
  for (auto const& raw : orders) {
    Integer const n = abs(raw);
    if (n == 0) {
      ++rank;
      continue;
    }
    for (auto const& [p, e] : factorize(n)) {
      Integer pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
      by_prime[p].push_back(pk);
    }
  }
  std::size_t len = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    len = std::max(len, powers.size());
  }
  // The largest invariant factor collects the largest power of each prime.
  std::vector<Integer> factors(len, Integer(1));
  for (auto const& [p, powers] : by_prime) {
    for (std::size_t i = 0; i < powers.size(); ++i) {
      factors[len - 1 - i] *= powers[i];
    }
  }
  return AbelianGroup(rank, std::move(factors));
}

AbelianGroup AbelianGroup::from_table_notation(std::string const& text) {
  auto fail = [&text]() -> AbelianGroup {
    throw std::invalid_argument("malformed group notation: '" + text + "'");
  };
  std::string s;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) {
      s.push_back(ch);
    }
  }
  auto const open = s.find('[');
  if (open == std::string::npos || open == 0 || s.back() != ']') {
    return fail();
  }
  std::size_t rank = 0;
  try {
    rank = std::stoul(s.substr(0, open));
  } catch (std::exception const&) {
    return fail();
  }
  std::vector<Integer> orders;
  std::string const inner = s.substr(open + 1, s.size() - open - 2);
  std::size_t pos = 0;
  while (pos < inner.size()) {
    std::size_t next = inner.find(',', pos);
    if (next == std::string::npos) {
      next = inner.size();
    }
    std::string item = inner.substr(pos, next - pos);
    unsigned long reps = 1;
    if (!item.empty() && item.front() == '(') {
      auto close = item.find(')');
      if (close == std::string::npos) {
        return fail();
      }
      reps = std::stoul(item.substr(1, close - 1));
      item = item.substr(close + 1);
    }
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      return fail();
    }
    for (unsigned long r = 0; r < reps; ++r) {
      orders.emplace_back(item);
    }
    pos = next + 1;
  }
  return from_cyclic_orders(rank, orders);
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (auto const& f : factors_) {
    n *= f;
  }
  return n;
}

AbelianGroup AbelianGroup::operator+(AbelianGroup const& other) const {
  std::vector<Integer> orders = factors_;
  orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(rank_ + other.rank_, orders);
}

std::string AbelianGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank_ == 1) {
    parts.emplace_back("Z");
  } else if (rank_ > 1) {
    parts.push_back("Z^" + std::to_string(rank_));
  }
  for (auto const& f : factors_) {
    parts.push_back("Z/" + f.get_str());
  }
  if (parts.empty()) {
    return "0";
  }
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += " + " + parts[i];
  }
  return out;
}

std::string AbelianGroup::table_notation() const {
  auto const primary = primary_decomposition(*this);
  std::string out = std::to_string(rank_) + "[";
  bool first = true;
  for (std::size_t i = 0; i < primary.size();) {
    std::size_t j = i;
    while (j < primary.size() && primary[j] == primary[i]) {
      ++j;
    }
    out += first ? "" : ",";
    first = false;
    if (j - i > 1) {
      out += "(" + std::to_string(j - i) + ")";
    }
    out += primary[i].value.get_str();
    i = j;
  }
  return out + "]";
}

std::vector<PrimePower> primary_decomposition(AbelianGroup const& G) {
  std::vector<PrimePower> result;
  for (auto const& f : G.invariant_factors()) {
    for (auto const& [p, e] : factorize(f)) {
      PrimePower pp{p, 0};
      mpz_pow_ui(pp.value.get_mpz_t(), p.get_mpz_t(), e);
      result.push_back(std::move(pp));
    }
  }
  std::sort(result.begin(), result.end(), [](PrimePower const& x, PrimePower const& y) {
    return x.prime != y.prime ? x.prime < y.prime : x.value < y.value;
  });
  return result;
}

}  // namespace bmg
