#pragma once

// The 2-dimensional subshift of a BM datum: tiles are the relation tuples,
// M1 encodes horizontal and M2 vertical adjacency.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

using TileIndex = std::size_t;

/// Square {0,1}-matrix, entry (s, r) is the transition r -> s.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  explicit BinaryMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::uint8_t operator()(std::size_t s, std::size_t r) const { return bits_[s * n_ + r]; }
  void set(std::size_t s, std::size_t r, bool value) { bits_[s * n_ + r] = value ? 1 : 0; }

  bool is_zero() const noexcept;
  std::vector<std::size_t> row_sums() const;
  std::vector<std::size_t> col_sums() const;
  BinaryMatrix transposed() const;

  /// Integer product (entries may exceed 1).
  std::vector<std::uint32_t> product_counts(BinaryMatrix const& other) const;

  /// Plain text: one row per line, entries 0/1 separated by spaces.
  std::string to_dense_text() const;
  /// One "s r" line per nonzero entry, row-major.
  std::string to_pairs_text() const;

  friend bool operator==(BinaryMatrix const&, BinaryMatrix const&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// The tile alphabet: every tuple of R in the pinned order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<RelationTuple> tiles);

  std::size_t size() const noexcept { return tiles_.size(); }
  RelationTuple const& operator[](TileIndex i) const { return tiles_[i]; }
  std::vector<RelationTuple> const& tiles() const noexcept { return tiles_; }
  /// Throws std::out_of_range for tuples outside the alphabet.
  TileIndex index_of(RelationTuple const& t) const;

 private:
  std::vector<RelationTuple> tiles_;
};

struct TransitionMatrices {
  int m = 0;  // horizontal degree
  int n = 0;  // vertical degree
  Alphabet alphabet;
  BinaryMatrix M1;
  BinaryMatrix M2;

  std::size_t size() const noexcept { return M1.size(); }
  BinaryMatrix const& matrix(int direction) const { return direction == 1 ? M1 : M2; }
};

/// M1(s,r) = 1 iff s.b' = r.b and s.a != r.a^-1 (s right of r);
/// M2(s,r) = 1 iff s.a = r.a' and s.b' != r.b'^-1 (s above r).
TransitionMatrices build_transition_matrices(BMDatum const& datum);

/// Rotation by pi: (a,b,b',a') -> (a'^-1, b'^-1, b^-1, a^-1).
RelationTuple rotate_tile(RelationTuple const& r) noexcept;
/// The permutation TileIndex -> TileIndex induced by rotate_tile.
std::vector<TileIndex> rotation_permutation(TransitionMatrices const& tm);

struct Cell {
  int x = 0;  // horizontal, direction 1
  int y = 0;  // vertical, direction 2
  friend bool operator==(Cell const&, Cell const&) = default;
};

/// A rectangular configuration of tiles on [0, width] x [0, height].
class Word {
 public:
  Word() = default;
  Word(int width, int height);
  explicit Word(TileIndex single) : Word(0, 0) { set({0, 0}, single); }

  /// Shape (width, height); a word of shape (0,0) holds a single tile.
  std::pair<int, int> shape() const noexcept { return {width_, height_}; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  bool contains(Cell c) const noexcept {
    return c.x >= 0 && c.y >= 0 && c.x <= width_ && c.y <= height_;
  }

  TileIndex at(Cell c) const { return cells_[index(c)]; }
  void set(Cell c, TileIndex t) { cells_[index(c)] = t; }

  friend bool operator==(Word const&, Word const&) = default;

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_ + 1)
           + static_cast<std::size_t>(c.x);
  }
  int width_ = 0;
  int height_ = 0;
  std::vector<TileIndex> cells_;
};

/// True iff every adjacent pair satisfies M_j(w(l + e_j), w(l)) = 1.
bool is_valid_word(TransitionMatrices const& tm, Word const& w);

enum class Side { right, left, top, bottom };

class IncompatibleTile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grows w by one column (Side::right/left) or row (Side::top/bottom). The
/// seed tile is placed next to the boundary cell at `offset` along that side;
/// the rest of the new line is forced by unique completion of 2x2 blocks.
/// Cells of the result keep their relative positions; growing left or bottom
/// shifts old cells by +1 in x or y. Throws IncompatibleTile.
Word extend_word(TransitionMatrices const& tm, Word const& w, Side side, int offset,
                 TileIndex tile);

/// Tiles t with the given matrix entry relative to `from`: successors
/// (M_j(t, from) = 1) or predecessors (M_j(from, t) = 1).
std::vector<TileIndex> successors(TransitionMatrices const& tm, int direction, TileIndex from);
std::vector<TileIndex> predecessors(TransitionMatrices const& tm, int direction, TileIndex to);

/// A word together with cells l and l + p carrying different tiles.
struct PeriodWitness {
  std::pair<int, int> period;
  Word word;
  Cell base;

  /// Re-checks validity of the word and w(base) != w(base + p).
  bool verify(TransitionMatrices const& tm) const;
};

/// Builds a word that is not p-periodic by walking a shortest lattice path
/// from l to l + p and choosing the last tile away from w(l).
/// Throws std::invalid_argument for p = (0,0), IncompatibleTile if the
/// matrices admit no such choice.
PeriodWitness h3_witness(TransitionMatrices const& tm, std::pair<int, int> period);

struct HReport {
  bool h0 = false;
  bool h1a = false;
  bool h1b = false;
  bool h2 = false;
  int h3_bound = 0;
  std::vector<PeriodWitness> h3_witnesses;
  std::vector<std::pair<int, int>> h3_failures;

  std::vector<std::size_t> m1_row_sums, m1_col_sums, m2_row_sums, m2_col_sums;
  /// Row and column sums of M1 all m - 1, of M2 all n - 1.
  bool degree_sums_ok = false;

  bool h3() const noexcept { return h3_failures.empty() && !h3_witnesses.empty(); }
  bool all_pass() const noexcept { return h0 && h1a && h1b && h2 && h3(); }
};

/// Checks (H0)-(H2) exactly and (H3) for every nonzero period with
/// |p_i| <= period_bound by constructing and re-verifying a witness.
HReport check_h_conditions(TransitionMatrices const& tm, int period_bound = 3);

/// Strong connectivity of the graph with edges r -> s whenever some M_i(s,r) = 1.
bool is_irreducible(TransitionMatrices const& tm);

/// |W_shape| = sum_r (paths of M1 of length w from r) * (paths of M2 of
/// length h from r). A word is fixed by its bottom row and left column.
Integer count_words(TransitionMatrices const& tm, std::pair<int, int> shape);
/// Words of the given shape with w(0,0) = start.
Integer count_words_from(TransitionMatrices const& tm, std::pair<int, int> shape,
                         TileIndex start);

}  // namespace bmg
