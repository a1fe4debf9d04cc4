#pragma once

// All BM relation sets for given degrees, by exact cover of A x B with BM
// squares, and their reduction modulo relabelling of generators.

#include <cstddef>
#include <string>
#include <vector>

#include "bmgroups/vhdatum.hpp"
#include "bmgroups/zmatrix.hpp"

namespace bmg {

/// Every non-degenerate square with letters in A x B x B x A, sorted.
/// Throws std::invalid_argument unless m, n are even and >= 4.
std::vector<BMSquare> all_bm_squares(int m, int n);

struct CompatibilityGraph {
  int m = 0;
  int n = 0;
  std::vector<BMSquare> squares;
  /// For each square, the indices a_index * n + b_index of its (a,b) projections.
  std::vector<std::array<std::size_t, 4>> cells;
  std::vector<std::vector<bool>> adjacent;

  std::size_t size() const noexcept { return squares.size(); }
};

CompatibilityGraph compatibility_graph(int m, int n, std::vector<BMSquare> squares);

/// One datum per clique of alpha*beta pairwise compatible squares, each exactly once,
/// in backtracking order.
std::vector<VHDatum> enumerate_relation_sets(int m, int n);

struct EquivalenceMode {
  bool allow_side_swap = true;  // only has an effect when m == n

  static EquivalenceMode side_preserving() { return {false}; }
  static EquivalenceMode with_swap() { return {true}; }
  std::string name() const { return allow_side_swap ? "with-swap" : "side-preserving"; }
};

/// Throws std::invalid_argument for unknown names.
EquivalenceMode parse_mode(std::string const& name);

/// A relabelling of generators that respects inverses. With `swap` set the
/// images of A-letters are B-letters and conversely, so a tuple
/// (a,b,b',a') becomes (s(b'), s(a'), s(a), s(b)).
struct Relabelling {
  int offset = 0;  // alpha + beta
  std::vector<Letter> image;  // indexed by letter + offset
  bool swap = false;

  Letter operator()(Letter x) const { return image[static_cast<std::size_t>(x + offset)]; }
  RelationTuple operator()(RelationTuple const& t) const;
};

/// Signed permutations of A and of B, and when allowed and m == n, their
/// composites with the side exchange.
std::vector<Relabelling> symmetry_group(int alpha, int beta, EquivalenceMode mode);

using CanonicalKey = std::string;

/// Least sorted image of the full tuple set over the symmetry group,
/// one byte per letter (its letter_key).
CanonicalKey canonical_form(VHDatum const& datum, EquivalenceMode mode = {});

/// The datum whose sorted tuple set the key spells.
VHDatum datum_of_key(int alpha, int beta, CanonicalKey const& key);

struct EquivalenceClass {
  CanonicalKey key;
  VHDatum representative;
  std::size_t orbit_size = 0;
};

/// Classes in key order. The representative is the canonical one.
std::vector<EquivalenceClass> classify(std::vector<VHDatum> const& data, EquivalenceMode mode = {});

struct TableRow {
  std::string name;  // e.g. 2x2.07
  VHDatum presentation;
  AbelianGroup H1;
  AbelianGroup C;
};

std::vector<TableRow> emit_table(std::vector<EquivalenceClass> const& classes);

/// "x1 x2 x3 x4 ; ..." with every relator x1 x2 x3 x4 = 1.
std::string presentation_text(VHDatum const& datum);
/// One line per row: name | presentation | H1 | C, in table notation.
std::string table_text(std::vector<TableRow> const& rows);

}  // namespace bmg
