#pragma once

// VH-data: generator alphabets, relation tuples, squares and the group
// presentation they define, together with validation, text I/O and the
// normal-form rewriting engine for group elements.
//
// Generators are signed integers. With alpha A-pairs and beta B-pairs the
// A-letters are +-1..+-alpha, the B-letters +-(alpha+1)..+-(alpha+beta), and
// x^{-1} is -x.

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bmg {

using Letter = int;
using LetterWord = std::vector<Letter>;

/// Pinned total order on letters: 1 < -1 < 2 < -2 < ...
constexpr int letter_key(Letter x) noexcept {
  return x > 0 ? 2 * x - 1 : -2 * x;
}

/// A relation ab = b'a' stored as (a, b, b', a').
struct RelationTuple {
  Letter a = 0;
  Letter b = 0;
  Letter b2 = 0;  // b'
  Letter a2 = 0;  // a'

  friend bool operator==(RelationTuple const&, RelationTuple const&) = default;
  /// Lexicographic under letter_key.
  friend std::strong_ordering operator<=>(RelationTuple const& x, RelationTuple const& y);

  std::string to_string() const;
};

/// The four tuples describing one geometric square:
/// (a,b,b',a'), (a^-1,b',b,a'^-1), (a'^-1,b'^-1,b^-1,a^-1), (a',b^-1,b'^-1,a).
std::array<RelationTuple, 4> orbit_of(RelationTuple const& t) noexcept;

/// Raised when a tuple's orbit has fewer than four elements, i.e. the tuple
/// has the form (a, b, b^-1, a^-1).
class DegenerateSquare : public std::runtime_error {
 public:
  explicit DegenerateSquare(RelationTuple const& t);
  RelationTuple tuple;
};

/// A 4-element orbit of relation tuples, stored sorted.
class BMSquare {
 public:
  /// Throws DegenerateSquare.
  static BMSquare from_tuple(RelationTuple const& t);

  std::array<RelationTuple, 4> const& tuples() const noexcept { return tuples_; }
  /// Least tuple of the orbit.
  RelationTuple const& representative() const noexcept { return tuples_[0]; }
  bool contains(RelationTuple const& t) const noexcept;

  friend bool operator==(BMSquare const&, BMSquare const&) = default;
  friend auto operator<=>(BMSquare const& x, BMSquare const& y) {
    return x.tuples_ <=> y.tuples_;
  }

 private:
  std::array<RelationTuple, 4> tuples_{};
};

/// Partitions a tuple set closed under the orbit maps into squares.
/// Throws DegenerateSquare, or std::invalid_argument if the set is not closed.
std::vector<BMSquare> squares_of(std::span<RelationTuple const> tuples);

/// A candidate VH-datum as read or constructed: one relator tuple per square.
/// Nothing is checked; see validate() and BMDatum.
struct VHDatum {
  int alpha = 0;
  int beta = 0;
  std::vector<RelationTuple> relators;

  int m() const noexcept { return 2 * alpha; }
  int n() const noexcept { return 2 * beta; }
  bool is_a_letter(Letter x) const noexcept { return x != 0 && x >= -alpha && x <= alpha; }
  bool is_b_letter(Letter x) const noexcept {
    int const v = x < 0 ? -x : x;
    return v > alpha && v <= alpha + beta;
  }
};

struct ConditionCheck {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<RelationTuple> offending;
};

struct ValidationReport {
  std::vector<ConditionCheck> checks;

  bool ok() const noexcept;
  /// nullptr when everything passed.
  ConditionCheck const* first_failure() const noexcept;
  std::string to_string() const;
};

namespace condition {
  inline constexpr std::string_view structure = "structure";
  inline constexpr std::string_view orbit_closure = "(i) orbit closure";
  inline constexpr std::string_view no_degenerate = "(ii) four distinct tuples";
  inline constexpr std::string_view bijective = "(iii) bijective projections";
}  // namespace condition

/// Checks the structural requirements and conditions (i)-(iii).
ValidationReport validate(VHDatum const& datum);

/// Thrown by BMDatum::from for data that fail validation.
class InvalidDatum : public std::runtime_error {
 public:
  explicit InvalidDatum(ValidationReport report);
  ValidationReport report;
};

/// A validated VH-datum with lookup tables. Immutable.
class BMDatum {
 public:
  /// Throws InvalidDatum.
  static BMDatum from(VHDatum const& datum);

  int alpha() const noexcept { return alpha_; }
  int beta() const noexcept { return beta_; }
  int m() const noexcept { return 2 * alpha_; }
  int n() const noexcept { return 2 * beta_; }
  /// gcd(alpha - 1, beta - 1)
  int rho() const noexcept;

  bool is_a_letter(Letter x) const noexcept { return x != 0 && x >= -alpha_ && x <= alpha_; }
  bool is_b_letter(Letter x) const noexcept {
    int const v = x < 0 ? -x : x;
    return v > alpha_ && v <= alpha_ + beta_;
  }

  std::vector<BMSquare> const& squares() const noexcept { return squares_; }
  /// Every tuple of R (m * n of them), sorted.
  std::vector<RelationTuple> const& tuples() const noexcept { return tuples_; }
  /// One representative per square, sorted.
  VHDatum datum() const;

  /// The tuple with the given (a, b).
  RelationTuple const& tuple_with_ab(Letter a, Letter b) const;
  /// The tuple with the given (b', a').
  RelationTuple const& tuple_with_b2a2(Letter b2, Letter a2) const;

  /// The unique (a1, b1) with a1 b1 = b a in the group.
  std::pair<Letter, Letter> swap_ba(Letter b, Letter a) const;

 private:
  BMDatum() = default;
  std::size_t a_index(Letter x) const noexcept {
    return static_cast<std::size_t>(letter_key(x) - 1);
  }
  std::size_t b_index(Letter x) const noexcept {
    return static_cast<std::size_t>(letter_key(x) - 2 * alpha_ - 1);
  }

  int alpha_ = 0;
  int beta_ = 0;
  std::vector<BMSquare> squares_;
  std::vector<RelationTuple> tuples_;
  std::vector<std::size_t> by_ab_;
  std::vector<std::size_t> by_b2a2_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string const& what);
  std::size_t line;
};

/// Reads the datum text format: '#' comments, a header "m n", then
/// (m/2)(n/2) relator lines "x1 x2 x3 x4" meaning x1 x2 x3 x4 = 1 with side
/// pattern A B A B. Throws ParseError.
VHDatum parse_datum(std::string_view text);

/// Relator (x1, x2, x3, x4) of a tuple: x1 x2 x3 x4 = a b a'^-1 b'^-1.
std::array<Letter, 4> relator_of(RelationTuple const& t) noexcept;
RelationTuple tuple_of_relator(std::array<Letter, 4> const& x) noexcept;

/// One line per square, using the least tuple of each orbit, lines sorted.
/// Degenerate relators are written as given.
std::string serialize_datum(VHDatum const& datum);

/// Element a_1...a_k b_1...b_l with both parts freely reduced.
struct NormalForm {
  LetterWord a_word;
  LetterWord b_word;

  LetterWord word() const;
  std::pair<std::size_t, std::size_t> shape() const noexcept {
    return {a_word.size(), b_word.size()};
  }
  bool is_identity() const noexcept { return a_word.empty() && b_word.empty(); }
  friend bool operator==(NormalForm const&, NormalForm const&) = default;
};

/// One rewriting step at positions (pos, pos + 1).
struct Rewrite {
  enum class Kind { cancel, swap };
  Kind kind;
  std::size_t pos;
  friend bool operator==(Rewrite const&, Rewrite const&) = default;
};

/// All rewrites applicable to the word: cancellations x x^-1 and swaps of an
/// adjacent B-letter followed by an A-letter.
std::vector<Rewrite> applicable_rewrites(BMDatum const& datum, std::span<Letter const> word);
void apply_rewrite(BMDatum const& datum, LetterWord& word, Rewrite const& step);

/// Leftmost rewrite first, cancellation preferred over swap.
/// Throws std::invalid_argument on letters outside A and B.
NormalForm normal_form(BMDatum const& datum, std::span<Letter const> word);
NormalForm nf_multiply(BMDatum const& datum, NormalForm const& x, NormalForm const& y);
NormalForm nf_invert(BMDatum const& datum, NormalForm const& x);

/// Relations a b a^-1 b^-1 = 1 for every pair of positive generators: the
/// direct product of free groups of ranks alpha and beta.
VHDatum product_free_groups_datum(int alpha, int beta);

}  // namespace bmg
