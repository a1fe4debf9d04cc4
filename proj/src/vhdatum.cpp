#include "bmgroups/vhdatum.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bmg {

std::strong_ordering operator<=>(RelationTuple const& x, RelationTuple const& y) {
  std::array<int, 4> const kx{letter_key(x.a), letter_key(x.b), letter_key(x.b2),
                              letter_key(x.a2)};
  std::array<int, 4> const ky{letter_key(y.a), letter_key(y.b), letter_key(y.b2),
                              letter_key(y.a2)};
  return kx <=> ky;
}

std::string RelationTuple::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(b2) + ","
         + std::to_string(a2) + ")";
}

std::array<RelationTuple, 4> orbit_of(RelationTuple const& t) noexcept {
  return {{{t.a, t.b, t.b2, t.a2},
           {-t.a, t.b2, t.b, -t.a2},
           {-t.a2, -t.b2, -t.b, -t.a},
           {t.a2, -t.b, -t.b2, t.a}}};
}

DegenerateSquare::DegenerateSquare(RelationTuple const& t)
    : std::runtime_error("degenerate square: tuple " + t.to_string()
                         + " has the form (a,b,b^-1,a^-1)"),
      tuple(t) {}

BMSquare BMSquare::from_tuple(RelationTuple const& t) {
  BMSquare sq;
  sq.tuples_ = orbit_of(t);
  std::sort(sq.tuples_.begin(), sq.tuples_.end());
  if (std::adjacent_find(sq.tuples_.begin(), sq.tuples_.end()) != sq.tuples_.end()) {
    throw DegenerateSquare(t);
  }
  return sq;
}

bool BMSquare::contains(RelationTuple const& t) const noexcept {
  return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

std::vector<BMSquare> squares_of(std::span<RelationTuple const> tuples) {
  std::set<RelationTuple> remaining(tuples.begin(), tuples.end());
  std::vector<BMSquare> squares;
  while (!remaining.empty()) {
    BMSquare sq = BMSquare::from_tuple(*remaining.begin());
    for (auto const& t : sq.tuples()) {
      if (remaining.erase(t) == 0) {
        throw std::invalid_argument("squares_of: tuple set not closed, " + t.to_string()
                                    + " missing");
      }
    }
    squares.push_back(sq);
  }
  return squares;
}

bool ValidationReport::ok() const noexcept {
  return first_failure() == nullptr;
}

ConditionCheck const* ValidationReport::first_failure() const noexcept {
  for (auto const& c : checks) {
    if (!c.passed) {
      return &c;
    }
  }
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (auto const& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) {
      out << ": " << c.detail;
    }
    out << '\n';
    for (auto const& t : c.offending) {
      out << "    " << t.to_string() << '\n';
    }
  }
  return out.str();
}

namespace {

  ConditionCheck check_structure(VHDatum const& d) {
    ConditionCheck c{std::string(condition::structure), true, {}, {}};
    if (d.alpha < 2 || d.beta < 2) {
      c.passed = false;
      c.detail = "m and n must be even and at least 4 (got m=" + std::to_string(d.m())
                 + ", n=" + std::to_string(d.n()) + ")";
      return c;
    }
    for (auto const& t : d.relators) {
      if (!d.is_a_letter(t.a) || !d.is_b_letter(t.b) || !d.is_b_letter(t.b2)
          || !d.is_a_letter(t.a2)) {
        c.offending.push_back(t);
      }
    }
    if (!c.offending.empty()) {
      c.passed = false;
      c.detail = "tuples must lie in A x B x B x A";
    }
    return c;
  }

  // Checks one projection of R for bijectivity; returns offending tuples.
  template <typename Proj>
  void check_projection(std::vector<RelationTuple> const& R, std::string const& label,
                        std::size_t expected, Proj proj, ConditionCheck& c) {
    std::map<std::pair<Letter, Letter>, std::vector<RelationTuple>> fibres;
    for (auto const& t : R) {
      fibres[proj(t)].push_back(t);
    }
    std::size_t collisions = 0;
    for (auto const& [key, ts] : fibres) {
      if (ts.size() > 1) {
        ++collisions;
        for (auto const& t : ts) {
          if (std::find(c.offending.begin(), c.offending.end(), t) == c.offending.end()) {
            c.offending.push_back(t);
          }
        }
      }
    }
    if (collisions > 0 || fibres.size() != expected) {
      c.passed = false;
      if (!c.detail.empty()) {
        c.detail += "; ";
      }
      c.detail += "projection " + label + " hits " + std::to_string(fibres.size()) + " of "
                  + std::to_string(expected) + " pairs, " + std::to_string(collisions)
                  + " repeated";
    }
  }

}  // namespace

ValidationReport validate(VHDatum const& datum) {
  ValidationReport report;
  report.checks.push_back(check_structure(datum));
  if (!report.checks.back().passed) {
    return report;
  }

  ConditionCheck degenerate{std::string(condition::no_degenerate), true, {}, {}};
  ConditionCheck closure{std::string(condition::orbit_closure), true, {}, {}};
  std::vector<BMSquare> squares;
  std::set<RelationTuple> seen;
  for (auto const& t : datum.relators) {
    BMSquare sq;
    try {
      sq = BMSquare::from_tuple(t);
    } catch (DegenerateSquare const&) {
      degenerate.offending.push_back(t);
      continue;
    }
    if (seen.contains(sq.representative())) {
      closure.offending.push_back(t);
      continue;
    }
    seen.insert(sq.representative());
    squares.push_back(sq);
  }
  if (!degenerate.offending.empty()) {
    degenerate.passed = false;
    degenerate.detail = "relators of the form (a,b,b^-1,a^-1)";
  }
  if (!closure.offending.empty()) {
    closure.passed = false;
    closure.detail = "relators repeating a square already present";
  }
  report.checks.push_back(closure);
  report.checks.push_back(degenerate);

  ConditionCheck bijective{std::string(condition::bijective), true, {}, {}};
  std::size_t const expected_squares = static_cast<std::size_t>(datum.alpha * datum.beta);
  if (datum.relators.size() != expected_squares) {
    bijective.passed = false;
    bijective.detail = std::to_string(datum.relators.size()) + " relators, expected "
                       + std::to_string(expected_squares);
  }
  std::vector<RelationTuple> R;
  for (auto const& sq : squares) {
    R.insert(R.end(), sq.tuples().begin(), sq.tuples().end());
  }
  std::size_t const mn = static_cast<std::size_t>(datum.m() * datum.n());
  check_projection(R, "(a,b)", mn, [](auto const& t) { return std::pair{t.a, t.b}; },
                   bijective);
  check_projection(R, "(a,b')", mn, [](auto const& t) { return std::pair{t.a, t.b2}; },
                   bijective);
  check_projection(R, "(b,a')", mn, [](auto const& t) { return std::pair{t.b, t.a2}; },
                   bijective);
  check_projection(R, "(b',a')", mn, [](auto const& t) { return std::pair{t.b2, t.a2}; },
                   bijective);
  std::sort(bijective.offending.begin(), bijective.offending.end());
  report.checks.push_back(bijective);
  return report;
}

InvalidDatum::InvalidDatum(ValidationReport r)
    : std::runtime_error("invalid VH-datum: "
                         + (r.first_failure() != nullptr ? r.first_failure()->name
                                                         : std::string("?"))),
      report(std::move(r)) {}

BMDatum BMDatum::from(VHDatum const& datum) {
  auto report = validate(datum);
  if (!report.ok()) {
    throw InvalidDatum(std::move(report));
  }
  BMDatum d;
  d.alpha_ = datum.alpha;
  d.beta_ = datum.beta;
  for (auto const& t : datum.relators) {
    d.squares_.push_back(BMSquare::from_tuple(t));
    d.tuples_.insert(d.tuples_.end(), d.squares_.back().tuples().begin(),
                     d.squares_.back().tuples().end());
  }
  std::sort(d.squares_.begin(), d.squares_.end());
  std::sort(d.tuples_.begin(), d.tuples_.end());
  std::size_t const m = static_cast<std::size_t>(d.m());
  std::size_t const n = static_cast<std::size_t>(d.n());
  d.by_ab_.assign(m * n, 0);
  d.by_b2a2_.assign(m * n, 0);
  for (std::size_t i = 0; i < d.tuples_.size(); ++i) {
    auto const& t = d.tuples_[i];
    d.by_ab_[d.a_index(t.a) * n + d.b_index(t.b)] = i;
    d.by_b2a2_[d.a_index(t.a2) * n + d.b_index(t.b2)] = i;
  }
  return d;
}

int BMDatum::rho() const noexcept {
  return std::gcd(alpha_ - 1, beta_ - 1);
}

VHDatum BMDatum::datum() const {
  VHDatum d{alpha_, beta_, {}};
  for (auto const& sq : squares_) {
    d.relators.push_back(sq.representative());
  }
  return d;
}

RelationTuple const& BMDatum::tuple_with_ab(Letter a, Letter b) const {
  if (!is_a_letter(a) || !is_b_letter(b)) {
    throw std::invalid_argument("tuple_with_ab: letters out of range");
  }
  return tuples_[by_ab_[a_index(a) * static_cast<std::size_t>(n()) + b_index(b)]];
}

RelationTuple const& BMDatum::tuple_with_b2a2(Letter b2, Letter a2) const {
  if (!is_a_letter(a2) || !is_b_letter(b2)) {
    throw std::invalid_argument("tuple_with_b2a2: letters out of range");
  }
  return tuples_[by_b2a2_[a_index(a2) * static_cast<std::size_t>(n()) + b_index(b2)]];
}

std::pair<Letter, Letter> BMDatum::swap_ba(Letter b, Letter a) const {
  auto const& t = tuple_with_b2a2(b, a);
  return {t.a, t.b};
}

ParseError::ParseError(std::size_t line_no, std::string const& what)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}

namespace {

  std::vector<long> read_integers(std::string_view line, std::size_t line_no) {
    std::vector<long> values;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
        ++pos;
      }
      if (pos == line.size()) {
        break;
      }
      std::size_t start = pos;
      if (line[pos] == '+') {
        ++start;
      }
      long value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + line.size(), value);
      std::size_t const end = static_cast<std::size_t>(ptr - line.data());
      if (ec != std::errc() || end == start
          || (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')) {
        throw ParseError(line_no, "expected whitespace-separated integers, got '"
                                      + std::string(line) + "'");
      }
      values.push_back(value);
      pos = end;
    }
    return values;
  }

}  // namespace

VHDatum parse_datum(std::string_view text) {
  VHDatum datum;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    line = line.substr(0, line.find('#'));
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      continue;
    }
    auto const values = read_integers(line, line_no);
    if (!have_header) {
      if (values.size() != 2) {
        throw ParseError(line_no, "header must be two integers 'm n'");
      }
      if (values[0] < 4 || values[1] < 4 || values[0] % 2 != 0 || values[1] % 2 != 0) {
        throw ParseError(line_no, "m and n must be even and at least 4");
      }
      datum.alpha = static_cast<int>(values[0] / 2);
      datum.beta = static_cast<int>(values[1] / 2);
      have_header = true;
      continue;
    }
    if (values.size() != 4) {
      throw ParseError(line_no, "relator must have exactly 4 letters, got "
                                    + std::to_string(values.size()));
    }
    long const limit = datum.alpha + datum.beta;
    for (long v : values) {
      if (v == 0 || v > limit || v < -limit) {
        throw ParseError(line_no, "generator " + std::to_string(v) + " out of range");
      }
    }
    std::array<Letter, 4> const x{static_cast<Letter>(values[0]), static_cast<Letter>(values[1]),
                                  static_cast<Letter>(values[2]),
                                  static_cast<Letter>(values[3])};
    if (!datum.is_a_letter(x[0]) || !datum.is_b_letter(x[1]) || !datum.is_a_letter(x[2])
        || !datum.is_b_letter(x[3])) {
      throw ParseError(line_no, "relator must follow the side pattern A B A B");
    }
    datum.relators.push_back(tuple_of_relator(x));
  }
  if (!have_header) {
    throw ParseError(line_no, "missing header 'm n'");
  }
  auto const expected = static_cast<std::size_t>(datum.alpha * datum.beta);
  if (datum.relators.size() != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) + " relators, got "
                                  + std::to_string(datum.relators.size()));
  }
  return datum;
}

std::array<Letter, 4> relator_of(RelationTuple const& t) noexcept {
  return {t.a, t.b, -t.a2, -t.b2};
}

RelationTuple tuple_of_relator(std::array<Letter, 4> const& x) noexcept {
  // x1 x2 x3 x4 = 1  <=>  x1 x2 = x4^-1 x3^-1
  return {x[0], x[1], -x[3], -x[2]};
}

std::string serialize_datum(VHDatum const& datum) {
  std::vector<RelationTuple> reps;
  for (auto const& t : datum.relators) {
    auto orbit = orbit_of(t);
    reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
  }
  std::sort(reps.begin(), reps.end());
  std::ostringstream out;
  out << datum.m() << ' ' << datum.n() << '\n';
  for (auto const& t : reps) {
    auto const x = relator_of(t);
    for (std::size_t i = 0; i < 4; ++i) {
      out << (i == 0 ? "" : " ") << (x[i] > 0 ? "+" : "") << x[i];
    }
    out << '\n';
  }
  return out.str();
}

LetterWord NormalForm::word() const {
  LetterWord w = a_word;
  w.insert(w.end(), b_word.begin(), b_word.end());
  return w;
}

std::vector<Rewrite> applicable_rewrites(BMDatum const& datum, std::span<Letter const> word) {
  std::vector<Rewrite> steps;
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == -word[i + 1]) {
      steps.push_back({Rewrite::Kind::cancel, i});
    } else if (datum.is_b_letter(word[i]) && datum.is_a_letter(word[i + 1])) {
      steps.push_back({Rewrite::Kind::swap, i});
    }
  }
  return steps;
}

void apply_rewrite(BMDatum const& datum, LetterWord& word, Rewrite const& step) {
  auto const i = static_cast<std::ptrdiff_t>(step.pos);
  if (step.kind == Rewrite::Kind::cancel) {
    word.erase(word.begin() + i, word.begin() + i + 2);
  } else {
    auto const [a1, b1] = datum.swap_ba(word[step.pos], word[step.pos + 1]);
    word[step.pos] = a1;
    word[step.pos + 1] = b1;
  }
}

NormalForm normal_form(BMDatum const& datum, std::span<Letter const> word) {
  for (Letter x : word) {
    if (!datum.is_a_letter(x) && !datum.is_b_letter(x)) {
      throw std::invalid_argument("letter " + std::to_string(x) + " is not a generator");
    }
  }
  LetterWord w(word.begin(), word.end());
  while (true) {
    auto const steps = applicable_rewrites(datum, w);
    if (steps.empty()) {
      break;
    }
    auto cancel = std::find_if(steps.begin(), steps.end(),
                               [](Rewrite const& s) { return s.kind == Rewrite::Kind::cancel; });
    apply_rewrite(datum, w, cancel != steps.end() ? *cancel : steps.front());
  }
  auto const split = std::find_if(w.begin(), w.end(),
                                  [&datum](Letter x) { return datum.is_b_letter(x); });
  return {LetterWord(w.begin(), split), LetterWord(split, w.end())};
}

NormalForm nf_multiply(BMDatum const& datum, NormalForm const& x, NormalForm const& y) {
  LetterWord w = x.word();
  auto const yw = y.word();
  w.insert(w.end(), yw.begin(), yw.end());
  return normal_form(datum, w);
}

NormalForm nf_invert(BMDatum const& datum, NormalForm const& x) {
  LetterWord w = x.word();
  std::reverse(w.begin(), w.end());
  for (auto& l : w) {
    l = -l;
  }
  return normal_form(datum, w);
}

VHDatum product_free_groups_datum(int alpha, int beta) {
  if (alpha < 2 || beta < 2) {
    throw std::invalid_argument("product_free_groups_datum: alpha, beta >= 2 required");
  }
  VHDatum d{alpha, beta, {}};
  for (Letter a = 1; a <= alpha; ++a) {
    for (Letter b = alpha + 1; b <= alpha + beta; ++b) {
      d.relators.push_back({a, b, b, a});
    }
  }
  return d;
}

}  // namespace bmg
