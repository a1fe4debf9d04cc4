#include "bmgroups/tilingshift.hpp"

#include <algorithm>
#include <sstream>

namespace bmg {

bool BinaryMatrix::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::vector<std::size_t> BinaryMatrix::row_sums() const {
  std::vector<std::size_t> sums(n_, 0);
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t r = 0; r < n_; ++r) {
      sums[s] += (*this)(s, r);
    }
  }
  return sums;
}

std::vector<std::size_t> BinaryMatrix::col_sums() const {
  std::vector<std::size_t> sums(n_, 0);
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t r = 0; r < n_; ++r) {
      sums[r] += (*this)(s, r);
    }
  }
  return sums;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t r = 0; r < n_; ++r) {
      t.set(r, s, (*this)(s, r) != 0);
    }
  }
  return t;
}

std::vector<std::uint32_t> BinaryMatrix::product_counts(BinaryMatrix const& other) const {
  std::vector<std::uint32_t> out(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      if ((*this)(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n_; ++j) {
        out[i * n_ + j] += other(k, j);
      }
    }
  }
  return out;
}

std::string BinaryMatrix::to_dense_text() const {
  std::string out;
  out.reserve(n_ * n_ * 2);
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t r = 0; r < n_; ++r) {
      if (r != 0) {
        out.push_back(' ');
      }
      out.push_back((*this)(s, r) != 0 ? '1' : '0');
    }
    out.push_back('\n');
  }
  return out;
}

std::string BinaryMatrix::to_pairs_text() const {
  std::ostringstream out;
  for (std::size_t s = 0; s < n_; ++s) {
    for (std::size_t r = 0; r < n_; ++r) {
      if ((*this)(s, r) != 0) {
        out << s << ' ' << r << '\n';
      }
    }
  }
  return out.str();
}

Alphabet::Alphabet(std::vector<RelationTuple> tiles) : tiles_(std::move(tiles)) {
  std::sort(tiles_.begin(), tiles_.end());
}

TileIndex Alphabet::index_of(RelationTuple const& t) const {
  auto it = std::lower_bound(tiles_.begin(), tiles_.end(), t);
  if (it == tiles_.end() || *it != t) {
    throw std::out_of_range("tile " + t.to_string() + " not in alphabet");
  }
  return static_cast<TileIndex>(it - tiles_.begin());
}

TransitionMatrices build_transition_matrices(BMDatum const& datum) {
  TransitionMatrices tm;
  tm.m = datum.m();
  tm.n = datum.n();
  tm.alphabet = Alphabet(datum.tuples());
  std::size_t const N = tm.alphabet.size();
  tm.M1 = BinaryMatrix(N);
  tm.M2 = BinaryMatrix(N);
  for (std::size_t s = 0; s < N; ++s) {
    auto const& ts = tm.alphabet[s];
    for (std::size_t r = 0; r < N; ++r) {
      auto const& tr = tm.alphabet[r];
      tm.M1.set(s, r, ts.b2 == tr.b && ts.a != -tr.a);
      tm.M2.set(s, r, ts.a == tr.a2 && ts.b2 != -tr.b2);
    }
  }
  return tm;
}

RelationTuple rotate_tile(RelationTuple const& r) noexcept {
  return {-r.a2, -r.b2, -r.b, -r.a};
}

std::vector<TileIndex> rotation_permutation(TransitionMatrices const& tm) {
  std::vector<TileIndex> perm(tm.size());
  for (TileIndex i = 0; i < tm.size(); ++i) {
    perm[i] = tm.alphabet.index_of(rotate_tile(tm.alphabet[i]));
  }
  return perm;
}

Word::Word(int width, int height)
    : width_(width),
      height_(height),
      cells_(static_cast<std::size_t>(width + 1) * static_cast<std::size_t>(height + 1), 0) {
  if (width < 0 || height < 0) {
    throw std::invalid_argument("Word: negative shape");
  }
}

bool is_valid_word(TransitionMatrices const& tm, Word const& w) {
  for (int y = 0; y <= w.height(); ++y) {
    for (int x = 0; x <= w.width(); ++x) {
      TileIndex const here = w.at({x, y});
      if (here >= tm.size()) {
        return false;
      }
      if (x < w.width() && tm.M1(w.at({x + 1, y}), here) == 0) {
        return false;
      }
      if (y < w.height() && tm.M2(w.at({x, y + 1}), here) == 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<TileIndex> successors(TransitionMatrices const& tm, int direction, TileIndex from) {
  auto const& M = tm.matrix(direction);
  std::vector<TileIndex> out;
  for (TileIndex s = 0; s < M.size(); ++s) {
    if (M(s, from) != 0) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<TileIndex> predecessors(TransitionMatrices const& tm, int direction, TileIndex to) {
  auto const& M = tm.matrix(direction);
  std::vector<TileIndex> out;
  for (TileIndex r = 0; r < M.size(); ++r) {
    if (M(to, r) != 0) {
      out.push_back(r);
    }
  }
  return out;
}

namespace {

  // Placement of a new cell: the tile must fit every already placed neighbour.
  class Grower {
   public:
    Grower(TransitionMatrices const& tm, Word& w) : tm_(tm), w_(w), placed_(size(w), false) {}

    void mark_all_except_line(Side side) {
      for (int y = 0; y <= w_.height(); ++y) {
        for (int x = 0; x <= w_.width(); ++x) {
          placed_[idx({x, y})] = !on_line(side, {x, y});
        }
      }
    }

    bool fits(Cell c, TileIndex t) const {
      auto check = [&](Cell nb, int dir, bool nb_is_successor) {
        if (!w_.contains(nb) || !placed_[idx(nb)]) {
          return true;
        }
        auto const& M = tm_.matrix(dir);
        return nb_is_successor ? M(w_.at(nb), t) != 0 : M(t, w_.at(nb)) != 0;
      };
      return check({c.x + 1, c.y}, 1, true) && check({c.x - 1, c.y}, 1, false)
             && check({c.x, c.y + 1}, 2, true) && check({c.x, c.y - 1}, 2, false);
    }

    void place(Cell c, TileIndex t) {
      w_.set(c, t);
      placed_[idx(c)] = true;
    }

    // The unique tile fitting all placed neighbours of c.
    void force(Cell c) {
      std::size_t hits = 0;
      TileIndex found = 0;
      for (TileIndex t = 0; t < tm_.size(); ++t) {
        if (fits(c, t)) {
          ++hits;
          found = t;
        }
      }
      if (hits != 1) {
        throw IncompatibleTile("extend_word: " + std::to_string(hits)
                               + " tiles complete the block at (" + std::to_string(c.x) + ","
                               + std::to_string(c.y) + ")");
      }
      place(c, found);
    }

    bool on_line(Side side, Cell c) const {
      switch (side) {
        case Side::right: return c.x == w_.width();
        case Side::left: return c.x == 0;
        case Side::top: return c.y == w_.height();
        case Side::bottom: return c.y == 0;
      }
      return false;
    }

   private:
    static std::size_t size(Word const& w) {
      return static_cast<std::size_t>(w.width() + 1) * static_cast<std::size_t>(w.height() + 1);
    }
    std::size_t idx(Cell c) const {
      return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(w_.width() + 1)
             + static_cast<std::size_t>(c.x);
    }

    TransitionMatrices const& tm_;
    Word& w_;
    std::vector<bool> placed_;
  };

}  // namespace

Word extend_word(TransitionMatrices const& tm, Word const& w, Side side, int offset,
                 TileIndex tile) {
  bool const horizontal = side == Side::right || side == Side::left;
  int const line_len = horizontal ? w.height() : w.width();
  if (offset < 0 || offset > line_len) {
    throw std::invalid_argument("extend_word: offset outside the side");
  }
  if (tile >= tm.size()) {
    throw std::invalid_argument("extend_word: tile index out of range");
  }
  int const dx = side == Side::left ? 1 : 0;
  int const dy = side == Side::bottom ? 1 : 0;
  Word out(w.width() + (horizontal ? 1 : 0), w.height() + (horizontal ? 0 : 1));
  for (int y = 0; y <= w.height(); ++y) {
    for (int x = 0; x <= w.width(); ++x) {
      out.set({x + dx, y + dy}, w.at({x, y}));
    }
  }
  Grower grow(tm, out);
  grow.mark_all_except_line(side);

  auto line_cell = [&](int k) -> Cell {
    switch (side) {
      case Side::right: return {out.width(), k};
      case Side::left: return {0, k};
      case Side::top: return {k, out.height()};
      case Side::bottom: return {k, 0};
    }
    return {};
  };

  Cell const seed = line_cell(offset);
  if (!grow.fits(seed, tile)) {
    throw IncompatibleTile("extend_word: seed tile does not fit the boundary");
  }
  grow.place(seed, tile);
  for (int k = offset + 1; k <= line_len; ++k) {
    grow.force(line_cell(k));
  }
  for (int k = offset - 1; k >= 0; --k) {
    grow.force(line_cell(k));
  }
  return out;
}

bool PeriodWitness::verify(TransitionMatrices const& tm) const {
  Cell const shifted{base.x + period.first, base.y + period.second};
  return is_valid_word(tm, word) && word.contains(base) && word.contains(shifted)
         && word.at(base) != word.at(shifted);
}

PeriodWitness h3_witness(TransitionMatrices const& tm, std::pair<int, int> period) {
  auto const [px, py] = period;
  if (px == 0 && py == 0) {
    throw std::invalid_argument("h3_witness: period must be nonzero");
  }
  if (tm.size() == 0) {
    throw IncompatibleTile("h3_witness: empty alphabet");
  }
  Word w(TileIndex{0});
  Cell base{0, 0};
  Cell cur{0, 0};
  int const steps_x = px < 0 ? -px : px;
  int const steps_y = py < 0 ? -py : py;
  int remaining = steps_x + steps_y;

  auto choose = [&](std::vector<TileIndex> const& candidates) -> TileIndex {
    // Last step of the path: keep away from w(l). Earlier steps: any choice.
    for (TileIndex t : candidates) {
      if (remaining > 1 || t != w.at(base)) {
        return t;
      }
    }
    throw IncompatibleTile("h3_witness: no admissible tile");
  };

  for (int i = 0; i < steps_x; ++i, --remaining) {
    TileIndex const here = w.at(cur);
    if (px > 0) {
      w = extend_word(tm, w, Side::right, cur.y, choose(successors(tm, 1, here)));
      cur.x += 1;
    } else {
      w = extend_word(tm, w, Side::left, cur.y, choose(predecessors(tm, 1, here)));
      base.x += 1;
    }
  }
  for (int i = 0; i < steps_y; ++i, --remaining) {
    TileIndex const here = w.at(cur);
    if (py > 0) {
      w = extend_word(tm, w, Side::top, cur.x, choose(successors(tm, 2, here)));
      cur.y += 1;
    } else {
      w = extend_word(tm, w, Side::bottom, cur.x, choose(predecessors(tm, 2, here)));
      base.y += 1;
    }
  }
  return PeriodWitness{period, std::move(w), base};
}

bool is_irreducible(TransitionMatrices const& tm) {
  std::size_t const N = tm.size();
  if (N == 0) {
    return false;
  }
  auto reach = [&](bool forward) {
    std::vector<bool> seen(N, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t const u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < N; ++v) {
        bool const edge = forward ? (tm.M1(v, u) != 0 || tm.M2(v, u) != 0)
                                  : (tm.M1(u, v) != 0 || tm.M2(u, v) != 0);
        if (edge && !seen[v]) {
          seen[v] = true;
          ++count;
          stack.push_back(v);
        }
      }
    }
    return count == N;
  };
  return reach(true) && reach(false);
}

HReport check_h_conditions(TransitionMatrices const& tm, int period_bound) {
  HReport rep;
  rep.h0 = !tm.M1.is_zero() && !tm.M2.is_zero();
  auto const p12 = tm.M1.product_counts(tm.M2);
  auto const p21 = tm.M2.product_counts(tm.M1);
  rep.h1a = p12 == p21;
  rep.h1b = std::all_of(p12.begin(), p12.end(), [](std::uint32_t c) { return c <= 1; });
  rep.h2 = is_irreducible(tm);

  rep.m1_row_sums = tm.M1.row_sums();
  rep.m1_col_sums = tm.M1.col_sums();
  rep.m2_row_sums = tm.M2.row_sums();
  rep.m2_col_sums = tm.M2.col_sums();
  auto all_equal = [](std::vector<std::size_t> const& v, int value) {
    return std::all_of(v.begin(), v.end(),
                       [value](std::size_t s) { return s == static_cast<std::size_t>(value); });
  };
  rep.degree_sums_ok = all_equal(rep.m1_row_sums, tm.m - 1) && all_equal(rep.m1_col_sums, tm.m - 1)
                       && all_equal(rep.m2_row_sums, tm.n - 1)
                       && all_equal(rep.m2_col_sums, tm.n - 1);

  rep.h3_bound = period_bound;
  for (int py = -period_bound; py <= period_bound; ++py) {
    for (int px = -period_bound; px <= period_bound; ++px) {
      if (px == 0 && py == 0) {
        continue;
      }
      try {
        auto witness = h3_witness(tm, {px, py});
        if (witness.verify(tm)) {
          rep.h3_witnesses.push_back(std::move(witness));
        } else {
          rep.h3_failures.emplace_back(px, py);
        }
      } catch (IncompatibleTile const&) {
        rep.h3_failures.emplace_back(px, py);
      }
    }
  }
  return rep;
}

namespace {
  Integer path_count(BinaryMatrix const& M, TileIndex start, int length) {
    std::vector<Integer> v(M.size(), 0);
    v[start] = 1;
    for (int step = 0; step < length; ++step) {
      std::vector<Integer> next(M.size(), 0);
      for (std::size_t r = 0; r < M.size(); ++r) {
        if (sgn(v[r]) == 0) {
          continue;
        }
        for (std::size_t s = 0; s < M.size(); ++s) {
          if (M(s, r) != 0) {
            next[s] += v[r];
          }
        }
      }
      v = std::move(next);
    }
    Integer total = 0;
    for (auto const& x : v) {
      total += x;
    }
    return total;
  }
}  // namespace

Integer count_words_from(TransitionMatrices const& tm, std::pair<int, int> shape,
                         TileIndex start) {
  if (shape.first < 0 || shape.second < 0) {
    throw std::invalid_argument("count_words: negative shape");
  }
  return path_count(tm.M1, start, shape.first) * path_count(tm.M2, start, shape.second);
}

Integer count_words(TransitionMatrices const& tm, std::pair<int, int> shape) {
  Integer total = 0;
  for (TileIndex r = 0; r < tm.size(); ++r) {
    total += count_words_from(tm, shape, r);
  }
  return total;
}

}  // namespace bmg
