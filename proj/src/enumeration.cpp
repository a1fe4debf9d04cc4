#include "bmgroups/enumeration.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bmgroups/invariants.hpp"
#include "bmgroups/ktheory.hpp"
#include "bmgroups/tilingshift.hpp"

namespace bmg {

namespace {

  void check_degrees(int m, int n) {
    if (m < 4 || n < 4 || m % 2 != 0 || n % 2 != 0) {
      throw std::invalid_argument("degrees must be even and at least 4");
    }
  }

  std::vector<Letter> side_letters(int first, int count) {
    std::vector<Letter> out;
    for (int i = first; i < first + count; ++i) {
      out.push_back(i);
      out.push_back(-i);
    }
    return out;
  }

  // All inverse-respecting bijections of {+-first, ..., +-(first+count-1)}
  // onto {+-target, ...}, as (letter, image) lists.
  std::vector<std::vector<std::pair<Letter, Letter>>> signed_bijections(int first, int count,
                                                                        int target) {
    std::vector<std::vector<std::pair<Letter, Letter>>> out;
    std::vector<int> perm(static_cast<std::size_t>(count));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (unsigned signs = 0; signs < (1u << count); ++signs) {
        std::vector<std::pair<Letter, Letter>> map;
        for (int i = 0; i < count; ++i) {
          Letter img = target + perm[static_cast<std::size_t>(i)];
          if ((signs >> i) & 1u) {
            img = -img;
          }
          map.emplace_back(first + i, img);
          map.emplace_back(-(first + i), -img);
        }
        out.push_back(std::move(map));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  std::vector<RelationTuple> all_tuples(VHDatum const& datum) {
    std::vector<RelationTuple> out;
    for (auto const& t : datum.relators) {
      auto const orbit = orbit_of(t);
      out.insert(out.end(), orbit.begin(), orbit.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace

std::vector<BMSquare> all_bm_squares(int m, int n) {
  check_degrees(m, n);
  int const alpha = m / 2;
  int const beta = n / 2;
  auto const A = side_letters(1, alpha);
  auto const B = side_letters(alpha + 1, beta);
  std::vector<BMSquare> squares;
  for (Letter a : A) {
    for (Letter b : B) {
      for (Letter b2 : B) {
        for (Letter a2 : A) {
          if (b2 == -b && a2 == -a) {
            continue;
          }
          squares.push_back(BMSquare::from_tuple({a, b, b2, a2}));
        }
      }
    }
  }
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return squares;
}

CompatibilityGraph compatibility_graph(int m, int n, std::vector<BMSquare> squares) {
  check_degrees(m, n);
  int const alpha = m / 2;
  CompatibilityGraph g;
  g.m = m;
  g.n = n;
  g.squares = std::move(squares);
  for (auto const& sq : g.squares) {
    std::array<std::size_t, 4> cells{};
    for (std::size_t i = 0; i < 4; ++i) {
      auto const& t = sq.tuples()[i];
      auto const ai = static_cast<std::size_t>(letter_key(t.a) - 1);
      auto const bi = static_cast<std::size_t>(letter_key(t.b) - 2 * alpha - 1);
      cells[i] = ai * static_cast<std::size_t>(n) + bi;
    }
    std::sort(cells.begin(), cells.end());
    g.cells.push_back(cells);
  }
  std::size_t const N = g.size();
  g.adjacent.assign(N, std::vector<bool>(N, false));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      bool disjoint = true;
      for (auto c : g.cells[i]) {
        disjoint = disjoint
                   && std::find(g.cells[j].begin(), g.cells[j].end(), c) == g.cells[j].end();
      }
      g.adjacent[i][j] = g.adjacent[j][i] = disjoint;
    }
  }
  return g;
}

namespace {

  class ExactCover {
   public:
    explicit ExactCover(CompatibilityGraph const& g)
        : g_(g), covered_(static_cast<std::size_t>(g.m * g.n), false), by_cell_(covered_.size()) {
      for (std::size_t s = 0; s < g.size(); ++s) {
        for (auto c : g.cells[s]) {
          by_cell_[c].push_back(s);
        }
      }
    }

    std::vector<VHDatum> run() {
      search(0);
      return std::move(found_);
    }

   private:
    void search(std::size_t from) {
      while (from < covered_.size() && covered_[from]) {
        ++from;
      }
      if (from == covered_.size()) {
        VHDatum d{g_.m / 2, g_.n / 2, {}};
        for (auto s : chosen_) {
          d.relators.push_back(g_.squares[s].representative());
        }
        std::sort(d.relators.begin(), d.relators.end());
        found_.push_back(std::move(d));
        return;
      }
      for (auto s : by_cell_[from]) {
        auto const& cells = g_.cells[s];
        if (std::any_of(cells.begin(), cells.end(), [&](std::size_t c) { return covered_[c]; })) {
          continue;
        }
        for (auto c : cells) {
          covered_[c] = true;
        }
        chosen_.push_back(s);
        search(from + 1);
        chosen_.pop_back();
        for (auto c : cells) {
          covered_[c] = false;
        }
      }
    }

    CompatibilityGraph const& g_;
    std::vector<bool> covered_;
    std::vector<std::vector<std::size_t>> by_cell_;
    std::vector<std::size_t> chosen_;
    std::vector<VHDatum> found_;
  };

}  // namespace

std::vector<VHDatum> enumerate_relation_sets(int m, int n) {
  auto const g = compatibility_graph(m, n, all_bm_squares(m, n));
  return ExactCover(g).run();
}

EquivalenceMode parse_mode(std::string const& name) {
  if (name == "with-swap") {
    return EquivalenceMode::with_swap();
  }
  if (name == "side-preserving") {
    return EquivalenceMode::side_preserving();
  }
  throw std::invalid_argument("unknown equivalence mode '" + name + "'");
}

RelationTuple Relabelling::operator()(RelationTuple const& t) const {
  auto const& f = *this;
  if (swap) {
    return {f(t.b2), f(t.a2), f(t.a), f(t.b)};
  }
  return {f(t.a), f(t.b), f(t.b2), f(t.a2)};
}

std::vector<Relabelling> symmetry_group(int alpha, int beta, EquivalenceMode mode) {
  int const offset = alpha + beta;
  std::vector<Relabelling> group;
  auto add = [&](bool swap, int a_target, int b_target) {
    auto const as = signed_bijections(1, alpha, a_target);
    auto const bs = signed_bijections(alpha + 1, beta, b_target);
    for (auto const& fa : as) {
      for (auto const& fb : bs) {
        Relabelling r{offset, std::vector<Letter>(static_cast<std::size_t>(2 * offset + 1), 0),
                      swap};
        for (auto [x, y] : fa) {
          r.image[static_cast<std::size_t>(x + offset)] = y;
        }
        for (auto [x, y] : fb) {
          r.image[static_cast<std::size_t>(x + offset)] = y;
        }
        group.push_back(std::move(r));
      }
    }
  };
  add(false, 1, alpha + 1);
  if (mode.allow_side_swap && alpha == beta) {
    add(true, alpha + 1, 1);
  }
  return group;
}

namespace {

  // Tuples packed as four letter_key bytes, most significant first, so that
  // integer order is tuple order.
  using Packed = std::uint32_t;

  Packed pack(int k0, int k1, int k2, int k3) {
    return (static_cast<Packed>(k0) << 24) | (static_cast<Packed>(k1) << 16)
           | (static_cast<Packed>(k2) << 8) | static_cast<Packed>(k3);
  }

  class Canonicalizer {
   public:
    Canonicalizer(int alpha, int beta, EquivalenceMode mode)
        : alpha_(alpha), beta_(beta), offset_(alpha + beta) {
      for (auto const& g : symmetry_group(alpha, beta, mode)) {
        std::vector<int> keys(static_cast<std::size_t>(2 * offset_ + 1), 0);
        for (Letter x = -offset_; x <= offset_; ++x) {
          if (x != 0) keys[static_cast<std::size_t>(x + offset_)] = letter_key(g(x));
        }
        tables_.push_back({std::move(keys), g.swap});
      }
    }

    CanonicalKey key(VHDatum const& datum) const {
      if (datum.alpha != alpha_ || datum.beta != beta_) {
        throw std::invalid_argument("canonical_form: degrees differ from the symmetry group");
      }
      auto const tuples = all_tuples(datum);
      std::vector<Packed> best;
      std::vector<Packed> image(tuples.size());
      for (auto const& [keys, swap] : tables_) {
        auto k = [&keys = keys, this](Letter x) {
          return keys[static_cast<std::size_t>(x + offset_)];
        };
        for (std::size_t i = 0; i < tuples.size(); ++i) {
          auto const& t = tuples[i];
          image[i] = swap ? pack(k(t.b2), k(t.a2), k(t.a), k(t.b))
                          : pack(k(t.a), k(t.b), k(t.b2), k(t.a2));
        }
        std::sort(image.begin(), image.end());
        if (best.empty() || image < best) {
          best = image;
        }
      }
      CanonicalKey out;
      out.reserve(best.size() * 4);
      for (Packed p : best) {
        for (int shift : {24, 16, 8, 0}) {
          out.push_back(static_cast<char>((p >> shift) & 0xffu));
        }
      }
      return out;
    }

   private:
    struct Table {
      std::vector<int> keys;
      bool swap;
    };
    int alpha_;
    int beta_;
    int offset_;
    std::vector<Table> tables_;
  };

}  // namespace

CanonicalKey canonical_form(VHDatum const& datum, EquivalenceMode mode) {
  return Canonicalizer(datum.alpha, datum.beta, mode).key(datum);
}

VHDatum datum_of_key(int alpha, int beta, CanonicalKey const& key) {
  if (key.size() % 4 != 0) {
    throw std::invalid_argument("datum_of_key: key length not a multiple of 4");
  }
  auto letter = [](char c) {
    int const k = static_cast<unsigned char>(c);
    return k % 2 == 1 ? (k + 1) / 2 : -(k / 2);
  };
  std::vector<RelationTuple> tuples;
  for (std::size_t i = 0; i < key.size(); i += 4) {
    tuples.push_back({letter(key[i]), letter(key[i + 1]), letter(key[i + 2]), letter(key[i + 3])});
  }
  VHDatum d{alpha, beta, {}};
  for (auto const& sq : squares_of(tuples)) {
    d.relators.push_back(sq.representative());
  }
  std::sort(d.relators.begin(), d.relators.end());
  return d;
}

std::vector<EquivalenceClass> classify(std::vector<VHDatum> const& data, EquivalenceMode mode) {
  std::map<CanonicalKey, EquivalenceClass> by_key;
  std::map<std::pair<int, int>, Canonicalizer> canon;
  for (auto const& d : data) {
    auto it_c = canon.find({d.alpha, d.beta});
    if (it_c == canon.end()) {
      it_c = canon.emplace(std::pair{d.alpha, d.beta}, Canonicalizer(d.alpha, d.beta, mode)).first;
    }
    auto key = it_c->second.key(d);
    auto [it, fresh] = by_key.try_emplace(key);
    if (fresh) {
      it->second.key = key;
      it->second.representative = datum_of_key(d.alpha, d.beta, key);
    }
    ++it->second.orbit_size;
  }
  std::vector<EquivalenceClass> out;
  for (auto& [key, cls] : by_key) {
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<TableRow> emit_table(std::vector<EquivalenceClass> const& classes) {
  std::vector<TableRow> rows;
  std::size_t index = 0;
  for (auto const& cls : classes) {
    ++index;
    auto const& d = cls.representative;
    auto const bm = BMDatum::from(d);
    auto const tm = build_transition_matrices(bm);
    std::ostringstream name;
    name << d.alpha << 'x' << d.beta << '.' << (index < 10 ? "0" : "") << index;
    rows.push_back({name.str(), d, abelianization(d), shift_group(tm)});
  }
  return rows;
}

std::string presentation_text(VHDatum const& datum) {
  std::ostringstream out;
  for (std::size_t i = 0; i < datum.relators.size(); ++i) {
    auto const x = relator_of(datum.relators[i]);
    out << (i == 0 ? "" : " ; ");
    for (std::size_t j = 0; j < 4; ++j) {
      out << (j == 0 ? "" : " ") << (x[j] > 0 ? "+" : "") << x[j];
    }
  }
  return out.str();
}

std::string table_text(std::vector<TableRow> const& rows) {
  std::ostringstream out;
  for (auto const& r : rows) {
    out << r.name << " | " << presentation_text(r.presentation) << " | "
        << r.H1.table_notation() << " | " << r.C.table_notation() << '\n';
  }
  return out.str();
}

}  // namespace bmg
