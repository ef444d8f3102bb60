#pragma once

// Unit space of R_r x E_{k_1} x ... x E_{k_n}: r disjoint copies of the
// product of full one-sided shifts, and its basic cylinders ("bricks").

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace bht {

  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  inline bool is_prefix(Word const& prefix, Word const& word) {
    return prefix.size() <= word.size()
           && std::equal(prefix.begin(), prefix.end(), word.begin());
  }

  inline bool comparable(Word const& a, Word const& b) {
    return a.size() <= b.size() ? is_prefix(a, b) : is_prefix(b, a);
  }

  class SpaceSpec {
   public:
    SpaceSpec(std::vector<int> kbar, int r) : _kbar(std::move(kbar)), _r(r) {
      if (_kbar.empty()) {
        throw DomainError("space needs at least one dimension");
      }
      if (_r < 1) {
        throw DomainError("root count must be >= 1, got " + std::to_string(r));
      }
      _g = 0;
      for (int k : _kbar) {
        if (k < 2 || k > 256) {
          throw DomainError("alphabet size must lie in [2, 256], got "
                            + std::to_string(k));
        }
        _g = std::gcd(_g, k - 1);
      }
    }

    // Brin-Higman-Thompson space nV_{k,r}.
    static SpaceSpec uniform(int n, int k, int r) {
      if (n < 1) {
        throw DomainError("dimension count must be >= 1, got "
                          + std::to_string(n));
      }
      return SpaceSpec(std::vector<int>(static_cast<std::size_t>(n), k), r);
    }

    std::size_t n() const noexcept {
      return _kbar.size();
    }
    int k(std::size_t dim) const {
      return _kbar.at(dim);
    }
    std::vector<int> const& kbar() const noexcept {
      return _kbar;
    }
    int r() const noexcept {
      return _r;
    }
    // gcd(k_1 - 1, ..., k_n - 1)
    int g() const noexcept {
      return _g;
    }
    bool uniform_alphabet() const noexcept {
      return std::all_of(
          _kbar.begin(), _kbar.end(), [this](int k) { return k == _kbar[0]; });
    }

    bool operator==(SpaceSpec const& that) const noexcept {
      return _kbar == that._kbar && _r == that._r;
    }

    std::string describe() const {
      std::string out = "n=" + std::to_string(n()) + " k=";
      for (std::size_t j = 0; j < _kbar.size(); ++j) {
        out += (j ? "," : "") + std::to_string(_kbar[j]);
      }
      return out + " r=" + std::to_string(_r);
    }

   private:
    std::vector<int> _kbar;
    int              _r;
    int              _g;
  };

  inline void require_same_space(SpaceSpec const& a, SpaceSpec const& b) {
    if (!(a == b)) {
      throw DomainError("mismatched spaces: " + a.describe() + " vs "
                        + b.describe());
    }
  }

  // The cylinder of points at `root` whose j-th coordinate starts with
  // words[j], for every j.
  struct Brick {
    int               root = 0;
    std::vector<Word> words;

    auto operator<=>(Brick const&) const = default;
    bool operator==(Brick const&) const  = default;

    std::size_t depth(std::size_t dim) const {
      return words[dim].size();
    }
    std::size_t total_depth() const {
      std::size_t d = 0;
      for (auto const& w : words) {
        d += w.size();
      }
      return d;
    }
  };

  inline Brick root_brick(SpaceSpec const& space, int root) {
    return Brick{root, std::vector<Word>(space.n())};
  }

  inline std::vector<Brick> full_bricks(SpaceSpec const& space) {
    std::vector<Brick> out;
    for (int i = 0; i < space.r(); ++i) {
      out.push_back(root_brick(space, i));
    }
    return out;
  }

  inline void validate_brick(SpaceSpec const& space, Brick const& b) {
    if (b.root < 0 || b.root >= space.r()) {
      throw DomainError("brick root " + std::to_string(b.root)
                        + " out of range for " + space.describe());
    }
    if (b.words.size() != space.n()) {
      throw DomainError("brick has " + std::to_string(b.words.size())
                        + " words, space has " + std::to_string(space.n())
                        + " dimensions");
    }
    for (std::size_t j = 0; j < b.words.size(); ++j) {
      for (Letter a : b.words[j]) {
        if (a >= space.k(j)) {
          throw DomainError("letter " + std::to_string(a)
                            + " out of range in dimension " + std::to_string(j));
        }
      }
    }
  }

  // a contains b as point sets.
  inline bool contains(Brick const& a, Brick const& b) {
    if (a.root != b.root) {
      return false;
    }
    for (std::size_t j = 0; j < a.words.size(); ++j) {
      if (!is_prefix(a.words[j], b.words[j])) {
        return false;
      }
    }
    return true;
  }

  inline bool disjoint(Brick const& a, Brick const& b) {
    if (a.root != b.root) {
      return true;
    }
    for (std::size_t j = 0; j < a.words.size(); ++j) {
      if (!comparable(a.words[j], b.words[j])) {
        return true;
      }
    }
    return false;
  }

  inline std::optional<Brick> intersect(Brick const& a, Brick const& b) {
    if (disjoint(a, b)) {
      return std::nullopt;
    }
    Brick out{a.root, {}};
    out.words.reserve(a.words.size());
    for (std::size_t j = 0; j < a.words.size(); ++j) {
      out.words.push_back(a.words[j].size() >= b.words[j].size() ? a.words[j]
                                                                 : b.words[j]);
    }
    return out;
  }

  inline Brick child(Brick b, std::size_t dim, Letter a) {
    b.words[dim].push_back(a);
    return b;
  }

  // The k_dim children of b along dimension dim, in letter order.
  inline std::vector<Brick> subdivide(SpaceSpec const& space,
                                      Brick const&     b,
                                      std::size_t      dim) {
    if (dim >= space.n()) {
      throw DomainError("dimension " + std::to_string(dim)
                        + " out of range for " + space.describe());
    }
    std::vector<Brick> out;
    out.reserve(static_cast<std::size_t>(space.k(dim)));
    for (int a = 0; a < space.k(dim); ++a) {
      out.push_back(child(b, dim, static_cast<Letter>(a)));
    }
    return out;
  }

  // All sub-bricks of b obtained by appending `levels` letters in dimension
  // dim, in brick order.
  inline std::vector<Brick> subdivide_levels(SpaceSpec const& space,
                                             Brick const&     b,
                                             std::size_t      dim,
                                             std::size_t      levels) {
    std::vector<Brick> current{b};
    for (std::size_t l = 0; l < levels; ++l) {
      std::vector<Brick> next;
      for (auto const& c : current) {
        auto kids = subdivide(space, c, dim);
        next.insert(next.end(), kids.begin(), kids.end());
      }
      current = std::move(next);
    }
    return current;
  }

  // a \ b as a list of pairwise disjoint bricks.
  inline std::vector<Brick> subtract(SpaceSpec const& space,
                                     Brick const&     a,
                                     Brick const&     b) {
    auto meet = intersect(a, b);
    if (!meet) {
      return {a};
    }
    std::vector<Brick> out;
    Brick              cur = a;
    for (std::size_t j = 0; j < a.words.size(); ++j) {
      Word const& target = meet->words[j];
      while (cur.words[j].size() < target.size()) {
        Letter keep = target[cur.words[j].size()];
        for (int y = 0; y < space.k(j); ++y) {
          if (y != keep) {
            out.push_back(child(cur, j, static_cast<Letter>(y)));
          }
        }
        cur.words[j].push_back(keep);
      }
    }
    return out;
  }

  // Transplant: the image of sub-brick `piece` of `from` under the map
  // from.w . t -> to.w . t (per dimension).
  inline Brick transplant(Brick const& piece, Brick const& from, Brick const& to) {
    Brick out{to.root, to.words};
    for (std::size_t j = 0; j < piece.words.size(); ++j) {
      out.words[j].insert(out.words[j].end(),
                          piece.words[j].begin()
                              + static_cast<std::ptrdiff_t>(from.words[j].size()),
                          piece.words[j].end());
    }
    return out;
  }

}  // namespace bht
