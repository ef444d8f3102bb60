#pragma once

// Compact open subsets of the unit space as finite unions of bricks.
//
// The stored form is canonical and depends only on the point set: starting
// from each root cylinder, a node that is fully inside the set is emitted,
// an empty node is dropped, and a partial node is split along the lowest
// dimension on which the set (restricted to the node) actually depends. In
// one dimension this is the usual decomposition into maximal cylinders.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "space.hpp"

namespace bht {

  namespace detail {

    // S \ T; inputs may overlap, the output is pairwise disjoint whenever S is.
    inline std::vector<Brick> brick_difference(SpaceSpec const&          space,
                                               std::vector<Brick>        S,
                                               std::vector<Brick> const& T) {
      for (auto const& t : T) {
        if (S.empty()) {
          break;
        }
        std::vector<Brick> next;
        next.reserve(S.size());
        for (auto const& s : S) {
          if (disjoint(s, t)) {
            next.push_back(s);
          } else {
            auto pieces = subtract(space, s, t);
            next.insert(next.end(), pieces.begin(), pieces.end());
          }
        }
        S = std::move(next);
      }
      return S;
    }

    inline bool covers(SpaceSpec const&          space,
                       std::vector<Brick> const& S,
                       std::vector<Brick> const& T) {
      return brick_difference(space, T, S).empty();
    }

    // Pairwise disjoint list with the same union as the input.
    inline std::vector<Brick> disjointify(SpaceSpec const&          space,
                                          std::vector<Brick> const& bricks) {
      std::vector<Brick> out;
      for (auto const& b : bricks) {
        auto pieces = brick_difference(space, {b}, out);
        out.insert(out.end(), pieces.begin(), pieces.end());
      }
      return out;
    }

    inline std::vector<Brick> clip(std::vector<Brick> const& L, Brick const& node) {
      std::vector<Brick> out;
      for (auto const& b : L) {
        if (auto m = intersect(b, node)) {
          out.push_back(std::move(*m));
        }
      }
      return out;
    }

    // Does L (all inside node) depend on coordinate dim within node?
    inline bool depends_on(SpaceSpec const&          space,
                           Brick const&              node,
                           std::vector<Brick> const& L,
                           std::size_t               dim) {
      std::vector<Brick> saturated;
      saturated.reserve(L.size());
      for (auto const& b : L) {
        Brick s      = b;
        s.words[dim] = node.words[dim];
        saturated.push_back(std::move(s));
      }
      return !brick_difference(space, saturated, L).empty();
    }

    inline void canonical_rec(SpaceSpec const&    space,
                              Brick const&        node,
                              std::vector<Brick>  L,
                              std::vector<Brick>& out) {
      if (L.empty()) {
        return;
      }
      for (auto const& b : L) {
        if (contains(b, node)) {
          out.push_back(node);
          return;
        }
      }
      if (brick_difference(space, {node}, L).empty()) {
        out.push_back(node);
        return;
      }
      for (std::size_t j = 0; j < space.n(); ++j) {
        if (depends_on(space, node, L, j)) {
          for (auto const& c : subdivide(space, node, j)) {
            canonical_rec(space, c, clip(L, c), out);
          }
          return;
        }
      }
      throw std::logic_error("partial clopen independent of every coordinate");
    }

    inline std::vector<Brick> canonical_bricks(SpaceSpec const&          space,
                                               std::vector<Brick> const& L) {
      std::vector<Brick> out;
      for (auto const& root : full_bricks(space)) {
        canonical_rec(space, root, clip(L, root), out);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace detail

  class Clopen {
   public:
    explicit Clopen(SpaceSpec space) : _space(std::move(space)) {}

    // The union of `bricks`; overlaps are allowed.
    Clopen(SpaceSpec space, std::vector<Brick> const& bricks)
        : _space(std::move(space)) {
      for (auto const& b : bricks) {
        validate_brick(_space, b);
      }
      _bricks = detail::canonical_bricks(_space, detail::disjointify(_space, bricks));
    }

    static Clopen full(SpaceSpec const& space) {
      return Clopen(space, full_bricks(space));
    }

    SpaceSpec const& space() const noexcept {
      return _space;
    }
    std::vector<Brick> const& bricks() const noexcept {
      return _bricks;
    }
    std::size_t size() const noexcept {
      return _bricks.size();
    }
    bool empty() const noexcept {
      return _bricks.empty();
    }
    bool is_full() const {
      return _bricks == full_bricks(_space);
    }

    bool operator==(Clopen const& that) const {
      return _space == that._space && _bricks == that._bricks;
    }

   private:
    SpaceSpec          _space;
    std::vector<Brick> _bricks;
  };

  inline std::vector<Brick> canonicalize_bricks(SpaceSpec const&          space,
                                                std::vector<Brick> const& bricks) {
    return Clopen(space, bricks).bricks();
  }

  inline Clopen unite(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    auto all = a.bricks();
    all.insert(all.end(), b.bricks().begin(), b.bricks().end());
    return Clopen(a.space(), all);
  }

  inline Clopen intersect(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    std::vector<Brick> out;
    for (auto const& x : a.bricks()) {
      for (auto const& y : b.bricks()) {
        if (auto m = intersect(x, y)) {
          out.push_back(std::move(*m));
        }
      }
    }
    return Clopen(a.space(), out);
  }

  inline Clopen difference(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    return Clopen(a.space(),
                  detail::brick_difference(a.space(), a.bricks(), b.bricks()));
  }

  inline Clopen complement(Clopen const& a) {
    return difference(Clopen::full(a.space()), a);
  }

  inline bool subset_of(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    return detail::brick_difference(a.space(), a.bricks(), b.bricks()).empty();
  }

  inline bool disjoint(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    for (auto const& x : a.bricks()) {
      for (auto const& y : b.bricks()) {
        if (!disjoint(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  // Class in H_0 = Z/gZ: canonical brick count mod g. Any disjoint brick
  // decomposition gives the same residue, since subdividing along dimension
  // j adds k_j - 1 bricks.
  inline int h0_class(Clopen const& x) {
    return static_cast<int>(x.size() % static_cast<std::size_t>(x.space().g()));
  }

}  // namespace bht
