#pragma once

// Random generators for clopens, points and group elements. All take an
// explicit engine so results are reproducible from a seed.

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "witness.hpp"

namespace bht {

  using Rng = std::mt19937_64;

  namespace detail {

    inline std::size_t uniform_index(Rng& rng, std::size_t size) {
      return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    }

    // Split a random brick (whose word in the chosen dimension is shorter
    // than max_depth) along each dimension in `dims`, in turn.
    inline std::vector<Brick> partition_along(SpaceSpec const&                space,
                                              Rng&                            rng,
                                              std::vector<std::size_t> const& dims,
                                              std::size_t                     max_depth) {
      auto bricks = full_bricks(space);
      for (auto j : dims) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < bricks.size(); ++i) {
          if (bricks[i].depth(j) < max_depth) {
            open.push_back(i);
          }
        }
        if (open.empty()) {
          continue;
        }
        auto i    = open[uniform_index(rng, open.size())];
        auto kids = subdivide(space, bricks[i], j);
        bricks.erase(bricks.begin() + static_cast<std::ptrdiff_t>(i));
        bricks.insert(bricks.end(), kids.begin(), kids.end());
      }
      return bricks;
    }

    inline std::vector<std::size_t> random_dims(SpaceSpec const& space,
                                                Rng&             rng,
                                                std::size_t      splits) {
      std::vector<std::size_t> dims;
      for (std::size_t s = 0; s < splits; ++s) {
        dims.push_back(uniform_index(rng, space.n()));
      }
      return dims;
    }

  }  // namespace detail

  inline std::vector<Brick> random_partition(SpaceSpec const& space,
                                             Rng&             rng,
                                             std::size_t      splits,
                                             std::size_t      max_depth = 4) {
    return detail::partition_along(space, rng, detail::random_dims(space, rng, splits),
                                   max_depth);
  }

  inline Clopen random_clopen(SpaceSpec const& space, Rng& rng, std::size_t splits = 4) {
    auto               part = random_partition(space, rng, splits);
    std::vector<Brick> chosen;
    for (auto const& b : part) {
      if (rng() % 2 == 0) {
        chosen.push_back(b);
      }
    }
    return Clopen(space, chosen);
  }

  inline RationalPoint random_point(SpaceSpec const& space, Rng& rng,
                                    std::size_t max_len = 4) {
    std::vector<PeriodicWord> coords;
    for (std::size_t j = 0; j < space.n(); ++j) {
      std::uniform_int_distribution<int> letter(0, space.k(j) - 1);
      PeriodicWord                       w;
      auto pre_len    = detail::uniform_index(rng, max_len + 1);
      auto period_len = 1 + detail::uniform_index(rng, max_len);
      for (std::size_t i = 0; i < pre_len; ++i) {
        w.preperiod.push_back(static_cast<Letter>(letter(rng)));
      }
      for (std::size_t i = 0; i < period_len; ++i) {
        w.period.push_back(static_cast<Letter>(letter(rng)));
      }
      coords.push_back(std::move(w));
    }
    auto root = static_cast<int>(detail::uniform_index(rng, static_cast<std::size_t>(space.r())));
    return RationalPoint(space, root, std::move(coords));
  }

  // A permutation of the bricks of a random partition.
  inline TableElement random_brick_permutation(SpaceSpec const& space,
                                               Rng&             rng,
                                               std::size_t      splits = 3) {
    auto dom = random_partition(space, rng, splits);
    auto ran = dom;
    std::shuffle(ran.begin(), ran.end(), rng);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      cells.push_back(Cell{dom[i], ran[i]});
    }
    return canonicalize(TableElement(space, std::move(cells)));
  }

  // A random matching between two independent partitions of equal size.
  inline TableElement random_table(SpaceSpec const& space, Rng& rng, std::size_t splits = 3) {
    auto dims = detail::random_dims(space, rng, splits);
    auto dom  = detail::partition_along(space, rng, dims, 4);
    auto ran  = detail::partition_along(space, rng, dims, 4);
    if (dom.size() != ran.size()) {
      // a depth cap skipped a split on one side only
      return random_brick_permutation(space, rng, splits);
    }
    std::shuffle(ran.begin(), ran.end(), rng);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      cells.push_back(Cell{dom[i], ran[i]});
    }
    return canonicalize(TableElement(space, std::move(cells)));
  }

  // The 3-cycle on three random bricks of a random partition.
  inline TableElement random_multisection(SpaceSpec const& space, Rng& rng,
                                          std::size_t splits = 3) {
    std::vector<Brick> part;
    do {
      part = random_partition(space, rng, splits);
    } while (part.size() < 3);
    std::shuffle(part.begin(), part.end(), rng);
    return multisection(Clopen(space, {part[0]}), Clopen(space, {part[1]}),
                        Clopen(space, {part[2]}))
        .element;
  }

  // A product of one to three random factors of the kinds above.
  inline TableElement random_element(SpaceSpec const& space, Rng& rng) {
    auto out     = TableElement::identity(space);
    auto factors = 1 + detail::uniform_index(rng, 3);
    for (std::size_t i = 0; i < factors; ++i) {
      switch (detail::uniform_index(rng, 3)) {
        case 0:
          out = compose(out, random_multisection(space, rng));
          break;
        case 1:
          out = compose(out, random_brick_permutation(space, rng));
          break;
        default:
          out = compose(out, random_table(space, rng));
          break;
      }
    }
    return out;
  }

}  // namespace bht
