#pragma once

// Compact open bisections of R_r x prod_j E_{k_j}: finite matchings of
// disjoint domain bricks onto disjoint range bricks. A cell (D, R) sends the
// point D.t to R.t, transplanting the tail separately in each dimension.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "clopen.hpp"
#include "point.hpp"

namespace bht {

  struct Cell {
    Brick dom;
    Brick ran;

    auto operator<=>(Cell const&) const = default;
    bool operator==(Cell const&) const  = default;

    bool moves() const {
      return dom != ran;
    }
  };

  namespace detail {

    inline std::size_t max_depth(std::vector<Brick> const& bricks) {
      std::size_t out = 0;
      for (auto const& b : bricks) {
        for (auto const& w : b.words) {
          out = std::max(out, w.size());
        }
      }
      return out;
    }

    inline void check_pairwise_disjoint(std::vector<Brick> const& bricks,
                                        char const*               what) {
      for (std::size_t i = 0; i < bricks.size(); ++i) {
        for (std::size_t j = i + 1; j < bricks.size(); ++j) {
          if (!disjoint(bricks[i], bricks[j])) {
            throw DomainError(std::string(what) + " bricks overlap");
          }
        }
      }
    }

    // Merge full sibling families of cells (children of D along dimension j
    // sent letter-for-letter onto children of R), scanning dimensions in
    // increasing order until nothing merges.
    inline std::vector<Cell> merge_cells(SpaceSpec const& space,
                                         std::vector<Cell> cells) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t j = 0; j < space.n(); ++j) {
          std::map<std::pair<Brick, Brick>, std::vector<std::size_t>> families;
          for (std::size_t i = 0; i < cells.size(); ++i) {
            Word const& dw = cells[i].dom.words[j];
            Word const& rw = cells[i].ran.words[j];
            if (dw.empty() || rw.empty() || dw.back() != rw.back()) {
              continue;
            }
            Brick pd = cells[i].dom, pr = cells[i].ran;
            pd.words[j].pop_back();
            pr.words[j].pop_back();
            families[{std::move(pd), std::move(pr)}].push_back(i);
          }
          std::vector<bool> dead(cells.size(), false);
          std::vector<Cell> merged;
          for (auto& [parent, members] : families) {
            if (members.size() == static_cast<std::size_t>(space.k(j))) {
              for (auto i : members) {
                dead[i] = true;
              }
              merged.push_back(Cell{parent.first, parent.second});
            }
          }
          if (!merged.empty()) {
            changed = true;
            std::vector<Cell> next;
            for (std::size_t i = 0; i < cells.size(); ++i) {
              if (!dead[i]) {
                next.push_back(std::move(cells[i]));
              }
            }
            next.insert(next.end(), merged.begin(), merged.end());
            cells = std::move(next);
          }
        }
      }
      std::sort(cells.begin(), cells.end());
      return cells;
    }

  }  // namespace detail

  class PrefixBijection {
   public:
    explicit PrefixBijection(SpaceSpec space) : _space(std::move(space)) {}

    // Validating constructor.
    PrefixBijection(SpaceSpec space, std::vector<Cell> cells)
        : _space(std::move(space)), _cells(std::move(cells)) {
      std::vector<Brick> doms, rans;
      for (auto const& c : _cells) {
        validate_brick(_space, c.dom);
        validate_brick(_space, c.ran);
        doms.push_back(c.dom);
        rans.push_back(c.ran);
      }
      detail::check_pairwise_disjoint(doms, "domain");
      detail::check_pairwise_disjoint(rans, "range");
      std::sort(_cells.begin(), _cells.end());
    }

    // Trusted construction from cells already known to be valid.
    static PrefixBijection from_valid_cells(SpaceSpec space, std::vector<Cell> cells) {
      PrefixBijection out(std::move(space));
      std::sort(cells.begin(), cells.end());
      out._cells = std::move(cells);
      return out;
    }

    // The identity bisection on x.
    static PrefixBijection identity_on(Clopen const& x) {
      std::vector<Cell> cells;
      for (auto const& b : x.bricks()) {
        cells.push_back(Cell{b, b});
      }
      return from_valid_cells(x.space(), std::move(cells));
    }

    SpaceSpec const& space() const noexcept {
      return _space;
    }
    std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }

    std::vector<Brick> dom_bricks() const {
      std::vector<Brick> out;
      for (auto const& c : _cells) {
        out.push_back(c.dom);
      }
      return out;
    }
    std::vector<Brick> ran_bricks() const {
      std::vector<Brick> out;
      for (auto const& c : _cells) {
        out.push_back(c.ran);
      }
      return out;
    }

    Clopen source() const {
      return Clopen(_space, dom_bricks());
    }
    Clopen range() const {
      return Clopen(_space, ran_bricks());
    }

    std::size_t max_dom_depth() const {
      return detail::max_depth(dom_bricks());
    }
    std::size_t max_ran_depth() const {
      return detail::max_depth(ran_bricks());
    }

    // Reduce by merging sibling cell families.
    PrefixBijection merged() const {
      return from_valid_cells(_space, detail::merge_cells(_space, _cells));
    }

    bool operator==(PrefixBijection const& that) const {
      return _space == that._space && _cells == that._cells;
    }

   private:
    SpaceSpec         _space;
    std::vector<Cell> _cells;
  };

  // f o g as a partial map: first g, then f, defined on g^{-1}(s(f)).
  // Refines g's range cells against f's domain cells (coarsest common
  // refinement).
  inline PrefixBijection compose(PrefixBijection const& f, PrefixBijection const& g) {
    require_same_space(f.space(), g.space());
    std::map<int, std::vector<Cell const*>> by_root;
    for (auto const& c : f.cells()) {
      by_root[c.dom.root].push_back(&c);
    }
    std::vector<Cell> out;
    for (auto const& gc : g.cells()) {
      auto it = by_root.find(gc.ran.root);
      if (it == by_root.end()) {
        continue;
      }
      for (Cell const* fc : it->second) {
        auto meet = intersect(gc.ran, fc->dom);
        if (!meet) {
          continue;
        }
        out.push_back(Cell{transplant(*meet, gc.ran, gc.dom),
                           transplant(*meet, fc->dom, fc->ran)});
      }
    }
    return PrefixBijection::from_valid_cells(f.space(), std::move(out));
  }

  inline PrefixBijection invert(PrefixBijection const& b) {
    std::vector<Cell> cells;
    cells.reserve(b.cells().size());
    for (auto const& c : b.cells()) {
      cells.push_back(Cell{c.ran, c.dom});
    }
    return PrefixBijection::from_valid_cells(b.space(), std::move(cells));
  }

  // Image of x intersected with the source.
  inline Clopen image(PrefixBijection const& b, Clopen const& x) {
    require_same_space(b.space(), x.space());
    std::vector<Brick> out;
    for (auto const& brick : x.bricks()) {
      for (auto const& c : b.cells()) {
        if (auto meet = intersect(brick, c.dom)) {
          out.push_back(transplant(*meet, c.dom, c.ran));
        }
      }
    }
    return Clopen(b.space(), out);
  }

  // The bisection with source restricted to s(b) intersected with x.
  inline PrefixBijection restrict_to(PrefixBijection const& b, Clopen const& x) {
    require_same_space(b.space(), x.space());
    std::vector<Cell> out;
    for (auto const& c : b.cells()) {
      for (auto const& brick : x.bricks()) {
        if (auto meet = intersect(brick, c.dom)) {
          out.push_back(Cell{*meet, transplant(*meet, c.dom, c.ran)});
        }
      }
    }
    return PrefixBijection::from_valid_cells(b.space(), std::move(out));
  }

  // Union of bisections with disjoint sources and disjoint ranges.
  inline PrefixBijection disjoint_union(std::vector<PrefixBijection> const& parts,
                                        SpaceSpec const&                    space) {
    std::vector<Cell> cells;
    for (auto const& p : parts) {
      require_same_space(p.space(), space);
      cells.insert(cells.end(), p.cells().begin(), p.cells().end());
    }
    return PrefixBijection(space, std::move(cells));
  }

  // The image of p under b, or nothing if p lies outside s(b).
  inline std::optional<RationalPoint> apply(PrefixBijection const& b,
                                            RationalPoint const&   p) {
    require_same_space(b.space(), p.space());
    for (auto const& c : b.cells()) {
      if (p.in(c.dom)) {
        return p.transplanted(c.dom, c.ran);
      }
    }
    return std::nullopt;
  }

}  // namespace bht
