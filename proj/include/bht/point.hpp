#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "clopen.hpp"

namespace bht {

  // Ultimately periodic sequence preperiod . period . period . ...
  struct PeriodicWord {
    Word preperiod;
    Word period;

    bool operator==(PeriodicWord const&) const = default;

    Letter at(std::size_t i) const {
      if (i < preperiod.size()) {
        return preperiod[i];
      }
      return period[(i - preperiod.size()) % period.size()];
    }

    // Shortest period, then shortest preperiod.
    void normalize() {
      if (period.empty()) {
        throw DomainError("periodic word needs a nonempty period");
      }
      std::size_t const len = period.size();
      for (std::size_t p = 1; p <= len; ++p) {
        if (len % p != 0) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = p; i < len && ok; ++i) {
          ok = period[i] == period[i - p];
        }
        if (ok) {
          period.resize(p);
          break;
        }
      }
      while (!preperiod.empty() && preperiod.back() == period.back()) {
        preperiod.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
      }
    }

    // The sequence with its first `count` letters removed.
    PeriodicWord drop(std::size_t count) const {
      PeriodicWord out;
      if (count <= preperiod.size()) {
        out.preperiod.assign(preperiod.begin() + static_cast<std::ptrdiff_t>(count),
                             preperiod.end());
        out.period = period;
      } else {
        std::size_t shift = (count - preperiod.size()) % period.size();
        out.period        = period;
        std::rotate(out.period.begin(),
                    out.period.begin() + static_cast<std::ptrdiff_t>(shift),
                    out.period.end());
      }
      out.normalize();
      return out;
    }

    PeriodicWord prepend(Word const& w) const {
      PeriodicWord out{w, period};
      out.preperiod.insert(out.preperiod.end(), preperiod.begin(), preperiod.end());
      out.normalize();
      return out;
    }

    bool starts_with(Word const& w) const {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (at(i) != w[i]) {
          return false;
        }
      }
      return true;
    }

    Word head(std::size_t count) const {
      Word out;
      out.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        out.push_back(at(i));
      }
      return out;
    }
  };

  class RationalPoint {
   public:
    RationalPoint(SpaceSpec space, int root, std::vector<PeriodicWord> coords)
        : _space(std::move(space)), _root(root), _coords(std::move(coords)) {
      if (_root < 0 || _root >= _space.r()) {
        throw DomainError("point root out of range for " + _space.describe());
      }
      if (_coords.size() != _space.n()) {
        throw DomainError("point has " + std::to_string(_coords.size())
                          + " coordinates, space has "
                          + std::to_string(_space.n()));
      }
      for (std::size_t j = 0; j < _coords.size(); ++j) {
        for (auto const* w : {&_coords[j].preperiod, &_coords[j].period}) {
          for (Letter a : *w) {
            if (a >= _space.k(j)) {
              throw DomainError("point letter out of range in dimension "
                                + std::to_string(j));
            }
          }
        }
        _coords[j].normalize();
      }
    }

    SpaceSpec const& space() const noexcept {
      return _space;
    }
    int root() const noexcept {
      return _root;
    }
    std::vector<PeriodicWord> const& coords() const noexcept {
      return _coords;
    }

    bool operator==(RationalPoint const& that) const {
      return _space == that._space && _root == that._root
             && _coords == that._coords;
    }

    bool in(Brick const& b) const {
      if (b.root != _root) {
        return false;
      }
      for (std::size_t j = 0; j < _coords.size(); ++j) {
        if (!_coords[j].starts_with(b.words[j])) {
          return false;
        }
      }
      return true;
    }

    // The brick of the first `depth` letters in every dimension.
    Brick neighbourhood(std::size_t depth) const {
      Brick b{_root, {}};
      for (auto const& c : _coords) {
        b.words.push_back(c.head(depth));
      }
      return b;
    }

    // Image under the transplant from.w . t -> to.w . t; requires in(from).
    RationalPoint transplanted(Brick const& from, Brick const& to) const {
      std::vector<PeriodicWord> coords;
      coords.reserve(_coords.size());
      for (std::size_t j = 0; j < _coords.size(); ++j) {
        coords.push_back(
            _coords[j].drop(from.words[j].size()).prepend(to.words[j]));
      }
      return RationalPoint(_space, to.root, std::move(coords));
    }

   private:
    SpaceSpec                 _space;
    int                       _root;
    std::vector<PeriodicWord> _coords;
  };

  inline bool point_in(RationalPoint const& p, Clopen const& x) {
    require_same_space(p.space(), x.space());
    return std::any_of(x.bricks().begin(), x.bricks().end(), [&p](Brick const& b) {
      return p.in(b);
    });
  }

}  // namespace bht
