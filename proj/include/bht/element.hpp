#pragma once

// Elements of nV_{k,r} (more generally V_{kbar,r}): full bisections, i.e.
// prefix-exchange homeomorphisms of the whole unit space.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bisection.hpp"

namespace bht {

  class TableElement {
   public:
    // Validates that the cells form a full bisection.
    explicit TableElement(PrefixBijection table) : _table(std::move(table)) {
      auto const full = full_bricks(_table.space());
      auto const doms = _table.dom_bricks();
      auto const rans = _table.ran_bricks();
      if (!detail::covers(_table.space(), doms, full)) {
        throw DomainError("table domain does not cover the unit space");
      }
      if (!detail::covers(_table.space(), rans, full)) {
        throw DomainError("table range does not cover the unit space");
      }
    }

    TableElement(SpaceSpec space, std::vector<Cell> cells)
        : TableElement(PrefixBijection(std::move(space), std::move(cells))) {}

    static TableElement identity(SpaceSpec const& space) {
      return trusted(PrefixBijection::identity_on(Clopen::full(space)));
    }

    // For bisections known to be full.
    static TableElement trusted(PrefixBijection table) {
      TableElement out;
      out._table = std::move(table);
      return out;
    }

    SpaceSpec const& space() const noexcept {
      return _table.space();
    }
    PrefixBijection const& table() const noexcept {
      return _table;
    }
    std::vector<Cell> const& cells() const noexcept {
      return _table.cells();
    }

   private:
    TableElement() : _table(SpaceSpec({2}, 1)) {}

    PrefixBijection _table;
  };

  // For n = 1 this is the unique reduced tree pair; for n > 1 it is a
  // deterministic normal form, not necessarily minimal.
  inline TableElement canonicalize(TableElement const& g) {
    return TableElement::trusted(g.table().merged());
  }

  // Syntactic equality of stored tables.
  inline bool identical(TableElement const& f, TableElement const& g) {
    return f.table() == g.table();
  }

  // compose(f, g) applies g first, then f.
  inline TableElement compose(TableElement const& f, TableElement const& g) {
    return TableElement::trusted(compose(f.table(), g.table()).merged());
  }

  inline TableElement invert(TableElement const& g) {
    return TableElement::trusted(invert(g.table()).merged());
  }

  // A cell with dom != ran acts as the identity on no open subset of its
  // cylinder, so the identity is exactly the all-fixed table.
  inline bool is_identity(TableElement const& g) {
    for (auto const& c : g.cells()) {
      if (c.moves()) {
        return false;
      }
    }
    return true;
  }

  inline bool equals(TableElement const& f, TableElement const& g) {
    require_same_space(f.space(), g.space());
    return is_identity(compose(f, invert(g)));
  }

  inline RationalPoint apply(TableElement const& g, RationalPoint const& p) {
    auto out = apply(g.table(), p);
    if (!out) {
      throw std::logic_error("full table misses a point");
    }
    return *out;
  }

  inline Clopen image(TableElement const& g, Clopen const& x) {
    return image(g.table(), x);
  }

  // Closure of {x : g(x) != x}.
  inline Clopen closed_support(TableElement const& g) {
    std::vector<Brick> moved;
    for (auto const& c : g.cells()) {
      if (c.moves()) {
        moved.push_back(c.dom);
      }
    }
    return Clopen(g.space(), moved);
  }

  inline TableElement commutator(TableElement const& f, TableElement const& g) {
    return compose(compose(f, g), compose(invert(f), invert(g)));
  }

  inline TableElement conjugate(TableElement const& h, TableElement const& g) {
    return compose(compose(h, g), invert(h));
  }

  inline TableElement power(TableElement const& g, unsigned exponent) {
    auto out = TableElement::identity(g.space());
    for (unsigned i = 0; i < exponent; ++i) {
      out = compose(out, g);
    }
    return out;
  }

  // Least m <= bound with g^m = id, or nothing if there is none.
  inline std::optional<unsigned> order(TableElement const& g, unsigned bound) {
    if (bound == 0) {
      throw DomainError("order bound must be positive");
    }
    auto current = canonicalize(g);
    for (unsigned m = 1; m <= bound; ++m) {
      if (is_identity(current)) {
        return m;
      }
      if (m < bound) {
        current = compose(current, g);
      }
    }
    return std::nullopt;
  }

  // An order-3 element cycling x0 -> x1 -> x2 -> x0, identity elsewhere.
  struct Multisection {
    TableElement element;
    Clopen       x0, x1, x2;
  };

}  // namespace bht
