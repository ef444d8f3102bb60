#pragma once

// Constructive witnesses for pure infiniteness, vigor, infinite conjugacy
// classes and compressibility in full groups of products of full shifts.
// Every constructor subdivides along dimension 0 unless it has to do
// otherwise, so outputs are deterministic functions of the inputs.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"

namespace bht {

  namespace detail {

    inline std::size_t levels_for(int k, std::size_t at_least) {
      std::size_t levels = 0, count = 1;
      while (count < at_least) {
        count *= static_cast<std::size_t>(k);
        ++levels;
      }
      return levels;
    }

    inline Clopen clopen_of(SpaceSpec const& space, std::vector<Brick> bricks) {
      return Clopen(space, bricks);
    }

    // Writes x as a disjoint union of two nonempty clopens.
    inline std::pair<Clopen, Clopen> split_in_two(Clopen const& x) {
      auto const& space = x.space();
      if (x.size() >= 2) {
        std::vector<Brick> rest(x.bricks().begin() + 1, x.bricks().end());
        return {clopen_of(space, {x.bricks()[0]}), clopen_of(space, rest)};
      }
      auto kids = subdivide(space, x.bricks().at(0), 0);
      std::vector<Brick> rest(kids.begin() + 1, kids.end());
      return {clopen_of(space, {kids[0]}), clopen_of(space, rest)};
    }

    // Subdivide the first brick (in brick order) along `dim`, in place.
    inline void split_first(SpaceSpec const& space, std::vector<Brick>& bricks,
                            std::size_t dim) {
      auto kids = subdivide(space, bricks.front(), dim);
      bricks.erase(bricks.begin());
      bricks.insert(bricks.end(), kids.begin(), kids.end());
      std::sort(bricks.begin(), bricks.end());
    }

    // For every amount up to `limit`: a dimension j whose step k_j - 1 ends
    // some way of writing the amount as a nonnegative combination of steps,
    // preferring low dimensions; -1 if not representable.
    inline std::vector<int> step_table(SpaceSpec const& space, std::size_t limit) {
      std::vector<int> last(limit + 1, -1);
      last[0] = static_cast<int>(space.n());  // sentinel: representable, no step
      for (std::size_t v = 1; v <= limit; ++v) {
        for (std::size_t j = 0; j < space.n(); ++j) {
          auto step = static_cast<std::size_t>(space.k(j) - 1);
          if (step <= v && last[v - step] != -1) {
            last[v] = static_cast<int>(j);
            break;
          }
        }
      }
      return last;
    }

    inline std::vector<std::size_t> steps_for(SpaceSpec const&        space,
                                              std::vector<int> const& table,
                                              std::size_t             amount) {
      std::vector<std::size_t> dims;
      while (amount > 0) {
        auto j = static_cast<std::size_t>(table[amount]);
        dims.push_back(j);
        amount -= static_cast<std::size_t>(space.k(j) - 1);
      }
      return dims;
    }

    inline PrefixBijection match_in_order(SpaceSpec const&          space,
                                          std::vector<Brick> const& from,
                                          std::vector<Brick> const& to) {
      std::vector<Cell> cells;
      for (std::size_t i = 0; i < from.size(); ++i) {
        cells.push_back(Cell{from[i], to[i]});
      }
      return PrefixBijection::from_valid_cells(space, std::move(cells));
    }

    // The order-3 element Y1 -> r(B1) -> r(B2) -> Y1 built from
    // B1 : Y1 -> Z21 and B2 : r(B1) -> Z22, identity elsewhere.
    inline TableElement three_cycle(PrefixBijection const& b1,
                                    PrefixBijection const& b2) {
      auto const& space   = b1.space();
      auto        closing = invert(compose(b2, b1));
      Clopen      moved   = unite(unite(b1.source(), b1.range()), b2.range());
      auto        rest    = PrefixBijection::identity_on(complement(moved));
      return TableElement(disjoint_union({b1, b2, closing, rest}, space).merged());
    }

  }  // namespace detail

  // A bisection with source exactly a and range a proper subset of b.
  inline PrefixBijection compress(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    if (a.empty() || b.empty()) {
      throw DomainError("compress needs nonempty source and target");
    }
    auto const& space  = a.space();
    auto        levels = detail::levels_for(space.k(0), a.size() + 1);
    auto        slots  = subdivide_levels(space, b.bricks()[0], 0, levels);
    return detail::match_in_order(space, a.bricks(), slots);
  }

  // Two bisections with source x whose ranges are disjoint and inside x.
  inline std::pair<PrefixBijection, PrefixBijection> doubling_witness(Clopen const& x) {
    if (x.empty()) {
      throw DomainError("doubling witness needs a nonempty clopen");
    }
    auto const& space  = x.space();
    auto        halves = subdivide(space, x.bricks()[0], 0);
    return {compress(x, Clopen(space, {halves[0]})),
            compress(x, Clopen(space, {halves[1]}))};
  }

  // A bisection with source exactly a and range exactly b; exists iff the
  // H_0 classes agree (and both or neither are empty).
  inline PrefixBijection bisection_between(Clopen const& a, Clopen const& b) {
    require_same_space(a.space(), b.space());
    auto const& space = a.space();
    if (a.empty() && b.empty()) {
      return PrefixBijection(space);
    }
    if (a.empty() != b.empty()) {
      throw DomainError("no bisection between an empty and a nonempty clopen");
    }
    if (h0_class(a) != h0_class(b)) {
      throw DomainError("H0 class mismatch: class " + std::to_string(h0_class(a))
                        + " != class " + std::to_string(h0_class(b)) + " mod "
                        + std::to_string(space.g()));
    }
    std::size_t const ca = a.size(), cb = b.size();
    std::size_t       target = std::max(ca, cb);
    std::size_t       limit  = 2 * target + 64;
    auto              table  = detail::step_table(space, limit);
    while (table[target - ca] == -1 || table[target - cb] == -1) {
      ++target;
      if (target - std::min(ca, cb) > limit) {
        limit *= 2;
        table = detail::step_table(space, limit);
      }
    }
    auto from = a.bricks(), to = b.bricks();
    for (auto j : detail::steps_for(space, table, target - ca)) {
      detail::split_first(space, from, j);
    }
    for (auto j : detail::steps_for(space, table, target - cb)) {
      detail::split_first(space, to, j);
    }
    return detail::match_in_order(space, from, to);
  }

  inline Multisection multisection(Clopen const& x0, Clopen const& x1, Clopen const& x2) {
    require_same_space(x0.space(), x1.space());
    require_same_space(x0.space(), x2.space());
    if (x0.empty() || x1.empty() || x2.empty()) {
      throw DomainError("multisection needs three nonempty clopens");
    }
    if (!disjoint(x0, x1) || !disjoint(x1, x2) || !disjoint(x0, x2)) {
      throw DomainError("multisection clopens must be pairwise disjoint");
    }
    auto b1      = bisection_between(x0, x1);
    auto b2      = bisection_between(x1, x2);
    auto closing = invert(compose(b2, b1));
    auto rest = PrefixBijection::identity_on(complement(unite(unite(x0, x1), x2)));
    TableElement element(disjoint_union({b1, b2, closing, rest}, x0.space()).merged());
    return Multisection{std::move(element), x0, x1, x2};
  }

  enum class VigorCase {
    contained,  // Y1 inside Y2: identity
    direct,     // Y2 \ Y1 nonempty: a single order-3 element
    two_step    // Y2 strictly inside Y1: product of two order-3 elements
  };

  // Checks the preconditions and reports which construction applies.
  inline VigorCase classify_vigor(Clopen const& x, Clopen const& y1, Clopen const& y2) {
    require_same_space(x.space(), y1.space());
    require_same_space(x.space(), y2.space());
    if (x.is_full()) {
      throw DomainError("vigor needs a proper clopen X");
    }
    if (y2.empty()) {
      throw DomainError("vigor needs a nonempty Y2");
    }
    if (!subset_of(y1, x) || !subset_of(y2, x)) {
      throw DomainError("vigor needs Y1 and Y2 inside X");
    }
    if (subset_of(y1, y2)) {
      return VigorCase::contained;
    }
    if (!subset_of(y2, y1)) {
      return VigorCase::direct;
    }
    if (y1 == x) {
      throw DomainError(
          "unsatisfiable: Y1 = X cannot be moved strictly inside itself by an "
          "element supported in X");
    }
    return VigorCase::two_step;
  }

  // An element supported in x that maps y1 into y2.
  inline TableElement vigor_witness(Clopen const& x, Clopen const& y1, Clopen const& y2) {
    switch (classify_vigor(x, y1, y2)) {
      case VigorCase::contained:
        return TableElement::identity(x.space());
      case VigorCase::direct: {
        auto [z21, z22] = detail::split_in_two(difference(y2, y1));
        auto b1         = compress(y1, z21);
        auto b2         = compress(b1.range(), z22);
        return detail::three_cycle(b1, b2);
      }
      case VigorCase::two_step: {
        Clopen w     = difference(x, y1);
        auto   first = vigor_witness(x, y1, w);
        auto   moved = image(first, y1);
        return compose(vigor_witness(x, moved, y2), first);
      }
    }
    throw std::logic_error("unreachable");
  }

  struct Conjugate {
    TableElement conjugator;  // h, a product of order-3 elements
    TableElement value;       // h g h^{-1}
    Clopen       target;      // value maps probe into target
  };

  struct ConjugateFamily {
    Clopen                 probe;  // Y1, disjoint from g(Y1)
    std::vector<Conjugate> members;
  };

  // A nonempty brick y with g(y) disjoint from y and y u g(y) != everything.
  inline Brick displaced_brick(TableElement const& g) {
    auto canon = canonicalize(g);
    for (auto const& c : canon.cells()) {
      if (!c.moves()) {
        continue;
      }
      Brick y = c.dom;
      if (!disjoint(c.dom, c.ran)) {
        for (std::size_t j = 0; j < y.words.size(); ++j) {
          Word const& d = c.dom.words[j];
          Word const& r = c.ran.words[j];
          if (d == r) {
            continue;
          }
          Word const& longer = d.size() > r.size() ? d : r;
          Letter      avoid  = longer[std::min(d.size(), r.size())];
          y                  = child(y, j, avoid == 0 ? 1 : 0);
          break;
        }
      }
      return child(y, 0, 0);
    }
    throw DomainError("the identity has no distinct conjugates");
  }

  // count pairwise distinct conjugates h g h^{-1} with h in A(G).
  inline ConjugateFamily distinct_conjugates(TableElement const& g, std::size_t count) {
    auto const& space = g.space();
    if (is_identity(canonicalize(g))) {
      throw DomainError("the identity has no distinct conjugates");
    }
    if (count == 0) {
      throw DomainError("conjugate count must be positive");
    }
    Clopen probe(space, {displaced_brick(g)});
    Clopen moved  = image(g, probe);
    Clopen region = complement(probe);
    auto   slots  = subdivide_levels(space, region.bricks()[0], 0,
                                     detail::levels_for(space.k(0), count));
    ConjugateFamily out{probe, {}};
    for (std::size_t m = 0; m < count; ++m) {
      Clopen target(space, {slots[m]});
      auto   h = vigor_witness(region, moved, target);
      auto   c = conjugate(h, g);
      out.members.push_back(Conjugate{std::move(h), std::move(c), std::move(target)});
    }
    return out;
  }

  // Witnesses for the compressibility conditions at x0, with the subbase of
  // all clopens avoiding x0 (closed under finite unions).
  struct CompressibilityWitness {
    int   condition = 0;
    Brick neighbourhood;  // brick around x0 that is avoided or fixed pointwise
    std::optional<Clopen>       subbase_set;  // condition 1
    std::optional<TableElement> element;      // conditions 2 and 3
  };

  namespace detail {

    inline void require_avoids(RationalPoint const& x0, Clopen const& u, char const* name) {
      if (point_in(x0, u)) {
        throw DomainError(std::string("point lies inside ") + name
                          + ", which must avoid it");
      }
    }

    // Least depth whose neighbourhood of x0 misses `avoid`.
    inline std::size_t clear_depth(RationalPoint const& x0, Clopen const& avoid) {
      for (std::size_t n = 1;; ++n) {
        if (disjoint(Clopen(x0.space(), {x0.neighbourhood(n)}), avoid)) {
          return n;
        }
      }
    }

  }  // namespace detail

  // Condition 1: a subbase set containing the support of g.
  inline CompressibilityWitness compressibility_support(RationalPoint const& x0,
                                                        TableElement const&  g) {
    require_same_space(x0.space(), g.space());
    auto support = closed_support(g);
    detail::require_avoids(x0, support, "the closed support");
    auto  n = detail::clear_depth(x0, support);
    Brick y = x0.neighbourhood(n);
    return {1, y, complement(Clopen(x0.space(), {y})), std::nullopt};
  }

  // Condition 2: gamma fixing a neighbourhood of x0 with gamma(u1) inside u2.
  inline CompressibilityWitness compressibility_compress(RationalPoint const& x0,
                                                         Clopen const&        u1,
                                                         Clopen const&        u2) {
    require_same_space(x0.space(), u1.space());
    require_same_space(x0.space(), u2.space());
    detail::require_avoids(x0, u1, "U1");
    detail::require_avoids(x0, u2, "U2");
    auto   n = detail::clear_depth(x0, unite(u1, u2));
    Brick  y = x0.neighbourhood(n + 1);
    Clopen x = complement(Clopen(x0.space(), {y}));
    return {2, y, std::nullopt, vigor_witness(x, u1, u2)};
  }

  // Condition 3: gamma fixing a neighbourhood of x0 with gamma(u1) missing u3
  // and support missing u2.
  inline CompressibilityWitness compressibility_separate(RationalPoint const& x0,
                                                         Clopen const&        u1,
                                                         Clopen const&        u2,
                                                         Clopen const&        u3) {
    require_same_space(x0.space(), u1.space());
    require_same_space(x0.space(), u2.space());
    require_same_space(x0.space(), u3.space());
    detail::require_avoids(x0, u1, "U1");
    detail::require_avoids(x0, u2, "U2");
    detail::require_avoids(x0, u3, "U3");
    if (!disjoint(u1, u2)) {
      throw DomainError("condition 3 needs U1 and U2 disjoint");
    }
    auto   n     = detail::clear_depth(x0, unite(unite(u1, u2), u3));
    Clopen outer(x0.space(), {x0.neighbourhood(n)});
    Brick  inner = x0.neighbourhood(n + 1);
    Clopen shell = difference(outer, Clopen(x0.space(), {inner}));
    Clopen x     = unite(u1, shell);
    return {3, inner, std::nullopt, vigor_witness(x, u1, shell)};
  }

}  // namespace bht
