#pragma once

// Thompson's group V inside nV_{k,r}, supported on a class-zero clopen Y
// containing a prescribed proper clopen X.
//
// Y is split as Y0 u Y1 with both halves of class zero, and s0, s1 are
// bisections from Y onto the halves. A binary word u = u_1...u_m names the
// cell s_u(Y) with s_u = s_{u_1} o ... o s_{u_m}; a tree pair (u_i -> w_i)
// acts on the cell of u_i by s_{w_i} o s_{u_i}^{-1}.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "random.hpp"

namespace bht {

  inline SpaceSpec binary_space() {
    return SpaceSpec({2}, 1);
  }

  // An element of V as a reduced binary tree pair.
  class VElement {
   public:
    explicit VElement(TableElement element) : _element(canonicalize(element)) {
      if (!(_element.space() == binary_space())) {
        throw DomainError("V elements live on the binary Cantor set (n=1 k=2 r=1)");
      }
    }

    static VElement identity() {
      return VElement(TableElement::identity(binary_space()));
    }

    // Leaves of the domain tree matched to leaves of the range tree.
    static VElement from_pairs(std::vector<std::pair<Word, Word>> const& pairs) {
      std::vector<Cell> cells;
      for (auto const& [u, w] : pairs) {
        cells.push_back(Cell{Brick{0, {u}}, Brick{0, {w}}});
      }
      return VElement(TableElement(binary_space(), std::move(cells)));
    }

    TableElement const& element() const noexcept {
      return _element;
    }

    std::vector<std::pair<Word, Word>> pairs() const {
      std::vector<std::pair<Word, Word>> out;
      for (auto const& c : _element.cells()) {
        out.emplace_back(c.dom.words[0], c.ran.words[0]);
      }
      return out;
    }

   private:
    TableElement _element;
  };

  // v * w: apply w first.
  inline VElement operator*(VElement const& v, VElement const& w) {
    return VElement(compose(v.element(), w.element()));
  }

  // Random tree pair with both trees of depth at most max_depth.
  inline VElement random_velement(Rng& rng, std::size_t max_depth = 5,
                                  std::size_t max_splits = 6) {
    auto const space = binary_space();
    for (;;) {
      std::vector<std::size_t> dims(detail::uniform_index(rng, max_splits + 1), 0);
      auto dom = detail::partition_along(space, rng, dims, max_depth);
      auto ran = detail::partition_along(space, rng, dims, max_depth);
      if (dom.size() != ran.size()) {
        continue;
      }
      std::shuffle(ran.begin(), ran.end(), rng);
      std::vector<Cell> cells;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        cells.push_back(Cell{dom[i], ran[i]});
      }
      return VElement(TableElement(space, std::move(cells)));
    }
  }

  struct VEmbedding {
    SpaceSpec       space;
    Clopen          requested;  // X
    Clopen          support;    // Y
    PrefixBijection s0, s1;
  };

  inline VEmbedding build_v_embedding(SpaceSpec const& space, Clopen const& x) {
    require_same_space(space, x.space());
    if (x.is_full()) {
      throw DomainError("V embedding needs a proper clopen, got the whole space");
    }
    if (x.empty()) {
      throw DomainError("V embedding needs a nonempty clopen");
    }
    int const g = space.g();

    Clopen y = x;
    if (h0_class(x) != 0) {
      auto needed = static_cast<std::size_t>(g - h0_class(x));
      auto spare  = complement(x).bricks();
      while (spare.size() < needed + 1) {
        detail::split_first(space, spare, 0);
      }
      y = unite(x, Clopen(space, std::vector<Brick>(spare.begin(),
                                                    spare.begin() + static_cast<std::ptrdiff_t>(needed))));
    }

    auto pieces = y.bricks();
    while (pieces.size() <= static_cast<std::size_t>(g)) {
      detail::split_first(space, pieces, 0);
    }
    auto   mid = pieces.begin() + g;
    Clopen y0(space, std::vector<Brick>(pieces.begin(), mid));
    Clopen y1(space, std::vector<Brick>(mid, pieces.end()));
    return VEmbedding{space, x, y, bisection_between(y, y0), bisection_between(y, y1)};
  }

  // s_u : Y -> cell(u).
  inline PrefixBijection cell_map(VEmbedding const& emb, Word const& u) {
    auto out = PrefixBijection::identity_on(emb.support);
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
      out = compose(*it == 0 ? emb.s0 : emb.s1, out);
    }
    return out;
  }

  inline Clopen cell(VEmbedding const& emb, Word const& u) {
    return cell_map(emb, u).range();
  }

  inline Clopen cells(VEmbedding const& emb, std::vector<Word> const& words) {
    Clopen out(emb.space);
    for (auto const& u : words) {
      out = unite(out, cell(emb, u));
    }
    return out;
  }

  inline TableElement evaluate_embedding(VEmbedding const& emb, VElement const& v) {
    std::vector<PrefixBijection> parts;
    for (auto const& [u, w] : v.pairs()) {
      parts.push_back(compose(cell_map(emb, w), invert(cell_map(emb, u))));
    }
    parts.push_back(PrefixBijection::identity_on(complement(emb.support)));
    return TableElement(disjoint_union(parts, emb.space).merged());
  }

  // Vigor inside Y for the union of binary cells named by x, y1, y2: solve in
  // V on the binary Cantor set, then transport through the embedding.
  inline bool check_vigor_instance(VEmbedding const&        emb,
                                   std::vector<Word> const& x,
                                   std::vector<Word> const& y1,
                                   std::vector<Word> const& y2) {
    auto binary = [](std::vector<Word> const& words) {
      std::vector<Brick> bricks;
      for (auto const& u : words) {
        bricks.push_back(Brick{0, {u}});
      }
      return Clopen(binary_space(), bricks);
    };
    VElement v(vigor_witness(binary(x), binary(y1), binary(y2)));
    auto     gamma = evaluate_embedding(emb, v);
    return subset_of(closed_support(gamma), cells(emb, x))
           && subset_of(image(gamma, cells(emb, y1)), cells(emb, y2));
  }

  struct VigorReport {
    std::size_t trials    = 0;
    std::size_t successes = 0;
    std::size_t failures  = 0;
  };

  inline VigorReport image_vigor_check(VEmbedding const& emb,
                                       std::size_t       trials,
                                       std::size_t       depth,
                                       Rng&              rng) {
    if (trials == 0 || depth == 0) {
      throw DomainError("trials and depth must be positive");
    }
    std::vector<Word> all;
    for (std::size_t code = 0; code < (std::size_t(1) << depth); ++code) {
      Word u;
      for (std::size_t i = depth; i-- > 0;) {
        u.push_back(static_cast<Letter>((code >> i) & 1));
      }
      all.push_back(std::move(u));
    }
    VigorReport report;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<Word> x, y1, y2;
      auto              shuffled = all;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      auto keep = 1 + detail::uniform_index(rng, all.size() - 1);  // proper, nonempty
      x.assign(shuffled.begin(), shuffled.begin() + static_cast<std::ptrdiff_t>(keep));
      for (auto const& u : x) {
        if (rng() % 2) {
          y1.push_back(u);
        }
        if (rng() % 2) {
          y2.push_back(u);
        }
      }
      if (y2.empty()) {
        y2.push_back(x[detail::uniform_index(rng, x.size())]);
      }
      // force Y2 \ Y1 to be nonempty
      auto pick = y2[detail::uniform_index(rng, y2.size())];
      y1.erase(std::remove(y1.begin(), y1.end(), pick), y1.end());

      ++report.trials;
      bool ok = false;
      try {
        ok = check_vigor_instance(emb, x, y1, y2);
      } catch (DomainError const&) {
        ok = false;
      }
      ++(ok ? report.successes : report.failures);
    }
    return report;
  }

}  // namespace bht
