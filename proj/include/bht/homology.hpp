#pragma once

// Closed forms for groupoid homology, abelianization and proper characters
// of nV_{k,r} and of the mixed-slope groups V_{kbar,r}.
//
//   H_i = (Z/gZ)^{C(n-1, i)},  g = gcd(k_1 - 1, ..., k_n - 1), independent of r.
//
// For equal alphabet sizes the abelianization follows from the exact
// sequence H_0 (x) Z_2 -> F_ab -> H_1 -> 0 case by case.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "space.hpp"

namespace bht {

  // Finite abelian group as a direct sum of cyclic groups (0 = infinite
  // cyclic). Factors are kept as constructed for display; equality compares
  // prime-power decompositions.
  class AbelianGroupDesc {
   public:
    AbelianGroupDesc() = default;

    explicit AbelianGroupDesc(std::vector<std::uint64_t> orders) {
      for (auto q : orders) {
        if (q != 1) {
          _factors.push_back(q);
        }
      }
    }

    std::vector<std::uint64_t> const& factors() const noexcept {
      return _factors;
    }

    bool trivial() const noexcept {
      return _factors.empty();
    }

    // 0 if infinite.
    std::uint64_t order() const noexcept {
      std::uint64_t out = 1;
      for (auto q : _factors) {
        if (q == 0) {
          return 0;
        }
        out *= q;
      }
      return out;
    }

    // Sorted prime powers (infinite factors kept as 0).
    std::vector<std::uint64_t> primary() const {
      std::vector<std::uint64_t> out;
      for (auto q : _factors) {
        if (q == 0) {
          out.push_back(0);
          continue;
        }
        for (std::uint64_t p = 2; q > 1; ++p) {
          std::uint64_t power = 1;
          while (q % p == 0) {
            q /= p;
            power *= p;
          }
          if (power > 1) {
            out.push_back(power);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool operator==(AbelianGroupDesc const& that) const {
      return primary() == that.primary();
    }

    // "Z_2 x Z_4", "Z" for infinite cyclic, "0" for the trivial group.
    std::string to_string() const {
      if (_factors.empty()) {
        return "0";
      }
      std::string out;
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        out += i ? " x " : "";
        out += _factors[i] == 0 ? std::string("Z") : "Z_" + std::to_string(_factors[i]);
      }
      return out;
    }

   private:
    std::vector<std::uint64_t> _factors;
  };

  struct CharacterFamily {
    std::size_t   count;
    std::uint64_t order;

    bool operator==(CharacterFamily const&) const = default;
  };

  // Proper characters, listed the way they are usually enumerated (a family
  // of `count` characters of a given order, i.e. generators of the dual
  // group), together with the full dual group.
  struct CharacterDesc {
    std::vector<CharacterFamily> families;
    AbelianGroupDesc             dual;

    std::size_t count() const {
      std::size_t out = 0;
      for (auto const& f : families) {
        out += f.count;
      }
      return out;
    }
  };

  inline std::uint64_t binomial(std::uint64_t n, std::uint64_t i) {
    if (i > n) {
      return 0;
    }
    std::uint64_t out = 1;
    for (std::uint64_t t = 1; t <= i; ++t) {
      out = out * (n - i + t) / t;
    }
    return out;
  }

  inline AbelianGroupDesc homology(SpaceSpec const& space, std::size_t degree) {
    auto copies = binomial(space.n() - 1, degree);
    return AbelianGroupDesc(
        std::vector<std::uint64_t>(copies, static_cast<std::uint64_t>(space.g())));
  }

  namespace detail {

    inline void require_determined(SpaceSpec const& space) {
      if (!space.uniform_alphabet() && space.g() > 1) {
        throw DomainError(
            "abelianization not determined for mixed alphabet sizes with gcd(k_j - 1) = "
            + std::to_string(space.g()));
      }
    }

  }  // namespace detail

  inline AbelianGroupDesc abelianization(SpaceSpec const& space) {
    detail::require_determined(space);
    if (!space.uniform_alphabet()) {
      return {};  // g = 1: acyclic
    }
    std::uint64_t const k = static_cast<std::uint64_t>(space.k(0));
    std::size_t const   n = space.n();
    std::vector<std::uint64_t> rest(n - 1, k - 1);
    if (k % 2 == 0) {
      return AbelianGroupDesc(rest);  // trivial for k = 2 or n = 1
    }
    if (n == 1) {
      return AbelianGroupDesc({2});
    }
    if (k % 4 == 1) {
      rest.insert(rest.begin(), 2);
      return AbelianGroupDesc(rest);
    }
    if (n == 2) {
      return AbelianGroupDesc({2 * k - 2});
    }
    return AbelianGroupDesc(rest);
  }

  inline CharacterDesc proper_characters(SpaceSpec const& space) {
    CharacterDesc out{{}, abelianization(space)};
    if (!space.uniform_alphabet()) {
      return out;
    }
    std::uint64_t const k = static_cast<std::uint64_t>(space.k(0));
    std::size_t const   n = space.n();
    if (k % 2 == 0) {
      if (k > 2 && n > 1) {
        out.families.push_back({n - 1, k - 1});
      }
    } else if (n == 1) {
      out.families.push_back({1, 2});
    } else if (k % 4 == 1) {
      out.families.push_back({1, 2});
      out.families.push_back({n - 1, k - 1});
    } else if (n == 2) {
      out.families.push_back({1, 2 * k - 2});
    } else {
      out.families.push_back({n - 1, k - 1});
    }
    return out;
  }

  // For mixed sizes with g > 1 the group surjects onto H_1 = (Z/gZ)^{n-1},
  // which is nontrivial since n >= 2.
  inline bool is_perfect(SpaceSpec const& space) {
    if (!space.uniform_alphabet()) {
      return space.g() == 1;
    }
    return abelianization(space).trivial();
  }

}  // namespace bht
