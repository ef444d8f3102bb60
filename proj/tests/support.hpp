#pragma once

// Small builders shared by the unit tests.

#include <bht.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace testing {

  inline bht::Word word(std::string const& s) {
    bht::Word out;
    if (s == "e") {
      return out;
    }
    for (char c : s) {
      out.push_back(static_cast<bht::Letter>(c <= '9' ? c - '0' : c - 'A' + 10));
    }
    return out;
  }

  // Brick from one word per dimension, e.g. brick({"0", "1"}).
  inline bht::Brick brick(std::initializer_list<std::string> words, int root = 0) {
    bht::Brick b{root, {}};
    for (auto const& w : words) {
      b.words.push_back(word(w));
    }
    return b;
  }

  // Clopen of one-dimensional cylinders, e.g. cyl(V2, {"00", "1"}).
  inline bht::Clopen cyl(bht::SpaceSpec const& space, std::initializer_list<std::string> words) {
    std::vector<bht::Brick> bricks;
    for (auto const& w : words) {
      bricks.push_back(brick({w}));
    }
    return bht::Clopen(space, bricks);
  }

  // Table on V_{k,1} from pairs of words.
  inline bht::TableElement table(bht::SpaceSpec const& space,
                                 std::initializer_list<std::pair<std::string, std::string>> cells) {
    std::vector<bht::Cell> out;
    for (auto const& [d, r] : cells) {
      out.push_back(bht::Cell{brick({d}), brick({r})});
    }
    return bht::TableElement(space, out);
  }

  inline bht::RationalPoint point(bht::SpaceSpec const& space, std::string const& text) {
    return bht::text::parse_point_line(text, space);
  }

  inline bht::SpaceSpec const V2 = bht::SpaceSpec::uniform(1, 2, 1);
  inline bht::SpaceSpec const V3 = bht::SpaceSpec::uniform(1, 3, 1);
  inline bht::SpaceSpec const V4 = bht::SpaceSpec::uniform(1, 4, 1);

}  // namespace testing
