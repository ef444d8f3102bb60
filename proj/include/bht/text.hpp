#pragma once

// Line-oriented text formats.
//
//   space n=<n> k=<k_1,...,k_n> r=<r>         clopen header, then bricks
//   root:<i> <w_1>,...,<w_n>                   one brick per line
//   table n=.. k=.. r=..                       element header, then cells
//   bisection n=.. k=.. r=..                   partial bisection header
//   root:<i> <dom words> -> root:<j> <ran words>
//   point n=.. k=.. r=..                       then one point line
//   root:<i> <pre>(<period>),...               ultimately periodic point
//   vpair                                      then <u> -> <w> binary lines
//
// Letters are 0-9 then A-Z (so alphabets up to 36 letters); `e` is the empty
// word. Blank lines and lines starting with '#' are ignored. Output is in
// canonical order and byte-stable.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "embedding.hpp"

namespace bht::text {

  struct Line {
    std::size_t number;  // 1-based
    std::string content;
  };

  inline std::vector<Line> significant_lines(std::string const& text,
                                             std::size_t        first_line = 1) {
    std::vector<Line>  out;
    std::istringstream in(text);
    std::string        raw;
    std::size_t        number = first_line;
    while (std::getline(in, raw)) {
      if (!raw.empty() && raw.back() == '\r') {
        raw.pop_back();
      }
      auto start = raw.find_first_not_of(" \t");
      if (start != std::string::npos && raw[start] != '#') {
        auto stop = raw.find_last_not_of(" \t");
        out.push_back({number, raw.substr(0, stop + 1)});
      }
      ++number;
    }
    return out;
  }

  namespace detail {

    inline char letter_char(Letter a) {
      if (a < 10) {
        return static_cast<char>('0' + a);
      }
      if (a < 36) {
        return static_cast<char>('A' + (a - 10));
      }
      throw DomainError("letter " + std::to_string(a) + " has no text form (max 35)");
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          return out;
        }
        start = pos + 1;
      }
    }

    class Cursor {
     public:
      Cursor(Line const& line) : _line(line) {}

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _line.number, _pos + 1);
      }

      bool done() {
        skip_space();
        return _pos >= _line.content.size();
      }

      void skip_space() {
        while (_pos < _line.content.size()
               && (_line.content[_pos] == ' ' || _line.content[_pos] == '\t')) {
          ++_pos;
        }
      }

      void expect(std::string_view lit) {
        skip_space();
        if (_line.content.compare(_pos, lit.size(), lit) != 0) {
          fail("expected '" + std::string(lit) + "'");
        }
        _pos += lit.size();
      }

      bool accept(std::string_view lit) {
        skip_space();
        if (_line.content.compare(_pos, lit.size(), lit) == 0) {
          _pos += lit.size();
          return true;
        }
        return false;
      }

      long integer() {
        skip_space();
        std::size_t start = _pos;
        while (_pos < _line.content.size() && std::isdigit(static_cast<unsigned char>(_line.content[_pos]))) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected an integer");
        }
        if (_pos - start > 9) {
          _pos = start;
          fail("integer too large");
        }
        return std::stol(_line.content.substr(start, _pos - start));
      }

      // A run of characters not containing any of `stops` or whitespace.
      std::string token(std::string_view stops = "") {
        skip_space();
        std::size_t start = _pos;
        while (_pos < _line.content.size() && _line.content[_pos] != ' '
               && _line.content[_pos] != '\t'
               && stops.find(_line.content[_pos]) == std::string_view::npos) {
          ++_pos;
        }
        return _line.content.substr(start, _pos - start);
      }

      std::size_t column() const {
        return _pos + 1;
      }
      std::size_t pos() const {
        return _pos;
      }
      Line const& line() const {
        return _line;
      }

      void end() {
        if (!done()) {
          fail("unexpected trailing text");
        }
      }

     private:
      Line const& _line;
      std::size_t _pos = 0;
    };

    // Letters (no 'e' shorthand) of one word starting at column `col`.
    inline Word parse_letters(std::string_view s, int k, Line const& line, std::size_t col) {
      Word out;
      for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        int  a = -1;
        if (c >= '0' && c <= '9') {
          a = c - '0';
        } else if (c >= 'A' && c <= 'Z') {
          a = 10 + (c - 'A');
        }
        if (a < 0 || a >= k) {
          throw ParseError(std::string("letter '") + c + "' out of range for alphabet of size "
                               + std::to_string(k),
                           line.number, col + i);
        }
        out.push_back(static_cast<Letter>(a));
      }
      return out;
    }

    inline Word parse_word(std::string_view s, int k, Line const& line, std::size_t col) {
      if (s == "e") {
        return {};
      }
      if (s.empty()) {
        throw ParseError("empty word must be written as 'e'", line.number, col);
      }
      return parse_letters(s, k, line, col);
    }

    inline Brick parse_brick(Cursor& cur, SpaceSpec const& space) {
      cur.expect("root:");
      auto root = cur.integer();
      if (root >= space.r()) {
        cur.fail("root " + std::to_string(root) + " out of range for r="
                 + std::to_string(space.r()));
      }
      cur.skip_space();
      std::size_t col   = cur.column();
      std::string words = cur.token("-");
      auto        parts = split(words, ',');
      if (parts.size() != space.n()) {
        throw ParseError("expected " + std::to_string(space.n()) + " comma-separated words, got "
                             + std::to_string(parts.size()),
                         cur.line().number, col);
      }
      Brick b{static_cast<int>(root), {}};
      for (std::size_t j = 0; j < parts.size(); ++j) {
        b.words.push_back(parse_word(parts[j], space.k(static_cast<std::size_t>(j)), cur.line(), col));
        col += parts[j].size() + 1;
      }
      return b;
    }

    // "<keyword> n=<n> k=<...> r=<r>"
    inline SpaceSpec parse_header(Line const& line, std::string_view keyword) {
      Cursor cur(line);
      cur.expect(keyword);
      cur.expect("n=");
      auto n = cur.integer();
      cur.expect("k=");
      cur.skip_space();
      std::size_t      col  = cur.column();
      auto             list = cur.token();
      std::vector<int> kbar;
      for (auto part : split(list, ',')) {
        if (part.empty() || part.size() > 3
            || part.find_first_not_of("0123456789") != std::string_view::npos) {
          throw ParseError("bad alphabet size list", line.number, col);
        }
        kbar.push_back(std::stoi(std::string(part)));
      }
      cur.expect("r=");
      auto r = cur.integer();
      cur.end();
      if (kbar.size() == 1 && n > 1) {
        kbar.assign(static_cast<std::size_t>(n), kbar[0]);
      }
      if (static_cast<long>(kbar.size()) != n) {
        throw ParseError("k list has " + std::to_string(kbar.size()) + " entries but n="
                             + std::to_string(n),
                         line.number, col);
      }
      for (int k : kbar) {
        if (k < 2 || k > 36) {
          throw ParseError("alphabet sizes must lie in [2, 36] in text form", line.number, col);
        }
      }
      if (r < 1) {
        throw ParseError("r must be >= 1", line.number, 1);
      }
      return SpaceSpec(kbar, static_cast<int>(r));
    }

    inline std::vector<Line> require_lines(std::string const& text, std::size_t first_line) {
      auto lines = significant_lines(text, first_line);
      if (lines.empty()) {
        throw ParseError("empty input", first_line, 1);
      }
      return lines;
    }

    inline std::vector<Cell> parse_cells(std::vector<Line> const& lines, SpaceSpec const& space) {
      std::vector<Cell> cells;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        Cursor cur(lines[i]);
        Brick  dom = parse_brick(cur, space);
        cur.expect("->");
        Brick ran = parse_brick(cur, space);
        cur.end();
        cells.push_back(Cell{std::move(dom), std::move(ran)});
      }
      return cells;
    }

  }  // namespace detail

  inline std::string format_word(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (Letter a : w) {
      out += detail::letter_char(a);
    }
    return out;
  }

  inline std::string format_brick(Brick const& b) {
    std::string out = "root:" + std::to_string(b.root) + " ";
    for (std::size_t j = 0; j < b.words.size(); ++j) {
      out += (j ? "," : "") + format_word(b.words[j]);
    }
    return out;
  }

  inline std::string format_space(SpaceSpec const& space, std::string_view keyword) {
    return std::string(keyword) + " " + space.describe() + "\n";
  }

  inline std::string format_clopen(Clopen const& x) {
    std::string out = format_space(x.space(), "space");
    for (auto const& b : x.bricks()) {
      out += format_brick(b) + "\n";
    }
    return out;
  }

  inline std::string format_cells(std::vector<Cell> const& cells) {
    std::string out;
    for (auto const& c : cells) {
      out += format_brick(c.dom) + " -> " + format_brick(c.ran) + "\n";
    }
    return out;
  }

  inline std::string format_table(TableElement const& g) {
    return format_space(g.space(), "table") + format_cells(g.cells());
  }

  inline std::string format_bisection(PrefixBijection const& b) {
    return format_space(b.space(), "bisection") + format_cells(b.cells());
  }

  inline std::string format_point_line(RationalPoint const& p) {
    std::string out = "root:" + std::to_string(p.root()) + " ";
    for (std::size_t j = 0; j < p.coords().size(); ++j) {
      auto const& c = p.coords()[j];
      out += (j ? "," : "");
      for (Letter a : c.preperiod) {
        out += detail::letter_char(a);
      }
      out += "(";
      for (Letter a : c.period) {
        out += detail::letter_char(a);
      }
      out += ")";
    }
    return out;
  }

  inline std::string format_point(RationalPoint const& p) {
    return format_space(p.space(), "point") + format_point_line(p) + "\n";
  }

  inline std::string format_vpair(VElement const& v) {
    std::string out = "vpair\n";
    for (auto const& [u, w] : v.pairs()) {
      out += format_word(u) + " -> " + format_word(w) + "\n";
    }
    return out;
  }

  inline Clopen parse_clopen(std::string const& text, std::size_t first_line = 1) {
    auto      lines = detail::require_lines(text, first_line);
    SpaceSpec space = detail::parse_header(lines[0], "space");
    std::vector<Brick> bricks;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      detail::Cursor cur(lines[i]);
      bricks.push_back(detail::parse_brick(cur, space));
      cur.end();
    }
    return Clopen(space, bricks);
  }

  inline TableElement parse_table(std::string const& text, std::size_t first_line = 1) {
    auto      lines = detail::require_lines(text, first_line);
    SpaceSpec space = detail::parse_header(lines[0], "table");
    return TableElement(space, detail::parse_cells(lines, space));
  }

  inline PrefixBijection parse_bisection(std::string const& text, std::size_t first_line = 1) {
    auto      lines = detail::require_lines(text, first_line);
    SpaceSpec space = detail::parse_header(lines[0], "bisection");
    return PrefixBijection(space, detail::parse_cells(lines, space));
  }

  // "root:<i> <pre>(<period>),..." against a known space.
  inline RationalPoint parse_point_line(Line const& line, SpaceSpec const& space) {
    detail::Cursor cur(line);
    cur.expect("root:");
    auto root = cur.integer();
    if (root >= space.r()) {
      cur.fail("root out of range");
    }
    cur.skip_space();
    std::size_t               col  = cur.column();
    auto                      body = cur.token();
    cur.end();
    auto                      parts = detail::split(body, ',');
    if (parts.size() != space.n()) {
      throw ParseError("expected " + std::to_string(space.n()) + " coordinates", line.number, col);
    }
    std::vector<PeriodicWord> coords;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto part  = parts[j];
      auto open  = part.find('(');
      auto close = part.find(')');
      if (open == std::string_view::npos || close != part.size() - 1 || close <= open + 1) {
        throw ParseError("coordinate must look like <pre>(<period>) with nonempty period",
                         line.number, col);
      }
      int k = space.k(j);
      coords.push_back(PeriodicWord{
          detail::parse_letters(part.substr(0, open), k, line, col),
          detail::parse_letters(part.substr(open + 1, close - open - 1), k, line, col + open + 1)});
      col += part.size() + 1;
    }
    return RationalPoint(space, static_cast<int>(root), std::move(coords));
  }

  inline RationalPoint parse_point_line(std::string const& text, SpaceSpec const& space) {
    return parse_point_line(Line{1, text}, space);
  }

  inline RationalPoint parse_point(std::string const& text, std::size_t first_line = 1) {
    auto      lines = detail::require_lines(text, first_line);
    SpaceSpec space = detail::parse_header(lines[0], "point");
    if (lines.size() != 2) {
      throw ParseError("point block needs exactly one point line", lines[0].number, 1);
    }
    return parse_point_line(lines[1], space);
  }

  inline VElement parse_vpair(std::string const& text, std::size_t first_line = 1) {
    auto lines = detail::require_lines(text, first_line);
    {
      detail::Cursor cur(lines[0]);
      cur.expect("vpair");
      cur.end();
    }
    std::vector<std::pair<Word, Word>> pairs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      detail::Cursor cur(lines[i]);
      cur.skip_space();
      auto c1 = cur.column();
      auto u  = cur.token("-");
      cur.expect("->");
      cur.skip_space();
      auto c2 = cur.column();
      auto w  = cur.token();
      cur.end();
      pairs.emplace_back(detail::parse_word(u, 2, lines[i], c1),
                         detail::parse_word(w, 2, lines[i], c2));
    }
    return VElement::from_pairs(pairs);
  }

  // "n,k,r" or "n,k_1:k_2:...:k_n,r"
  inline SpaceSpec parse_space_arg(std::string const& arg) {
    auto parts = detail::split(arg, ',');
    auto fail  = [&]() -> SpaceSpec {
      throw ParseError("space must be n,k,r or n,k_1:...:k_n,r; got '" + arg + "'", 1, 1);
    };
    if (parts.size() != 3) {
      return fail();
    }
    auto number = [&](std::string_view s) {
      if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string_view::npos) {
        fail();
      }
      return std::stoi(std::string(s));
    };
    int              n = number(parts[0]);
    std::vector<int> kbar;
    for (auto k : detail::split(parts[1], ':')) {
      kbar.push_back(number(k));
    }
    int r = number(parts[2]);
    if (n < 1) {
      return fail();
    }
    if (kbar.size() == 1) {
      kbar.assign(static_cast<std::size_t>(n), kbar[0]);
    }
    if (kbar.size() != static_cast<std::size_t>(n)) {
      return fail();
    }
    return SpaceSpec(kbar, r);
  }

  // A witness file: "witness <kind> [key=value ...]" followed by named blocks
  // "@<name>", each holding one of the formats above.
  struct Document {
    std::string                        kind;
    std::map<std::string, std::string> attributes;

    struct Block {
      std::string name;
      std::string body;
      std::size_t first_line;
    };
    std::vector<Block> blocks;

    Block const& block(std::string const& name) const {
      for (auto const& b : blocks) {
        if (b.name == name) {
          return b;
        }
      }
      throw ParseError("missing block @" + name, 1, 1);
    }

    bool has(std::string const& name) const {
      for (auto const& b : blocks) {
        if (b.name == name) {
          return true;
        }
      }
      return false;
    }

    void add(std::string name, std::string body) {
      blocks.push_back({std::move(name), std::move(body), 0});
    }

    std::string to_string() const {
      std::string out = "witness " + kind;
      for (auto const& [k, v] : attributes) {
        out += " " + k + "=" + v;
      }
      out += "\n";
      for (auto const& b : blocks) {
        out += "@" + b.name + "\n" + b.body;
      }
      return out;
    }
  };

  inline Document parse_document(std::string const& text) {
    auto lines = significant_lines(text);
    if (lines.empty()) {
      throw ParseError("empty witness file", 1, 1);
    }
    Document       doc;
    detail::Cursor cur(lines[0]);
    cur.expect("witness");
    doc.kind = cur.token();
    if (doc.kind.empty()) {
      cur.fail("missing witness kind");
    }
    while (!cur.done()) {
      auto col = cur.column();
      auto kv  = cur.token();
      auto eq  = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError("expected key=value", lines[0].number, col);
      }
      doc.attributes[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& line = lines[i];
      if (line.content[0] == '@') {
        auto name = line.content.substr(1);
        if (name.empty() || name.find(' ') != std::string::npos) {
          throw ParseError("bad block name", line.number, 1);
        }
        doc.blocks.push_back({name, "", line.number + 1});
      } else {
        if (doc.blocks.empty()) {
          throw ParseError("content before the first @block", line.number, 1);
        }
        auto& b = doc.blocks.back();
        // keep original numbering by padding skipped lines
        std::size_t next = b.first_line + static_cast<std::size_t>(std::count(b.body.begin(), b.body.end(), '\n'));
        while (next < line.number) {
          b.body += "\n";
          ++next;
        }
        b.body += line.content + "\n";
      }
    }
    return doc;
  }

}  // namespace bht::text
