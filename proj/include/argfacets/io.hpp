#pragma once

// Reading and writing frameworks in the ICCMA text formats:
//   apx      arg(NAME).  att(NAME,NAME).   '%' starts a comment
//   tgf      node ids, a line holding only '#', then "id id" edge lines
//   iccma23  "p af N" header, arguments 1..N, "i j" attack lines, '#' comments

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"

namespace argfacets {

enum class Format { apx, tgf, iccma23 };

inline std::string_view to_string(Format f) {
  switch (f) {
    case Format::apx: return "apx";
    case Format::tgf: return "tgf";
    case Format::iccma23: return "iccma23";
  }
  return "?";
}

inline std::optional<Format> parse_format(std::string_view text) {
  if (text == "apx") return Format::apx;
  if (text == "tgf") return Format::tgf;
  if (text == "iccma23" || text == "i23" || text == "af") return Format::iccma23;
  return std::nullopt;
}

// Guess from a file name: .apx, .tgf, .af / .i23.
inline std::optional<Format> format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  return parse_format(path.substr(dot + 1));
}

namespace detail {

inline bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    auto start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = nl + 1;
  }
  return out;
}

class ApxScanner {
 public:
  explicit ApxScanner(std::string_view text) : text_(text) {}

  ArgumentationFramework parse() {
    FrameworkBuilder b;
    struct PendingAttack {
      std::string from, to;
      std::size_t line;
    };
    std::vector<PendingAttack> attacks;
    while (true) {
      skip_blank();
      if (pos_ >= text_.size()) break;
      auto stmt_line = line_;
      auto keyword = identifier();
      skip_blank();
      expect('(');
      auto first = name();
      if (keyword == "arg") {
        skip_blank();
        expect(')');
        b.add_argument(std::move(first), stmt_line);
      } else if (keyword == "att") {
        skip_blank();
        expect(',');
        auto second = name();
        skip_blank();
        expect(')');
        attacks.push_back({std::move(first), std::move(second), stmt_line});
      } else {
        throw ParseError(stmt_line, "expected 'arg' or 'att', found '" + keyword + "'");
      }
      skip_blank();
      expect('.');
    }
    // Attacks may precede the declarations they mention.
    for (const auto& a : attacks) b.add_attack(a.from, a.to, a.line);
    return std::move(b).build();
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (is_space(c)) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string identifier() {
    auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(line_, std::string("unexpected character '") + text_[pos_] + "'");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string name() {
    skip_blank();
    auto start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ',' || c == ')' || c == '(' || is_space(c)) break;
      ++pos_;
    }
    if (start == pos_) throw ParseError(line_, "expected an argument name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (pos_ >= text_.size()) throw ParseError(line_, std::string("expected '") + c + "' before end of input");
    if (text_[pos_] != c)
      throw ParseError(line_, std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

inline ArgumentationFramework parse_tgf(std::string_view text) {
  FrameworkBuilder b;
  bool edges = false;
  std::size_t lineno = 0;
  for (auto line : lines_of(text)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!edges) {
      if (tokens.size() == 1 && tokens[0] == "#") {
        edges = true;
        continue;
      }
      // Node id, optional label ignored.
      b.add_argument(std::string(tokens[0]), lineno);
    } else {
      if (tokens.size() < 2) throw ParseError(lineno, "edge line needs two node ids");
      b.add_attack(tokens[0], tokens[1], lineno);
    }
  }
  return std::move(b).build();
}

inline std::size_t parse_positive(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, found '" + std::string(token) + "'");
  return value;
}

inline ArgumentationFramework parse_iccma23(std::string_view text) {
  FrameworkBuilder b;
  bool header = false;
  std::size_t n = 0;
  std::size_t lineno = 0;
  for (auto line : lines_of(text)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!header) {
      if (tokens.size() != 3 || tokens[0] != "p" || tokens[1] != "af")
        throw ParseError(lineno, "expected header 'p af N'");
      n = parse_positive(tokens[2], lineno);
      for (std::size_t i = 1; i <= n; ++i) b.add_argument(std::to_string(i), lineno);
      header = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(lineno, "attack line needs exactly two arguments");
    auto from = parse_positive(tokens[0], lineno);
    auto to = parse_positive(tokens[1], lineno);
    if (from == 0 || from > n) throw UnknownArgument(lineno, std::string(tokens[0]));
    if (to == 0 || to > n) throw UnknownArgument(lineno, std::string(tokens[1]));
    b.add_attack(static_cast<ArgumentIndex>(from - 1), static_cast<ArgumentIndex>(to - 1));
  }
  if (!header) throw ParseError(0, "missing 'p af N' header");
  return std::move(b).build();
}

}  // namespace detail

inline ArgumentationFramework parse_framework(std::string_view text, Format format) {
  switch (format) {
    case Format::apx: return detail::ApxScanner(text).parse();
    case Format::tgf: return detail::parse_tgf(text);
    case Format::iccma23: return detail::parse_iccma23(text);
  }
  throw Error("unknown format");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ArgumentationFramework load_framework(const std::string& path,
                                             std::optional<Format> format = std::nullopt) {
  auto f = format ? format : format_from_path(path);
  if (!f) throw Error("cannot infer the format of '" + path + "'");
  return parse_framework(read_file(path), *f);
}

// iccma23 output numbers arguments by index+1; names survive only when they already are 1..N.
inline std::string render_framework(const ArgumentationFramework& af, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::apx:
      for (const auto& n : af.names()) out << "arg(" << n << ").\n";
      for (auto [a, b] : af.attacks()) out << "att(" << af.name(a) << ',' << af.name(b) << ").\n";
      break;
    case Format::tgf:
      for (const auto& n : af.names()) out << n << '\n';
      out << "#\n";
      for (auto [a, b] : af.attacks()) out << af.name(a) << ' ' << af.name(b) << '\n';
      break;
    case Format::iccma23:
      out << "p af " << af.size() << '\n';
      for (auto [a, b] : af.attacks()) out << a + 1 << ' ' << b + 1 << '\n';
      break;
  }
  return out.str();
}

}  // namespace argfacets
