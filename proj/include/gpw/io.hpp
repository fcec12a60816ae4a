#ifndef GPW_IO_HPP
#define GPW_IO_HPP

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

namespace detail {

struct Token {
  enum Kind { Name, Int, Punct, End } kind = End;
  std::string text;
  std::size_t line = 1, column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Token::Name;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        t.text += take();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) t.text += take();
    } else {
      t.kind = Token::Punct;
      t.text = std::string(1, take());
    }
    return t;
  }

private:
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
  }
  char take() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class SpecParser {
public:
  explicit SpecParser(std::string_view src) : lex_(src) { advance(); }

  Context parse() {
    keyword("graph");
    punct('{');
    keyword("vertices");
    punct(':');
    for (;;) {
      Token name = expect(Token::Name, "vertex name");
      for (const auto& n : names_)
        if (n == name.text) fail("duplicate vertex '" + name.text + "'", name);
      names_.push_back(name.text);
      if (!accept(',')) break;
    }
    punct(';');
    Graph graph(names_);
    if (cur_.kind == Token::Name && cur_.text == "edges") {
      advance();
      punct(':');
      for (;;) {
        Token a = expect(Token::Name, "vertex name");
        punct('-');
        Token b = expect(Token::Name, "vertex name");
        VertexId u = lookup(a), v = lookup(b);
        if (u == v) fail("loop edge at vertex '" + a.text + "'", a);
        graph.add_edge(u, v);
        if (!accept(',')) break;
      }
      punct(';');
    }
    std::vector<std::optional<VertexGroup>> groups(names_.size());
    bool any = false;
    while (cur_.kind == Token::Name && cur_.text == "group") {
      advance();
      Token name = expect(Token::Name, "vertex name");
      VertexId v = lookup(name);
      if (groups[v]) fail("duplicate group for vertex '" + name.text + "'", name);
      punct('=');
      groups[v] = group_kind();
      punct(';');
      any = true;
    }
    if (!any) fail("expected at least one group declaration", cur_);
    Token close = cur_;
    punct('}');
    if (cur_.kind != Token::End) fail("unexpected text after closing brace", cur_);
    std::vector<VertexGroup> out;
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (!groups[v]) fail("missing group for vertex '" + names_[v] + "'", close);
      out.push_back(*groups[v]);
    }
    return make_context(std::move(graph), std::move(out));
  }

private:
  VertexGroup group_kind() {
    Token z = cur_;
    if (z.kind != Token::Name || z.text != "Z") fail("malformed group kind, expected Z or Z/n", z);
    advance();
    if (!accept('/')) return VertexGroup::infinite();
    Token n = cur_;
    if (n.kind != Token::Int) fail("malformed group kind, expected an order after Z/", n);
    advance();
    std::uint64_t order = 0;
    try {
      order = std::stoull(n.text);
    } catch (const std::out_of_range&) {
      fail("group order out of range", n);
    }
    if (order < 2) fail("malformed group kind, order must be at least 2", n);
    return VertexGroup::cyclic(order);
  }

  VertexId lookup(const Token& t) {
    for (VertexId v = 0; v < names_.size(); ++v)
      if (names_[v] == t.text) return v;
    fail("unknown vertex '" + t.text + "'", t);
  }

  void advance() { cur_ = lex_.next(); }
  bool accept(char c) {
    if (cur_.kind == Token::Punct && cur_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }
  void punct(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'", cur_);
  }
  void keyword(const char* word) {
    if (cur_.kind != Token::Name || cur_.text != word) fail(std::string("expected '") + word + "'", cur_);
    advance();
  }
  Token expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what, cur_);
    Token t = cur_;
    advance();
    return t;
  }
  [[noreturn]] static void fail(const std::string& msg, const Token& at) { throw ParseError(msg, at.line, at.column); }

  Lexer lex_;
  Token cur_;
  std::vector<std::string> names_;
};

}  // namespace detail

/// Parses `graph { vertices: ...; edges: ...; group v = Z | Z/n; ... }`.
inline Context parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Context load_spec(const std::string& path) { return parse_spec(read_file(path)); }

/// Parses `x1^3 y2 x1^-1` into its syllables without reducing; `1` is the
/// identity. Errors carry `line` and a 1-based column.
inline std::vector<Syllable> parse_raw_word(const Context& ctx, std::string_view text, std::size_t line = 1) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto col = [&] { return i + 1; };
  auto space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  space();
  if (i == text.size()) throw ParseError("empty word", line, col());
  while (i < text.size()) {
    std::size_t start = i;
    if (text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      space();
      continue;
    }
    if (!(std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      throw ParseError("expected a vertex name", line, col());
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name(text.substr(start, i - start));
    auto v = ctx->graph().find(name);
    if (!v) throw ParseError("unknown vertex '" + name + "'", line, start + 1);
    Exponent e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t num = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("expected an integer exponent", line, num + 1);
      try {
        e = std::stoll(std::string(text.substr(num, i - num)));
      } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range", line, num + 1);
      }
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("expected whitespace between terms", line, col());
    raw.push_back({*v, e});
    space();
  }
  return raw;
}

inline GroupElement parse_word(const Context& ctx, std::string_view text, std::size_t line = 1) {
  return reduce(ctx, parse_raw_word(ctx, text, line));
}

/// One word per line; `#` starts a comment; blank lines are skipped.
inline std::vector<GroupElement> parse_word_set(const Context& ctx, std::string_view text) {
  std::vector<GroupElement> out;
  std::size_t line_no = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) out.push_back(parse_word(ctx, line, line_no));
    pos = end + 1;
  }
  return out;
}

inline std::string format_word(const GroupElement& g) {
  if (g.is_identity()) return "1";
  std::string out;
  for (const auto& s : g.syllables()) {
    if (!out.empty()) out += ' ';
    out += g.context()->graph().name(s.vertex);
    if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  }
  return out;
}

inline std::string format_set(const Graph& graph, const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](VertexId v) {
    if (!first) out += ", ";
    out += graph.name(v);
    first = false;
  });
  return out + "}";
}

inline std::vector<std::string> set_names(const Graph& graph, const VertexSet& set) {
  std::vector<std::string> out;
  set.for_each([&](VertexId v) { out.push_back(graph.name(v)); });
  return out;
}

/// Spec text that parses back to the same context.
inline std::string format_spec(const GroupContext& ctx) {
  const auto& g = ctx.graph();
  std::ostringstream os;
  os << "graph {\n  vertices: ";
  for (VertexId v = 0; v < g.size(); ++v) os << (v ? ", " : "") << g.name(v);
  os << ";\n";
  auto edges = g.edges();
  if (!edges.empty()) {
    os << "  edges: ";
    for (std::size_t i = 0; i < edges.size(); ++i)
      os << (i ? ", " : "") << g.name(edges[i].first) << "-" << g.name(edges[i].second);
    os << ";\n";
  }
  for (VertexId v = 0; v < g.size(); ++v) os << "  group " << g.name(v) << " = " << ctx.group(v).to_string() << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gpw

#endif  // GPW_IO_HPP
