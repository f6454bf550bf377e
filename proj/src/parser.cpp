#include "jacdiv/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace jacdiv {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

// Precedence climbing over a single line. Values are RatFuncs so one parser
// serves both modes; polynomial mode rejects general division.
class ExprParser {
 public:
  ExprParser(std::string_view text, const VarCtx& ctx, std::size_t line, bool allow_division)
      : text_(text), ctx_(ctx), line_(line), allow_division_(allow_division) {}

  RatFunc parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    RatFunc v = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  RatFunc constant(const Rat& c) const { return RatFunc::constant(ctx_, c); }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = unary();
    while (true) {
      if (accept('*')) {
        acc *= unary();
      } else if (allow_division_ && accept('/')) {
        std::size_t at = pos_;
        RatFunc d = unary();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        acc /= d;
      } else {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') fail("division is not allowed here");
        return acc;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^')) return base;
    skip_space();
    if (!at_digit()) fail("exponent must be a nonnegative integer");
    Int e = integer();
    if (e > 10000) fail("exponent too large");
    if (pos_ < text_.size() && text_[pos_] == '.') fail("exponent must be an integer");
    unsigned k = static_cast<unsigned>(e.get_ui());
    RatFunc out = constant(1);
    for (unsigned i = 0; i < k; ++i) out *= base;
    return out;
  }

  Int integer() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  RatFunc atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not supported; use a fraction");
      // A rational literal binds tighter than multiplication.
      if (!allow_division_ && pos_ + 1 < text_.size() && text_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        std::size_t at = pos_;
        Int den = integer();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        return constant(make_rat(num, den));
      }
      return constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ctx_.index_of(name);
      if (!idx) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      return RatFunc(Poly::variable(ctx_, *idx));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const VarCtx& ctx_;
  std::size_t line_;
  bool allow_division_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Poly parse_poly(std::string_view text, const VarCtx& ctx, std::size_t line) {
  RatFunc r = ExprParser(text, ctx, line, false).parse();
  return r.num() * (1 / r.den().constant_value());
}

RatFunc parse_ratfunc(std::string_view text, const VarCtx& ctx, std::size_t line) {
  return ExprParser(text, ctx, line, true).parse();
}

MapSpec parse_map(std::string_view text) {
  MapSpec spec;
  bool have_vars = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    std::size_t hash = raw.find('#');
    std::string_view line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());

    std::size_t colon = line.find(':');
    std::size_t eq = line.find('=');
    if (colon != std::string_view::npos && (eq == std::string_view::npos || colon < eq)) {
      std::string_view key = trim(line.substr(0, colon));
      std::string_view value = trim(line.substr(colon + 1));
      std::size_t value_col = static_cast<std::size_t>(value.data() - raw.data()) + 1;
      if (key == "vars") {
        if (have_vars) throw ParseError("duplicate 'vars:' line", line_no, indent + 1);
        std::vector<std::string> names;
        std::istringstream is{std::string(value)};
        for (std::string name; is >> name;) {
          bool ok = std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_';
          for (char ch : name) ok = ok && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
          if (!ok) throw ParseError("invalid variable name '" + name + "'", line_no, value_col);
          names.push_back(name);
        }
        if (names.empty()) throw ParseError("'vars:' needs at least one name", line_no, value_col);
        try {
          spec.ctx = VarCtx(std::move(names));
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, value_col);
        }
        have_vars = true;
      } else if (key == "seed") {
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || p != value.data() + value.size()) throw ParseError("invalid seed", line_no, value_col);
        spec.seed = v;
      } else if (key == "bound") {
        int v = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || p != value.data() + value.size() || v <= 0) {
          throw ParseError("invalid bound", line_no, value_col);
        }
        spec.bound = v;
      } else if (key == "order") {
        if (value != "lex" && value != "grevlex") throw ParseError("order must be lex or grevlex", line_no, value_col);
        spec.order = std::string(value);
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'", line_no, indent + 1);
      }
      continue;
    }
    if (eq == std::string_view::npos) throw ParseError("expected 'f<k> = <expression>'", line_no, indent + 1);
    if (!have_vars) throw ParseError("components must follow the 'vars:' line", line_no, indent + 1);
    std::string_view lhs = trim(line.substr(0, eq));
    std::string expected = "f" + std::to_string(spec.components.size() + 1);
    if (lhs != expected) throw ParseError("expected '" + expected + "'", line_no, indent + 1);
    std::string_view rhs = line.substr(eq + 1);
    std::size_t offset = static_cast<std::size_t>(rhs.data() - raw.data());
    try {
      spec.components.push_back(parse_poly(rhs, spec.ctx, line_no));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2), line_no,
                       e.column() + offset);
    }
    spec.sources.emplace_back(trim(rhs));
  }
  if (!have_vars) throw ParseError("missing 'vars:' line", line_no == 0 ? 1 : line_no, 1);
  if (spec.components.size() != spec.ctx.size()) {
    throw ParseError("expected " + std::to_string(spec.ctx.size()) + " components, found " +
                         std::to_string(spec.components.size()),
                     line_no, 1);
  }
  return spec;
}

std::vector<Rat> parse_point(std::string_view text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start));
    if (item.empty()) throw InputError("point: empty coordinate");
    bool negative = false;
    if (item.front() == '-') {
      negative = true;
      item.remove_prefix(1);
    }
    Rat v;
    try {
      v = Rat(std::string(item));
    } catch (const std::invalid_argument&) {
      throw InputError("point: invalid coordinate '" + std::string(item) + "'");
    }
    if (v.get_den() == 0) throw InputError("point: zero denominator");
    v.canonicalize();
    out.push_back(negative ? Rat(-v) : v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace jacdiv
