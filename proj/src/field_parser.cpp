#include "brunonf/field_parser.hpp"

#include <cctype>
#include <sstream>

namespace brunonf {

namespace {

struct Token {
  enum Kind { Num, Ident, Diff, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;  // Num: literal; Ident/Diff: name (Diff without the 'd')
  int line, col;
};

struct Lexer {
  const std::string& src;
  const std::vector<std::string>& vars;
  size_t pos = 0;
  int line, col = 1;

  Lexer(const std::string& s, const std::vector<std::string>& v, int start_line)
      : src(s), vars(v), line(start_line) {}

  void advance() {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  Token next() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) advance();
    int l = line, c = col;
    if (pos >= src.size()) return {Token::End, "", l, c};
    char ch = src[pos];
    switch (ch) {
      case '+': advance(); return {Token::Plus, "+", l, c};
      case '-': advance(); return {Token::Minus, "-", l, c};
      case '*': advance(); return {Token::Star, "*", l, c};
      case '^': advance(); return {Token::Caret, "^", l, c};
      case '(': advance(); return {Token::LParen, "(", l, c};
      case ')': advance(); return {Token::RParen, ")", l, c};
      default: break;
    }
    if (std::isdigit((unsigned char)ch) || ch == '.') {
      std::string t;
      bool exp_seen = false;
      while (pos < src.size()) {
        char d = src[pos];
        bool take = std::isdigit((unsigned char)d) || d == '.' || d == '/' ||
                    d == 'e' || d == 'E' ||
                    ((d == '+' || d == '-') && !t.empty() &&
                     (t.back() == 'e' || t.back() == 'E'));
        if ((d == 'e' || d == 'E') &&
            (pos + 1 >= src.size() ||
             (!std::isdigit((unsigned char)src[pos + 1]) && src[pos + 1] != '+' &&
              src[pos + 1] != '-')))
          take = false;
        if (!take) break;
        if (d == 'e' || d == 'E') exp_seen = true;
        (void)exp_seen;
        t.push_back(d);
        advance();
      }
      return {Token::Num, t, l, c};
    }
    if (std::isalpha((unsigned char)ch) || ch == '_') {
      std::string t;
      while (pos < src.size() &&
             (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
        t.push_back(src[pos]);
        advance();
      }
      if (t.size() > 1 && t[0] == 'd') {
        std::string tail = t.substr(1);
        for (auto& v : vars)
          if (v == tail) return {Token::Diff, tail, l, c};
      }
      return {Token::Ident, t, l, c};
    }
    throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
  }
};

// partial value: scalar series part plus one coefficient series per d<var>
struct Val {
  Series s;
  std::vector<Series> v;
  bool has_vec = false;
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  int n;
  int order;
  ScalarKind kind;
  const std::vector<std::string>& vars;

  const Token& peek() const { return toks[at]; }
  Token eat() { return toks[at++]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw ParseError(t.line, t.col,
                     "expected " + expected + ", found '" +
                         (t.kind == Token::End ? "end of input" : t.text) + "'");
  }

  Val make_scalar(const Scalar& c) const {
    Val r;
    r.s = Series::constant(n, order, c);
    return r;
  }

  Val add(const Val& a, const Val& b) const {
    Val r;
    r.s = a.s + b.s;
    r.has_vec = a.has_vec || b.has_vec;
    if (r.has_vec) {
      r.v.assign(n, Series(n, order, kind));
      for (int i = 0; i < n; ++i) {
        if (a.has_vec) r.v[i] = r.v[i] + a.v[i];
        if (b.has_vec) r.v[i] = r.v[i] + b.v[i];
      }
    }
    return r;
  }

  Val neg(const Val& a) const {
    Val r = a;
    r.s = -r.s;
    for (auto& c : r.v) c = -c;
    return r;
  }

  Val mul(const Val& a, const Val& b, const Token& where) const {
    if (a.has_vec && b.has_vec)
      throw ParseError(where.line, where.col, "product of two differentials");
    Val r;
    r.s = a.s * b.s;
    const Val& vec = a.has_vec ? a : b;
    const Val& scal = a.has_vec ? b : a;
    if (vec.has_vec) {
      r.has_vec = true;
      r.v.reserve(n);
      for (int i = 0; i < n; ++i) r.v.push_back(vec.v[i] * scal.s);
    }
    return r;
  }

  Val parse_expr() {
    bool negate = false;
    while (peek().kind == Token::Plus || peek().kind == Token::Minus)
      negate ^= (eat().kind == Token::Minus);
    Val acc = parse_term();
    if (negate) acc = neg(acc);
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = (eat().kind == Token::Minus);
      Val t = parse_term();
      acc = add(acc, minus ? neg(t) : t);
    }
    return acc;
  }

  Val parse_term() {
    Val acc = parse_pow();
    while (peek().kind == Token::Star) {
      Token star = eat();
      Val t = parse_pow();
      acc = mul(acc, t, star);
    }
    return acc;
  }

  Val parse_pow() {
    Val base = parse_atom();
    if (peek().kind != Token::Caret) return base;
    Token caret = eat();
    Token e = peek();
    if (e.kind != Token::Num || e.text.find('/') != std::string::npos ||
        e.text.find('.') != std::string::npos)
      fail(e, "integer exponent");
    eat();
    long p = std::stol(e.text);
    if (p < 0) fail(e, "nonnegative exponent");
    if (base.has_vec && p != 1)
      throw ParseError(caret.line, caret.col, "cannot raise a differential to a power");
    Val r = make_scalar(Scalar::one(kind));
    Val sq = base;
    while (p > 0) {
      if (p & 1) r = mul(r, sq, caret);
      p >>= 1;
      if (p) sq = mul(sq, sq, caret);
    }
    return r;
  }

  Val parse_atom() {
    Token t = peek();
    switch (t.kind) {
      case Token::Num: {
        eat();
        if (kind != ScalarKind::Float &&
            (t.text.find('.') != std::string::npos ||
             t.text.find('e') != std::string::npos))
          throw ParseError(t.line, t.col, "decimal literal requires float scalars");
        try {
          return make_scalar(Scalar::parse(t.text, kind));
        } catch (const Error& e) {
          throw ParseError(t.line, t.col, e.what());
        }
      }
      case Token::Ident: {
        eat();
        if (t.text == "i") {
          if (kind == ScalarKind::Rational)
            throw ParseError(t.line, t.col, "imaginary unit needs gauss or float scalars");
          return make_scalar(Scalar::imaginary_unit(kind));
        }
        for (int j = 0; j < n; ++j)
          if (vars[j] == t.text) {
            Val r;
            r.s = Series::variable(n, order, j, kind);
            return r;
          }
        throw UnknownVariableError(t.text);
      }
      case Token::Diff: {
        eat();
        Val r;
        r.s = Series(n, order, kind);
        r.has_vec = true;
        r.v.assign(n, Series(n, order, kind));
        for (int j = 0; j < n; ++j)
          if (vars[j] == t.text)
            r.v[j] = Series::constant(n, order, Scalar::one(kind));
        return r;
      }
      case Token::LParen: {
        eat();
        Val r = parse_expr();
        if (peek().kind != Token::RParen) fail(peek(), "')'");
        eat();
        return r;
      }
      default:
        fail(t, "a term");
    }
  }
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cur = trim(cur);
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

ProblemSpec parse_field(const std::string& text) {
  ProblemSpec spec;
  bool kind_given = false;
  std::string expr;
  int expr_line = 1;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool in_expr = false;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (!in_expr && t.rfind("vars:", 0) == 0) {
      spec.vars = split_csv(t.substr(5));
      continue;
    }
    if (!in_expr && t.rfind("scalars:", 0) == 0) {
      std::string k = trim(t.substr(8));
      if (k == "rational") spec.kind = ScalarKind::Rational;
      else if (k == "gauss") spec.kind = ScalarKind::Gauss;
      else if (k == "float") spec.kind = ScalarKind::Float;
      else throw ParseError(lineno, 1, "scalars must be rational, gauss or float");
      kind_given = true;
      continue;
    }
    if (!in_expr && t.rfind("truncation:", 0) == 0) {
      try {
        spec.order = std::stoi(trim(t.substr(11)));
      } catch (...) {
        throw ParseError(lineno, 1, "truncation must be an integer");
      }
      if (spec.order < 2) throw ParseError(lineno, 1, "truncation must be >= 2");
      continue;
    }
    if (!in_expr && t.rfind("field:", 0) == 0) {
      t = trim(t.substr(6));
      in_expr = true;
      expr_line = lineno;
      expr = t;
      continue;
    }
    if (!in_expr && !t.empty()) {
      in_expr = true;
      expr_line = lineno;
    }
    if (in_expr) expr += (expr.empty() ? "" : "\n") + line;
  }
  if (spec.vars.empty()) throw ParseError(1, 1, "missing 'vars:' header");
  if (trim(expr).empty()) throw ParseError(lineno, 1, "missing field expression");

  if (!kind_given) {
    // exactness by default: gaussians when the imaginary unit appears
    Lexer probe(expr, spec.vars, expr_line);
    spec.kind = ScalarKind::Rational;
    for (Token t = probe.next(); t.kind != Token::End; t = probe.next())
      if (t.kind == Token::Ident && t.text == "i") {
        spec.kind = ScalarKind::Gauss;
        break;
      }
  }

  int n = (int)spec.vars.size();
  Parser p{{}, 0, n, spec.order + 1, spec.kind, spec.vars};
  Lexer lex(expr, spec.vars, expr_line);
  for (;;) {
    Token t = lex.next();
    p.toks.push_back(t);
    if (t.kind == Token::End) break;
  }
  Val v = p.parse_expr();
  if (p.peek().kind != Token::End) p.fail(p.peek(), "end of input");
  if (!v.s.is_zero())
    throw ParseError(expr_line, 1, "expression has a term without a differential");
  if (!v.has_vec) v.v.assign(n, Series(n, spec.order + 1, spec.kind));
  spec.components = v.v;
  spec.field = LogDerivation::from_vector_components(v.v, spec.order);
  return spec;
}

std::vector<Scalar> parse_lambda(const std::string& csv) {
  auto parts = split_csv(csv);
  if (parts.empty()) throw Error("InvalidArgument", "empty eigenvalue list");
  ScalarKind kind = ScalarKind::Rational;
  for (auto& s : parts) {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
      kind = ScalarKind::Float;
      break;
    }
    if (s.find('i') != std::string::npos) kind = ScalarKind::Gauss;
  }
  std::vector<Scalar> out;
  out.reserve(parts.size());
  for (auto& s : parts) out.push_back(Scalar::parse(s, kind));
  return out;
}

std::string format_field(const LogDerivation& d, const std::vector<std::string>& vars) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, lam] : d.terms()) {
    for (size_t i = 0; i < lam.size(); ++i) {
      if (lam[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << lam[i].str() << ")";
      Exponent e = m;
      e[(int)i] += 1;  // coefficient of d/dx_i is x^m * x_i
      for (size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        os << "*" << vars[j];
        if (e[j] != 1) os << "^" << e[j];
      }
      os << "*d" << vars[i];
    }
  }
  return os.str();
}

}  // namespace brunonf
