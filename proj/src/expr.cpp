#include "qmod/expr.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmod/error.hpp"

namespace qmod {

namespace {

// ---- lexer ----

enum class Tok {
  num,
  ident,
  plus,
  minus,
  dot,
  slash,
  star,
  lparen,
  rparen,
  lbrack,
  rbrack,
  comma,
  end
};

struct Token {
  Tok kind;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg, size_t pos) const {
    fail("parse error at position " + std::to_string(pos) + ": " + msg);
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ >= s_.size()) {
      cur_ = {Tok::end, "", i_};
      return;
    }
    const size_t at = i_;
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      cur_ = {Tok::num, s_.substr(i_, j - i_), at};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      cur_ = {Tok::ident, s_.substr(i_, j - i_), at};
      i_ = j;
      return;
    }
    if (c == '\xc2' && i_ + 1 < s_.size() && s_[i_ + 1] == '\xb7') {  // U+00B7
      cur_ = {Tok::dot, "\xc2\xb7", at};
      i_ += 2;
      return;
    }
    if (c == '^') {
      if (i_ + 1 < s_.size() && s_[i_ + 1] == '*') {
        cur_ = {Tok::star, "^*", at};
        i_ += 2;
        return;
      }
      error("expected '*' after '^'", at);
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '/': k = Tok::slash; break;
      case '*': k = Tok::star; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case '[': k = Tok::lbrack; break;
      case ']': k = Tok::rbrack; break;
      case ',': k = Tok::comma; break;
      default: error("unexpected character '" + std::string(1, c) + "'", at);
    }
    cur_ = {k, std::string(1, c), at};
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  Token cur_{Tok::end, "", 0};
};

// ---- parser ----

class Parser {
 public:
  Parser(const std::string& text, Carrier c) : lex_(text), carrier_(std::move(c)) {}

  StarElement parse() {
    StarElement e = expr(carrier_);
    if (lex_.peek().kind != Tok::end) lex_.error("unexpected trailing input", lex_.peek().pos);
    return e;
  }

 private:
  StarElement expr(const Carrier& c) {
    StarElement acc = term(c);
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      bool sub = lex_.take().kind == Tok::minus;
      StarElement rhs = term(c);
      acc = sub ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  StarElement term(const Carrier& c) {
    StarElement acc = factor(c);
    while (lex_.peek().kind == Tok::dot) {
      lex_.take();
      acc = acc * factor(c);
    }
    return acc;
  }

  StarElement factor(const Carrier& c) {
    if (lex_.peek().kind == Tok::minus) {
      lex_.take();
      return -factor(c);
    }
    StarElement a = atom(c);
    while (lex_.peek().kind == Tok::star) {
      lex_.take();
      a = a.star();
    }
    return a;
  }

  uint32_t index_number(const std::string& what) {
    Token t = lex_.take();
    if (t.kind != Tok::num) lex_.error("expected " + what, t.pos);
    return static_cast<uint32_t>(std::stoul(t.text));
  }

  StarElement atom(const Carrier& c) {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::num: {
        Token n = lex_.take();
        Rational q(n.text);
        if (lex_.peek().kind == Tok::slash) {
          lex_.take();
          Token d = lex_.take();
          if (d.kind != Tok::num) lex_.error("expected a denominator", d.pos);
          Rational den(d.text);
          if (den == 0) lex_.error("zero denominator", d.pos);
          q /= den;
        }
        q.canonicalize();
        return StarElement::scalar(c, GaussianRational(q));
      }
      case Tok::ident: {
        Token id = lex_.take();
        if (id.text == "i") return StarElement::scalar(c, GaussianRational::i());
        if (id.text == "E") return matrix_atom(c, id.pos);
        if (id.text == "pair") return pair_atom(c, id.pos);
        if (id.text.size() >= 2 && (id.text[0] == 'x' || id.text[0] == 'g') &&
            all_digits(id.text.substr(1)))
          return symbol_atom(c, id);
        lex_.error("unknown identifier '" + id.text + "'", id.pos);
      }
      case Tok::lparen: {
        lex_.take();
        StarElement e = expr(c);
        expect(Tok::rparen, "')'");
        return e;
      }
      default: lex_.error("expected a number, identifier or '('", t.pos);
    }
  }

  StarElement symbol_atom(const Carrier& c, const Token& id) {
    // bare letters / group elements on a complexified carrier embed through
    // the (a, 0) component
    if (c.kind() == CarrierKind::complexified)
      return complexify(symbol_on(c.inner(), id));
    return symbol_on(c, id);
  }

  StarElement symbol_on(const Carrier& c, const Token& id) {
    uint32_t k = static_cast<uint32_t>(std::stoul(id.text.substr(1)));
    if (id.text[0] == 'x') {
      if (c.kind() != CarrierKind::free_star)
        lex_.error("letters are only available on free carriers", id.pos);
      if (k < 1 || k > c.letters())
        lex_.error("letter index out of range (carrier has " + std::to_string(c.letters()) +
                       " letters)",
                   id.pos);
      return StarElement::letter(c, k - 1);
    }
    if (c.kind() != CarrierKind::group_ring)
      lex_.error("group elements are only available on group-ring carriers", id.pos);
    if (k >= c.group().order())
      lex_.error("group index out of range (order " + std::to_string(c.group().order()) + ")",
                 id.pos);
    return StarElement::group_element(c, k);
  }

  StarElement matrix_atom(const Carrier& c, size_t pos) {
    if (c.kind() != CarrierKind::matrix_ring)
      lex_.error("E[r,c](...) requires a matrix carrier", pos);
    expect(Tok::lbrack, "'['");
    uint32_t r = index_number("a row index");
    expect(Tok::comma, "','");
    uint32_t col = index_number("a column index");
    expect(Tok::rbrack, "']'");
    if (r >= c.matrix_size() || col >= c.matrix_size())
      lex_.error("matrix index out of range (size " + std::to_string(c.matrix_size()) + ")", pos);
    expect(Tok::lparen, "'('");
    StarElement inner = expr(c.inner());
    expect(Tok::rparen, "')'");
    return matrix_unit(c.matrix_size(), r, col, inner);
  }

  StarElement pair_atom(const Carrier& c, size_t pos) {
    if (c.kind() != CarrierKind::complexified)
      lex_.error("pair(x, y) requires a complexified carrier", pos);
    expect(Tok::lparen, "'('");
    StarElement x = expr(c.inner());
    expect(Tok::comma, "','");
    StarElement y = expr(c.inner());
    expect(Tok::rparen, "')'");
    return complex_pair(x, y);
  }

  void expect(Tok k, const std::string& what) {
    Token t = lex_.take();
    if (t.kind != k) lex_.error("expected " + what, t.pos);
  }

  static bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  }

  Lexer lex_;
  Carrier carrier_;
};

// ---- printer ----

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << "/" << q.get_den();
  return os.str();
}

// Coefficient rendering; mixed real+imaginary values are parenthesized so
// the result stays a single grammar factor.
std::string coeff_str(const GaussianRational& z) {
  const bool has_re = z.re != 0;
  const bool has_im = z.im != 0;
  if (!has_im) return rational_str(z.re);  // includes z == 0
  std::string im_part;
  if (z.im == 1)
    im_part = "i";
  else if (z.im == -1)
    im_part = "-i";
  else
    im_part = rational_str(z.im) + "\xc2\xb7i";
  if (!has_re) return im_part;
  std::string out = "(" + rational_str(z.re);
  if (im_part[0] == '-')
    out += " - " + im_part.substr(1);
  else
    out += " + " + im_part;
  return out + ")";
}

std::string word_str(const Carrier& c, const BasisWord& w) {
  switch (c.kind()) {
    case CarrierKind::free_star: {
      if (w.word.empty()) return "1";
      std::string out;
      for (size_t k = 0; k < w.word.size(); ++k) {
        if (k) out += "\xc2\xb7";
        uint16_t sym = w.word[k];
        out += "x" + std::to_string((sym & ~BasisWord::STAR_BIT) + 1);
        if (sym & BasisWord::STAR_BIT) out += "*";
      }
      return out;
    }
    case CarrierKind::group_ring:
      if (w.group == c.group().identity()) return "1";
      return "g" + std::to_string(w.group);
    case CarrierKind::matrix_ring: {
      BasisWord inner = w;
      inner.row = inner.col = 0;
      return "E[" + std::to_string(w.row) + "," + std::to_string(w.col) + "](" +
             word_str(c.inner(), inner) + ")";
    }
    case CarrierKind::complexified: {
      BasisWord inner = w;
      inner.comp = 0;
      std::string s = word_str(c.inner(), inner);
      return w.comp == 0 ? s : "pair(0, " + s + ")";
    }
  }
  fail("word_str: unreachable");
}

}  // namespace

StarElement parse_expression(const std::string& text, const Carrier& c) {
  if (!c.valid()) fail("parse_expression: invalid carrier");
  return Parser(text, c).parse();
}

std::string print_word(const Carrier& c, const BasisWord& w) { return word_str(c, w); }

std::string print_expression(const StarElement& a) {
  if (a.is_zero()) return "0";
  const Carrier& c = a.carrier();
  std::string out;
  bool first = true;
  for (const auto& [w, z] : a.terms()) {
    std::string ws = word_str(c, w);
    std::string term;
    bool negative = false;
    if (ws == "1") {
      term = coeff_str(z);
    } else if (z == GaussianRational(Rational(1))) {
      term = ws;
    } else if (z == GaussianRational(Rational(-1))) {
      term = ws;
      negative = true;
    } else {
      term = coeff_str(z) + "\xc2\xb7" + ws;
    }
    if (!negative && !term.empty() && term[0] == '-') {
      negative = true;
      term = term.substr(1);
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

Carrier parse_carrier_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto need_number = [&](const std::string& what) -> uint32_t {
    if (rest.empty()) fail("carrier spec: missing " + what + " in '" + spec + "'");
    for (char ch : rest)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail("carrier spec: malformed " + what + " in '" + spec + "'");
    return static_cast<uint32_t>(std::stoul(rest));
  };
  if (head == "free") return Carrier::free_star(need_number("letter count"));
  if (head == "cyclic") return Carrier::group_ring(FiniteGroup::cyclic(need_number("order")));
  if (head == "dihedral")
    return Carrier::group_ring(FiniteGroup::dihedral(need_number("order parameter")));
  if (head == "symmetric")
    return Carrier::group_ring(FiniteGroup::symmetric(need_number("degree")));
  if (head == "quaternion") {
    if (need_number("order") != 8) fail("carrier spec: only quaternion:8 is supported");
    return Carrier::group_ring(FiniteGroup::quaternion8());
  }
  if (head == "table") {
    nlohmann::json j;
    if (!rest.empty() && rest[0] == '{') {
      j = nlohmann::json::parse(rest);
    } else {
      std::ifstream in(rest);
      if (!in) fail("carrier spec: cannot open table file '" + rest + "'");
      in >> j;
    }
    std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
    const size_t n = names.size();
    std::vector<uint32_t> table;
    table.reserve(n * n);
    for (const auto& row : j.at("table")) {
      if (row.size() != n) fail("carrier spec: table is not square");
      for (const auto& v : row) table.push_back(v.get<uint32_t>());
    }
    if (table.size() != n * n) fail("carrier spec: table is not square");
    FiniteGroup g(std::move(table), names);
    if (j.contains("identity")) {
      std::string id = j.at("identity").get<std::string>();
      if (g.name(g.identity()) != id)
        fail("carrier spec: declared identity '" + id + "' is not the table identity");
    }
    return Carrier::group_ring(std::move(g));
  }
  if (head == "matrix") {
    auto second = rest.find(':');
    if (second == std::string::npos)
      fail("carrier spec: matrix:<n>:<inner> requires an inner carrier");
    std::string num = rest.substr(0, second);
    for (char ch : num)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        fail("carrier spec: malformed matrix size in '" + spec + "'");
    return Carrier::matrix_ring(static_cast<uint32_t>(std::stoul(num)),
                                parse_carrier_spec(rest.substr(second + 1)));
  }
  if (head == "complex") {
    if (rest.empty()) fail("carrier spec: complex:<inner> requires an inner carrier");
    return Carrier::complexified(parse_carrier_spec(rest));
  }
  fail("carrier spec: unknown kind '" + head + "'");
}

std::string carrier_spec_string(const Carrier& c) {
  switch (c.kind()) {
    case CarrierKind::free_star: return "free:" + std::to_string(c.letters());
    case CarrierKind::matrix_ring:
      return "matrix:" + std::to_string(c.matrix_size()) + ":" +
             carrier_spec_string(c.inner());
    case CarrierKind::complexified: return "complex:" + carrier_spec_string(c.inner());
    case CarrierKind::group_ring: break;
  }
  const FiniteGroup& g = c.group();
  // canonical specs only when the names also match (custom names are data)
  auto matches = [&](const FiniteGroup& h) {
    if (!(g == h)) return false;
    for (uint32_t a = 0; a < g.order(); ++a)
      if (g.name(a) != h.name(a)) return false;
    return true;
  };
  if (matches(FiniteGroup::cyclic(g.order()))) return "cyclic:" + std::to_string(g.order());
  if (g.order() % 2 == 0 && matches(FiniteGroup::dihedral(g.order() / 2)))
    return "dihedral:" + std::to_string(g.order() / 2);
  for (uint32_t n = 2; n <= 4; ++n)
    if (g.order() == (n == 2 ? 2u : n == 3 ? 6u : 24u) && matches(FiniteGroup::symmetric(n)))
      return "symmetric:" + std::to_string(n);
  if (g.order() == 8 && matches(FiniteGroup::quaternion8())) return "quaternion:8";
  // custom table: serialize inline
  nlohmann::json j;
  std::vector<std::string> names;
  for (uint32_t a = 0; a < g.order(); ++a) names.push_back(g.name(a));
  j["names"] = names;
  std::vector<std::vector<uint32_t>> rows(g.order(), std::vector<uint32_t>(g.order()));
  for (uint32_t a = 0; a < g.order(); ++a)
    for (uint32_t b = 0; b < g.order(); ++b) rows[a][b] = g.mul(a, b);
  j["table"] = rows;
  j["identity"] = g.name(g.identity());
  return "table:" + j.dump();
}

}  // namespace qmod
