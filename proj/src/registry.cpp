#include "supercong/registry.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace supercong {

u64 fnv1a64(const std::string& data) {
  u64 h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

enum class Tok {
  Ident, Int, Str,
  LBrace, RBrace, LParen, RParen, LBracket, RBracket,
  Comma, Star, Slash, Plus, Minus, Caret, Percent, Colon,
  Eq, Eq2, Eq3, NotEq, AndAnd,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  u64 value = 0;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { next(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg + " (got '" + describe(tok_) + "')");
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "<eof>";
    return t.text;
  }

 private:
  void next() {
    skip_ws();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, "", 0, line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        advance();
      tok_ = {Tok::Ident, src_.substr(start, pos_ - start), 0, tok_.line, tok_.col};
      return;
    }
    if (std::isdigit((unsigned char)c)) {
      size_t start = pos_;
      u64 v = 0;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) {
        v = v * 10 + (u64)(src_[pos_] - '0');
        if (v > (u64)INT64_MAX)
          throw ParseError(line_, col_, "integer literal too large");
        advance();
      }
      tok_ = {Tok::Int, src_.substr(start, pos_ - start), v, tok_.line, tok_.col};
      return;
    }
    if (c == '"') {
      advance();
      size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\n')
          throw ParseError(line_, col_, "unterminated string");
        advance();
      }
      if (pos_ >= src_.size())
        throw ParseError(line_, col_, "unterminated string");
      tok_ = {Tok::Str, src_.substr(start, pos_ - start), 0, tok_.line, tok_.col};
      advance();
      return;
    }
    if (c == '=') {
      int n = 0;
      while (pos_ + (size_t)n < src_.size() && src_[pos_ + (size_t)n] == '=') ++n;
      if (n >= 3) {
        tok_ = {Tok::Eq3, "===", 0, tok_.line, tok_.col};
        advance();
        advance();
        advance();
        return;
      }
      if (n == 2) {
        tok_ = {Tok::Eq2, "==", 0, tok_.line, tok_.col};
        advance();
        advance();
        return;
      }
      tok_ = {Tok::Eq, "=", 0, tok_.line, tok_.col};
      advance();
      return;
    }
    if (c == '!' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
      tok_ = {Tok::NotEq, "!=", 0, tok_.line, tok_.col};
      advance();
      advance();
      return;
    }
    if (c == '&' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '&') {
      tok_ = {Tok::AndAnd, "&&", 0, tok_.line, tok_.col};
      advance();
      advance();
      return;
    }
    Tok k;
    switch (c) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case ',': k = Tok::Comma; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '^': k = Tok::Caret; break;
      case '%': k = Tok::Percent; break;
      case ':': k = Tok::Colon; break;
      default:
        throw ParseError(line_, col_,
                         std::string("unexpected character '") + c + "'");
    }
    tok_ = {k, std::string(1, c), 0, tok_.line, tok_.col};
    advance();
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Registry parse() {
    Registry reg;
    while (lex_.peek().kind != Tok::End) {
      expect_ident("conjecture");
      parse_conjecture(reg);
    }
    return reg;
  }

 private:
  Lexer lex_;

  bool peek_ident(const std::string& s) {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == s;
  }

  void expect_ident(const std::string& s) {
    if (!peek_ident(s)) lex_.fail("expected '" + s + "'");
    lex_.take();
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) lex_.fail("expected " + what);
    return lex_.take();
  }

  i64 parse_sint() {
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    Token t = expect(Tok::Int, "integer");
    i64 v = (i64)t.value;
    return neg ? -v : v;
  }

  u64 parse_uint() { return expect(Tok::Int, "integer").value; }

  void parse_conjecture(Registry& reg) {
    ConjectureSpec conj;
    conj.id = expect(Tok::Str, "conjecture id string").text;
    if (peek_ident("proved")) {
      lex_.take();
      conj.proved = true;
    } else if (peek_ident("conjectured")) {
      lex_.take();
      conj.proved = false;
    } else {
      lex_.fail("expected 'proved' or 'conjectured'");
    }
    expect(Tok::LBrace, "'{'");
    while (peek_ident("exclude")) {
      lex_.take();
      conj.excluded.push_back(parse_uint());
    }
    while (peek_ident("sum")) {
      lex_.take();
      SumSpec s = parse_sumdef();
      std::string sid = s.id;
      auto it = reg.sums.find(sid);
      if (it != reg.sums.end()) {
        if (print_sum(it->second) != print_sum(s))
          lex_.fail("sum '" + sid + "' redefined with a different body");
      } else {
        reg.sums.emplace(sid, std::move(s));
        reg.sum_parent.emplace(sid, conj.id);
      }
      conj.sum_ids.push_back(sid);
    }
    while (peek_ident("case")) {
      lex_.take();
      conj.cases.push_back(parse_case());
    }
    expect(Tok::RBrace, "'}'");
    for (const auto& c : reg.conjectures)
      if (c.id == conj.id) lex_.fail("duplicate conjecture id '" + conj.id + "'");
    reg.conjectures.push_back(std::move(conj));
  }

  SumSpec parse_sumdef() {
    SumSpec s;
    s.id = expect(Tok::Ident, "sum identifier").text;
    expect(Tok::Eq, "'='");
    // optional prefix
    if (peek_ident("leg")) {
      // lookahead: leg(...) * SUM — a prefix always precedes SUM(k)
      lex_.take();
      expect(Tok::LParen, "'('");
      s.prefix.kind = SumPrefix::Kind::Leg;
      s.prefix.leg = parse_sint();
      expect(Tok::RParen, "')'");
      expect(Tok::Star, "'*'");
    } else if (peek_ident("sgn_half")) {
      lex_.take();
      s.prefix.kind = SumPrefix::Kind::SgnHalf;
      expect(Tok::Star, "'*'");
    } else if (peek_ident("sgn_floorp4")) {
      lex_.take();
      s.prefix.kind = SumPrefix::Kind::SgnFloorP4;
      expect(Tok::Star, "'*'");
    }
    expect_ident("SUM");
    expect(Tok::LParen, "'('");
    expect_ident("k");
    expect(Tok::RParen, "')'");
    expect(Tok::LBracket, "'['");
    s.factors.push_back(parse_factor());
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      s.factors.push_back(parse_factor());
    }
    expect(Tok::RBracket, "']'");
    return s;
  }

  // lin := [INT ['*']] 'k' [('+'|'-') INT]  |  SINT
  void parse_lin(i64& a, i64& b) {
    a = 0;
    b = 0;
    bool neg = false;
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind == Tok::Int) {
      i64 c = (i64)lex_.take().value;
      if (neg) c = -c;
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        expect_ident("k");
        a = c;
      } else if (peek_ident("k")) {
        lex_.take();
        a = c;
      } else {
        b = c;
        return;
      }
    } else if (peek_ident("k")) {
      lex_.take();
      a = neg ? -1 : 1;
    } else {
      lex_.fail("expected linear form in k");
    }
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      b = (i64)parse_uint();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      b = -(i64)parse_uint();
    }
  }

  TermFactor parse_factor() {
    TermFactor f;
    if (peek_ident("C")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      f.kind = TermFactor::Kind::Binom;
      parse_lin(f.binom.a1, f.binom.b1);
      expect(Tok::Comma, "','");
      parse_lin(f.binom.a0, f.binom.b0);
      expect(Tok::RParen, "')'");
      f.binom.exp = 1;
      if (lex_.peek().kind == Tok::Caret) {
        lex_.take();
        f.binom.exp = (int)parse_sint();
      }
      return f;
    }
    if (peek_ident("seq")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      f.kind = TermFactor::Kind::SeqRef;
      Token id = expect(Tok::Ident, "sequence name");
      try {
        f.seq = sequence_by_id(id.text);
      } catch (const Error&) {
        throw ParseError(id.line, id.col, "unknown sequence '" + id.text + "'");
      }
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek_ident("rpow")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      f.kind = TermFactor::Kind::Rpow;
      f.rpow.num = parse_sint();
      f.rpow.den = 1;
      if (lex_.peek().kind == Tok::Slash) {
        lex_.take();
        f.rpow.den = (i64)parse_uint();
      }
      if (f.rpow.num == 0 || f.rpow.den == 0)
        lex_.fail("rpow ratio must be nonzero");
      expect(Tok::RParen, "')'");
      return f;
    }
    if (peek_ident("inv")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      f.kind = TermFactor::Kind::PolyInv;
      bool parens = lex_.peek().kind == Tok::LParen;
      if (parens) lex_.take();
      i64 a, b;
      parse_lin(a, b);
      if (a == 2 && b == -1)
        f.polyinv.two_k_minus_1 = true;
      else if (a == 1 && b == 1)
        f.polyinv.two_k_minus_1 = false;
      else
        lex_.fail("inv() accepts only 2k-1 or k+1");
      if (parens) expect(Tok::RParen, "')'");
      f.polyinv.power = 1;
      if (parens && lex_.peek().kind == Tok::Caret) {
        lex_.take();
        f.polyinv.power = (int)parse_uint();
        if (f.polyinv.power < 1 || f.polyinv.power > 3)
          lex_.fail("inv() power must be 1..3");
      }
      expect(Tok::RParen, "')'");
      return f;
    }
    lex_.fail("expected a term factor (C / seq / rpow / inv)");
  }

  CaseRule parse_case() {
    CaseRule rule;
    rule.cond = parse_condition();
    expect(Tok::Colon, "':'");
    rule.lhs = parse_expr();
    expect(Tok::Eq3, "'==='");
    rule.rhs = parse_expr();
    expect_ident("mod");
    Token pt = expect(Tok::Ident, "'p'");
    if (pt.text != "p") throw ParseError(pt.line, pt.col, "expected 'p'");
    rule.mod_power = 1;
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      u64 e = parse_uint();
      if (e < 1 || e > 3) lex_.fail("modulus power must be 1..3");
      rule.mod_power = (int)e;
    }
    if (peek_ident("altrhs")) {
      lex_.take();
      rule.alt_rhs = parse_expr();
    }
    return rule;
  }

  Condition parse_condition() {
    Condition c;
    if (peek_ident("always")) {
      lex_.take();
      return c;
    }
    c.atoms.push_back(parse_atom());
    while (lex_.peek().kind == Tok::AndAnd) {
      lex_.take();
      c.atoms.push_back(parse_atom());
    }
    return c;
  }

  CondAtom parse_atom() {
    CondAtom a;
    if (peek_ident("p")) {
      lex_.take();
      if (lex_.peek().kind == Tok::Percent) {
        lex_.take();
        a.kind = CondAtom::Kind::Residue;
        a.mod = (i64)parse_uint();
        expect_ident("in");
        expect(Tok::LBrace, "'{'");
        a.set.push_back((i64)parse_uint());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          a.set.push_back((i64)parse_uint());
        }
        expect(Tok::RBrace, "'}'");
        return a;
      }
      if (lex_.peek().kind == Tok::NotEq) {
        lex_.take();
        a.kind = CondAtom::Kind::PNotEq;
        a.pneq = parse_uint();
        return a;
      }
      lex_.fail("expected '%' or '!=' after 'p'");
    }
    if (peek_ident("leg")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      a.kind = CondAtom::Kind::Symbol;
      a.leg_a = parse_sint();
      expect(Tok::RParen, "')'");
      if (lex_.peek().kind != Tok::Eq2) lex_.fail("expected '=='");
      lex_.take();
      i64 w = parse_sint();
      if (w != 1 && w != -1) lex_.fail("symbol condition wants 1 or -1");
      a.want = (int)w;
      return a;
    }
    if (peek_ident("rep") || peek_ident("rep4")) {
      lex_.take();
      expect(Tok::LParen, "'('");
      a.kind = CondAtom::Kind::Rep;
      a.form.a = (i64)parse_uint();
      expect(Tok::Comma, "','");
      a.form.b = (i64)parse_uint();
      expect(Tok::Comma, "','");
      a.form.m = (i64)parse_uint();
      expect(Tok::RParen, "')'");
      if (peek_ident("xmod4")) {
        lex_.take();
        a.xmod4 = true;
      }
      return a;
    }
    lex_.fail("expected a condition atom");
  }

  ExprPtr mk(Expr::Kind k) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    return e;
  }

  ExprPtr mk_bin(Expr::Kind k, ExprPtr l, ExprPtr r) {
    auto e = mk(k);
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
      bool plus = lex_.take().kind == Tok::Plus;
      e = mk_bin(plus ? Expr::Kind::Add : Expr::Kind::Sub, std::move(e),
                 parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
      bool mul = lex_.take().kind == Tok::Star;
      e = mk_bin(mul ? Expr::Kind::Mul : Expr::Kind::Div, std::move(e),
                 parse_unary());
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      auto e = mk(Expr::Kind::Neg);
      e->lhs = parse_unary();
      return e;
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      auto pw = mk(Expr::Kind::Pow);
      pw->num = parse_sint();
      pw->lhs = std::move(e);
      return pw;
    }
    return e;
  }

  FloorExpr parse_fbexpr() {
    FloorExpr fe;
    if (lex_.peek().kind == Tok::LParen) {
      // exact literal (p±b)/m
      lex_.take();
      expect_ident("p");
      bool plus;
      if (lex_.peek().kind == Tok::Plus)
        plus = true;
      else if (lex_.peek().kind == Tok::Minus)
        plus = false;
      else
        lex_.fail("expected '+' or '-' in exact floor literal");
      lex_.take();
      i64 off = (i64)parse_uint();
      expect(Tok::RParen, "')'");
      expect(Tok::Slash, "'/'");
      fe.exact = true;
      fe.off = plus ? off : -off;
      fe.m = (i64)parse_uint();
      return fe;
    }
    // [a p / m] with optional leading coefficient and trailing offset
    fe.exact = false;
    fe.coeff = 1;
    if (lex_.peek().kind == Tok::Int) {
      fe.coeff = (i64)lex_.take().value;
      if (lex_.peek().kind == Tok::Star) lex_.take();
    }
    expect(Tok::LBracket, "'['");
    fe.a = 1;
    if (lex_.peek().kind == Tok::Int) fe.a = (i64)lex_.take().value;
    expect_ident("p");
    expect(Tok::Slash, "'/'");
    fe.m = (i64)parse_uint();
    expect(Tok::RBracket, "']'");
    fe.off = 0;
    if (lex_.peek().kind == Tok::Plus) {
      lex_.take();
      fe.off = (i64)parse_uint();
    } else if (lex_.peek().kind == Tok::Minus) {
      lex_.take();
      fe.off = -(i64)parse_uint();
    }
    return fe;
  }

  ExprPtr parse_primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Int) {
      auto e = mk(Expr::Kind::Num);
      e->num = (i64)lex_.take().value;
      return e;
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      ExprPtr e = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind != Tok::Ident) lex_.fail("expected an expression");
    std::string id = t.text;
    if (id == "p") { lex_.take(); return mk(Expr::Kind::P); }
    if (id == "x") { lex_.take(); return mk(Expr::Kind::X); }
    if (id == "y") { lex_.take(); return mk(Expr::Kind::Y); }
    if (id == "R1") { lex_.take(); return mk(Expr::Kind::R1); }
    if (id == "R2") { lex_.take(); return mk(Expr::Kind::R2); }
    if (id == "R3") { lex_.take(); return mk(Expr::Kind::R3); }
    if (id == "R7") { lex_.take(); return mk(Expr::Kind::R7); }
    if (id == "tP") { lex_.take(); return mk(Expr::Kind::TP); }
    if (id == "rP") { lex_.take(); return mk(Expr::Kind::RP); }
    if (id == "sP") { lex_.take(); return mk(Expr::Kind::SP); }
    if (id == "sgn_half") { lex_.take(); return mk(Expr::Kind::SgnHalf); }
    if (id == "sgn_floorp4") { lex_.take(); return mk(Expr::Kind::SgnFloorP4); }
    if (id == "pw5m") { lex_.take(); return mk(Expr::Kind::Pw5m); }
    if (id == "S") {
      lex_.take();
      expect(Tok::LParen, "'('");
      auto e = mk(Expr::Kind::SumRef);
      e->sum_id = expect(Tok::Ident, "sum id").text;
      expect(Tok::RParen, "')'");
      return e;
    }
    if (id == "FB") {
      lex_.take();
      expect(Tok::LParen, "'('");
      auto e = mk(Expr::Kind::FB);
      e->fb.top = parse_fbexpr();
      expect(Tok::Comma, "','");
      e->fb.bot = parse_fbexpr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (id == "leg") {
      lex_.take();
      expect(Tok::LParen, "'('");
      auto e = mk(Expr::Kind::Leg);
      e->num = parse_sint();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (id == "H") {
      lex_.take();
      expect(Tok::LParen, "'('");
      expect_ident("p");
      expect(Tok::Slash, "'/'");
      auto e = mk(Expr::Kind::H);
      e->num = (i64)parse_uint();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (id == "q") {
      lex_.take();
      expect(Tok::LParen, "'('");
      auto e = mk(Expr::Kind::Q);
      e->num = parse_sint();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (id == "inv") {
      lex_.take();
      expect(Tok::LParen, "'('");
      auto e = mk(Expr::Kind::Inv);
      e->lhs = parse_expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    lex_.fail("unknown expression atom '" + id + "'");
  }
};

std::string lin_str(i64 a, i64 b) {
  std::ostringstream os;
  if (a == 0) {
    os << b;
    return os.str();
  }
  if (a == -1)
    os << "-k";
  else if (a != 1)
    os << a << "k";
  else
    os << "k";
  if (b > 0) os << "+" << b;
  if (b < 0) os << b;
  return os.str();
}

std::string fbexpr_str(const FloorExpr& fe) {
  std::ostringstream os;
  if (fe.exact) {
    os << "(p" << (fe.off >= 0 ? "+" : "") << fe.off << ")/" << fe.m;
    return os.str();
  }
  if (fe.coeff != 1) os << fe.coeff << "*";
  os << "[";
  if (fe.a != 1) os << fe.a;
  os << "p/" << fe.m << "]";
  if (fe.off > 0) os << "+" << fe.off;
  if (fe.off < 0) os << fe.off;
  return os.str();
}

}  // namespace

std::string print_expr(const Expr& e) {
  auto paren = [](const std::string& s) { return "(" + s + ")"; };
  switch (e.kind) {
    case Expr::Kind::Num: return std::to_string(e.num);
    case Expr::Kind::P: return "p";
    case Expr::Kind::X: return "x";
    case Expr::Kind::Y: return "y";
    case Expr::Kind::SumRef: return "S(" + e.sum_id + ")";
    case Expr::Kind::R1: return "R1";
    case Expr::Kind::R2: return "R2";
    case Expr::Kind::R3: return "R3";
    case Expr::Kind::R7: return "R7";
    case Expr::Kind::TP: return "tP";
    case Expr::Kind::RP: return "rP";
    case Expr::Kind::SP: return "sP";
    case Expr::Kind::FB:
      return "FB(" + fbexpr_str(e.fb.top) + "," + fbexpr_str(e.fb.bot) + ")";
    case Expr::Kind::Leg: return "leg(" + std::to_string(e.num) + ")";
    case Expr::Kind::SgnHalf: return "sgn_half";
    case Expr::Kind::SgnFloorP4: return "sgn_floorp4";
    case Expr::Kind::Pw5m: return "pw5m";
    case Expr::Kind::H: return "H(p/" + std::to_string(e.num) + ")";
    case Expr::Kind::Q: return "q(" + std::to_string(e.num) + ")";
    case Expr::Kind::Inv: return "inv(" + print_expr(*e.lhs) + ")";
    case Expr::Kind::Neg: return "-" + paren(print_expr(*e.lhs));
    case Expr::Kind::Add:
      return paren(print_expr(*e.lhs) + " + " + print_expr(*e.rhs));
    case Expr::Kind::Sub:
      return paren(print_expr(*e.lhs) + " - " + print_expr(*e.rhs));
    case Expr::Kind::Mul:
      return paren(print_expr(*e.lhs) + " * " + print_expr(*e.rhs));
    case Expr::Kind::Div:
      return paren(print_expr(*e.lhs) + " / " + print_expr(*e.rhs));
    case Expr::Kind::Pow:
      return paren(print_expr(*e.lhs)) + "^" + std::to_string(e.num);
  }
  return "?";
}

std::string print_sum(const SumSpec& s) {
  std::ostringstream os;
  os << "sum " << s.id << " = ";
  switch (s.prefix.kind) {
    case SumPrefix::Kind::None: break;
    case SumPrefix::Kind::Leg: os << "leg(" << s.prefix.leg << ") * "; break;
    case SumPrefix::Kind::SgnHalf: os << "sgn_half * "; break;
    case SumPrefix::Kind::SgnFloorP4: os << "sgn_floorp4 * "; break;
  }
  os << "SUM(k) [";
  for (size_t i = 0; i < s.factors.size(); ++i) {
    if (i) os << " * ";
    const TermFactor& f = s.factors[i];
    switch (f.kind) {
      case TermFactor::Kind::Binom:
        os << "C(" << lin_str(f.binom.a1, f.binom.b1) << ","
           << lin_str(f.binom.a0, f.binom.b0) << ")";
        if (f.binom.exp != 1) os << "^" << f.binom.exp;
        break;
      case TermFactor::Kind::SeqRef:
        os << "seq(" << sequence_spec(f.seq).id << ")";
        break;
      case TermFactor::Kind::Rpow:
        os << "rpow(" << f.rpow.num;
        if (f.rpow.den != 1) os << "/" << f.rpow.den;
        os << ")";
        break;
      case TermFactor::Kind::PolyInv: {
        const char* poly = f.polyinv.two_k_minus_1 ? "2k-1" : "k+1";
        if (f.polyinv.power == 1)
          os << "inv(" << poly << ")";
        else
          os << "inv((" << poly << ")^" << f.polyinv.power << ")";
        break;
      }
    }
  }
  os << "]";
  return os.str();
}

std::string print_condition(const Condition& c) {
  if (c.atoms.empty()) return "always";
  std::ostringstream os;
  for (size_t i = 0; i < c.atoms.size(); ++i) {
    if (i) os << " && ";
    const CondAtom& a = c.atoms[i];
    switch (a.kind) {
      case CondAtom::Kind::Residue:
        os << "p % " << a.mod << " in {";
        for (size_t j = 0; j < a.set.size(); ++j) {
          if (j) os << ",";
          os << a.set[j];
        }
        os << "}";
        break;
      case CondAtom::Kind::Symbol:
        os << "leg(" << a.leg_a << ") == " << a.want;
        break;
      case CondAtom::Kind::Rep:
        os << "rep(" << a.form.a << "," << a.form.b << "," << a.form.m << ")";
        if (a.xmod4) os << " xmod4";
        break;
      case CondAtom::Kind::PNotEq:
        os << "p != " << a.pneq;
        break;
    }
  }
  return os.str();
}

std::string print_registry(const Registry& reg) {
  std::ostringstream os;
  for (const auto& c : reg.conjectures) {
    os << "conjecture \"" << c.id << "\" "
       << (c.proved ? "proved" : "conjectured") << " {\n";
    for (u64 q : c.excluded) os << "  exclude " << q << "\n";
    for (const auto& sid : c.sum_ids) {
      auto it = reg.sums.find(sid);
      if (it != reg.sums.end() && reg.sum_parent.at(sid) == c.id)
        os << "  " << print_sum(it->second) << "\n";
    }
    for (const auto& rule : c.cases) {
      os << "  case " << print_condition(rule.cond) << " : "
         << print_expr(*rule.lhs) << " === " << print_expr(*rule.rhs) << " mod p";
      if (rule.mod_power > 1) os << "^" << rule.mod_power;
      if (rule.alt_rhs) os << " altrhs " << print_expr(*rule.alt_rhs);
      os << "\n";
    }
    os << "}\n";
  }
  return os.str();
}

Registry parse_registry(const std::string& text) {
  Parser p(text);
  Registry reg = p.parse();
  reg.source_hash = to_string_u128(fnv1a64(text));
  return reg;
}

Registry load_registry_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::BadConfig, "cannot open registry file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

}  // namespace supercong
