#include "orbitkit/dsl.hpp"

#include <cctype>
#include <sstream>

namespace orbitkit::dsl {

std::string Span::to_string() const {
  std::ostringstream os;
  os << line1 << ":" << col1 << "-" << line2 << ":" << col2;
  return os.str();
}

std::string Diagnostic::render() const {
  std::string out = severity == Severity::error ? "error" : "warning";
  out += " [" + span.to_string() + "]: " + message;
  for (const auto& n : notes) out += "\n  note: " + n;
  return out;
}

namespace {

enum class Tok {
  ident,
  number,    // rational, possibly with an imaginary suffix
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  arrow,
  equals,
  comma,
  semicolon,
  star,
  plus,
  minus,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  bool imaginary = false;
  int line = 0, col = 0;
};

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Diagnostic>* diags;

  Lexer(const std::string& s, std::vector<Diagnostic>* d) : src(s), diags(d) {}

  void advance() {
    if (pos < src.size() && src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  Token next() {
    skip_space();
    Token t;
    t.line = line;
    t.col = col;
    if (pos >= src.size()) {
      t.kind = Tok::end;
      return t;
    }
    char c = src[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
        s += src[pos];
        advance();
      }
      t.kind = Tok::ident;
      t.text = s;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string s;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        s += src[pos];
        advance();
      }
      if (pos < src.size() && src[pos] == '/') {
        s += '/';
        advance();
        if (pos >= src.size() || !std::isdigit(static_cast<unsigned char>(src[pos]))) {
          diags->push_back({Diagnostic::Severity::error,
                            "expected digits after '/' in rational literal",
                            {t.line, t.col, line, col},
                            {}});
          s += '1';  // keep the token well formed; the diagnostic is recorded
        }
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
          s += src[pos];
          advance();
        }
      }
      t.kind = Tok::number;
      t.text = s;
      if (pos < src.size() && src[pos] == 'i' &&
          (pos + 1 >= src.size() ||
           !std::isalnum(static_cast<unsigned char>(src[pos + 1])))) {
        t.imaginary = true;
        advance();
      }
      return t;
    }
    switch (c) {
      case '{': t.kind = Tok::lbrace; advance(); return t;
      case '}': t.kind = Tok::rbrace; advance(); return t;
      case '[': t.kind = Tok::lbracket; advance(); return t;
      case ']': t.kind = Tok::rbracket; advance(); return t;
      case '=': t.kind = Tok::equals; advance(); return t;
      case ',': t.kind = Tok::comma; advance(); return t;
      case ';': t.kind = Tok::semicolon; advance(); return t;
      case '*': {
        // '*' doubles as the dual marker after a product name and as the
        // scalar multiplication sign; the parser disambiguates by position.
        t.kind = Tok::star;
        advance();
        return t;
      }
      case '+': t.kind = Tok::plus; advance(); return t;
      case '-':
        advance();
        if (pos < src.size() && src[pos] == '>') {
          advance();
          t.kind = Tok::arrow;
          return t;
        }
        t.kind = Tok::minus;
        return t;
      default:
        diags->push_back({Diagnostic::Severity::error,
                          std::string("unexpected character '") + c + "'",
                          {t.line, t.col, t.line, t.col + 1},
                          {}});
        advance();
        return next();
    }
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t idx = 0;
  std::vector<Diagnostic>* diags;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = idx + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token take() {
    Token t = peek();
    if (idx < toks.size() - 1) ++idx;
    return t;
  }
  Span span_of(const Token& t) const {
    int len = static_cast<int>(t.text.size());
    if (len == 0) len = 1;
    return {t.line, t.col, t.line, t.col + len};
  }
  void error(const Token& at, const std::string& msg) {
    diags->push_back({Diagnostic::Severity::error, msg, span_of(at), {}});
  }
  bool expect(Tok kind, const char* what) {
    if (peek().kind == kind) {
      take();
      return true;
    }
    error(peek(), std::string("expected ") + what);
    return false;
  }
  bool expect_keyword(const char* kw) {
    if (peek().kind == Tok::ident && peek().text == kw) {
      take();
      return true;
    }
    error(peek(), std::string("expected '") + kw + "'");
    return false;
  }
  std::optional<std::string> expect_name(const char* what) {
    if (peek().kind == Tok::ident) return take().text;
    error(peek(), std::string("expected ") + what);
    return std::nullopt;
  }

  std::optional<CRat> coefficient(bool allow_complex, bool negative) {
    Token t = take();  // number
    Rat value = parse_rat(t.text);
    if (negative) value = -value;
    if (t.imaginary) {
      if (!allow_complex) {
        error(t, "imaginary coefficients are only allowed in polarization blocks");
        return std::nullopt;
      }
      return CRat(Rat(0), value);
    }
    return CRat(value);
  }

  /// lincomb := ['-'] term (('+'|'-') term)*
  /// term := number ['*'] ident | ident
  std::optional<LinComb> lincomb(bool allow_complex) {
    LinComb lc;
    Token first = peek();
    bool negative = false;
    if (peek().kind == Tok::minus) {
      take();
      negative = true;
    }
    while (true) {
      Term term;
      Token t0 = peek();
      if (t0.kind == Tok::number) {
        auto c = coefficient(allow_complex, negative);
        if (!c) return std::nullopt;
        term.coeff = *c;
        if (peek().kind == Tok::star) take();
        auto nm = expect_name("basis name after coefficient");
        if (!nm) return std::nullopt;
        term.name = *nm;
      } else if (t0.kind == Tok::ident) {
        term.coeff = CRat(negative ? -1 : 1);
        term.name = take().text;
      } else {
        error(t0, "expected a linear-combination term");
        return std::nullopt;
      }
      term.span = span_of(t0);
      lc.terms.push_back(term);
      if (peek().kind == Tok::plus) {
        take();
        negative = false;
      } else if (peek().kind == Tok::minus) {
        take();
        negative = true;
      } else {
        break;
      }
    }
    lc.span = {first.line, first.col, peek().line, peek().col};
    return lc;
  }

  std::optional<AlgebraDecl> algebra() {
    AlgebraDecl d;
    Token at = peek();
    take();  // 'algebra'
    auto nm = expect_name("algebra name");
    if (!nm) return std::nullopt;
    d.name = *nm;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    if (!expect_keyword("basis")) return std::nullopt;
    while (peek().kind == Tok::ident && peek().text != "bracket")
      d.basis.push_back(take().text);
    if (d.basis.empty()) {
      error(peek(), "algebra needs at least one basis name");
      return std::nullopt;
    }
    while (peek().kind == Tok::ident && peek().text == "bracket") {
      Token bat = take();
      BracketDecl b;
      if (!expect(Tok::lbracket, "'['")) return std::nullopt;
      auto n1 = expect_name("basis name");
      if (!n1) return std::nullopt;
      if (!expect(Tok::comma, "','")) return std::nullopt;
      auto n2 = expect_name("basis name");
      if (!n2) return std::nullopt;
      if (!expect(Tok::rbracket, "']'")) return std::nullopt;
      if (!expect(Tok::equals, "'='")) return std::nullopt;
      b.lhs1 = *n1;
      b.lhs2 = *n2;
      auto rhs = lincomb(false);
      if (!rhs) return std::nullopt;
      b.rhs = *rhs;
      b.span = {bat.line, bat.col, peek().line, peek().col};
      d.brackets.push_back(std::move(b));
    }
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    d.span = span_of(at);
    return d;
  }

  std::optional<std::vector<std::vector<Rat>>> matrix() {
    std::vector<std::vector<Rat>> rows;
    if (!expect(Tok::lbracket, "'['")) return std::nullopt;
    while (true) {
      std::vector<Rat> row;
      while (true) {
        bool neg = false;
        if (peek().kind == Tok::minus) {
          take();
          neg = true;
        }
        if (peek().kind != Tok::number) {
          error(peek(), "expected a rational matrix entry");
          return std::nullopt;
        }
        Token t = take();
        if (t.imaginary) {
          error(t, "matrix entries are real");
          return std::nullopt;
        }
        Rat v = parse_rat(t.text);
        row.push_back(neg ? Rat(-v) : v);
        if (peek().kind == Tok::comma) {
          take();
          continue;
        }
        break;
      }
      rows.push_back(std::move(row));
      if (peek().kind == Tok::semicolon) {
        take();
        continue;
      }
      break;
    }
    if (!expect(Tok::rbracket, "']'")) return std::nullopt;
    return rows;
  }

  std::optional<RepDecl> rep() {
    RepDecl d;
    Token at = peek();
    take();  // 'rep'
    auto nm = expect_name("representation name");
    if (!nm) return std::nullopt;
    d.name = *nm;
    if (!expect_keyword("on")) return std::nullopt;
    auto alg = expect_name("algebra name");
    if (!alg) return std::nullopt;
    d.algebra = *alg;
    if (!expect_keyword("dim")) return std::nullopt;
    if (peek().kind != Tok::number) {
      error(peek(), "expected the space dimension");
      return std::nullopt;
    }
    d.dim = static_cast<std::size_t>(parse_rat(take().text).get_num().get_si());
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    while (peek().kind == Tok::ident) {
      RepEntry e;
      Token t = peek();
      e.basis_name = take().text;
      if (!expect(Tok::arrow, "'->'")) return std::nullopt;
      auto m = matrix();
      if (!m) return std::nullopt;
      e.matrix = *m;
      e.span = span_of(t);
      d.entries.push_back(std::move(e));
    }
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    d.span = span_of(at);
    return d;
  }

  std::optional<ProductDecl> product() {
    ProductDecl d;
    Token at = peek();
    take();  // 'product'
    auto nm = expect_name("product name");
    if (!nm) return std::nullopt;
    d.name = *nm;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    auto alg = expect_name("algebra name");
    if (!alg) return std::nullopt;
    d.algebra = *alg;
    if (!expect_keyword("x")) return std::nullopt;
    auto rp = expect_name("representation name");
    if (!rp) return std::nullopt;
    d.rep = *rp;
    d.span = span_of(at);
    return d;
  }

  std::optional<PointDecl> point() {
    PointDecl d;
    Token at = peek();
    take();  // 'point'
    auto nm = expect_name("point name");
    if (!nm) return std::nullopt;
    d.name = *nm;
    if (!expect_keyword("in")) return std::nullopt;
    auto pr = expect_name("product name");
    if (!pr) return std::nullopt;
    d.product = *pr;
    if (!expect(Tok::star, "'*'")) return std::nullopt;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    if (!expect_keyword("f")) return std::nullopt;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    auto fl = lincomb(false);
    if (!fl) return std::nullopt;
    d.f = *fl;
    if (!expect(Tok::semicolon, "';'")) return std::nullopt;
    if (!expect_keyword("p")) return std::nullopt;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    auto pl = lincomb(false);
    if (!pl) return std::nullopt;
    d.p = *pl;
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    d.span = span_of(at);
    return d;
  }

  std::optional<PolarizationDecl> polarization() {
    PolarizationDecl d;
    Token at = peek();
    take();  // 'polarization'
    auto nm = expect_name("polarization name");
    if (!nm) return std::nullopt;
    d.name = *nm;
    if (!expect_keyword("at")) return std::nullopt;
    auto pt = expect_name("point name");
    if (!pt) return std::nullopt;
    d.point = *pt;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    if (!expect_keyword("a")) return std::nullopt;
    if (!expect(Tok::equals, "'='")) return std::nullopt;
    if (!expect_keyword("span")) return std::nullopt;
    if (!expect(Tok::lbrace, "'{'")) return std::nullopt;
    while (true) {
      auto lc = lincomb(true);
      if (!lc) return std::nullopt;
      d.span_vectors.push_back(*lc);
      if (peek().kind == Tok::comma) {
        take();
        continue;
      }
      break;
    }
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    if (!expect(Tok::rbrace, "'}'")) return std::nullopt;
    d.span = span_of(at);
    return d;
  }
};

}  // namespace

ParseResult parse(const std::string& text) {
  ParseResult result;
  Lexer lex(text, &result.diagnostics);
  std::vector<Token> toks;
  while (true) {
    Token t = lex.next();
    toks.push_back(t);
    if (t.kind == Tok::end) break;
  }
  Parser p{std::move(toks), 0, &result.diagnostics};
  while (p.peek().kind != Tok::end) {
    if (p.peek().kind != Tok::ident) {
      p.error(p.peek(), "expected a declaration");
      break;
    }
    const std::string& kw = p.peek().text;
    Decl decl;
    if (kw == "algebra") {
      auto d = p.algebra();
      if (!d) break;
      decl.kind = Decl::Kind::algebra;
      decl.algebra = *d;
    } else if (kw == "rep") {
      auto d = p.rep();
      if (!d) break;
      decl.kind = Decl::Kind::rep;
      decl.rep = *d;
    } else if (kw == "product") {
      auto d = p.product();
      if (!d) break;
      decl.kind = Decl::Kind::product;
      decl.product = *d;
    } else if (kw == "point") {
      auto d = p.point();
      if (!d) break;
      decl.kind = Decl::Kind::point;
      decl.point = *d;
    } else if (kw == "polarization") {
      auto d = p.polarization();
      if (!d) break;
      decl.kind = Decl::Kind::polarization;
      decl.polarization = *d;
    } else {
      p.error(p.peek(), "unknown declaration '" + kw + "'");
      break;
    }
    result.doc.decls.push_back(std::move(decl));
  }
  return result;
}

namespace {

std::string print_coeff(const CRat& c) {
  if (is_zero(c.im)) return to_string(c.re);
  if (is_zero(c.re)) return to_string(c.im) + "i";
  return to_string(c.re) + "+" + to_string(c.im) + "i";  // not produced by parse
}

void print_lincomb(std::ostringstream& os, const LinComb& lc) {
  bool first = true;
  for (const auto& t : lc.terms) {
    CRat c = t.coeff;
    bool negative = is_zero(c.im) ? sgn(c.re) < 0 : sgn(c.im) < 0;
    if (first) {
      if (negative) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (negative ? " - " : " + ");
      if (negative) c = -c;
    }
    if (c == CRat(1)) {
      os << t.name;
    } else {
      os << print_coeff(c) << "*" << t.name;
    }
  }
}

}  // namespace

std::string print(const SpecDocument& doc) {
  std::ostringstream os;
  for (const auto& decl : doc.decls) {
    switch (decl.kind) {
      case Decl::Kind::algebra: {
        const auto& d = decl.algebra;
        os << "algebra " << d.name << " {\n  basis";
        for (const auto& b : d.basis) os << " " << b;
        os << "\n";
        for (const auto& br : d.brackets) {
          os << "  bracket [" << br.lhs1 << "," << br.lhs2 << "] = ";
          print_lincomb(os, br.rhs);
          os << "\n";
        }
        os << "}\n";
        break;
      }
      case Decl::Kind::rep: {
        const auto& d = decl.rep;
        os << "rep " << d.name << " on " << d.algebra << " dim " << d.dim << " {\n";
        for (const auto& e : d.entries) {
          os << "  " << e.basis_name << " -> [";
          for (std::size_t r = 0; r < e.matrix.size(); ++r) {
            if (r) os << "; ";
            for (std::size_t c = 0; c < e.matrix[r].size(); ++c) {
              if (c) os << ",";
              os << to_string(e.matrix[r][c]);
            }
          }
          os << "]\n";
        }
        os << "}\n";
        break;
      }
      case Decl::Kind::product: {
        const auto& d = decl.product;
        os << "product " << d.name << " = " << d.algebra << " x " << d.rep << "\n";
        break;
      }
      case Decl::Kind::point: {
        const auto& d = decl.point;
        os << "point " << d.name << " in " << d.product << "* { f = ";
        print_lincomb(os, d.f);
        os << "; p = ";
        print_lincomb(os, d.p);
        os << " }\n";
        break;
      }
      case Decl::Kind::polarization: {
        const auto& d = decl.polarization;
        os << "polarization " << d.name << " at " << d.point << " { a = span { ";
        for (std::size_t i = 0; i < d.span_vectors.size(); ++i) {
          if (i) os << ", ";
          print_lincomb(os, d.span_vectors[i]);
        }
        os << " } }\n";
        break;
      }
    }
  }
  return os.str();
}

namespace {

struct NameIndex {
  std::map<std::string, std::size_t> index;
  bool lookup(const std::string& n, std::size_t* out) const {
    auto it = index.find(n);
    if (it == index.end()) return false;
    *out = it->second;
    return true;
  }
};

void err(Elaboration& el, const Span& span, const std::string& msg,
         std::vector<std::string> notes = {}) {
  el.diagnostics.push_back(
      {Diagnostic::Severity::error, msg, span, std::move(notes)});
}

}  // namespace

Elaboration elaborate(const SpecDocument& doc) {
  Elaboration el;
  std::map<std::string, NameIndex> algebra_basis;
  std::map<std::string, std::vector<BracketDecl>> algebra_brackets;

  for (const auto& decl : doc.decls) {
    switch (decl.kind) {
      case Decl::Kind::algebra: {
        const auto& d = decl.algebra;
        if (el.algebras.count(d.name)) {
          err(el, d.span, "duplicate algebra name '" + d.name + "'");
          break;
        }
        NameIndex ni;
        bool bad = false;
        for (std::size_t i = 0; i < d.basis.size(); ++i) {
          if (ni.index.count(d.basis[i])) {
            err(el, d.span, "duplicate basis name '" + d.basis[i] + "'");
            bad = true;
          }
          ni.index[d.basis[i]] = i;
        }
        if (bad) break;
        LieAlgebra alg(d.basis.size(), d.basis);
        std::map<std::pair<std::size_t, std::size_t>, bool> seen;
        for (const auto& br : d.brackets) {
          std::size_t i = 0, j = 0;
          if (!ni.lookup(br.lhs1, &i) || !ni.lookup(br.lhs2, &j)) {
            err(el, br.span, "bracket references an unknown basis name");
            bad = true;
            continue;
          }
          if (i == j) {
            err(el, br.span,
                "bracket of a basis element with itself must be zero");
            bad = true;
            continue;
          }
          if (i > j) {
            err(el, br.span,
                "declare brackets with the earlier basis element first",
                {"antisymmetry fills [" + br.lhs2 + "," + br.lhs1 + "]"});
            bad = true;
            continue;
          }
          if (seen[{i, j}]) {
            err(el, br.span, "duplicate bracket definition");
            bad = true;
            continue;
          }
          seen[{i, j}] = true;
          for (const auto& term : br.rhs.terms) {
            std::size_t k = 0;
            if (!ni.lookup(term.name, &k)) {
              err(el, term.span, "unknown basis name '" + term.name + "'");
              bad = true;
              continue;
            }
            alg.set_bracket(i, j, k, alg.c(i, j, k) + term.coeff.re);
          }
        }
        if (bad) break;
        ValidationReport vr = validate(alg);
        if (!vr.ok()) {
          for (const auto& issue : vr.issues) {
            Span at = d.span;
            // Point the Jacobi diagnostic at a bracket declaration involving
            // the offending triple when one exists.
            for (const auto& br : d.brackets) {
              std::size_t i = 0, j = 0;
              ni.lookup(br.lhs1, &i);
              ni.lookup(br.lhs2, &j);
              if ((i == issue.i || i == issue.j || i == issue.k) &&
                  (j == issue.i || j == issue.j || j == issue.k))
                at = br.span;
            }
            err(el, at, issue.describe(alg));
          }
          break;
        }
        el.algebras[d.name] = alg;
        algebra_basis[d.name] = ni;
        algebra_brackets[d.name] = d.brackets;
        break;
      }
      case Decl::Kind::rep: {
        const auto& d = decl.rep;
        if (el.reps.count(d.name)) {
          err(el, d.span, "duplicate representation name '" + d.name + "'");
          break;
        }
        auto alg_it = el.algebras.find(d.algebra);
        if (alg_it == el.algebras.end()) {
          err(el, d.span, "unknown algebra '" + d.algebra + "' (declare it first)");
          break;
        }
        const LieAlgebra& alg = alg_it->second;
        const NameIndex& ni = algebra_basis[d.algebra];
        Representation rep(alg.dim(), d.dim);
        bool bad = false;
        for (const auto& e : d.entries) {
          std::size_t i = 0;
          if (!ni.lookup(e.basis_name, &i)) {
            err(el, e.span, "unknown basis name '" + e.basis_name + "'");
            bad = true;
            continue;
          }
          if (e.matrix.size() != d.dim) {
            err(el, e.span, "matrix has " + std::to_string(e.matrix.size()) +
                                " rows, expected " + std::to_string(d.dim));
            bad = true;
            continue;
          }
          QMatrix m(d.dim, d.dim);
          for (std::size_t r = 0; r < d.dim && !bad; ++r) {
            if (e.matrix[r].size() != d.dim) {
              err(el, e.span, "matrix row " + std::to_string(r + 1) + " has " +
                                  std::to_string(e.matrix[r].size()) +
                                  " entries, expected " + std::to_string(d.dim));
              bad = true;
              break;
            }
            for (std::size_t c = 0; c < d.dim; ++c) m(r, c) = e.matrix[r][c];
          }
          if (!bad) rep.set_matrix(i, m);
        }
        if (bad) break;
        ValidationReport vr = validate(alg, rep);
        if (!vr.ok()) {
          for (const auto& issue : vr.issues)
            if (issue.kind == ValidationIssue::Kind::homomorphism ||
                issue.kind == ValidationIssue::Kind::shape)
              err(el, d.span, issue.describe(alg));
          break;
        }
        el.reps[d.name] = rep;
        el.rep_algebra[d.name] = d.algebra;
        break;
      }
      case Decl::Kind::product: {
        const auto& d = decl.product;
        if (el.products.count(d.name)) {
          err(el, d.span, "duplicate product name '" + d.name + "'");
          break;
        }
        auto alg_it = el.algebras.find(d.algebra);
        auto rep_it = el.reps.find(d.rep);
        if (alg_it == el.algebras.end()) {
          err(el, d.span, "unknown algebra '" + d.algebra + "' (declare it first)");
          break;
        }
        if (rep_it == el.reps.end()) {
          err(el, d.span, "unknown representation '" + d.rep + "' (declare it first)");
          break;
        }
        if (el.rep_algebra[d.rep] != d.algebra) {
          err(el, d.span, "representation '" + d.rep + "' is not defined on '" +
                              d.algebra + "'");
          break;
        }
        el.products[d.name] = SemidirectProduct(alg_it->second, rep_it->second);
        break;
      }
      case Decl::Kind::point: {
        const auto& d = decl.point;
        if (el.points.count(d.name)) {
          err(el, d.span, "duplicate point name '" + d.name + "'");
          break;
        }
        auto pr_it = el.products.find(d.product);
        if (pr_it == el.products.end()) {
          err(el, d.span, "unknown product '" + d.product + "' (declare it first)");
          break;
        }
        const SemidirectProduct& sd = pr_it->second;
        std::string alg_name;
        for (const auto& dd : doc.decls)
          if (dd.kind == Decl::Kind::product && dd.product.name == d.product)
            alg_name = dd.product.algebra;
        const NameIndex& ni = algebra_basis[alg_name];
        CovectorPoint n;
        n.f.assign(sd.dim_k(), Rat(0));
        n.p.assign(sd.dim_v(), Rat(0));
        bool bad = false;
        for (const auto& term : d.f.terms) {
          std::size_t i = 0;
          if (!ni.lookup(term.name, &i)) {
            err(el, term.span, "unknown basis name '" + term.name + "' in f");
            bad = true;
            continue;
          }
          n.f[i] += term.coeff.re;
        }
        for (const auto& term : d.p.terms) {
          // V-coordinates are addressed as v1..vN.
          if (term.name.size() < 2 || term.name[0] != 'v') {
            err(el, term.span,
                "p must combine the names v1..v" + std::to_string(sd.dim_v()));
            bad = true;
            continue;
          }
          std::size_t s = 0;
          try {
            s = std::stoul(term.name.substr(1));
          } catch (...) {
            s = 0;
          }
          if (s < 1 || s > sd.dim_v()) {
            err(el, term.span, "unknown V-coordinate '" + term.name + "'");
            bad = true;
            continue;
          }
          n.p[s - 1] += term.coeff.re;
        }
        if (bad) break;
        el.points[d.name] = {d.product, n};
        break;
      }
      case Decl::Kind::polarization: {
        const auto& d = decl.polarization;
        if (el.polarizations.count(d.name)) {
          err(el, d.span, "duplicate polarization name '" + d.name + "'");
          break;
        }
        auto pt_it = el.points.find(d.point);
        if (pt_it == el.points.end()) {
          err(el, d.span, "unknown point '" + d.point + "' (declare it first)");
          break;
        }
        const std::string& product = pt_it->second.product;
        const SemidirectProduct& sd = el.products[product];
        std::string alg_name;
        for (const auto& dd : doc.decls)
          if (dd.kind == Decl::Kind::product && dd.product.name == product)
            alg_name = dd.product.algebra;
        const NameIndex& ni = algebra_basis[alg_name];
        CMatrix rows(d.span_vectors.size() + sd.dim_v(), sd.dim_g());
        bool bad = false;
        for (std::size_t r = 0; r < d.span_vectors.size(); ++r) {
          for (const auto& term : d.span_vectors[r].terms) {
            std::size_t i = 0;
            if (!ni.lookup(term.name, &i)) {
              err(el, term.span,
                  "unknown basis name '" + term.name + "' in polarization span");
              bad = true;
              continue;
            }
            rows(r, i) += term.coeff;
          }
        }
        if (bad) break;
        for (std::size_t s = 0; s < sd.dim_v(); ++s)
          rows(d.span_vectors.size() + s, sd.dim_k() + s) = CRat(1);
        el.polarizations[d.name] = {
            product, d.point, ComplexSubspace::span(sd.dim_g(), rows)};
        break;
      }
    }
  }
  return el;
}

Elaboration load(const std::string& text) {
  ParseResult pr = parse(text);
  if (!pr.ok()) {
    Elaboration el;
    el.diagnostics = pr.diagnostics;
    return el;
  }
  return elaborate(pr.doc);
}

}  // namespace orbitkit::dsl
