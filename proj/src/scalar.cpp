#include "kappamu/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace kappamu {

namespace {

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("exponent overflow in addition");
  return r;
}

std::int32_t checked_mul(std::int32_t a, long b) {
  long wide;
  if (__builtin_mul_overflow(static_cast<long>(a), b, &wide) ||
      wide > std::numeric_limits<std::int32_t>::max() ||
      wide < std::numeric_limits<std::int32_t>::min())
    throw OverflowError("exponent overflow in multiplication");
  return static_cast<std::int32_t>(wide);
}

ExpVec add_exps(const ExpVec &a, const ExpVec &b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_add(a[i], b[i]);
  return r;
}

ExpVec sub_exps(const ExpVec &a, const ExpVec &b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int32_t neg;
    if (__builtin_sub_overflow(std::int32_t{0}, b[i], &neg))
      throw OverflowError("exponent overflow in negation");
    r[i] = checked_add(a[i], neg);
  }
  return r;
}

} // namespace

std::string rational_to_string(const Rational &q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ParseError("malformed rational '" + s + "'", 0);
  q.canonicalize();
  return q;
}

CoordSystem::CoordSystem(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw DomainError("duplicate coordinate name '" + names_[i] + "'");
}

std::optional<std::size_t> CoordSystem::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

void ScalarExpr::require_coords() const {
  if (!coords_)
    throw DomainError("operation on an uninitialized expression");
}

ScalarExpr ScalarExpr::constant(CoordSystemPtr coords, const Rational &value) {
  ScalarExpr e(std::move(coords));
  e.add_term(ExpVec(e.coords_->size(), 0), value);
  return e;
}

ScalarExpr ScalarExpr::coordinate(CoordSystemPtr coords, std::size_t i) {
  ScalarExpr e(std::move(coords));
  if (i >= e.coords_->size())
    throw DomainError("coordinate index out of range");
  ExpVec exps(e.coords_->size(), 0);
  exps[i] = 1;
  e.add_term(exps, 1);
  return e;
}

ScalarExpr ScalarExpr::monomial(CoordSystemPtr coords, ExpVec exps,
                                const Rational &coeff) {
  ScalarExpr e(std::move(coords));
  if (exps.size() != e.coords_->size())
    throw DomainError("exponent vector has wrong arity");
  e.add_term(exps, coeff);
  return e;
}

bool ScalarExpr::is_constant() const noexcept {
  if (terms_.empty())
    return true;
  if (terms_.size() != 1)
    return false;
  const ExpVec &e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::int32_t k) { return k == 0; });
}

std::optional<Rational> ScalarExpr::constant_value() const {
  if (!is_constant())
    return std::nullopt;
  if (terms_.empty())
    return Rational(0);
  return terms_.begin()->second;
}

void ScalarExpr::add_term(const ExpVec &exps, const Rational &coeff) {
  require_coords();
  if (coeff == 0)
    return;
  auto [it, inserted] = terms_.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0)
      terms_.erase(it);
  }
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr r(coords_);
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(e, -c);
  return r;
}

ScalarExpr &ScalarExpr::operator+=(const ScalarExpr &o) {
  if (!coords_)
    coords_ = o.coords_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

ScalarExpr &ScalarExpr::operator-=(const ScalarExpr &o) {
  if (!coords_)
    coords_ = o.coords_;
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

ScalarExpr operator*(const ScalarExpr &a, const ScalarExpr &b) {
  const CoordSystemPtr &coords = a.coords_ ? a.coords_ : b.coords_;
  ScalarExpr r(coords);
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      r.add_term(add_exps(ea, eb), ca * cb);
  return r;
}

ScalarExpr ScalarExpr::scaled(const Rational &c) const {
  ScalarExpr r(coords_);
  if (c == 0)
    return r;
  for (const auto &[e, k] : terms_)
    r.terms_.emplace(e, k * c);
  return r;
}

ScalarExpr ScalarExpr::pow_int(long k) const {
  require_coords();
  if (k == 0)
    return constant(coords_, 1);
  if (k < 0) {
    if (!is_monomial())
      throw DomainError("negative power of a non-monomial expression");
    const auto &[e, c] = *terms_.begin();
    ExpVec inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      inv[i] = checked_mul(e[i], k);
    return monomial(coords_, std::move(inv), rational_pow(c, k));
  }
  ScalarExpr acc = constant(coords_, 1);
  ScalarExpr base = *this;
  long n = k;
  while (n > 0) {
    if (n & 1)
      acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

ScalarExpr ScalarExpr::divide_by_monomial(const ScalarExpr &divisor) const {
  require_coords();
  if (divisor.is_zero())
    throw DomainError("division by zero");
  if (!divisor.is_monomial())
    throw DomainError("division by a non-monomial expression");
  const auto &[de, dc] = *divisor.terms_.begin();
  ScalarExpr r(coords_);
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(sub_exps(e, de), c / dc);
  return r;
}

std::optional<ScalarExpr>
ScalarExpr::try_divide_exact(const ScalarExpr &num, const ScalarExpr &den) {
  if (den.is_zero())
    return std::nullopt;
  if (num.is_zero())
    return ScalarExpr(num.coords_ ? num.coords_ : den.coords_);
  if (den.is_monomial())
    return num.divide_by_monomial(den);

  const CoordSystemPtr &coords = num.coords_;
  const std::size_t dim = coords->size();

  // Shift both operands into the ordinary polynomial ring so the division
  // loop terminates, then shift the quotient back.
  auto min_exps = [dim](const ScalarExpr &e) {
    ExpVec m = e.terms().begin()->first;
    for (const auto &[exps, c] : e.terms())
      for (std::size_t i = 0; i < dim; ++i)
        m[i] = std::min(m[i], exps[i]);
    return m;
  };
  ExpVec mn = min_exps(num), md = min_exps(den);
  ScalarExpr n = num.divide_by_monomial(monomial(coords, mn, 1));
  ScalarExpr d = den.divide_by_monomial(monomial(coords, md, 1));

  ScalarExpr q(coords);
  ScalarExpr r = n;
  const auto &[dlead_e, dlead_c] = *d.terms().rbegin();
  while (!r.is_zero()) {
    const auto &[rlead_e, rlead_c] = *r.terms().rbegin();
    ExpVec t(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rlead_e[i] < dlead_e[i])
        return std::nullopt;
      t[i] = rlead_e[i] - dlead_e[i];
    }
    ScalarExpr mono = monomial(coords, std::move(t), rlead_c / dlead_c);
    q += mono;
    r -= mono * d;
  }
  return q * monomial(coords, sub_exps(mn, md), 1);
}

ScalarExpr ScalarExpr::partial_diff(std::size_t coord) const {
  require_coords();
  if (coord >= coords_->size())
    throw DomainError("coordinate index out of range");
  ScalarExpr r(coords_);
  for (const auto &[e, c] : terms_) {
    if (e[coord] == 0)
      continue;
    ExpVec de = e;
    de[coord] = checked_add(de[coord], -1);
    r.add_term(de, c * e[coord]);
  }
  return r;
}

Rational rational_pow(const Rational &base, long k) {
  if (k == 0)
    return 1;
  Rational b = base;
  if (k < 0) {
    if (b == 0)
      throw EvalError("zero raised to a negative power");
    b = 1 / b;
    k = -k;
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

Rational ScalarExpr::eval_at(const RationalPoint &p) const {
  require_coords();
  if (p.size() != coords_->size())
    throw EvalError("point has wrong number of coordinate values");
  Rational total = 0;
  for (const auto &[e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (p[i] == 0 && e[i] < 0)
        throw EvalError("coordinate '" + coords_->name(i) +
                        "' is zero but appears with a negative exponent");
      term *= rational_pow(p[i], e[i]);
    }
    total += term;
  }
  return total;
}

std::string ScalarExpr::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  // Reverse map order prints constants and high powers first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto &[e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0)
        out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars =
        std::any_of(e.begin(), e.end(), [](std::int32_t k) { return k != 0; });
    bool printed = false;
    if (!has_vars || mag != 1) {
      out << rational_to_string(mag);
      printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (printed)
        out << "*";
      out << coords_->name(i);
      if (e[i] != 1)
        out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent parser over a flat token stream.
struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size())
      return {Token::End, "", start};
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i_])))
        ++i_;
      return {Token::Int, std::string(text_.substr(start, i_ - start)), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) ||
              text_[i_] == '_'))
        ++i_;
      return {Token::Ident, std::string(text_.substr(start, i_ - start)), start};
    }
    ++i_;
    switch (c) {
    case '+':
      return {Token::Plus, "+", start};
    case '-':
      return {Token::Minus, "-", start};
    case '*':
      return {Token::Star, "*", start};
    case '/':
      return {Token::Slash, "/", start};
    case '^':
      return {Token::Caret, "^", start};
    case '(':
      return {Token::LParen, "(", start};
    case ')':
      return {Token::RParen, ")", start};
    default:
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

private:
  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
public:
  Parser(std::string_view text, CoordSystemPtr coords)
      : lexer_(text), coords_(std::move(coords)) {
    advance();
  }

  ScalarExpr parse() {
    ScalarExpr e = expr();
    expect(Token::End, "end of expression");
    return e;
  }

private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind, const char *what) {
    if (tok_.kind != kind)
      throw ParseError(std::string("expected ") + what, tok_.pos);
  }

  ScalarExpr expr() {
    bool negate = false;
    if (tok_.kind == Token::Minus) {
      negate = true;
      advance();
    }
    ScalarExpr e = term();
    if (negate)
      e = -e;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      ScalarExpr t = term();
      if (minus)
        e -= t;
      else
        e += t;
    }
    return e;
  }

  ScalarExpr term() {
    ScalarExpr e = factor();
    while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
      bool divide = tok_.kind == Token::Slash;
      std::size_t at = tok_.pos;
      advance();
      ScalarExpr f = factor();
      if (divide) {
        if (f.is_zero())
          throw ParseError("division by zero", at);
        if (!f.is_monomial())
          throw ParseError("division by a non-monomial expression", at);
        e = e.divide_by_monomial(f);
      } else {
        e = e * f;
      }
    }
    return e;
  }

  ScalarExpr factor() {
    ScalarExpr e = atom();
    while (tok_.kind == Token::Caret) {
      std::size_t at = tok_.pos;
      advance();
      long k = signed_int();
      try {
        e = e.pow_int(k);
      } catch (const DomainError &err) {
        throw ParseError(err.what(), at);
      }
    }
    return e;
  }

  long signed_int() {
    bool neg = false;
    if (tok_.kind == Token::Minus || tok_.kind == Token::Plus) {
      neg = tok_.kind == Token::Minus;
      advance();
    }
    expect(Token::Int, "integer exponent");
    long v = 0;
    try {
      v = std::stol(tok_.text);
    } catch (const std::exception &) {
      throw ParseError("exponent out of range", tok_.pos);
    }
    advance();
    return neg ? -v : v;
  }

  ScalarExpr atom() {
    switch (tok_.kind) {
    case Token::Int: {
      Rational v = parse_rational(tok_.text);
      advance();
      return ScalarExpr::constant(coords_, v);
    }
    case Token::Ident: {
      auto idx = coords_->index(tok_.text);
      if (!idx)
        throw ParseError("unknown coordinate '" + tok_.text + "'", tok_.pos);
      advance();
      return ScalarExpr::coordinate(coords_, *idx);
    }
    case Token::LParen: {
      advance();
      ScalarExpr e = expr();
      expect(Token::RParen, "')'");
      advance();
      return e;
    }
    default:
      throw ParseError("expected a rational, coordinate, or '('", tok_.pos);
    }
  }

  Lexer lexer_;
  CoordSystemPtr coords_;
  Token tok_;
};

} // namespace

ScalarExpr parse_expr(std::string_view text, const CoordSystemPtr &coords) {
  return Parser(text, coords).parse();
}

} // namespace kappamu
