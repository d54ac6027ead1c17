#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kappamu {

using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. `pos` is a byte offset into the parsed string.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string &msg, std::size_t pos_)
      : Error(msg), pos(pos_) {}
};

// Operation outside the Laurent ring (non-monomial divisor, negative power
// of a sum, degenerate plane, ...).
struct DomainError : Error {
  using Error::Error;
};

// Exponent arithmetic left the 32-bit range. Always a hard error.
struct OverflowError : Error {
  using Error::Error;
};

// Evaluation at an inadmissible point (zero base with negative exponent,
// missing coordinate value).
struct EvalError : Error {
  using Error::Error;
};

std::string rational_to_string(const Rational &q);
Rational parse_rational(std::string_view text);

// Ordered list of coordinate names, fixed for the lifetime of a manifold.
// Every ScalarExpr references one; expressions over different systems never
// mix.
class CoordSystem {
public:
  explicit CoordSystem(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string &name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string> &names() const noexcept { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

private:
  std::vector<std::string> names_;
};

using CoordSystemPtr = std::shared_ptr<const CoordSystem>;

// One signed exponent per coordinate.
using ExpVec = std::vector<std::int32_t>;

// One rational value per coordinate.
using RationalPoint = std::vector<Rational>;

// Exact Laurent polynomial over the rationals: a finite map from exponent
// vectors to nonzero coefficients. The map is the canonical form, so
// structural equality is semantic equality and zero is the empty map.
class ScalarExpr {
public:
  ScalarExpr() = default;
  explicit ScalarExpr(CoordSystemPtr coords) : coords_(std::move(coords)) {}

  static ScalarExpr constant(CoordSystemPtr coords, const Rational &value);
  static ScalarExpr coordinate(CoordSystemPtr coords, std::size_t i);
  static ScalarExpr monomial(CoordSystemPtr coords, ExpVec exps,
                             const Rational &coeff);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;
  // The value when the expression is a rational constant (zero included),
  // std::nullopt otherwise.
  std::optional<Rational> constant_value() const;

  ScalarExpr operator-() const;
  ScalarExpr &operator+=(const ScalarExpr &o);
  ScalarExpr &operator-=(const ScalarExpr &o);
  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr &b) {
    a += b;
    return a;
  }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr &b) {
    a -= b;
    return a;
  }
  friend ScalarExpr operator*(const ScalarExpr &a, const ScalarExpr &b);
  ScalarExpr scaled(const Rational &c) const;

  // k < 0 requires a single-term expression so the result stays Laurent.
  ScalarExpr pow_int(long k) const;
  // Exact division by a one-term expression.
  ScalarExpr divide_by_monomial(const ScalarExpr &divisor) const;
  // Exact quotient when one exists, std::nullopt otherwise.
  static std::optional<ScalarExpr> try_divide_exact(const ScalarExpr &num,
                                                    const ScalarExpr &den);

  ScalarExpr partial_diff(std::size_t coord) const;
  Rational eval_at(const RationalPoint &p) const;

  bool operator==(const ScalarExpr &o) const { return terms_ == o.terms_; }
  bool operator!=(const ScalarExpr &o) const { return !(*this == o); }

  std::string to_string() const;

  const std::map<ExpVec, Rational> &terms() const noexcept { return terms_; }
  const CoordSystemPtr &coords() const noexcept { return coords_; }

  // Accumulate one term, keeping the map canonical.
  void add_term(const ExpVec &exps, const Rational &coeff);

private:
  void require_coords() const;

  CoordSystemPtr coords_;
  std::map<ExpVec, Rational> terms_;
};

// Parses the expression grammar:
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor ('*' factor | '/' factor)*   (divisor must be monomial)
//   factor   := atom ('^' signed_int)*
//   atom     := rational | coordinate | '(' expr ')'
//   rational := int ('/' posint)?
// Whitespace is insignificant.
ScalarExpr parse_expr(std::string_view text, const CoordSystemPtr &coords);

// p raised to an integer power; k < 0 inverts (EvalError on zero base).
Rational rational_pow(const Rational &base, long k);

} // namespace kappamu
