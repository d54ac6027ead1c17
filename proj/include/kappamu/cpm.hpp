#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappamu/contact.hpp"
#include "kappamu/geometry.hpp"
#include "kappamu/scalar.hpp"

namespace kappamu {

// Parsed .cpm input. The format is line based; '#' starts a comment and
// blank lines are ignored. Keys:
//
//   name: r3-example                    optional display name
//   coords: x y z                       coordinate names, first
//   epsilon: +1                         metric sign on the Reeb direction
//   signature: +1 +1 +1                 g(e_i,e_i), entries +-1
//   metric: 2 2 1                       alternative: arbitrary nonzero entries
//   frame e1: 1 0 0                     coordinate components, one line per
//   frame e2: 0 z^-2 0                  frame vector, in order e1, e2, ...
//   phi: 0 0 0                          rows of the frame matrix of phi,
//   phi: 0 0 -1                         phi e_j = sum_i M[i][j] e_i
//   phi: 0 1 0
//   xi: e1                              which frame vector is the Reeb field
//   expect_kappa: 1 - z^-8              optional expected coefficients
//   expect_mu: 2 + 2*z^-4
//   sample: x=1 y=2 z=-1/3              optional evaluation points
//
// Components on frame and phi lines are whitespace separated, so individual
// expressions there must not contain spaces.
struct ManifoldSpec {
  std::string name = "spec";
  CoordSystemPtr coords;
  int epsilon = 1;
  std::vector<Rational> metric;
  std::vector<VectorField> frame_vectors;
  std::vector<std::vector<ScalarExpr>> phi_rows;
  std::size_t xi = 0;
  std::optional<ScalarExpr> expect_kappa;
  std::optional<ScalarExpr> expect_mu;
  std::vector<RationalPoint> samples;

  std::size_t dim() const { return frame_vectors.size(); }

  Frame make_frame() const;
  AlmostContactStructure make_structure() const;
};

// ParseError::pos carries the 1-based line number (0 for whole-file errors).
// `name` seeds ManifoldSpec::name when the text has no name line.
ManifoldSpec parse_spec(const std::string &text,
                        const std::string &name = "spec");

// Reads and parses a file; the default spec name is the file stem.
ManifoldSpec load_spec(const std::string &path);

// Inverse of parse_spec, used to write deformed structures back out.
std::string serialize_spec(const ManifoldSpec &spec);

} // namespace kappamu
