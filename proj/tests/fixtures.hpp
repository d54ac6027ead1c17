#pragma once

#include "kappamu/contact.hpp"
#include "kappamu/geometry.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

// Hand-built structures shared by the unit tests. Building them through the
// core API (rather than the .cpm loader) keeps these tests independent of the
// file format.
namespace testfix {

using namespace kappamu;

struct Model {
  CoordSystemPtr cs;
  Frame frame;
  AlmostContactStructure acs;
};

// Structure on {z != 0} in R^3 whose nullity coefficients come out
// non-constant: xi = e1 = d/dx, e2 = z^-2 d/dy,
// e3 = 2yz^2 d/dx + 2xz^-6 d/dy + z^-6 d/dz, phi e2 = e3, phi e3 = -e2,
// metric diag(eps, 1, 1).
inline Model curved_model(int eps) {
  auto cs = std::make_shared<const CoordSystem>(
      std::vector<std::string>{"x", "y", "z"});
  auto e = [&](const char *s) { return parse_expr(s, cs); };
  std::vector<VectorField> vecs;
  vecs.push_back(VectorField{{e("1"), e("0"), e("0")}});
  vecs.push_back(VectorField{{e("0"), e("z^-2"), e("0")}});
  vecs.push_back(VectorField{{e("2*y*z^2"), e("2*x*z^-6"), e("z^-6")}});
  Frame f(cs, std::move(vecs), {Rational(eps), Rational(1), Rational(1)});
  OperatorField phi(cs, 3);
  phi.m(2, 1) = e("1");
  phi.m(1, 2) = e("-1");
  return Model{cs, std::move(f), AlmostContactStructure(std::move(phi), 0, eps)};
}

// Sasakian structure on the Heisenberg group: e1 = 2 d/dy,
// e2 = 2 d/dx + 2y d/dz, xi = e3 = 2 d/dz, phi e1 = e2, phi e2 = -e1,
// Euclidean signature.
inline Model heisenberg_model() {
  auto cs = std::make_shared<const CoordSystem>(
      std::vector<std::string>{"x", "y", "z"});
  auto e = [&](const char *s) { return parse_expr(s, cs); };
  std::vector<VectorField> vecs;
  vecs.push_back(VectorField{{e("0"), e("2"), e("0")}});
  vecs.push_back(VectorField{{e("2"), e("0"), e("2*y")}});
  vecs.push_back(VectorField{{e("0"), e("0"), e("2")}});
  Frame f(cs, std::move(vecs), {Rational(1), Rational(1), Rational(1)});
  OperatorField phi(cs, 3);
  phi.m(1, 0) = e("1");
  phi.m(0, 1) = e("-1");
  return Model{cs, std::move(f), AlmostContactStructure(std::move(phi), 2, 1)};
}

} // namespace testfix
