#pragma once

#include <vector>

#include "kappamu/geometry.hpp"
#include "kappamu/report.hpp"

namespace kappamu {

// (phi, xi, eta, g, epsilon) with xi a frame vector and eta derived as
// eta(X) = epsilon * g(xi, X).
struct AlmostContactStructure {
  OperatorField phi;
  std::size_t xi;
  int epsilon;

  AlmostContactStructure(OperatorField phi_, std::size_t xi_, int epsilon_)
      : phi(std::move(phi_)), xi(xi_), epsilon(epsilon_) {}
};

// eta evaluated on the frame vectors; constant because the metric is.
Rational eta_on_frame(const AlmostContactStructure &s, const Frame &f,
                      std::size_t j);
ScalarExpr eta_of(const AlmostContactStructure &s, const Frame &f,
                  const FrameVec &x);
FrameVec xi_vec(const AlmostContactStructure &s, const Frame &f);

// Fundamental 2-form Phi(X, Y) = g(X, phi Y) on frame pairs.
TwoForm fundamental_two_form(const AlmostContactStructure &s, const Frame &f);

// d eta with the 1/2 convention:
// d eta(X, Y) = (X(eta(Y)) - Y(eta(X)) - eta([X, Y])) / 2.
TwoForm exterior_derivative_eta(const AlmostContactStructure &s,
                                const Frame &f, const StructureConstants &sc);

// h = (1/2) Lie_xi phi, computed through coordinate Lie brackets.
OperatorField compute_h(const AlmostContactStructure &s, const Frame &f);

// ell X = R(X, xi) xi.
OperatorField compute_ell(const AlmostContactStructure &s, const Frame &f,
                          const CurvatureTable &curv);

// Structure axioms plus immediate consequences; failures carry residual
// witnesses.
std::vector<Verdict> check_almost_contact_axioms(
    const AlmostContactStructure &s, const Frame &f);

// d eta = Phi.
Verdict check_contact_condition(const AlmostContactStructure &s,
                                const Frame &f, const StructureConstants &sc);

// The identity suite every contact structure satisfies: trace identities,
// anticommutation, nabla xi, nabla phi, and the curvature-form identity on
// all frame triples.
std::vector<Verdict> check_standard_identities(
    const AlmostContactStructure &s, const Frame &f,
    const ConnectionTable &conn, const CurvatureTable &curv,
    const OperatorField &h, const OperatorField &ell);

// R(X, Y) xi = eta(Y) X - eta(X) Y on all frame pairs.
struct SasakianCheck {
  bool sasakian;
  std::string residual; // first nonzero witness when not Sasakian
};
SasakianCheck is_sasakian(const AlmostContactStructure &s, const Frame &f,
                          const CurvatureTable &curv);

} // namespace kappamu
