#pragma once

#include <optional>
#include <vector>

#include "kappamu/contact.hpp"
#include "kappamu/geometry.hpp"
#include "kappamu/report.hpp"

namespace kappamu {

// Result of matching R(X,Y)xi against
//   eps kappa (eta(Y)X - eta(X)Y) + eps mu (eta(Y)hX - eta(X)hY).
// kappa is read off the trace of l, mu from tr(l h)/tr(h^2); `detected` means
// the condition then holds with zero residual on every frame pair.
struct NullityFunctions {
  bool detected = false;
  ScalarExpr kappa;
  ScalarExpr mu;
  bool mu_indeterminate = false; // h = 0: the condition fixes no mu, 0 is used
  bool kappa_constant = false;
  bool mu_constant = false;
  std::string residual; // first nonzero witness when not detected
  std::string note;
};

NullityFunctions detect_nullity(const AlmostContactStructure &s,
                                const Frame &f, const CurvatureTable &curv,
                                const OperatorField &h,
                                const OperatorField &ell);

// Frame-diagonal eigendecomposition of h: spectrum {0, lambda, -lambda} with
// the zero on xi, D(lambda) and D(-lambda) of dimension n each, swapped by
// phi, and lambda^2 = 1 - eps kappa.
struct Eigenstructure {
  bool available = false; // h is diagonal in the frame and all checks passed
  ScalarExpr lambda;
  std::vector<std::size_t> plus;  // frame indices spanning D(lambda)
  std::vector<std::size_t> minus; // frame indices spanning D(-lambda)
  std::string witness;            // first failed validation
};

Eigenstructure extract_eigenstructure(const AlmostContactStructure &s,
                                      const Frame &f, const OperatorField &h,
                                      const NullityFunctions &nf);

// Full nullity-side analysis: detection, eigenstructure, the identity suite,
// sectional curvature values, and the constancy report.
struct NullityAnalysis {
  NullityFunctions nf;
  Eigenstructure eig;
  bool sasakian = false;
  std::vector<Verdict> verdicts;
  std::optional<ScalarExpr> xi_sec_plus;  // K(X, xi), X in D(lambda)
  std::optional<ScalarExpr> xi_sec_minus; // K(X, xi), X in D(-lambda)
  std::optional<ScalarExpr> phi_sec_c;    // phi-sectional value when constant
  std::string constancy_note;
};

// `asserted_base` gates Pass/Fail vs InfoPass/InfoFail: callers pass false
// when the structure axioms or the contact condition already failed.
NullityAnalysis analyze_nullity(const AlmostContactStructure &s,
                                const Frame &f, const StructureConstants &sc,
                                const ConnectionTable &conn,
                                const CurvatureTable &curv,
                                const OperatorField &h,
                                const OperatorField &ell, bool sasakian,
                                bool asserted_base);

// D-homothetic deformation by a > 0:
//   eta' = a eta, xi' = xi/a, phi' = phi, g' = a g + eps a(a-1) eta (x) eta.
// Returned in the rescaled frame {e_i, xi/a}, whose metric is diagonal with
// entries a d_i off xi and eps on xi.
struct DeformedStructure {
  Frame frame;
  AlmostContactStructure acs;
};

DeformedStructure d_homothetic_deform(const AlmostContactStructure &s,
                                      const Frame &f, const Rational &a);

// Predicted coefficients of the deformed structure.
ScalarExpr predict_deformed_kappa(const ScalarExpr &kappa, int epsilon,
                                  const Rational &a);
ScalarExpr predict_deformed_mu(const ScalarExpr &mu, const Rational &a);

} // namespace kappamu
