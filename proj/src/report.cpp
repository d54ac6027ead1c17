#include "kappamu/report.hpp"

namespace kappamu {

const char *status_name(Status s) {
  switch (s) {
  case Status::Pass:
    return "PASS";
  case Status::Fail:
    return "FAIL";
  case Status::InfoPass:
    return "INFO-PASS";
  case Status::InfoFail:
    return "INFO-FAIL";
  case Status::Skipped:
    return "SKIPPED";
  }
  return "?";
}

// Notation in statements: eps = g(xi,xi) = +-1; h = (1/2) Lie_xi phi;
// l X = R(X,xi)xi; Q = Ricci operator; Riem(X,Y,Z,W) = g(R(Z,W)Y,X);
// X+ / X- denote vectors in the eigendistributions D(lambda) / D(-lambda)
// of h, with lambda = sqrt(1 - eps kappa).
const std::vector<CatalogEntry> &identity_catalog() {
  static const std::vector<CatalogEntry> entries = {
      // Structure axioms and their immediate consequences.
      {"001a", "eta(xi) = 1", Applicability::Structural},
      {"001b", "phi^2 = -id + eta (.) xi", Applicability::Structural},
      {"002", "g(phi X, phi Y) = g(X,Y) - eps eta(X) eta(Y)",
       Applicability::Structural},
      {"phi-xi", "phi xi = 0", Applicability::Structural},
      {"eta-phi", "eta o phi = 0", Applicability::Structural},
      {"phi-skew", "g(phi X, Y) = -g(X, phi Y)", Applicability::Structural},
      {"xi-norm", "g(xi, xi) = eps", Applicability::Structural},

      // Connection and curvature invariants.
      {"torsion", "nabla_X Y - nabla_Y X = [X,Y]", Applicability::Structural},
      {"metric-compat",
       "X g(Y,Z) = g(nabla_X Y, Z) + g(Y, nabla_X Z)",
       Applicability::Structural},
      {"curv-sym",
       "Riem(X,Y,Z,W) is skew in (X,Y), skew in (Z,W), and symmetric under "
       "pair interchange",
       Applicability::Structural},
      {"bianchi", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0",
       Applicability::Structural},

      // Contact structure.
      {"contact", "d eta = Phi with Phi(X,Y) = g(X, phi Y)",
       Applicability::Contact},
      {"051", "h and l are self-adjoint; tr h = 0 and tr(h phi) = 0",
       Applicability::Contact},
      {"055", "eta o h = 0 and l xi = 0", Applicability::Contact},
      {"013", "h phi = -phi h", Applicability::Contact},
      {"052", "h xi = 0", Applicability::Contact},
      {"033", "nabla_X xi = -eps phi X - phi h X", Applicability::Contact},
      {"031",
       "(nabla_X phi)Y = eps g(eps X + hX, Y) xi - eta(Y)(eps X + hX)",
       Applicability::Contact},
      {"072", "nabla_xi phi = 0", Applicability::Contact},
      {"073", "nabla_xi h = phi - phi l - phi h^2", Applicability::Contact},
      {"027", "phi l phi - l = 2(phi^2 + h^2)", Applicability::Contact},
      {"035", "Ric(xi,xi) = 2n - tr h^2", Applicability::Contact},
      {"032",
       "Riem(xi,X,Y,Z) = eps (nabla_X Phi)(Y,Z) + g((nabla_Y phi h)Z, X) - "
       "g((nabla_Z phi h)Y, X)",
       Applicability::Contact},
      {"sasaki", "R(X,Y)xi = eta(Y)X - eta(X)Y (Sasakian characterization)",
       Applicability::Contact},

      // Nullity condition with kappa, mu functions.
      {"62",
       "R(X,Y)xi = eps kappa (eta(Y)X - eta(X)Y) + eps mu (eta(Y) hX - "
       "eta(X) hY)",
       Applicability::Nullity},
      {"053", "l phi - phi l = 2 eps mu h phi", Applicability::Nullity},
      {"030",
       "h^2 = (eps kappa - 1) phi^2; eps kappa <= 1; kappa = eps iff "
       "Sasakian",
       Applicability::Nullity},
      {"023",
       "R(xi,X)Y = kappa (g(X,Y) xi - eps eta(Y) X) + mu (g(hX,Y) xi - eps "
       "eta(Y) hX)",
       Applicability::Nullity},
      {"054", "Q xi = 2n kappa xi", Applicability::Nullity},
      {"070", "xi(kappa) = 0", Applicability::Nullity},
      {"eigenstructure",
       "h is frame-diagonal with spectrum {0, lambda, -lambda}, lambda^2 = "
       "1 - eps kappa, and phi swaps D(lambda) with D(-lambda)",
       Applicability::Nullity},
      {"060",
       "K(X,xi) = kappa + lambda mu for X in D(lambda), kappa - lambda mu "
       "for X in D(-lambda)",
       Applicability::Nullity},
      {"089",
       "kappa' = (kappa + eps a^2 - eps)/a^2 and mu' = (mu + 2a - 2)/a "
       "under the D-homothetic deformation by a",
       Applicability::Nullity},

      // Proved with constant kappa, mu; reported informationally when the
      // coefficients are functions.
      {"48",
       "(nabla_X h)Y - (nabla_Y h)X = (1 - eps kappa){2 eps g(X,phi Y) xi + "
       "eta(X) phi Y - eta(Y) phi X} + eps(1 - mu){eta(X) phi hY - eta(Y) "
       "phi hX}",
       Applicability::NullityConstant},
      {"041",
       "(nabla_X h)Y = {(eps - kappa) g(X,phi Y) + g(X, h phi Y)} xi + "
       "eta(Y) h(eps phi X + phi hX) - eps mu eta(X) phi hY",
       Applicability::NullityConstant},
      {"045",
       "R(X,Y)hZ - hR(X,Y)Z = {kappa[eta(X)g(hY,Z) - eta(Y)g(hX,Z)] + "
       "mu(eps kappa - 1)[eta(Y)g(X,Z) - eta(X)g(Y,Z)]}xi + kappa{g(Y,phi "
       "Z) phi hX - g(X,phi Z) phi hY + g(Z,phi hY) phi X - g(Z,phi hX) phi "
       "Y + eps eta(Z)[eta(X)hY - eta(Y)hX]} - mu{eta(Y)[(eps - kappa) "
       "eta(Z) X + mu eta(X) hZ] - eta(X)[(eps - kappa) eta(Z) Y + mu "
       "eta(Y) hZ] + 2 eps g(X,phi Y) phi hZ}",
       Applicability::NullityConstant},
      {"006",
       "R(X,Y)phi Z = phi R(X,Y)Z + {(1 - eps kappa)[eta(X)g(phi Y,Z) - "
       "eta(Y)g(phi X,Z)] + eps(1 - mu)[eta(X)g(phi hY,Z) - eta(Y)g(phi "
       "hX,Z)]}xi - g(Y + eps hY, Z)(eps phi X + phi hX) + g(X + eps hX, "
       "Z)(eps phi Y + phi hY) - g(eps phi Y + phi hY, Z)(X + eps hX) + "
       "g(eps phi X + phi hX, Z)(Y + eps hY) - eta(Z){(1 - eps "
       "kappa)[eta(X)phi Y - eta(Y)phi X] + eps(1 - mu)[eta(X)phi hY - "
       "eta(Y)phi hX]}",
       Applicability::NullityConstant},
      {"47",
       "nabla_{X+}Y+ lies in D(lambda), nabla_{X-}Y- lies in D(-lambda); "
       "nabla_{X+}Y- has no D(lambda) part and nabla_{X-}Y+ has no "
       "D(-lambda) part",
       Applicability::NullityConstant},
      {"41",
       "R(X+,Y+)Z- = (kappa - eps mu)[g(phi Y+, Z-) phi X+ - g(phi X+, Z-) "
       "phi Y+]",
       Applicability::NullityConstant},
      {"42",
       "R(X-,Y-)Z+ = (kappa - eps mu)[g(phi Y-, Z+) phi X- - g(phi X-, Z+) "
       "phi Y-]",
       Applicability::NullityConstant},
      {"43",
       "R(X-,Y+)Z- = -kappa g(phi Y+, Z-) phi X- - eps mu g(phi Y+, X-) phi "
       "Z-",
       Applicability::NullityConstant},
      {"44",
       "R(X-,Y+)Z+ = kappa g(phi X-, Z+) phi Y+ + eps mu g(phi X-, Y+) phi "
       "Z+",
       Applicability::NullityConstant},
      {"45",
       "R(X+,Y+)Z+ = [2(eps + lambda) - eps mu][g(Y+,Z+)X+ - g(X+,Z+)Y+]",
       Applicability::NullityConstant},
      {"46",
       "R(X-,Y-)Z- = [2(eps - lambda) - eps mu][g(Y-,Z-)X- - g(X-,Z-)Y-]",
       Applicability::NullityConstant},
      {"025",
       "K(X,Y) = 2(eps + lambda) - eps mu for X,Y in D(lambda) (n > 1); "
       "-(kappa + eps mu) g(X,phi Y)^2 / (g(X,X)g(Y,Y)) across "
       "eigenspaces; 2(eps - lambda) - eps mu for X,Y in D(-lambda) (n > 1)",
       Applicability::NullityConstant},
      {"024",
       "QX = eps[2(n-1) - n mu]X + (2(n-1) + mu)hX + [2(1-n)eps + 2n kappa "
       "+ n eps mu] eta(X) xi",
       Applicability::NullityConstant},
      {"022",
       "R(X,Y)Z = ((c+3eps)/4){g(Y,Z)X - g(X,Z)Y} + ((c-eps)/4){2g(X,phi "
       "Y)phi Z + g(X,phi Z)phi Y - g(Y,phi Z)phi X} + ((c+3eps)/4 - "
       "kappa){eps eta(X)eta(Z)Y - eps eta(Y)eta(Z)X + eta(Y)g(X,Z)xi - "
       "eta(X)g(Y,Z)xi} + {-g(X,Z)hY - g(hX,Z)Y + g(Y,Z)hX + g(hY,Z)X} + "
       "(eps/2){-g(hX,Z)hY + g(hY,Z)hX + g(phi hX,Z)phi hY - g(phi "
       "hY,Z)phi hX} + (1 - mu){eps eta(X)eta(Z)hY + eta(Y)g(hX,Z)xi - eps "
       "eta(Y)eta(Z)hX - eta(X)g(hY,Z)xi}, with c the constant "
       "phi-sectional curvature",
       Applicability::NullityConstant},
      {"061", "(n+1)c = (n-1)eps - 2n eps mu - 2 kappa",
       Applicability::NullityConstant},
      {"062",
       "c = -(kappa + eps mu); if kappa != eps also mu = eps kappa + 1 and "
       "c = -2 kappa - eps",
       Applicability::NullityConstant},

      // Fixture expectations and cross-path checks.
      {"expected-kappa", "detected kappa equals the fixture's expected value",
       Applicability::Structural},
      {"expected-mu", "detected mu equals the fixture's expected value",
       Applicability::Structural},
      {"numeric-agreement",
       "pointwise rational evaluation agrees with the symbolic results at "
       "every sampled point",
       Applicability::Structural},
  };
  return entries;
}

const CatalogEntry *catalog_lookup(const std::string &id) {
  for (const auto &e : identity_catalog())
    if (id == e.id)
      return &e;
  return nullptr;
}

Verdict make_verdict(const std::string &id, const std::string &statement,
                     const std::string &residual, bool asserted,
                     const std::string &note) {
  Verdict v;
  v.id = id;
  v.statement = statement;
  v.residual = residual;
  v.note = note;
  const bool holds = residual.empty();
  if (asserted)
    v.status = holds ? Status::Pass : Status::Fail;
  else
    v.status = holds ? Status::InfoPass : Status::InfoFail;
  return v;
}

Verdict make_catalog_verdict(const std::string &id, const std::string &residual,
                             bool asserted, const std::string &note) {
  const CatalogEntry *e = catalog_lookup(id);
  return make_verdict(id, e ? e->statement : id, residual, asserted, note);
}

} // namespace kappamu
