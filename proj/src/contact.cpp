#include "kappamu/contact.hpp"

#include <string>

namespace kappamu {

namespace {

std::string frame_name(std::size_t i) { return "e" + std::to_string(i + 1); }

std::string vec_witness(const std::string &lhs, const FrameVec &v) {
  return lhs + " = " + fv_to_string(v);
}

std::string scalar_witness(const std::string &lhs, const ScalarExpr &v) {
  return lhs + " = " + v.to_string();
}

// First nonzero column of a residual operator, rendered as a witness.
std::string operator_witness(const std::string &label, const OperatorField &r) {
  for (std::size_t j = 0; j < r.dim(); ++j) {
    FrameVec col = r.column(j);
    if (!fv_is_zero(col))
      return vec_witness("(" + label + ") " + frame_name(j), col);
  }
  return {};
}

} // namespace

Rational eta_on_frame(const AlmostContactStructure &s, const Frame &f,
                      std::size_t j) {
  if (j != s.xi)
    return Rational(0);
  return Rational(s.epsilon) * f.metric(j);
}

ScalarExpr eta_of(const AlmostContactStructure &s, const Frame &f,
                  const FrameVec &x) {
  return x.at(s.xi).scaled(Rational(s.epsilon) * f.metric(s.xi));
}

FrameVec xi_vec(const AlmostContactStructure &s, const Frame &f) {
  return fv_basis(f.coords(), f.dim(), s.xi);
}

TwoForm fundamental_two_form(const AlmostContactStructure &s, const Frame &f) {
  const std::size_t d = f.dim();
  TwoForm phi2(f.coords(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      phi2.m(i, j) = s.phi.m(i, j).scaled(f.metric(i));
  return phi2;
}

TwoForm exterior_derivative_eta(const AlmostContactStructure &s,
                                const Frame &f, const StructureConstants &sc) {
  const std::size_t d = f.dim();
  TwoForm deta(f.coords(), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      ScalarExpr ei_eta_j =
          f.dirderiv(i, ScalarExpr::constant(f.coords(), eta_on_frame(s, f, j)));
      ScalarExpr ej_eta_i =
          f.dirderiv(j, ScalarExpr::constant(f.coords(), eta_on_frame(s, f, i)));
      FrameVec bracket = fv_zero(f.coords(), d);
      for (std::size_t k = 0; k < d; ++k)
        bracket[k] = sc.c(k, i, j);
      ScalarExpr val =
          (ei_eta_j - ej_eta_i - eta_of(s, f, bracket)).scaled(Rational(1, 2));
      deta.m(i, j) = val;
      deta.m(j, i) = -val;
    }
  }
  return deta;
}

OperatorField compute_h(const AlmostContactStructure &s, const Frame &f) {
  const std::size_t d = f.dim();
  OperatorField h(f.coords(), d);
  const VectorField &xi = f.vector(s.xi);
  for (std::size_t j = 0; j < d; ++j) {
    VectorField phi_ej = zero_vector(f.coords());
    for (std::size_t i = 0; i < d; ++i)
      phi_ej = phi_ej + f.vector(i).scaled(s.phi.m(i, j));
    FrameVec lie_phi = f.decompose(lie_bracket(xi, phi_ej));
    FrameVec lie_ej = f.decompose(lie_bracket(xi, f.vector(j)));
    FrameVec col =
        fv_scale(fv_sub(lie_phi, s.phi.apply(lie_ej)), Rational(1, 2));
    for (std::size_t i = 0; i < d; ++i)
      h.m(i, j) = col[i];
  }
  return h;
}

OperatorField compute_ell(const AlmostContactStructure &s, const Frame &f,
                          const CurvatureTable &curv) {
  const std::size_t d = f.dim();
  OperatorField ell(f.coords(), d);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t j = 0; j < d; ++j)
      ell.m(l, j) = curv.r(l, s.xi, j, s.xi);
  return ell;
}

std::vector<Verdict> check_almost_contact_axioms(
    const AlmostContactStructure &s, const Frame &f) {
  const std::size_t d = f.dim();
  const auto &coords = f.coords();
  std::vector<Verdict> out;

  {
    ScalarExpr res = ScalarExpr::constant(coords, eta_on_frame(s, f, s.xi) - 1);
    std::string w =
        res.is_zero() ? std::string{} : scalar_witness("eta(xi) - 1", res);
    out.push_back(make_catalog_verdict("001a", w, true));
  }

  {
    // phi^2 + id - eta (x) xi
    OperatorField res = s.phi.compose(s.phi) + OperatorField::identity(coords, d);
    for (std::size_t j = 0; j < d; ++j)
      res.m(s.xi, j) -= ScalarExpr::constant(coords, eta_on_frame(s, f, j));
    out.push_back(make_catalog_verdict(
        "001b", operator_witness("phi^2 + id - eta(.)xi", res), true));
  }

  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        Rational gij = (i == j) ? f.metric(i) : Rational(0);
        Rational rhs = gij - Rational(s.epsilon) * eta_on_frame(s, f, i) *
                                 eta_on_frame(s, f, j);
        ScalarExpr res = f.inner(s.phi.column(i), s.phi.column(j)) -
                         ScalarExpr::constant(coords, rhs);
        if (!res.is_zero())
          w = scalar_witness("g(phi " + frame_name(i) + ", phi " +
                                 frame_name(j) + ") - g(" + frame_name(i) +
                                 "," + frame_name(j) + ") + eps eta eta",
                             res);
      }
    }
    out.push_back(make_catalog_verdict("002", w, true));
  }

  {
    FrameVec col = s.phi.column(s.xi);
    std::string w = fv_is_zero(col) ? std::string{} : vec_witness("phi xi", col);
    out.push_back(make_catalog_verdict("phi-xi", w, true));
  }

  {
    std::string w;
    for (std::size_t j = 0; j < d && w.empty(); ++j) {
      ScalarExpr res = eta_of(s, f, s.phi.column(j));
      if (!res.is_zero())
        w = scalar_witness("eta(phi " + frame_name(j) + ")", res);
    }
    out.push_back(make_catalog_verdict("eta-phi", w, true));
  }

  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      for (std::size_t j = i; j < d && w.empty(); ++j) {
        ScalarExpr res = s.phi.m(i, j).scaled(f.metric(i)) +
                         s.phi.m(j, i).scaled(f.metric(j));
        if (!res.is_zero())
          w = scalar_witness("g(phi " + frame_name(j) + "," + frame_name(i) +
                                 ") + g(" + frame_name(j) + ", phi " +
                                 frame_name(i) + ")",
                             res);
      }
    }
    out.push_back(make_catalog_verdict("phi-skew", w, true));
  }

  {
    ScalarExpr res = ScalarExpr::constant(
        coords, f.metric(s.xi) - Rational(s.epsilon));
    std::string w =
        res.is_zero() ? std::string{} : scalar_witness("g(xi,xi) - eps", res);
    out.push_back(make_catalog_verdict("xi-norm", w, true));
  }

  return out;
}

Verdict check_contact_condition(const AlmostContactStructure &s,
                                const Frame &f, const StructureConstants &sc) {
  TwoForm deta = exterior_derivative_eta(s, f, sc);
  TwoForm phi2 = fundamental_two_form(s, f);
  const std::size_t d = f.dim();
  std::string w;
  for (std::size_t i = 0; i < d && w.empty(); ++i) {
    for (std::size_t j = i + 1; j < d && w.empty(); ++j) {
      ScalarExpr res = deta.m(i, j) - phi2.m(i, j);
      if (!res.is_zero())
        w = scalar_witness("(d eta - Phi)(" + frame_name(i) + "," +
                               frame_name(j) + ")",
                           res);
    }
  }
  return make_catalog_verdict("contact", w, true);
}

std::vector<Verdict> check_standard_identities(
    const AlmostContactStructure &s, const Frame &f,
    const ConnectionTable &conn, const CurvatureTable &curv,
    const OperatorField &h, const OperatorField &ell) {
  const std::size_t d = f.dim();
  const auto &coords = f.coords();
  const Rational eps(s.epsilon);
  std::vector<Verdict> out;

  {
    std::string w;
    if (h.adjoint(f) != h)
      w = operator_witness("h* - h", h.adjoint(f) - h);
    if (w.empty() && ell.adjoint(f) != ell)
      w = operator_witness("l* - l", ell.adjoint(f) - ell);
    if (w.empty() && !h.trace().is_zero())
      w = scalar_witness("tr h", h.trace());
    if (w.empty()) {
      ScalarExpr thp = h.compose(s.phi).trace();
      if (!thp.is_zero())
        w = scalar_witness("tr(h phi)", thp);
    }
    out.push_back(make_catalog_verdict("051", w, true));
  }

  {
    std::string w;
    for (std::size_t j = 0; j < d && w.empty(); ++j) {
      ScalarExpr res = eta_of(s, f, h.column(j));
      if (!res.is_zero())
        w = scalar_witness("eta(h " + frame_name(j) + ")", res);
    }
    if (w.empty()) {
      FrameVec lxi = ell.column(s.xi);
      if (!fv_is_zero(lxi))
        w = vec_witness("l xi", lxi);
    }
    out.push_back(make_catalog_verdict("055", w, true));
  }

  out.push_back(make_catalog_verdict(
      "013",
      operator_witness("h phi + phi h",
                       h.compose(s.phi) + s.phi.compose(h)),
      true));

  {
    FrameVec col = h.column(s.xi);
    std::string w = fv_is_zero(col) ? std::string{} : vec_witness("h xi", col);
    out.push_back(make_catalog_verdict("052", w, true));
  }

  {
    FrameVec xifv = xi_vec(s, f);
    OperatorField phih = s.phi.compose(h);
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      FrameVec lhs = conn.covariant_vec(f, i, xifv);
      FrameVec rhs = fv_add(fv_scale(s.phi.column(i), eps), phih.column(i));
      FrameVec res = fv_add(lhs, rhs);
      if (!fv_is_zero(res))
        w = vec_witness("nabla_" + frame_name(i) +
                            " xi + eps phi + phi h applied",
                        res);
    }
    out.push_back(make_catalog_verdict("033", w, true));
  }

  {
    FrameVec xifv = xi_vec(s, f);
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      OperatorField dphi = covariant_derivative_operator(f, conn, s.phi, i);
      FrameVec a = fv_add(fv_scale(fv_basis(coords, d, i), eps), h.column(i));
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        ScalarExpr coeff =
            f.inner(a, fv_basis(coords, d, j)).scaled(eps);
        FrameVec rhs = fv_sub(fv_scale(xifv, coeff),
                              fv_scale(a, eta_on_frame(s, f, j)));
        FrameVec res = fv_sub(dphi.column(j), rhs);
        if (!fv_is_zero(res))
          w = vec_witness("((nabla_" + frame_name(i) + " phi) - rhs) " +
                              frame_name(j),
                          res);
      }
    }
    out.push_back(make_catalog_verdict("031", w, true));
  }

  out.push_back(make_catalog_verdict(
      "072",
      operator_witness("nabla_xi phi",
                       covariant_derivative_operator(f, conn, s.phi, s.xi)),
      true));

  {
    OperatorField lhs = covariant_derivative_operator(f, conn, h, s.xi);
    OperatorField rhs =
        s.phi - s.phi.compose(ell) - s.phi.compose(h.compose(h));
    out.push_back(make_catalog_verdict(
        "073", operator_witness("nabla_xi h - (phi - phi l - phi h^2)",
                                lhs - rhs),
        true));
  }

  {
    OperatorField lhs = s.phi.compose(ell).compose(s.phi) - ell;
    OperatorField rhs =
        (s.phi.compose(s.phi) + h.compose(h)).scaled(Rational(2));
    out.push_back(make_catalog_verdict(
        "027",
        operator_witness("phi l phi - l - 2(phi^2 + h^2)", lhs - rhs), true));
  }

  {
    ScalarExpr res = ricci(f, curv, s.xi, s.xi) -
                     ScalarExpr::constant(coords, Rational(2 * (long)f.n())) +
                     h.compose(h).trace();
    std::string w = res.is_zero()
                        ? std::string{}
                        : scalar_witness("Ric(xi,xi) - 2n + tr h^2", res);
    out.push_back(make_catalog_verdict("035", w, true));
  }

  {
    OperatorField phih = s.phi.compose(h);
    std::vector<TwoForm> dPhi;
    std::vector<OperatorField> dPhiH;
    TwoForm phi2 = fundamental_two_form(s, f);
    for (std::size_t i = 0; i < d; ++i) {
      dPhi.push_back(covariant_derivative_two_form(f, conn, phi2, i));
      dPhiH.push_back(covariant_derivative_operator(f, conn, phih, i));
    }
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i) {
      for (std::size_t j = 0; j < d && w.empty(); ++j) {
        for (std::size_t k = 0; k < d && w.empty(); ++k) {
          ScalarExpr lhs = curv.lowered(f, s.xi, i, j, k);
          ScalarExpr rhs =
              dPhi[i].m(j, k).scaled(eps) +
              f.inner(dPhiH[j].column(k), fv_basis(coords, d, i)) -
              f.inner(dPhiH[k].column(j), fv_basis(coords, d, i));
          ScalarExpr res = lhs - rhs;
          if (!res.is_zero())
            w = scalar_witness("residual at (X,Y,Z) = (" + frame_name(i) +
                                   "," + frame_name(j) + "," + frame_name(k) +
                                   ")",
                               res);
        }
      }
    }
    out.push_back(make_catalog_verdict("032", w, true));
  }

  return out;
}

SasakianCheck is_sasakian(const AlmostContactStructure &s, const Frame &f,
                          const CurvatureTable &curv) {
  const std::size_t d = f.dim();
  const auto &coords = f.coords();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      FrameVec lhs = fv_zero(coords, d);
      for (std::size_t l = 0; l < d; ++l)
        lhs[l] = curv.r(l, s.xi, i, j);
      FrameVec rhs =
          fv_sub(fv_scale(fv_basis(coords, d, i), eta_on_frame(s, f, j)),
                 fv_scale(fv_basis(coords, d, j), eta_on_frame(s, f, i)));
      FrameVec res = fv_sub(lhs, rhs);
      if (!fv_is_zero(res))
        return {false, vec_witness("R(" + frame_name(i) + "," + frame_name(j) +
                                       ")xi - (eta(Y)X - eta(X)Y)",
                                   res)};
    }
  }
  return {true, {}};
}

} // namespace kappamu
