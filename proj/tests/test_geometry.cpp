#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "kappamu/geometry.hpp"

#include <cstddef>
#include <string>

using namespace kappamu;
using testfix::curved_model;
using testfix::heisenberg_model;

namespace {

ScalarExpr E(const CoordSystemPtr &cs, const std::string &s) {
  return parse_expr(s, cs);
}

} // namespace

TEST_CASE("coordinate Lie brackets on the curved frame") {
  auto m = curved_model(1);
  const auto &f = m.frame;
  auto b12 = lie_bracket(f.vector(0), f.vector(1));
  CHECK(b12.is_zero());

  auto b13 = f.decompose(lie_bracket(f.vector(0), f.vector(2)));
  CHECK(b13[0].is_zero());
  CHECK(b13[1] == E(m.cs, "2*z^-4"));
  CHECK(b13[2].is_zero());

  auto b23 = f.decompose(lie_bracket(f.vector(1), f.vector(2)));
  CHECK(b23[0] == E(m.cs, "2"));
  CHECK(b23[1] == E(m.cs, "2*z^-7"));
  CHECK(b23[2].is_zero());
}

TEST_CASE("lie_bracket is antisymmetric and satisfies Jacobi") {
  auto m = curved_model(1);
  const auto &f = m.frame;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto fwd = lie_bracket(f.vector(i), f.vector(j));
      auto rev = lie_bracket(f.vector(j), f.vector(i));
      CHECK((fwd + rev).is_zero());
    }
  const auto &x = f.vector(0);
  const auto &y = f.vector(1);
  const auto &z = f.vector(2);
  auto jac = lie_bracket(x, lie_bracket(y, z)) +
             lie_bracket(y, lie_bracket(z, x)) +
             lie_bracket(z, lie_bracket(x, y));
  CHECK(jac.is_zero());
}

TEST_CASE("structure constants match the brackets and are antisymmetric") {
  auto m = curved_model(-1);
  StructureConstants sc(m.frame);
  CHECK(sc.c(1, 0, 2) == E(m.cs, "2*z^-4"));
  CHECK(sc.c(0, 1, 2) == E(m.cs, "2"));
  CHECK(sc.c(1, 1, 2) == E(m.cs, "2*z^-7"));
  CHECK(sc.c(0, 0, 1).is_zero());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(sc.c(k, i, j) == -sc.c(k, j, i));
}

TEST_CASE("frame decomposition round-trips and inner products are diagonal") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    const auto &f = m.frame;
    CHECK(f.det() == E(m.cs, "z^-8"));
    CHECK(f.dim() == 3);
    CHECK(f.n() == 1);

    for (std::size_t i = 0; i < 3; ++i) {
      auto comps = f.decompose(f.vector(i));
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(comps[k] == (k == i ? E(m.cs, "1") : ScalarExpr(m.cs)));
    }

    auto v = f.vector(1).scaled(E(m.cs, "x")) +
             f.vector(2).scaled(E(m.cs, "3 - z^2"));
    auto comps = f.decompose(v);
    CHECK(comps[0].is_zero());
    CHECK(comps[1] == E(m.cs, "x"));
    CHECK(comps[2] == E(m.cs, "3 - z^2"));
    auto back = f.reconstruct(comps);
    CHECK((back - v).is_zero());

    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        auto ip = f.inner(fv_basis(m.cs, 3, i), fv_basis(m.cs, 3, j));
        if (i != j)
          CHECK(ip.is_zero());
        else
          CHECK(ip == ScalarExpr::constant(m.cs, f.metric(i)));
      }
  }
}

TEST_CASE("directional derivatives along frame vectors") {
  auto m = curved_model(1);
  const auto &f = m.frame;
  CHECK(f.dirderiv(2, E(m.cs, "z")) == E(m.cs, "z^-6"));
  CHECK(f.dirderiv(2, E(m.cs, "y")) == E(m.cs, "2*x*z^-6"));
  CHECK(f.dirderiv(1, E(m.cs, "y")) == E(m.cs, "z^-2"));
  CHECK(f.dirderiv(0, E(m.cs, "y + z")).is_zero());
}

TEST_CASE("connection table on the curved frame, both signatures") {
  for (int eps : {1, -1}) {
    CAPTURE(eps);
    auto m = curved_model(eps);
    StructureConstants sc(m.frame);
    auto conn = koszul_connection(m.frame, sc);
    auto one = E(m.cs, "1");
    auto lam = E(m.cs, "z^-4");
    auto ee = ScalarExpr::constant(m.cs, Rational(eps));

    CHECK(conn.gamma(0, 1, 2) == -(ee + lam));
    CHECK(conn.gamma(1, 0, 2) == -(ee + lam));
    CHECK(conn.gamma(0, 2, 1) == ee + lam);
    CHECK(conn.gamma(2, 0, 1) == ee - lam);
    CHECK(conn.gamma(1, 2, 0) == one + ee * lam);
    CHECK(conn.gamma(1, 2, 1) == E(m.cs, "2*z^-7"));
    CHECK(conn.gamma(2, 1, 0) == ee * lam - one);
    CHECK(conn.gamma(1, 1, 2) == E(m.cs, "-2*z^-7"));

    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (!conn.gamma(i, j, k).is_zero())
            ++nonzero;
    CHECK(nonzero == 8);
  }
}

TEST_CASE("connection is torsion-free and metric") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    StructureConstants sc(m.frame);
    auto conn = koszul_connection(m.frame, sc);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(fv_is_zero(torsion_residual(m.frame, conn, sc, i, j)));
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(metric_compat_residual(m.frame, conn, k, i, j).is_zero());
      }
  }
}

TEST_CASE("curvature components reproduce the xi-sectional pattern") {
  // R(e2,e1)e1 = eps(kappa + lambda mu) e2 and
  // R(e3,e1)e1 = eps(kappa - lambda mu) e3 with lambda = z^-4,
  // kappa = eps(1 - z^-8), mu = 2(1 + eps z^-4).
  struct Oracle {
    int eps;
    const char *plus, *minus;
  } oracles[] = {
      {1, "1 + 2*z^-4 + z^-8", "1 - 2*z^-4 - 3*z^-8"},
      {-1, "1 - 2*z^-4 + z^-8", "1 + 2*z^-4 - 3*z^-8"},
  };
  for (const auto &o : oracles) {
    CAPTURE(o.eps);
    auto m = curved_model(o.eps);
    StructureConstants sc(m.frame);
    auto conn = koszul_connection(m.frame, sc);
    auto curv = curvature_tensor(m.frame, conn, sc);

    CHECK(curv.r(1, 0, 1, 0) == E(m.cs, o.plus));
    CHECK(curv.r(2, 0, 1, 0).is_zero());
    CHECK(curv.r(2, 0, 2, 0) == E(m.cs, o.minus));
    for (std::size_t l = 0; l < 3; ++l)
      CHECK(curv.r(l, 0, 1, 2).is_zero());

    auto applied = curv.apply(m.frame, fv_basis(m.cs, 3, 1),
                              fv_basis(m.cs, 3, 0), fv_basis(m.cs, 3, 0));
    CHECK(applied[1] == E(m.cs, o.plus));
    CHECK(applied[0].is_zero());
    CHECK(applied[2].is_zero());
  }
}

TEST_CASE("lowered curvature has the pair symmetries and Bianchi holds") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    StructureConstants sc(m.frame);
    auto conn = koszul_connection(m.frame, sc);
    auto curv = curvature_tensor(m.frame, conn, sc);
    for (std::size_t w = 0; w < 3; ++w)
      for (std::size_t z = 0; z < 3; ++z)
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y) {
            auto base = curv.lowered(m.frame, w, z, x, y);
            CHECK(base == -curv.lowered(m.frame, w, z, y, x));
            CHECK(base == -curv.lowered(m.frame, z, w, x, y));
            CHECK(base == curv.lowered(m.frame, x, y, w, z));
          }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(fv_is_zero(bianchi_residual(m.frame, curv, i, j, k)));
  }
}

TEST_CASE("Ricci contraction and operator") {
  auto m = curved_model(1);
  StructureConstants sc(m.frame);
  auto conn = koszul_connection(m.frame, sc);
  auto curv = curvature_tensor(m.frame, conn, sc);
  CHECK(ricci(m.frame, curv, 0, 0) == E(m.cs, "2 - 2*z^-8"));

  auto hm = heisenberg_model();
  StructureConstants hsc(hm.frame);
  auto hconn = koszul_connection(hm.frame, hsc);
  auto hcurv = curvature_tensor(hm.frame, hconn, hsc);
  auto q = ricci_operator(hm.frame, hcurv);
  CHECK(q.m(0, 0) == E(hm.cs, "-2"));
  CHECK(q.m(1, 1) == E(hm.cs, "-2"));
  CHECK(q.m(2, 2) == E(hm.cs, "2"));
  CHECK(q.m(0, 1).is_zero());
  CHECK(q.m(2, 0).is_zero());
}

TEST_CASE("sectional curvature oracles and degenerate planes") {
  auto m = curved_model(1);
  StructureConstants sc(m.frame);
  auto conn = koszul_connection(m.frame, sc);
  auto curv = curvature_tensor(m.frame, conn, sc);
  auto xi = fv_basis(m.cs, 3, 0);
  CHECK(sectional_curvature(m.frame, curv, fv_basis(m.cs, 3, 1), xi) ==
        E(m.cs, "1 + 2*z^-4 + z^-8"));
  CHECK(sectional_curvature(m.frame, curv, fv_basis(m.cs, 3, 2), xi) ==
        E(m.cs, "1 - 2*z^-4 - 3*z^-8"));
  CHECK_THROWS_AS((void)sectional_curvature(m.frame, curv,
                                            fv_basis(m.cs, 3, 1),
                                            fv_basis(m.cs, 3, 1)),
                  DomainError);

  auto hm = heisenberg_model();
  StructureConstants hsc(hm.frame);
  auto hconn = koszul_connection(hm.frame, hsc);
  auto hcurv = curvature_tensor(hm.frame, hconn, hsc);
  CHECK(sectional_curvature(hm.frame, hcurv, fv_basis(hm.cs, 3, 0),
                            fv_basis(hm.cs, 3, 1)) == E(hm.cs, "-3"));
  CHECK(sectional_curvature(hm.frame, hcurv, fv_basis(hm.cs, 3, 0),
                            fv_basis(hm.cs, 3, 2)) == E(hm.cs, "1"));
}

TEST_CASE("operator algebra: adjoints, composition, trace") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    const auto &phi = m.acs.phi;
    CHECK(phi.adjoint(m.frame) == -phi);
    CHECK(phi.trace().is_zero());

    auto phi2 = phi.compose(phi);
    CHECK(phi2.m(1, 1) == E(m.cs, "-1"));
    CHECK(phi2.m(2, 2) == E(m.cs, "-1"));
    CHECK(phi2.m(0, 0).is_zero());

    auto id = OperatorField::identity(m.cs, 3);
    CHECK(id.compose(phi) == phi);
    CHECK((phi - phi).is_zero());
    CHECK(phi.scaled(Rational(2)).m(2, 1) == E(m.cs, "2"));
  }
}

TEST_CASE("frame construction rejects degenerate input") {
  auto cs = std::make_shared<const CoordSystem>(
      std::vector<std::string>{"x", "y", "z"});
  auto e = [&](const char *s) { return parse_expr(s, cs); };
  std::vector<VectorField> vecs;
  vecs.push_back(VectorField{{e("1"), e("0"), e("0")}});
  vecs.push_back(VectorField{{e("2"), e("0"), e("0")}});
  vecs.push_back(VectorField{{e("0"), e("0"), e("1")}});
  CHECK_THROWS_AS(Frame(cs, std::move(vecs),
                        {Rational(1), Rational(1), Rational(1)}),
                  DomainError);
}
