#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "kappamu/contact.hpp"

#include <string>
#include <vector>

using namespace kappamu;
using testfix::curved_model;
using testfix::heisenberg_model;
using testfix::Model;

namespace {

ScalarExpr E(const CoordSystemPtr &cs, const std::string &s) {
  return parse_expr(s, cs);
}

struct Built {
  Model m;
  StructureConstants sc;
  ConnectionTable conn;
  CurvatureTable curv;
  OperatorField h;
  OperatorField ell;
};

Built build(Model m) {
  StructureConstants sc(m.frame);
  auto conn = koszul_connection(m.frame, sc);
  auto curv = curvature_tensor(m.frame, conn, sc);
  auto h = compute_h(m.acs, m.frame);
  auto ell = compute_ell(m.acs, m.frame, curv);
  return Built{std::move(m), std::move(sc), std::move(conn), std::move(curv),
               std::move(h), std::move(ell)};
}

void check_all_pass(const std::vector<Verdict> &vs) {
  for (const auto &v : vs) {
    CAPTURE(v.id);
    CAPTURE(v.residual);
    CHECK(v.status == Status::Pass);
  }
}

} // namespace

TEST_CASE("eta is the metric dual of xi") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    CHECK(eta_on_frame(m.acs, m.frame, 0) == Rational(1));
    CHECK(eta_on_frame(m.acs, m.frame, 1) == Rational(0));
    CHECK(eta_on_frame(m.acs, m.frame, 2) == Rational(0));
    auto x = fv_add(fv_basis(m.cs, 3, 0),
                    fv_scale(fv_basis(m.cs, 3, 2), E(m.cs, "x")));
    CHECK(eta_of(m.acs, m.frame, x) == E(m.cs, "1"));
  }
  auto hm = heisenberg_model();
  CHECK(eta_on_frame(hm.acs, hm.frame, 2) == Rational(1));
  CHECK(eta_on_frame(hm.acs, hm.frame, 0) == Rational(0));
}

TEST_CASE("structure axioms hold on every bundled model") {
  for (auto &m : {curved_model(1), curved_model(-1), heisenberg_model()}) {
    auto verdicts = check_almost_contact_axioms(m.acs, m.frame);
    CHECK(verdicts.size() == 7);
    check_all_pass(verdicts);
  }
}

TEST_CASE("axiom checks report residual witnesses on broken input") {
  auto m = curved_model(1);
  OperatorField bad = m.acs.phi.scaled(Rational(2)); // phi^2 != -id + eta x xi
  AlmostContactStructure s(std::move(bad), m.acs.xi, m.acs.epsilon);
  auto verdicts = check_almost_contact_axioms(s, m.frame);
  bool saw_fail = false;
  for (const auto &v : verdicts)
    if (v.status == Status::Fail) {
      saw_fail = true;
      CHECK(!v.residual.empty());
    }
  CHECK(saw_fail);
}

TEST_CASE("fundamental two-form and d eta coincide") {
  for (auto &m : {curved_model(1), curved_model(-1), heisenberg_model()}) {
    StructureConstants sc(m.frame);
    auto phi_form = fundamental_two_form(m.acs, m.frame);
    auto deta = exterior_derivative_eta(m.acs, m.frame, sc);
    CHECK(phi_form == deta);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(phi_form.m(i, i).is_zero());
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(phi_form.m(i, j) == -phi_form.m(j, i));
    }
    auto v = check_contact_condition(m.acs, m.frame, sc);
    CHECK(v.status == Status::Pass);
  }
  auto m = curved_model(1);
  StructureConstants sc(m.frame);
  auto phi_form = fundamental_two_form(m.acs, m.frame);
  CHECK(phi_form.m(1, 2) == E(m.cs, "-1")); // g(e2, phi e3) = -g(e2, e2)
  CHECK(exterior_derivative_eta(m.acs, m.frame, sc).m(1, 2) == E(m.cs, "-1"));
}

TEST_CASE("h is the phi eigenvalue operator on the curved model") {
  for (int eps : {1, -1}) {
    auto m = curved_model(eps);
    auto h = compute_h(m.acs, m.frame);
    CHECK(h.m(1, 1) == E(m.cs, "z^-4"));
    CHECK(h.m(2, 2) == E(m.cs, "-z^-4"));
    CHECK(h.m(0, 0).is_zero());
    CHECK(h.m(1, 2).is_zero());
    CHECK(h.m(2, 1).is_zero());
    CHECK(h.trace().is_zero());
    CHECK(h.adjoint(m.frame) == h);

    // h phi = -phi h
    auto anti = h.compose(m.acs.phi) + m.acs.phi.compose(h);
    CHECK(anti.is_zero());
  }
}

TEST_CASE("h vanishes exactly on the Sasakian model") {
  auto m = heisenberg_model();
  CHECK(compute_h(m.acs, m.frame).is_zero());
}

TEST_CASE("Jacobi operator along xi") {
  auto b = build(curved_model(1));
  CHECK(b.ell.m(1, 1) == E(b.m.cs, "1 + 2*z^-4 + z^-8"));
  CHECK(b.ell.m(2, 2) == E(b.m.cs, "1 - 2*z^-4 - 3*z^-8"));
  CHECK(b.ell.m(0, 0).is_zero());
  CHECK(b.ell.trace() == E(b.m.cs, "2 - 2*z^-8"));

  auto hb = build(heisenberg_model());
  CHECK(hb.ell.m(0, 0) == E(hb.m.cs, "1"));
  CHECK(hb.ell.m(1, 1) == E(hb.m.cs, "1"));
  CHECK(hb.ell.m(2, 2).is_zero());
}

TEST_CASE("standard contact identity suite passes on every bundled model") {
  for (auto &m : {curved_model(1), curved_model(-1), heisenberg_model()}) {
    auto b = build(m);
    auto verdicts = check_standard_identities(b.m.acs, b.m.frame, b.conn,
                                              b.curv, b.h, b.ell);
    CHECK(verdicts.size() == 11);
    check_all_pass(verdicts);
  }
}

TEST_CASE("Sasakian characterization distinguishes the models") {
  auto b = build(curved_model(1));
  auto sk = is_sasakian(b.m.acs, b.m.frame, b.curv);
  CHECK(!sk.sasakian);
  CHECK(!sk.residual.empty());

  auto hb = build(heisenberg_model());
  auto hsk = is_sasakian(hb.m.acs, hb.m.frame, hb.curv);
  CHECK(hsk.sasakian);
  CHECK(hsk.residual.empty());
}
