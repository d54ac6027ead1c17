#include "kappamu/pipeline.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace kappamu {

namespace {

using ojson = nlohmann::ordered_json;

std::string frame_name(std::size_t i) { return "e" + std::to_string(i + 1); }

void demote(Verdict &v) {
  if (v.status == Status::Pass)
    v.status = Status::InfoPass;
  else if (v.status == Status::Fail)
    v.status = Status::InfoFail;
}

bool holds(const Verdict &v) {
  return v.status == Status::Pass || v.status == Status::InfoPass;
}

// ---- numeric fallback -----------------------------------------------------

using QMat = std::vector<std::vector<Rational>>;

QMat eval_op(const OperatorField &o, const RationalPoint &p) {
  QMat m(o.dim(), std::vector<Rational>(o.dim()));
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < o.dim(); ++j)
      m[i][j] = o.m(i, j).eval_at(p);
  return m;
}

QMat mat_mul(const QMat &a, const QMat &b) {
  const std::size_t d = a.size();
  QMat c(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

QMat mat_sub(const QMat &a, const QMat &b) {
  QMat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      c[i][j] -= b[i][j];
  return c;
}

QMat mat_add(const QMat &a, const QMat &b) {
  QMat c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      c[i][j] += b[i][j];
  return c;
}

QMat mat_scale(const QMat &a, const Rational &q) {
  QMat c = a;
  for (auto &row : c)
    for (auto &v : row)
      v *= q;
  return c;
}

QMat mat_identity(std::size_t d) {
  QMat c(d, std::vector<Rational>(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    c[i][i] = 1;
  return c;
}

std::string mat_witness(const QMat &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0)
        return "entry (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ") = " + rational_to_string(m[i][j]);
  return {};
}

std::string point_to_string(const CoordSystemPtr &coords,
                            const RationalPoint &p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += " ";
    out += coords->name(i) + "=" + rational_to_string(p[i]);
  }
  return out;
}

std::vector<RationalPoint> sample_points(const CoordSystemPtr &coords,
                                         std::uint64_t seed,
                                         const std::vector<RationalPoint> &extra) {
  std::mt19937_64 rng(seed);
  std::vector<RationalPoint> pts;
  for (int k = 0; k < 8; ++k) {
    RationalPoint p;
    p.reserve(coords->size());
    for (std::size_t i = 0; i < coords->size(); ++i) {
      long num = 1 + static_cast<long>(rng() % 7);
      if (rng() % 2)
        num = -num;
      long den = 1 + static_cast<long>(rng() % 7);
      Rational q(num, den);
      q.canonicalize();
      p.push_back(q);
    }
    pts.push_back(std::move(p));
  }
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

// ---- emit helpers ----------------------------------------------------------

std::string pad(const std::string &s, std::size_t w) {
  std::string out = s;
  while (out.size() < w)
    out.push_back(' ');
  return out;
}

void emit_verdict_line(std::ostringstream &out, const Verdict &v) {
  out << "[" << pad(status_name(v.status), 9) << "] " << pad(v.id, 17) << " "
      << v.statement << "\n";
  if (!v.residual.empty())
    out << pad("", 13) << "residual: " << v.residual << "\n";
  if (!v.note.empty())
    out << pad("", 13) << "note: " << v.note << "\n";
}

ojson verdict_json(const Verdict &v) {
  ojson o;
  o["id"] = v.id;
  o["statement"] = v.statement;
  o["status"] = status_name(v.status);
  if (v.status == Status::Skipped)
    o["holds"] = nullptr;
  else
    o["holds"] = holds(v);
  o["residual"] = v.residual;
  o["note"] = v.note;
  return o;
}

} // namespace

VerificationReport run_verify(const ManifoldSpec &spec,
                              const VerifyOptions &opt) {
  VerificationReport r;
  r.name = spec.name;
  r.seed = opt.seed;
  r.numeric_fallback = opt.numeric_fallback;

  Frame f = spec.make_frame();
  AlmostContactStructure acs = spec.make_structure();
  const std::size_t d = f.dim();
  r.dimension = d;
  r.n = f.n();
  r.epsilon = acs.epsilon;
  r.frame_det = f.det().to_string();

  StructureConstants sc(f);

  std::vector<Verdict> axioms = check_almost_contact_axioms(acs, f);
  bool axioms_ok = true;
  for (const auto &v : axioms)
    axioms_ok = axioms_ok && holds(v);
  for (auto &v : axioms)
    r.verdicts.push_back(std::move(v));

  ConnectionTable conn = koszul_connection(f, sc);
  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = i + 1; j < d && w.empty(); ++j) {
        FrameVec res = torsion_residual(f, conn, sc, i, j);
        if (!fv_is_zero(res))
          w = "T(" + frame_name(i) + "," + frame_name(j) + ") = " +
              fv_to_string(res);
      }
    r.verdicts.push_back(make_catalog_verdict("torsion", w, true));
  }
  {
    std::string w;
    for (std::size_t k = 0; k < d && w.empty(); ++k)
      for (std::size_t i = 0; i < d && w.empty(); ++i)
        for (std::size_t j = i; j < d && w.empty(); ++j) {
          ScalarExpr res = metric_compat_residual(f, conn, k, i, j);
          if (!res.is_zero())
            w = "(nabla_" + frame_name(k) + " g)(" + frame_name(i) + "," +
                frame_name(j) + ") = " + res.to_string();
        }
    r.verdicts.push_back(make_catalog_verdict("metric-compat", w, true));
  }

  CurvatureTable curv = curvature_tensor(f, conn, sc);
  {
    std::string w;
    for (std::size_t a = 0; a < d && w.empty(); ++a)
      for (std::size_t b = 0; b < d && w.empty(); ++b)
        for (std::size_t c = 0; c < d && w.empty(); ++c)
          for (std::size_t e = 0; e < d && w.empty(); ++e) {
            ScalarExpr anti =
                curv.lowered(f, a, b, c, e) + curv.lowered(f, b, a, c, e);
            if (!anti.is_zero()) {
              w = "Riem(" + frame_name(a) + "," + frame_name(b) + "," +
                  frame_name(c) + "," + frame_name(e) +
                  ") is not antisymmetric in its first pair: " +
                  anti.to_string();
              break;
            }
            ScalarExpr pair =
                curv.lowered(f, a, b, c, e) - curv.lowered(f, c, e, a, b);
            if (!pair.is_zero())
              w = "Riem(" + frame_name(a) + "," + frame_name(b) + "," +
                  frame_name(c) + "," + frame_name(e) +
                  ") breaks pair symmetry: " + pair.to_string();
          }
    r.verdicts.push_back(make_catalog_verdict("curv-sym", w, true));
  }
  {
    std::string w;
    for (std::size_t i = 0; i < d && w.empty(); ++i)
      for (std::size_t j = i + 1; j < d && w.empty(); ++j)
        for (std::size_t k = j + 1; k < d && w.empty(); ++k) {
          FrameVec res = bianchi_residual(f, curv, i, j, k);
          if (!fv_is_zero(res))
            w = "cyclic sum at (" + frame_name(i) + "," + frame_name(j) +
                "," + frame_name(k) + ") = " + fv_to_string(res);
        }
    r.verdicts.push_back(make_catalog_verdict("bianchi", w, true));
  }

  OperatorField h = compute_h(acs, f);
  OperatorField ell = compute_ell(acs, f, curv);

  Verdict contact = check_contact_condition(acs, f, sc);
  if (!axioms_ok)
    demote(contact);
  const bool contact_ok = holds(contact);
  const bool base_ok = axioms_ok && contact_ok;
  r.verdicts.push_back(contact);

  {
    std::vector<Verdict> suite =
        check_standard_identities(acs, f, conn, curv, h, ell);
    for (auto &v : suite) {
      if (!base_ok)
        demote(v);
      r.verdicts.push_back(std::move(v));
    }
  }

  SasakianCheck sas = is_sasakian(acs, f, curv);
  r.sasakian = sas.sasakian;
  r.verdicts.push_back(make_catalog_verdict(
      "sasaki", sas.residual, false,
      sas.sasakian ? "structure is Sasakian" : "structure is not Sasakian"));

  NullityAnalysis an =
      analyze_nullity(acs, f, sc, conn, curv, h, ell, sas.sasakian, base_ok);
  for (const auto &v : an.verdicts)
    r.verdicts.push_back(v);

  r.nullity_detected = an.nf.detected;
  r.kappa = an.nf.kappa.to_string();
  r.mu = an.nf.mu.to_string();
  r.kappa_constant = an.nf.kappa_constant;
  r.mu_constant = an.nf.mu_constant;
  r.mu_indeterminate = an.nf.mu_indeterminate;
  r.generalized =
      an.nf.detected && !(an.nf.kappa_constant && an.nf.mu_constant);
  if (an.eig.available) {
    r.lambda = an.eig.lambda.to_string();
    for (std::size_t i : an.eig.plus)
      r.basis_plus.push_back(frame_name(i));
    for (std::size_t i : an.eig.minus)
      r.basis_minus.push_back(frame_name(i));
  }
  if (an.xi_sec_plus)
    r.xi_sec_plus = an.xi_sec_plus->to_string();
  if (an.xi_sec_minus)
    r.xi_sec_minus = an.xi_sec_minus->to_string();
  if (an.phi_sec_c)
    r.phi_sec_c = an.phi_sec_c->to_string();
  r.constancy_note = an.constancy_note;

  if (spec.expect_kappa) {
    std::string w;
    if (!an.nf.detected)
      w = "nullity condition not detected";
    else if (ScalarExpr res = an.nf.kappa - *spec.expect_kappa; !res.is_zero())
      w = "kappa - expected = " + res.to_string() + " (kappa = " + r.kappa +
          ")";
    r.verdicts.push_back(make_catalog_verdict("expected-kappa", w, true));
  }
  if (spec.expect_mu) {
    std::string w;
    std::string note;
    if (!an.nf.detected) {
      w = "nullity condition not detected";
    } else {
      if (an.nf.mu_indeterminate)
        note = "mu indeterminate (h = 0), compared against the 0 convention";
      if (ScalarExpr res = an.nf.mu - *spec.expect_mu; !res.is_zero())
        w = "mu - expected = " + res.to_string() + " (mu = " + r.mu + ")";
    }
    r.verdicts.push_back(make_catalog_verdict("expected-mu", w, true, note));
  }

  {
    std::string w;
    std::string note;
    if (!opt.numeric_fallback) {
      Verdict v = make_catalog_verdict("numeric-agreement", "", true,
                                       "numeric fallback not requested");
      v.status = Status::Skipped;
      r.verdicts.push_back(std::move(v));
    } else {
      auto ok_id = [&](const std::string &id) {
        for (const auto &v : r.verdicts)
          if (v.id == id)
            return holds(v);
        return false;
      };
      const auto pts = sample_points(f.coords(), opt.seed, spec.samples);
      const Rational eps(acs.epsilon);
      QMat E(d, std::vector<Rational>(d, Rational(0)));
      for (std::size_t j = 0; j < d; ++j)
        E[acs.xi][j] = eta_on_frame(acs, f, j);
      for (const auto &p : pts) {
        const std::string ps = point_to_string(f.coords(), p);
        auto push = [&](const std::string &id, const std::string &detail) {
          const bool ok = detail.empty();
          if (!ok && w.empty())
            w = id + " at " + ps + ": " + detail;
          r.numeric_checks.push_back(NumericCheck{id, ps, ok, detail});
        };
        {
          Rational det = f.det().eval_at(p);
          push("frame-det", det != 0 ? std::string{}
                                     : "frame determinant vanishes");
        }
        QMat phiM = eval_op(acs.phi, p);
        QMat hM = eval_op(h, p);
        QMat ellM = eval_op(ell, p);
        if (ok_id("001b"))
          push("001b", mat_witness(mat_sub(
                           mat_add(mat_mul(phiM, phiM), mat_identity(d)), E)));
        if (ok_id("013"))
          push("013",
               mat_witness(mat_add(mat_mul(hM, phiM), mat_mul(phiM, hM))));
        if (an.nf.detected) {
          Rational kv = an.nf.kappa.eval_at(p);
          Rational mv = an.nf.mu.eval_at(p);
          {
            Rational tr(0);
            for (std::size_t i = 0; i < d; ++i)
              tr += ellM[i][i];
            Rational want = Rational(2 * (long)f.n()) * eps * kv;
            push("054", tr == want
                            ? std::string{}
                            : "tr l = " + rational_to_string(tr) +
                                  ", 2n eps kappa = " +
                                  rational_to_string(want));
          }
          if (ok_id("030"))
            push("030", mat_witness(mat_sub(
                            mat_mul(hM, hM),
                            mat_scale(mat_mul(phiM, phiM),
                                      eps * kv - 1))));
          if (ok_id("053"))
            push("053", mat_witness(mat_sub(
                            mat_sub(mat_mul(ellM, phiM), mat_mul(phiM, ellM)),
                            mat_scale(mat_mul(hM, phiM),
                                      Rational(2) * eps * mv))));
          if (ok_id("060") && an.xi_sec_plus && an.eig.available) {
            Rational lv = an.eig.lambda.eval_at(p);
            Rational got = an.xi_sec_plus->eval_at(p);
            Rational want = kv + lv * mv;
            std::string detail;
            if (got != want)
              detail = "K = " + rational_to_string(got) +
                       ", kappa + lambda mu = " + rational_to_string(want);
            if (detail.empty() && an.xi_sec_minus) {
              got = an.xi_sec_minus->eval_at(p);
              want = kv - lv * mv;
              if (got != want)
                detail = "K = " + rational_to_string(got) +
                         ", kappa - lambda mu = " + rational_to_string(want);
            }
            push("060", detail);
          }
        }
      }
      std::size_t okc = 0;
      for (const auto &c : r.numeric_checks)
        okc += c.ok ? 1 : 0;
      note = std::to_string(okc) + "/" +
             std::to_string(r.numeric_checks.size()) + " checks at " +
             std::to_string(pts.size()) + " points";
      r.verdicts.push_back(
          make_catalog_verdict("numeric-agreement", w, true, note));
    }
  }

  for (const auto &v : r.verdicts) {
    switch (v.status) {
    case Status::Pass:
      ++r.passed;
      break;
    case Status::Fail:
      ++r.failed;
      break;
    case Status::InfoPass:
      ++r.info_passed;
      break;
    case Status::InfoFail:
      ++r.info_failed;
      break;
    case Status::Skipped:
      ++r.skipped;
      break;
    }
  }
  r.exit_code = r.failed > 0 ? 1 : 0;
  return r;
}

DeformReport run_deform(const ManifoldSpec &spec, const Rational &a,
                        const std::string &out_path) {
  DeformReport r;
  r.name = spec.name;
  r.a = rational_to_string(a);

  Frame f = spec.make_frame();
  AlmostContactStructure acs = spec.make_structure();
  StructureConstants sc(f);
  ConnectionTable conn = koszul_connection(f, sc);
  CurvatureTable curv = curvature_tensor(f, conn, sc);
  OperatorField h = compute_h(acs, f);
  OperatorField ell = compute_ell(acs, f, curv);
  NullityFunctions base = detect_nullity(acs, f, curv, h, ell);

  DeformedStructure def = d_homothetic_deform(acs, f, a);
  StructureConstants sc2(def.frame);
  ConnectionTable conn2 = koszul_connection(def.frame, sc2);
  CurvatureTable curv2 = curvature_tensor(def.frame, conn2, sc2);
  OperatorField h2 = compute_h(def.acs, def.frame);
  OperatorField ell2 = compute_ell(def.acs, def.frame, curv2);
  NullityFunctions nb = detect_nullity(def.acs, def.frame, curv2, h2, ell2);

  r.base_detected = base.detected;
  r.deformed_detected = nb.detected;
  r.base_mu_indeterminate = base.mu_indeterminate;
  r.deformed_mu_indeterminate = nb.mu_indeterminate;
  r.kappa = base.kappa.to_string();
  r.mu = base.mu.to_string();
  r.kappa_deformed = nb.kappa.to_string();
  r.mu_deformed = nb.mu.to_string();

  std::string w;
  std::string note;
  std::optional<ScalarExpr> pk, pm;
  if (!base.detected) {
    w = "base structure: nullity condition not detected";
    if (!base.residual.empty())
      w += "; " + base.residual;
  } else if (!nb.detected) {
    w = "deformed structure: nullity condition not detected";
    if (!nb.residual.empty())
      w += "; " + nb.residual;
  } else {
    pk = predict_deformed_kappa(base.kappa, acs.epsilon, a);
    pm = predict_deformed_mu(base.mu, a);
    r.kappa_predicted = pk->to_string();
    r.mu_predicted = pm->to_string();
    if (ScalarExpr res = nb.kappa - *pk; !res.is_zero())
      w = "deformed kappa - predicted = " + res.to_string();
    else if (base.mu_indeterminate != nb.mu_indeterminate)
      w = base.mu_indeterminate
              ? "h vanished before the deformation but not after"
              : "h vanished after the deformation but not before";
    else if (base.mu_indeterminate)
      note = "mu indeterminate on both sides (h = 0); mu comparison vacuous";
    else if (ScalarExpr res = nb.mu - *pm; !res.is_zero())
      w = "deformed mu - predicted = " + res.to_string();
  }
  r.verdict = make_catalog_verdict("089", w, true, note);
  r.exit_code = r.verdict.counts_as_failure() ? 1 : 0;

  if (!out_path.empty()) {
    ManifoldSpec ds;
    ds.name = spec.name + " a=" + rational_to_string(a);
    ds.coords = spec.coords;
    ds.epsilon = spec.epsilon;
    ds.metric = def.frame.metric();
    for (std::size_t i = 0; i < def.frame.dim(); ++i)
      ds.frame_vectors.push_back(def.frame.vector(i));
    ds.phi_rows.assign(def.frame.dim(),
                       std::vector<ScalarExpr>(def.frame.dim()));
    for (std::size_t i = 0; i < def.frame.dim(); ++i)
      for (std::size_t j = 0; j < def.frame.dim(); ++j)
        ds.phi_rows[i][j] = def.acs.phi.m(i, j);
    ds.xi = spec.xi;
    if (nb.detected) {
      ds.expect_kappa = nb.kappa;
      if (!nb.mu_indeterminate)
        ds.expect_mu = nb.mu;
    }
    ds.samples = spec.samples;
    std::ofstream out(out_path);
    if (!out)
      throw Error("cannot write '" + out_path + "'");
    out << serialize_spec(ds);
    r.out_path = out_path;
  }
  return r;
}

std::string emit_text(const VerificationReport &r,
                      std::optional<double> elapsed_ms) {
  std::ostringstream out;
  out << "verify: " << r.name << "\n";
  out << "dimension: " << r.dimension << " (n = " << r.n << ")  epsilon: "
      << (r.epsilon > 0 ? "+1" : "-1") << "  seed: " << r.seed << "\n";
  out << "frame det: " << r.frame_det << "\n\n";
  for (const auto &v : r.verdicts)
    emit_verdict_line(out, v);
  out << "\n";
  out << "nullity: " << (r.nullity_detected ? "detected" : "not detected")
      << "\n";
  out << "  kappa: " << r.kappa << "  (constant: "
      << (r.kappa_constant ? "yes" : "no") << ")\n";
  out << "  mu: " << r.mu;
  if (r.mu_indeterminate)
    out << "  (indeterminate, h = 0)";
  else
    out << "  (constant: " << (r.mu_constant ? "yes" : "no") << ")";
  out << "\n";
  if (r.generalized)
    out << "  generalized: yes (non-constant coefficients)\n";
  if (!r.lambda.empty()) {
    out << "  lambda: " << r.lambda << "\n";
    out << "  D(lambda): {";
    for (std::size_t i = 0; i < r.basis_plus.size(); ++i)
      out << (i ? "," : "") << r.basis_plus[i];
    out << "}  D(-lambda): {";
    for (std::size_t i = 0; i < r.basis_minus.size(); ++i)
      out << (i ? "," : "") << r.basis_minus[i];
    out << "}\n";
  }
  if (!r.xi_sec_plus.empty())
    out << "  K(X,xi): " << r.xi_sec_plus << " on D(lambda), "
        << r.xi_sec_minus << " on D(-lambda)\n";
  if (!r.phi_sec_c.empty())
    out << "  phi-sectional c: " << r.phi_sec_c << "\n";
  if (!r.constancy_note.empty())
    out << "  constancy: " << r.constancy_note << "\n";
  out << "sasakian: " << (r.sasakian ? "yes" : "no") << "\n";
  if (r.numeric_fallback) {
    std::size_t okc = 0;
    for (const auto &c : r.numeric_checks)
      okc += c.ok ? 1 : 0;
    out << "numeric checks: " << okc << "/" << r.numeric_checks.size()
        << " ok\n";
    for (const auto &c : r.numeric_checks)
      if (!c.ok)
        out << "  [" << c.id << "] " << c.point << ": " << c.detail << "\n";
  }
  out << "summary: " << r.passed << " pass, " << r.failed << " fail, "
      << r.info_passed << " info-pass, " << r.info_failed << " info-fail, "
      << r.skipped << " skipped\n";
  out << "exit: " << r.exit_code << "\n";
  if (elapsed_ms)
    out << "elapsed: " << *elapsed_ms << " ms\n";
  return out.str();
}

std::string emit_json(const VerificationReport &r) {
  ojson j;
  j["fixture"] = r.name;
  j["options"]["seed"] = r.seed;
  j["options"]["numeric_fallback"] = r.numeric_fallback;
  j["dimension"] = r.dimension;
  j["n"] = r.n;
  j["epsilon"] = r.epsilon;
  j["frame_det"] = r.frame_det;
  j["verdicts"] = ojson::array();
  for (const auto &v : r.verdicts)
    j["verdicts"].push_back(verdict_json(v));
  ojson nl;
  nl["detected"] = r.nullity_detected;
  nl["kappa"] = r.kappa;
  nl["mu"] = r.mu;
  nl["kappa_constant"] = r.kappa_constant;
  nl["mu_constant"] = r.mu_constant;
  nl["mu_indeterminate"] = r.mu_indeterminate;
  nl["generalized"] = r.generalized;
  if (r.lambda.empty()) {
    nl["lambda"] = nullptr;
    nl["basis_plus"] = nullptr;
    nl["basis_minus"] = nullptr;
  } else {
    nl["lambda"] = r.lambda;
    nl["basis_plus"] = r.basis_plus;
    nl["basis_minus"] = r.basis_minus;
  }
  nl["constancy_note"] = r.constancy_note;
  j["nullity"] = nl;
  j["sasakian"] = r.sasakian;
  ojson sec;
  sec["xi_plus"] = r.xi_sec_plus.empty() ? ojson(nullptr) : ojson(r.xi_sec_plus);
  sec["xi_minus"] =
      r.xi_sec_minus.empty() ? ojson(nullptr) : ojson(r.xi_sec_minus);
  sec["phi_c"] = r.phi_sec_c.empty() ? ojson(nullptr) : ojson(r.phi_sec_c);
  j["sectional"] = sec;
  j["numeric_checks"] = ojson::array();
  for (const auto &c : r.numeric_checks) {
    ojson o;
    o["id"] = c.id;
    o["point"] = c.point;
    o["ok"] = c.ok;
    o["detail"] = c.detail;
    j["numeric_checks"].push_back(o);
  }
  ojson sum;
  sum["pass"] = r.passed;
  sum["fail"] = r.failed;
  sum["info_pass"] = r.info_passed;
  sum["info_fail"] = r.info_failed;
  sum["skipped"] = r.skipped;
  j["summary"] = sum;
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

std::string emit_deform_text(const DeformReport &r,
                             std::optional<double> elapsed_ms) {
  std::ostringstream out;
  out << "deform: " << r.name << "  a = " << r.a << "\n";
  out << "base: " << (r.base_detected ? "detected" : "not detected")
      << "  kappa = " << r.kappa << "  mu = " << r.mu;
  if (r.base_mu_indeterminate)
    out << " (indeterminate)";
  out << "\n";
  out << "deformed: " << (r.deformed_detected ? "detected" : "not detected")
      << "  kappa = " << r.kappa_deformed << "  mu = " << r.mu_deformed;
  if (r.deformed_mu_indeterminate)
    out << " (indeterminate)";
  out << "\n";
  if (!r.kappa_predicted.empty())
    out << "predicted: kappa = " << r.kappa_predicted << "  mu = "
        << r.mu_predicted << "\n";
  emit_verdict_line(out, r.verdict);
  if (r.out_path)
    out << "wrote: " << *r.out_path << "\n";
  out << "exit: " << r.exit_code << "\n";
  if (elapsed_ms)
    out << "elapsed: " << *elapsed_ms << " ms\n";
  return out.str();
}

std::string emit_deform_json(const DeformReport &r) {
  ojson j;
  j["fixture"] = r.name;
  j["a"] = r.a;
  j["base"]["detected"] = r.base_detected;
  j["base"]["kappa"] = r.kappa;
  j["base"]["mu"] = r.mu;
  j["base"]["mu_indeterminate"] = r.base_mu_indeterminate;
  j["deformed"]["detected"] = r.deformed_detected;
  j["deformed"]["kappa"] = r.kappa_deformed;
  j["deformed"]["mu"] = r.mu_deformed;
  j["deformed"]["mu_indeterminate"] = r.deformed_mu_indeterminate;
  j["predicted"]["kappa"] =
      r.kappa_predicted.empty() ? ojson(nullptr) : ojson(r.kappa_predicted);
  j["predicted"]["mu"] =
      r.mu_predicted.empty() ? ojson(nullptr) : ojson(r.mu_predicted);
  j["verdict"] = verdict_json(r.verdict);
  j["out"] = r.out_path ? ojson(*r.out_path) : ojson(nullptr);
  j["exit_code"] = r.exit_code;
  return j.dump(2) + "\n";
}

} // namespace kappamu
