#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappamu/cpm.hpp"
#include "kappamu/nullity.hpp"

namespace kappamu {

struct VerifyOptions {
  std::uint64_t seed = 0;
  bool numeric_fallback = false;
};

// One evaluation-point consistency check: matrices and invariants are
// evaluated to rational numbers and recombined, then compared against the
// evaluated symbolic prediction.
struct NumericCheck {
  std::string id;
  std::string point;
  bool ok = false;
  std::string detail;
};

// Everything the emitters need, already rendered to strings so that text and
// JSON output are deterministic for a given input and options.
struct VerificationReport {
  std::string name;
  std::uint64_t seed = 0;
  bool numeric_fallback = false;
  std::size_t dimension = 0;
  std::size_t n = 0;
  int epsilon = 1;
  std::string frame_det;
  std::vector<Verdict> verdicts;

  bool nullity_detected = false;
  std::string kappa;
  std::string mu;
  bool kappa_constant = false;
  bool mu_constant = false;
  bool mu_indeterminate = false;
  bool generalized = false; // detected with non-constant kappa or mu
  bool sasakian = false;
  std::string lambda;
  std::vector<std::string> basis_plus;
  std::vector<std::string> basis_minus;
  std::string xi_sec_plus;
  std::string xi_sec_minus;
  std::string phi_sec_c;
  std::string constancy_note;

  std::vector<NumericCheck> numeric_checks;

  std::size_t passed = 0, failed = 0, info_passed = 0, info_failed = 0,
              skipped = 0;
  int exit_code = 0;
};

VerificationReport run_verify(const ManifoldSpec &spec,
                              const VerifyOptions &opt);

// D-homothetic deformation run: detects (kappa, mu) before and after and
// compares the deformed values against the predicted transformation law.
struct DeformReport {
  std::string name;
  std::string a;
  bool base_detected = false;
  bool deformed_detected = false;
  bool base_mu_indeterminate = false;
  bool deformed_mu_indeterminate = false;
  std::string kappa, mu;
  std::string kappa_deformed, mu_deformed;
  std::string kappa_predicted, mu_predicted;
  Verdict verdict; // "089"
  std::optional<std::string> out_path;
  int exit_code = 0;
};

// `out_path` empty: no file is written.
DeformReport run_deform(const ManifoldSpec &spec, const Rational &a,
                        const std::string &out_path = "");

// Text gets an optional trailing elapsed-time line; JSON output never carries
// timing so byte-identical reruns stay byte-identical.
std::string emit_text(const VerificationReport &r,
                      std::optional<double> elapsed_ms = std::nullopt);
std::string emit_json(const VerificationReport &r);
std::string emit_deform_text(const DeformReport &r,
                             std::optional<double> elapsed_ms = std::nullopt);
std::string emit_deform_json(const DeformReport &r);

} // namespace kappamu
