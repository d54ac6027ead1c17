#pragma once

#include <string>
#include <vector>

namespace kappamu {

// Outcome of one symbolic check.
//   Pass/Fail      — the identity is asserted for this structure.
//   InfoPass/InfoFail — checked and reported, but outside the hypotheses the
//                    structure satisfies, so it never affects the exit code.
//   Skipped        — hypotheses not met, check not evaluable.
enum class Status { Pass, Fail, InfoPass, InfoFail, Skipped };

const char *status_name(Status s);

struct Verdict {
  std::string id;        // catalog tag
  std::string statement; // human-readable formula
  Status status = Status::Skipped;
  std::string residual;  // nonzero witness when the check fails
  std::string note;

  bool counts_as_failure() const { return status == Status::Fail; }
};

// When an identity may be asserted.
//   Structural   — must hold on any well-formed input (axioms, tensor
//                  symmetries).
//   Contact      — must hold on any contact structure.
//   Nullity      — must hold once the nullity condition is verified, with
//                  function or constant coefficients.
//   NullityConstant — proved only for constant coefficients; reported
//                  informationally on generalized structures.
enum class Applicability { Structural, Contact, Nullity, NullityConstant };

struct CatalogEntry {
  const char *id;
  const char *statement;
  Applicability when;
};

// Every verdict id produced anywhere in the engine appears here.
const std::vector<CatalogEntry> &identity_catalog();
const CatalogEntry *catalog_lookup(const std::string &id);

// Builds a verdict from a residual: empty residual string means the check
// passed. `asserted` selects Pass/Fail vs InfoPass/InfoFail.
Verdict make_verdict(const std::string &id, const std::string &statement,
                     const std::string &residual, bool asserted,
                     const std::string &note = "");

// Same, with the statement taken from the catalog entry for `id`.
Verdict make_catalog_verdict(const std::string &id, const std::string &residual,
                             bool asserted, const std::string &note = "");

} // namespace kappamu
