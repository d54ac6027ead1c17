#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "kappamu/pipeline.hpp"

namespace {

const char *appl_name(kappamu::Applicability a) {
  switch (a) {
  case kappamu::Applicability::Structural:
    return "structural";
  case kappamu::Applicability::Contact:
    return "contact";
  case kappamu::Applicability::Nullity:
    return "nullity";
  case kappamu::Applicability::NullityConstant:
    return "nullity-constant";
  }
  return "?";
}

std::string pad(const std::string &s, std::size_t w) {
  std::string out = s;
  while (out.size() < w)
    out.push_back(' ');
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact verifier for contact pseudo-metric structures"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string format = "text";
  std::string out_path;
  std::string a_text;
  std::uint64_t seed = 0;
  bool numeric = false;

  CLI::App *verify =
      app.add_subcommand("verify", "run the identity suite on a .cpm file");
  verify->add_option("spec", spec_path, "input .cpm file")->required();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed", seed, "seed for numeric sample points");
  verify->add_flag("--numeric-fallback", numeric,
                   "re-check passed identities at sample points");

  CLI::App *deform =
      app.add_subcommand("deform", "apply a D-homothetic deformation");
  deform->add_option("spec", spec_path, "input .cpm file")->required();
  deform
      ->add_option("--a", a_text,
                   "deformation parameter, a positive rational like 2 or 1/2")
      ->required();
  deform->add_option("--out", out_path,
                     "write the deformed structure to this .cpm file");
  deform->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App *catalog =
      app.add_subcommand("catalog", "list every identity tag with its class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      kappamu::ManifoldSpec spec = kappamu::load_spec(spec_path);
      kappamu::VerifyOptions opt;
      opt.seed = seed;
      opt.numeric_fallback = numeric;
      auto t0 = std::chrono::steady_clock::now();
      kappamu::VerificationReport rep = kappamu::run_verify(spec, opt);
      if (format == "json")
        std::cout << kappamu::emit_json(rep);
      else
        std::cout << kappamu::emit_text(rep, ms_since(t0));
      return rep.exit_code;
    }
    if (deform->parsed()) {
      kappamu::ManifoldSpec spec = kappamu::load_spec(spec_path);
      kappamu::Rational a = kappamu::parse_rational(a_text);
      if (a <= 0) {
        std::cerr << "error: --a must be positive\n";
        return 2;
      }
      auto t0 = std::chrono::steady_clock::now();
      kappamu::DeformReport rep = kappamu::run_deform(spec, a, out_path);
      if (format == "json")
        std::cout << kappamu::emit_deform_json(rep);
      else
        std::cout << kappamu::emit_deform_text(rep, ms_since(t0));
      return rep.exit_code;
    }
    if (catalog->parsed()) {
      for (const auto &e : kappamu::identity_catalog())
        std::cout << pad(e.id, 18) << pad(appl_name(e.when), 18)
                  << e.statement << "\n";
      return 0;
    }
  } catch (const kappamu::ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const kappamu::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
