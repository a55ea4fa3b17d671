#include "hankel/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>

#include <json.hpp>

#include "hankel/errors.hpp"
#include "hankel/graph.hpp"
#include "hankel/io.hpp"
#include "hankel/report.hpp"
#include "hankel/spectral.hpp"
#include "hankel/verify.hpp"

namespace hankel::cli {

namespace {

constexpr const char* kGfCaveat =
    "note: over GF(p) the distinct-eigenvalue count is valid only if no multiplicity is divisible by p "
    "and the characteristic polynomial is separable";

struct FieldChoice {
  std::uint64_t modulus = 0;  // 0 for the rationals
};

FieldChoice parse_field(const std::string& spec) {
  if (spec == "rational") return {};
  if (spec.rfind("gf:", 0) != 0) {
    throw UnsupportedFieldError("unsupported field '" + spec + "' (expected rational or gf:<prime>)");
  }
  const std::string digits = spec.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError("invalid modulus in '" + spec + "'");
  }
  std::uint64_t p = 0;
  try {
    p = std::stoull(digits);
  } catch (const std::out_of_range&) {
    throw ValidationError("modulus in '" + spec + "' is out of range");
  }
  if (p >= (std::uint64_t{1} << 63) || !is_prime(p)) {
    throw ValidationError("modulus " + digits + " is not a prime below 2^63");
  }
  return {p};
}

Matrix<Rational> load_matrix(const RunConfig& config, std::istream& in) {
  std::ifstream file;
  std::istream* source = &in;
  if (config.input_path != "-") {
    file.open(config.input_path);
    if (!file) throw ParseError("cannot open input file '" + config.input_path + "'");
    source = &file;
  }
  switch (config.input_format) {
    case InputFormat::kDense:
      return parse_dense_matrix(*source);
    case InputFormat::kEdges:
      return adjacency_matrix(parse_edge_list(*source));
    case InputFormat::kMatrixMarket: {
      auto content = parse_matrix_market(*source);
      if (auto* g = std::get_if<GraphSpec>(&content)) return adjacency_matrix(*g);
      return std::get<Matrix<Rational>>(std::move(content));
    }
  }
  throw std::logic_error("unhandled input format");
}

std::string bracketed(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) out += (k ? ", " : "") + items[k];
  return out + "]";
}

HankelSpec hankel_spec(const RunConfig& config) {
  if (!config.t || !config.l) throw ValidationError("hankel-det needs both -t and -l");
  if (*config.t < 1) throw ValidationError("-t must be at least 1");
  if (*config.l < 0) throw ValidationError("-l must be nonnegative");
  return HankelSpec(static_cast<std::size_t>(*config.t), static_cast<std::size_t>(*config.l));
}

template <Field F>
int execute(const RunConfig& config, const Matrix<F>& g, std::ostream& out, std::ostream& err) {
  const bool modular = g(0, 0).characteristic() != 0;
  if (config.command == Command::kHankelDet) {
    const HankelSpec spec = hankel_spec(config);
    const F value = hankel_det(g, spec);
    if (config.json) {
      nlohmann::ordered_json j;
      j["t"] = spec.t();
      j["l"] = spec.l();
      j["value"] = value.str();
      out << j.dump(2) << '\n';
    } else {
      out << value.str() << '\n';
    }
    return kOk;
  }

  if (config.json) {
    out << emit_report(analyze(g)) << '\n';
    return kOk;
  }
  switch (config.command) {
    case Command::kSpectralSize: {
      std::size_t m = 0;
      if constexpr (std::is_same_v<F, Rational>) {
        m = g.is_symmetric() ? spectral_size_symmetric(g) : spectral_size(g);
      } else {
        m = spectral_size(g);
      }
      out << m << '\n';
      break;
    }
    case Command::kSpectralPoly:
      out << bracketed(coefficient_strings(spectral_polynomial(g))) << '\n';
      break;
    case Command::kDegenerate:
      out << (degeneracy_test(g) ? "true" : "false") << '\n';
      break;
    default:
      throw std::logic_error("unhandled command");
  }
  if (modular) err << kGfCaveat << '\n';
  return kOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  if (parse_field(config.field_spec).modulus != 0) {
    throw UnsupportedFieldError("verify samples rational matrices only");
  }
  const VerifySummary summary = run_verification(config.seed);
  if (config.json) {
    out << emit_summary(summary) << '\n';
  } else {
    out << "seed " << summary.seed << '\n';
    for (const auto& [name, tally] : summary.checks) {
      out << (tally.failed == 0 ? "PASS " : "FAIL ") << name << ": " << tally.passed << " passed, " << tally.failed
          << " failed\n";
    }
    for (const auto& f : summary.failures) out << "counterexample [" << f.check << "]: " << f.counterexample << '\n';
    out << (summary.passed() ? "verify: PASS" : "verify: FAIL") << '\n';
  }
  return summary.passed() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == Command::kVerify) return run_verify(config, out);
    const FieldChoice field = parse_field(config.field_spec);
    if (config.command == Command::kHankelDet) hankel_spec(config);
    const Matrix<Rational> g = load_matrix(config, in);
    if (field.modulus == 0) return execute(config, g, out, err);
    const Matrix<ModP> reduced =
        map_entries<ModP>(g, [&](const Rational& q) { return ModP::from_rational(q, field.modulus); });
    return execute(config, reduced, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const PreconditionError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::domain_error& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const UnsupportedFieldError& e) {
    err << "unsupported field: " << e.what() << '\n';
    return kUnsupported;
  } catch (const UnsupportedFormatError& e) {
    err << "unsupported format: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral size and spectral polynomial from traces of matrix powers, in exact arithmetic"};
  app.set_version_flag("--version", "hankel 1.0.0");

  RunConfig config;
  const std::map<std::string, Command> commands{{"spectral-size", Command::kSpectralSize},
                                                {"spectral-poly", Command::kSpectralPoly},
                                                {"hankel-det", Command::kHankelDet},
                                                {"degenerate", Command::kDegenerate},
                                                {"verify", Command::kVerify}};
  const std::map<std::string, InputFormat> formats{
      {"dense", InputFormat::kDense}, {"edges", InputFormat::kEdges}, {"mm", InputFormat::kMatrixMarket}};
  std::string tolerance;

  app.add_option("command", config.command, "spectral-size | spectral-poly | hankel-det | degenerate | verify")
      ->required()
      ->transform(CLI::CheckedTransformer(commands, CLI::ignore_case));
  app.add_option("input", config.input_path, "input file, or '-' for standard input")->capture_default_str();
  app.add_option("--format", config.input_format, "dense | edges | mm")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--field", config.field_spec, "rational | gf:<prime>")->capture_default_str();
  app.add_option("-t", config.t, "Hankel order t >= 1 (hankel-det)");
  app.add_option("-l", config.l, "power offset l >= 0 (hankel-det)");
  app.add_flag("--json", config.json, "machine-readable output");
  app.add_option("--seed", config.seed, "seed for verify sampling")->capture_default_str();
  auto* tol = app.add_option("--tolerance,--tol", tolerance, "rejected: all checks are exact");
  tol->group("");

  try {
    app.parse(argc, argv);
    if (tol->count() > 0) throw CLI::ValidationError("--tolerance", "exact arithmetic admits no tolerance");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kParseError;
  }
  return run(config, in, out, err);
}

}  // namespace hankel::cli
