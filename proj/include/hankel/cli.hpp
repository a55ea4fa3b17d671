#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace hankel::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kParseError = 2,
  kValidationError = 3,
  kUnsupported = 4,
  kVerificationFailed = 5,
};

enum class Command { kSpectralSize, kSpectralPoly, kHankelDet, kDegenerate, kVerify };
enum class InputFormat { kDense, kEdges, kMatrixMarket };

struct RunConfig {
  Command command = Command::kSpectralSize;
  std::string input_path = "-";
  InputFormat input_format = InputFormat::kDense;
  std::string field_spec = "rational";  // "rational" or "gf:<prime>"
  std::optional<long long> t;
  std::optional<long long> l;
  bool json = false;
  std::uint64_t seed = 1;
};

/// Executes one command. `in` backs the '-' input path.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hankel::cli
