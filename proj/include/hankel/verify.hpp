#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hankel {

/// Sample plan of the randomized identity sweep. Every check is exact.
struct VerifyPlan {
  std::size_t spectra = 200;           // constructed spectra for the determinant identity
  std::size_t max_distinct = 5;        // m <= max_distinct
  std::size_t max_multiplicity = 3;
  long eigenvalue_bound = 9;           // eigenvalues are rationals in [-bound, bound]
  std::size_t extra_orders = 2;        // t runs up to m + extra_orders
  std::size_t max_offset = 3;          // l runs over 0..max_offset
  std::size_t random_matrices = 500;   // integer matrices for the oracle comparisons
  std::size_t max_order = 6;
  long entry_bound = 5;
};

struct CheckTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerifyFailure {
  std::string check;
  std::string counterexample;  // JSON object
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::map<std::string, CheckTally> checks;  // keyed by check name, sorted
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
};

/**
 * Randomized sweep over every implemented identity:
 *  - "theorem":        det M_{t,l} equals the closed form on constructed spectra
 *  - "vanishing":      det M_{t,l} = 0 for t > m
 *  - "spectral_size":  Hankel scan agrees with the characteristic-polynomial oracle
 *  - "spectral_polynomial": quotient formula equals the squarefree part of the char poly
 *  - "degeneracy":     Hankel degeneracy test agrees with det G = 0
 *  - "product_identity": det M_{m,l} = (λ_1...λ_m)^l det M_m for l = 0..3
 *  - "scaling":        det M_{t,l}(cG) = c^{tl+t(t-1)} det M_{t,l}(G)
 * Failures carry a JSON counterexample. At most `max_failures_kept` are stored.
 */
VerifySummary run_verification(std::uint64_t seed, const VerifyPlan& plan = {},
                               std::size_t max_failures_kept = 20);

/// JSON summary: seed, passed flag, per-check tallies, failures.
std::string emit_summary(const VerifySummary& summary);

}  // namespace hankel
