#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/field.hpp"
#include "hankel/linalg.hpp"
#include "hankel/matrix.hpp"
#include "hankel/spectral.hpp"
#include "hankel/trace_hankel.hpp"

namespace hankel {

struct HankelValue {
  std::size_t t;
  std::size_t l;
  std::string value;
};

/// Everything the CLI reports about one matrix; scalars are already rendered.
struct AnalysisReport {
  std::size_t order = 0;
  std::string field;
  std::size_t spectral_size = 0;
  bool degenerate = false;
  std::vector<std::string> spectral_polynomial;  // constant term first
  std::vector<HankelValue> hankel_determinants;
  std::optional<bool> oracle_agreement;  // empty when the oracle cannot run over this field
  std::vector<std::string> notes;
};

/// {t, l, lhs, rhs, equal}
struct WitnessRecord {
  std::size_t t;
  std::size_t l;
  std::string lhs;
  std::string rhs;
  bool equal;
};

template <Field F>
WitnessRecord to_record(const TheoremWitness<F>& w) {
  return {w.t, w.l, w.lhs.str(), w.rhs.str(), w.equal};
}

template <Field F>
WitnessRecord to_record(const ScalingWitness<F>& w) {
  return {w.t, w.l, w.scaled.str(), w.predicted.str(), w.equal};
}

/// Field label used in reports: "rational" or "gf:<p>".
template <Field F>
std::string field_label(const F& like) {
  const std::uint64_t p = like.characteristic();
  return p == 0 ? "rational" : "gf:" + std::to_string(p);
}

/**
 * Runs the full pipeline on G: spectral size, degeneracy, spectral
 * polynomial, det M_{t,0} for t = 1..n and det M_{m,1}, and agreement with
 * the characteristic-polynomial oracle where it applies.
 */
template <Field F>
AnalysisReport analyze(const Matrix<F>& g) {
  const F like = g(0, 0);
  AnalysisReport report;
  report.order = g.order();
  report.field = field_label(like);
  report.spectral_size = spectral_size(g);
  report.degenerate = degeneracy_test(g);
  const Polynomial<F> spec_poly = spectral_polynomial(g);
  report.spectral_polynomial = coefficient_strings(spec_poly);

  const std::size_t n = g.order();
  const std::size_t m = report.spectral_size;
  const std::vector<F> traces = power_traces(g, 2 * n - 1);
  const std::span<const F> view(traces);
  for (std::size_t t = 1; t <= n; ++t) {
    report.hankel_determinants.push_back({t, 0, hankel_det_from_traces(view, HankelSpec(t, 0)).str()});
  }
  report.hankel_determinants.push_back({m, 1, hankel_det_from_traces(view, HankelSpec(m, 1)).str()});

  try {
    const Polynomial<F> oracle = squarefree_part(char_poly(g));
    report.oracle_agreement = oracle.degree() == m && oracle == spec_poly;
  } catch (const UnsupportedFieldError& e) {
    report.notes.emplace_back(std::string("oracle skipped: ") + e.what());
  }
  if (like.characteristic() != 0) {
    report.notes.emplace_back(
        "distinct-eigenvalue count valid only if no multiplicity is divisible by p and the "
        "characteristic polynomial is separable");
  }
  return report;
}

/// Deterministic JSON rendering with fixed key order.
std::string emit_report(const AnalysisReport& report);

std::string emit_witness(const WitnessRecord& record);

}  // namespace hankel
