#include "hankel/verify.hpp"

#include <span>
#include <sstream>

#include <json.hpp>

#include "hankel/errors.hpp"
#include "hankel/io.hpp"
#include "hankel/linalg.hpp"
#include "hankel/sampling.hpp"
#include "hankel/spectral.hpp"
#include "hankel/trace_hankel.hpp"

namespace hankel {

using nlohmann::ordered_json;

namespace {

std::string dense_text(const Matrix<Rational>& g) {
  std::ostringstream os;
  write_dense_matrix(os, g);
  return os.str();
}

class Recorder {
 public:
  Recorder(VerifySummary& summary, std::size_t max_kept) : summary_(summary), max_kept_(max_kept) {}

  void record(const std::string& check, bool ok, const std::function<ordered_json()>& details) {
    auto& tally = summary_.checks[check];
    if (ok) {
      ++tally.passed;
      return;
    }
    ++tally.failed;
    if (summary_.failures.size() < max_kept_) summary_.failures.push_back({check, details().dump()});
  }

 private:
  VerifySummary& summary_;
  std::size_t max_kept_;
};

void sweep_spectra(SampleRng& rng, const VerifyPlan& plan, Recorder& rec) {
  for (std::size_t s = 0; s < plan.spectra; ++s) {
    const Spectrum<Rational> spectrum =
        random_rational_spectrum(rng, plan.max_distinct, plan.max_multiplicity, plan.eigenvalue_bound);
    const Matrix<Rational> base = block_diagonal(spectrum);
    const Matrix<Rational> g = conjugate_unimodular(base, rng, 2 * base.order());
    const std::size_t m = spectrum.size();
    const std::size_t max_t = m + plan.extra_orders;
    const std::vector<Rational> traces = power_traces(g, plan.max_offset + 2 * max_t - 2);
    const std::span<const Rational> view(traces);

    for (std::size_t t = 1; t <= max_t; ++t) {
      for (std::size_t l = 0; l <= plan.max_offset; ++l) {
        const HankelSpec spec(t, l);
        const Rational lhs = hankel_det_from_traces(view, spec);
        const Rational rhs = rhs_closed_form(spectrum, spec);
        auto details = [&] {
          ordered_json j;
          j["t"] = t;
          j["l"] = l;
          j["lhs"] = lhs.str();
          j["rhs"] = rhs.str();
          ordered_json eig = ordered_json::array();
          for (std::size_t i = 0; i < m; ++i) {
            eig.push_back({spectrum.eigenvalues()[i].str(), spectrum.multiplicities()[i]});
          }
          j["spectrum"] = eig;
          j["matrix"] = dense_text(g);
          return j;
        };
        rec.record("theorem", lhs == rhs, details);
        if (t > m) rec.record("vanishing", lhs.is_zero(), details);
      }
    }
  }
}

void sweep_matrices(SampleRng& rng, const VerifyPlan& plan, Recorder& rec) {
  const Rational scale_factors[] = {Rational(-2), Rational(2), Rational(3)};
  for (std::size_t s = 0; s < plan.random_matrices; ++s) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(plan.max_order)));
    const Matrix<Rational> g = s == 0 ? cube_root_of_unity_companion()
                               : (s % 3 == 2 ? random_structured_integer_matrix(rng, n, plan.entry_bound)
                                             : random_integer_matrix(rng, n, plan.entry_bound));
    const auto base = [&] {
      ordered_json j;
      j["matrix"] = dense_text(g);
      return j;
    };

    const std::size_t m = spectral_size(g);
    const Polynomial<Rational> oracle = squarefree_part(char_poly(g));
    rec.record("spectral_size", m == oracle.degree(), [&] {
      auto j = base();
      j["hankel"] = m;
      j["oracle"] = oracle.degree();
      return j;
    });

    const Polynomial<Rational> spec_poly = spectral_polynomial(g);
    rec.record("spectral_polynomial", spec_poly == oracle, [&] {
      auto j = base();
      j["hankel"] = spec_poly.str();
      j["oracle"] = oracle.str();
      return j;
    });

    bool degenerate_ok = true;
    std::string degenerate_error;
    try {
      degeneracy_test(g);
    } catch (const InvariantViolation& e) {
      degenerate_ok = false;
      degenerate_error = e.what();
    }
    rec.record("degeneracy", degenerate_ok, [&] {
      auto j = base();
      j["error"] = degenerate_error;
      return j;
    });

    const std::vector<Rational> traces = power_traces(g, 2 * m + 2);
    const std::span<const Rational> view(traces);
    const Rational base_det = hankel_det_from_traces(view, HankelSpec(m, 0));
    Rational eig_product = spec_poly.coefficient(0);
    if (m % 2 == 1) eig_product = -eig_product;
    for (std::size_t l = 0; l <= 3; ++l) {
      const Rational lhs = hankel_det_from_traces(view, HankelSpec(m, l));
      const Rational rhs = power(eig_product, l) * base_det;
      rec.record("product_identity", lhs == rhs, [&] {
        auto j = base();
        j["l"] = l;
        j["lhs"] = lhs.str();
        j["rhs"] = rhs.str();
        return j;
      });
    }

    const Rational& c = scale_factors[s % 3];
    const auto t = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
    const auto l = static_cast<std::size_t>(rng.uniform(0, 3));
    const auto w = verify_scaling(g, c, HankelSpec(t, l));
    rec.record("scaling", w.equal, [&] {
      auto j = base();
      j["c"] = c.str();
      j["t"] = t;
      j["l"] = l;
      j["exponent"] = w.exponent;
      j["lhs"] = w.scaled.str();
      j["rhs"] = w.predicted.str();
      return j;
    });
  }
}

}  // namespace

VerifySummary run_verification(std::uint64_t seed, const VerifyPlan& plan, std::size_t max_failures_kept) {
  VerifySummary summary;
  summary.seed = seed;
  Recorder rec(summary, max_failures_kept);
  SampleRng rng(seed);
  sweep_spectra(rng, plan, rec);
  sweep_matrices(rng, plan, rec);
  return summary;
}

std::string emit_summary(const VerifySummary& summary) {
  ordered_json j;
  j["seed"] = summary.seed;
  j["passed"] = summary.passed();
  ordered_json checks = ordered_json::object();
  for (const auto& [name, tally] : summary.checks) {
    checks[name] = {{"passed", tally.passed}, {"failed", tally.failed}};
  }
  j["checks"] = checks;
  ordered_json failures = ordered_json::array();
  for (const auto& f : summary.failures) {
    failures.push_back({{"check", f.check}, {"counterexample", ordered_json::parse(f.counterexample)}});
  }
  j["failures"] = failures;
  return j.dump(2);
}

}  // namespace hankel
