#include "fitraffic/verification.hpp"

#include "fitraffic/analytics.hpp"
#include "fitraffic/engine.hpp"
#include "fitraffic/harness.hpp"
#include "fitraffic/preimage.hpp"
#include "fitraffic/rng.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fitraffic {

namespace {

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& name) {
    fmt::print(out_, "{} {}\n", ok ? "PASS" : "FAIL", name);
    all_ok_ = all_ok_ && ok;
  }
  bool ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool all_ok_ = true;
};

std::string bits_of(std::uint64_t code, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    s[i] = (code >> (length - 1 - i)) & 1U ? '1' : '0';
  }
  return s;
}

void suite_prop1(Reporter& report) {
  Engine engine(20240601);
  std::size_t failures = 0;
  constexpr int kConfigs = 1000;
  for (int i = 0; i < kConfigs; ++i) {
    const auto length = 4 + static_cast<std::size_t>(uniform_below(engine, 61));
    const auto m = 1 + static_cast<int>(uniform_below(engine, 3));
    const double rho = uniform_unit(engine);
    Configuration config = init_random(length, rho, engine(), InitMode::bernoulli);
    const auto steps = uniform_below(engine, 8);
    for (std::uint64_t s = 0; s < steps; ++s) {
      config = step(config, ModelParams(m));
    }
    failures += verify_proposition1(config, ModelParams(m)) != 0 ? 1 : 0;
  }
  report.check(failures == 0, fmt::format("prop1 exact flow identity on {} random rings (L 4..64, m 1..3)", kConfigs));
}

void suite_prop2(Reporter& report) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; static_cast<std::size_t>((n + 1) * (m + 1)) <= 16; ++n) {
      const PreimageReport r = verify_proposition2(m, n);
      const bool count_ok = BigInt(r.preimages) == count_preimages(m, n);
      report.check(r.mismatches == 0 && count_ok,
                   fmt::format("prop2 m={} n={}: {} strings, {} preimages, {} mismatches", m, n, r.total,
                               r.preimages, r.mismatches));
    }
  }

  std::size_t lemma_failures = 0;
  std::size_t form_failures = 0;
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t length = 1; length <= 16; ++length) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
        const std::string s = bits_of(code, length);
        const bool admissible = is_admissible(s, m);
        form_failures += admissible != is_admissible_by_density(s, m) ? 1 : 0;
        if (admissible && length > static_cast<std::size_t>(m) + 1) {
          lemma_failures += is_admissible(windowed_evolve(s, m, 1), m) ? 0 : 1;
        }
      }
    }
  }
  report.check(lemma_failures == 0, "prop2 admissibility preserved by one windowed step (m 1..3, length <= 16)");
  report.check(form_failures == 0, "prop2 capital walk and prefix-density forms agree (m 1..3, length <= 16)");
}

void suite_formulas(Reporter& report) {
  bool counts_ok = true;
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t length = 1; length <= 14; ++length) {
      std::map<std::size_t, std::uint64_t> by_ones;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
        const std::string s = bits_of(code, length);
        if (is_admissible(s, m)) {
          by_ones[static_cast<std::size_t>(std::count(s.begin(), s.end(), '1'))] += 1;
        }
      }
      for (std::size_t n1 = 0; n1 <= length; ++n1) {
        const auto n0 = static_cast<long>(length - n1);
        counts_ok = counts_ok && path_count(n0, static_cast<long>(n1), m) == BigInt(by_ones[n1]);
      }
    }
  }
  report.check(counts_ok, "formulas lattice path count = enumerated admissible strings (n0 + n1 <= 14, m 1..3)");

  const std::vector<BigRational> densities = {make_rational(1, 10), make_rational(1, 3), make_rational(1, 2),
                                              make_rational(9, 10), make_rational(0), make_rational(1)};
  bool sums_ok = true;
  bool hyper_ok = true;
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const BigRational& rho : densities) {
        const BigRational closed = exact_block_prob(m, n, rho);
        sums_ok = sums_ok && closed == preimage_prob_sum(m, n, rho);
        hyper_ok = hyper_ok && hypergeometric_flow(m, n, rho) == 1 - rho - closed;
      }
    }
  }
  report.check(sums_ok, "formulas preimage-weighted sum = closed-form block probability, exact (m 1..3, n 0..3)");
  report.check(hyper_ok, "formulas hypergeometric flow = closed-form flow, exact (m 1..3, n 0..3)");

  double worst_float = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (int t : {0, 1, 5, 20, 50, 100, 200}) {
      for (int k = 1; k <= 9; ++k) {
        const BigRational rho = make_rational(k, 10);
        const double exact = to_double(exact_block_prob(m, t, rho));
        const double fast = exact_block_prob(m, t, k / 10.0);
        worst_float = std::max(worst_float, std::abs(fast - exact) / std::max(exact, 1e-300));
      }
    }
  }
  report.check(worst_float <= 1e-10,
               fmt::format("formulas floating block probability vs exact, rel err {:.3g} <= 1e-10", worst_float));

  double worst_hyper = 0.0;
  for (int m = 1; m <= 3; ++m) {
    for (int t = 0; t <= 100; ++t) {
      for (int k = 1; k <= 19; ++k) {
        const double rho = 0.05 * k;
        const double sum_form = exact_flow(m, t, rho);
        const double hyper_form = hypergeometric_flow(m, t, rho);
        worst_hyper = std::max(worst_hyper, std::abs(hyper_form - sum_form) / std::max(sum_form, 1e-12));
      }
    }
  }
  report.check(worst_hyper <= 1e-9,
               fmt::format("formulas hypergeometric vs sum flow, floating, rel err {:.3g} <= 1e-9", worst_hyper));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "prop1") return Suite::prop1;
  if (name == "prop2") return Suite::prop2;
  if (name == "formulas") return Suite::formulas;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

bool run_verification(Suite suite, std::ostream& out) {
  Reporter report(out);
  if (suite == Suite::all || suite == Suite::prop1) {
    suite_prop1(report);
  }
  if (suite == Suite::all || suite == Suite::prop2) {
    suite_prop2(report);
  }
  if (suite == Suite::all || suite == Suite::formulas) {
    suite_formulas(report);
  }
  return report.ok();
}

}  // namespace fitraffic
