// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-mlsfr-cli]

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "mlsfr/allocator.hpp"
#include "mlsfr/commands.hpp"
#include "mlsfr/schemes.hpp"

using namespace mlsfr;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    notes.push_back(fmt::format("    {} {}", cond ? "ok  " : "FAIL", what));
    ok = ok && cond;
  }
  void info(const std::string& what) { notes.push_back("    info " + what); }
};

bool within(double value, double expected, double tol) { return std::abs(value - expected) <= tol; }

struct Env {
  LinkParams params;
  NetworkLayout layout = build_layout(1.0);
  std::vector<double> circles = default_circles();
};

Check edge_efficiency(const Env& env) {
  Check c;
  const CellDistances d = distances(env.layout, 1.0);
  const double reuse1 = spectral_efficiency(env.params, interference_profile(make_reuse1(), 1), d);
  const double sfr2 = spectral_efficiency(env.params, interference_profile(make_sfr2(-6.0), 1), d);
  const double sfr8 = spectral_efficiency(env.params, interference_profile(make_mlsfr(4, -17.0), 1), d);
  c.expect(within(reuse1, 0.51, 0.02), fmt::format("reuse-1 edge {:.4f} vs 0.51 +/-0.02", reuse1));
  c.expect(within(sfr2, 1.26, 0.02), fmt::format("SFR-2(-6 dB) edge {:.4f} vs 1.26 +/-0.02", sfr2));
  c.expect(within(sfr8, 2.54, 0.03), fmt::format("SFR-8 level 1 edge {:.4f} vs 2.54 +/-0.03", sfr8));
  return c;
}

Check gamma_design(const Env& env) {
  Check c;
  const double g = design_gamma(env.params, env.layout, 1.0, 0.90);
  c.expect(g >= -17.5 && g <= -16.5, fmt::format("design_gamma(beta0=1, 0.90) = {:.4f} dB in [-17.5, -16.5]", g));
  return c;
}

Check table3(const Env&) {
  Check c;
  const Scheme s = make_mlsfr(4, -17.0);
  const std::vector<double> table = {0, -2.4, -4.8, -7.3, -9.7, -12.1, -14.6, -17};
  for (std::size_t i = 0; i < 8; ++i) {
    const double g = s.levels[i].gain_db;
    c.expect(within(g, table[i], 0.07), fmt::format("level {} gain {:.3f} vs {} +/-0.07 dB", i + 1, g, table[i]));
  }
  return c;
}

Check table4(const Env& env) {
  Check c;
  const Scheme schemes[] = {make_reuse1(), make_sfr2(-6.0), make_mlsfr(4, -17.0)};
  const double paper_overall[] = {1.654, 1.817, 2.168};
  std::vector<AllocationResult> results;
  for (std::size_t k = 0; k < 3; ++k) {
    const AllocationResult r = solve_equal_rate(schemes[k], efficiency_matrix(env.params, env.layout, schemes[k], env.circles));
    const double rel = r.overall_efficiency / paper_overall[k] - 1.0;
    c.expect(std::abs(rel) <= 0.01, fmt::format("{} overall {:.4f} vs {} (rel {:+.3f}%, tol 1%)", schemes[k].name,
                                                r.overall_efficiency, paper_overall[k], 100.0 * rel));
    results.push_back(r);
  }
  const double imp2 = 100.0 * (results[1].overall_efficiency / results[0].overall_efficiency - 1.0);
  const double imp8 = 100.0 * (results[2].overall_efficiency / results[0].overall_efficiency - 1.0);
  c.expect(imp2 >= 9.0 && imp2 <= 11.0, fmt::format("SFR-2 improvement {:.2f}% in [9, 11]", imp2));
  c.expect(imp8 >= 29.0 && imp8 <= 33.0, fmt::format("SFR-8 improvement {:.2f}% in [29, 33]", imp8));

  const std::vector<double> reuse1_row = {1.80, 2.71, 3.88, 5.62, 8.50, 13.7, 23.2, 40.6};
  const auto r1 = results[0].circle_totals();
  for (std::size_t i = 0; i < 8; ++i) {
    c.expect(within(100.0 * r1[i], reuse1_row[i], 0.3),
             fmt::format("reuse-1 share circle {}/8: {:.2f}% vs {} +/-0.3 pp", i + 1, 100.0 * r1[i], reuse1_row[i]));
  }
  const std::vector<double> sfr8_row = {4.52, 11.2, 15.2, 16.9, 16.1, 13.8, 11.0, 11.2};
  const auto t8 = results[2].circle_totals();
  for (std::size_t i = 0; i < 8; ++i) {
    c.expect(within(100.0 * t8[i], sfr8_row[i], 1.0),
             fmt::format("SFR-8 total circle {}/8: {:.2f}% vs {} +/-1 pp", i + 1, 100.0 * t8[i], sfr8_row[i]));
  }

  // Individual cells are informative only (the optimum may be degenerate).
  const double sfr8_cells[8][8] = {
      {0, 0, 0, 0, 0, 0, 0, 8.33},      {0, 0, 0, 0, 0, 0, 5.50, 2.83}, {0, 0, 0, 0, 0, 2.83, 5.50, 0},
      {0, 0, 0, 0, 0, 8.33, 0, 0},      {0, 0, 0, 0, 14.0, 2.65, 0, 0}, {0, 0, 0, 14.5, 2.11, 0, 0, 0},
      {0, 0, 14.3, 2.40, 0, 0, 0, 0},   {4.52, 11.2, 0.96, 0, 0, 0, 0, 0}};
  double worst = 0.0;
  for (std::size_t n = 0; n < 8; ++n)
    for (std::size_t i = 0; i < 8; ++i) worst = std::max(worst, std::abs(100.0 * results[2].x[n][i] - sfr8_cells[n][i]));
  c.info(fmt::format("SFR-8 largest individual-cell deviation {:.2f} pp", worst));
  const auto s2 = results[1].circle_totals();
  c.info(fmt::format("SFR-2 edge share {:.2f}% (reference 18.0)", 100.0 * s2[7]));
  return c;
}

Check harmonic_oracle(const Env& env) {
  Check c;
  const Scheme s = make_reuse1();
  const EfficiencyMatrix eff = efficiency_matrix(env.params, env.layout, s, env.circles);
  const AllocationResult r = solve_equal_rate(s, eff);
  double inv = 0.0;
  for (double e : eff.eta[0]) inv += 1.0 / e;
  const double closed = 1.0 / inv;
  const double rel = std::abs(r.common_rate - closed) / closed;
  c.expect(rel <= 1e-9, fmt::format("LP R {:.12f} vs 1/sum(1/eta) {:.12f}, rel {:.2e} <= 1e-9", r.common_rate, closed, rel));
  return c;
}

Check properties(const Env& env) {
  Check c;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Scheme structure: ordering chain, caps, pairing.
  int scheme_failures = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(unit(rng) * 10);
    const Scheme s = make_mlsfr(n, -40.0 * unit(rng));
    try {
      s.validate();
    } catch (const std::exception&) {
      ++scheme_failures;
      continue;
    }
    double caps = 0.0;
    for (const Level& lv : s.levels) caps += lv.bandwidth_cap;
    const auto bands = s.sub_bands();
    bool chain = true;
    for (std::size_t m = 0; m + 1 < bands.size(); ++m) {
      chain = chain && bands[m].secondary_gain_db <= bands[m + 1].secondary_gain_db &&
              bands[m + 1].primary_gain_db <= bands[m].primary_gain_db;
    }
    chain = chain && bands.back().secondary_gain_db <= bands.back().primary_gain_db;
    bool involution = true;
    for (const Level& lv : s.levels) {
      const Level& p = s.level(lv.partner_index);
      involution = involution && p.partner_index == lv.index && p.role != lv.role;
    }
    if (std::abs(caps - 1.0) > 1e-12 || !chain || !involution) ++scheme_failures;
  }
  c.expect(scheme_failures == 0, fmt::format("200 random schemes: ordering chain, caps sum to 1, partner involution ({} failures)", scheme_failures));

  // Efficiency monotone in gamma and beta0.
  int mono_failures = 0;
  for (int t = 0; t < 300; ++t) {
    const double b = 0.02 + 0.96 * unit(rng);
    const double g = -30.0 * unit(rng);
    const CellDistances d = distances(env.layout, b);
    const double eta = spectral_efficiency(env.params, {0, g, 0}, d);
    if (!(spectral_efficiency(env.params, {0, g / 2 - 0.01, 0}, d) < eta)) ++mono_failures;
    if (!(spectral_efficiency(env.params, {0, g, 0}, distances(env.layout, b + 0.02)) < eta)) ++mono_failures;
  }
  c.expect(mono_failures == 0, fmt::format("efficiency strictly decreasing in gamma and beta0 over 300 draws ({} failures)", mono_failures));

  // LP residuals.
  double worst_cap = 0.0;
  double worst_rate = 0.0;
  for (const Scheme& s : {make_reuse1(), make_sfr2(-6.0), make_mlsfr(4, -17.0), make_mlsfr(6, -24.0)}) {
    const EfficiencyMatrix eff = efficiency_matrix(env.params, env.layout, s, env.circles);
    const AllocationResult r = solve_equal_rate(s, eff);
    const auto totals = r.level_totals();
    for (std::size_t n = 0; n < s.size(); ++n) {
      worst_cap = std::max(worst_cap, totals[n] - s.level(n + 1).bandwidth_cap);
      for (double v : r.x[n]) worst_cap = std::max(worst_cap, -v);
    }
    for (std::size_t i = 0; i < env.circles.size(); ++i) {
      double rate = 0.0;
      for (std::size_t n = 0; n < s.size(); ++n) rate += r.x[n][i] * eff.eta[n][i];
      worst_rate = std::max(worst_rate, std::abs(rate - r.common_rate));
    }
  }
  c.expect(worst_cap <= 1e-9 && worst_rate <= 1e-9,
           fmt::format("LP residuals: cap {:.2e}, equal-rate {:.2e} (<= 1e-9)", worst_cap, worst_rate));

  // Greedy allocator respects coverage and caps.
  int greedy_failures = 0;
  for (int t = 0; t < 200; ++t) {
    const Scheme s = make_mlsfr(1 + static_cast<std::size_t>(unit(rng) * 6), -20.0);
    const double margin = 0.3 + 2.0 * unit(rng);
    std::vector<AllocationRequest> reqs(1 + static_cast<std::size_t>(unit(rng) * 30));
    for (auto& r : reqs) r = {0.01 + 0.99 * unit(rng), 0.001 + 0.2 * unit(rng)};
    const GreedyResult g = greedy_allocate(reqs, s, margin);
    std::vector<double> used(s.size(), 0.0);
    for (std::size_t u = 0; u < reqs.size(); ++u) {
      if (!g.grants[u].level) continue;
      const std::size_t lv = *g.grants[u].level;
      if (coverage_beta(s, lv, margin) < reqs[u].beta0) ++greedy_failures;
      used[lv - 1] += reqs[u].demand;
    }
    for (std::size_t n = 0; n < s.size(); ++n) {
      if (used[n] > s.level(n + 1).bandwidth_cap + 1e-9) ++greedy_failures;
    }
  }
  c.expect(greedy_failures == 0, fmt::format("200 random first-fit runs respect coverage and caps ({} failures)", greedy_failures));

  // Pairing prefers the assortative pattern.
  int pairing_failures = 0;
  int trials = 0;
  while (trials < 200) {
    double a1 = 0.02 + 0.98 * unit(rng), a2 = 0.02 + 0.98 * unit(rng);
    double c1 = 0.02 + 0.98 * unit(rng), c2 = 0.02 + 0.98 * unit(rng);
    if (std::abs(a1 - a2) < 1e-3 || std::abs(c1 - c2) < 1e-3) continue;
    if (a1 > a2) std::swap(a1, a2);
    if (c1 > c2) std::swap(c1, c2);
    ++trials;
    const PairingComparison cmp = evaluate_pairings({a1, a2}, {c1, c2}, env.params, env.layout);
    if (cmp.better != PairingChoice::switched) ++pairing_failures;
  }
  c.expect(pairing_failures == 0,
           fmt::format("200 random separated instances pick the assortative pairing ({} failures)", pairing_failures));
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check determinism(const std::string& cli) {
  Check c;
  const Scenario s;
  const std::string a = run_table4(s, OutputFormat::json);
  const std::string b = run_table4(s, OutputFormat::json);
  c.expect(a == b && !a.empty(), "in-process table4 runs are byte-identical");

  if (cli.empty()) {
    c.info("CLI path not given; separate-process check skipped");
    return c;
  }
  const std::string out1 = "acceptance_table4_run1.json";
  const std::string out2 = "acceptance_table4_run2.json";
  const int rc1 = std::system(fmt::format("\"{}\" table4 --out {}", cli, out1).c_str());
  const int rc2 = std::system(fmt::format("\"{}\" table4 --out {}", cli, out2).c_str());
  const std::string f1 = slurp(out1);
  const std::string f2 = slurp(out2);
  c.expect(rc1 == 0 && rc2 == 0, "both CLI runs exit 0");
  c.expect(!f1.empty() && f1 == f2, fmt::format("two CLI table4 runs byte-identical ({} bytes)", f1.size()));
  c.expect(f1 == a, "CLI output equals the in-process report");
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const Env env;

  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 edge spectrum efficiency", [&] { return edge_efficiency(env); }},
      {"2 gamma design", [&] { return gamma_design(env); }},
      {"3 SFR-8 gain table", [&] { return table3(env); }},
      {"4 equal-rate allocation and overall efficiency", [&] { return table4(env); }},
      {"5 reuse-1 LP vs harmonic-mean closed form", [&] { return harmonic_oracle(env); }},
      {"6 property suites", [&] { return properties(env); }},
      {"7 determinism of table4", [&] { return determinism(cli); }},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Check result;
    try {
      result = crit.run();
    } catch (const std::exception& e) {
      result.expect(false, fmt::format("threw: {}", e.what()));
    }
    fmt::print("[{}] criterion {}\n", result.ok ? "PASS" : "FAIL", crit.name);
    for (const auto& note : result.notes) fmt::print("{}\n", note);
    failed += result.ok ? 0 : 1;
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
