// Command-line front end: reproduces the efficiency curves, the gamma design,
// the equal-rate allocation table and the allocation demos from a scenario file.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlsfr/commands.hpp"
#include "mlsfr/scenario.hpp"

namespace {

using Runner = std::function<std::string(const mlsfr::Scenario&, mlsfr::OutputFormat)>;

struct Command {
  const char* name;
  const char* help;
  const char* default_format;
  Runner run;
};

int fail(const char* kind, const std::string& message, int code) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
  return code;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output '" + path + "'");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing output '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  const Command commands[] = {
      {"fig5", "efficiency vs gamma curves (CSV)", "csv", mlsfr::run_fig5},
      {"fig6", "efficiency vs beta0 per level (CSV)", "csv", mlsfr::run_fig6},
      {"table4", "equal-rate bandwidth allocation report", "json", mlsfr::run_table4},
      {"design", "gamma design and ML-SFR gain table", "json", mlsfr::run_design},
      {"alloc", "coverage-ordered first-fit allocation", "json", mlsfr::run_alloc},
      {"pairing", "two-cell interference pattern comparison", "json", mlsfr::run_pairing},
  };

  CLI::App app{"Multi-level soft frequency reuse planner"};
  app.require_subcommand(1);

  struct Options {
    std::string scenario;
    std::string out;
    std::string format;
  };
  std::map<std::string, Options> options;
  std::map<std::string, CLI::App*> subs;
  for (const Command& cmd : commands) {
    Options& opt = options[cmd.name];
    opt.format = cmd.default_format;
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--scenario", opt.scenario, "scenario JSON file (defaults apply if omitted)");
    sub->add_option("--out", opt.out, "output path (stdout if omitted)");
    sub->add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    subs[cmd.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    for (const Command& cmd : commands) {
      if (!subs[cmd.name]->parsed()) continue;
      const Options& opt = options[cmd.name];
      const mlsfr::Scenario scenario =
          opt.scenario.empty() ? mlsfr::Scenario{} : mlsfr::load_scenario(opt.scenario);
      const std::string text = cmd.run(scenario, mlsfr::output_format_from_string(opt.format));
      write_output(opt.out.empty() ? scenario.out : opt.out, text);
    }
  } catch (const std::invalid_argument& e) {
    return fail("invalid_argument", e.what(), 1);
  } catch (const std::domain_error& e) {
    return fail("domain_error", e.what(), 1);
  } catch (const std::exception& e) {
    return fail("runtime_error", e.what(), 1);
  }
  return 0;
}
