#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pbwlab/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pbwlab::ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pbwlab::Error("cannot write " + path);
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pbwlab;

  std::string suite_names;
  for (const auto& s : known_suites()) {
    if (!suite_names.empty()) suite_names += ", ";
    suite_names += s;
  }

  CLI::App app{
      "pbwlab: exact verification of symplectic and Jacobi enveloping-algebra "
      "identities (recovery scans, center projections, transfer maps, heat "
      "operators)"};
  std::string config_path, suite, index_text, out_path;
  int n = -1, j = -1, r_max = -1, m_max = -1, l_max = -1, jobs = -1;
  bool symbolic = false, derive = false;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--suite", suite, "suite to run: " + suite_names);
  app.add_option("--n", n, "largest symplectic rank n");
  app.add_option("--j", j, "largest Heisenberg size j");
  app.add_option("--r-max", r_max, "largest critical exponent r");
  app.add_option("--m-max", m_max, "largest raising power in scans");
  app.add_option("--l-max", l_max, "largest heat-operator power");
  app.add_option("--index", index_text,
                 "index matrix, rows separated by ';' (example: \"2,1;1,1\")");
  app.add_flag("--symbolic-k", symbolic, "run scans at the symbolic weight k");
  app.add_flag("--derive", derive, "record machine-derived constants");
  app.add_option("--jobs", jobs, "suites run in parallel");
  app.add_option("--out", out_path,
                 "base path for report files (.json, .md, .timing.json)");
  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = parse_config_json(read_file(config_path));
    if (!suite.empty()) {
      SuiteConfig sc;
      sc.suite = suite;
      cfg.suites = {sc};
    }
    if (cfg.suites.empty())
      throw ConfigError("no suite selected; pass --suite or --config");
    for (auto& sc : cfg.suites) {
      if (n >= 0) sc.n = n;
      if (j >= 0) sc.j = j;
      if (r_max >= 0) sc.r_max = r_max;
      if (m_max >= 0) sc.m_max = m_max;
      if (l_max >= 0) sc.l_max = l_max;
      if (symbolic) sc.symbolic_k = true;
      if (derive) sc.derive = true;
      if (!index_text.empty()) sc.index = parse_index_matrix(index_text);
      sc.validate();
    }
    if (jobs > 0) cfg.jobs = jobs;
    if (!out_path.empty()) cfg.out = out_path;

    RunResult result = run_all(cfg);
    if (!cfg.out.empty()) {
      write_file(cfg.out + ".json", render_json(result));
      write_file(cfg.out + ".md", render_markdown(result));
      write_file(cfg.out + ".timing.json", render_timing(result));
    } else {
      std::cout << render_markdown(result);
    }
    std::cout << "pass=" << result.pass << " fail=" << result.fail
              << " derived=" << result.derived << "\n";
    return exit_code(result);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
