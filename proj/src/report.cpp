#include "pbwlab/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pbwlab {

CheckRecord CheckRecord::checked(
    std::string name, std::vector<std::pair<std::string, std::string>> params,
    std::string expected, std::string actual, bool ok) {
  CheckRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = ok ? "pass" : "fail";
  r.expected = std::move(expected);
  r.actual = std::move(actual);
  r.provenance = "fixed";
  return r;
}

CheckRecord CheckRecord::derived(
    std::string name, std::vector<std::pair<std::string, std::string>> params,
    std::string actual, std::string reference) {
  CheckRecord r;
  r.name = std::move(name);
  r.params = std::move(params);
  r.status = "derived";
  r.expected = std::move(reference);
  r.actual = std::move(actual);
  r.provenance = "derived";
  return r;
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names = {
      "algebra-sanity",   "siegel-recovery", "delta-eigen",
      "cofactor",         "center-projection", "jacobi-maps",
      "jacobi-recovery",  "bol-extension"};
  return names;
}

void SuiteConfig::validate() const {
  const auto& names = known_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw ConfigError("unknown suite: " + suite);
  if (n < 1 || n > 4) throw ConfigError("n out of range [1,4]");
  if (j < 1 || j > 3) throw ConfigError("j out of range [1,3]");
  if (n_min < 1 || n_min > n || j_min < 1 || j_min > j)
    throw ConfigError("bad n_min/j_min");
  if (r_max < 0 || m_max < 0 || l_max < 1) throw ConfigError("bad range bounds");
  bool needs_index = suite == "jacobi-maps" || suite == "jacobi-recovery" ||
                     suite == "bol-extension";
  if (needs_index && index.rows() > 0) {
    if (index.rows() != index.cols())
      throw ConfigError("index matrix must be square");
    if (!(index == index.transposed()))
      throw ConfigError("index matrix must be symmetric");
    if (mat_det(index).is_zero())
      throw ConfigError("index matrix must be invertible: det M = 0");
    for (int r = 0; r < index.rows(); ++r)
      for (int c = 0; c < index.cols(); ++c)
        if (!index.at(r, c).is_constant())
          throw ConfigError("index matrix entries must be rational");
  }
}

namespace {

nlohmann::ordered_json record_json(const CheckRecord& r) {
  nlohmann::ordered_json doc;
  doc["name"] = r.name;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (auto& [k, v] : r.params) params[k] = v;
  doc["params"] = params;
  doc["status"] = r.status;
  nlohmann::ordered_json expected;
  expected["value"] = r.expected;
  expected["provenance"] = r.provenance;
  doc["expected"] = expected;
  doc["actual"] = r.actual;
  return doc;
}

std::string params_str(const CheckRecord& r) {
  std::string out;
  for (auto& [k, v] : r.params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v;
  }
  return out;
}

nlohmann::ordered_json config_json(const SuiteConfig& cfg) {
  nlohmann::ordered_json p;
  p["n"] = cfg.n;
  p["j"] = cfg.j;
  p["r_max"] = cfg.r_max;
  p["m_max"] = cfg.m_max;
  p["l_max"] = cfg.l_max;
  if (cfg.index.rows() > 0) {
    std::string text;
    for (int r = 0; r < cfg.index.rows(); ++r) {
      if (r) text += ";";
      for (int c = 0; c < cfg.index.cols(); ++c) {
        if (c) text += ",";
        text += cfg.index.at(r, c).str();
      }
    }
    p["index"] = text;
  }
  p["symbolic_k"] = cfg.symbolic_k;
  p["derive"] = cfg.derive;
  return p;
}

}  // namespace

std::string render_json(const RunResult& result) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& suite : result.suites) {
    nlohmann::ordered_json s;
    s["suite"] = suite.config.suite;
    s["params"] = config_json(suite.config);
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    int pass = 0, fail = 0, derived = 0;
    for (const auto& r : suite.records) {
      checks.push_back(record_json(r));
      if (r.status == "pass") ++pass;
      if (r.status == "fail") ++fail;
      if (r.status == "derived") ++derived;
    }
    s["checks"] = checks;
    nlohmann::ordered_json summary;
    summary["pass"] = pass;
    summary["fail"] = fail;
    summary["derived"] = derived;
    s["summary"] = summary;
    doc.push_back(s);
  }
  return doc.dump(2) + "\n";
}

std::string render_markdown(const RunResult& result) {
  std::ostringstream out;
  out << "# Verification report\n";
  for (const auto& suite : result.suites) {
    int pass = 0, fail = 0, derived = 0;
    for (const auto& r : suite.records) {
      if (r.status == "pass") ++pass;
      if (r.status == "fail") ++fail;
      if (r.status == "derived") ++derived;
    }
    out << "\n## " << suite.config.suite << "\n\n";
    out << "summary: " << pass << " pass, " << fail << " fail, " << derived
        << " derived\n\n";
    out << "| check | params | status | expected | actual |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& r : suite.records) {
      auto esc = [](std::string s) {
        std::string t;
        for (char c : s) {
          if (c == '|') t += "\\|";
          else if (c == '\n') t += ' ';
          else t += c;
        }
        return t;
      };
      out << "| " << esc(r.name) << " | " << esc(params_str(r)) << " | "
          << r.status << " | " << esc(r.expected) << " | " << esc(r.actual)
          << " |\n";
    }
  }
  return out.str();
}

std::string render_timing(const RunResult& result) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& suite : result.suites) {
    nlohmann::ordered_json s;
    s["suite"] = suite.config.suite;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : suite.records) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["params"] = params_str(r);
      c["elapsed_ms"] = r.elapsed_ms;
      checks.push_back(c);
    }
    s["checks"] = checks;
    doc.push_back(s);
  }
  return doc.dump(2) + "\n";
}

int exit_code(const RunResult& result) { return result.fail > 0 ? 1 : 0; }

Mat<Scalar> parse_index_matrix(const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Scalar> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) entries.push_back(Scalar::parse(cell));
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw ConfigError("empty index matrix");
  size_t cols = rows[0].size();
  for (auto& r : rows)
    if (r.size() != cols) throw ConfigError("ragged index matrix");
  Mat<Scalar> m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

namespace {

SuiteConfig suite_from_json(const nlohmann::json& doc) {
  SuiteConfig cfg;
  if (!doc.contains("suite")) throw ConfigError("config entry lacks \"suite\"");
  cfg.suite = doc.at("suite").get<std::string>();
  if (doc.contains("n")) cfg.n = doc.at("n").get<int>();
  if (doc.contains("j")) cfg.j = doc.at("j").get<int>();
  if (doc.contains("n_min")) cfg.n_min = doc.at("n_min").get<int>();
  if (doc.contains("j_min")) cfg.j_min = doc.at("j_min").get<int>();
  if (doc.contains("r_max")) cfg.r_max = doc.at("r_max").get<int>();
  if (doc.contains("m_max")) cfg.m_max = doc.at("m_max").get<int>();
  if (doc.contains("l_max")) cfg.l_max = doc.at("l_max").get<int>();
  if (doc.contains("symbolic_k")) cfg.symbolic_k = doc.at("symbolic_k").get<bool>();
  if (doc.contains("derive")) cfg.derive = doc.at("derive").get<bool>();
  if (doc.contains("index")) {
    if (doc.at("index").is_string()) {
      cfg.index = parse_index_matrix(doc.at("index").get<std::string>());
    } else {
      std::string text;
      for (const auto& row : doc.at("index")) {
        if (!text.empty()) text += ";";
        std::string rt;
        for (const auto& cell : row) {
          if (!rt.empty()) rt += ",";
          if (cell.is_number_integer())
            rt += std::to_string(cell.get<long>());
          else
            rt += cell.get<std::string>();
        }
        text += rt;
      }
      cfg.index = parse_index_matrix(text);
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace

RunConfig parse_config_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  RunConfig cfg;
  if (doc.contains("jobs")) cfg.jobs = doc.at("jobs").get<int>();
  if (doc.contains("out")) cfg.out = doc.at("out").get<std::string>();
  if (doc.contains("suites")) {
    for (const auto& entry : doc.at("suites")) cfg.suites.push_back(suite_from_json(entry));
  } else if (doc.contains("suite")) {
    cfg.suites.push_back(suite_from_json(doc));
  } else {
    throw ConfigError("config needs \"suite\" or \"suites\"");
  }
  if (cfg.jobs < 1) throw ConfigError("jobs must be positive");
  return cfg;
}

}  // namespace pbwlab
