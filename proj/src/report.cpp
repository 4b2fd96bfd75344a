#include <hilb/errors.hpp>
#include <hilb/report.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace hilb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

IdealInputFile parse_ideal_file(std::string_view text, MonomialOrder order) {
  static const std::regex deg_re(R"(deg\s+([A-Za-z][A-Za-z0-9_]*)\s*=\s*\(([^)]*)\))");
  std::vector<std::string> vars;
  std::map<std::string, MultiDegree> degrees;
  std::vector<std::pair<std::size_t, std::string>> gens;  // (line, text)
  std::vector<std::size_t> gen_offsets;

  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    const std::size_t nl = text.find('\n', offset);
    std::string_view raw = text.substr(offset, nl == std::string_view::npos ? std::string_view::npos : nl - offset);
    ++line_no;
    const std::size_t line_start = offset;
    offset = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (line.rfind("vars:", 0) == 0) {
      if (!vars.empty()) throw ParseError(line_start, where + "duplicate 'vars:' line");
      std::istringstream in(line.substr(5));
      for (std::string v; in >> v;) vars.push_back(v);
      if (vars.empty()) throw ParseError(line_start, where + "'vars:' lists no variables");
    } else if (line.rfind("deg", 0) == 0) {
      std::smatch m;
      if (!std::regex_match(line, m, deg_re)) throw ParseError(line_start, where + "expected 'deg <var> = (d1, ...)'");
      MultiDegree d;
      std::istringstream in(m[2].str());
      for (std::string item; std::getline(in, item, ',');) {
        const std::string t = trim(item);
        try {
          std::size_t used = 0;
          d.push_back(std::stol(t, &used));
          if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
          throw ParseError(line_start, where + "degree entries must be integers");
        }
      }
      if (!degrees.emplace(m[1].str(), std::move(d)).second) {
        throw ParseError(line_start, where + "duplicate degree for '" + m[1].str() + "'");
      }
    } else if (line.rfind("gen:", 0) == 0) {
      gens.emplace_back(line_no, line.substr(4));
      gen_offsets.push_back(line_start + (raw.find("gen:") + 4));
    } else {
      throw ParseError(line_start, where + "unrecognized line '" + line + "'");
    }
  }
  if (vars.empty()) throw ParseError(0, "missing 'vars:' line");

  MultiGrading grading = MultiGrading::standard(vars.size());
  if (!degrees.empty()) {
    std::vector<MultiDegree> list;
    for (const auto& v : vars) {
      auto it = degrees.find(v);
      if (it == degrees.end()) throw InputError("grading: no degree given for variable '" + v + "'");
      list.push_back(it->second);
    }
    for (const auto& [name, d] : degrees) {
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        throw InputError("grading: degree given for unknown variable '" + name + "'");
      }
    }
    grading = MultiGrading::from_degrees(std::move(list));
  }

  IdealInputFile out;
  out.ring = Ring::make(std::move(vars), std::move(grading), std::move(order));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      out.generators.push_back(parse_polynomial(gens[i].second, out.ring));
    } catch (const ParseError& e) {
      throw ParseError(gen_offsets[i] + e.position(), "line " + std::to_string(gens[i].first) + ": " + e.message());
    }
  }
  return out;
}

IdealInputFile read_ideal_file(const std::filesystem::path& path, MonomialOrder order) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read ideal file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ideal_file(buf.str(), std::move(order));
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["colength"] = r.colength;
  j["tangent_total"] = r.tangent_total;
  Json marginal = Json::object();
  for (const auto& [w, dim] : r.weight_marginal) marginal[std::to_string(w)] = dim;
  j["weight_marginal"] = marginal;
  j["torus_weight0_dim"] = r.torus_weight0_dim;
  j["parity_violation"] = r.parity_violation;
  j["min_gen_count"] = r.min_gen_count;
  j["torus_row"] = r.torus_row;
  j["graded"] = r.graded;
  Json pieces = Json::array();
  for (const auto& [d, dim] : r.per_bidegree) pieces.push_back(Json{{"degree", d}, {"dim", dim}});
  j["per_bidegree"] = pieces;
  Json timings = Json::object();
  for (const auto& [stage, ms] : r.timings_ms) timings[stage] = ms;
  j["timings"] = timings;
  return j;
}

Json to_json(const ParityReport& r) {
  Json j;
  Json per_n = Json::object();
  std::size_t total = 0;
  for (const auto& [n, count] : r.ideals_per_n) {
    per_n[std::to_string(n)] = count;
    total += count;
  }
  j["ideals_per_n"] = per_n;
  j["total_ideals"] = total;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"generators", row.generators},
                        {"graded_dim", row.graded_dim},
                        {"taylor_dim", row.taylor_dim},
                        {"agree", row.agree},
                        {"parity_ok", row.parity_ok}});
  }
  j["rows"] = rows;
  j["all_ok"] = r.all_ok;
  return j;
}

Json to_json(const TheoryReport& r) {
  Json j;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["cases"] = cases;
  j["all_passed"] = r.all_passed();
  return j;
}

GoldenComparison compare_golden(const Json& report, const Json& golden) {
  GoldenComparison cmp;
  std::set<std::string> keys;
  for (auto it = report.begin(); it != report.end(); ++it) keys.insert(it.key());
  for (auto it = golden.begin(); it != golden.end(); ++it) keys.insert(it.key());
  for (const auto& k : keys) {
    if (k == "timings") continue;
    if (!report.contains(k) || !golden.contains(k) || report.at(k) != golden.at(k)) {
      cmp.mismatched_keys.push_back(k);
    }
  }
  cmp.equal = cmp.mismatched_keys.empty();
  return cmp;
}

GoldenComparison compare_golden_file(const Json& report, const std::filesystem::path& golden) {
  std::ifstream in(golden);
  if (!in) throw InputError("cannot read golden file '" + golden.string() + "'");
  Json g;
  try {
    g = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("golden file '" + golden.string() + "' is not valid JSON: " + e.what());
  }
  return compare_golden(report, g);
}

}  // namespace hilb
