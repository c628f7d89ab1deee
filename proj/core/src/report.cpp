#include "polyzeta/report.hpp"

#include <algorithm>
#include <sstream>

namespace polyzeta {

bool Report::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; }));
}

double Report::max_deviation() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.deviation);
  return m;
}

void Report::add_case(nlohmann::json input, std::string lhs, std::string rhs, bool pass,
                      double deviation) {
  cases.push_back(CaseResult{std::move(input), std::move(lhs), std::move(rhs), pass, deviation});
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = suite;
  j["params"] = params;
  j["status"] = status;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : cases) {
    cs.push_back({{"input", c.input},
                  {"lhs", c.lhs},
                  {"rhs", c.rhs},
                  {"pass", c.pass},
                  {"deviation", c.deviation}});
  }
  j["cases"] = cs;
  j["summary"] = {{"total", cases.size()},
                  {"passed", passed()},
                  {"failed", cases.size() - passed()},
                  {"all_pass", all_pass()},
                  {"max_deviation", max_deviation()},
                  {"status", status}};
  return j;
}

std::string Report::summary_text() const {
  std::ostringstream os;
  for (const auto& c : cases) {
    if (!c.pass) {
      os << "  FAIL " << c.input.dump() << ": lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
    }
  }
  os << suite << ": " << passed() << "/" << cases.size() << " cases pass";
  if (status == "experiment") os << " [experiment]";
  os << " (max deviation " << max_deviation() << ")";
  return os.str();
}

}  // namespace polyzeta
