#include "opgraph/report.hpp"

#include "opgraph/matrix.hpp"

namespace opgraph {

ojson Report::to_json() const {
  ojson j;
  j["check"] = check;
  j["parameters"] = parameters;
  ojson res = ojson::object();
  for (const auto& [name, value] : residuals) res[name] = value;
  j["residuals"] = res;
  j["tables"] = tables;
  j["pass"] = pass;
  j["runtime_ms"] = runtime_ms;
  return j;
}

Report Report::from_json(const ojson& j) {
  Report r;
  try {
    r.check = j.at("check").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& [name, value] : j.at("residuals").items())
      r.residuals[name] = value.get<double>();
    r.tables = j.at("tables");
    r.pass = j.at("pass").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Report: ") + e.what());
  }
  return r;
}

}  // namespace opgraph
