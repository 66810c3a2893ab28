#include "qhom/report.hpp"

#include "qhom/error.hpp"

#include <json.hpp>

#include <cstdio>

namespace qhom {

using nlohmann::json;

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["inputs"] = json::array();
  for (const auto& in : r.inputs)
    j["inputs"].push_back({{"role", in.role}, {"name", in.name}, {"hash", in.hash}});
  j["values"] = r.values;
  j["flags"] = r.flags;
  if (r.polynomial) {
    json terms = json::array();
    for (const auto& t : r.polynomial->terms())
      terms.push_back({t.coefficient, t.s_exponent, t.t_exponent});
    j["polynomial"] = terms;
  }
  if (r.table) j["table"] = *r.table;
  if (r.colorings) j["colorings"] = *r.colorings;
  if (r.iso) j["iso"] = {{"isomorphic", r.iso->isomorphic}, {"bijection", r.iso->bijection}};
  j["messages"] = r.messages;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::FormatError, std::string("report: ") + e.what());
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& in : j.at("inputs"))
    r.inputs.push_back({in.at("role").get<std::string>(), in.at("name").get<std::string>(),
                        in.at("hash").get<std::string>()});
  r.values = j.at("values").get<std::map<std::string, std::int64_t>>();
  r.flags = j.at("flags").get<std::map<std::string, bool>>();
  if (j.contains("polynomial")) {
    TwoVariablePolynomial p;
    for (const auto& t : j["polynomial"])
      p.add_term(t.at(1).get<unsigned>(), t.at(2).get<unsigned>(), t.at(0).get<std::uint64_t>());
    r.polynomial = p;
  }
  if (j.contains("table")) r.table = j["table"].get<std::string>();
  if (j.contains("colorings"))
    r.colorings = j["colorings"].get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("iso"))
    r.iso = IsoVerdict{j["iso"].at("isomorphic").get<bool>(),
                       j["iso"].at("bijection").get<std::vector<std::uint32_t>>()};
  r.messages = j.at("messages").get<std::vector<std::string>>();
  if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
  return r;
}

}  // namespace qhom
