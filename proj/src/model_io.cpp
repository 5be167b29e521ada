#include "oscp/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace oscp {

namespace {

using nlohmann::json;

JumpLaw parse_jumps(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ModelIoError("jumps: expected an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "exponential") return JumpLaw::exponential(j.at("mu").get<double>());
  if (kind == "hyperexponential")
    return JumpLaw::hyper_exponential(j.at("p").get<std::vector<double>>(),
                                      j.at("mu").get<std::vector<double>>());
  if (kind == "erlang") return JumpLaw::erlang(j.at("n").get<int>(), j.at("mu").get<double>());
  throw ModelIoError("jumps: unknown kind \"" + kind + "\"");
}

Component parse_component(const json& j, const char* name) {
  if (!j.is_object()) throw ModelIoError(std::string(name) + ": expected an object");
  return Component(j.at("a").get<double>(), j.at("lambda").get<double>(),
                   parse_jumps(j.at("jumps")));
}

}  // namespace

OscillatingModel parse_model(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ModelIoError(std::string("model JSON parse error: ") + e.what());
  }
  try {
    return OscillatingModel(parse_component(j.at("comp1"), "comp1"),
                            parse_component(j.at("comp2"), "comp2"), j.at("b").get<double>());
  } catch (const json::exception& e) {
    throw ModelIoError(std::string("model JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ModelIoError(std::string("model validation: ") + e.what());
  }
}

OscillatingModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelIoError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace oscp
