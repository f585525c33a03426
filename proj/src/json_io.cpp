#include "mccg/json_io.hpp"

namespace mccg {

namespace {

nlohmann::json valueToJson(const ISValue& v) {
  switch (v.kind()) {
    case ISValue::Kind::Sem: return v.term().str();
    case ISValue::Kind::Inferrable: return nlohmann::json{{"inferrable", true}};
    case ISValue::Kind::Nested: return isToJson(v.node());
  }
  return nullptr;
}

ISValue valueFromJson(const nlohmann::json& j) {
  if (j.is_string()) return ISValue::sem(parseGroundTerm(j.get<std::string>()));
  if (j.is_object() && j.contains("inferrable")) return ISValue::inferrable();
  if (j.is_object() && j.contains("topic")) return ISValue::nested(isFromJson(j));
  throw Error("malformed IS value in JSON: " + j.dump());
}

}  // namespace

nlohmann::json isToJson(const ISNode& node) {
  nlohmann::json ground = nlohmann::json::array();
  for (const auto& g : node.ground) ground.push_back(valueToJson(g));
  return nlohmann::json{
      {"topic", valueToJson(node.topic)},
      {"comment", {{"focus", valueToJson(node.focus)}, {"ground", ground}}}};
}

ISNode isFromJson(const nlohmann::json& j) {
  ISNode node;
  node.topic = valueFromJson(j.at("topic"));
  const auto& comment = j.at("comment");
  node.focus = valueFromJson(comment.at("focus"));
  for (const auto& g : comment.at("ground")) node.ground.push_back(valueFromJson(g));
  return node;
}

nlohmann::json resultToJson(const ParseResult& r) {
  nlohmann::json j{{"as", r.as.str()}};
  if (r.is) j["is"] = isToJson(*r.is);
  return j;
}

ParseResult resultFromJson(const nlohmann::json& j) {
  ParseResult r;
  r.as = parseGroundTerm(j.at("as").get<std::string>());
  if (j.contains("is")) r.is = isFromJson(j.at("is"));
  return r;
}

}  // namespace mccg
