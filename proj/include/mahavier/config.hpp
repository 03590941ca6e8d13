#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mahavier/relation.hpp"
#include "mahavier/scalar.hpp"

namespace mahavier {

/// A named relation as stored in a config document.
struct RelationDoc {
  std::string name;
  Relation relation;
};

namespace detail {

inline Scalar json_scalar(const nlohmann::json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number_float()) return parse_scalar(j.dump());
  throw ParseError("expected a rational literal, got " + j.dump());
}

inline Point json_point(const nlohmann::json& j, std::size_t arity) {
  if (!j.is_array()) throw ParseError("expected a coordinate tuple, got " + j.dump());
  Point p;
  for (const auto& x : j) p.push_back(json_scalar(x));
  if (p.size() != arity) {
    throw ParseError("tuple " + j.dump() + " has " + std::to_string(p.size()) + " coordinates, arity is " +
                     std::to_string(arity));
  }
  return p;
}

inline nlohmann::json point_json(const Point& p) {
  auto a = nlohmann::json::array();
  for (const auto& x : p) a.push_back(to_literal(x));
  return a;
}

inline nlohmann::json atom_json(const Atom& atom, std::size_t arity) {
  nlohmann::json j;
  j["arity"] = arity;
  if (const auto* ps = std::get_if<PointSet>(&atom)) {
    j["kind"] = "points";
    j["points"] = nlohmann::json::array();
    for (const auto& p : ps->points) j["points"].push_back(point_json(p));
  } else if (const auto* ss = std::get_if<SegmentSet>(&atom)) {
    j["kind"] = "segments";
    j["segments"] = nlohmann::json::array();
    for (const auto& s : ss->segments) j["segments"].push_back(nlohmann::json::array({point_json(s.a), point_json(s.b)}));
  } else {
    j["kind"] = "region";
    j["constraints"] = nlohmann::json::array();
    for (const auto& p : std::get<ImplicitRegion>(atom).constraints) j["constraints"].push_back(p.str() + " <= 0");
  }
  return j;
}

}  // namespace detail

inline Relation relation_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("relation document must be an object");
  if (!j.contains("kind")) throw ParseError("relation document lacks 'kind'");
  if (!j.contains("arity")) throw ParseError("relation document lacks 'arity'");
  if (!j.at("kind").is_string()) throw ParseError("'kind' must be a string");
  std::string kind = j.at("kind").get<std::string>();
  if (!j.at("arity").is_number_integer() || j.at("arity").get<long>() < 2) {
    throw ParseError("'arity' must be an integer >= 2");
  }
  auto arity = static_cast<std::size_t>(j.at("arity").get<long>());
  try {
    if (kind == "points") {
      std::vector<Point> pts;
      for (const auto& p : j.value("points", nlohmann::json::array())) pts.push_back(detail::json_point(p, arity));
      std::vector<Point> sorted = pts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw ParseError("duplicate point");
      return Relation::points(arity, std::move(pts));
    }
    if (kind == "segments") {
      if (arity != 2) throw ParseError("segments need arity 2");
      std::vector<Segment> segs;
      for (const auto& s : j.at("segments")) {
        if (!s.is_array() || s.size() != 2) throw ParseError("segment must be a pair of endpoints: " + s.dump());
        segs.push_back({detail::json_point(s[0], 2), detail::json_point(s[1], 2)});
      }
      return Relation::segments(std::move(segs));
    }
    if (kind == "region") {
      std::vector<std::string> cs;
      for (const auto& c : j.at("constraints")) cs.push_back(c.get<std::string>());
      return Relation::region(arity, cs);
    }
    if (kind == "union") {
      std::vector<Relation> members;
      for (const auto& m : j.at("members")) members.push_back(relation_from_json(m));
      if (members.size() < 2) throw ParseError("union needs at least two members");
      return Relation::unite(members);
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown relation kind '" + kind + "'");
}

inline nlohmann::json relation_to_json(const Relation& g, const std::string& name = "") {
  nlohmann::json j;
  if (g.atoms().size() == 1) {
    j = detail::atom_json(g.atoms()[0], g.arity());
  } else {
    j["kind"] = "union";
    j["arity"] = g.arity();
    j["members"] = nlohmann::json::array();
    for (const auto& a : g.atoms()) j["members"].push_back(detail::atom_json(a, g.arity()));
  }
  if (!name.empty()) j["name"] = name;
  return j;
}

inline RelationDoc parse_relation_doc(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("relation config is not valid JSON: ") + e.what());
  }
  Relation g = relation_from_json(j);
  if (j.contains("name") && !j.at("name").is_string()) throw ParseError("'name' must be a string");
  return {j.value("name", std::string("unnamed")), std::move(g)};
}

inline RelationDoc load_relation_doc(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open relation config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_relation_doc(ss.str());
}

}  // namespace mahavier
