#include "addcomb/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "addcomb/errors.hpp"

namespace addcomb {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw DomainError(std::string("group field '") + key + "' must be an integer");
  }
  return j.at(key).get<std::int64_t>();
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (const char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw DomainError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw DomainError("not an integer: '" + s + "'");
  return v;
}

}  // namespace

GroupSpec group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw DomainError("group must be an object with a string 'type'");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "cyclic") return GroupSpec::cyclic(require_int(j, "modulus"));
  if (type == "window") return GroupSpec::window(require_int(j, "lo"), require_int(j, "hi"));
  if (type == "torsion") {
    return GroupSpec::torsion(require_int(j, "exponent"), static_cast<int>(require_int(j, "rank")));
  }
  throw DomainError("unknown group type '" + type + "'");
}

ordered_json group_to_json(const GroupSpec& g) {
  ordered_json j;
  switch (g.kind()) {
    case GroupKind::kCyclic:
      j["type"] = "cyclic";
      j["modulus"] = g.modulus();
      break;
    case GroupKind::kWindow:
      j["type"] = "window";
      j["lo"] = g.lo();
      j["hi"] = g.hi();
      break;
    case GroupKind::kTorsion:
      j["type"] = "torsion";
      j["exponent"] = g.exponent();
      j["rank"] = g.rank();
      break;
  }
  return j;
}

GSet instance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("elements")) {
    throw DomainError("instance must have 'group' and 'elements'");
  }
  const GroupSpec group = group_from_json(j.at("group"));
  const json& elems = j.at("elements");
  if (!elems.is_array()) throw DomainError("'elements' must be an array");
  std::vector<Code> codes;
  codes.reserve(elems.size());
  for (const json& e : elems) {
    std::vector<std::int64_t> coords;
    if (e.is_number_integer()) {
      coords.push_back(e.get<std::int64_t>());
    } else if (e.is_array()) {
      for (const json& c : e) {
        if (!c.is_number_integer()) throw DomainError("element coordinates must be integers");
        coords.push_back(c.get<std::int64_t>());
      }
    } else {
      throw DomainError("element must be an integer or an integer array");
    }
    codes.push_back(group.encode(coords));
  }
  return GSet(group, std::move(codes));
}

ordered_json element_to_json(const GroupSpec& g, Code code) {
  if (!g.is_torsion()) return code;
  return g.element(code).coordinates;
}

ordered_json elements_to_json(const GSet& set) {
  ordered_json arr = ordered_json::array();
  for (const Code c : set) arr.push_back(element_to_json(set.group(), c));
  return arr;
}

ordered_json instance_to_json(const GSet& set) {
  ordered_json j;
  j["group"] = group_to_json(set.group());
  j["elements"] = elements_to_json(set);
  return j;
}

GSet read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DomainError("malformed instance file " + path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void write_instance_file(const std::filesystem::path& path, const GSet& set) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write instance file " + path.string());
  out << instance_to_json(set).dump(2) << '\n';
}

GroupSpec parse_group_text(std::string_view text) {
  if (!text.empty() && text.front() == '{') {
    try {
      return group_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed group JSON: ") + e.what());
    }
  }
  const auto parts = split(text, ':');
  const std::string& kind = parts[0];
  if (kind == "cyclic" && parts.size() == 2) return GroupSpec::cyclic(parse_int(parts[1]));
  if (kind == "window" && parts.size() == 3) return GroupSpec::window(parse_int(parts[1]), parse_int(parts[2]));
  if (kind == "torsion" && parts.size() == 3) {
    return GroupSpec::torsion(parse_int(parts[1]), static_cast<int>(parse_int(parts[2])));
  }
  throw DomainError("group must be JSON or one of cyclic:N, window:LO:HI, torsion:R:N (got '" +
                    std::string(text) + "')");
}

GSet parse_elements_text(const GroupSpec& group, std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw DomainError(std::string("malformed elements JSON: ") + e.what());
    }
    return instance_from_json(json{{"group", json::parse(group_to_json(group).dump())}, {"elements", j}});
  }
  std::vector<Code> codes;
  if (text.find_first_not_of(" ") == std::string_view::npos) return GSet::empty_in(group);
  for (const std::string& item : split(text, ',')) {
    std::vector<std::int64_t> coords;
    for (const std::string& c : split(item, '.')) coords.push_back(parse_int(c));
    codes.push_back(group.encode(coords));
  }
  return GSet(group, std::move(codes));
}

}  // namespace addcomb
