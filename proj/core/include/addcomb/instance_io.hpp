#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "addcomb/gset.hpp"

namespace addcomb {

// Instance documents:
//   {"group": {"type":"cyclic","modulus":N}
//           | {"type":"window","lo":a,"hi":b}
//           | {"type":"torsion","exponent":r,"rank":n},
//    "elements": [ints] | [[n ints], ...]}
// Serialization writes elements in canonical (ascending / lexicographic)
// order.

GroupSpec group_from_json(const nlohmann::json& j);
nlohmann::ordered_json group_to_json(const GroupSpec& g);

GSet instance_from_json(const nlohmann::json& j);
nlohmann::ordered_json instance_to_json(const GSet& set);

nlohmann::ordered_json element_to_json(const GroupSpec& g, Code code);
nlohmann::ordered_json elements_to_json(const GSet& set);

GSet read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const GSet& set);

// Command-line shorthand: either a JSON object, or "cyclic:N",
// "window:LO:HI", "torsion:R:N".
GroupSpec parse_group_text(std::string_view text);

// Either a JSON array, or comma separated integers ("0,1,3"). Torsion
// elements may also be written as "1.0.1" tuples separated by commas.
GSet parse_elements_text(const GroupSpec& group, std::string_view text);

}  // namespace addcomb
