#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homsurf/actions.hpp"

namespace homsurf {

inline const std::string kUnspecifiedStabilizer = "unspecified-in-paper";

struct CatalogueRow {
  std::string label;
  Family family;
  std::string parent;  // empty for a base action, else the row it is a quotient of
  std::string surface;
  std::string group;
  std::string stabilizer;
  std::string constraints;
  std::string parameters;
  std::string quotient_policy;  // "none", "policy" or "quotient"
  std::string topic;
};

const std::vector<CatalogueRow>& catalogue();
// Rows whose label starts with the prefix, in table order.
std::vector<CatalogueRow> enumerate_catalogue(const std::optional<std::string>& prefix = std::nullopt);

}  // namespace homsurf
