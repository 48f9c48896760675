#pragma once

#include <string>

#include "hypertile/polygon.hpp"

namespace hypertile {

/// {"model": "hyperboloid", "vertices": [[x0, x1, x2], ...]} with
/// round-trip precision.
std::string polygon_to_json(const Polygon& p);

/// Throws DataError for malformed documents and DomainError for vertices
/// off the hyperboloid or coincident consecutive vertices.
Polygon polygon_from_json(const std::string& text);

}  // namespace hypertile
