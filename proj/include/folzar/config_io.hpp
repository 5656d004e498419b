#pragma once

#include <string>

#include "folzar/surface.hpp"

namespace folzar {

struct ParsedDocument {
  CurveConfiguration config;
  AdjointParams params;
};

// Parses a configuration document. Exact fractions are written as "p/q"
// strings (bare integers allowed); floating-point literals are rejected.
// Structural problems raise input_error.
ParsedDocument parse_document(const std::string& text);
ParsedDocument load_document(const std::string& path);

}  // namespace folzar
