#pragma once
#include <string>

#include "gtt/ast.hpp"

namespace gtt {

// Parses the surface syntax produced by print_sentence. Throws InputError
// with a position on malformed input.
NodeId parse_sentence(Store& st, const std::string& text);

}  // namespace gtt
