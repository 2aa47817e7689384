#pragma once
#include <string>

#include "gtt/ast.hpp"

namespace gtt {

// Surface syntax. parse(print(n)) interns the same node.
std::string print_sentence(const Store& st, NodeId n);

}  // namespace gtt
