#pragma once

#include <string>

namespace forman {

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace forman
