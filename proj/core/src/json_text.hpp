#pragma once

#include <string>

#include <json.hpp>

namespace lockcert::detail {

// Pretty-prints with two-space indentation, scalar arrays on one line, and
// doubles at 17 significant digits. Non-finite doubles become null.
std::string to_text(const nlohmann::ordered_json& value);

}  // namespace lockcert::detail
