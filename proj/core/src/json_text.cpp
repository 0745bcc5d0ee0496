#include "json_text.hpp"

#include <algorithm>
#include <cmath>

#include "lockcert/documents.hpp"

namespace lockcert::detail {
namespace {

bool is_scalar(const nlohmann::ordered_json& v) { return !v.is_object() && !v.is_array(); }

void emit(const nlohmann::ordered_json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
  switch (v.type()) {
    case nlohmann::ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    case nlohmann::ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + nlohmann::ordered_json(key).dump() + ": ";
        emit(item, depth + 1, out);
      }
      out += "\n" + pad + "}";
      return;
    }
    case nlohmann::ordered_json::value_t::array: {
      if (std::all_of(v.begin(), v.end(), is_scalar)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i > 0) out += ", ";
          emit(v[i], depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ",\n";
        out += inner;
        emit(v[i], depth + 1, out);
      }
      out += "\n" + pad + "]";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string to_text(const nlohmann::ordered_json& value) {
  std::string out;
  emit(value, 0, out);
  out += "\n";
  return out;
}

}  // namespace lockcert::detail
