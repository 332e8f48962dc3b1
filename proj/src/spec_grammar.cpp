#include "spec_grammar.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace envelopes::detail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

SpecArgs SpecArgs::parse(std::string_view text) {
  SpecArgs args;
  text = trim(text);
  const auto colon = text.find(':');
  args.name = std::string(trim(text.substr(0, colon)));
  if (args.name.empty()) {
    throw std::invalid_argument("spec: empty name in '" + std::string(text) +
                                "'");
  }
  if (colon == std::string_view::npos) return args;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    const auto eq = item.find('=');
    if (item.empty() || eq == std::string_view::npos || eq == 0) {
      throw std::invalid_argument("spec: expected key=value, got '" +
                                  std::string(item) + "'");
    }
    args.pairs.emplace_back(std::string(trim(item.substr(0, eq))),
                            std::string(trim(item.substr(eq + 1))));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return args;
}

double SpecArgs::number(const std::string& key) const {
  const auto value = optional_number(key);
  if (!value) {
    throw std::invalid_argument("spec '" + name + "': missing key '" + key +
                                "'");
  }
  return *value;
}

std::optional<double> SpecArgs::optional_number(const std::string& key) const {
  for (const auto& [k, v] : pairs) {
    if (k != key) continue;
    char* end = nullptr;
    const double parsed = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') {
      throw std::invalid_argument("spec '" + name + "': key '" + key +
                                  "' has non-numeric value '" + v + "'");
    }
    return parsed;
  }
  return std::nullopt;
}

void SpecArgs::allow_only(std::initializer_list<const char*> keys) const {
  for (const auto& [k, v] : pairs) {
    const bool known =
        std::any_of(keys.begin(), keys.end(),
                    [&k](const char* allowed) { return k == allowed; });
    if (!known) {
      throw std::invalid_argument("spec '" + name + "': unknown key '" + k +
                                  "'");
    }
  }
}

}  // namespace envelopes::detail
