#pragma once

// Internal helper for the "name:key=value,key=value" mini-grammar shared by
// strategy and organizer spec strings.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace envelopes::detail {

struct SpecArgs {
  std::string name;
  std::vector<std::pair<std::string, std::string>> pairs;

  /// Splits "name" or "name:k=v,k=v". Throws std::invalid_argument on
  /// malformed input, naming the offending token.
  static SpecArgs parse(std::string_view text);

  /// Required numeric argument; throws if missing or not a number.
  double number(const std::string& key) const;

  std::optional<double> optional_number(const std::string& key) const;

  /// Rejects any key not in the allowed list.
  void allow_only(std::initializer_list<const char*> keys) const;
};

}  // namespace envelopes::detail
