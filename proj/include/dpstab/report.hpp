#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

namespace dpstab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

std::uint64_t fnv64(const std::string& data);
std::string fnv64_hex(const std::string& data);

// Wraps a command payload with the engine version and the input hash.
Json make_report(const std::string& command, const std::string& input_bytes, Json payload);

}  // namespace dpstab
