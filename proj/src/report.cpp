#include "dpstab/report.hpp"

#include <iomanip>
#include <sstream>

namespace dpstab {

std::uint64_t fnv64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv64_hex(const std::string& data) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv64(data);
  return os.str();
}

Json make_report(const std::string& command, const std::string& input_bytes, Json payload) {
  Json r;
  r["command"] = command;
  r["engine_version"] = kEngineVersion;
  r["input_hash"] = fnv64_hex(input_bytes);
  r["result"] = std::move(payload);
  return r;
}

}  // namespace dpstab
