#include "posetforge/limits.hpp"

#include <cstdlib>
#include <string>

namespace posetforge {

const Limits& default_limits() {
  static const Limits limits = [] {
    Limits l;
    if (auto cap = env_element_cap()) l.isomorphism_elements = *cap;
    return l;
  }();
  return limits;
}

std::optional<std::size_t> env_element_cap() {
  const char* raw = std::getenv("POSET_FORGE_CAP");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0) return std::nullopt;
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace posetforge
