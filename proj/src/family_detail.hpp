#pragma once

#include <cstdint>
#include <string>

namespace posetforge::detail {

// Throws SizeLimitError when `count` exceeds POSET_FORGE_CAP, or `default_cap`
// when that variable is unset.
void check_family_size(const std::string& family, std::uint64_t count, std::uint64_t default_cap);

std::uint64_t binomial(int n, int k);  // saturates at UINT64_MAX

}  // namespace posetforge::detail
