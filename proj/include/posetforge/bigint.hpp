#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace posetforge {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace posetforge
