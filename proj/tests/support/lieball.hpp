#pragma once

#include "so2n/sampling.hpp"
#include "support/generators.hpp"

namespace so2n::testing {

using namespace so2n::sampling;

}  // namespace so2n::testing
