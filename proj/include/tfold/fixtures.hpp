#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tfold/riemann_roch.hpp"

namespace tfold {

// Built-in dataset "chen-delta18": the minimal 3-fold of general type with
// chi(O) = 2, q = 0, p_g = 0, P_2 = 0, basket
//   { 4x(1,2), 3x(1,3), 2x(1,4), (2,5), (4,9), (5,13) }
// and K^3 = 1/1170. Its pluricanonical section index is 18, and it is the
// extremal profile the bound analysis in this library is built around.
ThreefoldData chen_delta18();

ThreefoldData fixture_by_name(std::string_view name);  // DataError on unknown
std::vector<std::string> fixture_names();

}  // namespace tfold
