#pragma once

#include <string>
#include <vector>

#include "coxkit/fan.hpp"

namespace coxkit {

/// Standard Hirzebruch fan F_a: rays (-1,a), (0,1), (1,0), (0,-1).
Fan hirzebruch(long long a);

/// Names of the bundled fans, in a fixed order: point, projective spaces,
/// products, Hirzebruch surfaces, del Pezzo blow-ups of P2, blow-ups of P3
/// (one point, two points, one line), and del Pezzo x P1 products.
const std::vector<std::string>& fixture_names();

bool has_fixture(const std::string& name);

/// Returns the named bundled fan; throws std::out_of_range on unknown names.
Fan fixture(const std::string& name);

}  // namespace coxkit
