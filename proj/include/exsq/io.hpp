#pragma once

#include <string>
#include <string_view>

#include "exsq/chain.hpp"

namespace exsq {

/// {"n":..., "roots":[...], "certificates":[...], "s":"...", "reduced":...}
/// with every big integer as a decimal string. Single line.
std::string to_json(const SquareSystem& sys);

/// Accepts the to_json layout; integers may be strings or JSON numbers, and
/// certificates, s and reduced are optional. Throws ParseError.
SquareSystem system_from_json(std::string_view text);

}  // namespace exsq
