#pragma once

#include "linkforge/exact_arith.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace linkforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitIntegrity = 3;
inline constexpr int kExitGoldenMismatch = 4;

// Arguments exclude the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3^4", "2^2,4^2", "6,6" or "0" for the trivial group.
AbelianTorsionGroup parse_torsion(std::string_view text);

} // namespace linkforge::cli
