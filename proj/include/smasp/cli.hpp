#pragma once

#include "smasp/format.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace smasp {

// Exit codes of `solve`; other commands exit with 0 on success.
inline constexpr int kExitModel = 10;
inline constexpr int kExitUnsat = 20;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitSelfCheck = 3;

// Target of `translate --to`: cl, comp, edcomp, pi (pcid input only) or open.
std::string translate_input(InputFormat format, std::string_view text, std::string_view to);

// `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace smasp
