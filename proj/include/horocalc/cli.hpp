#ifndef HOROCALC_CLI_HPP
#define HOROCALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "horocalc/dynamics.hpp"

namespace horocalc {

namespace exit_code {
constexpr int ok = 0;
constexpr int failure = 1;
constexpr int malformed = 2;
constexpr int invalid_genset = 3;
constexpr int svg_dimension = 4;
constexpr int inconclusive = 5;
} // namespace exit_code

/// Parses and validates a generating set given as PointSet JSON.
/// Throws MalformedInput or InvalidGenSet.
GenSet parse_genset(const std::string& json_text);

/// Reads `arg` as a file if one exists at that path, otherwise as inline JSON.
std::string read_input(const std::string& arg);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace horocalc

#endif // HOROCALC_CLI_HPP
