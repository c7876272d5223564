#pragma once

#include "semifree/classifier.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semifree {

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& message);
    std::size_t line; ///< 1-based, 0 for whole-file errors
};

/// Line-oriented format:
///   surface <trivial|nontrivial> <genus> [twisted]
///   domain <interval|circle> <t0> <t1>
///   seam <t>
///   piece <t_start> <t_end> omega <c0> <c1> <d0> <d1> euler <eu> <ev>
///   wall <s> surface <genus> dual <a> <b> [index 2]
///   wall <s> isolated <p> <q> <r>
///   extremum <min|max> genus <g> normalchern <n> [twistedbranch]
/// Lines sharing a wall value are components of the same wall. Tiling is left to
/// the validator.
ActionData parse_action_file(std::string_view text);

ActionData load_action_file(const std::string& path);

/// Canonical text; parse_action_file(serialize_action_data(d)) == d.
std::string serialize_action_data(const ActionData& data);

} // namespace semifree
