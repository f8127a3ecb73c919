#pragma once

#include <string>

#include "nanoword/word.hpp"

namespace nanoword {

/// Parse failure with the 1-based source line.
struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

/// Reads the line-oriented Gauss-code format:
///
///   class closed|long|front
///   index <signed integer>        (closed/front only)
///   word <token>*
///
/// Tokens are NAME:CODE on first occurrence, bare NAME on the second
/// occurrence of a crossing, ^NAME:CODE for cusps. '#' starts a comment.
EtaleWord parse_word(const std::string& text);

/// Canonical text form; parse_word(serialize_word(w)) == w up to letter
/// renaming. Letters are renamed canonically before writing.
std::string serialize_word(const EtaleWord& w);

}  // namespace nanoword
