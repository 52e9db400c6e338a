#pragma once

#include <string>

#include "spinal/words.hpp"

namespace spinal {

// Word text syntax: `a`, `a^-1`, `b1`, `b2^3`, factors joined with `*`; the
// identity is `1`.  parse_word reduces as it reads; format_word emits the
// normal form in the same syntax, so parse(format(w)) == w.
reduced_word parse_word(const std::string& text, int p, int r);  // parse_error on bad input
std::string format_word(const reduced_word& w);

}  // namespace spinal
