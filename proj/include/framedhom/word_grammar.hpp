#pragma once

// Text form of words. Letters are separated by whitespace:
//
//   T(<punct-vec>;w=<int>)^<k>   twist about a punctured class, winding w
//   P(<i>;<abs-vec>)             point-push of p_i around a loop
//   Tx1  Ty2^-1  Td3^2           twists about alphabet curves, windings
//                                taken from the framing (Td_i: -1 - kappa_i)
//
// Vectors are either symbolic sums such as "x1-2y2+d3" or comma-separated
// coordinate lists in basis order. The power suffix is optional.

#include <framedhom/word.hpp>

#include <string>
#include <string_view>

namespace framedhom {

/// Throws ValidationError with the offending token on malformed input.
Word parse_word(const Framing& f, std::string_view text);
AbsVec parse_abs_vector(const SurfaceSpec& spec, std::string_view text);
PunctVec parse_punct_vector(const SurfaceSpec& spec, std::string_view text);

std::string format_word(const Word& word);
std::string format_vector(const SurfaceSpec& spec, const IntVector& coords, char tail_symbol);

}  // namespace framedhom
