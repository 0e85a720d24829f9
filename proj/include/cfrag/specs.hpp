#pragma once

#include <cstddef>
#include <string>

#include "cfrag/diffeo.hpp"
#include "cfrag/loop_group.hpp"

namespace cfrag {

// Textual operands of the command-line tool. All parsers throw ParseError.

/// "identity", "rot:s" or "fourier:[(k,a,b),...]" for gamma(t) = t + sum a cos kt + b sin kt.
CircleDiffeo parse_diffeo(const std::string& spec, std::size_t n = kDefaultGrid);

/// "fourier:[(k,a,b),...]", "mono:n" (e^{int}), "const:c" or "bump:(a,b)" / "bump:(a,b,pa,pb)"
/// (cutoff on (a, b) equal to 1 on [pa, pb], by default the middle half).
ComplexPeriodicFunction parse_scalar(const std::string& spec, std::size_t n = kDefaultGrid);
/// As parse_scalar, rejecting functions with a non-zero imaginary part.
PeriodicFunction parse_real_scalar(const std::string& spec, std::size_t n = kDefaultGrid);

/// "x*<scalar>+y*<scalar>+z*<scalar>" (any subset) for sum f_j(t) i sigma_j.
LoopAlgebraElement parse_algebra(const std::string& spec, std::size_t n = kDefaultGrid);

/// "identity" or "exp:<algebra>".
LoopElement parse_loop(const std::string& spec, std::size_t n = kDefaultGrid);

}  // namespace cfrag
