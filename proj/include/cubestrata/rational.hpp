#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace cubestrata {

using Int = mpz_class;
using Rat = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q"; result is canonicalized with q > 0.
Rat rat_from_string(const std::string& s);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_to_string(const Rat& r);

// floor(sqrt(x)) for x >= 0.
Int isqrt_floor(const Int& x);

// Largest integer t with t <= r.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

}  // namespace cubestrata
