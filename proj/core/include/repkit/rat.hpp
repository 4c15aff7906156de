#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace repkit {

// Exact rational scalar. mpq_class does not canonicalize on construction
// from a num/den pair, so all construction goes through these helpers.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q", "-p/q". Throws std::invalid_argument on bad input.
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat: cannot parse '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

} // namespace repkit
