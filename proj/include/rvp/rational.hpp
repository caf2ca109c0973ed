// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace rvp {

// Exact rational scalar. All tree-side quantities (masses, prices,
// densities, claim values) live in Rat; floating point only appears in
// the presentation layer and in the PDE engine.
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string to_string(const Rat& q) { return q.get_str(); }

// Parses "7", "-3/4", "0.25", "2.5e-3". Decimal forms are converted to
// the exact decimal fraction, not the nearest binary double.
Rat rat_from_string(const std::string& s);

Rat rat_pow(const Rat& base, long e);

inline Rat rat_abs(const Rat& q) { return abs(q); }

inline const Rat& rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

inline std::string rat_vec_to_string(const std::vector<Rat>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + "]";
}

}  // namespace rvp
