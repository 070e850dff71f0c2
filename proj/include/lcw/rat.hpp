#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcw {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Strict "p" / "p/q" parser. Decimals, whitespace padding and q <= 0 are
// rejected so that file inputs stay exact.
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& r);

inline double rat_double(const Rat& r) { return static_cast<double>(r); }

// Continued-fraction rounding with a denominator bound. Candidates produced
// from floating point must always be re-checked exactly by the caller.
Rat rationalize(double x, long long max_den = 1000000);

// If r = (p/q)^2 for a rational p/q, returns true and sets root to p/q >= 0.
bool rat_sqrt(const Rat& r, Rat& root);

using RVec = std::vector<Rat>;
using RMat = std::vector<RVec>;

}  // namespace lcw
