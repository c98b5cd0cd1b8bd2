#ifndef POLYHEIGHT_RATIONAL_HPP
#define POLYHEIGHT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace polyheight {

// Exact rational scalar. GMP-backed; arithmetic on canonical operands stays
// canonical, so the only place canonicalization is forced is string parsing.
using Q = boost::multiprecision::mpq_rational;
using Z = boost::multiprecision::mpz_int;

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major

// Parses "p/q" or "p" (optional sign, arbitrary precision) into lowest terms
// with positive denominator. Throws std::invalid_argument on malformed input
// or zero denominator.
Q parseRational(const std::string& s);

// Renders as "p/q", or "p" when the denominator is 1.
std::string toString(const Q& q);
std::string toString(const QVec& v);

// -1 / 0 / +1, coordinatewise lexicographic. Vectors must have equal length.
int lexCompare(const QVec& a, const QVec& b);
bool lexLess(const QVec& a, const QVec& b);

QVec vecAdd(const QVec& a, const QVec& b);
QVec vecSub(const QVec& a, const QVec& b);
QVec vecScale(const Q& c, const QVec& v);
Q dot(const QVec& a, const QVec& b);
bool isZeroVec(const QVec& v);

// Scales a rational vector to a primitive integer vector (gcd of entries 1)
// pointing the same way. The zero vector maps to itself.
QVec primitive(const QVec& v);

Q factorial(int n);
Q binomial(int n, int k);

}  // namespace polyheight

#endif
