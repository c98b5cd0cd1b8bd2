#include "polyheight/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace polyheight {

Q parseRational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Q q;
  try {
    q.assign(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  // mpq_set_str does not reduce, and GMP arithmetic assumes canonical inputs.
  mpq_canonicalize(q.backend().data());
  return q;
}

std::string toString(const Q& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string toString(const QVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += toString(v[i]);
  }
  return out + ")";
}

int lexCompare(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool lexLess(const QVec& a, const QVec& b) { return lexCompare(a, b) < 0; }

QVec vecAdd(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vecSub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vecScale(const Q& c, const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Q dot(const QVec& a, const QVec& b) {
  Q s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool isZeroVec(const QVec& v) {
  for (const Q& x : v)
    if (x != 0) return false;
  return true;
}

QVec primitive(const QVec& v) {
  Z den = 1;
  for (const Q& x : v) den = lcm(den, Z(denominator(x)));
  Z g = 0;
  for (const Q& x : v) g = gcd(g, Z(numerator(x) * (den / denominator(x))));
  if (g == 0) return QVec(v.size(), Q(0));
  QVec r(v.size());
  Q f = Q(den) / Q(g);
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * f;
  return r;
}

Q factorial(int n) {
  Q r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Q binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Q r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

}  // namespace polyheight
