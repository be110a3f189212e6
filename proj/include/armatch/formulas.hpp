#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace armatch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact C(n, k); zero when k < 0 or k > n.
BigInt binomial(long long n, long long k);

/// Parses "p/q", "p" or a decimal such as "0.01" into an exact rational.
Rational parse_rational(std::string_view text);

enum class Validity {
  kProved,       // parameters lie in the cited theorem's stated range
  kConjectured,  // conjecture, or a theorem that needs "n large enough"
  kOutOfRange,   // outside every cited range; value computed anyway
};

std::string_view to_string(Validity v);

struct FormulaResult {
  BigInt value;
  Validity valid = Validity::kOutOfRange;
  std::string provenance;
  std::string note;
};

/// ex(n, 3, M_s) = max{C(n,3) - C(n-s+1,3), C(3s-1,3)}: the largest 3-graph
/// on n vertices with no s-matching. `forbidden` is s, the size of the
/// excluded matching. Proved for s >= 2 and n >= 3s.
FormulaResult turan_3(int n, int forbidden);

/// ex(n, k, M_{s+1}) = max{C(n,k) - C(n-s,k), C(k(s+1)-1,k)}, the
/// matching-conjecture value. Note the indexing: `nu_bound` is s, so this is
/// the largest k-graph with matching number at most s. Proved at k = 3 inside
/// the range of turan_3 and at k = 2; conjectured otherwise.
FormulaResult turan_conjectured(int n, int k, int nu_bound);

/// ar(n, k, M_s) = C(n,k) - C(n-s+2,k) + 2 for n >= sk + (s-1)(k-1), k >= 3.
FormulaResult anti_ramsey_large_n(int n, int k, int s);

/// ar(n, 3, M_s) for n >= 3s: ex(n,3,M_{s-1}) + 5 at n = 3s and + 2 for
/// 3s < n < 5s-2 (both need n large, so flagged conjectured); from 5s-2 on
/// this is anti_ramsey_large_n and proved.
FormulaResult anti_ramsey_3(int n, int s);

/// Lower bound on ar(n, k, M_{n/k}) from the perfect-matching colourings:
/// C(n-k-1,k) + C(k+1,(k+1)/2)/2 + 2 for odd k, C(n-k-1,k) + C(k,k/2-1) + 2
/// for even k. Needs k >= 3, k | n, n/k >= 3.
FormulaResult lower_bound_perfect(int n, int k);

/// Smallest s >= 1 with C(n,k) - C(n-s,k) <= C(k(s+1)-1,k).
int s_threshold(int n, int k);

struct RationalInterval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Brackets the root in (0,1) of 1 - (1-a)^k = k^k a^k to width <= tol by
/// exact bisection. Needs k >= 2 and tol > 0.
RationalInterval alpha_k(int k, const Rational& tol);

/// The two-sided bound 1/k - 1/(2k^2) < alpha_k < 1/k - 2/(5k^2).
RationalInterval alpha_k_bounds(int k);

nlohmann::json to_json(const FormulaResult& r);
std::string to_decimal(const Rational& x, int digits);

}  // namespace armatch
