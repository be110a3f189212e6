#include "armatch/formulas.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace armatch {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

BigInt pow_int(BigInt base, unsigned e) {
  BigInt out = 1;
  while (e--) out *= base;
  return out;
}

Rational pow_q(const Rational& base, unsigned e) {
  Rational out = 1;
  while (e--) out *= base;
  return out;
}

std::string params(std::initializer_list<std::pair<const char*, long long>> values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ", ";
    out += name;
    out += '=';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt p(std::string(text.substr(0, slash)));
    const BigInt q(std::string(text.substr(slash + 1)));
    if (q == 0) bad();
    return Rational(p, q);
  }
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  BigInt mantissa = 0;
  long long scale = 0;
  bool digits = false;
  bool point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      digits = true;
      if (point) --scale;
    } else if (c == '.' && !point) {
      point = true;
    } else {
      break;
    }
  }
  if (!digits) bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') bad();
    const std::string exponent(text.substr(i + 1));
    if (exponent.empty()) bad();
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(exponent, &used);
    } catch (const std::exception&) {
      bad();
    }
    if (used != exponent.size()) bad();
    scale += e;
  }
  Rational out(mantissa);
  const BigInt ten = pow_int(10, static_cast<unsigned>(scale < 0 ? -scale : scale));
  if (scale < 0) {
    out /= ten;
  } else {
    out *= ten;
  }
  return negative ? Rational(-out) : out;
}

std::string_view to_string(Validity v) {
  switch (v) {
    case Validity::kProved: return "proved";
    case Validity::kConjectured: return "conjectured";
    case Validity::kOutOfRange: return "out-of-range";
  }
  return "?";
}

FormulaResult turan_3(int n, int forbidden) {
  const int s = forbidden;
  FormulaResult r;
  r.value = std::max(binomial(n, 3) - binomial(n - s + 1, 3), binomial(3 * s - 1, 3));
  r.valid = (s >= 2 && n >= 3 * s) ? Validity::kProved : Validity::kOutOfRange;
  r.provenance = "ex(n,3,M_s) = max{C(n,3)-C(n-s+1,3), C(3s-1,3)} (Frankl; Luczak-Mieczkowska), " +
                 params({{"n", n}, {"s", s}});
  if (r.valid == Validity::kOutOfRange) r.note = "theorem stated for s >= 2 and n >= 3s";
  return r;
}

FormulaResult turan_conjectured(int n, int k, int nu_bound) {
  const int s = nu_bound;
  FormulaResult r;
  r.value = std::max(binomial(n, k) - binomial(n - s, k), binomial(static_cast<long long>(k) * (s + 1) - 1, k));
  r.provenance = "ex(n,k,M_{s+1}) = max{C(n,k)-C(n-s,k), C(k(s+1)-1,k)} (Erdos matching conjecture), " +
                 params({{"n", n}, {"k", k}, {"s", s}});
  if (k < 2 || s < 1 || n < k * s) {
    r.valid = Validity::kOutOfRange;
    r.note = "conjecture stated for n >= ks, k >= 2, s >= 1";
  } else if (k == 2) {
    r.valid = Validity::kProved;
    r.note = "Erdos-Gallai";
  } else if (k == 3) {
    r.valid = turan_3(n, s + 1).valid == Validity::kProved ? Validity::kProved : Validity::kConjectured;
    if (r.valid == Validity::kConjectured) r.note = "k = 3 but outside n >= 3(s+1)";
  } else {
    r.valid = Validity::kConjectured;
  }
  return r;
}

FormulaResult anti_ramsey_large_n(int n, int k, int s) {
  FormulaResult r;
  r.value = binomial(n, k) - binomial(n - s + 2, k) + 2;
  r.provenance = "ar(n,k,M_s) = C(n,k)-C(n-s+2,k)+2 for n >= sk+(s-1)(k-1) (Frankl-Kupavskii), " +
                 params({{"n", n}, {"k", k}, {"s", s}});
  const bool in_range = k >= 3 && s >= 2 && n >= s * k + (s - 1) * (k - 1);
  r.valid = in_range ? Validity::kProved : Validity::kOutOfRange;
  if (!in_range) r.note = "below n = sk+(s-1)(k-1) or k < 3";
  return r;
}

FormulaResult anti_ramsey_3(int n, int s) {
  // At k = 3 the large-n range n >= sk+(s-1)(k-1) starts exactly at 5s-2.
  if (s >= 3 && n >= 5 * s - 2) return anti_ramsey_large_n(n, 3, s);
  FormulaResult r;
  const BigInt ex = turan_3(n, s - 1).value;
  const std::string p = params({{"n", n}, {"s", s}});
  if (s < 3 || n < 3 * s) {
    r.value = ex + 2;
    r.valid = Validity::kOutOfRange;
    r.provenance = "ar(n,3,M_s) = ex(n,3,M_{s-1})+2, " + p;
    r.note = "stated for s >= 3 and n >= 3s";
  } else if (n == 3 * s) {
    r.value = ex + 5;
    r.valid = Validity::kConjectured;
    r.provenance = "ar(n,3,M_s) = ex(n,3,M_{s-1})+5 at n = 3s, " + p;
    r.note = "holds for sufficiently large n only; no explicit n0";
  } else {
    r.value = ex + 2;
    r.valid = Validity::kConjectured;
    r.provenance = "ar(n,3,M_s) = ex(n,3,M_{s-1})+2 for 3s < n < 5s-2, " + p;
    r.note = "holds for sufficiently large n only; no explicit n0";
  }
  return r;
}

FormulaResult lower_bound_perfect(int n, int k) {
  if (k < 3) fail("lower_bound_perfect needs k >= 3");
  if (n % k != 0) fail("lower_bound_perfect needs k | n");
  FormulaResult r;
  const BigInt classes = k % 2 == 1 ? binomial(k + 1, (k + 1) / 2) / 2 : binomial(k, k / 2 - 1);
  r.value = binomial(n - k - 1, k) + classes + 2;
  r.provenance = std::string("ar(n,k,M_{n/k}) >= C(n-k-1,k)+") + (k % 2 == 1 ? "C(k+1,(k+1)/2)/2" : "C(k,k/2-1)") +
                 "+2, " + params({{"n", n}, {"k", k}});
  r.valid = n / k >= 3 ? Validity::kProved : Validity::kOutOfRange;
  if (r.valid == Validity::kOutOfRange) r.note = "stated for n/k >= 3";
  return r;
}

int s_threshold(int n, int k) {
  if (k < 2 || n < k) fail("s_threshold needs n >= k >= 2");
  const BigInt total = binomial(n, k);
  for (int s = 1;; ++s) {
    if (total - binomial(n - s, k) <= binomial(static_cast<long long>(k) * (s + 1) - 1, k)) return s;
  }
}

namespace {

// 1 - (1-a)^k - k^k a^k
Rational alpha_polynomial(int k, const Rational& a) {
  const unsigned e = static_cast<unsigned>(k);
  return Rational(1) - pow_q(Rational(1) - a, e) - Rational(pow_int(k, e)) * pow_q(a, e);
}

}  // namespace

RationalInterval alpha_k(int k, const Rational& tol) {
  if (k < 2) fail("alpha_k needs k >= 2");
  if (tol <= 0) fail("alpha_k needs tol > 0");
  // p > 0 at 1/(2k) and p(1/k) = -(1-1/k)^k < 0.
  RationalInterval iv{Rational(1, 2 * k), Rational(1, k)};
  if (alpha_polynomial(k, iv.lo) <= 0 || alpha_polynomial(k, iv.hi) >= 0) {
    throw std::logic_error("alpha_k: initial bracket does not straddle the root");
  }
  while (iv.width() > tol) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const Rational p = alpha_polynomial(k, mid);
    if (p == 0) return {mid, mid};
    (p > 0 ? iv.lo : iv.hi) = mid;
  }
  return iv;
}

RationalInterval alpha_k_bounds(int k) {
  const Rational kk(k);
  return {1 / kk - Rational(1) / (2 * kk * kk), 1 / kk - Rational(2) / (5 * kk * kk)};
}

std::string to_decimal(const Rational& x, int digits) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const bool negative = num < 0;
  const BigInt scaled = (negative ? BigInt(-num) : num) * pow_int(10, static_cast<unsigned>(digits)) / den;
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

nlohmann::json to_json(const FormulaResult& r) {
  nlohmann::json j;
  if (r.value >= std::numeric_limits<long long>::min() && r.value <= std::numeric_limits<long long>::max()) {
    j["value"] = r.value.convert_to<long long>();
  } else {
    j["value"] = r.value.str();
  }
  j["valid"] = to_string(r.valid);
  j["provenance"] = r.provenance;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace armatch
