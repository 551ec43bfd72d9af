#include "polydeg/rational.hpp"

#include <algorithm>
#include <numeric>

#include "polydeg/errors.hpp"

namespace polydeg {

Rational ratio(long num, long den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw UsageError("malformed rational '" + s + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw UsageError("zero denominator in '" + s + "'");
  Rational q{Integer(num), d};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer multinomial(unsigned long n, const std::vector<unsigned long>& parts) {
  unsigned long total = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (total != n)
    throw UsageError("multinomial: parts sum to " + std::to_string(total) + ", expected " +
                     std::to_string(n));
  // product of binomials avoids the large factorial quotient
  Integer r = 1;
  unsigned long acc = 0;
  for (unsigned long p : parts) {
    acc += p;
    r *= binomial(static_cast<long>(acc), static_cast<long>(p));
  }
  return r;
}

namespace {

void compositions_rec(unsigned long remaining, std::size_t index, std::vector<unsigned long>& cur,
                      std::vector<std::vector<unsigned long>>& out) {
  if (index == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const unsigned long w = index;  // part index is 1-based weight
  for (unsigned long a = 0; a * w <= remaining; ++a) {
    cur[index - 1] = a;
    compositions_rec(remaining - a * w, index - 1, cur, out);
  }
  cur[index - 1] = 0;
}

}  // namespace

std::vector<std::vector<unsigned long>> weighted_compositions(unsigned long weight, std::size_t len) {
  std::vector<std::vector<unsigned long>> out;
  std::vector<unsigned long> cur(len, 0);
  compositions_rec(weight, len, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polydeg
