#include "dissect/counts.hpp"

#include "dissect/errors.hpp"

namespace dissect {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;  // exact: result is C(n-k+j, j) after this step
  }
  return result;
}

BigInt exact_div(const BigInt& numerator, const BigInt& denominator, const char* context) {
  if (denominator == 0) throw CountDomainError(std::string(context) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) {
    throw CountDomainError(std::string(context) + ": non-integral quotient " + numerator.str() + "/" +
                           denominator.str());
  }
  return q;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw CountDomainError(what);
}

}  // namespace

BigInt f_a(int m, int n, int i) {
  require(m >= 1 && n >= 1, "f_a: need m >= 1 and n >= 1");
  require(i >= 0 && i <= n - 1, "f_a: i must lie in 0..n-1");
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  return exact_div(binomial(mn + i + 1, i) * binomial(n, i + 1), n, "f_a");
}

BigInt f_b(int m, int n, int i) {
  require(m >= 1 && n >= 1, "f_b: need m >= 1 and n >= 1");
  require(i >= 0 && i <= n, "f_b: i must lie in 0..n");
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  return binomial(mn + i, i) * binomial(n, i);
}

FVector closed_form_f(const ComplexParams& params) {
  FVector f;
  for (int i = 0; i <= params.facet_size(); ++i) {
    f.entries.push_back(params.family() == Family::A ? f_a(params.m(), params.n(), i)
                                                     : f_b(params.m(), params.n(), i));
  }
  return f;
}

HVector h_from_f(const FVector& f) {
  const int d = f.d();
  HVector h;
  for (int k = 0; k <= d; ++k) {
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) {
      BigInt term = binomial(d - i, d - k) * f.entries[i];
      if ((k - i) % 2) sum -= term;
      else sum += term;
    }
    h.entries.push_back(sum);
  }
  return h;
}

FVector f_from_h(const HVector& h) {
  const int d = h.d();
  FVector f;
  for (int k = 0; k <= d; ++k) {
    BigInt sum = 0;
    for (int i = 0; i <= k; ++i) sum += h.entries[i] * binomial(d - i, k - i);
    f.entries.push_back(sum);
  }
  return f;
}

BigInt narayana(Family family, int m, int n, int i) {
  require(m >= 1 && n >= 1, "narayana: need m >= 1 and n >= 1");
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  if (family == Family::A) {
    require(i >= 0 && i <= n - 1, "narayana: i must lie in 0..n-1 for family A");
    return exact_div(binomial(n - 1, i) * binomial(mn, i), i + 1, "narayana");
  }
  require(i >= 0 && i <= n, "narayana: i must lie in 0..n for family B");
  return binomial(n, i) * binomial(mn, i);
}

HVector narayana_vector(const ComplexParams& params) {
  HVector h;
  for (int i = 0; i <= params.rank(); ++i) h.entries.push_back(narayana(params.family(), params.m(), params.n(), i));
  return h;
}

BigInt reduced_euler(const FVector& f) {
  BigInt chi = 0;
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i % 2 == 0) chi -= f.entries[i];
    else chi += f.entries[i];
  }
  return chi;
}

BigInt diameter_count(int m, int n, int i) {
  require(m >= 1 && n >= 1, "diameter_count: need m >= 1 and n >= 1");
  require(i >= 1 && i <= n, "diameter_count: i must lie in 1..n");
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  return binomial(mn + i, i) * binomial(n - 1, i - 1);
}

namespace {

// Largest a >= k with C(a, k) <= h, for h >= 1.
std::int64_t largest_top(const BigInt& h, int k) {
  std::int64_t lo = k;  // C(k, k) = 1 <= h
  std::int64_t hi = k + 1;
  while (binomial(hi, k) <= h) {
    lo = hi;
    hi = k + 2 * (hi - k);
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (binomial(mid, k) <= h) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

std::vector<std::int64_t> macaulay_representation(const BigInt& h, int k) {
  require(k >= 1, "macaulay_representation: k must be >= 1");
  require(h >= 0, "macaulay_representation: h must be nonnegative");
  std::vector<std::int64_t> tops;
  BigInt rest = h;
  for (int j = k; j >= 1 && rest > 0; --j) {
    const std::int64_t a = largest_top(rest, j);
    tops.push_back(a);
    rest -= binomial(a, j);
  }
  return tops;
}

BigInt macaulay_pseudo_power(const BigInt& h, int k) {
  const std::vector<std::int64_t> tops = macaulay_representation(h, k);
  BigInt out = 0;
  int j = k;
  for (std::int64_t a : tops) {
    out += binomial(a + 1, j + 1);
    --j;
  }
  return out;
}

bool is_m_sequence(const std::vector<BigInt>& h) {
  if (h.empty() || h[0] != 1) return false;
  for (const BigInt& x : h) {
    if (x < 0) return false;
  }
  for (std::size_t k = 1; k + 1 < h.size(); ++k) {
    if (h[k + 1] > macaulay_pseudo_power(h[k], static_cast<int>(k))) return false;
  }
  return true;
}

std::string to_string(const std::vector<BigInt>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += values[i].str();
  }
  return out + ")";
}

}  // namespace dissect
