/*
 * Copyright 2026 The Kaleido PSI Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "kaleido/group.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "kaleido/status.h"

namespace kaleido {
namespace {

constexpr unsigned long kTrialDivisionLimit = 1ul << 20;

bool IsPrimeByTrialDivision(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt Gcd(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

// Brent's variant of Pollard's rho. Returns a non-trivial factor of a
// composite n, or n itself if this constant fails.
BigInt PollardRho(const BigInt& n, unsigned long c) {
  if (n % 2 == 0) return 2;
  BigInt y = 2, x, g = 1, r = 1, q = 1, ys;
  const unsigned long m = 128;
  auto f = [&](const BigInt& v) -> BigInt {
    BigInt out = v * v + c;
    return out % n;
  };
  do {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = f(y);
    BigInt k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < m && k + i < r; ++i) {
        y = f(y);
        BigInt diff = abs(x - y);
        q = (q * diff) % n;
      }
      g = Gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = Gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g;
}

void Factor(const BigInt& n, std::vector<BigInt>& out) {
  if (n == 1) return;
  if (IsPrime(n)) {
    out.push_back(n);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    BigInt d = PollardRho(n, c);
    if (d != n && d != 1) {
      Factor(d, out);
      Factor(n / d, out);
      return;
    }
  }
}

}  // namespace

absl::StatusOr<BigInt> ModExp(const BigInt& base, const BigInt& exponent,
                              const BigInt& modulus) {
  if (modulus < 2) {
    return ParameterError(
        absl::StrCat("modulus must be >= 2, got ", ToDecimal(modulus)));
  }
  if (sgn(exponent) < 0) {
    return ParameterError("exponent must be non-negative");
  }
  if (sgn(base) < 0 || base >= modulus) {
    return ParameterError(absl::StrCat("base ", base.get_str(),
                                       " outside [0, ", ToDecimal(modulus),
                                       ")"));
  }
  BigInt out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(),
           modulus.get_mpz_t());
  return out;
}

std::vector<BigInt> DistinctPrimeFactors(const BigInt& n) {
  std::vector<BigInt> factors;
  BigInt rest = n;
  for (unsigned long d = 2; d < 1000 && d * d <= rest; ++d) {
    if (rest % d == 0) {
      factors.emplace_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) Factor(rest, factors);
  std::sort(factors.begin(), factors.end());
  factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
  return factors;
}

absl::StatusOr<BigInt> ElementOrder(const BigInt& g, const GroupParams& params) {
  if (params.q < 3) return ParameterError("q must be >= 3");
  if (g % params.q == 0) {
    return ParameterError("element is 0 mod q and has no order");
  }
  if (sgn(g) < 0 || g >= params.q) {
    return ParameterError(absl::StrCat("element ", g.get_str(),
                                       " outside [1, q-1]"));
  }
  const BigInt group_order = params.q - 1;
  BigInt order = group_order;
  for (const BigInt& r : DistinctPrimeFactors(group_order)) {
    while (order % r == 0) {
      BigInt candidate = order / r;
      BigInt power;
      mpz_powm(power.get_mpz_t(), g.get_mpz_t(), candidate.get_mpz_t(),
               params.q.get_mpz_t());
      if (power != 1) break;
      order = candidate;
    }
  }
  return order;
}

bool HasOrderP(const BigInt& g, const GroupParams& params) {
  if (g <= 1 || g >= params.q) return false;
  BigInt power;
  mpz_powm(power.get_mpz_t(), g.get_mpz_t(), params.p.get_mpz_t(),
           params.q.get_mpz_t());
  return power == 1;
}

BigInt AdvanceGeneratorCandidate(const BigInt& g, const BigInt& q) {
  BigInt next = (g + 1) % (q - 2);
  return next + 2;
}

absl::StatusOr<BigInt> NextOrderPGenerator(const BigInt& start,
                                           const GroupParams& params) {
  if (params.q < 3) return ParameterError("q must be >= 3");
  if (start < 2 || start > params.q - 1) {
    return ParameterError(absl::StrCat("scan start ", start.get_str(),
                                       " outside [2, q-1]"));
  }
  BigInt g = start;
  for (BigInt steps = 0; steps < params.q - 2; ++steps) {
    if (HasOrderP(g, params)) return g;
    g = AdvanceGeneratorCandidate(g, params.q);
  }
  return GroupError(absl::StrCat("no element of order ", params.p.get_str(),
                                 " reachable from ", start.get_str(),
                                 " in Z_", params.q.get_str(), "^*"));
}

bool IsPrime(const BigInt& n) {
  if (n < 2) return false;
  if (n < kTrialDivisionLimit) return IsPrimeByTrialDivision(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 64) > 0;
}

ValidationReport ValidateParams(const GroupParams& params) {
  ValidationReport report;
  auto fail = [&report](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };
  if (params.p < 2) return fail("p must be >= 2");
  if (params.q < 3) return fail("q must be >= 3");
  if (!IsPrime(params.p)) return fail(absl::StrCat("p=", ToDecimal(params.p), " is not prime"));
  if (!IsPrime(params.q)) return fail(absl::StrCat("q=", ToDecimal(params.q), " is not prime"));
  if ((params.q - 1) % params.p != 0) {
    return fail(absl::StrCat("p=", ToDecimal(params.p), " does not divide q-1=",
                             ToDecimal(params.q - 1)));
  }
  return report;
}

}  // namespace kaleido
