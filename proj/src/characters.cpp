#include "heckeeta/characters.hpp"

#include <numeric>
#include <string>

#include "heckeeta/errors.hpp"

namespace heckeeta {

bool is_fundamental(long long D) {
  if (D < 5 || D % 4 != 1) return false;
  long long m = D;
  for (long long p = 3; p * p <= m; p += 2) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

int jacobi(long long n, long long m) {
  if (m <= 0 || m % 2 == 0) throw Error("jacobi: modulus must be odd and positive");
  n %= m;
  if (n < 0) n += m;
  int result = 1;
  while (n != 0) {
    while (n % 2 == 0) {
      n /= 2;
      const long long r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(n, m);
    if (n % 4 == 3 && m % 4 == 3) result = -result;
    n %= m;
  }
  return m == 1 ? result : 0;
}

int kronecker(long long n, long long D) {
  if (!is_fundamental(D)) throw InvalidDiscriminant(D);
  // D odd and positive: the Kronecker symbol is the Jacobi symbol.
  return jacobi(n, D);
}

long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(long long n) {
  int sign = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

CharTable build_char_table(int D) {
  if (!is_fundamental(D)) throw InvalidDiscriminant(D);

  CharTable ct;
  ct.D = D;
  ct.values.resize(static_cast<std::size_t>(D));
  for (int n = 0; n < D; ++n) ct.values[n] = jacobi(n, D);
  for (int a = 1; a <= D; ++a) {
    const int v = ct.values[a % D];
    if (v == 1) ct.qr.push_back(a);
    if (v == -1) ct.nr.push_back(a);
  }

  auto fail = [D](const std::string& what) {
    throw CorruptionError("character table for D = " + std::to_string(D) + ": " + what);
  };
  if (ct.values[1] != 1) fail("chi(1) != 1");
  long long sum = 0, first_moment = 0;
  for (int n = 0; n < D; ++n) {
    const bool unit = std::gcd(n, D) == 1;
    if ((ct.values[n] != 0) != unit) fail("support differs from the unit group");
    sum += ct.values[n];
    first_moment += static_cast<long long>(n) * ct.values[n];
  }
  if (sum != 0 || first_moment != 0) fail("character sums do not vanish");
  if (ct.values[D - 1] != 1) fail("character is not even");
  if (ct.qr.size() != ct.nr.size() ||
      static_cast<long long>(2 * ct.qr.size()) != euler_phi(D))
    fail("residue classes are unbalanced");
  for (int m = 1; m < D; ++m) {
    if (ct.values[m] == 0) continue;
    for (int n = m; n < D; ++n) {
      if (ct.values[(m * n) % D] != ct.values[m] * ct.values[n]) fail("not multiplicative");
    }
  }
  return ct;
}

std::vector<int> fundamental_discriminants(int max_D) {
  std::vector<int> out;
  for (int D = 5; D <= max_D; D += 4)
    if (is_fundamental(D)) out.push_back(D);
  return out;
}

}  // namespace heckeeta
