#pragma once

#include <cstdint>
#include <vector>

namespace heckeeta {

/// True iff D = 1 mod 4, D >= 5 and D is squarefree.
bool is_fundamental(long long D);

/// Jacobi symbol (n/m) for odd m > 0.
int jacobi(long long n, long long m);

/// Kronecker symbol (n/D) for a fundamental discriminant D = 1 mod 4.
/// Throws InvalidDiscriminant otherwise.
int kronecker(long long n, long long D);

long long euler_phi(long long n);
int mobius(long long n);

/// Values of the primitive real character chi_D together with the residue
/// classes it splits (Z/DZ)^* into. Immutable after construction.
struct CharTable {
  int D = 0;
  std::vector<int> values;  // values[n] = chi_D(n mod D), length D
  std::vector<int> qr;      // a in [1, D] with chi = +1, ascending
  std::vector<int> nr;      // a in [1, D] with chi = -1, ascending

  int operator()(long long n) const {
    long long r = n % D;
    if (r < 0) r += D;
    return values[static_cast<std::size_t>(r)];
  }
  int phi() const { return static_cast<int>(qr.size() + nr.size()); }
};

/// Builds the table and checks every character invariant (chi(1) = 1,
/// support = units, complete multiplicativity, evenness, balance).
/// Throws InvalidDiscriminant for bad D and CorruptionError if a check fails.
CharTable build_char_table(int D);

/// Every fundamental D = 1 mod 4 in [5, max_D].
std::vector<int> fundamental_discriminants(int max_D);

}  // namespace heckeeta
