#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace frieze {

using Int = mpz_class;
using Rat = mpq_class;

inline Int num(const Rat& q) { return q.get_num(); }
inline Int den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Rat make_rat(const Int& n, const Int& d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

/// Largest k >= 0 with k*k <= r. Requires r >= 0.
Int floor_sqrt(const Rat& r);

/// Exact square test; returns the root when n is a perfect square.
bool is_perfect_square(const Int& n, Int& root);

bool is_square_free(long d);

/// Trial division, smallest factors first. Throws std::domain_error when a
/// cofactor survives with no prime factor below the budget.
std::vector<std::pair<Int, int>> factor_integer(const Int& n, const Int& trial_budget = Int(10000000));

bool is_probable_prime(const Int& n);

/// Square root of a mod odd prime p (Tonelli-Shanks); a must be a residue.
Int sqrt_mod(const Int& a, const Int& p);

int legendre_symbol(const Int& a, const Int& p);

std::string to_decimal(const Int& n);
std::string to_decimal(const Rat& q);

}  // namespace frieze
