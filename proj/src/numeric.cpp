#include "frieze/numeric.hpp"

#include <stdexcept>

namespace frieze {

Int floor_sqrt(const Rat& r) {
    if (r < 0) throw std::domain_error("floor_sqrt: negative argument");
    // k = floor(sqrt(p/q)): start from sqrt(floor(p/q)) and adjust.
    Int k = sqrt(Int(num(r) / den(r)));
    while (Rat(k + 1) * Rat(k + 1) <= r) ++k;
    while (Rat(k) * Rat(k) > r) --k;
    return k;
}

bool is_perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    root = sqrt(n);
    return root * root == n;
}

bool is_square_free(long d) {
    long n = d < 0 ? -d : d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

std::vector<std::pair<Int, int>> factor_integer(const Int& n, const Int& trial_budget) {
    if (n == 0) throw std::domain_error("factor_integer: zero");
    std::vector<std::pair<Int, int>> out;
    Int m = abs(n);
    for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (p > trial_budget)
            throw std::domain_error("factor_integer: trial division budget exceeded");
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (m > 1) out.emplace_back(m, 1);  // remaining cofactor is prime
    return out;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

int legendre_symbol(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int sqrt_mod(const Int& a, const Int& p) {
    Int a0 = ((a % p) + p) % p;
    if (a0 == 0) return 0;
    if (legendre_symbol(a0, p) != 1) throw std::domain_error("sqrt_mod: non-residue");

    auto powm = [&p](Int base, Int e) {
        Int r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };

    if (p % 4 == 3) return powm(a0, (p + 1) / 4);

    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (legendre_symbol(z, p) != -1) ++z;
    Int m(s), c = powm(z, q), t = powm(a0, q), r = powm(a0, (q + 1) / 2);
    while (t != 1) {
        Int i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
            if (i == m) throw std::logic_error("sqrt_mod: not a residue");
        }
        Int b = c;
        for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

std::string to_decimal(const Int& n) { return n.get_str(); }
std::string to_decimal(const Rat& q) { return q.get_str(); }

}  // namespace frieze
