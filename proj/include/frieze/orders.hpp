#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frieze/qint.hpp"

namespace frieze {

/// Nonzero ideal of O_K as a lattice a*Z + (b + c*omega)*Z in Hermite normal
/// form: a, c > 0, c | a, c | b, 0 <= b < a, closed under multiplication by
/// omega. norm = a*c.
class IdealHNF {
public:
    IdealHNF(FieldTag tag, Int a, Int b, Int c);

    static IdealHNF unit_ideal(FieldTag tag) { return IdealHNF(tag, 1, 0, 1); }
    static IdealHNF principal(const QuadInt& gen);
    static IdealHNF from_generators(FieldTag tag, const std::vector<QuadInt>& gens);

    const FieldTag& tag() const { return tag_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    Int norm() const { return a_ * c_; }
    bool contains(const QuadInt& z) const;
    bool is_unit_ideal() const { return a_ == 1 && c_ == 1; }

    IdealHNF conj() const;

    bool operator==(const IdealHNF& o) const {
        return tag_ == o.tag_ && a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
    }

    std::string str() const;

private:
    FieldTag tag_;
    Int a_, b_, c_;
};

IdealHNF ideal_mul(const IdealHNF& lhs, const IdealHNF& rhs);
IdealHNF ideal_pow(const IdealHNF& base, unsigned long e);

/// I^-1 as a fractional ideal num/den with integral num.
struct FractionalIdeal {
    IdealHNF num;
    Int den;

    Int a_over_den_norm() const;  // norm as a rational handled by callers
};

FractionalIdeal ideal_inverse(const IdealHNF& ideal);

/// Containment I <= J (every element of I lies in J).
bool ideal_contains(const IdealHNF& outer, const IdealHNF& inner);

enum class SplitType { Split, Inert, Ramified };

struct PrimeAbove {
    IdealHNF ideal;
    int ramification;  // e
    int residue_degree;  // f
    SplitType type;
};

/// Primes of O_K above the rational prime p, decided by the discriminant's
/// Kronecker symbol at p.
std::vector<PrimeAbove> primes_above(const Int& p, FieldTag tag);

/// Reduced binary quadratic forms of the fundamental discriminant, counted
/// by bounded brute force.
struct BinaryQuadraticForm {
    Int a, b, c;
};

std::vector<BinaryQuadraticForm> reduced_forms(FieldTag tag);
long class_number(FieldTag tag);

/// (alpha) = prod p^e with nonzero integer exponents; negative exponents are
/// the denominator part (nonempty exactly when alpha is not integral).
struct FactoredIdeal {
    QuadRat alpha;
    std::vector<std::pair<IdealHNF, long>> factors;  // primes pairwise distinct

    bool has_denominator() const;
};

/// Factor the principal fractional ideal (alpha), alpha != 0. Throws
/// std::domain_error when a norm resists the trial-division budget.
FactoredIdeal factor_principal(const QuadRat& alpha, FieldTag tag);

/// p-adic valuation of an ideal at a prime ideal.
long valuation(const IdealHNF& ideal, const IdealHNF& prime);

/// Search for a generator: a lattice element of norm exactly norm(I).
std::optional<QuadInt> is_principal(const IdealHNF& ideal);

/// Exact witnesses x, y in O_K with x*g1 + y*g2 = 1, when (g1, g2) is the
/// unit ideal; nullopt otherwise.
std::optional<std::pair<QuadInt, QuadInt>> bezout(const QuadInt& g1, const QuadInt& g2);

/// Integer coefficients (c_0..c_N) with x = sum c_i alpha^i for the smallest
/// N <= n_max admitting one; nullopt is bound-relative, not a proof.
std::optional<std::vector<Int>> zalpha_membership(const QuadRat& x, const QuadRat& alpha,
                                                  int n_max);

struct UnitCertificate {
    QuadRat alpha;
    long h;                 // class number used to principalize
    QuadInt gamma1, gamma2; // alpha^h = gamma1/gamma2, coprime
    long k;                 // power with gamma2^k in Z[alpha]
    QuadInt unit;           // u = gamma2^k (up to a unit of O_K)
    QuadRat unit_inverse;   // u^-1 = (1/gamma2)^k
    std::vector<Int> unit_coeffs;
    std::vector<Int> inverse_coeffs;
    Rat unit_norm;          // != 1 certifies infinite order

    bool self_check() const;
};

struct UnitSearchResult {
    enum class Status { Found, NoDenominator, BudgetExceeded };

    Status status;
    std::optional<UnitCertificate> certificate;
    std::string detail;
};

/// Produce a unit of infinite order in Z[alpha] following the ideal
/// principalization route; alpha must have a denominator (not integral).
UnitSearchResult find_infinite_unit(const QuadRat& alpha, FieldTag tag, long power_budget = 8,
                                    int n_max = 16);

/// Evaluate sum c_i alpha^i exactly.
QuadRat eval_poly(const std::vector<Int>& coeffs, const QuadRat& alpha);

}  // namespace frieze
