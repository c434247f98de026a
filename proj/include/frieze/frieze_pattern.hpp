#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/eta.hpp"
#include "frieze/qint.hpp"

namespace frieze {

/// Frieze pattern of height n: entries c(i,j) for i <= j <= i + n + 3 with
/// zero/one borders, (n+3)-periodic along the diagonal. One fundamental
/// period (rows 0..n+2) is stored; all other indices resolve through
/// c(i + n+3, j + n+3) = c(i, j).
class FriezePattern {
public:
    FriezePattern(Ring ring, long height, std::vector<std::vector<QuadRat>> rows);

    const Ring& ring() const { return ring_; }
    const FieldTag& tag() const { return ring_.tag(); }
    long height() const { return height_; }
    long period() const { return height_ + 3; }

    /// Entry c(i, j); any i, with i <= j <= i + n + 3.
    const QuadRat& at(long i, long j) const;

    bool operator==(const FriezePattern& o) const;

    /// Paper-style staircase rendering, one period of rows.
    std::string staircase() const;

private:
    Ring ring_;
    long height_;
    // rows_[i][j - i] for 0 <= i <= n+2, 0 <= j - i <= n+3
    std::vector<std::vector<QuadRat>> rows_;
};

/// Build the frieze determined by a quiddity cycle of length n+3 via
/// c(i, j+1) = c(i, j) * c(j-1, j+1) - c(i, j-1). Throws std::invalid_argument
/// when the cycle is not a quiddity cycle.
FriezePattern from_quiddity(const QuiddityCycle& cycle);
FriezePattern from_quiddity(const QuiddityCycle& cycle, Ring ring);

struct ValidationReport {
    bool unimodular;  // every adjacent 2x2 determinant is 1
    bool tame;        // every neighbouring 3x3 determinant is 0
    bool nonzero;     // no interior entry is 0
    bool glide;       // c(i, j) == c(j, n + i + 3)

    bool all() const { return unimodular && tame && nonzero && glide; }
};

ValidationReport validate(const FriezePattern& f);

/// Negate every entry whose diagonal index j - i is even. Defined for odd
/// heights (else the unit border would flip); an involution.
FriezePattern twist(const FriezePattern& f);

enum class FriezeClass {
    ConwayCoxeter,
    TwistedConwayCoxeter,
    NonIntegral,
    ContainsZero,
    OtherIntegral,
};

std::string class_name(FriezeClass c);

struct Classification {
    FriezeClass cls;
    // parity of the diagonal negation that recovered a Conway-Coxeter frieze
    std::optional<int> untwist_parity;
};

Classification classify(const FriezePattern& f);

struct SignLemmaReport {
    bool blocks;           // every adjacent 2x2 sign block has product 1
    bool rows;             // quiddity signs propagate along rows
    bool quiddity_const;   // all quiddity entries share one sign
    int quiddity_sign;

    bool all() const { return blocks && rows && quiddity_const; }
};

/// Sign-grid checks; requires every interior entry real with abs_sq > 1/2
/// (throws std::domain_error otherwise).
SignLemmaReport check_sign_lemma(const FriezePattern& f);

QuiddityCycle extract_quiddity(const FriezePattern& f);

}  // namespace frieze
