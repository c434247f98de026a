#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frieze/field.hpp"
#include "frieze/numeric.hpp"

namespace frieze {

class QuadInt;

/// Element x + y*sqrt(d) of Q(sqrt(d)), exact rational coordinates.
class QuadRat {
public:
    QuadRat(FieldTag tag, Rat x, Rat y) : tag_(tag), x_(std::move(x)), y_(std::move(y)) {}
    static QuadRat from_rational(FieldTag tag, Rat x) { return QuadRat(tag, std::move(x), Rat(0)); }
    static QuadRat zero(FieldTag tag) { return QuadRat(tag, Rat(0), Rat(0)); }
    static QuadRat one(FieldTag tag) { return QuadRat(tag, Rat(1), Rat(0)); }
    static QuadRat omega(FieldTag tag);
    static QuadRat sqrt_d(FieldTag tag) { return QuadRat(tag, Rat(0), Rat(1)); }

    const FieldTag& tag() const { return tag_; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    QuadRat operator+(const QuadRat& o) const;
    QuadRat operator-(const QuadRat& o) const;
    QuadRat operator*(const QuadRat& o) const;
    QuadRat operator/(const QuadRat& o) const;
    QuadRat operator-() const { return QuadRat(tag_, -x_, -y_); }

    bool operator==(const QuadRat& o) const { return tag_ == o.tag_ && x_ == o.x_ && y_ == o.y_; }
    bool operator!=(const QuadRat& o) const { return !(*this == o); }

    QuadRat conj() const { return QuadRat(tag_, x_, -y_); }
    QuadRat inverse() const;
    QuadRat pow(unsigned long e) const;

    std::string str() const;

private:
    FieldTag tag_;
    Rat x_, y_;
};

/// z * conj(z) = x^2 - d*y^2, a non-negative rational (d < 0).
Rat abs_sq(const QuadRat& z);

/// Element a + b*omega_d of O_d.
class QuadInt {
public:
    QuadInt(FieldTag tag, Int a, Int b) : tag_(tag), a_(std::move(a)), b_(std::move(b)) {}
    static QuadInt from_int(FieldTag tag, Int a) { return QuadInt(tag, std::move(a), Int(0)); }
    static QuadInt zero(FieldTag tag) { return QuadInt(tag, 0, 0); }
    static QuadInt one(FieldTag tag) { return QuadInt(tag, 1, 0); }
    static QuadInt omega(FieldTag tag) { return QuadInt(tag, 0, 1); }

    const FieldTag& tag() const { return tag_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadInt operator+(const QuadInt& o) const;
    QuadInt operator-(const QuadInt& o) const;
    QuadInt operator*(const QuadInt& o) const;
    QuadInt operator-() const { return QuadInt(tag_, -a_, -b_); }

    bool operator==(const QuadInt& o) const { return tag_ == o.tag_ && a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    QuadInt conj() const;
    QuadInt pow(unsigned long e) const;

    /// Ring homomorphism into Q(sqrt(d)).
    QuadRat embed() const;

    /// N(a + b*omega) = a^2 + t*a*b + n*b^2 >= 0.
    Int norm() const;

    std::string str() const;

private:
    FieldTag tag_;
    Int a_, b_;
};

/// Canonical order on O_d: by norm, then a, then b.
int cmp_canonical(const QuadInt& lhs, const QuadInt& rhs);

/// z in O_d? Returns the {1, omega} coordinates when so.
std::optional<QuadInt> is_integral(const QuadRat& z);

/// All z in O_d with abs_sq(z) < bound_sq, canonically ordered.
std::vector<QuadInt> small_elements(FieldTag tag, const Rat& bound_sq);

/// Units of O_d: {1,-1}, plus {i,-i} for d=-1, plus the six sixth roots for d=-3.
std::vector<QuadInt> unit_group(FieldTag tag);

/// Compact human form: integers as-is, "w" / "wbar" for omega and its
/// conjugate, canonical "a+b*w" otherwise.
std::string display_entry(const QuadRat& z);

}  // namespace frieze
