#include "frieze/qint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

void require_same_tag(const FieldTag& a, const FieldTag& b) {
    if (a != b) throw std::invalid_argument("field tag mismatch");
}

Rat d_of(const FieldTag& tag) { return Rat(tag.d()); }

}  // namespace

QuadRat QuadRat::omega(FieldTag tag) {
    if (tag.omega_kind() == OmegaKind::HalfIntegral)
        return QuadRat(tag, Rat(1, 2), Rat(1, 2));
    return QuadRat(tag, Rat(0), Rat(1));
}

QuadRat QuadRat::operator+(const QuadRat& o) const {
    require_same_tag(tag_, o.tag_);
    return QuadRat(tag_, x_ + o.x_, y_ + o.y_);
}

QuadRat QuadRat::operator-(const QuadRat& o) const {
    require_same_tag(tag_, o.tag_);
    return QuadRat(tag_, x_ - o.x_, y_ - o.y_);
}

QuadRat QuadRat::operator*(const QuadRat& o) const {
    require_same_tag(tag_, o.tag_);
    return QuadRat(tag_, x_ * o.x_ + d_of(tag_) * y_ * o.y_, x_ * o.y_ + y_ * o.x_);
}

QuadRat QuadRat::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rat n = abs_sq(*this);
    return QuadRat(tag_, x_ / n, -y_ / n);
}

QuadRat QuadRat::operator/(const QuadRat& o) const {
    require_same_tag(tag_, o.tag_);
    return *this * o.inverse();
}

QuadRat QuadRat::pow(unsigned long e) const {
    QuadRat acc = QuadRat::one(tag_);
    QuadRat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rat abs_sq(const QuadRat& z) {
    return z.x() * z.x() - d_of(z.tag()) * z.y() * z.y();
}

std::string QuadRat::str() const {
    if (y_ == 0) return to_decimal(x_);
    std::ostringstream os;
    bool have_x = (x_ != 0);
    if (have_x) os << to_decimal(x_);
    Rat ya = y_ < 0 ? Rat(-y_) : y_;
    if (y_ < 0)
        os << "-";
    else if (have_x)
        os << "+";
    if (ya != 1) os << to_decimal(ya) << "*";
    os << "sqrt(" << tag_.d() << ")";
    return os.str();
}

QuadInt QuadInt::operator+(const QuadInt& o) const {
    require_same_tag(tag_, o.tag_);
    return QuadInt(tag_, a_ + o.a_, b_ + o.b_);
}

QuadInt QuadInt::operator-(const QuadInt& o) const {
    require_same_tag(tag_, o.tag_);
    return QuadInt(tag_, a_ - o.a_, b_ - o.b_);
}

QuadInt QuadInt::operator*(const QuadInt& o) const {
    require_same_tag(tag_, o.tag_);
    // omega^2 = t*omega - n
    Int t(tag_.omega_trace()), n(tag_.omega_norm());
    Int bb = b_ * o.b_;
    return QuadInt(tag_, a_ * o.a_ - n * bb, a_ * o.b_ + b_ * o.a_ + t * bb);
}

QuadInt QuadInt::conj() const {
    // conj(omega) = t - omega
    return QuadInt(tag_, a_ + Int(tag_.omega_trace()) * b_, -b_);
}

QuadInt QuadInt::pow(unsigned long e) const {
    QuadInt acc = QuadInt::one(tag_);
    QuadInt base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QuadRat QuadInt::embed() const {
    if (tag_.omega_kind() == OmegaKind::HalfIntegral)
        return QuadRat(tag_, Rat(a_) + Rat(b_) / 2, Rat(b_) / 2);
    return QuadRat(tag_, Rat(a_), Rat(b_));
}

Int QuadInt::norm() const {
    Int t(tag_.omega_trace()), n(tag_.omega_norm());
    return a_ * a_ + t * a_ * b_ + n * b_ * b_;
}

std::string QuadInt::str() const {
    if (b_ == 0) return to_decimal(a_);
    std::ostringstream os;
    bool have_a = (a_ != 0);
    if (have_a) os << to_decimal(a_);
    Int ba = abs(b_);
    if (b_ < 0)
        os << "-";
    else if (have_a)
        os << "+";
    if (ba != 1) os << to_decimal(ba) << "*";
    os << "w";
    return os.str();
}

int cmp_canonical(const QuadInt& lhs, const QuadInt& rhs) {
    Int ln = lhs.norm(), rn = rhs.norm();
    if (ln != rn) return ln < rn ? -1 : 1;
    if (lhs.a() != rhs.a()) return lhs.a() < rhs.a() ? -1 : 1;
    if (lhs.b() != rhs.b()) return lhs.b() < rhs.b() ? -1 : 1;
    return 0;
}

std::optional<QuadInt> is_integral(const QuadRat& z) {
    if (z.tag().omega_kind() == OmegaKind::HalfIntegral) {
        // x + y*sqrt(d) = (x - y) + 2y*omega
        Rat b = 2 * z.y();
        Rat a = z.x() - z.y();
        if (!is_integer(a) || !is_integer(b)) return std::nullopt;
        return QuadInt(z.tag(), num(a), num(b));
    }
    if (!is_integer(z.x()) || !is_integer(z.y())) return std::nullopt;
    return QuadInt(z.tag(), num(z.x()), num(z.y()));
}

std::vector<QuadInt> small_elements(FieldTag tag, const Rat& bound_sq) {
    if (bound_sq <= 0) throw std::invalid_argument("small_elements: bound must be positive");
    std::vector<QuadInt> out;
    // |a + b*omega|^2 >= b^2 * |d| / s with s = 1 (sqrt case) or 4 (half case)
    long s = tag.omega_kind() == OmegaKind::HalfIntegral ? 4 : 1;
    Int bmax = floor_sqrt(bound_sq * s / Rat(-tag.d()));
    for (Int b = -bmax; b <= bmax; ++b) {
        // center of the a-range: the real part of -b*omega
        Rat center = tag.omega_kind() == OmegaKind::HalfIntegral ? Rat(-b) / 2 : Rat(0);
        Int spread = floor_sqrt(bound_sq) + 1;
        Int lo = num(center - Rat(spread)) / den(center - Rat(spread)) - 1;
        Int hi = lo + 2 * spread + 4;
        for (Int a = lo; a <= hi; ++a) {
            QuadInt z(tag, a, b);
            if (Rat(z.norm()) < bound_sq) out.push_back(z);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const QuadInt& l, const QuadInt& r) { return cmp_canonical(l, r) < 0; });
    return out;
}

std::string display_entry(const QuadRat& z) {
    if (auto zi = is_integral(z)) {
        const Int& a = zi->a();
        const Int& b = zi->b();
        long t = z.tag().omega_trace();
        if (b == 1 && a == 0) return "w";
        if (b == -1 && a == t) return "wbar";
        if (b == -1 && a == 0) return "-w";
        if (b == 2 && a == 0) return "2*w";
        if (b == -2 && a == 2 * t) return "2*wbar";
        return zi->str();
    }
    return z.str();
}

std::vector<QuadInt> unit_group(FieldTag tag) {
    std::vector<QuadInt> units = {QuadInt::one(tag), -QuadInt::one(tag)};
    if (tag.d() == -1) {
        units.push_back(QuadInt::omega(tag));
        units.push_back(-QuadInt::omega(tag));
    } else if (tag.d() == -3) {
        QuadInt w = QuadInt::omega(tag);
        QuadInt w2 = w * w;  // omega - 1
        units.push_back(w);
        units.push_back(-w);
        units.push_back(w2);
        units.push_back(-w2);
    }
    return units;
}

}  // namespace frieze
