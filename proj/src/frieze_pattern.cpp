#include "frieze/frieze_pattern.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frieze {

FriezePattern::FriezePattern(Ring ring, long height, std::vector<std::vector<QuadRat>> rows)
    : ring_(ring), height_(height), rows_(std::move(rows)) {
    if (height_ < 0) throw std::invalid_argument("FriezePattern: negative height");
    if (rows_.size() != static_cast<std::size_t>(height_ + 3))
        throw std::invalid_argument("FriezePattern: wrong row count");
    for (const auto& row : rows_)
        if (row.size() != static_cast<std::size_t>(height_ + 4))
            throw std::invalid_argument("FriezePattern: wrong row length");
}

const QuadRat& FriezePattern::at(long i, long j) const {
    const long p = period();
    long i0 = i % p;
    if (i0 < 0) i0 += p;
    long j0 = j - (i - i0);
    long off = j0 - i0;
    if (off < 0 || off > height_ + 3)
        throw std::out_of_range("FriezePattern::at: index outside the band");
    return rows_[static_cast<std::size_t>(i0)][static_cast<std::size_t>(off)];
}

bool FriezePattern::operator==(const FriezePattern& o) const {
    return ring_ == o.ring_ && height_ == o.height_ && rows_ == o.rows_;
}

std::string FriezePattern::staircase() const {
    const long n = height_;
    std::size_t width = 1;
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(n + 3));
    for (long i = 0; i <= n + 2; ++i) {
        for (long off = 0; off <= n + 3; ++off) {
            std::string s = display_entry(rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(off)]);
            width = std::max(width, s.size());
            cells[static_cast<std::size_t>(i)].push_back(std::move(s));
        }
    }
    std::ostringstream os;
    for (long i = 0; i <= n + 2; ++i) {
        for (long k = 0; k < i; ++k) os << std::string(width + 1, ' ');
        for (long off = 0; off <= n + 3; ++off) {
            const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(off)];
            os << std::string(width - s.size(), ' ') << s;
            if (off < n + 3) os << " ";
        }
        os << "\n";
    }
    return os.str();
}

FriezePattern from_quiddity(const QuiddityCycle& cycle, Ring ring) {
    if (!is_quiddity_cycle(cycle))
        throw std::invalid_argument("from_quiddity: not a quiddity cycle");
    const long m = static_cast<long>(cycle.size());
    if (m < 3) throw std::invalid_argument("from_quiddity: need length >= 3");
    const long n = m - 3;
    const FieldTag tag = cycle.tag;

    auto quid = [&](long j) -> const QuadRat& {
        long r = j % m;
        if (r < 0) r += m;
        return cycle.entries[static_cast<std::size_t>(r)];
    };

    std::vector<std::vector<QuadRat>> rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i <= n + 2; ++i) {
        std::vector<QuadRat> row;
        row.reserve(static_cast<std::size_t>(n + 4));
        row.push_back(QuadRat::zero(tag));  // c(i,i)
        row.push_back(QuadRat::one(tag));   // c(i,i+1)
        for (long j = i + 2; j <= n + i + 3; ++j) {
            // c(i,j) = c(i,j-1) * q(j-2) - c(i,j-2)
            const QuadRat& prev = row[static_cast<std::size_t>(j - 1 - i)];
            const QuadRat& prev2 = row[static_cast<std::size_t>(j - 2 - i)];
            row.push_back(prev * quid(j - 2) - prev2);
        }
        rows.push_back(std::move(row));
    }
    FriezePattern f(ring, n, std::move(rows));
    // borders close because the eta-product is -id
    for (long i = 0; i <= n + 2; ++i) {
        if (f.at(i, n + i + 2) != QuadRat::one(tag) || f.at(i, n + i + 3) != QuadRat::zero(tag))
            throw std::logic_error("from_quiddity: border failed to close");
    }
    return f;
}

FriezePattern from_quiddity(const QuiddityCycle& cycle) {
    return from_quiddity(cycle, Ring::quadratic(cycle.tag));
}

ValidationReport validate(const FriezePattern& f) {
    const long n = f.height();
    const FieldTag tag = f.tag();
    const QuadRat one = QuadRat::one(tag);

    bool unimodular = true;
    for (long i = 0; i <= n + 2 && unimodular; ++i)
        for (long j = i + 1; j <= n + i + 2; ++j) {
            if (f.at(i, j) * f.at(i + 1, j + 1) - f.at(i, j + 1) * f.at(i + 1, j) != one) {
                unimodular = false;
                break;
            }
        }

    bool tame = true;
    for (long i = 0; i <= n + 2 && tame; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j) {
            const QuadRat a = f.at(i, j), b = f.at(i, j + 1), c = f.at(i, j + 2);
            const QuadRat d = f.at(i + 1, j), e = f.at(i + 1, j + 1), g = f.at(i + 1, j + 2);
            const QuadRat h = f.at(i + 2, j), k = f.at(i + 2, j + 1), l = f.at(i + 2, j + 2);
            QuadRat det = a * (e * l - g * k) - b * (d * l - g * h) + c * (d * k - e * h);
            if (!det.is_zero()) {
                tame = false;
                break;
            }
        }

    bool nonzero = true;
    for (long i = 0; i <= n + 2 && nonzero; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j)
            if (f.at(i, j).is_zero()) {
                nonzero = false;
                break;
            }

    bool glide = true;
    for (long i = 0; i <= n + 2 && glide; ++i)
        for (long j = i; j <= n + i + 3; ++j)
            if (f.at(i, j) != f.at(j, n + i + 3)) {
                glide = false;
                break;
            }

    return {unimodular, tame, nonzero, glide};
}

namespace {

FriezePattern negate_parity(const FriezePattern& f, int parity) {
    const long n = f.height();
    std::vector<std::vector<QuadRat>> rows;
    rows.reserve(static_cast<std::size_t>(n + 3));
    for (long i = 0; i <= n + 2; ++i) {
        std::vector<QuadRat> row;
        row.reserve(static_cast<std::size_t>(n + 4));
        for (long off = 0; off <= n + 3; ++off) {
            QuadRat v = f.at(i, i + off);
            row.push_back(off % 2 == parity ? -v : v);
        }
        rows.push_back(std::move(row));
    }
    return FriezePattern(f.ring(), n, std::move(rows));
}

bool positive_integer(const QuadRat& z) {
    return z.is_rational() && is_integer(z.x()) && z.x() > 0;
}

bool rational_integer(const QuadRat& z) {
    return z.is_rational() && is_integer(z.x());
}

bool borders_ok(const FriezePattern& f) {
    const long n = f.height();
    const FieldTag tag = f.tag();
    for (long i = 0; i <= n + 2; ++i) {
        if (!f.at(i, i).is_zero() || !f.at(i, i + n + 3).is_zero()) return false;
        if (f.at(i, i + 1) != QuadRat::one(tag) || f.at(i, i + n + 2) != QuadRat::one(tag))
            return false;
    }
    return true;
}

bool all_interior(const FriezePattern& f, bool (*pred)(const QuadRat&)) {
    const long n = f.height();
    for (long i = 0; i <= n + 2; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j)
            if (!pred(f.at(i, j))) return false;
    return true;
}

}  // namespace

FriezePattern twist(const FriezePattern& f) {
    if (f.height() % 2 == 0) throw std::invalid_argument("twist: height must be odd");
    return negate_parity(f, 0);
}

std::string class_name(FriezeClass c) {
    switch (c) {
        case FriezeClass::ConwayCoxeter: return "ConwayCoxeter";
        case FriezeClass::TwistedConwayCoxeter: return "TwistedConwayCoxeter";
        case FriezeClass::NonIntegral: return "NonIntegral";
        case FriezeClass::ContainsZero: return "ContainsZero";
        case FriezeClass::OtherIntegral: return "OtherIntegral";
    }
    return "?";
}

Classification classify(const FriezePattern& f) {
    const long n = f.height();
    for (long i = 0; i <= n + 2; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j)
            if (f.at(i, j).is_zero()) return {FriezeClass::ContainsZero, std::nullopt};
    if (!all_interior(f, rational_integer)) return {FriezeClass::NonIntegral, std::nullopt};
    if (all_interior(f, positive_integer)) return {FriezeClass::ConwayCoxeter, std::nullopt};
    for (int parity : {0, 1}) {
        FriezePattern g = negate_parity(f, parity);
        if (!borders_ok(g)) continue;
        if (all_interior(g, positive_integer) && validate(g).unimodular)
            return {FriezeClass::TwistedConwayCoxeter, parity};
    }
    return {FriezeClass::OtherIntegral, std::nullopt};
}

SignLemmaReport check_sign_lemma(const FriezePattern& f) {
    const long n = f.height();
    for (long i = 0; i <= n + 2; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j) {
            const QuadRat& z = f.at(i, j);
            if (!z.is_rational() || abs_sq(z) * 2 <= 1)
                throw std::domain_error("check_sign_lemma: entries must be real with abs_sq > 1/2");
        }

    auto sign = [&f](long i, long j) -> int { return f.at(i, j).x() > 0 ? 1 : -1; };

    bool blocks = true;
    for (long i = 0; i <= n + 2 && blocks; ++i)
        for (long j = i + 2; j <= n + i + 1; ++j)
            if (sign(i, j) * sign(i + 1, j) * sign(i, j + 1) * sign(i + 1, j + 1) != 1) {
                blocks = false;
                break;
            }

    bool rows = true;
    for (long i = 0; i <= n + 2 && rows; ++i)
        for (long l = 1; l <= n + 1; ++l)
            if (sign(i, i + 2) * sign(i + 1, i + 2) * sign(i, i + l + 1) * sign(i + 1, i + l + 1) != 1) {
                rows = false;
                break;
            }

    bool quiddity_const = true;
    int qsign = sign(0, 2);
    for (long i = 1; i <= n + 2; ++i)
        if (sign(i, i + 2) != qsign) {
            quiddity_const = false;
            break;
        }

    return {blocks, rows, quiddity_const, qsign};
}

QuiddityCycle extract_quiddity(const FriezePattern& f) {
    std::vector<QuadRat> entries;
    const long n = f.height();
    entries.reserve(static_cast<std::size_t>(n + 3));
    for (long i = 0; i <= n + 2; ++i) entries.push_back(f.at(i, i + 2));
    return QuiddityCycle(f.tag(), std::move(entries));
}

}  // namespace frieze
