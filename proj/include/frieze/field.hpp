#pragma once

#include <string>

#include "frieze/numeric.hpp"

namespace frieze {

enum class OmegaKind {
    Sqrt,          // omega_d = sqrt(d), d = 2,3 mod 4
    HalfIntegral,  // omega_d = (1+sqrt(d))/2, d = 1 mod 4
};

/// The field Q(sqrt(d)) and its ring of integers O_d = Z[omega_d],
/// for square-free d < 0.
class FieldTag {
public:
    explicit FieldTag(long d);

    long d() const { return d_; }
    long disc() const { return disc_; }
    OmegaKind omega_kind() const { return kind_; }

    /// omega satisfies omega^2 = trace*omega - norm.
    long omega_trace() const { return kind_ == OmegaKind::HalfIntegral ? 1 : 0; }
    long omega_norm() const { return kind_ == OmegaKind::HalfIntegral ? (1 - d_) / 4 : -d_; }

    bool operator==(const FieldTag& o) const { return d_ == o.d_; }
    bool operator!=(const FieldTag& o) const { return d_ != o.d_; }

private:
    long d_;
    long disc_;
    OmegaKind kind_;
};

/// Coefficient ring for friezes and censuses: either the rational integers Z
/// or a ring of quadratic integers O_d. The Z case still carries a field tag
/// (d = -1) so that values embed into a common arithmetic type; all its
/// elements have zero omega-coordinate.
class Ring {
public:
    static Ring integers() { return Ring(FieldTag(-1), true); }
    static Ring quadratic(FieldTag tag) { return Ring(tag, false); }

    bool is_integers() const { return integers_only_; }
    const FieldTag& tag() const { return tag_; }

    std::string label() const { return integers_only_ ? "Z" : std::to_string(tag_.d()); }

    bool operator==(const Ring& o) const {
        return integers_only_ == o.integers_only_ && (integers_only_ || tag_ == o.tag_);
    }

private:
    Ring(FieldTag tag, bool integers_only) : tag_(tag), integers_only_(integers_only) {}
    FieldTag tag_;
    bool integers_only_;
};

}  // namespace frieze
