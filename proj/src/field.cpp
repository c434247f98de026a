#include "frieze/field.hpp"

#include <stdexcept>

namespace frieze {

FieldTag::FieldTag(long d) : d_(d) {
    if (d >= 0) throw std::invalid_argument("FieldTag: d must be negative");
    if (d < -1000000) throw std::invalid_argument("FieldTag: |d| too large for square-free check");
    if (!is_square_free(d)) throw std::invalid_argument("FieldTag: d must be square-free");
    // -d mod 4 arithmetic: d = 1 mod 4 <=> (d % 4 + 4) % 4 == 1
    long r = ((d % 4) + 4) % 4;
    kind_ = (r == 1) ? OmegaKind::HalfIntegral : OmegaKind::Sqrt;
    disc_ = (r == 1) ? d : 4 * d;
}

}  // namespace frieze
