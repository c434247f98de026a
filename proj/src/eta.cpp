#include "frieze/eta.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace frieze {

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
}

Mat2 Mat2::identity(FieldTag tag) {
    return Mat2{QuadRat::one(tag), QuadRat::zero(tag), QuadRat::zero(tag), QuadRat::one(tag)};
}

Mat2 Mat2::neg_identity(FieldTag tag) {
    return Mat2{-QuadRat::one(tag), QuadRat::zero(tag), QuadRat::zero(tag), -QuadRat::one(tag)};
}

Mat2 eta(const QuadRat& c) {
    FieldTag tag = c.tag();
    return Mat2{c, -QuadRat::one(tag), QuadRat::one(tag), QuadRat::zero(tag)};
}

QuiddityCycle make_cycle(FieldTag tag, const std::vector<QuadInt>& entries) {
    std::vector<QuadRat> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.embed());
    return QuiddityCycle(tag, std::move(out));
}

QuiddityCycle make_integer_cycle(const std::vector<long>& entries) {
    FieldTag tag = Ring::integers().tag();
    std::vector<QuadRat> out;
    out.reserve(entries.size());
    for (long e : entries) out.push_back(QuadRat::from_rational(tag, Rat(e)));
    return QuiddityCycle(tag, std::move(out));
}

std::string QuiddityCycle::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ", ";
        os << entries[i].str();
    }
    os << ")";
    return os.str();
}

Mat2 eta_product(const QuiddityCycle& cycle) {
    Mat2 acc = Mat2::identity(cycle.tag);
    for (const auto& c : cycle.entries) acc = acc * eta(c);
    return acc;
}

bool is_quiddity_cycle(const QuiddityCycle& cycle) {
    if (cycle.size() < 2) return false;
    return eta_product(cycle) == Mat2::neg_identity(cycle.tag);
}

std::string rule_name(RewriteRule r) {
    switch (r) {
        case RewriteRule::RemoveOne: return "remove-one";
        case RewriteRule::RemoveMinusOne: return "remove-minus-one";
        case RewriteRule::MergeZero: return "merge-zero";
    }
    return "?";
}

RewriteResult rewrite_step(const QuiddityCycle& cycle, RewriteRule rule, std::size_t position) {
    const std::size_t m = cycle.size();
    if (m < 3) throw std::invalid_argument("rewrite_step: cycle too short");
    if (position >= m) throw std::invalid_argument("rewrite_step: position out of range");
    const FieldTag tag = cycle.tag;
    const QuadRat& at = cycle.entries[position];
    const QuadRat one = QuadRat::one(tag);

    const std::size_t left = (position + m - 1) % m;
    const std::size_t right = (position + 1) % m;

    if (rule == RewriteRule::MergeZero) {
        if (!at.is_zero()) throw std::invalid_argument("rewrite_step: entry is not 0");
        QuadRat merged = cycle.entries[left] + cycle.entries[right];
        std::vector<QuadRat> out;
        out.reserve(m - 2);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == position || i == right) continue;
            if (i == left)
                out.push_back(merged);
            else
                out.push_back(cycle.entries[i]);
        }
        return {QuiddityCycle(tag, std::move(out)), true};
    }

    bool flip;
    QuadRat delta = one;
    if (rule == RewriteRule::RemoveOne) {
        if (at != one) throw std::invalid_argument("rewrite_step: entry is not 1");
        flip = false;
        delta = -one;
    } else {
        if (at != -one) throw std::invalid_argument("rewrite_step: entry is not -1");
        flip = true;
    }

    std::vector<QuadRat> out;
    out.reserve(m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == position) continue;
        if (i == left || i == right)
            out.push_back(cycle.entries[i] + delta);
        else
            out.push_back(cycle.entries[i]);
    }
    return {QuiddityCycle(tag, std::move(out)), flip};
}

QuiddityCycle insert_one(const QuiddityCycle& cycle, std::size_t gap) {
    // inverse of RemoveOne at the gap between entries gap and gap+1 (cyclic)
    const std::size_t m = cycle.size();
    if (m < 2 || gap >= m) throw std::invalid_argument("insert_one: bad position");
    const QuadRat one = QuadRat::one(cycle.tag);
    std::vector<QuadRat> out(cycle.entries);
    out[gap] = out[gap] + one;
    std::size_t next = (gap + 1) % m;
    out[next] = out[next] + one;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap) + 1, one);
    return QuiddityCycle(cycle.tag, std::move(out));
}

QuiddityCycle insert_minus_one(const QuiddityCycle& cycle, std::size_t gap) {
    const std::size_t m = cycle.size();
    if (m < 2 || gap >= m) throw std::invalid_argument("insert_minus_one: bad position");
    const QuadRat one = QuadRat::one(cycle.tag);
    std::vector<QuadRat> out(cycle.entries);
    out[gap] = out[gap] - one;
    std::size_t next = (gap + 1) % m;
    out[next] = out[next] - one;
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(gap) + 1, -one);
    return QuiddityCycle(cycle.tag, std::move(out));
}

QuiddityCycle split_zero(const QuiddityCycle& cycle, std::size_t position, const QuadRat& left_part) {
    const std::size_t m = cycle.size();
    if (position >= m) throw std::invalid_argument("split_zero: bad position");
    QuadRat right_part = cycle.entries[position] - left_part;
    std::vector<QuadRat> out;
    out.reserve(m + 2);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == position) {
            out.push_back(left_part);
            out.push_back(QuadRat::zero(cycle.tag));
            out.push_back(right_part);
        } else {
            out.push_back(cycle.entries[i]);
        }
    }
    return QuiddityCycle(cycle.tag, std::move(out));
}

std::pair<std::size_t, std::size_t> small_entry_witnesses(const QuiddityCycle& cycle) {
    const std::size_t m = cycle.size();
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < m; ++i)
        if (abs_sq(cycle.entries[i]) < 4) small.push_back(i);
    if (small.size() < 2)
        throw std::logic_error("small_entry_witnesses: fewer than two small entries on a quiddity cycle");
    if (m <= 3) return {small[0], small[1]};
    for (std::size_t x = 0; x < small.size(); ++x) {
        for (std::size_t y = x + 1; y < small.size(); ++y) {
            std::size_t j = small[x], k = small[y];
            bool neighbours = (k - j == 1) || (j == 0 && k == m - 1);
            if (!neighbours) return {j, k};
        }
    }
    throw std::logic_error("small_entry_witnesses: no non-neighbouring pair on a quiddity cycle");
}

int ReductionTrace::sign_flips() const {
    int n = 0;
    for (const auto& s : steps)
        if (s.sign_flip) ++n;
    return n;
}

namespace {

bool is_terminal(const QuiddityCycle& c) {
    const QuadRat zero = QuadRat::zero(c.tag);
    const QuadRat one = QuadRat::one(c.tag);
    if (c.size() == 2) return c.entries[0] == zero && c.entries[1] == zero;
    if (c.size() == 3)
        return c.entries[0] == one && c.entries[1] == one && c.entries[2] == one;
    return false;
}

std::optional<std::size_t> leftmost_equal(const QuiddityCycle& c, const QuadRat& v) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.entries[i] == v) return i;
    return std::nullopt;
}

RewriteRule rule_for_entry(const QuiddityCycle& c, std::size_t i) {
    return c.entries[i].is_zero() ? RewriteRule::MergeZero : RewriteRule::RemoveMinusOne;
}

// Non-neighbouring index pairs whose entries lie in {-1, 0}; mixed pairs
// (one -1, one 0) first, then lexicographic.
std::optional<std::pair<std::size_t, std::size_t>> pick_pair(const QuiddityCycle& c) {
    const std::size_t m = c.size();
    const QuadRat zero = QuadRat::zero(c.tag);
    const QuadRat mone = -QuadRat::one(c.tag);
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < m; ++i)
        if (c.entries[i] == zero || c.entries[i] == mone) small.push_back(i);
    std::optional<std::pair<std::size_t, std::size_t>> fallback;
    for (std::size_t x = 0; x < small.size(); ++x) {
        for (std::size_t y = x + 1; y < small.size(); ++y) {
            std::size_t j = small[x], k = small[y];
            bool neighbours = (k - j == 1) || (j == 0 && k == m - 1);
            if (neighbours) continue;
            if (c.entries[j] != c.entries[k]) return std::make_pair(j, k);
            if (!fallback) fallback = std::make_pair(j, k);
        }
    }
    return fallback;
}

}  // namespace

ReductionTrace reduce_to_canonical(const QuiddityCycle& cycle) {
    if (!is_quiddity_cycle(cycle))
        throw std::invalid_argument("reduce_to_canonical: not a quiddity cycle");
    for (const auto& e : cycle.entries)
        if (!is_integral(e)) throw std::invalid_argument("reduce_to_canonical: entry outside O_d");

    ReductionTrace trace{ReductionTrace::Status::Terminal, cycle, cycle, {}};
    QuiddityCycle cur = cycle;
    const QuadRat one = QuadRat::one(cycle.tag);

    auto apply = [&](RewriteRule rule, std::size_t pos) {
        RewriteResult r = rewrite_step(cur, rule, pos);
        trace.steps.push_back({rule, pos, r.sign_flip, cur, r.cycle});
        cur = std::move(r.cycle);
    };

    while (!is_terminal(cur)) {
        if (cur.size() >= 3) {
            if (auto p = leftmost_equal(cur, one)) {
                apply(RewriteRule::RemoveOne, *p);
                continue;
            }
            if (auto pair = pick_pair(cur)) {
                auto [j, k] = *pair;
                // apply at k first so index j stays valid; the only index
                // shift is a MergeZero at the last slot, which removes slot 0
                RewriteRule rule_k = rule_for_entry(cur, k);
                bool wraps = (rule_k == RewriteRule::MergeZero && k == cur.size() - 1);
                apply(rule_k, k);
                std::size_t j2 = wraps ? j - 1 : j;
                if (cur.size() >= 3) apply(rule_for_entry(cur, j2), j2);
                continue;
            }
        }
        trace.status = ReductionTrace::Status::Stuck;
        break;
    }
    trace.terminal = cur;
    return trace;
}

}  // namespace frieze
