#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "frieze/qint.hpp"

namespace frieze {

/// 2x2 matrix over Q(sqrt(d)).
struct Mat2 {
    QuadRat m11, m12, m21, m22;

    Mat2 operator*(const Mat2& o) const;
    bool operator==(const Mat2& o) const = default;

    static Mat2 identity(FieldTag tag);
    static Mat2 neg_identity(FieldTag tag);
    QuadRat det() const { return m11 * m22 - m12 * m21; }
};

/// eta(c) = [[c, -1], [1, 0]], determinant 1.
Mat2 eta(const QuadRat& c);

/// Cyclic sequence (c_1, ..., c_m); a quiddity cycle when the ordered
/// eta-product is -id.
struct QuiddityCycle {
    FieldTag tag;
    std::vector<QuadRat> entries;

    QuiddityCycle(FieldTag t, std::vector<QuadRat> e) : tag(t), entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }
    bool operator==(const QuiddityCycle& o) const { return tag == o.tag && entries == o.entries; }

    std::string str() const;
};

QuiddityCycle make_cycle(FieldTag tag, const std::vector<QuadInt>& entries);
QuiddityCycle make_integer_cycle(const std::vector<long>& entries);

Mat2 eta_product(const QuiddityCycle& cycle);
bool is_quiddity_cycle(const QuiddityCycle& cycle);

enum class RewriteRule { RemoveOne, RemoveMinusOne, MergeZero };

std::string rule_name(RewriteRule r);

struct RewriteResult {
    QuiddityCycle cycle;
    bool sign_flip;
};

/// One application of the reduction formulas at the given position:
///   RemoveOne:      (..a, 1, b..) -> (..a-1, b-1..)        no sign
///   RemoveMinusOne: (..a,-1, b..) -> (..a+1, b+1..)        sign flip
///   MergeZero:      (..a, 0, b..) -> (..a+b..)             sign flip
/// Positions are cyclic; the entry at `position` must match the rule.
/// Requires length >= 3.
RewriteResult rewrite_step(const QuiddityCycle& cycle, RewriteRule rule, std::size_t position);

/// Inverse moves, used to grow cycles. An InsertOne keeps the eta-product;
/// the other two flip its sign.
QuiddityCycle insert_one(const QuiddityCycle& cycle, std::size_t gap);
QuiddityCycle insert_minus_one(const QuiddityCycle& cycle, std::size_t gap);
QuiddityCycle split_zero(const QuiddityCycle& cycle, std::size_t position, const QuadRat& left_part);

/// Two distinct indices with abs_sq < 4; cyclically non-neighbouring when
/// the cycle is longer than 3. Input must be a quiddity cycle.
std::pair<std::size_t, std::size_t> small_entry_witnesses(const QuiddityCycle& cycle);

struct ReductionStep {
    RewriteRule rule;
    std::size_t position;
    bool sign_flip;
    QuiddityCycle before;
    QuiddityCycle after;
};

struct ReductionTrace {
    enum class Status { Terminal, Stuck };

    Status status;
    QuiddityCycle initial;
    QuiddityCycle terminal;  // (0,0) / (1,1,1) when Terminal, stuck cycle otherwise
    std::vector<ReductionStep> steps;

    bool terminated() const { return status == Status::Terminal; }
    int sign_flips() const;
};

/// Deterministic reduction: remove the leftmost 1 when present; otherwise
/// rewrite the preferred non-neighbouring pair of entries from {-1, 0}
/// (a mixed -1/0 pair when available), so the introduced signs cancel.
/// Entries must lie in O_d.
ReductionTrace reduce_to_canonical(const QuiddityCycle& cycle);

}  // namespace frieze
