#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "frieze/frieze_pattern.hpp"

namespace frieze {

enum class Positivity { All, PositiveOnly };

struct SearchConfig {
    Ring ring;
    long height;            // n >= 0, quiddity cycles of length n+3
    Rat quiddity_bound_sq;  // candidate entries z with abs_sq(z) <= bound; >= 4
    Positivity positivity = Positivity::All;
    int workers = 1;
    bool exact_kernel = false;  // skip the fixed-width kernel, use GMP directly
    // called after each finished first-entry branch (serialized internally)
    std::function<void(std::size_t done, std::size_t total)> progress;
};

struct FriezeRecord {
    FriezePattern pattern;
    Classification cls;
};

struct CensusResult {
    Ring ring;
    long height;
    Rat bound_sq;
    Positivity positivity;
    std::vector<FriezeRecord> friezes;  // canonical order, no duplicates
    bool complete;                      // census provably complete for this ring/height
    std::string completeness_note;
};

/// Exhaustive pruned search for all non-zero frieze patterns of the given
/// height whose quiddity entries satisfy abs_sq <= bound. Deterministic
/// output, independent of the worker count.
CensusResult enumerate_friezes(const SearchConfig& cfg);

/// Class histogram. Throws std::logic_error when an OtherIntegral frieze
/// shows up (impossible for non-zero integral friezes).
std::map<FriezeClass, std::size_t> count_by_class(const CensusResult& result);

/// The subring generated by all entries of all census friezes: Z, or the
/// order Z + g*omega*Z determined by the gcd of omega-coordinates.
struct SubringReport {
    Ring ring;
    bool is_integers;
    Int omega_index;  // g >= 1 when !is_integers

    std::string describe() const;
};

SubringReport frieze_subring_report(const std::vector<CensusResult>& censuses);

}  // namespace frieze
