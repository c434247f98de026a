#include "frieze/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <type_traits>

namespace frieze {

namespace {

struct KernelOverflow {};

// Arithmetic in O_d over the basis {1, omega}, omega^2 = t*omega - n,
// templated so the same search runs on fixed-width words (fast path, with an
// overflow guard falling back) and on GMP integers (exact reference path).
template <class Z>
struct Coeffs {
    Z a, b;
    bool operator==(const Coeffs&) const = default;
};

template <class Z>
struct KernelRing {
    Z t, n;
    std::int64_t guard_limit = 0;

    Z checked(Z v) const {
        if constexpr (std::is_same_v<Z, std::int64_t>) {
            if (v > guard_limit || v < -guard_limit) throw KernelOverflow{};
        }
        return v;
    }

    Coeffs<Z> mul(const Coeffs<Z>& l, const Coeffs<Z>& r) const {
        Z bb = l.b * r.b;
        return {checked(l.a * r.a - n * bb), checked(l.a * r.b + l.b * r.a + t * bb)};
    }
    Coeffs<Z> sub(const Coeffs<Z>& l, const Coeffs<Z>& r) const {
        return {checked(l.a - r.a), checked(l.b - r.b)};
    }
    Coeffs<Z> neg(const Coeffs<Z>& v) const { return {Z(-v.a), Z(-v.b)}; }
    Z norm(const Coeffs<Z>& v) const {
        return checked(v.a * v.a + t * v.a * v.b + n * v.b * v.b);
    }
    bool is_zero(const Coeffs<Z>& v) const { return v.a == 0 && v.b == 0; }
};

// eta-product of a quiddity prefix, row-major 2x2
template <class Z>
using ProdMat = std::array<Coeffs<Z>, 4>;

template <class Z>
struct Searcher {
    KernelRing<Z> ring;
    long height = 0;
    long m = 0;  // cycle length = height + 3
    Z bound{};
    bool positive_only = false;
    bool integers_only = false;
    std::vector<Coeffs<Z>> candidates;

    std::vector<Coeffs<Z>> prefix;
    std::vector<ProdMat<Z>> pstack;
    // dt[i][delta] = c(i, i+delta); interior entries have delta in [2, height+1]
    std::vector<std::vector<Coeffs<Z>>> dt;
    std::vector<std::vector<Coeffs<Z>>> found;

    void init() {
        Coeffs<Z> zero{Z(0), Z(0)}, one{Z(1), Z(0)};
        prefix.assign(static_cast<std::size_t>(m - 2), zero);
        pstack.assign(static_cast<std::size_t>(m - 1), ProdMat<Z>{one, zero, zero, one});
        dt.assign(static_cast<std::size_t>(m),
                  std::vector<Coeffs<Z>>(static_cast<std::size_t>(height + 2), zero));
        for (auto& row : dt) row[1] = one;
    }

    bool admissible(const Coeffs<Z>& v) const {
        if (ring.is_zero(v)) return false;
        if (integers_only && v.b != 0) return false;
        if (positive_only && !(v.b == 0 && v.a > 0)) return false;
        return ring.norm(v) <= bound;
    }

    // Place candidate as prefix entry K-1: extend the eta-product and the
    // newly determined diagonal entries; false when an interior entry
    // vanishes (dead branch).
    bool place(long K, const Coeffs<Z>& cand) {
        prefix[static_cast<std::size_t>(K - 1)] = cand;
        const ProdMat<Z>& p = pstack[static_cast<std::size_t>(K - 1)];
        // P * eta(q) = [[p11*q + p12, -p11], [p21*q + p22, -p21]]
        pstack[static_cast<std::size_t>(K)] = ProdMat<Z>{
            ring.sub(ring.mul(p[0], cand), ring.neg(p[1])), ring.neg(p[0]),
            ring.sub(ring.mul(p[2], cand), ring.neg(p[3])), ring.neg(p[2])};
        long ilo = K - height > 0 ? K - height : 0;
        for (long i = K - 1; i >= ilo; --i) {
            long delta = K + 1 - i;
            auto& row = dt[static_cast<std::size_t>(i)];
            Coeffs<Z> v =
                (i == K - 1)
                    ? cand
                    : ring.sub(ring.mul(row[static_cast<std::size_t>(delta - 1)], cand),
                               row[static_cast<std::size_t>(delta - 2)]);
            if (ring.is_zero(v)) return false;
            row[static_cast<std::size_t>(delta)] = v;
        }
        return true;
    }

    // The last two entries are forced: with P the eta-product of the prefix,
    // the cycle closes to -id exactly when P11 == 1, x = -P12, y = P21.
    void close() {
        const ProdMat<Z>& p = pstack[static_cast<std::size_t>(m - 2)];
        if (!(p[0].a == 1 && p[0].b == 0)) return;
        Coeffs<Z> x = ring.neg(p[1]);
        Coeffs<Z> y = p[2];
        if (!admissible(x) || !admissible(y)) return;
        std::vector<Coeffs<Z>> cycle(prefix);
        cycle.push_back(x);
        cycle.push_back(y);
        found.push_back(std::move(cycle));
    }

    void dfs(long K) {
        if (K == m - 2) {
            close();
            return;
        }
        for (const Coeffs<Z>& cand : candidates) {
            if (place(K + 1, cand)) dfs(K + 1);
        }
    }

    void run_first(const Coeffs<Z>& first) {
        init();
        if (place(1, first)) dfs(1);
    }
};

template <class Z>
Z z_from_int(const Int& v);

template <>
std::int64_t z_from_int<std::int64_t>(const Int& v) {
    if (!v.fits_slong_p()) throw KernelOverflow{};
    return v.get_si();
}

template <>
Int z_from_int<Int>(const Int& v) {
    return v;
}

Int int_from_z(std::int64_t v) { return Int(static_cast<long>(v)); }
Int int_from_z(const Int& v) { return v; }

template <class Z>
std::vector<std::vector<QuadInt>> search_cycles(const SearchConfig& cfg) {
    const FieldTag tag = cfg.ring.tag();
    KernelRing<Z> kring{z_from_int<Z>(Int(tag.omega_trace())), z_from_int<Z>(Int(tag.omega_norm())), 0};
    if constexpr (std::is_same_v<Z, std::int64_t>) {
        // every guarded op on inputs bounded by L stays within (n+3)*L^2, so
        // pick L with (n+3)*L^2 < 2^62 and enforce |value| <= L throughout
        const std::int64_t cap = std::int64_t(1) << 62;
        std::int64_t scale = kring.n + 3;
        std::int64_t lim = 1;
        while (4 * lim * lim <= cap / scale) lim *= 2;
        kring.guard_limit = lim;
    }

    Searcher<Z> s;
    s.ring = kring;
    s.height = cfg.height;
    s.m = cfg.height + 3;
    Int ibound = num(cfg.quiddity_bound_sq) / den(cfg.quiddity_bound_sq);
    s.bound = kring.checked(z_from_int<Z>(ibound));
    s.positive_only = cfg.positivity == Positivity::PositiveOnly;
    s.integers_only = cfg.ring.is_integers();

    std::vector<Coeffs<Z>> cands;
    for (const QuadInt& z : small_elements(tag, Rat(ibound + 1))) {
        Coeffs<Z> c{kring.checked(z_from_int<Z>(z.a())), kring.checked(z_from_int<Z>(z.b()))};
        if (s.admissible(c)) cands.push_back(c);
    }
    s.candidates = cands;

    std::vector<std::vector<std::vector<Coeffs<Z>>>> buckets(cands.size());
    const int workers = std::max(1, cfg.workers);
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    auto report = [&]() {
        std::size_t d = done.fetch_add(1) + 1;
        if (cfg.progress) {
            std::scoped_lock lock(progress_mutex);
            cfg.progress(d, cands.size());
        }
    };
    if (workers == 1) {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            Searcher<Z> w = s;
            w.run_first(cands[i]);
            buckets[i] = std::move(w.found);
            report();
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&]() {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= cands.size()) break;
                    Searcher<Z> w = s;
                    w.run_first(cands[i]);
                    buckets[i] = std::move(w.found);
                    report();
                }
            } catch (...) {
                std::scoped_lock lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<std::vector<QuadInt>> cycles;
    for (auto& bucket : buckets) {
        for (auto& cyc : bucket) {
            std::vector<QuadInt> out;
            out.reserve(cyc.size());
            for (const auto& e : cyc) out.emplace_back(tag, int_from_z(e.a), int_from_z(e.b));
            cycles.push_back(std::move(out));
        }
    }
    return cycles;
}

int cmp_cycles(const std::vector<QuadInt>& l, const std::vector<QuadInt>& r) {
    for (std::size_t i = 0; i < l.size() && i < r.size(); ++i) {
        int c = cmp_canonical(l[i], r[i]);
        if (c != 0) return c;
    }
    return l.size() < r.size() ? -1 : (l.size() > r.size() ? 1 : 0);
}

bool exceptional_d(long d) {
    return d == -1 || d == -2 || d == -3 || d == -7 || d == -11;
}

}  // namespace

CensusResult enumerate_friezes(const SearchConfig& cfg) {
    if (cfg.height < 0) throw std::invalid_argument("enumerate_friezes: height must be >= 0");
    if (cfg.quiddity_bound_sq < 4)
        throw std::invalid_argument("enumerate_friezes: bound_sq must be at least 4");

    std::vector<std::vector<QuadInt>> cycles;
    if (cfg.exact_kernel) {
        cycles = search_cycles<Int>(cfg);
    } else {
        try {
            cycles = search_cycles<std::int64_t>(cfg);
        } catch (const KernelOverflow&) {
            cycles = search_cycles<Int>(cfg);
        }
    }

    std::sort(cycles.begin(), cycles.end(),
              [](const auto& l, const auto& r) { return cmp_cycles(l, r) < 0; });

    CensusResult result{cfg.ring, cfg.height, cfg.quiddity_bound_sq, cfg.positivity, {}, false, ""};
    for (const auto& cyc : cycles) {
        QuiddityCycle cycle = make_cycle(cfg.ring.tag(), cyc);
        FriezePattern f = from_quiddity(cycle, cfg.ring);
        ValidationReport rep = validate(f);
        if (!rep.unimodular || !rep.tame)
            throw std::logic_error("enumerate_friezes: constructed frieze failed validation");
        if (!rep.nonzero) continue;  // a zero entry beyond the pruning window
        Classification cls = classify(f);
        result.friezes.push_back({std::move(f), cls});
    }

    // Completeness: integral quiddity entries of a non-zero frieze of height n
    // are bounded by n+1, and over O_d with d outside {-1,-2,-3,-7,-11} every
    // non-zero frieze is integral. For the five exceptional rings no a-priori
    // bound is available and the census is bound-relative.
    Rat full_bound = Rat((cfg.height + 1)) * Rat(cfg.height + 1);
    bool ring_bounded = cfg.ring.is_integers() || !exceptional_d(cfg.ring.tag().d());
    if (ring_bounded && cfg.quiddity_bound_sq >= full_bound) {
        result.complete = true;
        result.completeness_note = "complete: quiddity entries of integral friezes at height n are bounded by n+1";
    } else if (ring_bounded) {
        result.complete = false;
        result.completeness_note = "bound-relative: raise bound_sq to (n+1)^2 for a complete census";
    } else {
        result.complete = false;
        result.completeness_note =
            "bound-relative: no a-priori quiddity bound is known over this ring; entries searched up to the given bound only";
    }
    return result;
}

std::map<FriezeClass, std::size_t> count_by_class(const CensusResult& result) {
    std::map<FriezeClass, std::size_t> counts;
    for (const auto& rec : result.friezes) ++counts[rec.cls.cls];
    if (counts.count(FriezeClass::OtherIntegral))
        throw std::logic_error("count_by_class: OtherIntegral frieze in census");
    return counts;
}

std::string SubringReport::describe() const {
    if (is_integers) return "Z";
    if (omega_index == 1) return "O_" + std::to_string(ring.tag().d()) + " = Z[w]";
    return "Z[" + to_decimal(omega_index) + "*w] in O_" + std::to_string(ring.tag().d());
}

SubringReport frieze_subring_report(const std::vector<CensusResult>& censuses) {
    if (censuses.empty()) throw std::invalid_argument("frieze_subring_report: no censuses");
    Ring ring = censuses.front().ring;
    for (const auto& c : censuses)
        if (!(c.ring == ring)) throw std::invalid_argument("frieze_subring_report: mixed rings");
    if (ring.is_integers()) return {ring, true, Int(0)};

    Int g = 0;
    for (const auto& c : censuses) {
        for (const auto& rec : c.friezes) {
            const FriezePattern& f = rec.pattern;
            for (long i = 0; i <= f.height() + 2; ++i) {
                for (long j = i; j <= f.height() + i + 3; ++j) {
                    auto zi = is_integral(f.at(i, j));
                    if (!zi) throw std::logic_error("frieze_subring_report: entry outside O_d");
                    g = gcd(g, zi->b());
                }
            }
        }
    }
    if (g == 0) return {ring, true, Int(0)};
    return {ring, false, g};
}

}  // namespace frieze
