#include "frieze/orders.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace frieze {

namespace {

void require_same_tag(const FieldTag& a, const FieldTag& b) {
    if (a != b) throw std::invalid_argument("field tag mismatch");
}

Int fdiv_r(const Int& x, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// omega-coordinates (u, v) of a field element, u + v*omega.
std::pair<Rat, Rat> omega_coords(const QuadRat& z) {
    if (z.tag().omega_kind() == OmegaKind::HalfIntegral)
        return {z.x() - z.y(), 2 * z.y()};
    return {z.x(), z.y()};
}

QuadInt mul_omega(const QuadInt& z) {
    // omega * (x + y*omega) = -n*y + (x + t*y)*omega
    const FieldTag& tag = z.tag();
    Int t(tag.omega_trace()), n(tag.omega_norm());
    return QuadInt(tag, -n * z.b(), z.a() + t * z.b());
}

}  // namespace

IdealHNF::IdealHNF(FieldTag tag, Int a, Int b, Int c)
    : tag_(tag), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ <= 0 || c_ <= 0) throw std::invalid_argument("IdealHNF: need a, c > 0");
    if (b_ < 0 || b_ >= a_) throw std::invalid_argument("IdealHNF: need 0 <= b < a");
    if (!divides(c_, a_) || !divides(c_, b_))
        throw std::invalid_argument("IdealHNF: c must divide a and b");
    // closure under omega: a/c | N(b/c + omega)
    Int ap = a_ / c_, bp = b_ / c_;
    Int t(tag_.omega_trace()), n(tag_.omega_norm());
    if (!divides(ap, bp * bp + t * bp + n))
        throw std::invalid_argument("IdealHNF: lattice is not an O_d-module");
}

bool IdealHNF::contains(const QuadInt& z) const {
    require_same_tag(tag_, z.tag());
    if (!divides(c_, z.b())) return false;
    return divides(a_, z.a() - (z.b() / c_) * b_);
}

IdealHNF IdealHNF::conj() const {
    Int t(tag_.omega_trace());
    QuadInt g1(tag_, a_, 0);
    QuadInt g2(tag_, b_ + c_ * t, -c_);
    return from_generators(tag_, {g1, g2});
}

std::string IdealHNF::str() const {
    std::ostringstream os;
    os << "(" << to_decimal(a_) << ", " << QuadInt(tag_, b_, c_).str() << ")";
    return os.str();
}

IdealHNF IdealHNF::principal(const QuadInt& gen) {
    if (gen.is_zero()) throw std::invalid_argument("principal: zero generator");
    return from_generators(gen.tag(), {gen});
}

IdealHNF IdealHNF::from_generators(FieldTag tag, const std::vector<QuadInt>& gens) {
    // Z-basis of the O_d-module generated: close under omega, then a 2-row HNF.
    std::vector<std::pair<Int, Int>> vecs;
    for (const QuadInt& g : gens) {
        require_same_tag(tag, g.tag());
        if (g.is_zero()) continue;
        vecs.emplace_back(g.a(), g.b());
        QuadInt go = mul_omega(g);
        vecs.emplace_back(go.a(), go.b());
    }
    if (vecs.empty()) throw std::invalid_argument("from_generators: zero ideal");

    // (b0, c): c = gcd of all omega-parts, realized as a lattice vector
    Int b0 = 0, c = 0;
    for (const auto& [x, y] : vecs) {
        if (y == 0) continue;
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), y.get_mpz_t());
        b0 = s * b0 + t * x;
        c = g;
    }
    if (c == 0) throw std::invalid_argument("from_generators: lattice not of full rank");
    if (c < 0) {
        c = -c;
        b0 = -b0;
    }

    Int a = 0;
    for (const auto& [x, y] : vecs) a = gcd(a, x - (y / c) * b0);
    if (a == 0) throw std::invalid_argument("from_generators: lattice not of full rank");
    if (a < 0) a = -a;
    Int b = fdiv_r(b0, a);
    return IdealHNF(tag, a, b, c);
}

IdealHNF ideal_mul(const IdealHNF& lhs, const IdealHNF& rhs) {
    require_same_tag(lhs.tag(), rhs.tag());
    const FieldTag& tag = lhs.tag();
    QuadInt l1(tag, lhs.a(), 0), l2(tag, lhs.b(), lhs.c());
    QuadInt r1(tag, rhs.a(), 0), r2(tag, rhs.b(), rhs.c());
    return IdealHNF::from_generators(tag, {l1 * r1, l1 * r2, l2 * r1, l2 * r2});
}

IdealHNF ideal_pow(const IdealHNF& base, unsigned long e) {
    IdealHNF acc = IdealHNF::unit_ideal(base.tag());
    IdealHNF sq = base;
    while (e) {
        if (e & 1) acc = ideal_mul(acc, sq);
        e >>= 1;
        if (e) sq = ideal_mul(sq, sq);
    }
    return acc;
}

FractionalIdeal ideal_inverse(const IdealHNF& ideal) {
    return {ideal.conj(), ideal.norm()};
}

bool ideal_contains(const IdealHNF& outer, const IdealHNF& inner) {
    return outer.contains(QuadInt(inner.tag(), inner.a(), 0)) &&
           outer.contains(QuadInt(inner.tag(), inner.b(), inner.c()));
}

std::vector<PrimeAbove> primes_above(const Int& p, FieldTag tag) {
    if (p < 2 || !is_probable_prime(p)) throw std::invalid_argument("primes_above: p must be prime");
    Int t(tag.omega_trace()), n(tag.omega_norm());

    // roots mod p of x^2 - t*x + n, the minimal polynomial of omega
    std::vector<Int> roots;
    if (p == 2) {
        for (Int r = 0; r <= 1; ++r)
            if ((r * r - t * r + n) % 2 == 0) roots.push_back(r);
    } else {
        Int disc = Int(tag.disc());
        int chi = legendre_symbol(disc, p);
        if (chi != -1) {
            Int inv2;
            Int two = 2;
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
            if (chi == 0) {
                roots.push_back(fdiv_r(t * inv2, p));
            } else {
                Int s = sqrt_mod(disc, p);
                Int r1 = fdiv_r((t + s) * inv2, p);
                Int r2 = fdiv_r((t - s) * inv2, p);
                roots.push_back(r1);
                roots.push_back(r2);
            }
        }
    }

    std::vector<PrimeAbove> out;
    if (roots.empty()) {
        out.push_back({IdealHNF(tag, p, 0, p), 1, 2, SplitType::Inert});
        return out;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() == 1) {
        out.push_back({IdealHNF(tag, p, fdiv_r(-roots[0], p), 1), 2, 1, SplitType::Ramified});
        return out;
    }
    for (const Int& r : roots)
        out.push_back({IdealHNF(tag, p, fdiv_r(-r, p), 1), 1, 1, SplitType::Split});
    std::sort(out.begin(), out.end(),
              [](const PrimeAbove& l, const PrimeAbove& r) { return l.ideal.b() < r.ideal.b(); });
    return out;
}

std::vector<BinaryQuadraticForm> reduced_forms(FieldTag tag) {
    const Int D(tag.disc());
    std::vector<BinaryQuadraticForm> forms;
    Int bmax = floor_sqrt(Rat(-D) / 3);
    Int b0 = (((D % 2) + 2) % 2 == 0) ? 0 : 1;
    for (Int b = b0; b <= bmax; b += 2) {
        Int m4 = b * b - D;
        Int m = m4 / 4;
        for (Int a = b > 0 ? b : Int(1); a * a <= m; ++a) {
            if (!divides(a, m)) continue;
            Int cc = m / a;
            if (gcd(gcd(a, b), cc) != 1) continue;
            forms.push_back({a, b, cc});
            if (b > 0 && b != a && a != cc) forms.push_back({a, -b, cc});
        }
    }
    return forms;
}

long class_number(FieldTag tag) {
    return static_cast<long>(reduced_forms(tag).size());
}

long valuation(const IdealHNF& ideal, const IdealHNF& prime) {
    long v = 0;
    IdealHNF pk = prime;
    while (ideal_contains(pk, ideal)) {
        ++v;
        pk = ideal_mul(pk, prime);
    }
    return v;
}

bool FactoredIdeal::has_denominator() const {
    return std::any_of(factors.begin(), factors.end(),
                       [](const auto& f) { return f.second < 0; });
}

FactoredIdeal factor_principal(const QuadRat& alpha, FieldTag tag) {
    require_same_tag(alpha.tag(), tag);
    if (alpha.is_zero()) throw std::invalid_argument("factor_principal: alpha must be nonzero");

    auto [u, v] = omega_coords(alpha);
    Int t_den = lcm(den(u), den(v));
    QuadInt beta(tag, num(u * Rat(t_den)), num(v * Rat(t_den)));
    IdealHNF beta_ideal = IdealHNF::principal(beta);

    std::vector<std::pair<IdealHNF, long>> exps;
    auto bump = [&exps](const IdealHNF& p, long e) {
        for (auto& [q, f] : exps)
            if (q == p) {
                f += e;
                return;
            }
        exps.emplace_back(p, e);
    };

    std::vector<std::pair<Int, int>> nfactors;
    try {
        nfactors = factor_integer(beta.norm() * t_den);
    } catch (const std::domain_error&) {
        throw std::domain_error("factor_principal: norm too large to factor");
    }
    for (const auto& [p, e] : nfactors) {
        (void)e;
        for (const PrimeAbove& pa : primes_above(p, tag)) {
            long vb = valuation(beta_ideal, pa.ideal);
            if (vb) bump(pa.ideal, vb);
            if (t_den != 1) {
                Int m = t_den;
                long vd = 0;
                while (divides(p, m)) {
                    m /= p;
                    ++vd;
                }
                if (vd) bump(pa.ideal, -static_cast<long>(pa.ramification) * vd);
            }
        }
    }
    std::erase_if(exps, [](const auto& f) { return f.second == 0; });
    std::sort(exps.begin(), exps.end(), [](const auto& l, const auto& r) {
        Int ln = l.first.norm(), rn = r.first.norm();
        if (ln != rn) return ln < rn;
        return l.first.b() < r.first.b();
    });

    // reconstruction: (beta) * prod_{e<0} P^-e == (t_den) * prod_{e>0} P^e
    IdealHNF lhs = beta_ideal;
    IdealHNF rhs = IdealHNF::principal(QuadInt::from_int(tag, t_den));
    for (const auto& [p, e] : exps) {
        if (e < 0)
            lhs = ideal_mul(lhs, ideal_pow(p, static_cast<unsigned long>(-e)));
        else
            rhs = ideal_mul(rhs, ideal_pow(p, static_cast<unsigned long>(e)));
    }
    if (!(lhs == rhs)) throw std::logic_error("factor_principal: reconstruction failed");

    return {alpha, std::move(exps)};
}

std::optional<QuadInt> is_principal(const IdealHNF& ideal) {
    const FieldTag& tag = ideal.tag();
    const Int M = ideal.norm();
    const Int absD(-tag.disc());
    Int t(tag.omega_trace());

    // elements s*a + u*(b + c*omega) = x + u*c*omega; 4*N = (2x + t*y)^2 + |D|*y^2
    Int umax_num = 4 * M / (absD * ideal.c() * ideal.c());
    Int umax = floor_sqrt(Rat(umax_num));
    for (Int u = 0; u <= umax; ++u) {
        Int y = u * ideal.c();
        Int rhs = 4 * M - absD * y * y;
        Int root;
        if (!is_perfect_square(rhs, root)) continue;
        for (int sgn : {1, -1}) {
            if (sgn == -1 && root == 0) break;
            Int x2 = sgn * root - t * y;
            if (!divides(Int(2), x2)) continue;
            Int x = x2 / 2;
            if (!divides(ideal.a(), x - u * ideal.b())) continue;
            QuadInt z(tag, x, y);
            if (z.norm() == M) return z;
        }
    }
    return std::nullopt;
}

namespace {

// Solve cols * coeffs = target over Z for 2-dimensional column vectors,
// tracking the unimodular column transform.
std::optional<std::vector<Int>> solve_in_lattice(std::vector<std::array<Int, 2>> cols,
                                                 std::array<Int, 2> target) {
    const std::size_t n = cols.size();
    std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto colop = [&](std::size_t k, std::size_t j, const Int& q) {
        // col_k -= q * col_j
        cols[k][0] -= q * cols[j][0];
        cols[k][1] -= q * cols[j][1];
        for (std::size_t i = 0; i < n; ++i) u[i][k] -= q * u[i][j];
    };

    auto clear_row = [&](int row, const std::vector<std::size_t>& active) -> std::optional<std::size_t> {
        for (;;) {
            std::optional<std::size_t> pivot;
            for (std::size_t j : active)
                if (cols[j][row] != 0 && (!pivot || abs(cols[j][row]) < abs(cols[*pivot][row])))
                    pivot = j;
            if (!pivot) return std::nullopt;
            bool done = true;
            for (std::size_t k : active) {
                if (k == *pivot || cols[k][row] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), cols[k][row].get_mpz_t(), cols[*pivot][row].get_mpz_t());
                colop(k, *pivot, q);
                if (cols[k][row] != 0) done = false;
            }
            if (done) return pivot;
        }
    };

    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::optional<std::size_t> p2 = clear_row(1, all);

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (!p2 || i != *p2) rest.push_back(i);
    std::optional<std::size_t> p1 = clear_row(0, rest);

    // triangular solve
    Int t2 = 0, t1 = 0;
    Int ry = target[1], rx = target[0];
    if (p2) {
        if (!divides(cols[*p2][1], ry)) return std::nullopt;
        t2 = ry / cols[*p2][1];
        rx -= t2 * cols[*p2][0];
        ry = 0;
    }
    if (ry != 0) return std::nullopt;
    if (p1) {
        if (!divides(cols[*p1][0], rx)) return std::nullopt;
        t1 = rx / cols[*p1][0];
        rx = 0;
    }
    if (rx != 0) return std::nullopt;

    std::vector<Int> coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (p2) coeffs[i] += t2 * u[i][*p2];
        if (p1) coeffs[i] += t1 * u[i][*p1];
    }
    return coeffs;
}

}  // namespace

std::optional<std::pair<QuadInt, QuadInt>> bezout(const QuadInt& g1, const QuadInt& g2) {
    require_same_tag(g1.tag(), g2.tag());
    const FieldTag& tag = g1.tag();
    if (g1.is_zero() || g2.is_zero()) return std::nullopt;
    QuadInt w1 = mul_omega(g1), w2 = mul_omega(g2);
    std::vector<std::array<Int, 2>> cols = {{g1.a(), g1.b()},
                                            {w1.a(), w1.b()},
                                            {g2.a(), g2.b()},
                                            {w2.a(), w2.b()}};
    auto sol = solve_in_lattice(std::move(cols), {Int(1), Int(0)});
    if (!sol) return std::nullopt;
    QuadInt x(tag, (*sol)[0], (*sol)[1]);
    QuadInt y(tag, (*sol)[2], (*sol)[3]);
    if (x * g1 + y * g2 != QuadInt::one(tag))
        throw std::logic_error("bezout: witness failed substitution");
    return std::make_pair(x, y);
}

QuadRat eval_poly(const std::vector<Int>& coeffs, const QuadRat& alpha) {
    QuadRat acc = QuadRat::zero(alpha.tag());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * alpha + QuadRat::from_rational(alpha.tag(), Rat(*it));
    return acc;
}

std::optional<std::vector<Int>> zalpha_membership(const QuadRat& x, const QuadRat& alpha,
                                                  int n_max) {
    if (n_max < 1) throw std::invalid_argument("zalpha_membership: n_max must be >= 1");
    require_same_tag(x.tag(), alpha.tag());
    for (int N = 1; N <= n_max; ++N) {
        std::vector<QuadRat> powers;
        powers.reserve(static_cast<std::size_t>(N) + 1);
        QuadRat p = QuadRat::one(alpha.tag());
        for (int i = 0; i <= N; ++i) {
            powers.push_back(p);
            p = p * alpha;
        }
        Int t_all = lcm(lcm(den(x.x()), den(x.y())), Int(1));
        for (const auto& q : powers) t_all = lcm(t_all, lcm(den(q.x()), den(q.y())));

        std::vector<std::array<Int, 2>> cols;
        cols.reserve(powers.size());
        for (const auto& q : powers)
            cols.push_back({num(q.x() * Rat(t_all)), num(q.y() * Rat(t_all))});
        std::array<Int, 2> target = {num(x.x() * Rat(t_all)), num(x.y() * Rat(t_all))};
        auto sol = solve_in_lattice(std::move(cols), target);
        if (!sol) continue;
        if (eval_poly(*sol, alpha) != x)
            throw std::logic_error("zalpha_membership: solution failed evaluation");
        return sol;
    }
    return std::nullopt;
}

bool UnitCertificate::self_check() const {
    if (unit.is_zero()) return false;
    QuadRat u = unit.embed();
    if (u * unit_inverse != QuadRat::one(alpha.tag())) return false;
    if (eval_poly(unit_coeffs, alpha) != u) return false;
    if (eval_poly(inverse_coeffs, alpha) != unit_inverse) return false;
    if (unit_norm == 1 || unit_norm == 0) return false;
    return unit_norm == Rat(unit.norm());
}

UnitSearchResult find_infinite_unit(const QuadRat& alpha, FieldTag tag, long power_budget,
                                    int n_max) {
    require_same_tag(alpha.tag(), tag);
    if (alpha.is_zero()) throw std::invalid_argument("find_infinite_unit: alpha must be nonzero");
    if (is_integral(alpha))
        return {UnitSearchResult::Status::NoDenominator, std::nullopt,
                "alpha lies in O_d; the construction needs a denominator"};

    long h_used;
    QuadInt gamma1 = QuadInt::zero(tag), gamma2 = QuadInt::zero(tag);
    if (alpha.is_rational()) {
        // rational case: alpha itself is a reduced fraction, h = 1
        h_used = 1;
        gamma1 = QuadInt::from_int(tag, num(alpha.x()));
        gamma2 = QuadInt::from_int(tag, den(alpha.x()));
    } else {
        FactoredIdeal fact = factor_principal(alpha, tag);
        h_used = class_number(tag);
        IdealHNF iplus = IdealHNF::unit_ideal(tag), iminus = IdealHNF::unit_ideal(tag);
        for (const auto& [p, e] : fact.factors) {
            unsigned long ee = static_cast<unsigned long>((e > 0 ? e : -e) * h_used);
            if (e > 0)
                iplus = ideal_mul(iplus, ideal_pow(p, ee));
            else
                iminus = ideal_mul(iminus, ideal_pow(p, ee));
        }
        auto g2 = is_principal(iminus);
        if (!g2) throw std::logic_error("find_infinite_unit: P^h not principal");
        gamma2 = *g2;
        auto g1 = is_integral(alpha.pow(static_cast<unsigned long>(h_used)) * gamma2.embed());
        if (!g1) throw std::logic_error("find_infinite_unit: alpha^h * gamma2 not integral");
        gamma1 = *g1;
        if (!(IdealHNF::principal(gamma1) == iplus))
            throw std::logic_error("find_infinite_unit: gamma1 does not generate the plus part");
    }

    if (!bezout(gamma1, gamma2))
        throw std::logic_error("find_infinite_unit: gamma1, gamma2 not coprime");

    std::vector<QuadInt> candidates;
    for (const QuadInt& u : unit_group(tag)) candidates.push_back(gamma2 * u);
    for (const QuadInt& u : unit_group(tag)) {
        QuadInt cand = gamma2.conj() * u;
        if (is_integral(alpha.pow(static_cast<unsigned long>(h_used)) * cand.embed()))
            candidates.push_back(cand);
    }

    for (long k = 1; k <= power_budget; ++k) {
        for (const QuadInt& cand : candidates) {
            QuadRat inv = cand.embed().inverse().pow(static_cast<unsigned long>(k));
            auto inv_coeffs = zalpha_membership(inv, alpha, n_max);
            if (!inv_coeffs) continue;
            QuadInt u = cand.pow(static_cast<unsigned long>(k));
            auto u_coeffs = zalpha_membership(u.embed(), alpha, n_max);
            if (!u_coeffs) continue;
            UnitCertificate cert{alpha,  h_used, gamma1,      gamma2,      k,
                                 u,      inv,    *u_coeffs,   *inv_coeffs, Rat(u.norm())};
            if (!cert.self_check())
                throw std::logic_error("find_infinite_unit: certificate failed self-check");
            return {UnitSearchResult::Status::Found, std::move(cert), ""};
        }
    }
    std::ostringstream os;
    os << "no unit found with k <= " << power_budget << " and degree <= " << n_max
       << "; gamma1 = " << gamma1.str() << ", gamma2 = " << gamma2.str() << ", h = " << h_used;
    return {UnitSearchResult::Status::BudgetExceeded, std::nullopt, os.str()};
}

}  // namespace frieze
