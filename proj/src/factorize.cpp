#include "biorder/factorize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace biorder {

namespace {

// ----------------------------------------------------------------- mod-p ---
// Dense polynomials over F_p for small primes, coefficients in [0, p).

using ModPoly = std::vector<int64_t>;

void mp_trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

int64_t mod_pow(int64_t b, int64_t e, int64_t p)
{
    int64_t r = 1 % p;
    b = (b % p + p) % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

int64_t mod_inv(int64_t a, int64_t p) { return mod_pow(a, p - 2, p); }

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, int64_t p)
{
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mp_trim(r);
    return r;
}

// quotient and remainder; b nonzero
std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, int64_t p)
{
    const int db = mp_deg(b);
    if (db < 0) throw std::domain_error("mp_divmod: zero divisor");
    if (mp_deg(a) < db) return {{}, std::move(a)};
    ModPoly q(static_cast<size_t>(mp_deg(a) - db + 1), 0);
    const int64_t inv = mod_inv(b.back(), p);
    while (mp_deg(a) >= db) {
        const int da = mp_deg(a);
        const int64_t f = a.back() * inv % p;
        q[static_cast<size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] =
                ((a[static_cast<size_t>(da - db + i)] - f * b[static_cast<size_t>(i)]) % p + p) % p;
        mp_trim(a);
    }
    mp_trim(q);
    return {std::move(q), std::move(a)};
}

ModPoly mp_rem(ModPoly a, const ModPoly& b, int64_t p)
{
    return mp_divmod(std::move(a), b, p).second;
}

ModPoly mp_monic(ModPoly a, int64_t p)
{
    if (a.empty() || a.back() == 1) return a;
    const int64_t inv = mod_inv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, int64_t p)
{
    while (!b.empty()) {
        ModPoly r = mp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return mp_monic(std::move(a), p);
}

ModPoly mp_derivative(const ModPoly& a, int64_t p)
{
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<int64_t>(i) % p * (a[i] % p) % p;
    mp_trim(r);
    return r;
}

ModPoly mp_powmod_x(int64_t e, const ModPoly& f, int64_t p)
{
    ModPoly r{1};
    ModPoly b{0, 1};
    b = mp_rem(std::move(b), f, p);
    while (e) {
        if (e & 1) r = mp_rem(mp_mul(r, b, p), f, p);
        b = mp_rem(mp_mul(b, b, p), f, p);
        e >>= 1;
    }
    return r;
}

ModPoly to_mod(const IntPoly& a, int64_t p)
{
    ModPoly r(a.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        Int m = a.coeffs()[i] % Int(static_cast<long>(p));
        long v = m.get_si();
        if (v < 0) v += p;
        r[i] = v;
    }
    mp_trim(r);
    return r;
}

// Berlekamp over F_p, fully deterministic: the splitting loop walks the whole
// residue range, which is cheap at the small primes the selector picks.
// f monic and squarefree mod p.
std::vector<ModPoly> berlekamp(const ModPoly& f, int64_t p)
{
    const int n = mp_deg(f);
    if (n <= 1) return {f};

    // Q[i][j] = coefficient of x^j in x^(p*i) mod f.
    std::vector<std::vector<int64_t>> Q(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        ModPoly xi = mp_powmod_x(static_cast<int64_t>(p) * i, f, p);
        for (int j = 0; j <= mp_deg(xi); ++j)
            Q[static_cast<size_t>(i)][static_cast<size_t>(j)] = xi[static_cast<size_t>(j)];
    }
    // v(x)^p = v(x) mod f  <=>  (Q^T - I) v = 0.
    std::vector<std::vector<int64_t>> M(static_cast<size_t>(n),
                                        std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t v = Q[static_cast<size_t>(j)][static_cast<size_t>(i)] % p;
            if (i == j) v = ((v - 1) % p + p) % p;
            M[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        }

    std::vector<int> pivotCol;
    int row = 0;
    std::vector<int> pivotOfRow(static_cast<size_t>(n), -1);
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r2 = row; r2 < n; ++r2)
            if (M[static_cast<size_t>(r2)][static_cast<size_t>(col)] != 0) { pr = r2; break; }
        if (pr < 0) continue;
        std::swap(M[static_cast<size_t>(pr)], M[static_cast<size_t>(row)]);
        const int64_t inv = mod_inv(M[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int c2 = 0; c2 < n; ++c2)
            M[static_cast<size_t>(row)][static_cast<size_t>(c2)] =
                M[static_cast<size_t>(row)][static_cast<size_t>(c2)] * inv % p;
        for (int r2 = 0; r2 < n; ++r2) {
            if (r2 == row) continue;
            const int64_t fmul = M[static_cast<size_t>(r2)][static_cast<size_t>(col)];
            if (fmul == 0) continue;
            for (int c2 = 0; c2 < n; ++c2)
                M[static_cast<size_t>(r2)][static_cast<size_t>(c2)] =
                    ((M[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -
                      fmul * M[static_cast<size_t>(row)][static_cast<size_t>(c2)]) % p + p) % p;
        }
        pivotOfRow[static_cast<size_t>(row)] = col;
        pivotCol.push_back(col);
        ++row;
    }

    std::vector<ModPoly> basis; // null-space vectors, one per free column
    std::vector<bool> isPivot(static_cast<size_t>(n), false);
    for (int c : pivotCol) isPivot[static_cast<size_t>(c)] = true;
    for (int col = 0; col < n; ++col) {
        if (isPivot[static_cast<size_t>(col)]) continue;
        ModPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (int r2 = 0; r2 < row; ++r2) {
            const int pc = pivotOfRow[static_cast<size_t>(r2)];
            v[static_cast<size_t>(pc)] =
                ((-M[static_cast<size_t>(r2)][static_cast<size_t>(col)]) % p + p) % p;
        }
        mp_trim(v);
        basis.push_back(std::move(v));
    }

    const size_t r = basis.size(); // = number of irreducible factors
    std::vector<ModPoly> factors{mp_monic(f, p)};
    if (r <= 1) return factors;

    for (const ModPoly& v : basis) {
        if (factors.size() == r) break;
        if (mp_deg(v) < 1) continue; // constant kernel vector cannot split
        std::vector<ModPoly> next;
        for (ModPoly& g : factors) {
            if (mp_deg(g) <= 1) {
                next.push_back(std::move(g));
                continue;
            }
            ModPoly rest = std::move(g);
            for (int64_t s = 0; s < p && mp_deg(rest) > 0; ++s) {
                ModPoly vs = v;
                vs[0] = ((vs[0] - s) % p + p) % p;
                mp_trim(vs);
                ModPoly d = mp_gcd(rest, vs, p);
                if (mp_deg(d) > 0 && mp_deg(d) < mp_deg(rest)) {
                    next.push_back(d);
                    rest = mp_monic(mp_divmod(std::move(rest), d, p).first, p);
                }
            }
            if (mp_deg(rest) > 0) next.push_back(std::move(rest));
        }
        factors = std::move(next);
    }
    if (factors.size() != r)
        throw std::runtime_error("berlekamp: splitting incomplete");
    for (auto& g : factors) g = mp_monic(std::move(g), p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// --------------------------------------------------------------- lifting ---

// Symmetric representative of a mod m in (-m/2, m/2].
Int sym_mod(const Int& a, const Int& m)
{
    Int r = a % m;
    if (sign(r) < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly poly_sym_mod(const IntPoly& a, const Int& m)
{
    std::vector<Int> c = a.coeffs();
    for (Int& x : c) x = sym_mod(x, m);
    return IntPoly(std::move(c));
}

// Division with remainder of a by MONIC b over Z/m (coefficients reduced
// symmetrically at the end).
std::pair<IntPoly, IntPoly> poly_divmod_monic_mod(const IntPoly& a, const IntPoly& b, const Int& m)
{
    if (b.is_zero() || sym_mod(b.leading() - 1, m) != 0)
        throw std::domain_error("poly_divmod_monic_mod: divisor not monic mod m");
    std::vector<Int> rem = a.coeffs();
    auto degOf = [&rem, &m]() {
        int d = static_cast<int>(rem.size()) - 1;
        while (d >= 0 && sign(sym_mod(rem[static_cast<size_t>(d)], m)) == 0) --d;
        return d;
    };
    const int db = b.degree();
    int da = degOf();
    if (da < db) return {IntPoly(), poly_sym_mod(a, m)};
    std::vector<Int> q(static_cast<size_t>(da - db + 1), Int(0));
    while ((da = degOf()) >= db) {
        Int f = sym_mod(rem[static_cast<size_t>(da)], m);
        q[static_cast<size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i) {
            Int& slot = rem[static_cast<size_t>(da - db + i)];
            slot = sym_mod(slot - f * b.coeff(i), m);
        }
    }
    IntPoly qq = poly_sym_mod(IntPoly(std::move(q)), m);
    IntPoly rr = poly_sym_mod(IntPoly(std::move(rem)), m);
    return {qq, rr};
}

struct HenselPair {
    IntPoly g, h, s, t;
};

// One quadratic Hensel step: from a factorization f = g*h (mod m) with
// Bezout data s*g + t*h = 1 (mod m), h monic, produce the same data mod m^2.
HenselPair hensel_step(const Int& m, const IntPoly& f, const IntPoly& g, const IntPoly& h,
                       const IntPoly& s, const IntPoly& t)
{
    const Int M = m * m;
    IntPoly e = poly_sym_mod(f - g * h, M);
    auto [q, r] = poly_divmod_monic_mod(s * e, h, M);
    IntPoly G = poly_sym_mod(g + t * e + q * g, M);
    IntPoly H = poly_sym_mod(h + r, M);
    IntPoly b = poly_sym_mod(s * G + t * H - IntPoly::one(), M);
    auto [c, d] = poly_divmod_monic_mod(s * b, H, M);
    IntPoly S = poly_sym_mod(s - d, M);
    IntPoly T = poly_sym_mod(t - t * b - c * G, M);
    return {G, H, S, T};
}

// Extended Euclid over F_p: s*g + t*h = 1 (mod p); g, h coprime mod p.
std::pair<IntPoly, IntPoly> bezout_mod_p(const IntPoly& g, const IntPoly& h, int64_t p)
{
    ModPoly a = to_mod(g, p), b = to_mod(h, p);
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = mp_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
        ModPoly s2 = s0, t2 = t0;
        // s2 -= q*s1 ; t2 -= q*t1
        {
            ModPoly qs = mp_mul(q, s1, p);
            ModPoly qt = mp_mul(q, t1, p);
            s2.resize(std::max(s2.size(), qs.size()), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
            t2.resize(std::max(t2.size(), qt.size()), 0);
            for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
            mp_trim(s2);
            mp_trim(t2);
        }
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (mp_deg(a) != 0)
        throw std::runtime_error("bezout_mod_p: inputs not coprime mod p");
    const int64_t inv = mod_inv(a[0], p);
    for (auto& x : s0) x = x * inv % p;
    for (auto& x : t0) x = x * inv % p;
    auto lift = [](const ModPoly& mp) {
        std::vector<Int> c(mp.size());
        for (size_t i = 0; i < mp.size(); ++i) c[i] = Int(static_cast<long>(mp[i]));
        return IntPoly(std::move(c));
    };
    return {lift(s0), lift(t0)};
}

// Multifactor Hensel lifting: f = lc(f) * prod(modFactors) (mod p) with the
// modFactors monic and pairwise coprime mod p; returns monic lifts mod p^l
// (symmetric range) whose product matches f up to the unit.
std::vector<IntPoly> hensel_lift(int64_t p, const IntPoly& f,
                                 const std::vector<IntPoly>& modFactors, unsigned l)
{
    const size_t r = modFactors.size();
    const Int pl = biorder::pow(Int(static_cast<long>(p)), l);
    if (r == 1) {
        // monicize f mod p^l
        Int lcInv;
        {
            Int lc = f.leading() % pl;
            if (sign(lc) < 0) lc += pl;
            if (mpz_invert(lcInv.get_mpz_t(), lc.get_mpz_t(), pl.get_mpz_t()) == 0)
                throw std::runtime_error("hensel_lift: leading coefficient not invertible");
        }
        return {poly_sym_mod(f * lcInv, pl)};
    }
    const size_t k = r / 2;

    IntPoly g = IntPoly(f.leading());
    for (size_t i = 0; i < k; ++i) g = g * modFactors[i];
    IntPoly h = IntPoly::one();
    for (size_t i = k; i < r; ++i) h = h * modFactors[i];
    g = poly_sym_mod(g, Int(static_cast<long>(p)));
    h = poly_sym_mod(h, Int(static_cast<long>(p)));
    auto [s, t] = bezout_mod_p(g, h, p);
    s = poly_sym_mod(s, Int(static_cast<long>(p)));
    t = poly_sym_mod(t, Int(static_cast<long>(p)));

    // lift in quadratic steps until the modulus reaches p^l
    Int m(static_cast<long>(p));
    unsigned reached = 1;
    IntPoly G = g, H = h, S = s, T = t;
    while (reached < l) {
        HenselPair hp = hensel_step(m, f, G, H, S, T);
        G = std::move(hp.g); H = std::move(hp.h);
        S = std::move(hp.s); T = std::move(hp.t);
        m = m * m;
        reached *= 2;
    }
    G = poly_sym_mod(G, pl);
    H = poly_sym_mod(H, pl);

    std::vector<IntPoly> left =
        hensel_lift(p, G, std::vector<IntPoly>(modFactors.begin(), modFactors.begin() + static_cast<long>(k)), l);
    std::vector<IntPoly> right =
        hensel_lift(p, H, std::vector<IntPoly>(modFactors.begin() + static_cast<long>(k), modFactors.end()), l);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// ----------------------------------------------------------- af recombine ---

Int l1_norm(const IntPoly& a)
{
    Int s = 0;
    for (const Int& x : a.coeffs()) s += biorder::abs(x);
    return s;
}

Int l2_norm_ceil(const IntPoly& a)
{
    Int s = 0;
    for (const Int& x : a.coeffs()) s += x * x;
    return isqrt_ceil(s);
}

// Zassenhaus: factor a primitive squarefree polynomial with positive leading
// coefficient, degree >= 2.
std::vector<IntPoly> zassenhaus(const IntPoly& f)
{
    const int n = f.degree();
    const Int b = f.leading();

    // prime selection: smallest p not dividing lc(f) with f squarefree mod p
    int64_t p = 0;
    for (int64_t cand = 2;; ++cand) {
        bool isPrime = cand >= 2;
        for (int64_t d = 2; d * d <= cand; ++d)
            if (cand % d == 0) { isPrime = false; break; }
        if (!isPrime) continue;
        if (sign(Int(b % Int(static_cast<long>(cand)))) == 0) continue;
        ModPoly fp = to_mod(f, cand);
        if (mp_deg(fp) != n) continue;
        ModPoly d = mp_gcd(fp, mp_derivative(fp, cand), cand);
        if (mp_deg(d) == 0) { p = cand; break; }
        if (cand > 10000)
            throw std::runtime_error("zassenhaus: no usable prime found");
    }

    std::vector<ModPoly> modFactors = berlekamp(mp_monic(to_mod(f, p), p), p);
    if (modFactors.size() == 1) return {f}; // irreducible mod p => irreducible

    // Mignotte-style bounds.  Any primitive divisor g | f satisfies
    // ||g||_1 <= 2^n * ||f||_2; candidate products carry a leading factor up
    // to |b|, so the subset test threshold is tau = (b * 2^n * ||f||_2)^2 and
    // the lift precision must exceed 2*tau for the symmetric range to certify
    // integer equality.
    const Int mig = biorder::pow(Int(2), static_cast<unsigned long>(n)) * l2_norm_ceil(f);
    const Int tau = (biorder::abs(b) * mig) * (biorder::abs(b) * mig);
    unsigned l = 1;
    {
        Int pl(static_cast<long>(p));
        while (pl <= 2 * tau) {
            pl *= Int(static_cast<long>(p));
            ++l;
        }
    }

    std::vector<IntPoly> liftIn;
    liftIn.reserve(modFactors.size());
    for (const ModPoly& g : modFactors) {
        std::vector<Int> c(g.size());
        for (size_t i = 0; i < g.size(); ++i) c[i] = Int(static_cast<long>(g[i]));
        liftIn.emplace_back(std::move(c));
    }
    std::vector<IntPoly> lifted = hensel_lift(p, f, liftIn, l);
    const Int pl = biorder::pow(Int(static_cast<long>(p)), l);

    // exhaustive subset recombination
    std::vector<IntPoly> result;
    std::vector<size_t> T(lifted.size());
    for (size_t i = 0; i < T.size(); ++i) T[i] = i;
    IntPoly fCur = f;
    Int bCur = fCur.leading();

    size_t s = 1;
    while (2 * s <= T.size()) {
        // enumerate s-subsets of T in lexicographic index order
        std::vector<size_t> idx(s);
        for (size_t i = 0; i < s; ++i) idx[i] = i;
        bool found = false;
        while (true) {
            IntPoly G = IntPoly(bCur);
            for (size_t i : idx) G = poly_sym_mod(G * lifted[T[i]], pl);
            IntPoly H = IntPoly(bCur);
            {
                size_t t2 = 0;
                for (size_t j = 0; j < T.size(); ++j) {
                    if (t2 < s && idx[t2] == j) { ++t2; continue; }
                    H = poly_sym_mod(H * lifted[T[j]], pl);
                }
            }
            if (l1_norm(G) * l1_norm(H) <= tau) {
                // certified split
                result.push_back(G.primitive_part());
                fCur = H.primitive_part();
                bCur = fCur.leading();
                std::vector<size_t> rest;
                for (size_t j = 0; j < T.size(); ++j) {
                    bool inS = false;
                    for (size_t i : idx)
                        if (i == j) { inS = true; break; }
                    if (!inS) rest.push_back(T[j]);
                }
                T = std::move(rest);
                found = true;
                break;
            }
            // next s-subset
            size_t i = s;
            while (i > 0) {
                --i;
                if (idx[i] != i + T.size() - s) {
                    ++idx[i];
                    for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) { i = SIZE_MAX; break; }
            }
            if (i == SIZE_MAX) break;
        }
        if (!found) ++s;
    }
    result.push_back(fCur);
    return result;
}

// rational roots of a primitive polynomial; each returned as (num, den) in
// lowest terms with den > 0
std::vector<Rat> rational_roots(const IntPoly& f)
{
    std::vector<Rat> roots;
    if (f.degree() < 1) return roots;
    auto divisors = [](Int v) {
        v = biorder::abs(v);
        std::vector<Int> ds;
        for (Int d = 1; d * d <= v; ++d) {
            if (sign(Int(v % d)) == 0) {
                ds.push_back(d);
                Int other = v / d;
                if (other != d) ds.push_back(other);
            }
        }
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    const std::vector<Int> ps = divisors(f.constant_term());
    const std::vector<Int> qs = divisors(f.leading());
    for (const Int& q : qs)
        for (const Int& pp : ps) {
            for (int sg : {1, -1}) {
                Rat cand(Int(sg) * pp, q);
                cand.canonicalize();
                if (sign(f.evaluate(cand)) == 0) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace

std::vector<IntPoly> factor_squarefree_primitive(const IntPoly& f)
{
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("factor_squarefree_primitive: need degree >= 1");
    std::vector<IntPoly> out;
    IntPoly g = f;

    // strip x^k
    if (sign(g.constant_term()) == 0) {
        size_t k = 0;
        while (sign(g.coeff(static_cast<int>(k))) == 0) ++k;
        std::vector<Int> c(g.coeffs().begin() + static_cast<long>(k), g.coeffs().end());
        g = IntPoly(std::move(c));
        out.push_back(IntPoly::x()); // squarefree input: k == 1
    }

    // strip rational roots
    for (const Rat& r : rational_roots(g)) {
        // root p/q  ->  factor (q x - p)
        IntPoly lin(std::vector<Int>{Int(-r.get_num()), Int(r.get_den())});
        g = g.div_exact(lin);
        out.push_back(lin);
    }

    if (g.degree() == 1) {
        out.push_back(g);
    } else if (g.degree() >= 2) {
        IntPoly gg = sign(g.leading()) < 0 ? -g : g;
        std::vector<IntPoly> rest = zassenhaus(gg);
        out.insert(out.end(), rest.begin(), rest.end());
    }
    return out;
}

RatPoly Factorization::expand() const
{
    RatPoly r(unit);
    for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
    return r;
}

Factorization factor_rationals(const IntPoly& a)
{
    if (a.is_zero()) throw std::invalid_argument("factor_rationals: zero polynomial");
    Factorization out;
    out.unit = Rat(a.leading());
    if (a.degree() == 0) return out;

    std::vector<std::pair<RatPoly, int>> acc;
    for (const auto& [sq, mult] : squarefree_decomposition(a)) {
        for (const IntPoly& irr : factor_squarefree_primitive(sq))
            acc.emplace_back(irr.monic(), mult);
    }
    // merge identical factors (cannot happen across Yun parts, but keep the
    // invariant airtight), then sort canonically
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) {
        return poly_less(x.first, y.first);
    });
    for (auto& [f, m] : acc) {
        if (!out.factors.empty() && out.factors.back().first == f)
            out.factors.back().second += m;
        else
            out.factors.emplace_back(std::move(f), m);
    }
    return out;
}

} // namespace biorder
