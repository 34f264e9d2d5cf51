#include "smae/expr/poly.hpp"

#include "smae/error.hpp"

#include <algorithm>

namespace smae::expr {

namespace {

constexpr int kHeuristicTries = 6;
constexpr std::size_t kHeuristicBitLimit = 4000000;

mpz_class max_norm(const Poly& p)
{
    mpz_class m = 0;
    for (const auto& t : p.terms()) {
        mpz_class a = abs(t.coef.get_num());
        if (a > m)
            m = a;
    }
    return m;
}

mpz_class integer_content(const Poly& p)
{
    mpz_class g = 0;
    for (const auto& t : p.terms())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    return g;
}

// Monomial gcd of a single monomial with every term of p.
Poly monomial_gcd(const Monomial& m, const Poly& p)
{
    Monomial r;
    for (auto e : m) {
        Var v = Monomial::var_of(e);
        unsigned lo = Monomial::exp_of(e);
        for (const auto& t : p.terms()) {
            lo = std::min(lo, t.mono.exponent(v));
            if (lo == 0)
                break;
        }
        if (lo > 0)
            r.push_back_unchecked(v, lo);
    }
    return Poly::term(r, 1);
}

std::vector<Var> union_vars(const Poly& a, const Poly& b)
{
    auto va = a.variables(), vb = b.variables();
    std::vector<Var> out;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
    return out;
}

std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b);

// Integer-coefficient gcd (content included) of integer polynomials.
std::optional<Poly> heuristic_gcd_z(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.is_zero() ? Poly() : b.primitive_integer().scaled(mpq_class(integer_content(b)));
    if (b.is_zero())
        return a.primitive_integer().scaled(mpq_class(integer_content(a)));
    mpz_class ca = integer_content(a), cb = integer_content(b), c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_constant() || b.is_constant())
        return Poly(mpq_class(c));
    auto g = heuristic_gcd(a.primitive_integer(), b.primitive_integer());
    if (!g)
        return std::nullopt;
    return g->scaled(mpq_class(c));
}

// Primitive gcd of primitive integer polynomials, or nullopt on failure.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b)
{
    auto vars = union_vars(a, b);
    if (vars.empty())
        return Poly(1);
    Var x = vars.front();
    unsigned deg = std::max(a.degree_in(x), b.degree_in(x));
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < kHeuristicTries; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (deg + 1) > kHeuristicBitLimit)
            return std::nullopt;
        Point pt;
        pt.set(x, mpq_class(xi));
        auto gamma = heuristic_gcd_z(a.eval_partial(pt), b.eval_partial(pt));
        if (!gamma)
            return std::nullopt;
        // Symmetric xi-adic reconstruction.
        std::vector<Poly::Term> terms;
        Poly rest = *gamma;
        mpz_class half = xi / 2;
        for (unsigned i = 0; !rest.is_zero(); ++i) {
            if (i > deg + 1)
                break;
            std::vector<Poly::Term> digit;
            for (const auto& t : rest.terms()) {
                mpz_class r;
                mpz_fdiv_r(r.get_mpz_t(), t.coef.get_num_mpz_t(), xi.get_mpz_t());
                if (r > half)
                    r -= xi;
                if (r != 0) {
                    digit.push_back({t.mono, mpq_class(r)});
                    terms.push_back({t.mono.times_var(x, i), mpq_class(r)});
                }
            }
            rest = (rest - Poly::from_sorted_terms(std::move(digit))).scaled(mpq_class(1, 1) / mpq_class(xi));
        }
        if (rest.is_zero() && !terms.empty()) {
            Poly g = Poly::from_terms(std::move(terms)).primitive_integer();
            if (a.divide_exact(g) && b.divide_exact(g))
                return g;
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

Poly leading_in(const Poly& p, Var x, unsigned* degree)
{
    auto coeffs = p.coefficients_in(x);
    auto it = coeffs.rbegin();
    *degree = it->first;
    return it->second;
}

Poly content_in(const Poly& p, Var x)
{
    Poly g;
    for (const auto& [e, c] : p.coefficients_in(x)) {
        g = gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

Poly primitive_in(const Poly& p, Var x)
{
    if (p.is_zero())
        return p;
    Poly c = content_in(p, x);
    return *p.divide_exact(c);
}

Poly pseudo_remainder(Poly a, const Poly& b, Var x)
{
    unsigned db = 0;
    Poly lb = leading_in(b, x, &db);
    while (!a.is_zero()) {
        unsigned da = 0;
        Poly la = leading_in(a, x, &da);
        if (da < db)
            break;
        a = a * lb - (la * b).times_monomial(Monomial::of(x, da - db));
    }
    return a;
}

// Recursive primitive remainder sequence; slow but always succeeds.
Poly prs_gcd(const Poly& a, const Poly& b)
{
    auto va = a.variables(), vb = b.variables();
    Var x = 0;
    bool found = false;
    for (Var v : va)
        if (std::binary_search(vb.begin(), vb.end(), v)) {
            x = v;
            found = true;
            break;
        }
    if (!found)
        return Poly(1);
    Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly c = gcd(ca, cb);
    Poly f = *a.divide_exact(ca), g = *b.divide_exact(cb);
    if (f.degree_in(x) < g.degree_in(x))
        std::swap(f, g);
    while (!g.is_zero()) {
        Poly r = pseudo_remainder(f, g, x);
        f = std::move(g);
        g = r.is_zero() ? r : primitive_in(r, x);
    }
    if (f.degree_in(x) == 0)
        return c;
    return c * primitive_in(f, x);
}

} // namespace

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return Poly(1);
    // Over the truncated ring only the gcd of all coefficients in the
    // nilpotent symbol is a safe common factor.
    if (auto n = symbols::nilpotent(); n && (a.degree_in(*n) > 0 || b.degree_in(*n) > 0)) {
        Poly g;
        for (const Poly* p : {&a, &b})
            for (const auto& [e, c] : p->coefficients_in(*n)) {
                g = gcd(g, c);
                if (g.is_one())
                    return g;
            }
        return g;
    }
    if (a.size() == 1)
        return monomial_gcd(a.leading().mono, b);
    if (b.size() == 1)
        return monomial_gcd(b.leading().mono, a);

    auto va = a.variables(), vb = b.variables();
    std::vector<bool> only_a(kMaxVars, false), only_b(kMaxVars, false);
    bool any_a = false, any_b = false;
    for (Var v : va)
        if (!std::binary_search(vb.begin(), vb.end(), v))
            only_a[v] = any_a = true;
    for (Var v : vb)
        if (!std::binary_search(va.begin(), va.end(), v))
            only_b[v] = any_b = true;
    if (any_a) {
        Poly g = b;
        for (const auto& c : a.coefficients_wrt(only_a)) {
            g = gcd(c, g);
            if (g.is_one())
                break;
        }
        return g.monic();
    }
    if (any_b)
        return gcd(b, a);

    if (a.size() <= b.size()) {
        if (b.divide_exact(a))
            return a.monic();
    } else if (a.divide_exact(b)) {
        return b.monic();
    }

    Poly pa = a.primitive_integer(), pb = b.primitive_integer();
    if (auto g = heuristic_gcd(pa, pb))
        return g->monic();
    return prs_gcd(pa, pb).monic();
}

} // namespace smae::expr
