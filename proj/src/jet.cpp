#include "smae/jet.hpp"

#include "smae/error.hpp"
#include "smae/expr/context.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <thread>
#include <unordered_map>

namespace smae::jet {

using expr::Var;

const std::vector<Var>& coordinates()
{
    static const std::vector<Var> c = [] {
        std::vector<Var> v = {expr::kVarX, expr::kVarP, expr::kVarY, expr::kVarQ};
        const auto& j = expr::jets::all();
        v.insert(v.end(), j.begin(), j.end());
        return v;
    }();
    return c;
}

expr::Point JetPoint::to_point() const
{
    expr::Point pt;
    const auto& c = coordinates();
    for (int k = 0; k < kJetDimension; ++k)
        pt.set(c[k], values[k]);
    return pt;
}

JetPoint random_jet_point(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    JetPoint t;
    do {
        for (auto& v : t.values) {
            v = mpq_class(num(rng), den(rng));
            v.canonicalize();
        }
    } while (t.values[5] == t.values[6]); // u2 = u3 is the Lagrangian locus
    return t;
}

JetPoint flat_jet_point(const mpq_class& u2, const mpq_class& u3)
{
    if (u2 == u3)
        throw DomainError("u2 = u3 gives a Lagrangian plane");
    JetPoint t;
    for (auto& v : t.values)
        v = 0;
    t.values[5] = u2;
    t.values[6] = u3;
    return t;
}

Distribution2 generic_distribution()
{
    auto u = [](int i) { return Scalar::variable(expr::jets::fiber(i)); };
    return Distribution2(VectorField(1, u(1), 0, u(2)), VectorField(0, u(3), 1, u(4)), standard_symplectic());
}

const std::array<Scalar, 7>& invariants_as_jet_functions()
{
    static const std::array<Scalar, 7> inv = [] {
        const Distribution2 d = generic_distribution();
        const InvariantList I = scalar_invariants(d);
        std::array<Scalar, 7> out;
        std::copy_n(I.begin(), 7, out.begin());
        return out;
    }();
    return inv;
}

Scalar specialize(const Scalar& f, const std::array<Scalar, 4>& section)
{
    std::vector<std::pair<Var, expr::RatFun>> values;
    for (int i = 0; i < 4; ++i) {
        if (section[i].has_radical())
            throw DomainError("section must be rational");
        values.emplace_back(expr::jets::fiber(i + 1), section[i].rational_part());
        for (int a = 0; a < 4; ++a) {
            const Scalar da = section[i].total_derivative(a);
            values.emplace_back(expr::jets::first(i + 1, a), da.rational_part());
            for (int b = a; b < 4; ++b)
                values.emplace_back(expr::jets::second(i + 1, a, b), da.total_derivative(b).rational_part());
        }
    }
    std::vector<std::pair<Var, expr::RatFun>> used;
    for (auto& kv : values)
        if (f.has_var(kv.first))
            used.push_back(std::move(kv));
    return f.substitute(used);
}

std::array<Scalar, 4> graph_section(const Distribution2& d)
{
    const VectorField& a = d.first();
    const VectorField& b = d.second();
    const Scalar det = a[0] * b[2] - a[2] * b[0];
    if (det.is_zero())
        throw DomainError("distribution is not a graph over (x, y)");
    // E1 = (b_y a - a_y b)/det, E2 = (a_x b - b_x a)/det.
    const Scalar inv = det.inverse();
    const VectorField e1 = inv * (b[2] * a - a[2] * b);
    const VectorField e2 = inv * (a[0] * b - b[0] * a);
    return {e1[1], e1[3], e2[1], e2[3]};
}

namespace {

// Gradient of p at pt with respect to the variables in `index`.
std::vector<mpq_class> poly_gradient(const expr::Poly& p, const expr::Point& pt,
                                     const std::unordered_map<Var, std::size_t>& index, std::size_t n)
{
    std::vector<mpq_class> g(n, 0);
    std::vector<mpq_class> factors, prefix, suffix;
    for (const auto& t : p.terms()) {
        factors.clear();
        std::vector<std::pair<Var, unsigned>> ents;
        for (auto e : t.mono) {
            Var v = expr::Monomial::var_of(e);
            unsigned k = expr::Monomial::exp_of(e);
            const mpq_class* x = pt.get(v);
            if (!x)
                throw EvaluationError("point misses variable " + expr::symbols::name(v));
            mpq_class f;
            mpz_pow_ui(f.get_num_mpz_t(), x->get_num_mpz_t(), k);
            mpz_pow_ui(f.get_den_mpz_t(), x->get_den_mpz_t(), k);
            factors.push_back(f);
            ents.emplace_back(v, k);
        }
        const std::size_t m = factors.size();
        prefix.assign(m + 1, 1);
        suffix.assign(m + 1, 1);
        for (std::size_t i = 0; i < m; ++i)
            prefix[i + 1] = prefix[i] * factors[i];
        for (std::size_t i = m; i-- > 0;)
            suffix[i] = suffix[i + 1] * factors[i];
        for (std::size_t i = 0; i < m; ++i) {
            auto it = index.find(ents[i].first);
            if (it == index.end())
                continue;
            const mpq_class& x = *pt.get(ents[i].first);
            mpq_class dx;
            const unsigned k = ents[i].second;
            mpz_pow_ui(dx.get_num_mpz_t(), x.get_num_mpz_t(), k - 1);
            mpz_pow_ui(dx.get_den_mpz_t(), x.get_den_mpz_t(), k - 1);
            g[it->second] += t.coef * k * dx * prefix[i] * suffix[i + 1];
        }
    }
    return g;
}

} // namespace

std::size_t independence_rank(const JetPoint& theta)
{
    const auto& inv = invariants_as_jet_functions();
    const auto& vars = expr::jets::all();
    std::unordered_map<Var, std::size_t> index;
    for (std::size_t k = 0; k < vars.size(); ++k)
        index.emplace(vars[k], k);
    const expr::Point pt = theta.to_point();
    Matrix<mpq_class> jac;
    for (const auto& f : inv) {
        if (f.has_radical())
            throw Error("internal: jet invariant with a radical");
        const auto& r = f.rational_part();
        const mpq_class n = r.num().eval(pt), d = r.den().eval(pt);
        if (sgn(d) == 0)
            throw EvaluationError("denominator vanishes at the jet point");
        auto gn = poly_gradient(r.num(), pt, index, vars.size());
        auto gd = r.den().is_constant() ? std::vector<mpq_class>(vars.size(), 0)
                                        : poly_gradient(r.den(), pt, index, vars.size());
        std::vector<mpq_class> row(vars.size());
        const mpq_class d2 = d * d;
        for (std::size_t k = 0; k < vars.size(); ++k)
            row[k] = (gn[k] * d - n * gd[k]) / d2;
        jac.push_back(std::move(row));
    }
    return rank(jac);
}

GField hamiltonian_lift(const SymplecticStructure& om, const Scalar& h)
{
    const VectorField xh = om.hamiltonian_field(h);
    constexpr std::array<int, 2> base = {0, 2}, fib = {1, 3};
    using M2 = std::array<std::array<Scalar, 2>, 2>;
    auto block = [&](const std::array<int, 2>& rows, const std::array<int, 2>& cols) {
        M2 b;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                b[i][j] = xh[rows[i]].partial(static_cast<Var>(cols[j]));
        return b;
    };
    auto mul = [](const M2& a, const M2& b) {
        M2 c;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        return c;
    };
    auto u = [](int i) { return Scalar::variable(expr::jets::fiber(i)); };
    const M2 U = {{{u(1), u(3)}, {u(2), u(4)}}};
    const M2 jbb = block(base, base), jbf = block(base, fib), jfb = block(fib, base), jff = block(fib, fib);
    const M2 a = mul(jff, U), b = mul(U, jbb), c = mul(mul(U, jbf), U);
    M2 ud;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            ud[i][j] = jfb[i][j] + a[i][j] - b[i][j] - c[i][j];
    return {xh[0], xh[1], xh[2], xh[3], ud[0][0], ud[1][0], ud[0][1], ud[1][1]};
}

std::vector<Scalar> prolong2(const GField& v)
{
    using expr::jets::first;
    using expr::jets::second;
    std::vector<Scalar> out(v.begin(), v.end());
    out.reserve(kJetDimension);
    std::array<std::array<Scalar, 4>, 4> dxi; // dxi[a][b] = D_a xi^b
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            dxi[a][b] = v[b].total_derivative(a);
    std::array<std::array<Scalar, 4>, 4> phi1;
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a) {
            Scalar c = v[4 + i].total_derivative(a);
            for (int b = 0; b < 4; ++b)
                c -= Scalar::variable(first(i + 1, b)) * dxi[a][b];
            phi1[i][a] = c;
            out.push_back(c);
        }
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                Scalar c = phi1[i][a].total_derivative(b);
                for (int k = 0; k < 4; ++k)
                    c -= Scalar::variable(second(i + 1, a, k)) * dxi[b][k];
                out.push_back(c);
            }
    return out;
}

int orbit_codimension(const JetPoint& theta, int degree_bound)
{
    if (degree_bound < 0)
        throw DomainError("degree bound must be nonnegative");
    std::vector<expr::Monomial> monos;
    for (int dx = 0; dx <= degree_bound; ++dx)
        for (int dp = 0; dx + dp <= degree_bound; ++dp)
            for (int dy = 0; dx + dp + dy <= degree_bound; ++dy)
                for (int dq = 0; dx + dp + dy + dq <= degree_bound; ++dq) {
                    expr::Monomial m;
                    const int e[4] = {dx, dp, dy, dq};
                    for (int k = 0; k < 4; ++k)
                        if (e[k] > 0)
                            m.push_back_unchecked(static_cast<Var>(k), static_cast<unsigned>(e[k]));
                    monos.push_back(m);
                }
    const SymplecticStructure& om = *standard_symplectic();
    const expr::Point pt = theta.to_point();
    coordinates();
    Matrix<mpq_class> rows(monos.size());
    auto work = [&](std::size_t begin, std::size_t step) {
        for (std::size_t k = begin; k < monos.size(); k += step) {
            const Scalar h(expr::Poly::term(monos[k], 1));
            auto comps = prolong2(hamiltonian_lift(om, h));
            std::vector<mpq_class> row;
            row.reserve(comps.size());
            for (const auto& c : comps)
                row.push_back(c.eval(pt));
            rows[k] = std::move(row);
        }
    };
    const std::size_t n = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    if (n == 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> pool;
        for (std::size_t t = 0; t < n; ++t)
            pool.push_back(std::async(std::launch::async, work, t, n));
        for (auto& f : pool)
            f.get();
    }
    return kJetDimension - static_cast<int>(rank(rows));
}

std::array<Scalar, 4> u_to_v(const std::array<Scalar, 4>& u)
{
    return {-u[3], u[1] + u[2], -u[0], u[0] * u[3] - u[1] * u[2]};
}

Scalar chart_discriminant(const std::array<Scalar, 4>& v)
{
    return v[1] * v[1] - Scalar(4) * (v[0] * v[2] - v[3]);
}

std::array<Scalar, 4> v_to_u(const std::array<Scalar, 4>& v, const Scalar& sqrt_discriminant)
{
    if (sqrt_discriminant * sqrt_discriminant != chart_discriminant(v))
        throw DomainError("not a square root of the chart discriminant");
    const Scalar half(mpq_class(1, 2));
    return {-v[2], half * (v[1] - sqrt_discriminant), half * (v[1] + sqrt_discriminant), -v[0]};
}

} // namespace smae::jet
