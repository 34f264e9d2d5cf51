#pragma once

#include "smae/analysis.hpp"
#include "smae/expr/context.hpp"
#include "smae/expr/parser.hpp"

#include <random>

namespace testing {

using namespace smae;
using namespace smae::expr;

inline VariableContext ctx()
{
    return VariableContext::base().with_symbol(exp_minus_x_symbol());
}

inline Scalar S(const char* text)
{
    return parse(text, ctx());
}

inline Distribution2 dist(const char* text, SymplecticPtr om = standard_symplectic())
{
    auto [a, b] = parse_distribution_fields(text, ctx());
    return Distribution2(a, b, std::move(om));
}

inline VectorField V(const char* text)
{
    return parse_vector_field(text, ctx());
}

// Random polynomial with small integer coefficients in x, p, y, q.
inline Poly random_poly(std::mt19937_64& rng, int max_degree, int terms)
{
    std::uniform_int_distribution<int> c(-4, 4), d(0, max_degree), v(0, 3);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Poly m(c(rng));
        for (int k = d(rng); k > 0; --k)
            m *= Poly::variable(static_cast<Var>(v(rng)));
        p += m;
    }
    return p;
}

inline Point random_point(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> n(-7, 7), d(1, 5);
    Point pt;
    for (Var v = 0; v < 4; ++v) {
        mpq_class q(n(rng), d(rng));
        q.canonicalize();
        pt.set(v, q);
    }
    return pt;
}

} // namespace testing
