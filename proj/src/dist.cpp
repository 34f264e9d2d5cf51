#include "smae/dist.hpp"

#include "smae/error.hpp"
#include "smae/expr/parser.hpp"

#include <map>
#include <mutex>

namespace smae {

using expr::Poly;
using expr::RatFun;

namespace {

Matrix<Scalar> rows_of(const std::vector<VectorField>& fields)
{
    Matrix<Scalar> m;
    for (const auto& f : fields)
        m.push_back({f[0], f[1], f[2], f[3]});
    return m;
}

Poly lcm(const Poly& a, const Poly& b)
{
    Poly g = expr::gcd(a, b);
    return *(a * b).divide_exact(g);
}

VectorField from_vector(const std::vector<Scalar>& v)
{
    return VectorField(v[0], v[1], v[2], v[3]);
}

} // namespace

std::size_t span_rank(const std::vector<VectorField>& fields)
{
    return rank(rows_of(fields));
}

bool span_contains(const std::vector<VectorField>& fields, const VectorField& v)
{
    if (v.is_zero())
        return true;
    auto with = fields;
    with.push_back(v);
    return span_rank(with) == span_rank(fields);
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b)
{
    const std::size_t ra = span_rank(a);
    if (ra != span_rank(b))
        return false;
    auto both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(both) == ra;
}

std::vector<VectorField> independent_subset(const std::vector<VectorField>& fields)
{
    std::vector<VectorField> out;
    for (const auto& f : fields) {
        if (f.is_zero())
            continue;
        auto trial = out;
        trial.push_back(f);
        if (span_rank(trial) == trial.size())
            out = std::move(trial);
        if (out.size() == 4)
            break;
    }
    return out;
}

VectorField clear_denominators(const VectorField& v)
{
    Poly den(1);
    for (int i = 0; i < 4; ++i) {
        if (v[i].has_radical())
            return v;
        if (!v[i].is_zero())
            den = lcm(den, v[i].rational_part().den());
    }
    std::array<Poly, 4> num;
    Poly g;
    for (int i = 0; i < 4; ++i) {
        if (v[i].is_zero())
            continue;
        const RatFun& r = v[i].rational_part();
        num[i] = r.num() * *den.divide_exact(r.den());
        g = g.is_zero() ? num[i] : expr::gcd(g, num[i]);
    }
    if (g.is_zero())
        return v;
    // Normalize the sign and size by the first nonzero component's leading coefficient.
    for (int i = 0; i < 4; ++i) {
        if (num[i].is_zero())
            continue;
        Poly q = *num[i].divide_exact(g);
        mpq_class lc = q.leading().coef;
        g = g.scaled(lc);
        break;
    }
    VectorField out;
    for (int i = 0; i < 4; ++i)
        if (!num[i].is_zero())
            out[i] = Scalar(*num[i].divide_exact(g));
    return out;
}

SymplecticPtr standard_symplectic(const mpq_class& scale)
{
    static std::mutex mu;
    static std::map<mpq_class, SymplecticPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(scale);
    if (it != cache.end())
        return it->second;
    auto s = std::make_shared<const SymplecticStructure>(scale);
    cache.emplace(scale, s);
    return s;
}

// ---------------------------------------------------------------- Distribution2

Distribution2::Distribution2(VectorField x1, VectorField x2, SymplecticPtr omega)
    : x1_(std::move(x1)), x2_(std::move(x2)), omega_(std::move(omega))
{
    if (!omega_)
        omega_ = standard_symplectic();
    if (span_rank({x1_, x2_}) < 2)
        throw DomainError("spanning fields are linearly dependent");
    w_ = (*omega_)(x1_, x2_);
    if (w_.is_zero())
        throw DomainError("distribution is Lagrangian (Omega(X1, X2) = 0)");
}

std::string Distribution2::to_string() const
{
    return x1_.to_string() + " ; " + x2_.to_string();
}

Distribution2 ortho_complement(const Distribution2& d)
{
    const auto& om = d.symplectic();
    Matrix<Scalar> m;
    for (const auto& f : d.fields()) {
        KForm g = om.gamma(f);
        m.push_back({g.coef(1u), g.coef(2u), g.coef(4u), g.coef(8u)});
    }
    auto ns = nullspace(m, 4);
    if (ns.size() != 2)
        throw DomainError("degenerate distribution");
    return Distribution2(clear_denominators(from_vector(ns[0])), clear_denominators(from_vector(ns[1])),
                         d.symplectic_ptr());
}

VectorValuedForm projector(const Distribution2& d)
{
    // P(V) = [Omega(V, Y) X - Omega(V, X) Y] / Omega(X, Y), and Omega(V, W) = -Gamma(W)(V).
    const auto& om = d.symplectic();
    const VectorField& x = d.first();
    const VectorField& y = d.second();
    Scalar inv = d.pairing().inverse();
    return inv * (VectorValuedForm::decomposable(om.gamma(x), y) - VectorValuedForm::decomposable(om.gamma(y), x));
}

namespace {

// Z = P'([X, Y / Omega(X, Y)]) = P'([X, Y]) / Omega(X, Y) since P'(Y) = 0.
VectorField curvature_field(const Distribution2& d, const VectorValuedForm& p_dual)
{
    return d.pairing().inverse() * p_dual.apply(lie_bracket(d.first(), d.second()));
}

// w(Di, Dj) = Omega(P Di, P Dj).
KForm restricted_form(const SymplecticStructure& om, const VectorValuedForm& p)
{
    std::array<VectorField, 4> img;
    for (int i = 0; i < 4; ++i)
        img[i] = p.apply(VectorField::coordinate(i));
    KForm w(2);
    for (unsigned m : basis::masks(2)) {
        int i = __builtin_ctz(m);
        int j = 31 - __builtin_clz(m);
        w.coef(m) = om(img[i], img[j]);
    }
    return w;
}

// R(Di, Dj) = P'([P Di, P Dj]).
VectorValuedForm curvature_tensor(const VectorValuedForm& p, const VectorValuedForm& p_dual)
{
    std::array<VectorField, 4> img;
    for (int i = 0; i < 4; ++i)
        img[i] = p.apply(VectorField::coordinate(i));
    VectorValuedForm r(2);
    for (unsigned m : basis::masks(2)) {
        int i = __builtin_ctz(m);
        int j = 31 - __builtin_clz(m);
        VectorField v = p_dual.apply(lie_bracket(img[i], img[j]));
        for (int k = 0; k < 4; ++k)
            r.component(k).coef(m) = v[k];
    }
    return r;
}

} // namespace

AttachedObjects attach(const Distribution2& d)
{
    const auto& om = d.symplectic();
    Distribution2 dual = ortho_complement(d);
    VectorValuedForm p = projector(d);
    VectorValuedForm pd = VectorValuedForm::identity() - p;
    VectorField z = curvature_field(d, pd);
    VectorField zd = curvature_field(dual, p);
    KForm rho = om.gamma(z);
    KForm rhod = om.gamma(zd);
    return AttachedObjects{
        dual,
        p,
        pd,
        z,
        zd,
        restricted_form(om, p),
        restricted_form(om, pd),
        rho,
        rhod,
        rho - rhod,
        curvature_tensor(p, pd),
        curvature_tensor(pd, p),
    };
}

VectorValuedForm operator_A(const Distribution2& d)
{
    VectorValuedForm p = projector(d);
    return p - (VectorValuedForm::identity() - p);
}

// ---------------------------------------------------------------- MAE front-end

Scalar discriminant(const MAECoefficients& m)
{
    return m.B * m.B - Scalar(4) * m.A * m.C + Scalar(4) * m.S * m.D;
}

std::optional<Scalar> rational_sqrt(const Scalar& f)
{
    if (f.has_radical())
        return std::nullopt;
    const RatFun& r = f.rational_part();
    auto n = r.num().sqrt_exact();
    if (!n)
        return std::nullopt;
    auto d = r.den().sqrt_exact();
    if (!d)
        return std::nullopt;
    return Scalar(RatFun(*n, *d));
}

MAEType classify(const MAECoefficients& m)
{
    for (const Scalar* c : {&m.S, &m.A, &m.B, &m.C, &m.D})
        if (c->has_radical())
            throw DomainError("equation coefficients must be radical-free");
    Scalar delta = discriminant(m);
    if (delta.is_zero())
        return MAEType::Parabolic;
    if (delta.is_constant())
        return sgn(delta.constant_value()) > 0 ? MAEType::Hyperbolic : MAEType::Elliptic;
    if (!rational_sqrt(delta) && rational_sqrt(-delta))
        return MAEType::Elliptic;
    return MAEType::Hyperbolic;
}

const char* to_string(MAEType t)
{
    switch (t) {
    case MAEType::Hyperbolic:
        return "hyperbolic";
    case MAEType::Elliptic:
        return "elliptic";
    case MAEType::Parabolic:
        return "parabolic";
    }
    return "?";
}

MAEDistributions mae_to_distributions(const MAECoefficients& m, SymplecticPtr omega)
{
    MAEType type = classify(m);
    if (type == MAEType::Parabolic)
        throw UnsupportedTypeError("parabolic equation (discriminant vanishes identically)");
    if (type == MAEType::Elliptic)
        throw UnsupportedTypeError("elliptic equation has no real characteristic distributions; "
                                   "supply the operator A instead");

    const Scalar delta = discriminant(m);
    std::shared_ptr<const RatFun> radicand;
    Scalar s;
    if (auto root = rational_sqrt(delta)) {
        s = *root;
    } else {
        radicand = std::make_shared<const RatFun>(delta.rational_part());
        s = Scalar::sqrt_of(radicand);
    }

    const Scalar zero;
    auto field = [](Scalar a, Scalar b, Scalar c, Scalar d) { return VectorField(a, b, c, d); };
    VectorField d1, d2, e1, e2;
    if (!m.S.is_zero()) {
        Scalar is = m.S.inverse();
        Scalar half = Scalar(mpq_class(1, 2)) * is;
        VectorField x = field(1, -m.C * is, zero, m.B * half);
        VectorField y = field(zero, m.B * half, 1, -m.A * is);
        Scalar r = s * half;
        VectorField dq = VectorField::coordinate(3), dp = VectorField::coordinate(1);
        d1 = x - r * dq;
        d2 = y + r * dp;
        e1 = x + r * dq;
        e2 = y - r * dp;
    } else if (!m.A.is_zero()) {
        VectorField x = field(Scalar(2) * m.A, Scalar(-2) * m.D, m.B, zero);
        VectorField y = field(zero, m.B, zero, Scalar(-2) * m.A);
        VectorField dy = VectorField::coordinate(2), dp = VectorField::coordinate(1);
        d1 = x - s * dy;
        d2 = y + s * dp;
        e1 = x + s * dy;
        e2 = y - s * dp;
    } else if (!m.C.is_zero()) {
        // Mirror of the previous branch under (x, p) <-> (y, q).
        VectorField x = field(m.B, zero, Scalar(2) * m.C, Scalar(-2) * m.D);
        VectorField y = field(zero, Scalar(-2) * m.C, zero, m.B);
        VectorField dx = VectorField::coordinate(0), dq = VectorField::coordinate(3);
        d1 = x - s * dx;
        d2 = y + s * dq;
        e1 = x + s * dx;
        e2 = y - s * dq;
    } else if (!m.B.is_zero()) {
        Scalar f = m.D / m.B;
        d1 = VectorField::coordinate(1);
        d2 = field(1, zero, zero, -f);
        e1 = VectorField::coordinate(3);
        e2 = field(zero, -f, 1, zero);
    } else {
        throw DomainError("S, A, B and C all vanish: not a second-order equation");
    }
    return MAEDistributions{
        Distribution2(clear_denominators(d1), clear_denominators(d2), omega),
        Distribution2(clear_denominators(e1), clear_denominators(e2), omega),
        radicand,
    };
}

// ---------------------------------------------------------------- parsing

namespace {

template <class F>
auto with_offset(std::size_t offset, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(offset + e.position(), e.detail());
    }
}

} // namespace

std::pair<VectorField, VectorField> parse_distribution_fields(std::string_view text, const expr::VariableContext& ctx)
{
    auto parts = expr::split_top_level(text, ';');
    if (parts.size() != 2)
        throw ParseError(0, "a distribution needs two vector fields separated by ';', got " +
                                std::to_string(parts.size()));
    VectorField a = with_offset(0, [&] { return parse_vector_field(parts[0], ctx); });
    VectorField b = with_offset(parts[0].size() + 1, [&] { return parse_vector_field(parts[1], ctx); });
    return {a, b};
}

MAECoefficients parse_mae(std::string_view text, const expr::VariableContext& ctx)
{
    auto parts = expr::split_top_level(text, ';');
    if (parts.size() != 5)
        throw ParseError(0, "an equation needs five coefficients S;A;B;C;D, got " + std::to_string(parts.size()));
    std::array<Scalar, 5> c;
    std::size_t offset = 0;
    for (int i = 0; i < 5; ++i) {
        c[i] = with_offset(offset, [&] { return expr::parse(parts[i], ctx); });
        offset += parts[i].size() + 1;
    }
    return MAECoefficients{c[0], c[1], c[2], c[3], c[4]};
}

VectorValuedForm parse_operator(std::string_view text, const expr::VariableContext& ctx)
{
    // Rows may be separated by ';' as well; the replacement keeps offsets intact.
    std::string flat(text);
    for (char& ch : flat)
        if (ch == ';')
            ch = ',';
    auto parts = expr::split_top_level(flat, ',');
    if (parts.size() != 16)
        throw ParseError(0, "an operator needs 16 comma-separated entries, got " + std::to_string(parts.size()));
    Matrix<Scalar> m(4, std::vector<Scalar>(4));
    std::size_t offset = 0;
    for (int k = 0; k < 16; ++k) {
        m[k / 4][k % 4] = with_offset(offset, [&] { return expr::parse(parts[k], ctx); });
        offset += parts[k].size() + 1;
    }
    return VectorValuedForm::from_matrix(m);
}

} // namespace smae
