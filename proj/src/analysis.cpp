#include "smae/analysis.hpp"

#include "smae/error.hpp"

#include <unordered_map>
#include <sstream>

namespace smae {

using expr::Poly;
using expr::RatFun;

std::vector<VectorField> first_prolongation(const std::vector<VectorField>& fields)
{
    auto all = fields;
    for (std::size_t i = 0; i < fields.size(); ++i)
        for (std::size_t j = i + 1; j < fields.size(); ++j)
            all.push_back(lie_bracket(fields[i], fields[j]));
    auto basis = independent_subset(all);
    for (auto& f : basis)
        f = clear_denominators(f);
    return basis;
}

std::vector<VectorField> first_prolongation(const Distribution2& d)
{
    return first_prolongation(d.fields());
}

bool is_integrable(const std::vector<VectorField>& fields)
{
    auto basis = independent_subset(fields);
    if (basis.size() >= 4)
        return true;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!span_contains(basis, lie_bracket(basis[i], basis[j])))
                return false;
    return true;
}

std::vector<VectorField> kernel(const KForm& a)
{
    if (a.degree() != 2)
        throw DomainError("kernel expects a 2-form");
    // (V _| a)_j = sum_i V^i a(Di, Dj).
    Matrix<Scalar> m(4, std::vector<Scalar>(4));
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i)
            if (i != j)
                m[j][i] = a.evaluate({VectorField::coordinate(i), VectorField::coordinate(j)});
    std::vector<VectorField> out;
    for (const auto& v : nullspace(m, 4))
        out.push_back(clear_denominators(VectorField(v[0], v[1], v[2], v[3])));
    return out;
}

int darboux_class(const KForm& a)
{
    if (a.degree() != 1)
        throw DomainError("darboux_class expects a 1-form");
    if (a.is_zero())
        return 0;
    const KForm da = ext_d(a);
    int s = 0;
    KForm power = KForm::scalar(Scalar(1));
    if (!da.is_zero()) {
        s = 1;
        power = da;
        if (!wedge(da, da).is_zero()) {
            s = 2;
            power = wedge(da, da);
        }
    }
    return wedge(a, power).is_zero() ? 2 * s : 2 * s + 1;
}

namespace {

std::string class_witness(int r)
{
    switch (r) {
    case 0:
        return "form vanishes";
    case 1:
        return "d(form) = 0";
    case 2:
        return "form ^ d(form) = 0, d(form) != 0";
    case 3:
        return "form ^ d(form) != 0, d(form)^2 = 0";
    default:
        return "d(form)^2 != 0";
    }
}

} // namespace

ClassResult form_classes(const AttachedObjects& o)
{
    ClassResult c;
    c.r = darboux_class(o.rho);
    c.r_dual = darboux_class(o.rho_dual);
    c.witness = class_witness(c.r);
    c.witness_dual = class_witness(c.r_dual);
    return c;
}

std::string SpecialFormResult::certificate() const
{
    std::ostringstream s;
    s << "dim D_(1) = " << prolongation_dim << (integrable ? " (integrable)" : " (not integrable)")
      << "; dim D'_(1) = " << prolongation_dim_dual << (integrable_dual ? " (integrable)" : " (not integrable)");
    return s.str();
}

SpecialFormResult detect_special_form(const Distribution2& d, const AttachedObjects& o)
{
    SpecialFormResult r;
    auto p = first_prolongation(d);
    auto pd = first_prolongation(o.dual);
    r.prolongation_dim = p.size();
    r.prolongation_dim_dual = pd.size();
    r.integrable = is_integrable(p);
    r.integrable_dual = is_integrable(pd);
    r.special = r.integrable && r.integrable_dual;
    return r;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "yes";
    case Verdict::No:
        return "no";
    case Verdict::Undecided:
        return "undecided";
    }
    return "?";
}

// ---------------------------------------------------------------- Hamiltonian characteristics

bool is_hamiltonian_characteristic(const SymplecticStructure& om, const Scalar& phi, const Distribution2& target,
                                   const KForm& rho)
{
    const VectorField x = om.hamiltonian_field(phi);
    if (x.is_zero() || !target.contains(x))
        return false;
    return insert(x, rho).is_zero() && insert(x, ext_d(rho)).is_zero();
}

namespace {

std::vector<Poly> monomials_up_to(int bound)
{
    std::vector<Poly> out;
    for (int deg = 1; deg <= bound; ++deg)
        for (int a = deg; a >= 0; --a)
            for (int b = deg - a; b >= 0; --b)
                for (int c = deg - a - b; c >= 0; --c) {
                    int e = deg - a - b - c;
                    out.push_back(Poly::variable(expr::kVarX, a) * Poly::variable(expr::kVarP, b) *
                                  Poly::variable(expr::kVarY, c) * Poly::variable(expr::kVarQ, e));
                }
    return out;
}

Poly lcm(const Poly& a, const Poly& b)
{
    return *(a * b).divide_exact(expr::gcd(a, b));
}

} // namespace

std::optional<Scalar> find_hamiltonian_characteristic(const SymplecticStructure& om, const Distribution2& target,
                                                      const KForm& rho, int degree_bound)
{
    if (degree_bound < 1)
        return std::nullopt;
    const Distribution2 other = ortho_complement(target);
    const KForm drho = ext_d(rho);
    const auto monos = monomials_up_to(degree_bound);

    // Every condition is linear in phi: V(phi) = 0 for V in D-perp (so that X_phi
    // lies in the target), rho(X_phi) = 0 and X_phi _| d rho = 0.
    std::vector<std::vector<Scalar>> cond(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
        const Scalar m(monos[k]);
        const VectorField x = om.hamiltonian_field(m);
        auto& c = cond[k];
        for (const auto& v : other.fields())
            c.push_back(v.apply(m));
        c.push_back(insert(x, rho).value());
        KForm i = insert(x, drho);
        for (int j = 0; j < 4; ++j)
            c.push_back(i.coef(1u << j));
        for (const auto& s : c)
            if (s.has_radical())
                return std::nullopt;
    }
    const std::size_t nc = cond.empty() ? 0 : cond[0].size();
    Matrix<mpq_class> rows;
    for (std::size_t e = 0; e < nc; ++e) {
        Poly den(1);
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (!cond[k][e].is_zero())
                den = lcm(den, cond[k][e].rational_part().den());
        // Row per monomial of the cleared numerators.
        std::unordered_map<expr::Monomial, std::size_t, expr::MonomialHash> index;
        std::vector<std::vector<mpq_class>> block;
        for (std::size_t k = 0; k < monos.size(); ++k) {
            const RatFun& r = cond[k][e].rational_part();
            if (r.is_zero())
                continue;
            Poly n = r.num() * *den.divide_exact(r.den());
            for (const auto& t : n.terms()) {
                auto [it, fresh] = index.emplace(t.mono, block.size());
                if (fresh)
                    block.emplace_back(monos.size(), mpq_class(0));
                block[it->second][k] = t.coef;
            }
        }
        rows.insert(rows.end(), block.begin(), block.end());
    }
    auto ns = nullspace(rows, monos.size());
    for (const auto& v : ns) {
        Poly phi;
        for (std::size_t k = 0; k < monos.size(); ++k)
            if (sgn(v[k]) != 0)
                phi += monos[k].scaled(v[k]);
        Scalar s(phi.primitive_integer());
        if (is_hamiltonian_characteristic(om, s, target, rho))
            return s;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- linearization

LinearizationResult linearizable(const Distribution2& d, const AttachedObjects& o,
                                 const std::optional<Scalar>& candidate_phi, int degree_bound)
{
    LinearizationResult res;
    const auto sf = detect_special_form(d, o);
    if (!sf.special) {
        res.verdict = Verdict::No;
        res.reason = "prolongations not integrable (" + sf.certificate() + ")";
        return res;
    }
    const bool z0 = o.Z.is_zero();
    const bool zd0 = o.Z_dual.is_zero();
    if (z0 && zd0) {
        res.verdict = Verdict::Yes;
        res.reason = "Z = Z' = 0 (equivalent to u_xy = 0)";
        return res;
    }
    const auto& om = d.symplectic();
    if (!z0 && !zd0) {
        const InvariantList I = scalar_invariants(d, o);
        const auto sp = special_invariants(o);
        if (!sp.I12 || !sp.I21) {
            res.verdict = Verdict::Undecided;
            res.reason = "I^12 or I^21 undefined";
            return res;
        }
        std::vector<std::string> bad;
        if (!I[0].is_zero())
            bad.push_back("I^1 = " + I[0].to_string());
        if (!sp.I12->is_zero())
            bad.push_back("I^12 = " + sp.I12->to_string());
        if (!sp.I21->is_zero())
            bad.push_back("I^21 = " + sp.I21->to_string());
        if (bad.empty()) {
            res.verdict = Verdict::Yes;
            res.reason = "Z != 0, Z' != 0 and I^1 = I^12 = I^21 = 0";
        } else {
            res.verdict = Verdict::No;
            res.reason = "Z != 0, Z' != 0 but";
            for (std::size_t i = 0; i < bad.size(); ++i)
                res.reason += (i ? ", " : " ") + bad[i] + " != 0";
        }
        return res;
    }

    // Exactly one of Z, Z' vanishes: look for a Hamiltonian characteristic of
    // the nonzero form inside the corresponding distribution.
    const Distribution2& target = z0 ? o.dual : d;
    const Distribution2& other = z0 ? d : o.dual;
    const KForm& rho = z0 ? o.rho_dual : o.rho;
    const std::string side = z0 ? "rho' in D'" : "rho in D";
    if (candidate_phi) {
        if (is_hamiltonian_characteristic(om, *candidate_phi, target, rho)) {
            res.verdict = Verdict::Yes;
            res.reason = "candidate " + candidate_phi->to_string() + " is a Hamiltonian characteristic of " + side;
            res.phi = candidate_phi;
            return res;
        }
    }
    auto obstruction = kernel(ext_d(rho));
    for (const auto& f : other.fields())
        obstruction.push_back(f);
    obstruction = independent_subset(obstruction);
    if (!is_integrable(obstruction)) {
        res.verdict = Verdict::No;
        res.reason = "ker d" + std::string(z0 ? "rho'" : "rho") + " + " + (z0 ? "D" : "D'") + " is " +
                     std::to_string(obstruction.size()) + "-dimensional and not integrable";
        return res;
    }
    if (auto phi = find_hamiltonian_characteristic(om, target, rho, degree_bound)) {
        res.verdict = Verdict::Yes;
        res.reason = "found Hamiltonian characteristic " + phi->to_string() + " of " + side;
        res.phi = phi;
        return res;
    }
    res.verdict = Verdict::Undecided;
    res.reason = (candidate_phi ? "candidate rejected; " : std::string()) +
                 "no polynomial Hamiltonian characteristic of degree <= " + std::to_string(degree_bound) +
                 " (heuristic search)";
    return res;
}

LinearizationResult log_linearizable(const Distribution2& d, const AttachedObjects& o)
{
    LinearizationResult res;
    const auto sf = detect_special_form(d, o);
    if (!sf.special) {
        res.verdict = Verdict::No;
        res.reason = "prolongations not integrable (" + sf.certificate() + ")";
        return res;
    }
    const InvariantList I = scalar_invariants(d, o);
    const auto sp = special_invariants(o);
    std::vector<std::string> bad;
    if (I[0] != Scalar(-1))
        bad.push_back("I^1 = " + I[0].to_string() + " != -1");
    if (!sp.I12)
        bad.push_back("I^12 undefined");
    else if (!sp.I12->is_zero())
        bad.push_back("I^12 = " + sp.I12->to_string() + " != 0");
    if (!sp.I21)
        bad.push_back("I^21 undefined");
    else if (!sp.I21->is_zero())
        bad.push_back("I^21 = " + sp.I21->to_string() + " != 0");
    if (bad.empty()) {
        res.verdict = Verdict::Yes;
        res.reason = "prolongations integrable, I^1 = -1, I^12 = I^21 = 0";
        return res;
    }
    res.verdict = Verdict::No;
    for (std::size_t i = 0; i < bad.size(); ++i)
        res.reason += (i ? "; " : "") + bad[i];
    return res;
}

// ---------------------------------------------------------------- symmetries and ranks

bool check_symmetry(const Scalar& H, const Distribution2& d)
{
    const VectorField x = d.symplectic().hamiltonian_field(H);
    for (const auto& f : d.fields())
        if (!d.contains(lie_bracket(x, f)))
            return false;
    return true;
}

std::size_t independence_on_M(const std::vector<Scalar>& values)
{
    Matrix<Scalar> jac;
    for (const auto& v : values)
        jac.push_back({v.total_derivative(0), v.total_derivative(1), v.total_derivative(2), v.total_derivative(3)});
    return rank(jac);
}

InvariantList invariant_variation(const Distribution2& d, const Scalar& H)
{
    static const expr::Var eps = [] {
        expr::Var v = expr::symbols::intern("eps$");
        expr::symbols::set_nilpotent(v);
        return v;
    }();
    const Scalar e = Scalar::variable(eps);
    const VectorField xh = d.symplectic().hamiltonian_field(H);
    Distribution2 moved(d.first() + e * lie_bracket(xh, d.first()), d.second() + e * lie_bracket(xh, d.second()),
                        d.symplectic_ptr());
    InvariantList I = scalar_invariants(moved);
    expr::Point zero;
    zero.set(eps, 0);
    for (auto& v : I)
        v = v.partial(eps).eval_partial(zero);
    return I;
}

} // namespace smae
