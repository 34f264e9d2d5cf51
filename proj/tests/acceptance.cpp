// Acceptance suite: one PASS/FAIL line per criterion.
#include "helpers.hpp"

#include "smae/error.hpp"
#include "smae/jet.hpp"
#include "smae/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace testing;
namespace J = smae::jet;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes << " [failed: " << what << "]";
        }
    }
};

const char* kWorked = "0,x*y+1,1,p*q ; 1,1,0,x*y";

void worked_example(Outcome& out)
{
    const Distribution2 d = dist(kWorked);
    const AttachedObjects o = attach(d);
    const auto form = [](const char* t) { return parse_form(t, ctx()); };
    out.require(o.Z == V("-x*p*y+x-q, -x*p*y+x*y^2+x-q, y, -x^2*p*y^2+x^2*y-x*p*y-x*y*q+p*y*q+x-q"), "Z");
    out.require(o.Z_dual == V("-x*p*y+x-p-q, -x*p*y+x*y^2+x-p+y-q, y, -x^2*p*y^2+x^2*y-x*p*y-x*y*q+p*y*q"), "Z'");
    out.require(o.omega == form("(-x*y-1)*dx^dp + (x^2*y^2+x*y-p*q)*dx^dy + dx^dq + p*q*dp^dy - dp^dq + x*y*dy^dq"),
                "omega");
    out.require(o.omega_dual ==
                    form("x*y*dx^dp + (-x^2*y^2-x*y+p*q)*dx^dy - dx^dq - p*q*dp^dy + dp^dq + (-x*y-1)*dy^dq"),
                "omega'");
    out.require(o.rho == form("(-x*p*y+x*y^2+x-q)*dx + (x*p*y-x+q)*dp + "
                              "(-x^2*p*y^2+x^2*y-x*p*y-x*y*q+p*y*q+x-q)*dy - y*dq"),
                "rho");
    out.require(o.rho_dual == form("(-x*p*y+x*y^2+x-p+y-q)*dx + (x*p*y-x+p+q)*dp + "
                                   "(-x^2*p*y^2+x^2*y-x*p*y-x*y*q+p*y*q)*dy - y*dq"),
                "rho'");
    out.require(o.sigma == form("(p-y)*dx - p*dp + (x-q)*dy"), "sigma");
    const InvariantList I = scalar_invariants(d, o);
    out.require(I[0] == S("-2*x*y+1"), "I1");
    out.require(I[1] == S("2*x*y-2*p*y-2*y*q"), "I2");
    out.require(I[2] == S("2*x^2*p*y^3 + 2*x*p^2*y^3 - x^2*y^4 - 2*x^2*y^2 - x*p*y^2 + p^2*y^2 - x*y^3 + "
                          "2*x*y^2*q + p*y^2*q + y^3*q - p*y"),
                "I3");
    out.require(I[3] == S("-2"), "I4");
    out.require(I[4] == S("2*p*y+1"), "I5");
    out.require(I[5] == S("-4*x*p*y^2-2*p^2*y^2-4*x*y+2"), "I6");
    out.notes << "7 attached objects, 6 invariants";
}

void suite_into(const verify::SuiteResult& r, Outcome& out)
{
    out.notes << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks";
    for (const auto& c : r.checks)
        out.require(c.ok, c.name);
}

void identity_suite(Outcome& out)
{
    verify::SuiteResult r = verify::identities(2024, 20);
    const verify::SuiteResult inv = verify::involution(2024, 20);
    r.checks.insert(r.checks.end(), inv.checks.begin(), inv.checks.end());
    suite_into(r, out);
}

void special_form_formulas(Outcome& out)
{
    std::mt19937_64 rng(77);
    const Var P = kVarP, Q = kVarQ;
    int instances = 0;
    while (instances < 6) {
        const Scalar D(random_poly(rng, 3, 4));
        if (D.partial(P).is_zero() || D.partial(Q).is_zero())
            continue;
        ++instances;
        const Distribution2 d(VectorField(0, 1, 0, 0), VectorField(1, 0, 0, -D));
        const AttachedObjects o = attach(d);
        const InvariantList I = scalar_invariants(d, o);
        const Scalar dpq = D.partial(P).partial(Q), dpp = D.partial(P).partial(P), dqq = D.partial(Q).partial(Q);
        const std::string tag = " for D = " + D.to_string();
        out.require(I[0] == -dpq, "I1" + tag);
        out.require(I[3] == Scalar(-2) * dpq * dpq + Scalar(2) * dpp * dqq, "I4" + tag);
        out.require(Scalar(2) * I[4] == I[3], "I5" + tag);
        for (int k : {1, 2, 5, 6})
            out.require(I[k].is_zero(), "I" + std::to_string(k + 1) + tag);
        const SpecialInvariants s = special_invariants(o);
        out.require(s.I12 && *s.I12 == -D.partial(P) * dqq / D.partial(Q), "I12" + tag);
        out.require(s.I21 && *s.I21 == -D.partial(Q) * dpp / D.partial(P), "I21" + tag);
    }
    out.notes << instances << " random D";
}

void section8_examples(Outcome& out)
{
    const Distribution2 e1 = dist("0,0,0,1 ; -q,y*q,1,0");
    const AttachedObjects o1 = attach(e1);
    for (const auto& v : scalar_invariants(e1, o1))
        out.require(v.is_zero(), "example 1 invariants vanish");
    const SpecialFormResult s1 = detect_special_form(e1, o1);
    out.require(!s1.integrable && !s1.special, "example 1 not of special form");

    const Distribution2 e2 = dist("0,1,0,0 ; 1,0,0,-(p^2+x)");
    const AttachedObjects o2 = attach(e2);
    for (const auto& v : scalar_invariants(e2, o2))
        out.require(v.is_zero(), "example 2 invariants vanish");
    const LinearizationResult l2 = linearizable(e2, o2);
    out.require(l2.verdict == Verdict::No && l2.reason.find("3-dimensional and not integrable") != std::string::npos,
                "example 2: " + l2.reason);

    const Distribution2 e3 = dist("0,1,0,0 ; 1,0,0,-(p^2+q)");
    const AttachedObjects o3 = attach(e3);
    const LinearizationResult l3 = linearizable(e3, o3);
    out.require(l3.verdict == Verdict::No && l3.reason.find("I^21") != std::string::npos, "example 3: " + l3.reason);

    const Distribution2 nse = dist("0,1,0,0 ; 1,0,0,-(p*q+p^2+q)");
    const AttachedObjects on = attach(nse);
    const InvariantList In = scalar_invariants(nse, on);
    out.require(In[0] == Scalar(-1) && In[4] == Scalar(-1) && In[3] == Scalar(-2), "NSE invariants");
    const LinearizationResult ln = linearizable(nse, on), gn = log_linearizable(nse, on);
    out.require(ln.verdict == Verdict::No, "NSE linearizable: " + ln.reason);
    out.require(gn.verdict == Verdict::No && gn.reason.find("I^21") != std::string::npos,
                "NSE log-linearizable: " + gn.reason);
    out.notes << "4 examples";
}

void table1(Outcome& out)
{
    suite_into(verify::table1(), out);
}

void section9_cross_checks(Outcome& out)
{
    std::vector<Distribution2> ds;
    for (const auto& row : verify::table1_rows())
        ds.push_back(dist(row.fields));
    std::mt19937_64 rng(909);
    for (int k = 0; k < 10; ++k)
        ds.push_back(verify::random_distribution(rng));
    for (const auto& d : ds) {
        const AttachedObjects o = attach(d);
        const ClassResult c = form_classes(o);
        const InvariantList I = scalar_invariants(d, o);
        const bool integrable = is_integrable(first_prolongation(d));
        out.require((c.r == 4) == !I[5].is_zero(), "r = 4 <=> I6 != 0 on " + d.to_string());
        out.require((c.r <= 2) == integrable, "r <= 2 <=> D_(1) integrable on " + d.to_string());
    }
    out.notes << ds.size() << " distributions";
}

void four_independent(Outcome& out)
{
    const InvariantList a = scalar_invariants(dist(kWorked));
    const std::size_t ra = independence_on_M({a[0], a[1], a[2], a[4]});
    const InvariantList b = scalar_invariants(dist("0,1,1,p*q ; 1,x*y,0,0"));
    const std::size_t rb = independence_on_M({b[0], b[1], b[2], b[3]});
    out.require(ra == 4, "rank of I1, I2, I3, I5");
    out.require(rb == 4, "rank of I1, I2, I3, I4");
    out.notes << "ranks " << ra << ", " << rb;
}

void jet_rank(Outcome& out)
{
    suite_into(verify::jet_rank(101, 3), out);
}

void orbit_codim(Outcome& out)
{
    const J::JetPoint theta = J::random_jet_point(101);
    for (int bound : {4, 5}) {
        const auto t0 = std::chrono::steady_clock::now();
        const int c = J::orbit_codimension(theta, bound);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.notes << "bound " << bound << ": " << c << " (" << static_cast<long>(s) << " s) ";
        out.require(c == 7, "codimension at bound " + std::to_string(bound));
    }
}

void scaling(Outcome& out)
{
    std::vector<Distribution2> ds = {dist(kWorked)};
    std::mt19937_64 rng(6);
    ds.push_back(verify::random_distribution(rng));
    for (const auto& d : ds) {
        const VectorValuedForm a = operator_A(d);
        const InvariantList j1 = tildeJ_invariants(a, *standard_symplectic());
        const auto r1 = contact_ratios(j1);
        for (int c : {2, 3, -1}) {
            const InvariantList jc = tildeJ_invariants(a, *standard_symplectic(c));
            for (int k = 0; k < 7; ++k) {
                mpq_class f(1);
                for (int w = 0; w < kTildeJScalingWeights[k]; ++w)
                    f /= c;
                out.require(jc[k] == Scalar(f) * j1[k], "J~" + std::to_string(k + 1) + " weight at c = " +
                                                            std::to_string(c));
            }
            const auto rc = contact_ratios(jc);
            out.require(r1.has_value() == rc.has_value() && (!r1 || *r1 == *rc),
                        "contact ratios at c = " + std::to_string(c));
        }
    }
    out.notes << ds.size() << " distributions, c in {2, 3, -1}";
}

void zij(Outcome& out)
{
    const Distribution2 d = dist(kWorked);
    const AttachedObjects o = attach(d);
    const auto a = Zij_fields(d.symplectic(), o), b = Zij_fields_by_volume(d.symplectic(), o);
    for (int k = 0; k < 4; ++k)
        out.require(a[k] == b[k], "two definitions of Z" + std::to_string(k / 2) + std::to_string(k % 2));
    Matrix<Scalar> m;
    for (const auto& f : a)
        m.push_back({f[0], f[1], f[2], f[3]});
    const Scalar det = determinant(m);
    out.require(!det.is_zero(), "Zij determinant");
    const InvariantList I = scalar_invariants(d, o);
    out.require(!I[2].is_zero() && I[2] != I[1], "I3 != 0, I3 != I2");
    const auto e = e_structure(d, o, EStructureKind::Kruglikov);
    Matrix<Scalar> k;
    for (const auto& f : e)
        k.push_back({f[0], f[1], f[2], f[3]});
    out.require(!determinant(k).is_zero(), "Kruglikov frame");
    out.notes << "4 fields, det has " << det.to_string().size() << " chars";
}

std::vector<std::pair<Var, double>> as_double(const Point& pt)
{
    std::vector<std::pair<Var, double>> v;
    for (Var k = 0; k < 4; ++k)
        v.emplace_back(k, pt.get(k)->get_d());
    return v;
}

double rel_error(const std::vector<double>& num, const std::vector<double>& exact)
{
    double e = 0, n = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        e = std::max(e, std::abs(num[i] - exact[i]));
        n = std::max(n, std::abs(exact[i]));
    }
    return e / std::max(n, 1e-8);
}

void numeric_oracles(Outcome& out)
{
    std::mt19937_64 rng(12);
    double worst_partial = 0, worst_lift = 0;
    // Central differences of partial().
    int samples = 0;
    while (samples < 10) {
        const Scalar f = Scalar(random_poly(rng, 3, 4)) / Scalar(Poly(3) + random_poly(rng, 2, 2));
        const Point pt = random_point(rng);
        auto at = as_double(pt);
        if (std::abs(f.eval_double(at)) > 1e6 || std::isnan(f.eval_double(at)))
            continue;
        ++samples;
        std::vector<double> num, exact;
        for (Var v = 0; v < 4; ++v) {
            const double h = 1e-5;
            auto up = at, dn = at;
            up[v].second += h;
            dn[v].second -= h;
            num.push_back((f.eval_double(up) - f.eval_double(dn)) / (2 * h));
            exact.push_back(f.partial(v).eval_double(at));
        }
        worst_partial = std::max(worst_partial, rel_error(num, exact));
    }
    // Flow a 2-plane by the linearized flow of X_H and compare with the lift.
    const SymplecticPtr om = standard_symplectic();
    for (int s = 0; s < 10; ++s) {
        const Scalar h(random_poly(rng, 3, 4));
        const VectorField xh = om->hamiltonian_field(h);
        std::array<std::array<Scalar, 4>, 4> jac;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                jac[i][j] = xh[i].partial(static_cast<Var>(j));
        const Point pt = random_point(rng);
        std::array<double, 4> u;
        std::uniform_real_distribution<double> ud(-2, 2);
        for (auto& c : u)
            c = ud(rng);
        using State = std::array<double, 20>; // point, then 4x4 matrix row-major
        auto rhs = [&](const State& st) {
            std::vector<std::pair<Var, double>> at;
            for (Var k = 0; k < 4; ++k)
                at.emplace_back(k, st[k]);
            State d{};
            double jv[4][4];
            for (int i = 0; i < 4; ++i) {
                d[i] = xh[i].eval_double(at);
                for (int j = 0; j < 4; ++j)
                    jv[i][j] = jac[i][j].eval_double(at);
            }
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    double c = 0;
                    for (int k = 0; k < 4; ++k)
                        c += jv[i][k] * st[4 + 4 * k + j];
                    d[4 + 4 * i + j] = c;
                }
            return d;
        };
        auto flow = [&](double t) {
            State st{};
            for (int k = 0; k < 4; ++k) {
                st[k] = pt.get(static_cast<Var>(k))->get_d();
                st[4 + 5 * k] = 1;
            }
            const int steps = 20;
            const double dt = t / steps;
            for (int n = 0; n < steps; ++n) {
                auto add = [](const State& a, const State& b, double c) {
                    State r;
                    for (std::size_t i = 0; i < r.size(); ++i)
                        r[i] = a[i] + c * b[i];
                    return r;
                };
                const State k1 = rhs(st), k2 = rhs(add(st, k1, dt / 2)), k3 = rhs(add(st, k2, dt / 2)),
                            k4 = rhs(add(st, k3, dt));
                for (std::size_t i = 0; i < st.size(); ++i)
                    st[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
            }
            // Push E1 = Dx + u1 Dp + u2 Dq, E2 = Dy + u3 Dp + u4 Dq; re-read graph coordinates.
            const double e[2][4] = {{1, u[0], 0, u[1]}, {0, u[2], 1, u[3]}};
            double f[2][4];
            for (int k = 0; k < 2; ++k)
                for (int i = 0; i < 4; ++i) {
                    f[k][i] = 0;
                    for (int j = 0; j < 4; ++j)
                        f[k][i] += st[4 + 4 * i + j] * e[k][j];
                }
            const double b00 = f[0][0], b01 = f[1][0], b10 = f[0][2], b11 = f[1][2];
            const double det = b00 * b11 - b01 * b10;
            const double i00 = b11 / det, i01 = -b01 / det, i10 = -b10 / det, i11 = b00 / det;
            const double u1 = f[0][1] * i00 + f[1][1] * i10, u3 = f[0][1] * i01 + f[1][1] * i11;
            const double u2 = f[0][3] * i00 + f[1][3] * i10, u4 = f[0][3] * i01 + f[1][3] * i11;
            return std::array<double, 4>{u1, u2, u3, u4};
        };
        const double t = 1e-4;
        const auto plus = flow(t), minus = flow(-t);
        std::vector<double> num(4), exact(4);
        const auto lift = J::hamiltonian_lift(*om, h);
        auto at = as_double(pt);
        for (int i = 0; i < 4; ++i)
            at.emplace_back(jets::fiber(i + 1), u[i]);
        for (int i = 0; i < 4; ++i) {
            num[i] = (plus[i] - minus[i]) / (2 * t);
            exact[i] = lift[4 + i].eval_double(at);
        }
        worst_lift = std::max(worst_lift, rel_error(num, exact));
    }
    out.require(worst_partial <= 1e-4, "partial");
    out.require(worst_lift <= 1e-4, "lift");
    out.notes << "max relative error: partial " << worst_partial << ", lift " << worst_lift;
}

} // namespace

int main()
{
    const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria = {
        {1, worked_example}, {2, identity_suite},      {3, special_form_formulas}, {4, section8_examples},
        {5, table1},         {6, section9_cross_checks}, {7, four_independent},    {8, jet_rank},
        {9, orbit_codim},    {10, scaling},            {11, zij},                 {12, numeric_oracles},
    };
    int failed = 0;
    for (const auto& [n, fn] : criteria) {
        Outcome out;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(out);
        } catch (const std::exception& e) {
            out.ok = false;
            out.notes << " [exception: " << e.what() << "]";
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << n << ": " << (out.ok ? "PASS" : "FAIL") << " (" << out.notes.str() << "; "
                  << static_cast<long>(ms) << " ms)" << std::endl;
        failed += out.ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
