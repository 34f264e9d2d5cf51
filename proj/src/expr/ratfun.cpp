#include "smae/expr/ratfun.hpp"

#include "smae/error.hpp"

#include <algorithm>

namespace smae::expr {

namespace {

Poly exact(const Poly& a, const Poly& b)
{
    if (b.is_one())
        return a;
    auto q = a.divide_exact(b);
    if (!q)
        throw Error("internal: inexact polynomial division");
    return std::move(*q);
}

// For a nilpotent e, writes p = p0 + p1 e and returns p0 - p1 e.
std::optional<Poly> nilpotent_conjugate(const Poly& p)
{
    auto n = symbols::nilpotent();
    if (!n || p.degree_in(*n) == 0)
        return std::nullopt;
    Poly c;
    for (const auto& t : p.terms())
        c += t.mono.exponent(*n) == 0 ? Poly::term(t.mono, t.coef) : Poly::term(t.mono, -t.coef);
    return c;
}

} // namespace

RatFun::RatFun(const Poly& num, const Poly& den)
{
    if (den.is_zero())
        throw DomainError("division by zero");
    // Denominators are kept free of the nilpotent symbol.
    if (auto c = nilpotent_conjugate(den)) {
        Poly d = den * *c;
        if (d.is_zero())
            throw DomainError("division by a nilpotent element");
        *this = RatFun(num * *c, d);
        return;
    }
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    Poly n = exact(num, g), d = exact(den, g);
    mpq_class lc = d.leading().coef;
    if (lc != 1) {
        n = n.scaled(1 / lc);
        d = d.scaled(1 / lc);
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFun RatFun::operator-() const
{
    return RatFun(-num_, den_, Reduced{});
}

RatFun operator+(const RatFun& a, const RatFun& b)
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    if (a.den_.is_one() && b.den_.is_one())
        return RatFun(a.num_ + b.num_, Poly(1), RatFun::Reduced{});
    if (b.den_.is_one())
        return RatFun(a.num_ + b.num_ * a.den_, a.den_, RatFun::Reduced{});
    if (a.den_.is_one())
        return RatFun(b.num_ + a.num_ * b.den_, b.den_, RatFun::Reduced{});
    if (a.den_ == b.den_)
        return RatFun(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one())
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RatFun::Reduced{});
    Poly ad = exact(a.den_, g), bd = exact(b.den_, g);
    Poly t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero())
        return RatFun();
    Poly h = gcd(t, g);
    Poly den = ad * exact(b.den_, h);
    Poly num = exact(t, h);
    mpq_class lc = den.leading().coef;
    if (lc != 1) {
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    return RatFun(std::move(num), std::move(den), RatFun::Reduced{});
}

RatFun operator-(const RatFun& a, const RatFun& b)
{
    return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b)
{
    if (a.is_zero() || b.is_zero())
        return RatFun();
    if (a.den_.is_one() && b.den_.is_one())
        return RatFun(a.num_ * b.num_, Poly(1), RatFun::Reduced{});
    if (a.is_constant())
        return b.scaled(a.constant_value());
    if (b.is_constant())
        return a.scaled(b.constant_value());
    Poly g1 = a.den_.is_one() ? Poly(1) : gcd(b.num_, a.den_);
    Poly g2 = b.den_.is_one() ? Poly(1) : gcd(a.num_, b.den_);
    Poly num = exact(a.num_, g2) * exact(b.num_, g1);
    Poly den = exact(a.den_, g1) * exact(b.den_, g2);
    // Truncation can create new common factors, e.g. (x + e)^2 = x (x + 2e).
    if (nilpotent_conjugate(a.num_) || nilpotent_conjugate(b.num_))
        return RatFun(num, den);
    mpq_class lc = den.leading().coef;
    if (lc != 1) {
        num = num.scaled(1 / lc);
        den = den.scaled(1 / lc);
    }
    return RatFun(std::move(num), std::move(den), RatFun::Reduced{});
}

RatFun operator/(const RatFun& a, const RatFun& b)
{
    return a * b.inverse();
}

RatFun RatFun::inverse() const
{
    if (num_.is_zero())
        throw DomainError("division by zero");
    if (nilpotent_conjugate(num_))
        return RatFun(den_, num_);
    mpq_class lc = num_.leading().coef;
    return RatFun(den_.scaled(1 / lc), num_.scaled(1 / lc), Reduced{});
}

RatFun RatFun::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    if (nilpotent_conjugate(num_))
        return RatFun(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
    return RatFun(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Reduced{});
}

RatFun RatFun::scaled(const mpq_class& c) const
{
    if (sgn(c) == 0)
        return RatFun();
    return RatFun(num_.scaled(c), den_, Reduced{});
}

RatFun RatFun::derivative(Var v) const
{
    if (den_.is_one())
        return RatFun(num_.derivative(v), Poly(1), Reduced{});
    Poly dd = den_.derivative(v);
    if (dd.is_zero())
        return RatFun(num_.derivative(v), den_);
    return RatFun(num_.derivative(v) * den_ - num_ * dd, den_ * den_);
}

RatFun RatFun::total_derivative(int base) const
{
    if (den_.is_one())
        return RatFun(num_.total_derivative(base), Poly(1), Reduced{});
    Poly dd = den_.total_derivative(base);
    Poly dn = num_.total_derivative(base);
    if (dd.is_zero())
        return RatFun(dn, den_);
    // (n/d)' = (n' d - n d') / d^2; the common factor of d and d' is removed
    // before squaring to keep intermediate sizes small.
    Poly g = gcd(den_, dd);
    Poly dg = exact(den_, g), ddg = exact(dd, g);
    return RatFun(dn * dg - num_ * ddg, den_ * dg);
}

mpq_class RatFun::eval(const Point& pt) const
{
    mpq_class d = den_.eval(pt);
    if (sgn(d) == 0)
        throw EvaluationError("denominator vanishes at point");
    return num_.eval(pt) / d;
}

RatFun RatFun::eval_partial(const Point& pt) const
{
    Poly d = den_.eval_partial(pt);
    if (d.is_zero())
        throw EvaluationError("denominator vanishes at point");
    return RatFun(num_.eval_partial(pt), d);
}

RatFun RatFun::substitute(const std::vector<std::pair<Var, RatFun>>& values) const
{
    auto sub_poly = [&](const Poly& p) {
        RatFun acc;
        for (const auto& t : p.terms()) {
            RatFun term(Poly::term(Monomial(), t.coef));
            Monomial rest;
            for (auto e : t.mono) {
                Var v = Monomial::var_of(e);
                auto it = std::find_if(values.begin(), values.end(), [v](const auto& kv) { return kv.first == v; });
                if (it != values.end())
                    term *= it->second.pow(static_cast<int>(Monomial::exp_of(e)));
                else
                    rest.push_back_unchecked(v, Monomial::exp_of(e));
            }
            acc += term * RatFun(Poly::term(rest, 1));
        }
        return acc;
    };
    return sub_poly(num_) / sub_poly(den_);
}

std::vector<Var> RatFun::variables() const
{
    auto a = num_.variables(), b = den_.variables();
    std::vector<Var> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string RatFun::to_string() const
{
    if (den_.is_one())
        return num_.to_string();
    // Clear rational coefficients so the printed fraction has integer ones.
    mpz_class k = 1;
    for (const Poly* p : {&num_, &den_})
        for (const auto& t : p->terms())
            mpz_lcm(k.get_mpz_t(), k.get_mpz_t(), t.coef.get_den_mpz_t());
    Poly n = num_.scaled(mpq_class(k)), d = den_.scaled(mpq_class(k));
    std::string ns = n.to_string();
    if (n.size() > 1)
        ns = "(" + ns + ")";
    return ns + "/(" + d.to_string() + ")";
}

} // namespace smae::expr
