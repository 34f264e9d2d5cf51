#include "smae/expr/scalar.hpp"

#include "smae/error.hpp"

#include <algorithm>
#include <cmath>

namespace smae::expr {

Scalar::Scalar(RatFun a, RatFun b, std::shared_ptr<const RatFun> radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(radicand))
{
    if (!b_.is_zero() && !radicand_)
        throw Error("radical part without a radicand");
}

Scalar Scalar::sqrt_of(std::shared_ptr<const RatFun> radicand)
{
    if (!radicand || radicand->is_zero())
        throw DomainError("square root of zero radicand");
    return Scalar(RatFun(), RatFun(1), std::move(radicand));
}

std::shared_ptr<const RatFun> common_radicand(const Scalar& x, const Scalar& y)
{
    const auto& rx = x.radicand();
    const auto& ry = y.radicand();
    if (!rx)
        return ry;
    if (!ry || rx == ry)
        return rx;
    if (*rx != *ry) {
        if (!x.has_radical())
            return ry;
        if (!y.has_radical())
            return rx;
        throw DomainError("operands carry different radicands");
    }
    return rx;
}

Scalar Scalar::operator-() const
{
    return Scalar(-a_, -b_, radicand_);
}

Scalar operator+(const Scalar& x, const Scalar& y)
{
    return Scalar(x.a_ + y.a_, x.b_ + y.b_, common_radicand(x, y));
}

Scalar operator-(const Scalar& x, const Scalar& y)
{
    return Scalar(x.a_ - y.a_, x.b_ - y.b_, common_radicand(x, y));
}

Scalar operator*(const Scalar& x, const Scalar& y)
{
    auto r = common_radicand(x, y);
    if (x.b_.is_zero() && y.b_.is_zero())
        return Scalar(x.a_ * y.a_, RatFun(), r);
    if (x.b_.is_zero())
        return Scalar(x.a_ * y.a_, x.a_ * y.b_, r);
    if (y.b_.is_zero())
        return Scalar(x.a_ * y.a_, x.b_ * y.a_, r);
    return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * *r, x.a_ * y.b_ + x.b_ * y.a_, r);
}

Scalar operator/(const Scalar& x, const Scalar& y)
{
    if (y.b_.is_zero()) {
        if (y.a_.is_zero())
            throw DomainError("division by zero");
        RatFun inv = y.a_.inverse();
        return Scalar(x.a_ * inv, x.b_ * inv, common_radicand(x, y));
    }
    return x * y.inverse();
}

Scalar Scalar::inverse() const
{
    if (b_.is_zero())
        return Scalar(a_.inverse(), RatFun(), radicand_);
    // (a + b s)^-1 = (a - b s) / (a^2 - b^2 Delta)
    RatFun norm = a_ * a_ - b_ * b_ * *radicand_;
    if (norm.is_zero())
        throw DomainError("division by a zero divisor of the radical extension");
    RatFun inv = norm.inverse();
    return Scalar(a_ * inv, -(b_ * inv), radicand_);
}

Scalar Scalar::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    if (b_.is_zero())
        return Scalar(a_.pow(n), RatFun(), radicand_);
    Scalar result(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

Scalar Scalar::scaled(const mpq_class& c) const
{
    return Scalar(a_.scaled(c), b_.scaled(c), radicand_);
}

Scalar Scalar::partial(Var v) const
{
    if (b_.is_zero())
        return Scalar(a_.derivative(v), RatFun(), radicand_);
    RatFun dd = radicand_->derivative(v);
    RatFun b = b_.derivative(v);
    if (!dd.is_zero())
        b += b_ * dd / radicand_->scaled(2);
    return Scalar(a_.derivative(v), b, radicand_);
}

Scalar Scalar::total_derivative(int base) const
{
    if (b_.is_zero())
        return Scalar(a_.total_derivative(base), RatFun(), radicand_);
    RatFun dd = radicand_->total_derivative(base);
    RatFun b = b_.total_derivative(base);
    if (!dd.is_zero())
        b += b_ * dd / radicand_->scaled(2);
    return Scalar(a_.total_derivative(base), b, radicand_);
}

mpq_class Scalar::eval(const Point& pt) const
{
    mpq_class a = a_.eval(pt);
    if (b_.is_zero())
        return a;
    mpq_class b = b_.eval(pt);
    if (sgn(b) == 0)
        return a;
    mpq_class d = radicand_->eval(pt);
    if (sgn(d) < 0 || !mpz_perfect_square_p(d.get_num_mpz_t()) || !mpz_perfect_square_p(d.get_den_mpz_t()))
        throw EvaluationError("radical has no rational value at point");
    mpq_class s;
    mpz_sqrt(s.get_num_mpz_t(), d.get_num_mpz_t());
    mpz_sqrt(s.get_den_mpz_t(), d.get_den_mpz_t());
    s.canonicalize();
    return a + b * s;
}

namespace {

double eval_poly_double(const Poly& p, const std::vector<std::pair<Var, double>>& pt)
{
    double sum = 0;
    for (const auto& t : p.terms()) {
        double prod = t.coef.get_d();
        for (auto e : t.mono) {
            Var v = Monomial::var_of(e);
            auto it = std::find_if(pt.begin(), pt.end(), [v](const auto& kv) { return kv.first == v; });
            if (it == pt.end())
                throw EvaluationError("no value for variable " + symbols::name(v));
            prod *= std::pow(it->second, static_cast<int>(Monomial::exp_of(e)));
        }
        sum += prod;
    }
    return sum;
}

double eval_ratfun_double(const RatFun& r, const std::vector<std::pair<Var, double>>& pt)
{
    return eval_poly_double(r.num(), pt) / eval_poly_double(r.den(), pt);
}

} // namespace

double Scalar::eval_double(const std::vector<std::pair<Var, double>>& pt) const
{
    double a = eval_ratfun_double(a_, pt);
    if (b_.is_zero())
        return a;
    double d = eval_ratfun_double(*radicand_, pt);
    if (d < 0)
        throw EvaluationError("negative radicand at point");
    return a + eval_ratfun_double(b_, pt) * std::sqrt(d);
}

Scalar Scalar::eval_partial(const Point& pt) const
{
    if (b_.is_zero())
        return Scalar(a_.eval_partial(pt), RatFun(), nullptr);
    auto r = std::make_shared<const RatFun>(radicand_->eval_partial(pt));
    return Scalar(a_.eval_partial(pt), b_.eval_partial(pt), r);
}

Scalar Scalar::substitute(const std::vector<std::pair<Var, RatFun>>& values) const
{
    if (b_.is_zero())
        return Scalar(a_.substitute(values), RatFun(), radicand_);
    auto r = std::make_shared<const RatFun>(radicand_->substitute(values));
    return Scalar(a_.substitute(values), b_.substitute(values), r);
}

std::vector<Var> Scalar::variables() const
{
    auto va = a_.variables(), vb = b_.variables();
    std::vector<Var> out;
    std::set_union(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out));
    return out;
}

std::string Scalar::to_string() const
{
    if (b_.is_zero())
        return a_.to_string();
    std::string rad = "(" + b_.to_string() + ")*sqrt(" + radicand_->to_string() + ")";
    if (a_.is_zero())
        return rad;
    return a_.to_string() + " + " + rad;
}

} // namespace smae::expr
