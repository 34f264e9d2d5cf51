#pragma once

#include "smae/expr/ratfun.hpp"

#include <memory>

namespace smae::expr {

/// Element a + b*s of Q(vars)[s]/(s^2 - Delta), where Delta is the radicand
/// of the ambient context. Without a radicand b is always zero.
class Scalar {
public:
    Scalar() = default;
    Scalar(int c) : a_(c) {}
    Scalar(const Poly& p) : a_(p) {}
    Scalar(const RatFun& r) : a_(r) {}
    explicit Scalar(const mpq_class& c) : a_(c) {}
    Scalar(RatFun a, RatFun b, std::shared_ptr<const RatFun> radicand);

    static Scalar variable(Var v) { return Scalar(RatFun::variable(v)); }
    /// The adjoined square root of `radicand`.
    static Scalar sqrt_of(std::shared_ptr<const RatFun> radicand);

    const RatFun& rational_part() const { return a_; }
    const RatFun& radical_part() const { return b_; }
    const std::shared_ptr<const RatFun>& radicand() const { return radicand_; }
    bool has_radical() const { return !b_.is_zero(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_constant() const { return b_.is_zero() && a_.is_constant(); }
    mpq_class constant_value() const { return a_.constant_value(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(int n) const;
    Scalar scaled(const mpq_class& c) const;

    /// Partial derivative in any variable, with d(s) = d(Delta) s / (2 Delta).
    Scalar partial(Var v) const;
    /// Total derivative along a base variable (equals partial() unless
    /// symbols with derivation rules occur).
    Scalar total_derivative(int base) const;

    /// Exact value; throws EvaluationError if a denominator vanishes or the
    /// radical has no rational value at the point.
    mpq_class eval(const Point& pt) const;
    double eval_double(const std::vector<std::pair<Var, double>>& pt) const;
    Scalar eval_partial(const Point& pt) const;
    Scalar substitute(const std::vector<std::pair<Var, RatFun>>& values) const;

    std::vector<Var> variables() const;
    bool has_var(Var v) const { return a_.has_var(v) || b_.has_var(v); }
    std::size_t complexity() const { return a_.complexity() + 2 * b_.complexity(); }

    bool operator==(const Scalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    RatFun a_;
    RatFun b_;
    std::shared_ptr<const RatFun> radicand_;
};

/// Radicand shared by two operands; throws if they carry different ones.
std::shared_ptr<const RatFun> common_radicand(const Scalar& x, const Scalar& y);

} // namespace smae::expr
