#pragma once

#include "smae/expr/poly.hpp"

namespace smae::expr {

/// Reduced fraction num/den of polynomials with a monic denominator.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(int c) : num_(c), den_(1) {}
    RatFun(const Poly& p) : num_(p), den_(1) {}
    explicit RatFun(const mpq_class& c) : num_(c), den_(1) {}
    /// Reduces and normalizes; throws DomainError if den is zero.
    RatFun(const Poly& num, const Poly& den);

    static RatFun variable(Var v) { return RatFun(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    mpq_class constant_value() const { return num_.constant_value(); }

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const;
    RatFun pow(int n) const;
    RatFun scaled(const mpq_class& c) const;

    RatFun derivative(Var v) const;
    RatFun total_derivative(int base) const;

    mpq_class eval(const Point& pt) const;
    RatFun eval_partial(const Point& pt) const;
    RatFun substitute(const std::vector<std::pair<Var, RatFun>>& values) const;

    std::vector<Var> variables() const;
    bool has_var(Var v) const { return num_.has_var(v) || den_.has_var(v); }
    /// Rough size measure used for pivot choice.
    std::size_t complexity() const { return num_.size() + den_.size(); }

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    struct Reduced {};
    RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

} // namespace smae::expr
