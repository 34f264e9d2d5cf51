#pragma once

#include "smae/expr/monomial.hpp"

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smae::expr {

/// Exact rational values assigned to some variables.
class Point {
public:
    Point() = default;

    void set(Var v, mpq_class value);
    const mpq_class* get(Var v) const;
    bool has(Var v) const { return get(v) != nullptr; }

private:
    std::vector<std::optional<mpq_class>> values_;
};

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted by decreasing monomial (see compare()) with nonzero coefficients,
/// so structural equality is mathematical equality.
class Poly {
public:
    struct Term {
        Monomial mono;
        mpq_class coef;
    };

    Poly() = default;
    Poly(int c);
    Poly(long c);
    explicit Poly(const mpq_class& c);

    static Poly variable(Var v, unsigned exponent = 1);
    static Poly term(Monomial m, mpq_class c);
    static Poly from_terms(std::vector<Term> terms);
    /// Terms must already be sorted, distinct and nonzero.
    static Poly from_sorted_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const;
    mpq_class constant_value() const; // requires is_constant()
    mpq_class constant_term() const;

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const { return terms_.front(); }

    unsigned total_degree() const;
    unsigned degree_in(Var v) const;
    std::vector<Var> variables() const;
    bool has_var(Var v) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const mpq_class& c) const;
    Poly times_monomial(const Monomial& m) const;
    Poly pow(unsigned n) const;

    /// Plain partial derivative treating every other variable as independent.
    Poly derivative(Var v) const;
    /// Total derivative D_a along base variable a, using the symbol table's
    /// rules for non-base symbols. Throws DomainError on an undefined rule.
    Poly total_derivative(int base) const;

    /// this / d if d divides this exactly.
    std::optional<Poly> divide_exact(const Poly& d) const;

    mpq_class eval(const Point& pt) const;
    /// Substitutes the assigned variables, leaving the others symbolic.
    Poly eval_partial(const Point& pt) const;
    Poly substitute(const std::vector<std::pair<Var, Poly>>& values) const;

    Poly monic() const;
    /// Integer coefficients with unit content and positive leading coefficient.
    Poly primitive_integer() const;
    /// Coefficients with respect to variable v: degree -> coefficient.
    std::map<unsigned, Poly> coefficients_in(Var v) const;
    /// Groups terms by their power product in the variables with mask[v] set;
    /// returns the cofactors (polynomials in the remaining variables).
    std::vector<Poly> coefficients_wrt(const std::vector<bool>& mask) const;

    std::optional<Poly> sqrt_exact() const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
    std::size_t hash() const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Monic greatest common divisor (1 when coprime, 0 only for gcd(0,0)).
Poly gcd(const Poly& a, const Poly& b);

} // namespace smae::expr
