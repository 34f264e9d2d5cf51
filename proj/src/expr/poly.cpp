#include "smae/expr/poly.hpp"

#include "smae/error.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace smae::expr {

// ---------------------------------------------------------------- Point

void Point::set(Var v, mpq_class value)
{
    if (values_.size() <= v)
        values_.resize(static_cast<std::size_t>(v) + 1);
    values_[v] = std::move(value);
}

const mpq_class* Point::get(Var v) const
{
    if (v >= values_.size() || !values_[v])
        return nullptr;
    return &*values_[v];
}

// ---------------------------------------------------------------- helpers

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b)
{
    return compare(a.mono, b.mono) > 0;
}

using Accumulator = std::unordered_map<Monomial, mpq_class, MonomialHash>;

std::vector<Poly::Term> drain(Accumulator& acc)
{
    std::vector<Poly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0)
            out.push_back({m, std::move(c)});
    std::sort(out.begin(), out.end(), term_greater);
    return out;
}

mpq_class rational_pow(const mpq_class& base, unsigned e)
{
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

} // namespace

// ---------------------------------------------------------------- construction

Poly::Poly(int c) : Poly(static_cast<long>(c)) {}

Poly::Poly(long c)
{
    if (c != 0)
        terms_.push_back({Monomial(), mpq_class(c)});
}

Poly::Poly(const mpq_class& c)
{
    if (sgn(c) != 0)
        terms_.push_back({Monomial(), c});
}

Poly Poly::variable(Var v, unsigned exponent)
{
    return term(Monomial::of(v, exponent), 1);
}

Poly Poly::term(Monomial m, mpq_class c)
{
    Poly p;
    if (sgn(c) != 0)
        p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), term_greater);
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
            if (sgn(p.terms_.back().coef) == 0)
                p.terms_.pop_back();
        } else if (sgn(t.coef) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms)
{
    Poly p;
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_one() const
{
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coef == 1;
}

mpq_class Poly::constant_value() const
{
    if (!is_constant())
        throw Error("polynomial is not constant");
    return terms_.empty() ? mpq_class(0) : terms_[0].coef;
}

mpq_class Poly::constant_term() const
{
    if (!terms_.empty() && terms_.back().mono.is_one())
        return terms_.back().coef;
    return 0;
}

unsigned Poly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

unsigned Poly::degree_in(Var v) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.exponent(v));
    return d;
}

std::vector<Var> Poly::variables() const
{
    std::vector<bool> seen(kMaxVars, false);
    for (const auto& t : terms_)
        for (auto e : t.mono)
            seen[Monomial::var_of(e)] = true;
    std::vector<Var> out;
    for (int v = 0; v < kMaxVars; ++v)
        if (seen[v])
            out.push_back(static_cast<Var>(v));
    return out;
}

bool Poly::has_var(Var v) const
{
    for (const auto& t : terms_)
        if (t.mono.exponent(v) > 0)
            return true;
    return false;
}

// ---------------------------------------------------------------- arithmetic

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& t : r.terms_)
        t.coef = -t.coef;
    return r;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b)
{
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        int c = compare(i->mono, j->mono);
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            out.push_back({j->mono, Subtract ? mpq_class(-j->coef) : j->coef});
            ++j;
        } else {
            mpq_class s = Subtract ? mpq_class(i->coef - j->coef) : mpq_class(i->coef + j->coef);
            if (sgn(s) != 0)
                out.push_back({i->mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i != a.end(); ++i)
        out.push_back(*i);
    for (; j != b.end(); ++j)
        out.push_back({j->mono, Subtract ? mpq_class(-j->coef) : j->coef});
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    if (terms_.empty()) {
        terms_ = o.terms_;
        return *this;
    }
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

namespace {

// Drops terms divisible by the square of the nilpotent symbol, if any.
Poly truncate_nilpotent(Poly p)
{
    auto n = symbols::nilpotent();
    if (!n)
        return p;
    std::vector<Poly::Term> kept;
    bool dropped = false;
    for (const auto& t : p.terms()) {
        if (t.mono.exponent(*n) >= 2)
            dropped = true;
        else
            kept.push_back(t);
    }
    return dropped ? Poly::from_sorted_terms(std::move(kept)) : p;
}

Poly multiply(const Poly& a, const Poly& b);

} // namespace

Poly operator*(const Poly& a, const Poly& b)
{
    return truncate_nilpotent(multiply(a, b));
}

namespace {

Poly multiply(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    if (a.size() == 1 && a.terms()[0].mono.is_one())
        return b.scaled(a.terms()[0].coef);
    if (b.size() == 1 && b.terms()[0].mono.is_one())
        return a.scaled(b.terms()[0].coef);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1)
        return large.times_monomial(small.terms()[0].mono).scaled(small.terms()[0].coef);
    if (small.size() * large.size() <= 256) {
        std::vector<Poly::Term> prod;
        prod.reserve(small.size() * large.size());
        for (const auto& s : small.terms())
            for (const auto& l : large.terms())
                prod.push_back({s.mono * l.mono, s.coef * l.coef});
        return Poly::from_terms(std::move(prod));
    }
    Accumulator acc;
    acc.reserve(small.size() * large.size() / 2 + 16);
    mpq_class tmp;
    for (const auto& s : small.terms()) {
        for (const auto& l : large.terms()) {
            auto [it, inserted] = acc.try_emplace(s.mono * l.mono);
            mpq_mul(tmp.get_mpq_t(), s.coef.get_mpq_t(), l.coef.get_mpq_t());
            it->second += tmp;
        }
    }
    return Poly::from_sorted_terms(drain(acc));
}

} // namespace

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const mpq_class& c) const
{
    if (sgn(c) == 0)
        return Poly();
    Poly r = *this;
    if (c != 1)
        for (auto& t : r.terms_)
            t.coef *= c;
    return r;
}

Poly Poly::times_monomial(const Monomial& m) const
{
    if (m.is_one())
        return *this;
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono * m, t.coef});
    return truncate_nilpotent(std::move(r));
}

Poly Poly::pow(unsigned n) const
{
    Poly result(1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1u)
            result *= base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

Poly Poly::derivative(Var v) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = 0;
        Monomial rest = t.mono.without(v, &e);
        if (e == 0)
            continue;
        out.push_back({rest.times_var(v, e - 1), t.coef * e});
    }
    // Lowering one exponent can reorder terms under a graded order.
    return from_terms(std::move(out));
}

Poly Poly::total_derivative(int base) const
{
    if (base < 0 || base >= kBaseVarCount)
        throw Error("total derivative along a non-base variable");
    Poly result = derivative(static_cast<Var>(base));
    for (Var s : variables()) {
        if (is_base_var(s))
            continue;
        auto rule = symbols::rule(s, base);
        if (rule.kind == symbols::RuleKind::Zero)
            continue;
        if (rule.kind == symbols::RuleKind::Undefined)
            throw DomainError("total derivative D_" + symbols::name(static_cast<Var>(base)) + " of " +
                              symbols::name(s) + " is not available");
        result += derivative(s) * *rule.value;
    }
    return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const
{
    if (d.is_zero())
        throw DomainError("division by zero polynomial");
    if (is_zero())
        return Poly();
    if (d.is_constant())
        return scaled(1 / d.terms_[0].coef);
    if (total_degree() < d.total_degree())
        return std::nullopt;
    const Term& lt = d.terms_.front();
    if (d.size() == 1) {
        Poly r;
        r.terms_.reserve(terms_.size());
        mpq_class inv = 1 / lt.coef;
        for (const auto& t : terms_) {
            if (!lt.mono.divides(t.mono))
                return std::nullopt;
            r.terms_.push_back({lt.mono.quotient_of(t.mono), t.coef * inv});
        }
        return r;
    }
    for (Var v : d.variables())
        if (degree_in(v) < d.degree_in(v))
            return std::nullopt;

    struct Entry {
        Monomial mono;
        std::size_t qi;
        std::size_t dj;
    };
    auto less = [](const Entry& a, const Entry& b) { return compare(a.mono, b.mono) < 0; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);

    std::vector<Term> quotient;
    std::size_t ai = 0;
    mpq_class c, tmp;
    const mpq_class lt_inv = 1 / lt.coef;
    while (ai < terms_.size() || !heap.empty()) {
        const Monomial* best = nullptr;
        if (ai < terms_.size())
            best = &terms_[ai].mono;
        if (!heap.empty() && (best == nullptr || compare(heap.top().mono, *best) > 0))
            best = &heap.top().mono;
        Monomial m = *best;
        c = 0;
        if (ai < terms_.size() && terms_[ai].mono == m) {
            c = terms_[ai].coef;
            ++ai;
        }
        while (!heap.empty() && heap.top().mono == m) {
            Entry e = heap.top();
            heap.pop();
            mpq_mul(tmp.get_mpq_t(), quotient[e.qi].coef.get_mpq_t(), d.terms_[e.dj].coef.get_mpq_t());
            c -= tmp;
            if (e.dj + 1 < d.terms_.size())
                heap.push({quotient[e.qi].mono * d.terms_[e.dj + 1].mono, e.qi, e.dj + 1});
        }
        if (sgn(c) == 0)
            continue;
        if (!lt.mono.divides(m))
            return std::nullopt;
        quotient.push_back({lt.mono.quotient_of(m), c * lt_inv});
        heap.push({quotient.back().mono * d.terms_[1].mono, quotient.size() - 1, 1});
    }
    return from_sorted_terms(std::move(quotient));
}

// ---------------------------------------------------------------- evaluation

mpq_class Poly::eval(const Point& pt) const
{
    mpq_class sum = 0, prod;
    for (const auto& t : terms_) {
        prod = t.coef;
        for (auto e : t.mono) {
            const mpq_class* v = pt.get(Monomial::var_of(e));
            if (!v)
                throw EvaluationError("no value for variable " + symbols::name(Monomial::var_of(e)));
            prod *= rational_pow(*v, Monomial::exp_of(e));
        }
        sum += prod;
    }
    return sum;
}

Poly Poly::eval_partial(const Point& pt) const
{
    Accumulator acc;
    for (const auto& t : terms_) {
        mpq_class c = t.coef;
        Monomial rest;
        for (auto e : t.mono) {
            Var v = Monomial::var_of(e);
            if (const mpq_class* val = pt.get(v))
                c *= rational_pow(*val, Monomial::exp_of(e));
            else
                rest.push_back_unchecked(v, Monomial::exp_of(e));
        }
        if (sgn(c) != 0)
            acc[rest] += c;
    }
    return from_sorted_terms(drain(acc));
}

Poly Poly::substitute(const std::vector<std::pair<Var, Poly>>& values) const
{
    std::vector<const Poly*> table(kMaxVars, nullptr);
    for (const auto& [v, p] : values)
        table[v] = &p;
    std::map<std::pair<Var, unsigned>, Poly> powers;
    auto power = [&](Var v, unsigned e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, table[v]->pow(e)).first;
        return it->second;
    };
    Accumulator acc;
    mpq_class tmp;
    for (const auto& t : terms_) {
        Monomial rest;
        Poly factor(t.coef);
        for (auto e : t.mono) {
            Var v = Monomial::var_of(e);
            if (table[v])
                factor *= power(v, Monomial::exp_of(e));
            else
                rest.push_back_unchecked(v, Monomial::exp_of(e));
        }
        for (const auto& ft : factor.terms_)
            acc[ft.mono * rest] += ft.coef;
    }
    return from_sorted_terms(drain(acc));
}

// ---------------------------------------------------------------- normal forms

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    return scaled(1 / terms_.front().coef);
}

Poly Poly::primitive_integer() const
{
    if (is_zero())
        return *this;
    mpz_class l = 1, g = 0;
    for (const auto& t : terms_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    mpq_class factor(l, g);
    factor.canonicalize();
    if (sgn(terms_.front().coef) < 0)
        factor = -factor;
    return scaled(factor);
}

std::map<unsigned, Poly> Poly::coefficients_in(Var v) const
{
    std::map<unsigned, std::vector<Term>> groups;
    for (const auto& t : terms_) {
        unsigned e = 0;
        Monomial rest = t.mono.without(v, &e);
        groups[e].push_back({std::move(rest), t.coef});
    }
    std::map<unsigned, Poly> out;
    for (auto& [e, ts] : groups)
        out.emplace(e, from_terms(std::move(ts)));
    return out;
}

std::vector<Poly> Poly::coefficients_wrt(const std::vector<bool>& mask) const
{
    std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
    for (const auto& t : terms_) {
        Monomial key, rest;
        for (auto e : t.mono) {
            Var v = Monomial::var_of(e);
            if (v < mask.size() && mask[v])
                key.push_back_unchecked(v, Monomial::exp_of(e));
            else
                rest.push_back_unchecked(v, Monomial::exp_of(e));
        }
        groups[key].push_back({std::move(rest), t.coef});
    }
    std::vector<Poly> out;
    out.reserve(groups.size());
    for (auto& [k, ts] : groups)
        out.push_back(from_terms(std::move(ts)));
    return out;
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& c)
{
    if (sgn(c) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t()))
        return std::nullopt;
    mpq_class r;
    mpz_sqrt(r.get_num_mpz_t(), c.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), c.get_den_mpz_t());
    r.canonicalize();
    return r;
}

std::optional<Monomial> monomial_sqrt(const Monomial& m)
{
    Monomial r;
    for (auto e : m) {
        if (Monomial::exp_of(e) % 2 != 0)
            return std::nullopt;
        r.push_back_unchecked(Monomial::var_of(e), Monomial::exp_of(e) / 2);
    }
    return r;
}

} // namespace

std::optional<Poly> Poly::sqrt_exact() const
{
    if (is_zero())
        return Poly();
    auto c0 = rational_sqrt(terms_.front().coef);
    auto m0 = monomial_sqrt(terms_.front().mono);
    if (!c0 || !m0)
        return std::nullopt;
    Poly root = term(*m0, *c0);
    Poly rem = *this - root * root;
    const Monomial lead = *m0;
    const mpq_class two_lead = 2 * *c0;
    std::size_t guard = 4 * terms_.size() + 16;
    while (!rem.is_zero()) {
        if (guard-- == 0)
            return std::nullopt;
        const Term& r = rem.leading();
        if (!lead.divides(r.mono))
            return std::nullopt;
        Monomial tm = lead.quotient_of(r.mono);
        if (compare(tm, root.terms_.back().mono) >= 0)
            return std::nullopt;
        Poly t = term(tm, r.coef / two_lead);
        rem -= (root.scaled(2) + t) * t;
        root += t;
    }
    return root;
}

// ---------------------------------------------------------------- comparison/printing

bool Poly::operator==(const Poly& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

std::size_t Poly::hash() const
{
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 1000003u ^ t.mono.hash();
        h = h * 1000003u ^ mpz_get_ui(t.coef.get_num_mpz_t());
        h = h * 1000003u ^ mpz_get_ui(t.coef.get_den_mpz_t());
    }
    return h;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = sgn(t.coef) < 0;
        mpq_class mag = abs(t.coef);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        bool printed = false;
        if (t.mono.is_one() || mag != 1) {
            os << mag.get_str();
            printed = true;
        }
        for (auto e : t.mono) {
            if (printed)
                os << '*';
            os << symbols::name(Monomial::var_of(e));
            if (Monomial::exp_of(e) > 1)
                os << '^' << Monomial::exp_of(e);
            printed = true;
        }
    }
    return os.str();
}

} // namespace smae::expr
