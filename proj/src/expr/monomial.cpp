#include "smae/expr/monomial.hpp"

#include "smae/error.hpp"

namespace smae::expr {

Monomial Monomial::of(Var v, unsigned exponent)
{
    Monomial m;
    if (exponent > 0) {
        if (exponent > 255)
            throw Error("exponent overflow");
        m.push_back_unchecked(v, exponent);
    }
    return m;
}

unsigned Monomial::exponent(Var v) const
{
    for (Entry e : entries_) {
        if (var_of(e) == v)
            return exp_of(e);
        if (var_of(e) > v)
            break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    auto i = entries_.begin(), ie = entries_.end();
    auto j = other.entries_.begin(), je = other.entries_.end();
    while (i != ie && j != je) {
        Var vi = var_of(*i), vj = var_of(*j);
        if (vi < vj) {
            r.entries_.push_back(*i++);
        } else if (vj < vi) {
            r.entries_.push_back(*j++);
        } else {
            unsigned e = exp_of(*i) + exp_of(*j);
            if (e > 255)
                throw Error("exponent overflow");
            r.entries_.push_back(make_entry(vi, e));
            ++i;
            ++j;
        }
    }
    r.entries_.insert(r.entries_.end(), i, ie);
    r.entries_.insert(r.entries_.end(), j, je);
    r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
    return r;
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_ || entries_.size() > other.entries_.size())
        return false;
    auto j = other.entries_.begin(), je = other.entries_.end();
    for (Entry e : entries_) {
        Var v = var_of(e);
        while (j != je && var_of(*j) < v)
            ++j;
        if (j == je || var_of(*j) != v || exp_of(*j) < exp_of(e))
            return false;
        ++j;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const
{
    Monomial r;
    auto i = entries_.begin(), ie = entries_.end();
    for (Entry e : other.entries_) {
        Var v = var_of(e);
        if (i != ie && var_of(*i) == v) {
            unsigned d = exp_of(e) - exp_of(*i);
            if (d > 0)
                r.entries_.push_back(make_entry(v, d));
            ++i;
        } else {
            r.entries_.push_back(e);
        }
    }
    r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
    return r;
}

Monomial Monomial::without(Var v, unsigned* removed) const
{
    Monomial r;
    unsigned ex = 0;
    for (Entry e : entries_) {
        if (var_of(e) == v)
            ex = exp_of(e);
        else
            r.entries_.push_back(e);
    }
    r.degree_ = static_cast<std::uint16_t>(degree_ - ex);
    if (removed)
        *removed = ex;
    return r;
}

Monomial Monomial::times_var(Var v, unsigned e)
    const
{
    if (e == 0)
        return *this;
    return *this * Monomial::of(v, e);
}

std::size_t Monomial::hash() const
{
    std::size_t h = 1469598103934665603ull;
    for (Entry e : entries_) {
        h ^= e;
        h *= 1099511628211ull;
    }
    return h;
}

int compare(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    auto i = a.begin(), ie = a.end();
    auto j = b.begin(), je = b.end();
    while (i != ie && j != je) {
        if (*i == *j) {
            ++i;
            ++j;
            continue;
        }
        Var vi = Monomial::var_of(*i), vj = Monomial::var_of(*j);
        if (vi != vj)
            return vi < vj ? 1 : -1;
        return Monomial::exp_of(*i) < Monomial::exp_of(*j) ? -1 : 1;
    }
    if (i != ie)
        return 1;
    if (j != je)
        return -1;
    return 0;
}

} // namespace smae::expr
