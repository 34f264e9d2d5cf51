#pragma once

#include "smae/expr/symbols.hpp"

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>

namespace smae::expr {

/// Power product of variables, stored sparsely as (variable, exponent) pairs
/// sorted by variable index. Exponents are limited to 255.
class Monomial {
public:
    using Entry = std::uint16_t;

    Monomial() = default;

    static Monomial of(Var v, unsigned exponent = 1);

    static constexpr Var var_of(Entry e) { return static_cast<Var>(e >> 8); }
    static constexpr unsigned exp_of(Entry e) { return e & 0xffu; }
    static constexpr Entry make_entry(Var v, unsigned e) { return static_cast<Entry>((unsigned(v) << 8) | e); }

    bool is_one() const { return entries_.empty(); }
    unsigned degree() const { return degree_; }
    unsigned exponent(Var v) const;
    std::size_t size() const { return entries_.size(); }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Quotient other/this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;

    /// Drops variable v, returning its exponent through `removed`.
    Monomial without(Var v, unsigned* removed = nullptr) const;
    /// Multiplies in v^e.
    Monomial times_var(Var v, unsigned e) const;

    bool operator==(const Monomial& other) const
    {
        return degree_ == other.degree_ && entries_ == other.entries_;
    }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

    std::size_t hash() const;

    void push_back_unchecked(Var v, unsigned e)
    {
        entries_.push_back(make_entry(v, e));
        degree_ = static_cast<std::uint16_t>(degree_ + e);
    }

private:
    boost::container::small_vector<Entry, 6> entries_;
    std::uint16_t degree_ = 0;
};

/// Graded lexicographic comparison, x > p > y > q > (other symbols by index).
/// Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

} // namespace smae::expr
