#pragma once

#include "smae/expr/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace smae::expr {

// Jet symbols of the Grassmannian chart: fiber coordinates u1..u4, first jets
// u<i>_<a> and second jets u<i>_<ab> (a <= b in the order x, p, y, q), e.g.
// "u2", "u2_p", "u2_xq". Their total-derivative rules are installed on first
// use: D_a u_i = u_i_a, D_a u_i_b = u_i_ab, D_a of a second jet is undefined.
namespace jets {

inline constexpr int kFiberCount = 4;
inline constexpr int kFirstJetCount = 16;
inline constexpr int kSecondJetCount = 40;
inline constexpr int kJetSymbolCount = kFiberCount + kFirstJetCount + kSecondJetCount;

Var fiber(int i);                   // i in 1..4
Var first(int i, int a);            // a base index 0..3
Var second(int i, int a, int b);    // symmetric in a, b
/// All 60 jet symbols: fibers, then first jets (i major), then second jets.
const std::vector<Var>& all();
int order(Var v);                   // 0, 1, 2 for jet symbols, -1 otherwise

} // namespace jets

/// Inert symbol E standing for exp(-x): D_x E = -E, other derivatives zero.
Var exp_minus_x_symbol();

/// Which identifiers the parser accepts and which radicand is adjoined.
class VariableContext {
public:
    static VariableContext base();

    VariableContext with_radicand(const RatFun& radicand) const;
    VariableContext with_radicand(std::shared_ptr<const RatFun> radicand) const;
    VariableContext with_jet_symbols() const;
    VariableContext with_symbols(const std::vector<std::string>& names) const;
    VariableContext with_symbol(Var v) const;

    std::optional<Var> lookup(std::string_view name) const;
    const std::shared_ptr<const RatFun>& radicand() const { return radicand_; }
    bool has_jets() const { return jets_; }
    const std::vector<Var>& extra_symbols() const { return extra_; }

    /// The adjoined radical s with s^2 = radicand.
    Scalar sqrt() const;

private:
    std::shared_ptr<const RatFun> radicand_;
    std::vector<Var> extra_;
    bool jets_ = false;
};

} // namespace smae::expr
