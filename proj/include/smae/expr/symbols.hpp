#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace smae::expr {

class Poly;

/// Index of a variable in the process-wide symbol table.
using Var = std::uint8_t;

inline constexpr Var kVarX = 0;
inline constexpr Var kVarP = 1;
inline constexpr Var kVarY = 2;
inline constexpr Var kVarQ = 3;
inline constexpr int kBaseVarCount = 4;
inline constexpr int kMaxVars = 256;

inline constexpr bool is_base_var(Var v) { return v < kBaseVarCount; }

// The symbol table is append-only: once a name has an index it keeps it for
// the lifetime of the process. Base variables x, p, y, q always occupy 0..3 in
// the chart order used everywhere else. Every symbol other than the base
// variables carries a total-derivative rule D_a(symbol) for each base
// variable a; the default rule is zero (an inert parameter).
namespace symbols {

Var intern(std::string_view name);
std::optional<Var> find(std::string_view name);
std::string name(Var v);
int count();

enum class RuleKind { Zero, Defined, Undefined };

struct Rule {
    RuleKind kind = RuleKind::Zero;
    std::shared_ptr<const Poly> value;
};

/// Sets D_base(sym) = value. `sym` must not be a base variable.
void set_rule(Var sym, int base, const Poly& value);
/// Marks D_base(sym) as unavailable (e.g. second-order jet symbols in J^2).
void set_rule_undefined(Var sym, int base);
Rule rule(Var sym, int base);

/// Declares `sym` nilpotent of order two: polynomial products drop every term
/// with sym^2. At most one such symbol exists per process.
void set_nilpotent(Var sym);
std::optional<Var> nilpotent();

} // namespace symbols

} // namespace smae::expr
