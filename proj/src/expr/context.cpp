#include "smae/expr/context.hpp"

#include "smae/error.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace smae::expr {

namespace jets {

namespace {

constexpr std::array<char, 4> kLetters = {'x', 'p', 'y', 'q'};

struct JetTable {
    std::array<Var, 4> fiber{};
    std::array<std::array<Var, 4>, 4> first{};
    std::array<std::array<std::array<Var, 4>, 4>, 4> second{};
    std::vector<Var> all;
    std::vector<int> order = std::vector<int>(kMaxVars, -1);
};

std::string first_name(int i, int a)
{
    return "u" + std::to_string(i + 1) + "_" + kLetters[a];
}

std::string second_name(int i, int a, int b)
{
    if (a > b)
        std::swap(a, b);
    return "u" + std::to_string(i + 1) + "_" + kLetters[a] + kLetters[b];
}

const JetTable& table()
{
    static JetTable t;
    static std::once_flag once;
    std::call_once(once, [] {
        for (int i = 0; i < 4; ++i) {
            t.fiber[i] = symbols::intern("u" + std::to_string(i + 1));
            t.all.push_back(t.fiber[i]);
            t.order[t.fiber[i]] = 0;
        }
        for (int i = 0; i < 4; ++i)
            for (int a = 0; a < 4; ++a) {
                t.first[i][a] = symbols::intern(first_name(i, a));
                t.all.push_back(t.first[i][a]);
                t.order[t.first[i][a]] = 1;
            }
        for (int i = 0; i < 4; ++i)
            for (int a = 0; a < 4; ++a)
                for (int b = a; b < 4; ++b) {
                    Var v = symbols::intern(second_name(i, a, b));
                    t.second[i][a][b] = t.second[i][b][a] = v;
                    t.all.push_back(v);
                    t.order[v] = 2;
                }
        for (int i = 0; i < 4; ++i)
            for (int a = 0; a < 4; ++a) {
                symbols::set_rule(t.fiber[i], a, Poly::variable(t.first[i][a]));
                for (int b = 0; b < 4; ++b) {
                    symbols::set_rule(t.first[i][b], a, Poly::variable(t.second[i][a][b]));
                    if (b >= a)
                        for (int c = 0; c < 4; ++c)
                            symbols::set_rule_undefined(t.second[i][a][b], c);
                }
            }
    });
    return t;
}

void check_index(int i)
{
    if (i < 1 || i > 4)
        throw Error("jet fiber index out of range");
}

} // namespace

Var fiber(int i)
{
    check_index(i);
    return table().fiber[i - 1];
}

Var first(int i, int a)
{
    check_index(i);
    return table().first[i - 1].at(a);
}

Var second(int i, int a, int b)
{
    check_index(i);
    return table().second[i - 1].at(a).at(b);
}

const std::vector<Var>& all()
{
    return table().all;
}

int order(Var v)
{
    return table().order[v];
}

} // namespace jets

Var exp_minus_x_symbol()
{
    static Var v = [] {
        Var e = symbols::intern("E");
        symbols::set_rule(e, kVarX, -Poly::variable(e));
        return e;
    }();
    return v;
}

VariableContext VariableContext::base()
{
    return VariableContext();
}

VariableContext VariableContext::with_radicand(const RatFun& radicand) const
{
    return with_radicand(std::make_shared<const RatFun>(radicand));
}

VariableContext VariableContext::with_radicand(std::shared_ptr<const RatFun> radicand) const
{
    if (!radicand || radicand->is_zero())
        throw DomainError("radicand must be nonzero");
    if (radicand_ && *radicand_ != *radicand)
        throw DomainError("only one radical may be adjoined");
    VariableContext c = *this;
    c.radicand_ = std::move(radicand);
    return c;
}

VariableContext VariableContext::with_jet_symbols() const
{
    jets::all();
    VariableContext c = *this;
    c.jets_ = true;
    return c;
}

VariableContext VariableContext::with_symbols(const std::vector<std::string>& names) const
{
    VariableContext c = *this;
    for (const auto& n : names) {
        if (n == "sqrt" || (n.size() == 2 && n[0] == 'd'))
            throw Error("reserved symbol name: " + n);
        Var v = symbols::intern(n);
        if (is_base_var(v))
            throw Error("symbol name clashes with a base variable: " + n);
        c = c.with_symbol(v);
    }
    return c;
}

VariableContext VariableContext::with_symbol(Var v) const
{
    VariableContext c = *this;
    if (!is_base_var(v) && std::find(c.extra_.begin(), c.extra_.end(), v) == c.extra_.end())
        c.extra_.push_back(v);
    return c;
}

std::optional<Var> VariableContext::lookup(std::string_view name) const
{
    auto v = symbols::find(name);
    if (!v)
        return std::nullopt;
    if (is_base_var(*v))
        return v;
    if (jets_ && jets::order(*v) >= 0)
        return v;
    if (std::find(extra_.begin(), extra_.end(), *v) != extra_.end())
        return v;
    return std::nullopt;
}

Scalar VariableContext::sqrt() const
{
    if (!radicand_)
        throw DomainError("no radicand registered");
    return Scalar::sqrt_of(radicand_);
}

} // namespace smae::expr
