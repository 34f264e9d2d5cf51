#include "smae/expr/symbols.hpp"

#include "smae/error.hpp"
#include "smae/expr/poly.hpp"

#include <array>
#include <atomic>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace smae::expr::symbols {

namespace {

struct Table {
    std::shared_mutex mutex;
    std::deque<std::string> names;
    std::unordered_map<std::string, Var> index;
    std::deque<std::array<Rule, kBaseVarCount>> rules;

    Table()
    {
        for (const char* n : {"x", "p", "y", "q"}) {
            index.emplace(n, static_cast<Var>(names.size()));
            names.emplace_back(n);
            rules.emplace_back();
        }
    }
};

Table& table()
{
    static Table t;
    return t;
}

} // namespace

Var intern(std::string_view name)
{
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.index.find(std::string(name)); it != t.index.end())
            return it->second;
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.index.find(std::string(name)); it != t.index.end())
        return it->second;
    if (t.names.size() >= static_cast<std::size_t>(kMaxVars))
        throw Error("symbol table full");
    auto v = static_cast<Var>(t.names.size());
    t.names.emplace_back(name);
    t.rules.emplace_back();
    t.index.emplace(std::string(name), v);
    return v;
}

std::optional<Var> find(std::string_view name)
{
    auto& t = table();
    std::shared_lock lock(t.mutex);
    if (auto it = t.index.find(std::string(name)); it != t.index.end())
        return it->second;
    return std::nullopt;
}

std::string name(Var v)
{
    auto& t = table();
    std::shared_lock lock(t.mutex);
    if (v >= t.names.size())
        throw Error("unknown variable index " + std::to_string(v));
    return t.names[v];
}

int count()
{
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return static_cast<int>(t.names.size());
}

void set_rule(Var sym, int base, const Poly& value)
{
    if (is_base_var(sym) || base < 0 || base >= kBaseVarCount)
        throw Error("invalid derivation rule target");
    auto& t = table();
    std::unique_lock lock(t.mutex);
    t.rules.at(sym)[base] = Rule{RuleKind::Defined, std::make_shared<const Poly>(value)};
}

void set_rule_undefined(Var sym, int base)
{
    if (is_base_var(sym) || base < 0 || base >= kBaseVarCount)
        throw Error("invalid derivation rule target");
    auto& t = table();
    std::unique_lock lock(t.mutex);
    t.rules.at(sym)[base] = Rule{RuleKind::Undefined, nullptr};
}

Rule rule(Var sym, int base)
{
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.rules.at(sym)[base];
}

namespace {
std::atomic<int> g_nilpotent{-1};
}

void set_nilpotent(Var sym)
{
    if (is_base_var(sym))
        throw Error("a base variable cannot be nilpotent");
    int expected = -1;
    if (!g_nilpotent.compare_exchange_strong(expected, sym) && expected != sym)
        throw Error("a different nilpotent symbol is already declared");
}

std::optional<Var> nilpotent()
{
    int v = g_nilpotent.load(std::memory_order_relaxed);
    if (v < 0)
        return std::nullopt;
    return static_cast<Var>(v);
}

} // namespace smae::expr::symbols
