#include "smae/error.hpp"
#include "smae/expr/context.hpp"
#include "smae/expr/parser.hpp"
#include "smae/report.hpp"
#include "smae/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

using namespace smae;

namespace {

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kDegenerate = 3, kUnsupported = 4 };

struct InvariantsArgs {
    std::string dist, mae, op;
    std::string format = "text";
    std::string scale = "1";
    std::string candidate_phi;
    std::uint64_t seed = 1;
    int degree_bound = 3;
};

mpq_class parse_scale(const std::string& s)
{
    mpq_class c;
    if (c.set_str(s, 10) != 0)
        throw ParseError(0, "scale must be a rational number, got '" + s + "'");
    c.canonicalize();
    if (sgn(c) == 0)
        throw DomainError("scale must be nonzero");
    return c;
}

void emit(const ReportDocument& doc, const std::string& format)
{
    if (format == "json")
        std::cout << to_json(doc).dump(2) << "\n";
    else
        std::cout << to_text(doc);
}

int run_invariants(const InvariantsArgs& a)
{
    const auto t0 = std::chrono::steady_clock::now();
    const mpq_class scale = parse_scale(a.scale);
    const SymplecticPtr om = standard_symplectic(scale);
    const auto base_ctx = expr::VariableContext::base().with_symbol(expr::exp_minus_x_symbol());
    ReportDocument doc;
    auto finish = [&] {
        doc.extra["seed"] = std::to_string(a.seed);
        doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        emit(doc, a.format);
        return kOk;
    };

    if (!a.op.empty()) {
        const VectorValuedForm op = parse_operator(a.op, base_ctx);
        doc = make_operator_document({"operator-a", a.op, scale.get_str()}, op, *om);
        return finish();
    }

    std::optional<Distribution2> d;
    expr::VariableContext ctx = base_ctx;
    ReportDocument::Input input;
    std::map<std::string, std::string> extra;
    if (!a.dist.empty()) {
        auto [x, y] = parse_distribution_fields(a.dist, ctx);
        d.emplace(x, y, om);
        input = {"dist", a.dist, scale.get_str()};
    } else {
        const MAECoefficients m = parse_mae(a.mae, ctx);
        const MAEType type = classify(m);
        extra["mae_type"] = to_string(type);
        extra["discriminant"] = discriminant(m).to_string();
        MAEDistributions md = mae_to_distributions(m, om);
        if (md.radicand)
            ctx = ctx.with_radicand(md.radicand);
        d.emplace(md.D);
        input = {"mae", a.mae, scale.get_str()};
    }
    ReportOptions opts;
    opts.degree_bound = a.degree_bound;
    if (!a.candidate_phi.empty())
        opts.candidate_phi = expr::parse(a.candidate_phi, ctx);
    const AttachedObjects o = attach(*d);
    const InvariantReport r = build_invariant_report(*d, o, opts);
    doc = make_document(input, *d, o, r);
    doc.extra.insert(extra.begin(), extra.end());
    return finish();
}

int run_verify(const std::string& scope, std::uint64_t seed, int degree_bound, bool quiet)
{
    std::cerr << "verify " << scope << " (seed " << seed << ")\n";
    if (scope == "jet-rank" || scope == "orbit-codim")
        std::cerr << "jet computations may take a few minutes\n";
    const auto t0 = std::chrono::steady_clock::now();
    const verify::SuiteResult res = verify::run(scope, seed, degree_bound);
    for (const auto& c : res.checks) {
        if (quiet && c.ok)
            continue;
        std::cout << (c.ok ? "ok    " : "FAIL  ") << c.name;
        if (!c.detail.empty())
            std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << scope << ": " << res.checks.size() - res.failures() << "/" << res.checks.size() << " passed ("
              << static_cast<long>(ms) << " ms)\n";
    return res.passed() ? kOk : kFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Differential invariants of symplectic Monge-Ampere equations and 2-distributions"};
    app.require_subcommand(1);

    InvariantsArgs ia;
    auto* inv = app.add_subcommand("invariants", "Compute attached objects, invariants, classes and verdicts");
    auto* o_dist = inv->add_option("--dist", ia.dist, "Distribution \"Xx,Xp,Xy,Xq ; Yx,Yp,Yy,Yq\"");
    auto* o_mae = inv->add_option("--mae", ia.mae, "MAE coefficients \"S;A;B;C;D\"");
    auto* o_op = inv->add_option("--operator-a", ia.op, "Operator A as 16 entries, row i = i-th components");
    o_dist->excludes(o_mae)->excludes(o_op);
    o_mae->excludes(o_op);
    inv->add_option("--format", ia.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    inv->add_option("--scale", ia.scale, "Omega = C (dp^dx + dq^dy)");
    inv->add_option("--candidate-phi", ia.candidate_phi, "Candidate Hamiltonian characteristic");
    inv->add_option("--degree-bound", ia.degree_bound, "Degree bound of the characteristic search")
        ->check(CLI::NonNegativeNumber);
    inv->add_option("--seed", ia.seed, "Seed (recorded in the report)");

    std::string scope;
    std::uint64_t vseed = 1;
    int vbound = 4;
    bool quiet = false;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("scope", scope, "identities | involution | table1 | jet-rank | orbit-codim")
        ->required()
        ->check(CLI::IsMember({"identities", "involution", "table1", "jet-rank", "orbit-codim"}));
    ver->add_option("--seed", vseed, "Random seed");
    ver->add_option("--degree-bound", vbound, "Monomial degree bound for orbit-codim")->check(CLI::Range(0, 12));
    ver->add_flag("--quiet", quiet, "Print failures and the summary only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*inv) {
            if (ia.dist.empty() && ia.mae.empty() && ia.op.empty()) {
                std::cerr << "error: one of --dist, --mae, --operator-a is required\n";
                return kParse;
            }
            return run_invariants(ia);
        }
        return run_verify(scope, vseed, vbound, quiet);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const UnsupportedTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
}
