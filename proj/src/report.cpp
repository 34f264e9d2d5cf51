#include "smae/report.hpp"

#include "smae/error.hpp"

#include <sstream>

namespace smae {

InvariantReport build_invariant_report(const Distribution2& d, const AttachedObjects& o, const ReportOptions& opts)
{
    InvariantReport r;
    r.I = scalar_invariants(d, o);
    r.I_primed = primed_invariants(d, o);
    r.J = J_invariants(r.I, r.I_primed);
    if (opts.with_jtilde)
        r.Jtilde = tildeJ_invariants(operator_A(d), d.symplectic());
    r.special = special_invariants(o);
    r.Zij = Zij_fields(d.symplectic(), o);
    r.classes = form_classes(o);
    r.special_form = detect_special_form(d, o);
    r.linearizable = linearizable(d, o, opts.candidate_phi, opts.degree_bound);
    r.log_linearizable = log_linearizable(d, o);
    return r;
}

namespace {

template <std::size_t N>
std::vector<std::string> printed(const std::array<Scalar, N>& v)
{
    std::vector<std::string> out;
    for (const auto& s : v)
        out.push_back(s.to_string());
    return out;
}

// Row i lists the i-th components of A(Dx), A(Dp), A(Dy), A(Dq).
std::string operator_string(const VectorValuedForm& a)
{
    std::array<VectorField, 4> img;
    for (int j = 0; j < 4; ++j)
        img[j] = a.apply(VectorField::coordinate(j));
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (i > 0)
            s += " ; ";
        for (int j = 0; j < 4; ++j) {
            if (j > 0)
                s += ", ";
            s += img[j][i].to_string();
        }
    }
    return s;
}

ReportDocument::Verdict printed(const LinearizationResult& l)
{
    ReportDocument::Verdict v{to_string(l.verdict), l.reason, std::nullopt};
    if (l.phi)
        v.phi = l.phi->to_string();
    return v;
}

} // namespace

ReportDocument make_document(const ReportDocument::Input& input, const Distribution2& d, const AttachedObjects& o,
                             const InvariantReport& r)
{
    ReportDocument doc;
    doc.input = input;
    doc.version = kToolVersion;
    doc.objects = {
        {"D", d.to_string()},
        {"D'", o.dual.to_string()},
        {"P", operator_string(o.P)},
        {"Z", o.Z.to_string()},
        {"Z'", o.Z_dual.to_string()},
        {"omega", o.omega.to_string()},
        {"omega'", o.omega_dual.to_string()},
        {"rho", o.rho.to_string()},
        {"rho'", o.rho_dual.to_string()},
        {"sigma", o.sigma.to_string()},
    };
    doc.invariants["I"] = printed(r.I);
    doc.invariants["I'"] = printed(r.I_primed);
    doc.invariants["J"] = printed(r.J);
    if (r.Jtilde)
        doc.invariants["Jtilde"] = printed(*r.Jtilde);
    std::vector<std::string> z;
    for (const auto& f : r.Zij)
        z.push_back(f.to_string());
    doc.invariants["Zij"] = z;
    auto opt = [](const std::optional<Scalar>& s) -> std::optional<std::string> {
        if (s)
            return s->to_string();
        return std::nullopt;
    };
    doc.special = {{"I12", opt(r.special.I12)}, {"I21", opt(r.special.I21)}};
    doc.r = r.classes.r;
    doc.r_dual = r.classes.r_dual;
    doc.witness = r.classes.witness;
    doc.witness_dual = r.classes.witness_dual;
    doc.integrable = r.special_form.integrable;
    doc.integrable_dual = r.special_form.integrable_dual;
    doc.special_form = r.special_form.special;
    doc.special_form_certificate = r.special_form.certificate();
    doc.verdicts = {{"linearizable", printed(r.linearizable)}, {"log_linearizable", printed(r.log_linearizable)}};
    return doc;
}

ReportDocument make_operator_document(const ReportDocument::Input& input, const VectorValuedForm& a,
                                      const SymplecticStructure& om)
{
    ReportDocument doc;
    doc.input = input;
    doc.version = kToolVersion;
    const OperatorKind kind = validate_operator(a, om);
    doc.objects["A"] = operator_string(a);
    doc.extra["operator_kind"] = kind == OperatorKind::Hyperbolic ? "hyperbolic" : "elliptic";
    const auto f = operator_forms(a, om);
    doc.objects["theta"] = f.theta.to_string();
    doc.objects["sigma"] = f.sigma.to_string();
    doc.objects["varrho"] = f.varrho.to_string();
    const InvariantList jt = tildeJ_invariants(a, om);
    doc.invariants["Jtilde"] = printed(jt);
    if (auto c = contact_ratios(jt))
        doc.invariants["contact_ratios"] = printed(*c);
    return doc;
}

nlohmann::json to_json(const ReportDocument& doc)
{
    using nlohmann::json;
    json j;
    j["input"] = {{"kind", doc.input.kind}, {"text", doc.input.text}, {"scale", doc.input.scale}};
    j["objects"] = doc.objects;
    json inv = doc.invariants;
    json sp = json::object();
    for (const auto& [k, v] : doc.special)
        sp[k] = v ? json(*v) : json(nullptr);
    inv["special"] = sp;
    j["invariants"] = inv;
    auto ob = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    j["classes"] = {
        {"r", ob(doc.r)},
        {"r_dual", ob(doc.r_dual)},
        {"witness", doc.witness},
        {"witness_dual", doc.witness_dual},
        {"integrable", ob(doc.integrable)},
        {"integrable_dual", ob(doc.integrable_dual)},
    };
    json ver = json::object();
    for (const auto& [k, v] : doc.verdicts)
        ver[k] = {{"verdict", v.verdict}, {"reason", v.reason}, {"phi", ob(v.phi)}};
    ver["special_form"] = {{"special", ob(doc.special_form)}, {"certificate", doc.special_form_certificate}};
    j["verdicts"] = ver;
    j["meta"] = {{"version", doc.version}, {"elapsed_ms", doc.elapsed_ms}, {"extra", doc.extra}};
    return j;
}

ReportDocument from_json(const nlohmann::json& j)
{
    ReportDocument doc;
    try {
        const auto& in = j.at("input");
        doc.input = {in.at("kind"), in.at("text"), in.at("scale")};
        doc.objects = j.at("objects").get<std::map<std::string, std::string>>();
        for (const auto& [k, v] : j.at("invariants").items()) {
            if (k == "special") {
                for (const auto& [sk, sv] : v.items())
                    doc.special[sk] = sv.is_null() ? std::nullopt : std::optional<std::string>(sv.get<std::string>());
            } else {
                doc.invariants[k] = v.get<std::vector<std::string>>();
            }
        }
        const auto& c = j.at("classes");
        auto oi = [](const nlohmann::json& v) { return v.is_null() ? std::nullopt : std::optional<int>(v.get<int>()); };
        auto obl = [](const nlohmann::json& v) {
            return v.is_null() ? std::nullopt : std::optional<bool>(v.get<bool>());
        };
        doc.r = oi(c.at("r"));
        doc.r_dual = oi(c.at("r_dual"));
        doc.witness = c.at("witness");
        doc.witness_dual = c.at("witness_dual");
        doc.integrable = obl(c.at("integrable"));
        doc.integrable_dual = obl(c.at("integrable_dual"));
        for (const auto& [k, v] : j.at("verdicts").items()) {
            if (k == "special_form") {
                doc.special_form = obl(v.at("special"));
                doc.special_form_certificate = v.at("certificate");
                continue;
            }
            ReportDocument::Verdict vd{v.at("verdict"), v.at("reason"), std::nullopt};
            if (!v.at("phi").is_null())
                vd.phi = v.at("phi").get<std::string>();
            doc.verdicts[k] = vd;
        }
        const auto& m = j.at("meta");
        doc.version = m.at("version");
        doc.elapsed_ms = m.at("elapsed_ms");
        doc.extra = m.at("extra").get<std::map<std::string, std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report document: ") + e.what());
    }
    return doc;
}

std::string to_text(const ReportDocument& doc)
{
    std::ostringstream os;
    os << "input (" << doc.input.kind << ", scale " << doc.input.scale << "): " << doc.input.text << "\n";
    for (const auto& [k, v] : doc.extra)
        os << k << ": " << v << "\n";
    os << "\nattached objects\n";
    for (const auto& [k, v] : doc.objects)
        os << "  " << k << " = " << v << "\n";
    os << "\ninvariants\n";
    for (const auto& [k, vs] : doc.invariants) {
        const bool fields = k == "Zij";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (fields) {
                static const char* names[] = {"Z00", "Z01", "Z10", "Z11"};
                os << "  " << names[i] << " = " << vs[i] << "\n";
            } else {
                os << "  " << k << "[" << i + 1 << "] = " << vs[i] << "\n";
            }
        }
    }
    for (const auto& [k, v] : doc.special)
        os << "  " << k << " = " << (v ? *v : "undefined") << "\n";
    if (doc.r) {
        os << "\nclasses\n";
        os << "  r = " << *doc.r << " (" << doc.witness << ")\n";
        os << "  r' = " << *doc.r_dual << " (" << doc.witness_dual << ")\n";
        os << "  D_(1) integrable: " << (*doc.integrable ? "yes" : "no") << "\n";
        os << "  D'_(1) integrable: " << (*doc.integrable_dual ? "yes" : "no") << "\n";
    }
    if (doc.special_form || !doc.verdicts.empty())
        os << "\nverdicts\n";
    if (doc.special_form)
        os << "  special form: " << (*doc.special_form ? "yes" : "no") << " (" << doc.special_form_certificate
           << ")\n";
    for (const auto& [k, v] : doc.verdicts) {
        os << "  " << k << ": " << v.verdict << " (" << v.reason << ")";
        if (v.phi)
            os << " phi = " << *v.phi;
        os << "\n";
    }
    os << "\nversion " << doc.version << ", " << doc.elapsed_ms << " ms\n";
    return os.str();
}

} // namespace smae
