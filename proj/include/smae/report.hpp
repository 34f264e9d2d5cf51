#pragma once

#include "smae/analysis.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace smae {

/// Everything known about one distribution (or its MAE).
struct InvariantReport {
    InvariantList I;
    InvariantList I_primed;
    std::array<Scalar, 7> J;
    std::optional<InvariantList> Jtilde;
    SpecialInvariants special;
    std::array<VectorField, 4> Zij;
    ClassResult classes;
    SpecialFormResult special_form;
    LinearizationResult linearizable;
    LinearizationResult log_linearizable;
};

struct ReportOptions {
    std::optional<Scalar> candidate_phi;
    int degree_bound = 3;
    bool with_jtilde = true;
};

InvariantReport build_invariant_report(const Distribution2& d, const AttachedObjects& o, const ReportOptions& opts);

/// Printed form of a report. Every Scalar is kept as text in the expression
/// grammar, so the document is plain data.
struct ReportDocument {
    struct Input {
        std::string kind; // "dist", "mae" or "operator-a"
        std::string text;
        std::string scale = "1";
        bool operator==(const Input&) const = default;
    };
    struct Verdict {
        std::string verdict;
        std::string reason;
        std::optional<std::string> phi;
        bool operator==(const Verdict&) const = default;
    };

    Input input;
    std::map<std::string, std::string> objects;
    std::map<std::string, std::vector<std::string>> invariants;
    std::map<std::string, std::optional<std::string>> special;
    std::optional<int> r, r_dual;
    std::string witness, witness_dual;
    std::optional<bool> integrable, integrable_dual;
    std::optional<bool> special_form;
    std::string special_form_certificate;
    std::map<std::string, Verdict> verdicts;
    std::map<std::string, std::string> extra;
    double elapsed_ms = 0;
    std::string version;

    bool operator==(const ReportDocument&) const = default;
};

inline constexpr const char* kToolVersion = "1.0.0";

ReportDocument make_document(const ReportDocument::Input& input, const Distribution2& d, const AttachedObjects& o,
                             const InvariantReport& r);
/// Report for an operator A given directly: kind, J~ and contact ratios.
ReportDocument make_operator_document(const ReportDocument::Input& input, const VectorValuedForm& a,
                                      const SymplecticStructure& om);

nlohmann::json to_json(const ReportDocument& doc);
ReportDocument from_json(const nlohmann::json& j);
std::string to_text(const ReportDocument& doc);

} // namespace smae
