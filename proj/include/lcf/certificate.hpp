#ifndef LCF_CERTIFICATE_HPP
#define LCF_CERTIFICATE_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcf {

enum class CertificateKind {
    NoncyclicDeg4,
    ReductionStep,
    TameConstruction,
    TwoAdicConstruction,
    EtaSplitting,
    LengthTable,
    MuSplit,
};

std::string to_string(CertificateKind kind);

struct CertificateStep {
    std::string description;
    std::string claimed;
    std::string checked;
    bool pass;
};

/*
 * Append-only record of a verification.  Each step pairs the value a
 * construction claims with the value recomputed here; the verdict passes
 * only if every step does.
 */
class Certificate {
public:
    /// success_label is the verdict reported when every step passes.
    Certificate(CertificateKind kind, std::string success_label);

    void add_input(std::string key, std::string value);

    /// Records a step that passes iff claimed == checked.
    bool check(std::string description, std::string claimed, std::string checked);
    bool check(std::string description, bool claimed, bool checked);
    // keeps two literals off the bool overload
    bool check(std::string description, const char* claimed, const char* checked)
    {
        return check(std::move(description), std::string(claimed), std::string(checked));
    }

    /// Records a step with an explicit outcome.
    bool record(std::string description, std::string claimed, std::string checked, bool pass);

    void set_conclusion(std::string conclusion) { conclusion_ = std::move(conclusion); }
    void mark_not_applicable(std::string reason);

    CertificateKind kind() const { return kind_; }
    const std::vector<std::pair<std::string, std::string>>& inputs() const { return inputs_; }
    const std::vector<CertificateStep>& steps() const { return steps_; }

    bool applicable() const { return applicable_; }
    bool passed() const;

    /// success label, "FAIL", or "NOT-APPLICABLE".
    std::string verdict() const;
    std::string conclusion() const;

    const CertificateStep* find_step(std::string_view description_prefix) const;

    /// {kind, inputs, steps: [{desc, claimed, checked, pass}], verdict, conclusion}
    std::string to_json(int indent = 2) const;
    std::string to_text() const;

private:
    CertificateKind kind_;
    std::string success_label_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<CertificateStep> steps_;
    std::string conclusion_;
    bool applicable_ = true;
};

}  // namespace lcf

#endif  // LCF_CERTIFICATE_HPP
