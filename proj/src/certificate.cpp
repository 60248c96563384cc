#include "lcf/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace lcf {

std::string to_string(CertificateKind kind)
{
    switch (kind) {
    case CertificateKind::NoncyclicDeg4: return "NoncyclicDeg4";
    case CertificateKind::ReductionStep: return "ReductionStep";
    case CertificateKind::TameConstruction: return "TameConstruction";
    case CertificateKind::TwoAdicConstruction: return "TwoAdicConstruction";
    case CertificateKind::EtaSplitting: return "EtaSplitting";
    case CertificateKind::LengthTable: return "LengthTable";
    case CertificateKind::MuSplit: return "MuSplit";
    }
    return "Unknown";
}

Certificate::Certificate(CertificateKind kind, std::string success_label)
    : kind_(kind), success_label_(std::move(success_label))
{
}

void Certificate::add_input(std::string key, std::string value)
{
    inputs_.emplace_back(std::move(key), std::move(value));
}

bool Certificate::check(std::string description, std::string claimed, std::string checked)
{
    const bool pass = claimed == checked;
    steps_.push_back({std::move(description), std::move(claimed), std::move(checked), pass});
    return pass;
}

bool Certificate::check(std::string description, bool claimed, bool checked)
{
    return check(std::move(description), std::string(claimed ? "true" : "false"),
                 std::string(checked ? "true" : "false"));
}

bool Certificate::record(std::string description, std::string claimed, std::string checked, bool pass)
{
    steps_.push_back({std::move(description), std::move(claimed), std::move(checked), pass});
    return pass;
}

void Certificate::mark_not_applicable(std::string reason)
{
    applicable_ = false;
    conclusion_ = std::move(reason);
}

bool Certificate::passed() const
{
    return !steps_.empty() && std::all_of(steps_.begin(), steps_.end(), [](const auto& s) { return s.pass; });
}

std::string Certificate::verdict() const
{
    if (!passed())
        return "FAIL";
    return applicable_ ? success_label_ : "NOT-APPLICABLE";
}

std::string Certificate::conclusion() const
{
    if (passed())
        return conclusion_;
    auto failing = std::find_if(steps_.begin(), steps_.end(), [](const auto& s) { return !s.pass; });
    if (failing == steps_.end())
        return "no steps recorded";
    return "failed at: " + failing->description + " (claimed " + failing->claimed + ", checked " +
           failing->checked + ")";
}

const CertificateStep* Certificate::find_step(std::string_view description_prefix) const
{
    for (const auto& s : steps_)
        if (std::string_view(s.description).substr(0, description_prefix.size()) == description_prefix)
            return &s;
    return nullptr;
}

std::string Certificate::to_json(int indent) const
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind_);
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs_)
        in[k] = v;
    j["inputs"] = in;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : steps_)
        j["steps"].push_back({{"desc", s.description}, {"claimed", s.claimed}, {"checked", s.checked}, {"pass", s.pass}});
    j["verdict"] = verdict();
    j["conclusion"] = conclusion();
    return j.dump(indent);
}

std::string Certificate::to_text() const
{
    std::ostringstream out;
    out << "kind: " << to_string(kind_) << "\n";
    for (const auto& [k, v] : inputs_)
        out << "input " << k << " = " << v << "\n";
    for (const auto& s : steps_)
        out << (s.pass ? "[pass] " : "[FAIL] ") << s.description << ": claimed " << s.claimed << ", checked "
            << s.checked << "\n";
    out << "verdict: " << verdict() << "\n";
    out << "conclusion: " << conclusion() << "\n";
    return out.str();
}

}  // namespace lcf
