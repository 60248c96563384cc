#include "lcf/cli.hpp"

#include "lcf/polynomial.hpp"
#include "lcf/symbols.hpp"
#include "lcf/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace lcf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    int precision = kDefaultPrecision;
    std::string format = "text";
    bool as_json() const { return format == "json"; }
};

int emit(const Certificate& cert, const Options& opt, std::ostream& out)
{
    if (opt.as_json())
        out << cert.to_json() << "\n";
    else
        out << cert.to_text();
    return cert.passed() ? kExitOk : kExitFail;
}

int cmd_hilbert(long p, const std::string& a_text, const std::string& b_text, const Options& opt, std::ostream& out)
{
    require_prime(p);
    const Rational a = parse_rational(a_text);
    const Rational b = parse_rational(b_text);
    const SymbolValue s =
        hilbert(PadicNumber::from_rational(a, p, opt.precision), PadicNumber::from_rational(b, p, opt.precision));
    if (opt.as_json())
        out << json{{"p", p}, {"a", to_string(a)}, {"b", to_string(b)}, {"symbol", s.to_string()}}.dump(2) << "\n";
    else
        out << s.to_string() << "\n";
    return kExitOk;
}

int cmd_square_classes(long p, const Options& opt, std::ostream& out)
{
    const auto reps = square_class_reps(p);
    if (opt.as_json()) {
        json arr = json::array();
        for (const auto& c : reps)
            arr.push_back(c.representative);
        out << json{{"p", p}, {"classes", arr}}.dump(2) << "\n";
        return kExitOk;
    }
    std::string text = "{";
    for (std::size_t k = 0; k < reps.size(); ++k)
        text += (k ? "," : "") + std::to_string(reps[k].representative);
    out << text << "}\n";
    return kExitOk;
}

int cmd_norm(const std::string& a_text, const std::string& v_text, long p, const Options& opt, std::ostream& out)
{
    require_prime(p);
    const QuadraticField field(parse_rational(a_text), p);
    const QuadraticElement v = parse_quadratic(v_text, field);
    const Rational n = quad_norm(v);
    if (opt.as_json()) {
        json j{{"p", p}, {"a", to_string(field.radicand())}, {"v", v.to_string()}, {"norm", to_string(n)}};
        if (!v.is_zero())
            j["cyclic_quartic"] = cyclic_quartic_test(field.radicand(), v);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(n) << "\n";
    }
    return kExitOk;
}

int cmd_certify_noncyclic(int degree, const std::optional<std::string>& twist, const Options& opt, std::ostream& out)
{
    if (degree == 4) {
        if (twist)
            throw std::invalid_argument("--twist applies to --degree 8");
        return emit(noncyclic_certificate_deg4(), opt, out);
    }
    QuarticTowerChoice tower = QuarticTowerChoice::eta2();
    if (twist)
        tower = tower.twisted(parse_rational(*twist));
    return emit(noncyclic_reduction_deg8(tower), opt, out);
}

int cmd_construct_cyclic(long p, long l, long n, std::optional<long> e, long i, std::optional<long> j,
                         const Options& opt, std::ostream& out)
{
    if (p == l)
        throw std::invalid_argument("p = l is excluded: theta would extend");
    if (!e) {
        // smallest admissible e
        require_prime(p);
        require_prime(l);
        const long m = roots_of_unity_order(p);
        for (long cand = l; cand < n; cand *= l)
            if (m % cand == 0 && n % cand == 0) {
                e = cand;
                break;
            }
        if (!e)
            throw std::invalid_argument("no admissible e for p = " + std::to_string(p) + ", l = " +
                                        std::to_string(l) + ", n = " + std::to_string(n));
    }
    return emit(cyclic_construct_tame(TameConstruction::make(p, l, n, *e, i, j)), opt, out);
}

int cmd_eta(int max_j, const Options& opt, std::ostream& out)
{
    if (max_j < 1 || max_j > kMaxEtaIndex)
        throw std::invalid_argument("--max-j must be in [1, " + std::to_string(kMaxEtaIndex) + "]");
    json rows = json::array();
    for (int j = 1; j <= max_j; ++j) {
        const std::string n = to_string(eta_norm(j));
        if (opt.as_json())
            rows.push_back(json{{"j", j}, {"norm", n}});
        else
            out << j << " " << n << "\n";
    }
    if (opt.as_json())
        out << rows.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cyclicity of division algebras over Q_p((t))", "lcf"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--precision", opt.precision, "p-adic relative precision")
        ->check(CLI::Range(kMinPrecision, 4096));
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));

    long h_p = 0;
    std::string h_a, h_b;
    auto* hil = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_p");
    hil->add_option("p", h_p)->required();
    hil->add_option("a", h_a)->required();
    hil->add_option("b", h_b)->required();

    long sc_p = 0;
    auto* sq = app.add_subcommand("square-classes", "representatives of Q_p^x / squares");
    sq->add_option("p", sc_p)->required();

    std::string n_a, n_v;
    long n_p = 2;
    auto* nrm = app.add_subcommand("norm", "N(v) for v = x + y sqrt a");
    nrm->add_option("--a", n_a)->required();
    nrm->add_option("--v", n_v, "x+yr with r = sqrt a")->required();
    nrm->add_option("--p", n_p, "ambient prime")->capture_default_str();

    int c_degree = 4;
    std::optional<std::string> c_twist;
    auto* cert = app.add_subcommand("certify-noncyclic", "noncyclicity certificates over Q_2((t))");
    cert->add_option("--degree", c_degree)->required()->check(CLI::IsMember({4, 8}));
    cert->add_option("--twist", c_twist, "replace v by w v (degree 8)");

    long t_p = 0, t_l = 0, t_n = 0, t_i = 1;
    std::optional<long> t_e, t_j;
    auto* tame = app.add_subcommand("construct-cyclic", "tame cyclic maximal subfield");
    tame->add_option("--p", t_p)->required();
    tame->add_option("--l", t_l)->required();
    tame->add_option("--n", t_n)->required();
    tame->add_option("--e", t_e);
    tame->add_option("--i", t_i)->capture_default_str();
    tame->add_option("--j", t_j);

    long a_p = 0, a_r = 0;
    auto* two = app.add_subcommand("construct-cyclic-2adic", "cyclic maximal subfield, p = 3 mod 4");
    two->add_option("--p", a_p)->required();
    two->add_option("--r", a_r)->required();

    int e_max = 0;
    auto* eta = app.add_subcommand("eta", "norms of eta_j");
    eta->add_option("--max-j", e_max)->required();

    long l_p = 0, l_n = 0;
    auto* len = app.add_subcommand("length-table", "n-cyclic length of Q_p((t))");
    len->add_option("--p", l_p)->required();
    len->add_option("--n", l_n)->required();

    long m_p = 0, m_n = 0;
    auto* mu = app.add_subcommand("mu-check", "mu_n in Q_p implies cyclic");
    mu->add_option("--p", m_p)->required();
    mu->add_option("--n", m_n)->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "lcf: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*hil)
            return cmd_hilbert(h_p, h_a, h_b, opt, out);
        if (*sq)
            return cmd_square_classes(sc_p, opt, out);
        if (*nrm)
            return cmd_norm(n_a, n_v, n_p, opt, out);
        if (*cert)
            return cmd_certify_noncyclic(c_degree, c_twist, opt, out);
        if (*tame)
            return cmd_construct_cyclic(t_p, t_l, t_n, t_e, t_i, t_j, opt, out);
        if (*two)
            return emit(cyclic_construct_2adic(TwoAdicConstruction::make(a_p, a_r)), opt, out);
        if (*eta)
            return cmd_eta(e_max, opt, out);
        if (*len)
            return emit(cyclic_length_certificate(l_p, l_n), opt, out);
        if (*mu)
            return emit(mu_split_check(m_p, m_n), opt, out);
    } catch (const std::exception& e) {
        err << "lcf: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "lcf: no subcommand\n";
    return kExitUsage;
}

}  // namespace lcf::cli
