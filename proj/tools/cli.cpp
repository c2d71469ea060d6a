#include "cli.hpp"

#include "thetadirac/dirac.hpp"
#include "thetadirac/error.hpp"
#include "thetadirac/theta.hpp"
#include "thetadirac/unipotent.hpp"
#include "thetadirac/weyl.hpp"
#include "thetadirac/zhel.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace thetadirac::cli {

namespace {

using nlohmann::json;

/// Missing or conflicting flags.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    std::string group;
    std::string weight;
    std::string mu;
    std::string nu;
    std::string lambda1;
    std::string lambda2;
    std::string eps;
    std::string tau;
    std::string param;
    std::string other;
    std::string pair;
    std::string of;
    std::string file;
    bool json = false;
    bool dual = false;
};

// ---- input ----

std::optional<int> parse_eps(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "+1" || text == "1") return 1;
    if (text == "-1") return -1;
    throw ParseError("eps must be +1 or -1, got '" + text + "'");
}

ZhelParam read_param(const Options& o, std::optional<GroupKind> implied) {
    const bool has_pieces = !o.mu.empty() || !o.nu.empty() || !o.lambda1.empty() || !o.lambda2.empty();
    if (!o.param.empty()) {
        if (has_pieces) throw UsageError("--param cannot be combined with --mu/--nu/--lambda1/--lambda2");
        ZhelParam p = parse_param(o.param);
        if (implied && p.kind() != *implied) {
            throw DomainError("parameter lives on " + p.kind().name() + " but the command needs " + implied->name());
        }
        return p;
    }
    if (o.group.empty() && !implied) throw UsageError("--group is required");
    const GroupKind kind = o.group.empty() ? *implied : GroupKind::parse(o.group);
    if (implied && kind != *implied) {
        throw DomainError("--group " + kind.name() + " does not match the pair's source " + implied->name());
    }
    if (!o.tau.empty()) {
        if (o.tau != "0" && o.tau != "1") throw ParseError("tau must be 0 or 1, got '" + o.tau + "'");
        if (kind.tau() != std::stoi(o.tau)) throw ParseError("--tau " + o.tau + " does not match " + kind.name());
    }
    std::optional<int> eps = parse_eps(o.eps);
    if (!eps && kind.is_orthogonal()) eps = 1;
    const bool mu_nu = !o.mu.empty() || !o.nu.empty();
    const bool lambdas = !o.lambda1.empty() || !o.lambda2.empty();
    if (mu_nu && lambdas) throw UsageError("give either --mu/--nu or --lambda1/--lambda2, not both");
    if (mu_nu) {
        if (o.mu.empty() || o.nu.empty()) throw UsageError("--mu and --nu must be given together");
        return ZhelParam::from_mu_nu(kind, Weight::parse(o.mu), Weight::parse(o.nu), eps);
    }
    if (lambdas) {
        if (o.lambda1.empty() || o.lambda2.empty()) throw UsageError("--lambda1 and --lambda2 must be given together");
        return ZhelParam::from_lambda(kind, Weight::parse(o.lambda1), Weight::parse(o.lambda2), eps);
    }
    throw UsageError("a parameter is required: --param, --mu/--nu or --lambda1/--lambda2");
}

const std::string& require(const std::string& value, const char* flag) {
    if (value.empty()) throw UsageError(std::string(flag) + " is required");
    return value;
}

// ---- output ----

json to_json(const Weight& w) {
    json a = json::array();
    for (const Rat& r : w) a.push_back(r.to_string());
    return a;
}

std::string eps_text(int e) { return e > 0 ? "+1" : "-1"; }

json to_json(const UnipotentDescriptor& d) {
    json j{{"family", std::string(1, family_letter(d.family))}, {"rank", d.rank}};
    if (d.family != Family::C) {
        j["a"] = d.a;
        j["b"] = d.b;
    }
    if (d.parity) j["parity"] = *d.parity == Parity::Even ? "even" : "odd";
    return j;
}

json to_json(const std::optional<DiracCohomology>& h) {
    if (!h) return nullptr;
    return {{"multiplicity", h->multiplicity}, {"highest_weight", to_json(h->highest_weight)}};
}

std::string plain(const std::optional<DiracCohomology>& h) {
    if (!h) return "none";
    return "multiplicity=" + std::to_string(h->multiplicity) + " weight=" + h->highest_weight.to_string();
}

json to_json(const ZhelParam& p) {
    json j{{"kind", p.kind().name()}, {"mu", to_json(p.mu())}, {"nu", to_json(p.nu())}};
    if (p.epsilon()) j["eps"] = eps_text(*p.epsilon());
    return j;
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
    if (o.json) out << j.dump() << '\n';
    else out << text << '\n';
}

// ---- verbs ----

void do_normalize(const Options& o, std::ostream& out) {
    const GroupKind kind = GroupKind::parse(require(o.group, "--group"));
    const Weight w = dominant_normalize(kind, Weight::parse(require(o.weight, "--weight")));
    emit(out, o, {{"weight", to_json(w)}}, w.to_string());
}

void do_equivalent(const Options& o, std::ostream& out) {
    const ZhelParam p = read_param(o, std::nullopt);
    const ZhelParam q = parse_param(require(o.other, "--other"));
    const bool eq = equivalent(p, q);
    emit(out, o, {{"equivalent", eq}}, std::string("equivalent=") + (eq ? "true" : "false"));
}

void do_hermitian(const Options& o, std::ostream& out) {
    const bool h = hermitian_exists(read_param(o, std::nullopt));
    emit(out, o, {{"hermitian", h}}, std::string("hermitian=") + (h ? "true" : "false"));
}

void do_classify(const Options& o, std::ostream& out) {
    const ZhelParam p = read_param(o, std::nullopt);
    const auto d = classify(p.kind(), p);
    emit(out, o, {{"descriptor", d ? to_json(*d) : json(nullptr)}}, "descriptor=" + (d ? d->to_string() : "none"));
}

void do_dirac_series(const Options& o, std::ostream& out) {
    const ZhelParam p = read_param(o, std::nullopt);
    const auto d = decompose(p.kind(), p);
    emit(out, o, {{"member", d.has_value()}, {"decomposition", d ? json(d->to_string()) : json(nullptr)}},
         d ? "member=true " + d->to_string() : "member=false");
}

void do_cohomology(const Options& o, std::ostream& out) {
    const ZhelParam p = read_param(o, std::nullopt);
    const auto h = dirac_cohomology(p.kind(), p);
    emit(out, o, to_json(h), plain(h));
}

void do_lift(const Options& o, std::ostream& out) {
    const DualPair pair = DualPair::parse(require(o.pair, "--pair"));
    const ZhelParam p = read_param(o, pair.source_kind());
    const LiftOutcome r = lift(pair, p);
    if (!r.lifted()) {
        emit(out, o, {{"status", "not_in_correspondence"}}, "status=not_in_correspondence");
        return;
    }
    json j{{"status", "lifted"}, {"mu2", to_json(r.param->mu())}, {"nu2", to_json(r.param->nu())}, {"dual", r.dual}};
    std::string text = "mu2=" + r.param->mu().to_string() + " nu2=" + r.param->nu().to_string();
    if (r.param->epsilon()) {
        j["eps2"] = eps_text(*r.param->epsilon());
        text += " eps2=" + eps_text(*r.param->epsilon());
    }
    text += std::string(" dual=") + (r.dual ? "true" : "false");
    emit(out, o, j, text);
}

void do_lift_dirac(const Options& o, std::ostream& out) {
    const DualPair pair = DualPair::parse(require(o.pair, "--pair"));
    const auto h = lift_dirac(pair, read_param(o, pair.source_kind()));
    emit(out, o, to_json(h), plain(h));
}

void do_infchar(const Options& o, std::ostream& out) {
    const DualPair pair = DualPair::parse(require(o.pair, "--pair"));
    const ZhelParam source = read_param(o, pair.source_kind());
    const ZhelParam target = parse_param(require(o.other, "--other"));
    const bool ok = infchar_check(pair, source, target, o.dual);
    emit(out, o, {{"infchar", ok}}, std::string("infchar=") + (ok ? "true" : "false"));
}

void do_enumerate(const Options& o, std::ostream& out) {
    const GroupKind kind = GroupKind::parse(require(o.group, "--group"));
    const std::string& what = require(o.of, "--of");
    json all = json::array();
    std::ostringstream text;
    if (what == "unipotent") {
        for (const auto& d : enumerate_family(kind)) {
            const ZhelParam p = unipotent_param(d);
            all.push_back({{"descriptor", to_json(d)}, {"param", to_json(p)}});
            text << d.to_string() << ' ' << p.to_string() << '\n';
        }
    } else if (what == "weyl") {
        for (const auto& g : enumerate(kind)) {
            std::vector<int> one_based;
            std::string perm;
            std::string signs;
            for (std::size_t i = 0; i < g.permutation.size(); ++i) {
                one_based.push_back(g.permutation[i] + 1);
                perm += (i ? "," : "") + std::to_string(g.permutation[i] + 1);
                signs += (i ? "," : "") + eps_text(g.signs[i]);
            }
            all.push_back({{"permutation", one_based}, {"signs", g.signs}});
            text << "perm=" << perm << " signs=" << signs << '\n';
        }
    } else {
        throw UsageError("--of must be unipotent or weyl, got '" + what + "'");
    }
    if (o.json) out << all.dump() << '\n';
    else out << text.str();
}

void add_param_flags(CLI::App* sub, Options& o) {
    sub->add_option("--group", o.group, "Group: A3, B2, C2, D4, GL3, Sp4, O5");
    sub->add_option("--mu", o.mu, "mu as comma separated rationals");
    sub->add_option("--nu", o.nu, "nu as comma separated rationals");
    sub->add_option("--lambda1", o.lambda1, "lambda1 (alternative to --mu/--nu)");
    sub->add_option("--lambda2", o.lambda2, "lambda2 (alternative to --mu/--nu)");
    sub->add_option("--eps", o.eps, "epsilon for orthogonal groups: +1 or -1 (default +1)");
    sub->add_option("--tau", o.tau, "parity of the orthogonal form's dimension, checked against --group");
    sub->add_option("--param", o.param, "whole parameter, e.g. \"kind=C2 mu=0,0 nu=3,1\"");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact parameter calculus for theta lifts and Dirac cohomology", "thetadirac"};
    app.require_subcommand(1);

    auto* normalize = app.add_subcommand("normalize", "Dominant representative of a weight's Weyl orbit");
    normalize->add_option("--group", o.group, "Group");
    normalize->add_option("--weight", o.weight, "Weight as comma separated rationals");

    auto* eq = app.add_subcommand("equivalent", "Do two parameters define the same module");
    add_param_flags(eq, o);
    eq->add_option("--other", o.other, "Second parameter in textual form");

    auto* herm = app.add_subcommand("hermitian", "Does the module admit a nondegenerate hermitian form");
    add_param_flags(herm, o);

    auto* cls = app.add_subcommand("classify-unipotent", "Match against the unipotent patterns");
    add_param_flags(cls, o);

    auto* ds = app.add_subcommand("dirac-series", "Levi decomposition witnessing Dirac series membership");
    add_param_flags(ds, o);

    auto* coh = app.add_subcommand("cohomology", "Dirac cohomology of a Dirac series member");
    add_param_flags(coh, o);

    auto* lf = app.add_subcommand("lift", "Theta lift of a parameter");
    lf->add_option("--pair", o.pair, "II:m,n or I:O<d>,Sp<2n> or I:Sp<2m>,O<d>");
    add_param_flags(lf, o);

    auto* ld = app.add_subcommand("lift-dirac", "Dirac cohomology of the theta lift of a Dirac series member");
    ld->add_option("--pair", o.pair, "II:m,n or I:O<d>,Sp<2n> or I:Sp<2m>,O<d>");
    add_param_flags(ld, o);

    auto* ic = app.add_subcommand("infchar-check", "Compare a target's infinitesimal character with the source's");
    ic->add_option("--pair", o.pair, "II:m,n or I:O<d>,Sp<2n> or I:Sp<2m>,O<d>");
    add_param_flags(ic, o);
    ic->add_option("--other", o.other, "Target parameter in textual form");
    ic->add_flag("--dual", o.dual, "The target is stated as a contragredient");

    auto* en = app.add_subcommand("enumerate", "List unipotent descriptors or Weyl group elements");
    en->add_option("--group", o.group, "Group");
    en->add_option("--of", o.of, "unipotent or weyl");

    auto* batch = app.add_subcommand("batch", "Run one command per line of a file");
    batch->add_option("file", o.file, "Command file")->required();

    for (auto* sub : {normalize, eq, herm, cls, ds, coh, lf, ld, ic, en}) {
        sub->add_flag("--json", o.json, "Emit one JSON document");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (batch->parsed()) return run_batch(o.file, out, err);
        if (normalize->parsed()) do_normalize(o, out);
        else if (eq->parsed()) do_equivalent(o, out);
        else if (herm->parsed()) do_hermitian(o, out);
        else if (cls->parsed()) do_classify(o, out);
        else if (ds->parsed()) do_dirac_series(o, out);
        else if (coh->parsed()) do_cohomology(o, out);
        else if (lf->parsed()) do_lift(o, out);
        else if (ld->parsed()) do_lift_dirac(o, out);
        else if (ic->parsed()) do_infchar(o, out);
        else if (en->parsed()) do_enumerate(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::overflow_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitOk;
}

int run_batch(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "usage error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    bool failed = false;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        const auto args = split_command_line(line);
        if (args.empty() || args.front().starts_with('#')) continue;
        if (args.front() == "batch") {
            err << "line " << number << ": usage error: batch files cannot nest\n";
            failed = true;
            continue;
        }
        std::ostringstream diag;
        if (run(args, out, diag) != kExitOk) {
            failed = true;
            err << "line " << number << ": " << diag.str();
        }
    }
    return failed ? kExitDomain : kExitOk;
}

std::vector<std::string> split_command_line(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_token = false;
    char quote = 0;
    for (char ch : line) {
        if (quote) {
            if (ch == quote) quote = 0;
            else cur += ch;
        } else if (ch == '"' || ch == '\'') {
            quote = ch;
            in_token = true;
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            if (in_token) out.push_back(std::move(cur));
            cur.clear();
            in_token = false;
        } else {
            cur += ch;
            in_token = true;
        }
    }
    if (quote) throw ParseError("unterminated quote");
    if (in_token) out.push_back(std::move(cur));
    return out;
}

}  // namespace thetadirac::cli
