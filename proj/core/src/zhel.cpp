#include "thetadirac/zhel.hpp"

#include "thetadirac/error.hpp"

#include <map>
#include <sstream>

namespace thetadirac {

ZhelParam ZhelParam::from_lambda(const GroupKind& kind, Weight lambda1, Weight lambda2,
                                 std::optional<int> epsilon) {
    require_rank(kind, lambda1);
    require_rank(kind, lambda2);
    if (kind.is_orthogonal()) {
        if (!epsilon) throw DomainError("orthogonal parameter for " + kind.name() + " needs epsilon");
        if (*epsilon != 1 && *epsilon != -1) throw DomainError("epsilon must be +1 or -1");
    } else if (epsilon) {
        throw DomainError("epsilon is only defined for orthogonal groups, not " + kind.name());
    }
    if (!(lambda1 - lambda2).is_integral()) {
        throw DomainError("mu = lambda1 - lambda2 = " + (lambda1 - lambda2).to_string() + " is not integral");
    }
    return ZhelParam(kind, std::move(lambda1), std::move(lambda2), epsilon);
}

ZhelParam ZhelParam::from_mu_nu(const GroupKind& kind, const Weight& mu, const Weight& nu,
                                std::optional<int> epsilon) {
    require_rank(kind, mu);
    require_rank(kind, nu);
    if (!mu.is_integral()) throw DomainError("mu = " + mu.to_string() + " is not integral");
    return from_lambda(kind, (mu + nu) / Rat(2), (nu - mu) / Rat(2), epsilon);
}

std::string ZhelParam::to_string() const {
    std::string s = "kind=" + kind_.name() + " mu=" + mu().to_string() + " nu=" + nu().to_string();
    if (epsilon_) s += *epsilon_ > 0 ? " eps=+1" : " eps=-1";
    return s;
}

bool equivalent(const ZhelParam& p, const ZhelParam& q) {
    if (p.kind() != q.kind()) {
        throw DomainError("cannot compare parameters of " + p.kind().name() + " and " + q.kind().name());
    }
    return p.epsilon() == q.epsilon() && pair_equivalent(p.kind(), p.lambdas(), q.lambdas());
}

bool hermitian_exists(const ZhelParam& p) {
    const Weight mu = p.mu();
    const Weight nu = p.nu();
    return pair_equivalent(p.kind(), {mu, nu}, {mu, -nu});
}

ZhelParam contragredient(const ZhelParam& p) {
    return ZhelParam::from_lambda(p.kind(), -p.lambda1(), -p.lambda2(), p.epsilon());
}

ZhelParam parse_param(std::string_view text) {
    std::map<std::string, std::string> fields;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq);
        std::string value = token.substr(eq + 1);
        if (!value.empty() && value.back() == ',') value.pop_back();
        if (!fields.emplace(key, value).second) throw ParseError("duplicate field '" + key + "'");
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = fields.find(key);
        if (it == fields.end()) return std::nullopt;
        std::string v = it->second;
        fields.erase(it);
        return v;
    };

    auto kind_text = take("kind");
    if (!kind_text) throw ParseError("parameter needs kind=");
    const GroupKind kind = GroupKind::parse(*kind_text);

    std::optional<int> epsilon;
    if (auto e = take("eps")) {
        if (*e == "+1" || *e == "1") epsilon = 1;
        else if (*e == "-1") epsilon = -1;
        else throw ParseError("eps must be +1 or -1, got '" + *e + "'");
    } else if (kind.is_orthogonal()) {
        epsilon = 1;
    }
    if (auto t = take("tau")) {
        if (*t != "0" && *t != "1") throw ParseError("tau must be 0 or 1, got '" + *t + "'");
        if (kind.tau() != std::stoi(*t)) throw ParseError("tau=" + *t + " does not match " + kind.name());
    }

    auto mu = take("mu");
    auto nu = take("nu");
    auto l1 = take("lambda1");
    auto l2 = take("lambda2");
    if (!fields.empty()) throw ParseError("unknown field '" + fields.begin()->first + "'");
    if (mu && nu && !l1 && !l2) return ZhelParam::from_mu_nu(kind, Weight::parse(*mu), Weight::parse(*nu), epsilon);
    if (l1 && l2 && !mu && !nu) {
        return ZhelParam::from_lambda(kind, Weight::parse(*l1), Weight::parse(*l2), epsilon);
    }
    throw ParseError("parameter needs either mu= and nu= or lambda1= and lambda2=");
}

}  // namespace thetadirac
