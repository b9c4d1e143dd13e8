#include "ulrich/serialization.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>

namespace ulrich {

using json = nlohmann::ordered_json;

json json_integer(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

namespace {

json entry_json(const Entry& e) {
    json j;
    j["value"] = e.known() ? json_integer(*e.value) : json(nullptr);
    j["rule"] = to_string(e.rule);
    j["stripped"] = e.stripped;
    return j;
}

json condition_json(const ConditionResult& c) {
    return json{{"outcome", to_string(c.outcome)}, {"rule", c.rule}};
}

}  // namespace

json to_json(const CohomologyReport& r) {
    return json{{"h0", entry_json(r.h0)}, {"h1", entry_json(r.h1)}, {"h2", entry_json(r.h2)}};
}

json to_json(const UlrichVerdict& v) {
    json j;
    j["class"] = to_string(v.cls);
    j["canonical"] = canonical_text(v.cls);
    j["n"] = json_integer(v.n);
    j["m"] = json_integer(v.m);
    j["conditions"] = json{{"i", condition_json(v.degree)},
                           {"ii", condition_json(v.chi)},
                           {"iii", condition_json(v.speciality)},
                           {"iv", condition_json(v.restriction)}};
    j["smoothness"] = json{{"status", to_string(v.smoothness.status)}, {"rule", v.smoothness.rule}};
    j["overall"] = to_string(v.overall);
    j["failing"] = v.failing.empty() ? json(nullptr) : json(v.failing);
    j["reason"] = v.reason.empty() ? json(nullptr) : json(v.reason);
    j["known_certification"] = v.known_certification ? json(*v.known_certification) : json(nullptr);
    return j;
}

json to_json(const FamilyRecord& r) {
    return json{{"n", json_integer(r.n)},         {"m", json_integer(r.m)},
                {"d", json_integer(r.d)},         {"delta", json_integer(r.delta)},
                {"k", json_integer(r.k)},         {"class", to_string(r.cls)},
                {"boundary", r.boundary},         {"orbit_size", json_integer(r.orbit_size)}};
}

json to_json(const ClassificationReport& r) {
    json j;
    j["n"] = json_integer(r.n);
    j["m"] = json_integer(r.m);
    j["ulrich"] = json::array();
    for (const auto& c : r.ulrich) j["ulrich"].push_back(to_string(c));
    j["known_certified"] = json::array();
    for (const auto& c : r.known_certified) j["known_certified"].push_back(to_string(c));
    j["near_misses"] = json::array();
    for (const auto& [c, why] : r.near_misses) j["near_misses"].push_back(json{{"class", to_string(c)}, {"failing", why}});
    j["undecided"] = json::array();
    for (const auto& [c, why] : r.undecided) j["undecided"].push_back(json{{"class", to_string(c)}, {"reason", why}});

    json caps;
    caps["mult_max"] = r.caps.mult_max ? json_integer(*r.caps.mult_max) : json("max(2,d)");
    caps["mult_min"] = r.caps.mult_min ? json_integer(*r.caps.mult_min) : json("d");
    caps["d_max"] = json_integer(r.bound.d_max);
    caps["ambient_dim"] = json_integer(r.bound.ambient_dim);
    caps["degenerate_d_max"] = json_integer(r.bound.degenerate_d_max);
    caps["heuristic"] = r.bound.heuristic;
    caps["note"] = r.bound.note;
    j["caps"] = caps;

    j["degrees"] = json::array();
    for (const auto& d : r.degrees) {
        j["degrees"].push_back(json{{"d", json_integer(d.d)},
                                    {"sum", json_integer(d.sum)},
                                    {"sum_of_squares", json_integer(d.sum_of_squares)},
                                    {"mult_max", json_integer(d.mult_max)},
                                    {"mult_min", json_integer(d.mult_min)},
                                    {"candidates", d.candidates},
                                    {"exhaustive", d.exhaustive},
                                    {"truncated", d.truncated}});
    }
    return j;
}

json to_json(const SeedPair& s) {
    return json{{"L0", to_string(s.L0)}, {"L1", to_string(s.L1)}, {"h", json_integer(s.h)}, {"mu", json_integer(s.mu)}};
}

json to_json(const RankProfile& p) {
    json j;
    j["r"] = json_integer(p.r);
    j["epsilon"] = p.epsilon;
    j["slope"] = json_integer(p.slope);
    j["chi_E_L"] = json_integer(p.chi_E_L);
    j["chi_L_E"] = json_integer(p.chi_L_E);
    j["chi_End"] = json_integer(p.chi_End);
    j["h1_E_L"] = json_integer(p.h1_E_L);
    j["moduli_dim"] = json_integer(p.moduli_dim);
    j["ext_dim_bound"] = p.ext_dim_bound ? json_integer(*p.ext_dim_bound) : json(nullptr);
    if (p.r == 1) j["note"] = "line bundles on a rational surface are rigid";
    return j;
}

// ---------------------------------------------------------------------------
// Tables

void print_table(std::ostream& os, const UlrichVerdict& v) {
    os << "class      " << to_string(v.cls) << "  (canonical " << canonical_text(v.cls) << ")\n";
    os << "xi         (n,m) = (" << v.n << "," << v.m << ")\n";
    auto line = [&os](const char* name, const ConditionResult& c) {
        os << std::left << std::setw(11) << name << std::setw(8) << to_string(c.outcome) << c.rule << '\n';
    };
    line("(i)", v.degree);
    line("(ii)", v.chi);
    line("(iii)", v.speciality);
    line("(iv)", v.restriction);
    os << std::left << std::setw(11) << "smooth" << to_string(v.smoothness.status) << " - " << v.smoothness.rule
       << '\n';
    if (v.known_certification) os << "known      " << *v.known_certification << '\n';
    os << "overall    " << to_string(v.overall);
    if (!v.failing.empty()) os << " (" << v.failing << ")";
    if (!v.reason.empty()) os << " (" << v.reason << ")";
    os << '\n';
}

void print_table(std::ostream& os, const std::vector<FamilyRecord>& records) {
    os << std::left << std::setw(6) << "d" << std::setw(8) << "delta" << std::setw(6) << "k" << std::setw(10)
       << "boundary" << std::setw(24) << "orbit" << "class\n";
    for (const auto& r : records) {
        os << std::left << std::setw(6) << r.d << std::setw(8) << r.delta << std::setw(6) << r.k << std::setw(10)
           << (r.boundary ? "yes" : "no") << std::setw(24) << r.orbit_size << to_string(r.cls) << '\n';
    }
}

void print_table(std::ostream& os, const ClassificationReport& r) {
    os << "Ulrich line bundles on X_" << r.n << " for xi_{" << r.n << "," << r.m << "}";
    if (r.bound.heuristic) os << " (search box heuristic)";
    os << '\n';
    for (const auto& c : r.ulrich) {
        bool known = std::find(r.known_certified.begin(), r.known_certified.end(), c) != r.known_certified.end();
        os << "  " << to_string(c) << (known ? "  [known smooth]" : "") << '\n';
    }
    os << "not Ulrich:\n";
    for (const auto& [c, why] : r.near_misses) os << "  " << to_string(c) << "  fails (" << why << ")\n";
    if (!r.undecided.empty()) {
        os << "undecided:\n";
        for (const auto& [c, why] : r.undecided) os << "  " << to_string(c) << "  (" << why << ")\n";
    }
    os << "search: d <= " << r.bound.d_max << "; " << r.bound.note << '\n';
}

void print_table(std::ostream& os, const SeedPair& s, const std::vector<RankProfile>& rows) {
    os << "L0 = " << to_string(s.L0) << "  L1 = " << to_string(s.L1) << "  h = " << s.h << "  mu = " << s.mu
       << '\n';
    os << std::left << std::setw(6) << "r" << std::setw(5) << "eps" << std::setw(12) << "chi(E,L)" << std::setw(12)
       << "chi(L,E)" << std::setw(12) << "chi(End)" << std::setw(10) << "h1(E,L)" << std::setw(12) << "moduli"
       << "ext_bound\n";
    for (const auto& p : rows) {
        os << std::left << std::setw(6) << p.r << std::setw(5) << p.epsilon << std::setw(12) << p.chi_E_L
           << std::setw(12) << p.chi_L_E << std::setw(12) << p.chi_End << std::setw(10) << p.h1_E_L << std::setw(12)
           << p.moduli_dim << (p.ext_dim_bound ? p.ext_dim_bound->str() : std::string("-")) << '\n';
    }
}

}  // namespace ulrich
