#include "ulrich/cli.hpp"

#include "ulrich/classifier.hpp"
#include "ulrich/cohomology.hpp"
#include "ulrich/family_generator.hpp"
#include "ulrich/higher_rank.hpp"
#include "ulrich/serialization.hpp"
#include "ulrich/ulrich_verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace ulrich::cli {

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::size_t n = 0;
    std::optional<long long> m;
    std::string cls;
    std::optional<long long> d;
    std::size_t rmax = 4;
    bool as_json = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t prime = 2147483647;
    unsigned trials = 3;
    std::optional<long long> caps_mult_max;
    std::optional<long long> caps_mult_min;
    std::optional<long long> d_max;
    bool allow_conjectural = false;
    bool known_certifications = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Polarization require_polarization(const Options& o, const Integer& m) {
    Polarization pol = polarization(o.n, m, o.allow_conjectural);
    if (!pol.very_ample) {
        throw std::invalid_argument("xi_{" + std::to_string(o.n) + "," + m.str() +
                                    "} is not very ample under the selected criterion");
    }
    return pol;
}

Integer resolve_m(const Options& o) {
    if (o.m) return Integer(*o.m);
    return minimal_very_ample_m(o.n);
}

int do_verify(const Options& o, std::ostream& out) {
    const DivisorClass c = parse_class(o.cls);
    if (c.n() != o.n) {
        throw std::invalid_argument("class has " + std::to_string(c.n()) + " points but --n is " + std::to_string(o.n));
    }
    const Polarization pol = require_polarization(o, resolve_m(o));
    const UlrichVerdict v = o.known_certifications ? verify_with_known_certifications(c, pol) : verify(c, pol);
    if (o.as_json) {
        json j = to_json(v);
        j["polarization"] = json{{"criterion", to_string(pol.criterion_used)}, {"ample", pol.ample}};
        emit(out, j);
    } else {
        print_table(out, v);
    }
    return v.overall == Overall::undecided ? undecided : ok;
}

int do_families(const Options& o, std::ostream& out) {
    const Integer m = resolve_m(o);
    if (o.d) {
        const FamilyRecord r = make_record(o.n, m, Integer(*o.d));
        if (o.as_json) emit(out, to_json(r));
        else print_table(out, std::vector<FamilyRecord>{r});
        return ok;
    }
    const Polarization pol = require_polarization(o, m);
    const auto family = theorem_family(o.n, m, o.allow_conjectural);
    const auto boundary = o.n == 2 ? std::vector<FamilyRecord>{} : boundary_candidates(o.n, m, o.allow_conjectural);

    bool any_undecided = false;
    json fam = json::array();
    std::vector<std::string> verdicts;
    for (const auto& r : family) {
        const UlrichVerdict v = verify_with_known_certifications(r.cls, pol);
        any_undecided |= v.overall == Overall::undecided;
        json j = to_json(r);
        j["verdict"] = to_string(v.overall);
        fam.push_back(j);
        verdicts.push_back(to_string(v.overall));
    }
    json bnd = json::array();
    for (const auto& r : boundary) {
        const UlrichVerdict v = verify_with_known_certifications(r.cls, pol);
        json j = to_json(r);
        j["verdict"] = to_string(v.overall);
        if (!v.reason.empty()) j["reason"] = v.reason;
        bnd.push_back(j);
    }

    if (o.as_json) {
        json j;
        j["n"] = o.n;
        j["m"] = json_integer(m);
        j["count"] = family.size();
        j["families"] = fam;
        j["boundary"] = bnd;
        emit(out, j);
    } else {
        out << "families for (n,m) = (" << o.n << "," << m << "): " << family.size() << '\n';
        print_table(out, family);
        if (!boundary.empty()) {
            out << "boundary (k = 0):\n";
            print_table(out, boundary);
        }
    }
    return any_undecided ? undecided : ok;
}

int do_classify(const Options& o, std::ostream& out) {
    const Polarization pol = require_polarization(o, resolve_m(o));
    SearchCaps caps;
    if (o.caps_mult_max) caps.mult_max = Integer(*o.caps_mult_max);
    if (o.caps_mult_min) caps.mult_min = Integer(*o.caps_mult_min);
    if (o.d_max) caps.d_max = Integer(*o.d_max);
    const ClassificationReport rep = classify(pol, caps);
    if (o.as_json) emit(out, to_json(rep));
    else print_table(out, rep);
    return rep.undecided.empty() ? ok : undecided;
}

int do_higher_rank(const Options& o, std::ostream& out) {
    const Integer m = resolve_m(o);
    const SeedPair seeds = seed_pair(o.n, m, o.allow_conjectural);
    std::vector<RankProfile> rows;
    for (std::size_t r = 1; r <= o.rmax; ++r) rows.push_back(rank_profile(Integer(r), seeds));
    if (o.as_json) {
        json j;
        j["n"] = o.n;
        j["m"] = json_integer(m);
        j["seeds"] = to_json(seeds);
        j["profiles"] = json::array();
        for (const auto& p : rows) j["profiles"].push_back(to_json(p));
        emit(out, j);
    } else {
        print_table(out, seeds, rows);
    }
    return ok;
}

int do_oracle(const Options& o, std::ostream& out) {
    const DivisorClass c = parse_class(o.cls);
    if (o.n != 0 && c.n() != o.n) {
        throw std::invalid_argument("class has " + std::to_string(c.n()) + " points but --n is " + std::to_string(o.n));
    }
    InterpolationOptions opts{o.prime, o.trials, *o.seed};
    const Integer h = h0_interpolation(c, opts);
    const CohomologyReport ladder = cohomology(c);
    if (o.as_json) {
        json j;
        j["class"] = to_string(c);
        j["prime"] = o.prime;
        j["trials"] = o.trials;
        j["seed"] = *o.seed;
        j["h0_interpolation"] = json_integer(h);
        j["ladder"] = to_json(ladder);
        emit(out, j);
    } else {
        out << "class  " << to_string(c) << '\n';
        out << "h0     " << h << "  (interpolation over GF(" << o.prime << "), " << o.trials << " trials, seed "
            << *o.seed << ")\n";
        out << "ladder " << (ladder.h0.known() ? ladder.h0.value->str() : std::string("unknown")) << "  ("
            << to_string(ladder.h0.rule) << ")\n";
    }
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ulrich line bundles on the plane blown up at very general points"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&o](CLI::App* sub) { sub->add_flag("--json", o.as_json, "machine-readable output"); };
    auto add_pol = [&o](CLI::App* sub, bool m_required) {
        sub->add_option("--n", o.n, "number of blown-up points")->required()->check(CLI::PositiveNumber);
        auto* m = sub->add_option("--m", o.m, "degree of the polarization xi_{n,m}");
        if (m_required) m->required();
        sub->add_flag("--allow-conjectural-very-ample", o.allow_conjectural,
                      "also accept m(m+3)/2 - n >= 5 as very ample");
    };

    auto* verify_cmd = app.add_subcommand("verify", "Ulrich test for one class");
    add_pol(verify_cmd, true);
    verify_cmd->add_option("--class", o.cls, "class, e.g. \"(6;2^6,1)\"")->required();
    verify_cmd->add_flag("--known-certifications", o.known_certifications,
                         "promote classes with a known smoothness certification");
    add_common(verify_cmd);

    auto* families_cmd = app.add_subcommand("families", "families of Ulrich line bundles");
    add_pol(families_cmd, false);
    families_cmd->add_option("--d", o.d, "single degree");
    add_common(families_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "exhaustive classification");
    add_pol(classify_cmd, false);
    classify_cmd->add_option("--caps-mult-max", o.caps_mult_max, "largest multiplicity searched");
    classify_cmd->add_option("--caps-mult-min", o.caps_mult_min, "most negative multiplicity searched (absolute)");
    classify_cmd->add_option("--d-max", o.d_max, "override the degree bound");
    add_common(classify_cmd);

    auto* higher_cmd = app.add_subcommand("higher-rank", "rank-r numerology");
    add_pol(higher_cmd, false);
    higher_cmd->add_option("--rmax", o.rmax, "largest rank")->check(CLI::PositiveNumber);
    add_common(higher_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "h0 by interpolation over a prime field");
    oracle_cmd->add_option("--class", o.cls, "class")->required();
    oracle_cmd->add_option("--n", o.n, "number of points (checked against the class)");
    oracle_cmd->add_option("--seed", o.seed, "random seed")->required();
    oracle_cmd->add_option("--prime", o.prime, "prime modulus");
    oracle_cmd->add_option("--trials", o.trials, "number of random point sets");
    add_common(oracle_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return input_error;
    }

    try {
        if (verify_cmd->parsed()) return do_verify(o, out);
        if (families_cmd->parsed()) return do_families(o, out);
        if (classify_cmd->parsed()) return do_classify(o, out);
        if (higher_cmd->parsed()) return do_higher_rank(o, out);
        if (oracle_cmd->parsed()) return do_oracle(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    err << app.help();
    return input_error;
}

}  // namespace ulrich::cli
