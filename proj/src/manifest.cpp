#include "limdens/manifest.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "limdens/acceptance.hpp"
#include "limdens/density.hpp"
#include "limdens/gaifman.hpp"
#include "limdens/walk.hpp"

namespace limdens {

std::string ExperimentManifest::to_json_string() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    return j.dump(2) + "\n";
}

namespace {

void emit(const std::string& out_path, const std::string& content, const ExperimentManifest& man,
          std::ostream& out) {
    if (out_path.empty()) {
        out << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file " + out_path);
    f << content;
    std::ofstream mf(out_path + ".manifest.json", std::ios::binary);
    mf << man.to_json_string();
}

Family need_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw Error("unknown family: " + name);
    return *f;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

VarietySpec spec_for(Family fam, const std::string& spec_path, int gens) {
    VarietySpec spec;
    if (!spec_path.empty()) {
        spec = VarietySpec::from_json_string(read_file(spec_path));
    } else if (fam == Family::BasicBijective || fam == Family::TwoIdBijective) {
        spec = VarietySpec::basic_bijective();
    } else if (fam == Family::ConstantBijectiveS3c) {
        spec = VarietySpec::s3c();
    } else {
        throw Error("family " + family_name(fam) + " needs --spec");
    }
    spec.signature.generator_count = gens;
    return spec;
}

struct ClassifyArgs {
    std::string family;
    std::vector<std::string> identities;
    std::string relator;
    std::string spec_path;
    int gens = 1;
    std::string dot_path;
    std::string out_path;
    long long budget = 1000000;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    Family fam = need_family(a.family);
    StructureDescriptor desc;
    switch (fam) {
        case Family::BasicBijective: {
            if (a.identities.size() != 1) throw Error("bijective classify needs one --identity");
            Signature sig = Signature::bijective();
            desc = build_bijective(parse_identity(a.identities[0], sig), sig);
            break;
        }
        case Family::TwoIdBijective: {
            if (a.identities.size() != 2) throw Error("two-id classify needs two --identity flags");
            Signature sig = Signature::bijective();
            desc = build_two_identity_bijective(parse_identity(a.identities[0], sig),
                                                parse_identity(a.identities[1], sig), sig);
            break;
        }
        case Family::SingleUnary: {
            if (a.identities.size() != 1) throw Error("unary classify needs one --identity");
            desc = build_unary(parse_identity(a.identities[0], Signature::single_unary()));
            break;
        }
        case Family::AbelianGroups: {
            if (a.relator.empty() && a.identities.empty())
                throw Error("abelian classify needs --relator");
            desc = build_abelian(parse_relator(a.relator));
            break;
        }
        case Family::ConstantBijectiveS3c: {
            if (a.identities.size() != 1) throw Error("s3c classify needs one --identity");
            desc = build_constant_example(parse_identity(a.identities[0], Signature::s3c()));
            break;
        }
        case Family::CommutativeGenBij:
        case Family::MultiUnaryFree: {
            if (a.identities.size() != 1) throw Error("genbij classify needs one --identity");
            VarietySpec spec = spec_for(fam, a.spec_path, a.gens);
            Presentation p;
            p.generator_count = a.gens;
            p.identities = {parse_identity(a.identities[0], spec.signature)};
            desc = build_genbij(p, spec);
            break;
        }
    }
    ExperimentManifest man{"classify", {}};
    man.params["family"] = a.family;
    for (size_t i = 0; i < a.identities.size(); ++i)
        man.params["identity" + std::to_string(i + 1)] = a.identities[i];
    if (!a.relator.empty()) man.params["relator"] = a.relator;
    emit(a.out_path, desc.to_json_string(), man, out);
    if (!a.dot_path.empty()) {
        FiniteStructure fs = materialize_finite(desc, a.budget);
        std::ofstream f(a.dot_path, std::ios::binary);
        f << fs.to_dot();
    }
    return 0;
}

struct DensityArgs {
    std::string family;
    std::string sentence;
    long long smax = 100;
    std::string strategy = "aggregate";
    long long k = 1;
    std::string mode = "unordered-distinct";
    long long n = 2, r = 1, m = 1;
    std::string out_path;
    std::string report_path;
};

int cmd_density(const DensityArgs& a, std::ostream& out) {
    ExperimentManifest man{"density", {}};
    man.params["family"] = a.family;
    man.params["sentence"] = a.sentence;
    man.params["smax"] = std::to_string(a.smax);
    man.params["strategy"] = a.strategy;
    man.params["k"] = std::to_string(a.k);
    man.params["mode"] = a.mode;

    auto write_report = [&](const std::string& text) {
        if (a.report_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(a.report_path, std::ios::binary);
        f << text;
    };

    if (a.family == "constants-like") {
        man.params["n"] = std::to_string(a.n);
        man.params["r"] = std::to_string(a.r);
        auto [sa, sb] = constants_like_density(a.n, a.r, a.smax);
        emit(a.out_path, sa.to_csv() + sb.to_csv(), man, out);
        return 0;
    }
    Family fam = need_family(a.family);
    if (fam == Family::MultiUnaryFree) {
        man.params["n"] = std::to_string(a.n);
        man.params["m"] = std::to_string(a.m);
        DensitySeries s = multi_unary_phi_density(a.n, a.m, a.k, a.smax);
        emit(a.out_path, s.to_csv(), man, out);
        return 0;
    }
    if (fam == Family::ConstantBijectiveS3c) {
        ConstantExampleReport rep = constant_example_densities(a.smax);
        std::string csv = rep.s1.to_csv() + rep.s2.to_csv() + rep.s3.to_csv() + rep.c_fixed.to_csv();
        emit(a.out_path, csv, man, out);
        nlohmann::ordered_json j;
        j["s1_share"] = decimal_string(rep.s1.points.back().density());
        j["s2_share"] = decimal_string(rep.s2.points.back().density());
        j["s3_share"] = decimal_string(rep.s3.points.back().density());
        j["c_fixed_density"] = decimal_string(rep.c_fixed.points.back().density());
        write_report(j.dump(2) + "\n");
        return 0;
    }
    if (fam == Family::TwoIdBijective) {
        auto mode = counting_mode_from_name(a.mode);
        if (!mode) throw Error("unknown counting mode " + a.mode);
        CoprimeDensityResult res = coprime_density(a.smax, *mode);
        emit(a.out_path, res.series.to_csv(), man, out);
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(res.report.to_json_string());
        j["even_reference"] = res.even_reference;
        j["odd_reference"] = res.odd_reference;
        write_report(j.dump(2) + "\n");
        return 0;
    }
    auto strat = strategy_from_name(a.strategy);
    if (!strat) throw Error("unknown strategy " + a.strategy);
    auto mode = counting_mode_from_name(a.mode);
    if (!mode) throw Error("unknown counting mode " + a.mode);
    Invariant inv = parse_invariant(a.sentence);
    DensitySeries s = density_series(fam, inv, a.smax, *strat, a.k, *mode);
    emit(a.out_path, s.to_csv(), man, out);
    if (static_cast<long long>(s.points.size()) >= 20) {
        SubsequenceReport rep = even_odd_limits(s, Rational(1, 100));
        write_report(rep.to_json_string());
    }
    return 0;
}

struct WalkArgs {
    long long n = 5;
    std::string support = "0:1/2,1:1/4,-1:1/4";
    long long kmax = 100;
    std::string out_path;
};

int cmd_walk(const WalkArgs& a, std::ostream& out) {
    WalkSpec spec = WalkSpec::parse(a.n, a.support);
    std::string csv = "k,max_deviation,tv_distance\n";
    WalkDistribution d;
    d.modulus = spec.modulus;
    d.mass.assign(static_cast<size_t>(spec.modulus), Rational(0));
    d.mass[0] = 1;
    for (long long k = 0; k <= a.kmax; ++k) {
        if (k > 0) {
            std::vector<Rational> nx(static_cast<size_t>(spec.modulus), Rational(0));
            for (long long g = 0; g < spec.modulus; ++g) {
                if (d.mass[static_cast<size_t>(g)] == 0) continue;
                for (const auto& [e, p] : spec.support)
                    nx[static_cast<size_t>((g + e) % spec.modulus)] += d.mass[static_cast<size_t>(g)] * p;
            }
            if (k > 1000)
                for (Rational& q : nx) q = round_rational_bits(q, 256);
            d.mass = std::move(nx);
        }
        csv += std::to_string(k) + "," + decimal_string(d.max_deviation_from_uniform()) + "," +
               decimal_string(d.tv_distance_to_uniform()) + "\n";
    }
    ExperimentManifest man{"walk", {}};
    man.params["n"] = std::to_string(a.n);
    man.params["support"] = a.support;
    man.params["kmax"] = std::to_string(a.kmax);
    if (a.kmax > 1000) man.params["renorm"] = "round-to-nearest, 256 bits, after k=1000";
    emit(a.out_path, csv, man, out);
    return 0;
}

struct GaifmanArgs {
    std::string family = "bijective";
    std::string identity;
    int r = 2;
    std::string center = "a";
    std::string dot_path;
    std::string out_path;
    long long budget = 1000000;
};

int cmd_gaifman(const GaifmanArgs& a, std::ostream& out) {
    Family fam = need_family(a.family);
    StructureDescriptor desc;
    Signature sig;
    switch (fam) {
        case Family::BasicBijective:
            sig = Signature::bijective();
            desc = build_bijective(parse_identity(a.identity, sig), sig);
            break;
        case Family::SingleUnary:
            sig = Signature::single_unary();
            desc = build_unary(parse_identity(a.identity, sig));
            break;
        case Family::ConstantBijectiveS3c:
            sig = Signature::s3c();
            desc = build_constant_example(parse_identity(a.identity, sig));
            break;
        default:
            throw Error("gaifman supports bijective, unary and s3c families");
    }
    Ball b;
    if (!desc.is_finite() && std::holds_alternative<ZChain>(desc.value)) {
        b = zchain_ball(a.r);
    } else {
        FiniteStructure fs = materialize_finite(desc, a.budget);
        auto it = fs.named.find(a.center);
        if (it == fs.named.end()) throw Error("unknown center " + a.center);
        b = ball(fs, {it->second}, a.r);
    }
    LocalTypeCode code = canonical_ball_code(b);
    nlohmann::ordered_json j;
    j["family"] = a.family;
    j["identity"] = a.identity;
    j["r"] = a.r;
    j["center"] = a.center;
    j["ball_size"] = b.size();
    j["code"] = code_hex(code);
    ExperimentManifest man{"gaifman", {}};
    man.params["family"] = a.family;
    man.params["identity"] = a.identity;
    man.params["r"] = std::to_string(a.r);
    man.params["center"] = a.center;
    emit(a.out_path, j.dump(2) + "\n", man, out);
    if (!a.dot_path.empty()) {
        std::ofstream f(a.dot_path, std::ios::binary);
        f << b.to_dot();
    }
    return 0;
}

struct GroupArgs {
    std::string family;
    std::string spec_path;
    std::string out_path;
};

int cmd_group(const GroupArgs& a, std::ostream& out) {
    VarietySpec spec;
    if (!a.spec_path.empty())
        spec = VarietySpec::from_json_string(read_file(a.spec_path));
    else if (a.family == "bijective" || a.family.empty())
        spec = VarietySpec::basic_bijective();
    else
        throw Error("group needs --spec (or --family bijective)");
    GaifmanGroup g = gaifman_group(spec);
    nlohmann::ordered_json j;
    j["rank"] = g.rank;
    std::vector<std::string> tor;
    for (const Integer& t : g.torsion) tor.push_back(t.str());
    j["torsion"] = tor;
    if (g.infinite()) {
        nlohmann::ordered_json pi = nlohmann::ordered_json::object();
        for (int i = 0; i < g.n; ++i)
            pi[spec.signature.function_symbols[static_cast<size_t>(i)]] = g.pi1[static_cast<size_t>(i)];
        j["pi1"] = pi;
        E0Bound e0 = e0_bound(g);
        j["e0"] = e0.e0;
        j["e0_slack"] = e0.e0_slack;
    }
    nlohmann::ordered_json inv = nlohmann::ordered_json::object();
    for (int i = 0; i < g.n; ++i) {
        auto w = inverse_word(spec, i);
        inv[spec.signature.function_symbols[static_cast<size_t>(i)]] =
            w ? print_word(*w, spec.signature) : "(none)";
    }
    j["inverse_words"] = inv;
    ExperimentManifest man{"group", {}};
    man.params["family"] = a.family;
    if (!a.spec_path.empty()) man.params["spec"] = a.spec_path;
    emit(a.out_path, j.dump(2) + "\n", man, out);
    return 0;
}

struct EnumArgs {
    std::string family;
    int length = 0;
    bool count_only = false;
    long long limit = 10000;
    std::string out_path;
};

int cmd_enumerate(const EnumArgs& a, std::ostream& out) {
    Family fam = need_family(a.family);
    std::string text;
    long long shown = 0;
    Integer total = 0;
    if (fam == Family::AbelianGroups) {
        enumerate_relators(a.length, [&](const Relator& r) {
            ++total;
            if (!a.count_only && shown < a.limit) {
                text += print_relator(r) + "\n";
                ++shown;
            }
        });
    } else {
        Signature sig;
        switch (fam) {
            case Family::BasicBijective:
            case Family::TwoIdBijective: sig = Signature::bijective(); break;
            case Family::SingleUnary: sig = Signature::single_unary(); break;
            case Family::ConstantBijectiveS3c: sig = Signature::s3c(); break;
            case Family::MultiUnaryFree:
            case Family::CommutativeGenBij: sig = Signature::multi_unary(2); break;
            default: break;
        }
        enumerate_identities(sig, fam, a.length, [&](const Identity& id) {
            ++total;
            if (!a.count_only && shown < a.limit) {
                text += print_identity(id, sig) + "\n";
                ++shown;
            }
        });
    }
    text += "count " + total.str() + "\n";
    ExperimentManifest man{"enumerate", {}};
    man.params["family"] = a.family;
    man.params["length"] = std::to_string(a.length);
    emit(a.out_path, text, man, out);
    return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact limiting densities of random finitely presented unary structures"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "classify the structure of a presentation");
    classify->add_option("--family", ca.family)->required();
    classify->add_option("--identity", ca.identities);
    classify->add_option("--relator", ca.relator);
    classify->add_option("--spec", ca.spec_path);
    classify->add_option("--gens", ca.gens);
    classify->add_option("--dot", ca.dot_path);
    classify->add_option("--out", ca.out_path);
    classify->add_option("--budget", ca.budget);

    EnumArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "stream identities of one length");
    enumerate->add_option("--family", ea.family)->required();
    enumerate->add_option("--length", ea.length)->required();
    enumerate->add_flag("--count-only", ea.count_only);
    enumerate->add_option("--limit", ea.limit);
    enumerate->add_option("--out", ea.out_path);

    DensityArgs da;
    auto* density = app.add_subcommand("density", "density series of a sentence");
    density->add_option("--family", da.family)->required();
    density->add_option("--sentence", da.sentence);
    density->add_option("--smax", da.smax)->required();
    density->add_option("--strategy", da.strategy);
    density->add_option("--k", da.k);
    density->add_option("--mode", da.mode);
    density->add_option("--n", da.n);
    density->add_option("--r", da.r);
    density->add_option("--m", da.m);
    density->add_option("--out", da.out_path);
    density->add_option("--report", da.report_path);

    WalkArgs wa;
    auto* walk = app.add_subcommand("walk", "exact random walk distributions on Z_n");
    walk->add_option("--n", wa.n)->required();
    walk->add_option("--support", wa.support);
    walk->add_option("--kmax", wa.kmax);
    walk->add_option("--out", wa.out_path);

    GaifmanArgs ga;
    auto* gaifman = app.add_subcommand("gaifman", "r-ball codes in the Gaifman graph");
    gaifman->add_option("--family", ga.family);
    gaifman->add_option("--identity", ga.identity)->required();
    gaifman->add_option("--r", ga.r);
    gaifman->add_option("--center", ga.center);
    gaifman->add_option("--dot", ga.dot_path);
    gaifman->add_option("--out", ga.out_path);
    gaifman->add_option("--budget", ga.budget);

    GroupArgs gra;
    auto* group = app.add_subcommand("group", "G(V) report for a variety spec");
    group->add_option("--family", gra.family);
    group->add_option("--spec", gra.spec_path);
    group->add_option("--out", gra.out_path);

    std::string only;
    uint64_t seed = 20240613;
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--only", only);
    verify->add_option("--seed", seed);

    std::vector<const char*> argv;
    argv.push_back("limdens");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(ca, out);
        if (enumerate->parsed()) return cmd_enumerate(ea, out);
        if (density->parsed()) return cmd_density(da, out);
        if (walk->parsed()) return cmd_walk(wa, out);
        if (gaifman->parsed()) return cmd_gaifman(ga, out);
        if (group->parsed()) return cmd_group(gra, out);
        if (verify->parsed()) {
            auto results = run_acceptance(out, only, seed);
            for (const auto& r : results)
                if (!r.pass) return 4;
            return 0;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace limdens
