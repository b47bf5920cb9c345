#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "limdens/acceptance.hpp"
#include "limdens/density.hpp"
#include "limdens/gaifman.hpp"
#include "limdens/manifest.hpp"
#include "limdens/walk.hpp"

namespace py = pybind11;
using namespace limdens;

namespace {

Family need_family(const std::string& name) {
    auto f = family_from_name(name);
    if (!f) throw Error("unknown family: " + name);
    return *f;
}

Signature default_signature(Family fam) {
    switch (fam) {
        case Family::BasicBijective:
        case Family::TwoIdBijective: return Signature::bijective();
        case Family::SingleUnary: return Signature::single_unary();
        case Family::ConstantBijectiveS3c: return Signature::s3c();
        case Family::AbelianGroups: return Signature::bijective();
        default: return Signature::multi_unary(2);
    }
}

StructureDescriptor classify_impl(const std::string& family, const std::vector<std::string>& inputs) {
    Family fam = need_family(family);
    Signature sig = default_signature(fam);
    switch (fam) {
        case Family::BasicBijective:
            return build_bijective(parse_identity(inputs.at(0), sig), sig);
        case Family::TwoIdBijective:
            return build_two_identity_bijective(parse_identity(inputs.at(0), sig),
                                                parse_identity(inputs.at(1), sig), sig);
        case Family::SingleUnary:
            return build_unary(parse_identity(inputs.at(0), sig));
        case Family::AbelianGroups:
            return build_abelian(parse_relator(inputs.at(0)));
        case Family::ConstantBijectiveS3c:
            return build_constant_example(parse_identity(inputs.at(0), sig));
        default:
            throw Error("classify: use classify_genbij for custom variety specs");
    }
}

std::pair<std::string, std::string> rat_pair(const Rational& r) {
    return {boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact limiting densities of random finitely presented unary structures";

    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
    py::register_exception<Error>(m, "LimdensError");

    m.def("classify_json", [](const std::string& family, const std::vector<std::string>& inputs) {
        return classify_impl(family, inputs).to_json_string();
    }, py::arg("family"), py::arg("inputs"));

    m.def("classify_genbij_json",
          [](const std::string& spec_json, int generators, const std::string& identity) {
              VarietySpec spec = VarietySpec::from_json_string(spec_json);
              spec.signature.generator_count = generators;
              Presentation p;
              p.generator_count = generators;
              p.identities = {parse_identity(identity, spec.signature)};
              return build_genbij(p, spec).to_json_string();
          },
          py::arg("spec_json"), py::arg("generators"), py::arg("identity"));

    m.def("identity_count_upto", [](const std::string& family, long long s) {
        Family fam = need_family(family);
        return identity_count_upto(default_signature(fam), fam, s).str();
    });

    m.def("total_presentations",
          [](const std::string& family, long long s, long long k, const std::string& mode) {
              auto cm = counting_mode_from_name(mode);
              if (!cm) throw Error("unknown counting mode " + mode);
              Family fam = need_family(family);
              return total_presentations(default_signature(fam), fam, s, k, *cm).str();
          },
          py::arg("family"), py::arg("s"), py::arg("k") = 1,
          py::arg("mode") = "unordered-distinct");

    m.def("alpha_count", [](long long n, long long s) { return alpha_count(n, s).str(); });

    m.def("x_residue_counts", [](long long modulus, long long s) {
        ResidueDistribution d = x_residue_distribution(modulus, s);
        std::vector<std::string> counts;
        for (const Integer& c : d.counts) counts.push_back(c.str());
        return py::make_tuple(counts, d.total.str());
    });

    m.def("coprime_pair_count", [](long long s) { return coprime_pair_count(s).str(); });

    m.def("density_points",
          [](const std::string& family, const std::string& sentence, long long smax,
             const std::string& strategy, long long k, const std::string& mode) {
              auto st = strategy_from_name(strategy);
              auto cm = counting_mode_from_name(mode);
              if (!st || !cm) throw Error("unknown strategy or counting mode");
              DensitySeries s = density_series(need_family(family), parse_invariant(sentence), smax,
                                               *st, k, *cm);
              std::vector<py::tuple> pts;
              for (const DensityPoint& p : s.points)
                  pts.push_back(py::make_tuple(p.s, p.count.str(), p.total.str()));
              return pts;
          },
          py::arg("family"), py::arg("sentence"), py::arg("smax"),
          py::arg("strategy") = "aggregate", py::arg("k") = 1,
          py::arg("mode") = "unordered-distinct");

    m.def("coprime_density_points", [](long long smax, const std::string& mode) {
        auto cm = counting_mode_from_name(mode);
        if (!cm) throw Error("unknown counting mode " + mode);
        CoprimeDensityResult res = coprime_density(smax, *cm);
        std::vector<py::tuple> pts;
        for (const DensityPoint& p : res.series.points)
            pts.push_back(py::make_tuple(p.s, p.count.str(), p.total.str()));
        return py::make_tuple(pts, res.even_reference, res.odd_reference);
    }, py::arg("smax"), py::arg("mode") = "ordered-with-rep");

    m.def("constants_like_points", [](long long n, long long r, long long smax) {
        auto [a, b] = constants_like_density(n, r, smax);
        std::vector<py::tuple> pa, pb;
        for (const DensityPoint& p : a.points) pa.push_back(py::make_tuple(p.s, p.count.str(), p.total.str()));
        for (const DensityPoint& p : b.points) pb.push_back(py::make_tuple(p.s, p.count.str(), p.total.str()));
        return py::make_tuple(pa, pb);
    });

    m.def("walk_distribution",
          [](long long n, const std::string& support, long long k) {
              WalkSpec spec = WalkSpec::parse(n, support);
              WalkDistribution d = k_step_distribution(spec, k);
              std::vector<std::pair<std::string, std::string>> mass;
              for (const Rational& q : d.mass) mass.push_back(rat_pair(q));
              return mass;
          },
          py::arg("n"), py::arg("support"), py::arg("k"));

    m.def("walk_tv_distance", [](long long n, const std::string& support, long long k) {
        WalkSpec spec = WalkSpec::parse(n, support);
        return rat_pair(k_step_distribution(spec, k).tv_distance_to_uniform());
    });

    m.def("gaifman_group_json", [](const std::string& spec_json) {
        std::ostringstream out, err;
        // reuse the CLI implementation for an identical report format
        VarietySpec spec = VarietySpec::from_json_string(spec_json);
        GaifmanGroup g = gaifman_group(spec);
        std::string json = "{\"rank\": " + std::to_string(g.rank);
        json += ", \"torsion\": [";
        for (size_t i = 0; i < g.torsion.size(); ++i)
            json += (i ? "," : "") + g.torsion[i].str();
        json += "], \"pi1\": [";
        if (g.infinite())
            for (int i = 0; i < g.n; ++i) json += (i ? "," : "") + std::to_string(g.pi1[static_cast<size_t>(i)]);
        json += "]}";
        return json;
    });

    m.def("ball_code_hex",
          [](const std::string& family, const std::string& identity, int r, const std::string& center) {
              StructureDescriptor desc = classify_impl(family, {identity});
              if (!desc.is_finite() && std::holds_alternative<ZChain>(desc.value))
                  return code_hex(canonical_ball_code(zchain_ball(r)));
              FiniteStructure fs = materialize_finite(desc);
              return code_hex(canonical_ball_code(ball(fs, {fs.named.at(center)}, r)));
          },
          py::arg("family"), py::arg("identity"), py::arg("r"), py::arg("center") = "a");

    m.def("eval_invariant",
          [](const std::string& family, const std::string& input, const std::string& sentence) {
              return eval_invariant(classify_impl(family, {input}), parse_invariant(sentence));
          },
          py::arg("family"), py::arg("input"), py::arg("sentence"));

    m.def("eval_sentence",
          [](const std::string& family, const std::string& input, const std::string& sentence,
             double budget) {
              FiniteStructure fs = materialize_finite(classify_impl(family, {input}));
              return eval_fo_finite(fs, *parse_sentence(sentence), budget);
          },
          py::arg("family"), py::arg("input"), py::arg("sentence"), py::arg("budget") = 1e8);

    m.def("verify", [](const std::string& only) {
        std::ostringstream out;
        auto results = run_acceptance(out, only);
        int passed = 0;
        for (const auto& r : results)
            if (r.pass) ++passed;
        return py::make_tuple(passed, static_cast<int>(results.size()), out.str());
    }, py::arg("only") = "");

    m.def("cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli_run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });

    m.attr("__version__") = "0.1.0";
}
