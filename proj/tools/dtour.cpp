// dtour: command-line front end. Every command writes JSON to standard
// output (census may write CSV). Exit codes: 0 the property holds or the
// command succeeded, 1 the property fails (a witness is printed), 2 usage or
// input error, 3 instance too large.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "dtour/census.hpp"
#include "dtour/collapse.hpp"
#include "dtour/cycles.hpp"
#include "dtour/error.hpp"
#include "dtour/extraction.hpp"
#include "dtour/fixtures.hpp"
#include "dtour/geometry.hpp"
#include "dtour/json_io.hpp"

namespace {

using namespace dtour;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kTooLarge = 3;

void emit(const Json& j)
{
    std::cout << j.dump() << '\n';
}

Tournament load_tournament(const std::string& path)
{
    return parse_tournament(read_text(path));
}

Json load_json(const std::string& path)
{
    try {
        return Json::parse(read_text(path));
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json fixture_json(const fixtures::Fixture& f)
{
    Json j = to_json(f.tournament);
    j["name"] = f.name;
    j["description"] = f.description;
    Json props = Json::array();
    for (const auto& p : f.properties)
        props.push_back(Json{{"property", p.property}, {"expected", p.expected}, {"reason", p.reason}});
    j["properties"] = std::move(props);
    return j;
}

struct CheckArgs {
    std::string input = "-";
    std::string property;
    std::size_t cap = 0;
    int threads = 1;
};

int run_check(const CheckArgs& a)
{
    const Tournament t = load_tournament(a.input);
    Json out{{"property", a.property}};
    bool holds = false;
    if (a.property == "acyclic") {
        const auto v = is_acyclic(t);
        holds = v.acyclic;
        out["witness"] = holds ? chamber_certificate_json(v.certificate(), t.n(), t.d()) : to_json(v.cycle());
    } else if (a.property == "collapsible") {
        const auto r = is_collapsible_exact(t, a.cap ? a.cap : 128);
        holds = r.collapsible;
        if (holds) {
            out["witness"] = to_json(r.witness);
        } else {
            const auto g = greedy_collapse(t, CollapseStrategy::lexicographic);
            out["witness"] = Json{{"kind", "residue"}, {"tournament", to_json(g.residue)}};
        }
    } else if (a.property == "zero-one-acyclic") {
        const auto c = has_zero_one_cycle(t, a.cap ? a.cap : 64);
        holds = !c.has_value();
        out["witness"] = holds ? Json(nullptr) : to_json(*c);
    } else if (a.property == "k2cycle-free") {
        if (!t.is_complete())
            throw ParseError("k2cycle-free needs a complete tournament");
        const auto count = count_d_plus_2_cycles(t, a.threads);
        holds = count == 0;
        out["count"] = count;
        Json witness = nullptr;
        if (!holds) {
            for_each_subset(t.n(), t.d() + 2, [&](std::span<const int> u) {
                if (witness.is_null() && is_d_plus_2_cycle(t, u))
                    witness = Json{{"kind", "d2-cycle"}, {"vertices", std::vector<int>(u.begin(), u.end())}};
            });
        }
        out["witness"] = std::move(witness);
    } else {
        throw CLI::ValidationError("--property", "unknown property '" + a.property + "'");
    }
    out["holds"] = holds;
    emit(out);
    return holds ? kHolds : kFails;
}

int run_extract(const std::string& input, const std::string& order_name)
{
    const Tournament t = load_tournament(input);
    if (!t.is_complete())
        throw ParseError("extract needs a complete tournament");
    const auto order = order_name == "reverse-colexicographic" ? ExtractionOrder::reverse_colexicographic
                                                               : ExtractionOrder::reverse_lexicographic;
    const auto r = extract_acyclic_sub(t, order);
    for (const auto& step : r.trace)
        emit(to_json(step));
    emit(Json{{"survivors", r.survivors}, {"size", r.survivors.size()}});
    return kHolds;
}

int run_max_acyclic(const std::string& input, int cap)
{
    const auto k = max_acyclic_subtournament(load_tournament(input), cap);
    emit(Json{{"vertices", k}, {"size", k.size()}});
    return kHolds;
}

struct CensusArgs {
    int n = 0;
    int d = 0;
    std::string predicates = "all";
    int threads = 1;
    std::string format = "json";
    std::uint64_t budget = std::uint64_t{1} << 22;
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;
    std::string orbits;
};

int run_census(const CensusArgs& a)
{
    CensusOptions o;
    o.threads = a.threads;
    o.budget = a.budget;
    o.realizable_samples = a.samples;
    o.seed = a.seed;
    const auto report = enumerate(a.n, a.d, CensusPredicates::parse(a.predicates), o);
    if (a.format == "csv") {
        std::cout << census_csv(report);
        return kHolds;
    }
    Json j = to_json(report);
    if (!a.orbits.empty()) {
        const auto convention = parse_convention(a.orbits);
        Json orbits{{"convention", std::string(to_string(convention))}};
        for (auto [name, predicate] : {std::pair{"all", OrbitPredicate::all}, std::pair{"acyclic", OrbitPredicate::acyclic},
                                       std::pair{"collapsible", OrbitPredicate::collapsible}})
            orbits[name] = orbit_census(a.n, a.d, predicate, convention, o).representatives.size();
        j["orbits"] = std::move(orbits);
    }
    emit(j);
    return kHolds;
}

int run_gallery(const std::string& name)
{
    if (!name.empty()) {
        emit(fixture_json(fixtures::fixture(name)));
        return kHolds;
    }
    Json all = Json::array();
    for (const auto& f : fixtures::gallery())
        all.push_back(fixture_json(f));
    emit(all);
    return kHolds;
}

int run_random(int n, int d, std::uint64_t seed, bool acyclic)
{
    emit(to_json(acyclic ? sample_acyclic(n, d, seed) : random_tournament(n, d, seed)));
    return kHolds;
}

int run_realize(const std::string& path)
{
    emit(to_json(orient_from_points(points_from_json(load_json(path)))));
    return kHolds;
}

int run_chamber(const std::string& to_point, const std::string& from_point)
{
    if (!from_point.empty()) {
        emit(to_json(chamber_to_tournament(chamber_point_from_json(load_json(from_point)))));
        return kHolds;
    }
    const Tournament t = load_tournament(to_point);
    if (!t.is_complete())
        throw ParseError("chamber --to-point needs a complete tournament");
    const auto r = tournament_to_chamber_point(t);
    if (const auto* x = std::get_if<ChamberPoint>(&r)) {
        emit(to_json(*x));
        return kHolds;
    }
    emit(Json{{"witness", to_json(std::get<CycleCertificate>(r))}});
    return kFails;
}

int run_ramsey(const std::vector<std::uint64_t>& demo, std::uint64_t trials)
{
    const int n = static_cast<int>(demo.at(0));
    const int d = static_cast<int>(demo.at(1));
    const std::uint64_t seed = demo.at(2);
    if (d < 1 || n < d + 3)
        throw CLI::ValidationError("--demo", "needs d >= 1 and n >= d + 3");
    std::uint64_t blue = 0;
    std::uint64_t sets = 0;
    std::uint64_t cliques = 0;
    std::mt19937_64 engine(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const auto c = ramsey_coloring(random_tournament(n, d, engine()));
        blue += c.blue_count();
        sets += c.blue.size();
        cliques += has_blue_clique(c, d + 3) ? 1 : 0;
    }
    emit(Json{{"n", n},
              {"d", d},
              {"seed", seed},
              {"trials", trials},
              {"blue_fraction", static_cast<double>(blue) / static_cast<double>(sets)},
              {"expected_fraction", std::ldexp(1.0, -(d + 1))},
              {"blue_cliques_of_size_d_plus_3", cliques}});
    return cliques == 0 ? kHolds : kFails;
}

int run_info(const std::string& input)
{
    const Tournament t = load_tournament(input);
    Json free = Json::array();
    for (const auto& f : free_faces(t))
        free.push_back(face_json(f));
    Json j{{"n", t.n()},
           {"d", t.d()},
           {"faces", t.face_count()},
           {"oriented", t.oriented_count()},
           {"complete", t.is_complete()},
           {"degree_sequence", degree_sequence(t)},
           {"free_faces", std::move(free)}};
    if (t.is_complete() && t.n() >= t.d() + 2)
        j["d2_cycles"] = count_d_plus_2_cycles(t);
    emit(j);
    return kHolds;
}

void report_error(const std::string& kind, const std::string& message)
{
    std::cerr << Json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"d-dimensional tournaments: cycles, collapses, chambers and census"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "dtour 1.0");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Decide a property of a tournament (exit 0 holds, 1 fails)");
    check_cmd->add_option("input", check.input, "Tournament JSON file, '-' for stdin")->capture_default_str();
    check_cmd->add_option("--property", check.property, "Property to decide")
        ->required()
        ->check(CLI::IsMember({"acyclic", "collapsible", "zero-one-acyclic", "k2cycle-free"}));
    check_cmd->add_option("--cap", check.cap, "Face cap for the exhaustive searches (0 = default)");
    check_cmd->add_option("--threads", check.threads, "Worker threads for k2cycle-free (0 = all)");

    std::string extract_input = "-";
    std::string extract_order = "reverse-lexicographic";
    auto* extract_cmd = app.add_subcommand("extract", "Greedy acyclic subtournament; JSON lines trace");
    extract_cmd->add_option("input", extract_input, "Tournament JSON file")->capture_default_str();
    extract_cmd->add_option("--order", extract_order, "Face order")
        ->check(CLI::IsMember({"reverse-lexicographic", "reverse-colexicographic"}))
        ->capture_default_str();

    std::string max_input = "-";
    int max_cap = 12;
    auto* max_cmd = app.add_subcommand("max-acyclic", "Largest acyclic subtournament by exhaustive search");
    max_cmd->add_option("input", max_input, "Tournament JSON file")->capture_default_str();
    max_cmd->add_option("--cap", max_cap, "Largest n accepted")->capture_default_str();

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "Enumerate all complete tournaments on n vertices");
    census_cmd->add_option("--n", census.n, "Vertices")->required();
    census_cmd->add_option("--d", census.d, "Dimension")->required();
    census_cmd->add_option("--predicates", census.predicates,
                           "Comma list of acyclic, collapsible, zero-one-acyclic, k2cycle-free, realizable, or all")
        ->capture_default_str();
    census_cmd->add_option("--threads", census.threads, "Worker threads (0 = all)")->capture_default_str();
    census_cmd->add_option("--format", census.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    census_cmd->add_option("--budget", census.budget, "Largest number of tournaments enumerated")->capture_default_str();
    census_cmd->add_option("--samples", census.samples, "Random configurations for realizable hits")
        ->capture_default_str();
    census_cmd->add_option("--seed", census.seed, "Seed for realizable hits")->capture_default_str();
    census_cmd->add_option("--orbits", census.orbits, "Also count isomorphism classes under this convention")
        ->check(CLI::IsMember({"relabel-only", "relabel-or-global-reversal"}));

    std::string gallery_name;
    auto* gallery_cmd = app.add_subcommand("gallery", "List fixtures, or emit one with --name");
    gallery_cmd->add_option("--name", gallery_name, "Fixture name");

    int random_n = 0;
    int random_d = 0;
    std::uint64_t random_seed = 0;
    bool random_acyclic = false;
    auto* random_cmd = app.add_subcommand("random", "Seeded random tournament");
    random_cmd->add_option("--n", random_n, "Vertices")->required();
    random_cmd->add_option("--d", random_d, "Dimension")->required();
    random_cmd->add_option("--seed", random_seed, "Seed")->required();
    random_cmd->add_flag("--acyclic", random_acyclic, "Sample from the link-assembly family instead");

    std::string points_path;
    auto* realize_cmd = app.add_subcommand("realize", "Order type of a point configuration");
    realize_cmd->add_option("--points", points_path, "Point configuration JSON")->required();

    std::string to_point;
    std::string from_point;
    auto* chamber_cmd = app.add_subcommand("chamber", "Convert between tournaments and chamber points");
    auto* to_opt = chamber_cmd->add_option("--to-point", to_point, "Tournament JSON file");
    auto* from_opt = chamber_cmd->add_option("--from-point", from_point, "Chamber point JSON file");
    to_opt->excludes(from_opt);
    chamber_cmd->require_option(1);

    std::vector<std::uint64_t> demo;
    std::uint64_t trials = 200;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Blue (d+2)-cycle statistics over random tournaments");
    ramsey_cmd->add_option("--demo", demo, "n d seed")->expected(3)->required();
    ramsey_cmd->add_option("--trials", trials, "Random tournaments drawn")->capture_default_str();

    std::string info_input = "-";
    auto* info_cmd = app.add_subcommand("info", "Summary of a tournament");
    info_cmd->add_option("input", info_input, "Tournament JSON file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check_cmd)
            return run_check(check);
        if (*extract_cmd)
            return run_extract(extract_input, extract_order);
        if (*max_cmd)
            return run_max_acyclic(max_input, max_cap);
        if (*census_cmd)
            return run_census(census);
        if (*gallery_cmd)
            return run_gallery(gallery_name);
        if (*random_cmd)
            return run_random(random_n, random_d, random_seed, random_acyclic);
        if (*realize_cmd)
            return run_realize(points_path);
        if (*chamber_cmd)
            return run_chamber(to_point, from_point);
        if (*ramsey_cmd)
            return run_ramsey(demo, trials);
        if (*info_cmd)
            return run_info(info_input);
    } catch (const InstanceTooLarge& e) {
        report_error("instance-too-large", e.what());
        return kTooLarge;
    } catch (const CLI::Error& e) {
        report_error("usage", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        report_error("input", e.what());
        return kUsage;
    }
    return kUsage;
}
