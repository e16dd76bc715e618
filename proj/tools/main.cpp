#include "passoc/errors.hpp"
#include "passoc/io.hpp"
#include "passoc/oracle.hpp"
#include "passoc/realization.hpp"
#include "passoc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

using namespace passoc;
using nlohmann::ordered_json;

namespace {

enum Status { ok = 0, domain_error = 1, usage_error = 2, verification_failed = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    bool maximal = false;
    bool lattice = false;
    bool oracle = false;
    bool json = false;
    bool allow_large_epsilon = false;
    std::string format;
    std::string variant = "covers";
    std::string epsilon;
    std::string tube;
    std::string name;
    std::uint64_t seed = 1;
    std::size_t max_elements = 7;
    std::int64_t max_order = 4;
};

ordered_json rationals(const std::vector<Rational>& v)
{
    ordered_json out = ordered_json::array();
    for (const auto& q : v)
        out.push_back(to_string(q));
    return out;
}

std::string vector_text(const std::vector<Rational>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + to_string(v[i]);
    return out + ")";
}

std::string int_list(const std::vector<std::int64_t>& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + std::to_string(v[i]);
    return out + ")";
}

// Tubings as nested arrays of element identifiers.
ordered_json tubing_json(const TubeCatalog& c, const Tubing& t)
{
    ordered_json out = ordered_json::array();
    for (auto i : t.tubes)
        out.push_back(c.poset().member_names(c[i].members()));
    return out;
}

ordered_json tubing_json(const AffineTubeCatalog& c, const Tubing& t)
{
    ordered_json out = ordered_json::array();
    for (auto i : t.tubes)
        out.push_back(c[i].members());
    return out;
}

ordered_json system_json(const HalfSpaceSystem& s)
{
    auto rows = [](const std::vector<Constraint>& cs) {
        ordered_json out = ordered_json::array();
        for (const auto& c : cs)
            out.push_back({{"label", c.label},
                           {"coefficients", rationals(c.functional.coefficients)},
                           {"rhs", to_string(c.rhs)}});
        return out;
    };
    return {{"variables", s.variables()}, {"equalities", rows(s.equalities())}, {"inequalities", rows(s.inequalities())}};
}

void print_system(const HalfSpaceSystem& s)
{
    std::cout << "variables: ";
    for (std::size_t i = 0; i < s.dimension(); ++i)
        std::cout << (i ? " " : "") << s.variables()[i];
    std::cout << "\nequalities: " << s.equalities().size() << '\n';
    for (const auto& c : s.equalities())
        std::cout << "  " << c.label << ": " << vector_text(c.functional.coefficients) << " = " << to_string(c.rhs)
                  << '\n';
    std::cout << "inequalities: " << s.inequalities().size() << '\n';
    for (const auto& c : s.inequalities())
        std::cout << "  " << c.label << ": " << vector_text(c.functional.coefficients)
                  << " >= " << to_string(c.rhs) << '\n';
}

std::string json_text(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

// A loaded input with everything the subcommands share.
struct Loaded {
    PosetInput input;
    std::optional<TubeCatalog> finite;
    std::optional<AffineTubeCatalog> affine;
};

Loaded load(const Options& o)
{
    Loaded l{o.input == "-" ? parse_poset_input(std::string(std::istreambuf_iterator<char>(std::cin), {}))
                            : read_poset_file(o.input),
             std::nullopt, std::nullopt};
    if (l.input.is_affine())
        l.affine.emplace(*l.input.affine);
    else
        l.finite.emplace(*l.input.finite);
    return l;
}

void require_finite(const Loaded& l, const char* what)
{
    if (!l.finite)
        throw UsageError(std::string(what) + " needs a finite poset");
}

AlphaVariant variant_of(const Options& o)
{
    try {
        return parse_alpha_variant(o.variant);
    } catch (const InvalidInputError& e) {
        throw UsageError(e.what());
    }
}

HalfSpaceSystem system_of(const Loaded& l, const Options& o)
{
    if (l.affine) {
        if (!o.epsilon.empty() || o.variant != "covers")
            throw UsageError("--epsilon and --variant apply to finite posets only");
        return build_cyclohedron(*l.affine);
    }
    if (!o.epsilon.empty()) {
        if (o.variant != "covers")
            throw UsageError("--epsilon and --variant cannot be combined");
        auto range = o.allow_large_epsilon ? EpsilonRange::unit_interval : EpsilonRange::guaranteed;
        return epsilon_realization(l.finite->poset(), parse_rational(o.epsilon), range);
    }
    return build_associahedron(l.finite->poset(), variant_of(o));
}

std::vector<Tubing> maximal_of(const Loaded& l)
{
    return l.finite ? enumerate_maximal_tubings(*l.finite) : enumerate_maximal_affine_tubings(*l.affine);
}

std::vector<Tubing> proper_of(const Loaded& l)
{
    return l.finite ? enumerate_proper_tubings(*l.finite) : enumerate_affine_proper_tubings(*l.affine);
}

std::string format_of(const Loaded& l, const Tubing& t)
{
    return l.finite ? l.finite->format(t) : l.affine->format(t);
}

ordered_json tubing_json(const Loaded& l, const Tubing& t)
{
    return l.finite ? tubing_json(*l.finite, t) : tubing_json(*l.affine, t);
}

RationalPoint vertex_of(const Loaded& l, const Tubing& t, AlphaVariant v)
{
    return l.finite ? vertex_of_tubing(*l.finite, t, v) : affine_vertex_of_tubing(*l.affine, t);
}

int cmd_tubings(const Options& o)
{
    auto l = load(o);
    auto tubings = o.maximal ? maximal_of(l) : proper_of(l);
    if (o.lattice) {
        std::cout << tubing_lattice_dot(tubings, [&](const Tubing& t) { return format_of(l, t); });
        return ok;
    }
    for (const auto& t : tubings)
        std::cout << tubing_json(l, t).dump() << '\n';
    return ok;
}

int print_oracle_vertices(const HalfSpaceSystem& s, bool json)
{
    auto certs = brute_force_vertices(s);
    if (json) {
        ordered_json out = system_json(s);
        out["vertices"] = ordered_json::array();
        for (const auto& c : certs)
            out["vertices"].push_back({{"point", rationals(c.point.coords)}, {"tight", c.tight}});
        std::cout << json_text(out);
        return ok;
    }
    std::cout << "vertices: " << certs.size() << '\n';
    for (const auto& c : certs) {
        std::cout << "  " << vector_text(c.point.coords) << " tight:";
        for (const auto& t : c.tight)
            std::cout << ' ' << t;
        std::cout << '\n';
    }
    return ok;
}

int cmd_realize(const Options& o)
{
    auto l = load(o);
    auto system = system_of(l, o);
    const std::string fmt = o.format.empty() ? "text" : o.format;
    if (fmt == "ine") {
        std::cout << write_ine(system);
        return ok;
    }
    if (fmt == "off") {
        std::cout << write_off(system, brute_force_vertices(system));
        return ok;
    }
    if (!o.epsilon.empty()) {
        if (fmt == "text")
            print_system(system);
        return print_oracle_vertices(system, fmt == "json");
    }

    auto maximal = maximal_of(l);
    const auto variant = l.finite ? variant_of(o) : AlphaVariant::covers;
    if (fmt == "json") {
        ordered_json out = system_json(system);
        out["vertices"] = ordered_json::array();
        for (const auto& t : maximal)
            out["vertices"].push_back({{"tubing", tubing_json(l, t)}, {"point", rationals(vertex_of(l, t, variant).coords)}});
        std::cout << json_text(out);
        return ok;
    }
    print_system(system);
    std::cout << "vertices: " << maximal.size() << '\n';
    for (const auto& t : maximal)
        std::cout << "  " << format_of(l, t) << ": " << vector_text(vertex_of(l, t, variant).coords) << '\n';
    return ok;
}

int cmd_vertices(const Options& o)
{
    auto l = load(o);
    auto system = system_of(l, o);
    if (o.oracle || !o.epsilon.empty())
        return print_oracle_vertices(system, o.json);
    const auto variant = l.finite ? variant_of(o) : AlphaVariant::covers;
    auto maximal = maximal_of(l);
    if (o.json) {
        ordered_json out = ordered_json::array();
        for (const auto& t : maximal)
            out.push_back({{"tubing", tubing_json(l, t)}, {"point", rationals(vertex_of(l, t, variant).coords)}});
        std::cout << json_text(out);
        return ok;
    }
    for (const auto& t : maximal)
        std::cout << format_of(l, t) << ": " << vector_text(vertex_of(l, t, variant).coords) << '\n';
    return ok;
}

int cmd_fvector(const Options& o)
{
    auto l = load(o);
    const std::size_t d = l.finite ? l.finite->dimension() : l.affine->dimension();
    auto fh = f_vector(proper_of(l), d);
    std::optional<OutdegreeResult> outdegree;
    if (l.finite)
        outdegree = h_vector_by_seeded_outdegree(*l.finite, o.seed);
    if (o.json) {
        ordered_json out{{"dimension", d}, {"f", fh.f}, {"h", fh.h}};
        if (outdegree)
            out["outdegree"] = {{"histogram", outdegree->histogram},
                                {"seed", outdegree->seed},
                                {"direction", rationals(outdegree->direction.coefficients)}};
        std::cout << json_text(out);
        return ok;
    }
    std::cout << "dimension: " << d << "\nf: " << int_list(fh.f) << "\nh: " << int_list(fh.h) << '\n';
    if (outdegree)
        std::cout << "outdegree: " << int_list(outdegree->histogram) << " (seed " << outdegree->seed << ", direction "
                  << vector_text(outdegree->direction.coefficients) << ")\n";
    return ok;
}

ordered_json report_json(const VerificationReport& r)
{
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
    return {{"subject", r.subject}, {"passed", r.passed()}, {"dimension", r.dimension}, {"vertices", r.vertices},
            {"edges", r.edges},     {"facets", r.facets},   {"f", r.f},                 {"h", r.h},
            {"checks", checks}};
}

int cmd_verify(const Options& o)
{
    auto input = o.input == "-" ? parse_poset_input(std::string(std::istreambuf_iterator<char>(std::cin), {}))
                                : read_poset_file(o.input);
    VerifyOptions vo;
    vo.max_elements = o.max_elements;
    vo.max_order = o.max_order;
    VerificationReport report;
    if (input.is_affine()) {
        if (o.variant != "covers")
            throw UsageError("--variant applies to finite posets only");
        report = verify_affine_realization(*input.affine, vo);
    } else {
        vo.variant = variant_of(o);
        report = verify_realization(*input.finite, vo);
    }
    std::cout << (o.json ? json_text(report_json(report)) : report.to_text());
    return report.passed() ? ok : verification_failed;
}

std::vector<std::string> split_names(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int cmd_contract(const Options& o)
{
    auto l = load(o);
    require_finite(l, "contract");
    const auto& p = l.finite->poset();
    std::cout << write_poset(contract(p, p.subset(split_names(o.tube)), o.name));
    return ok;
}

int cmd_export(const Options& o)
{
    auto l = load(o);
    if (o.format == "dot") {
        if (o.lattice)
            std::cout << tubing_lattice_dot(proper_of(l), [&](const Tubing& t) { return format_of(l, t); });
        else
            std::cout << (l.finite ? hasse_dot(l.finite->poset()) : affine_hasse_dot(l.affine->poset()));
        return ok;
    }
    auto system = system_of(l, o);
    if (o.format == "ine")
        std::cout << write_ine(system);
    else
        std::cout << write_off(system, brute_force_vertices(system));
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Poset associahedra and affine poset cyclohedra with exact arithmetic"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "poset file, or - for stdin")->required(); };
    auto add_realization_flags = [&](CLI::App* sub) {
        sub->add_option("--variant", o.variant, "alpha variant")->check(CLI::IsMember({"covers", "all_pairs", "minmax"}));
        sub->add_option("--epsilon", o.epsilon, "bounded-poset realization with this rational epsilon");
        sub->add_flag("--allow-large-epsilon", o.allow_large_epsilon, "accept any epsilon in (0, 1)");
    };

    auto* tubings = app.add_subcommand("tubings", "list proper tubings");
    add_input(tubings);
    tubings->add_flag("--maximal", o.maximal, "maximal tubings only");
    tubings->add_flag("--lattice", o.lattice, "reverse-inclusion Hasse diagram as DOT");

    auto* realize = app.add_subcommand("realize", "half-space system and vertices");
    add_input(realize);
    add_realization_flags(realize);
    realize->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "ine", "off"}));

    auto* vertices = app.add_subcommand("vertices", "vertices of the realization");
    add_input(vertices);
    add_realization_flags(vertices);
    vertices->add_flag("--oracle", o.oracle, "enumerate by brute force instead of from tubings");
    vertices->add_flag("--json", o.json, "JSON output");

    auto* fvector = app.add_subcommand("fvector", "f-vector, h-vector and outdegree histogram");
    add_input(fvector);
    fvector->add_option("--seed", o.seed, "seed for the random generic direction");
    fvector->add_flag("--json", o.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "audit the realization against the oracle");
    add_input(verify);
    verify->add_flag("--json", o.json, "JSON report");
    verify->add_option("--variant", o.variant, "alpha variant")->check(CLI::IsMember({"covers", "all_pairs", "minmax"}));
    verify->add_option("--max-elements", o.max_elements, "size limit for finite posets");
    verify->add_option("--max-order", o.max_order, "order limit for affine posets");

    auto* contract = app.add_subcommand("contract", "contract a tube to a single element");
    add_input(contract);
    contract->add_option("--tube", o.tube, "comma-separated element names")->required();
    contract->add_option("--name", o.name, "name of the merged element");

    auto* exporter = app.add_subcommand("export", "DOT, ine or OFF export");
    add_input(exporter);
    add_realization_flags(exporter);
    exporter->add_option("--format", o.format, "dot, ine or off")->required()->check(CLI::IsMember({"dot", "ine", "off"}));
    exporter->add_flag("--lattice", o.lattice, "with --format dot: the tubing lattice");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (o.lattice && o.format != "dot" && !tubings->parsed())
            throw UsageError("--lattice needs --format dot");
        if (*tubings)
            return cmd_tubings(o);
        if (*realize)
            return cmd_realize(o);
        if (*vertices)
            return cmd_vertices(o);
        if (*fvector)
            return cmd_fvector(o);
        if (*verify)
            return cmd_verify(o);
        if (*contract)
            return cmd_contract(o);
        return cmd_export(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return domain_error;
    }
}
