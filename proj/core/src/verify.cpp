#include "passoc/verify.hpp"

#include "passoc/errors.hpp"
#include "passoc/oracle.hpp"
#include "passoc/poset_family.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace passoc {

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

std::string join(const std::vector<std::int64_t>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? " " : "") + std::to_string(v[i]);
    return out;
}

std::string format_point(const RationalPoint& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.dimension(); ++i)
        out += (i ? ", " : "") + to_string(p[i]);
    return out + ")";
}

class Recorder {
public:
    // Checks are handed out by reference, so the list must not reallocate.
    Recorder(VerificationReport& r, std::size_t limit) : report_(r), limit_(limit) { report_.checks.reserve(32); }

    CheckResult& start(std::string name, std::string detail)
    {
        report_.checks.push_back({std::move(name), true, std::move(detail), {}});
        return report_.checks.back();
    }

    void fail(CheckResult& c, std::string witness)
    {
        c.passed = false;
        if (c.witnesses.size() < limit_)
            c.witnesses.push_back(std::move(witness));
    }

private:
    VerificationReport& report_;
    std::size_t limit_;
};

// What the shared checks need to know about one realized polytope.
struct Instance {
    const HalfSpaceSystem& system;
    std::size_t dimension;
    std::vector<Tubing> proper;
    std::vector<Tubing> maximal;
    std::vector<RationalPoint> points; // one per maximal tubing
    std::function<std::string(std::size_t)> label;
    std::function<std::string(const Tubing&)> format;
};

std::size_t shared_tubes(const Tubing& a, const Tubing& b)
{
    std::vector<std::size_t> common;
    std::set_intersection(a.tubes.begin(), a.tubes.end(), b.tubes.begin(), b.tubes.end(), std::back_inserter(common));
    return common.size();
}

void shared_checks(const Instance& in, VerificationReport& report, Recorder& rec)
{
    const std::size_t d = in.dimension;
    report.dimension = d;
    auto fh = f_vector(in.proper, d);
    report.f = fh.f;
    report.h = fh.h;

    std::vector<VertexCertificate> oracle;
    auto& bounded = rec.start("bounded", "the oracle finds a bounded region");
    try {
        oracle = brute_force_vertices(in.system);
    } catch (const UnboundedError& e) {
        rec.fail(bounded, e.what());
    }
    report.vertices = oracle.size();

    // (a) vertex sets
    {
        std::map<RationalPoint, std::size_t> from_tubings;
        auto& inj = rec.start("injective", "distinct maximal tubings give distinct points");
        for (std::size_t i = 0; i < in.maximal.size(); ++i) {
            auto [it, fresh] = from_tubings.emplace(in.points[i], i);
            if (!fresh)
                rec.fail(inj, in.format(in.maximal[it->second]) + " and " + in.format(in.maximal[i]) + " share " +
                                  format_point(in.points[i]));
        }
        auto& vs = rec.start("vertices", "oracle vertices equal the tubing vertices (" +
                                             std::to_string(in.maximal.size()) + " maximal tubings)");
        std::set<RationalPoint> found;
        for (const auto& c : oracle) {
            found.insert(c.point);
            if (!from_tubings.count(c.point))
                rec.fail(vs, "oracle vertex " + format_point(c.point) + " has no tubing");
        }
        for (std::size_t i = 0; i < in.maximal.size(); ++i)
            if (!found.count(in.points[i]))
                rec.fail(vs, in.format(in.maximal[i]) + " gives " + format_point(in.points[i]) +
                                 ", not an oracle vertex");
    }

    // (b) simplicity
    {
        auto& simple = rec.start("simple", "every vertex lies on exactly " + std::to_string(d) + " facets");
        for (const auto& c : oracle)
            if (c.tight.size() != d)
                rec.fail(simple, format_point(c.point) + " is tight on " + std::to_string(c.tight.size()));
    }

    // (c) facets
    {
        auto facets = facet_labels(in.system, oracle);
        report.facets = facets.size();
        auto& fc = rec.start("facets", "every inequality defines a facet");
        for (const auto& c : in.system.inequalities())
            if (std::find(facets.begin(), facets.end(), c.label) == facets.end())
                rec.fail(fc, c.label + " is redundant");
    }

    // (f) face lattice
    {
        auto& lattice = rec.start("face-lattice", "each proper tubing is exactly the tight set of its face, of dimension d - |T|");
        std::vector<std::vector<std::string>> tight;
        for (const auto& pt : in.points) {
            auto t = in.system.tight_labels(pt);
            std::sort(t.begin(), t.end());
            tight.push_back(std::move(t));
        }
        for (const auto& t : in.proper) {
            std::vector<std::string> common;
            std::vector<RationalPoint> face;
            bool first = true;
            for (std::size_t i = 0; i < in.maximal.size(); ++i) {
                if (!in.maximal[i].includes(t))
                    continue;
                face.push_back(in.points[i]);
                if (first) {
                    common = tight[i];
                    first = false;
                } else {
                    std::vector<std::string> next;
                    std::set_intersection(common.begin(), common.end(), tight[i].begin(), tight[i].end(),
                                          std::back_inserter(next));
                    common = std::move(next);
                }
            }
            std::vector<std::string> expected;
            for (auto idx : t.tubes)
                expected.push_back(in.label(idx));
            std::sort(expected.begin(), expected.end());
            if (face.empty() || common != expected)
                rec.fail(lattice, in.format(t) + " has the wrong tight set");
            else if (affine_dimension(face) != static_cast<int>(d - t.size()))
                rec.fail(lattice, in.format(t) + " spans dimension " + std::to_string(affine_dimension(face)));
        }
    }

    // edges: geometric adjacency against tubings sharing all but one tube
    {
        auto& edges = rec.start("edges", "geometric edges are the pairs of tubings sharing all but one tube");
        std::map<RationalPoint, std::size_t> index;
        for (std::size_t i = 0; i < in.maximal.size(); ++i)
            index.emplace(in.points[i], i);
        std::set<std::pair<std::size_t, std::size_t>> geometric;
        for (auto [a, b] : vertex_edges(in.system, oracle)) {
            auto ia = index.find(oracle[a].point);
            auto ib = index.find(oracle[b].point);
            if (ia == index.end() || ib == index.end())
                continue;
            geometric.emplace(std::min(ia->second, ib->second), std::max(ia->second, ib->second));
        }
        report.edges = geometric.size();
        for (std::size_t a = 0; a < in.maximal.size(); ++a)
            for (std::size_t b = a + 1; b < in.maximal.size(); ++b) {
                bool combinatorial = d > 0 && shared_tubes(in.maximal[a], in.maximal[b]) + 1 == d;
                if (combinatorial != geometric.count({a, b}))
                    rec.fail(edges, in.format(in.maximal[a]) + " -- " + in.format(in.maximal[b]));
            }
    }

    // Euler: sum (-1)^i f_i = 1 including the polytope itself.
    {
        auto& euler = rec.start("euler", "alternating sum of the f-vector is 1");
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < fh.f.size(); ++i)
            sum += (i % 2 ? -1 : 1) * fh.f[i];
        if (sum != 1)
            rec.fail(euler, "alternating sum " + std::to_string(sum));
        if (!fh.f.empty() && static_cast<std::size_t>(fh.f[0]) != report.vertices)
            rec.fail(euler, "f_0 = " + std::to_string(fh.f[0]) + " but the oracle found " +
                                std::to_string(report.vertices) + " vertices");
        if (!fh.f.empty() && d > 0 && static_cast<std::size_t>(fh.f[d - 1]) != report.facets)
            rec.fail(euler, "f_(d-1) = " + std::to_string(fh.f[d - 1]) + " but " + std::to_string(report.facets) +
                                " facets");
    }

    {
        auto& ds = rec.start("dehn-sommerville", "h is palindromic");
        auto rev = fh.h;
        std::reverse(rev.begin(), rev.end());
        if (rev != fh.h)
            rec.fail(ds, "h = " + join(fh.h));
    }
}

} // namespace

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    out << "subject: " << subject << '\n';
    out << "dimension: " << dimension << '\n';
    out << "vertices: " << vertices << '\n';
    out << "edges: " << edges << '\n';
    out << "facets: " << facets << '\n';
    out << "f: " << join(f) << '\n';
    out << "h: " << join(h) << '\n';
    for (const auto& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
        for (const auto& w : c.witnesses)
            out << "  witness: " << w << '\n';
    }
    out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

VerificationReport verify_realization(const Poset& p, const VerifyOptions& options)
{
    if (p.size() > options.max_elements)
        throw InvalidInputError("verification is limited to " + std::to_string(options.max_elements) + " elements");
    if (!is_connected(p))
        throw NotConnectedError("the Hasse diagram is not connected");

    VerificationReport report;
    report.subject = p.format(p.all());
    Recorder rec(report, options.max_witnesses);

    const TubeCatalog catalog(p);
    const auto system = build_associahedron(p, options.variant);
    auto proper = enumerate_proper_tubings(catalog);
    std::vector<Tubing> maximal;
    auto& structure = rec.start("maximal-size", "every inclusion-maximal tubing has |P| - 2 tubes");
    try {
        maximal = enumerate_maximal_tubings(catalog);
    } catch (const InvariantViolation& e) {
        rec.fail(structure, e.what());
        return report;
    }

    std::vector<RationalPoint> points;
    auto& solvable = rec.start("solvable", "each maximal tubing determines a unique point");
    std::vector<Tubing> solved;
    for (const auto& t : maximal) {
        try {
            points.push_back(vertex_of_tubing(catalog, t, options.variant));
            solved.push_back(t);
        } catch (const SingularSystemError&) {
            rec.fail(solvable, catalog.format(t));
        }
    }

    Instance in{system,
                catalog.dimension(),
                proper,
                solved,
                points,
                [&](std::size_t i) { return catalog.label(i); },
                [&](const Tubing& t) { return catalog.format(t); }};
    shared_checks(in, report, rec);

    // (d) strict interiority
    {
        auto& interior = rec.start("interior", "alpha_t(v^T) > n^(2|t|) for every tube t outside T");
        for (std::size_t i = 0; i < solved.size(); ++i)
            for (std::size_t t = 0; t < catalog.size(); ++t)
                if (!solved[i].contains(t) &&
                    !strictly_interior(p, points[i], catalog[t].members(), options.variant))
                    rec.fail(interior, catalog.format(solved[i]) + " on " + catalog.label(t));
    }

    // (e) incompatible pairs and precedence cycles
    {
        auto& pairs = rec.start("overlap-infeasible", "overlapping tube pairs cannot be tight together");
        for (std::size_t a = 0; a < catalog.size(); ++a)
            for (std::size_t b = a + 1; b < catalog.size(); ++b)
                if (!catalog.compatible(a, b) &&
                    feasible_with_equalities(system, {catalog.label(a), catalog.label(b)}))
                    rec.fail(pairs, catalog.label(a) + " & " + catalog.label(b));

        auto cycles = precedence_cycles(catalog, options.cycle_length);
        auto& cyc = rec.start("cycle-infeasible", std::to_string(cycles.size()) +
                                                      " precedence cycles cannot be tight together");
        for (const auto& c : cycles) {
            std::vector<std::string> labels;
            for (auto t : c)
                labels.push_back(catalog.label(t));
            if (feasible_with_equalities(system, labels))
                rec.fail(cyc, catalog.format(Tubing{c}));
        }
    }
    return report;
}

VerificationReport verify_affine_realization(const AffinePoset& p, const VerifyOptions& options)
{
    if (p.order() > options.max_order)
        throw InvalidInputError("affine verification is limited to order " + std::to_string(options.max_order));
    if (p.order() < 2)
        throw InvalidInputError("affine verification needs order >= 2");

    const std::int64_t n = p.order();
    VerificationReport report;
    report.subject = "affine poset of order " + std::to_string(n);
    Recorder rec(report, options.max_witnesses);

    const AffineTubeCatalog catalog(p);
    const auto system = build_cyclohedron(catalog);
    auto proper = enumerate_affine_proper_tubings(catalog);
    std::vector<Tubing> maximal;
    auto& structure = rec.start("maximal-size", "every maximal tubing has n - 1 orbits, one of size n");
    try {
        maximal = enumerate_maximal_affine_tubings(catalog);
    } catch (const InvariantViolation& e) {
        rec.fail(structure, e.what());
        return report;
    }

    std::vector<RationalPoint> points;
    std::vector<Tubing> solved;
    auto& solvable = rec.start("solvable", "each maximal tubing determines a unique point");
    for (const auto& t : maximal) {
        try {
            points.push_back(affine_vertex_of_tubing(catalog, t));
            solved.push_back(t);
        } catch (const SingularSystemError&) {
            rec.fail(solvable, catalog.format(t));
        }
    }

    Instance in{system,
                catalog.dimension(),
                proper,
                solved,
                points,
                [&](std::size_t i) { return catalog.label(i); },
                [&](const Tubing& t) { return catalog.format(t); }};
    shared_checks(in, report, rec);

    {
        auto& interior = rec.start("interior", "alpha_t(v^T) > n^(2|t|) for every orbit t outside T");
        for (std::size_t i = 0; i < solved.size(); ++i)
            for (std::size_t t = 0; t < catalog.size(); ++t)
                if (!solved[i].contains(t) && !affine_strictly_interior(p, points[i], catalog[t]))
                    rec.fail(interior, catalog.format(solved[i]) + " on " + catalog.label(t));
    }

    {
        auto& pairs = rec.start("overlap-infeasible", "orbits with overlapping copies cannot be tight together");
        auto& cyc = rec.start("cycle-infeasible", "compatible orbit pairs with cyclic copies cannot be tight together");
        for (std::size_t a = 0; a < catalog.size(); ++a)
            for (std::size_t b = a + 1; b < catalog.size(); ++b) {
                const std::vector<std::string> labels{catalog.label(a), catalog.label(b)};
                if (!catalog.compatible(a, b)) {
                    if (feasible_with_equalities(system, labels))
                        rec.fail(pairs, labels[0] + " & " + labels[1]);
                } else if (!catalog.is_proper_tubing(Tubing{{a, b}})) {
                    if (feasible_with_equalities(system, labels))
                        rec.fail(cyc, labels[0] + " & " + labels[1]);
                }
            }
    }

    {
        auto& inv = rec.start("orbit-invariance", "shifting a tube by kn leaves its functional unchanged");
        for (const auto& orbit : catalog.orbits()) {
            auto base = affine_alpha(p, orbit);
            for (std::int64_t k = -2; k <= 2; ++k)
                if (affine_alpha(p, orbit.shifted(k * n)) != base)
                    rec.fail(inv, orbit.format() + " shifted by " + std::to_string(k * n));
        }
    }

    {
        auto& gap = rec.start("period-gap", "c exceeds 2 n^(2n)");
        Integer bound = 2 * ipow(Integer(n), static_cast<unsigned>(2 * n));
        if (p.period_constant() <= bound)
            rec.fail(gap, "c = " + p.period_constant().str());
    }
    return report;
}

} // namespace passoc
