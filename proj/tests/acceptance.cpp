// Acceptance suite: one line per criterion, exit status 1 if any fails.
//
//   passoc_acceptance [--seed N] [--report FILE]
//
// The suite runs twice with the same seed; the second run only feeds the
// determinism check. Timings are printed but kept out of the report.

#include "support.hpp"

#include "passoc/affine.hpp"
#include "passoc/errors.hpp"
#include "passoc/oracle.hpp"
#include "passoc/poset_family.hpp"
#include "passoc/realization.hpp"
#include "passoc/tubing.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace passoc;

namespace {

struct Outcome {
    int id = 0;
    std::string title;
    bool passed = true;
    std::string detail;
    double seconds = 0;
};

// Collects failures; only the first few are kept in the detail.
class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 3)
            notes_ += (notes_.empty() ? "" : "; ") + what;
    }
    bool passed() const { return failures_ == 0; }
    std::size_t checks() const { return checks_; }
    std::string summary(const std::string& ok_text) const
    {
        if (passed())
            return ok_text + ", " + std::to_string(checks_) + " checks";
        return std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + notes_;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::string notes_;
};

std::string join(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::set<RationalPoint> as_set(const std::vector<RationalPoint>& pts)
{
    return {pts.begin(), pts.end()};
}

std::set<RationalPoint> as_set(const std::vector<VertexCertificate>& certs)
{
    std::set<RationalPoint> out;
    for (const auto& c : certs)
        out.insert(c.point);
    return out;
}

std::set<std::string> tube_labels(const TubeCatalog& c)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        out.insert(c.label(i));
    return out;
}

std::set<std::string> tube_labels(const AffineTubeCatalog& c)
{
    std::set<std::string> out;
    for (std::size_t i = 0; i < c.size(); ++i)
        out.insert(c.label(i));
    return out;
}

bool simple(const std::vector<VertexCertificate>& vertices, std::size_t d)
{
    return std::all_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v.tight.size() == d; });
}

Outcome chains()
{
    Tally t;
    std::string counts;
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto p = testing::chain(n);
        TubeCatalog catalog(p);
        const auto maximal = enumerate_maximal_tubings(catalog);
        const auto realized = tubing_vertices(catalog, maximal);
        const auto system = build_associahedron(p);
        const auto oracle = brute_force_vertices(system);
        const auto expected = static_cast<std::size_t>(testing::catalan(static_cast<std::int64_t>(n) - 1));
        const std::string tag = "chain " + std::to_string(n);
        t.check(oracle.size() == expected, tag + ": " + std::to_string(oracle.size()) + " vertices");
        t.check(as_set(realized).size() == maximal.size(), tag + ": tubing vertices collide");
        t.check(as_set(realized) == as_set(oracle), tag + ": oracle vertex set differs");
        t.check(affine_dimension(std::vector<RationalPoint>(realized)) == static_cast<int>(n - 2),
                tag + ": wrong dimension");
        t.check(simple(oracle, n - 2), tag + ": not simple");
        counts += (counts.empty() ? "" : " ") + std::to_string(oracle.size());
    }
    return {1, "chain associahedra", t.passed(), t.summary("vertices " + counts)};
}

Outcome pentagon(std::uint64_t seed)
{
    Tally t;
    TubeCatalog catalog(testing::chain(4));
    const auto fh = f_vector(catalog);
    t.check(fh.f == std::vector<std::int64_t>{5, 5, 1}, "f = " + join(fh.f));
    t.check(fh.h == std::vector<std::int64_t>{1, 3, 1}, "h = " + join(fh.h));
    std::vector<std::int64_t> reversed(fh.h.rbegin(), fh.h.rend());
    t.check(fh.h == reversed, "h is not symmetric");
    std::string seed_note;
    try {
        const auto out = h_vector_by_seeded_outdegree(catalog, seed);
        t.check(out.histogram == std::vector<std::int64_t>{1, 3, 1}, "outdegree " + join(out.histogram));
        seed_note = ", direction seed " + std::to_string(out.seed);
    } catch (const Error& e) {
        t.check(false, e.what());
    }
    return {2, "pentagon data", t.passed(), t.summary("f = " + join(fh.f) + ", h = " + join(fh.h) + seed_note)};
}

Outcome interiority(const std::vector<Poset>& family)
{
    Tally t;
    std::size_t pairs = 0;
    for (const auto& p : family) {
        TubeCatalog catalog(p);
        const auto maximal = enumerate_maximal_tubings(catalog);
        const auto vertices = tubing_vertices(catalog, maximal);
        for (std::size_t m = 0; m < maximal.size(); ++m)
            for (std::size_t i = 0; i < catalog.size(); ++i) {
                if (maximal[m].contains(i))
                    continue;
                ++pairs;
                t.check(strictly_interior(p, vertices[m], catalog[i].members()),
                        catalog.format(maximal[m]) + " vs " + catalog.label(i));
            }
    }
    return {3, "strict interiority", t.passed(),
            t.summary(std::to_string(family.size()) + " posets, " + std::to_string(pairs) + " (tubing, tube) pairs")};
}

Outcome incompatibility(const std::vector<Poset>& family)
{
    Tally t;
    std::size_t overlaps = 0, cycles = 0;
    for (const auto& p : family) {
        TubeCatalog catalog(p);
        const auto system = build_associahedron(p);
        for (std::size_t a = 0; a < catalog.size(); ++a)
            for (std::size_t b = a + 1; b < catalog.size(); ++b) {
                const auto x = catalog[a].members();
                const auto y = catalog[b].members();
                if (!x.intersects(y) || x.subset_of(y) || y.subset_of(x))
                    continue;
                ++overlaps;
                t.check(!feasible_with_equalities(system, {catalog.label(a), catalog.label(b)}),
                        catalog.label(a) + " & " + catalog.label(b) + " feasible");
            }
        for (const auto& cycle : precedence_cycles(catalog, 4)) {
            ++cycles;
            std::vector<std::string> labels;
            for (auto i : cycle)
                labels.push_back(catalog.label(i));
            t.check(!feasible_with_equalities(system, labels), "cycle at " + labels.front() + " feasible");
        }
    }
    return {4, "incompatibility", t.passed(),
            t.summary(std::to_string(overlaps) + " overlapping pairs, " + std::to_string(cycles) +
                      " precedence cycles")};
}

Outcome diameter_bounds(const std::vector<Poset>& family, std::uint64_t seed)
{
    Tally t;
    std::size_t evaluations = 0;
    for (std::size_t k = 0; k < family.size(); ++k) {
        const auto& p = family[k];
        const Rational bound(static_cast<long long>(p.size() * p.size()), 4);
        std::vector<ElementSubset> subsets;
        for (const auto& tube : enumerate_proper_tubes(p))
            subsets.push_back(tube.members());
        subsets.push_back(p.all());
        std::vector<LinearFunctional> alphas;
        for (auto s : subsets)
            alphas.push_back(alpha(p, s));
        for (const auto& x : sample_order_cone(p, 1000, seed + k))
            for (std::size_t i = 0; i < subsets.size(); ++i) {
                ++evaluations;
                const auto d = diameter(x, subsets[i]);
                const auto a = alphas[i](x);
                if (d <= a && a <= bound * d)
                    continue;
                t.check(false, "poset " + std::to_string(k) + " on " + p.format(subsets[i]));
            }
    }
    if (t.passed())
        t.check(evaluations > 0, "nothing sampled");
    return {5, "diameter bounds", t.passed(),
            (t.passed() ? std::to_string(evaluations) + " exact evaluations over " + std::to_string(family.size()) +
                              " posets"
                        : t.summary(""))};
}

Outcome affine_chains()
{
    Tally t;
    std::string notes;

    {
        AffineTubeCatalog c(AffinePoset::chain(2));
        const auto oracle = brute_force_vertices(build_cyclohedron(c));
        std::set<Rational> gaps;
        for (const auto& v : oracle)
            gaps.insert(v.point[1] - v.point[0]);
        t.check(gaps == std::set<Rational>{16, 48}, "order 2 gaps");
        std::set<RationalPoint> realized;
        for (const auto& m : enumerate_maximal_affine_tubings(c))
            realized.insert(affine_vertex_of_tubing(c, m));
        t.check(realized == as_set(oracle), "order 2 vertex sets differ");
    }
    {
        AffineTubeCatalog c(AffinePoset::chain(3));
        const auto system = build_cyclohedron(c);
        const auto oracle = brute_force_vertices(system);
        t.check(oracle.size() == 6, "order 3: " + std::to_string(oracle.size()) + " vertices");
        t.check(facet_labels(system, oracle).size() == 6, "order 3 facets");
        t.check(vertex_edges(system, oracle).size() == 6, "order 3 edges");
    }
    {
        AffineTubeCatalog c(AffinePoset::chain(4));
        const auto system = build_cyclohedron(c);
        const auto oracle = brute_force_vertices(system);
        const auto maximal = enumerate_maximal_affine_tubings(c);
        const auto edges = vertex_edges(system, oracle).size();
        const auto facets = facet_labels(system, oracle).size();
        t.check(oracle.size() == maximal.size(), "order 4 vertex count vs tubings");
        t.check(simple(oracle, 3), "order 4 not simple");
        t.check(static_cast<long long>(oracle.size()) - static_cast<long long>(edges) +
                        static_cast<long long>(facets) ==
                    2,
                "order 4 Euler");
        std::set<RationalPoint> realized;
        for (const auto& m : maximal)
            realized.insert(affine_vertex_of_tubing(c, m));
        t.check(realized == as_set(oracle), "order 4 vertex sets differ");
        notes = "order 4: " + std::to_string(oracle.size()) + "/" + std::to_string(edges) + "/" +
                std::to_string(facets);
    }
    return {6, "affine chains", t.passed(), t.summary("gaps {16,48}, hexagon, " + notes)};
}

Outcome epsilon()
{
    Tally t;
    const auto p = testing::diamond();
    TubeCatalog catalog(p);
    const auto keep = tube_labels(catalog);
    const auto reference = incidence_signature(brute_force_vertices(build_associahedron(p)), keep);
    for (const Rational eps : {Rational(1, 3), Rational(1, 9), Rational(1, 27)}) {
        const auto vertices = brute_force_vertices(epsilon_realization(p, eps, EpsilonRange::unit_interval));
        t.check(vertices.size() == reference.size(), "eps " + to_string(eps) + " vertex count");
        t.check(incidence_signature(vertices, keep) == reference, "eps " + to_string(eps) + " face lattice");
    }
    return {7, "epsilon realization", t.passed(),
            t.summary("diamond, " + std::to_string(reference.size()) + " vertices at eps 1/3, 1/9, 1/27")};
}

Outcome variants(const std::vector<Poset>& family)
{
    Tally t;
    for (std::size_t k = 0; k < family.size(); ++k) {
        TubeCatalog catalog(family[k]);
        const auto keep = tube_labels(catalog);
        const auto base = brute_force_vertices(build_associahedron(family[k]));
        const auto reference = incidence_signature(base, keep);
        for (auto v : {AlphaVariant::all_pairs, AlphaVariant::minmax}) {
            const auto vertices = brute_force_vertices(build_associahedron(family[k], v));
            t.check(vertices.size() == base.size(), "poset " + std::to_string(k) + " vertex count");
            t.check(incidence_signature(vertices, keep) == reference,
                    "poset " + std::to_string(k) + " " + std::string(to_string(v)));
        }
    }
    return {8, "variant robustness", t.passed(),
            t.summary(std::to_string(family.size()) + " posets, all_pairs and minmax")};
}

using Clock = std::chrono::steady_clock;

std::vector<Outcome> run_suite(std::uint64_t seed)
{
    const auto family = connected_posets(2, 5);
    std::vector<std::function<Outcome()>> steps{
        [] { return chains(); },
        [&] { return pentagon(seed); },
        [&] { return interiority(family); },
        [&] { return incompatibility(family); },
        [&] { return diameter_bounds(family, seed); },
        [] { return affine_chains(); },
        [] { return epsilon(); },
        [&] { return variants(family); },
    };
    std::vector<Outcome> out;
    for (auto& step : steps) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = step();
        } catch (const std::exception& e) {
            o.id = static_cast<int>(out.size()) + 1;
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        out.push_back(std::move(o));
    }
    return out;
}

std::string report(const std::vector<Outcome>& outcomes)
{
    std::ostringstream os;
    for (const auto& o : outcomes)
        os << o.id << ' ' << (o.passed ? "PASS" : "FAIL") << ' ' << o.title << ": " << o.detail << '\n';
    return os.str();
}

void print(const Outcome& o)
{
    std::printf("[%s] %d %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", o.id, o.title.c_str(), o.detail.c_str(),
                o.seconds);
    std::fflush(stdout);
}

} // namespace

int main(int argc, char** argv)
{
    std::uint64_t seed = 2024;
    std::string report_path;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            seed = std::stoull(argv[++i]);
        else if (arg == "--report" && i + 1 < argc)
            report_path = argv[++i];
        else {
            std::fprintf(stderr, "usage: passoc_acceptance [--seed N] [--report FILE]\n");
            return 2;
        }
    }

    const auto first = run_suite(seed);
    for (const auto& o : first)
        print(o);

    const auto start = Clock::now();
    const auto text = report(first);
    const auto again = report(run_suite(seed));
    Outcome det{9, "determinism", text == again, "", 0};
    det.detail = det.passed ? "two runs with seed " + std::to_string(seed) + " gave identical " +
                                  std::to_string(text.size()) + "-byte reports"
                            : "reports differ between runs";
    det.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    print(det);

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        out << text << report({det});
    }

    const bool ok = det.passed && std::all_of(first.begin(), first.end(), [](const Outcome& o) { return o.passed; });
    std::printf("%s\n", ok ? "acceptance: PASS" : "acceptance: FAIL");
    return ok ? 0 : 1;
}
