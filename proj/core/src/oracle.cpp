#include "passoc/oracle.hpp"

#include "passoc/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace passoc {

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form on the first `cols` columns; trailing columns ride
// along. Returns the pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<Row>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        const Rational lead = m[r][c];
        for (auto& x : m[r])
            x /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t k = c; k < m[i].size(); ++k)
                m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

enum class Solve { unique, inconsistent, underdetermined };

// Solves rows * x = rhs (rows may outnumber the unknowns).
Solve solve_exact(const std::vector<const Constraint*>& rows, std::size_t dim, Row& x)
{
    std::vector<Row> m;
    m.reserve(rows.size());
    for (const auto* c : rows) {
        Row r = c->functional.coefficients;
        r.push_back(c->rhs);
        m.push_back(std::move(r));
    }
    auto pivots = gauss_jordan(m, dim);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][dim] != 0)
            return Solve::inconsistent;
    if (pivots.size() < dim)
        return Solve::underdetermined;
    x.assign(dim, Rational(0));
    for (std::size_t i = 0; i < dim; ++i)
        x[pivots[i]] = m[i][dim];
    return Solve::unique;
}

std::vector<Row> null_space(std::vector<Row> m, std::size_t dim)
{
    auto pivots = gauss_jordan(m, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f])
            continue;
        Row v(dim, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational dot(const Row& a, const Row& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            s += a[i] * b[i];
    return s;
}

// Calls fn on every k-subset of 0..m-1 in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn)
{
    if (k > m)
        return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Row> normals(const std::vector<Constraint>& cs)
{
    std::vector<Row> out;
    for (const auto& c : cs)
        out.push_back(c.functional.coefficients);
    return out;
}

bool equalities_consistent(const HalfSpaceSystem& s)
{
    std::vector<Row> m;
    for (const auto& c : s.equalities()) {
        Row r = c.functional.coefficients;
        r.push_back(c.rhs);
        m.push_back(std::move(r));
    }
    auto pivots = gauss_jordan(m, s.dimension());
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (m[i][s.dimension()] != 0)
            return false;
    return true;
}

std::vector<VertexCertificate> basic_feasible_points(const HalfSpaceSystem& s)
{
    const std::size_t dim = s.dimension();
    const auto& ineq = s.inequalities();
    const std::size_t d = free_dimension(s);

    std::map<RationalPoint, VertexCertificate> found;
    std::vector<const Constraint*> rows;
    for (const auto& e : s.equalities())
        rows.push_back(&e);
    const std::size_t base = rows.size();

    Row x;
    for_each_subset(ineq.size(), d, [&](const std::vector<std::size_t>& chosen) {
        rows.resize(base);
        for (auto i : chosen)
            rows.push_back(&ineq[i]);
        if (solve_exact(rows, dim, x) != Solve::unique)
            return;
        RationalPoint pt{x};
        if (found.count(pt) || !s.contains(pt))
            return;
        VertexCertificate cert{pt, s.tight_labels(pt), {}};
        for (auto i : chosen)
            cert.basis.push_back(ineq[i].label);
        found.emplace(std::move(pt), std::move(cert));
    });

    std::vector<VertexCertificate> out;
    for (auto& [pt, cert] : found)
        out.push_back(std::move(cert));
    return out;
}

// A nonzero y with E y = 0 and A y >= 0, looked for among the extreme rays of
// the (pointed) recession cone.
bool has_recession_ray(const HalfSpaceSystem& s)
{
    const std::size_t dim = s.dimension();
    const std::size_t d = free_dimension(s);
    if (d == 0)
        return false;
    const auto eq = normals(s.equalities());
    const auto in = normals(s.inequalities());
    bool ray = false;
    for_each_subset(in.size(), d - 1, [&](const std::vector<std::size_t>& chosen) {
        if (ray)
            return;
        auto rows = eq;
        for (auto i : chosen)
            rows.push_back(in[i]);
        auto ns = null_space(rows, dim);
        if (ns.size() != 1)
            return;
        for (int sign : {1, -1}) {
            bool ok = std::all_of(in.begin(), in.end(), [&](const Row& a) { return sign * dot(a, ns[0]) >= 0; });
            if (ok)
                ray = true;
        }
    });
    return ray;
}

} // namespace

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows)
{
    if (rows.empty())
        return 0;
    const std::size_t cols = rows.front().size();
    return gauss_jordan(rows, cols).size();
}

std::size_t free_dimension(const HalfSpaceSystem& system)
{
    return system.dimension() - matrix_rank(normals(system.equalities()));
}

int affine_dimension(const std::vector<RationalPoint>& points)
{
    if (points.empty())
        return -1;
    std::vector<Row> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Row r(points[i].coords);
        for (std::size_t k = 0; k < r.size(); ++k)
            r[k] -= points[0].coords[k];
        diffs.push_back(std::move(r));
    }
    return static_cast<int>(matrix_rank(std::move(diffs)));
}

std::vector<VertexCertificate> brute_force_vertices(const HalfSpaceSystem& system)
{
    if (!equalities_consistent(system))
        return {};
    const std::size_t dim = system.dimension();
    auto all = normals(system.equalities());
    auto in = normals(system.inequalities());
    all.insert(all.end(), in.begin(), in.end());

    if (matrix_rank(all) < dim) {
        // A lineality space: no vertices. Cut it away to decide emptiness.
        HalfSpaceSystem cut = system;
        auto lines = null_space(all, dim);
        for (std::size_t i = 0; i < lines.size(); ++i)
            cut.add_equality(LinearFunctional{lines[i], 0}, 0, "lineality:" + std::to_string(i));
        if (!basic_feasible_points(cut).empty())
            throw UnboundedError("the region contains a line");
        return {};
    }

    auto vertices = basic_feasible_points(system);
    if (!vertices.empty() && has_recession_ray(system))
        throw UnboundedError("the region has a recession direction");
    return vertices;
}

bool feasible_with_equalities(const HalfSpaceSystem& system, const std::vector<std::string>& labels)
{
    try {
        return !brute_force_vertices(system.with_equalities(labels)).empty();
    } catch (const UnboundedError&) {
        return true;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> vertex_edges(const HalfSpaceSystem& system,
                                                              const std::vector<VertexCertificate>& vertices)
{
    const std::size_t dim = system.dimension();
    std::vector<std::vector<std::size_t>> tight;
    for (const auto& v : vertices) {
        std::vector<std::size_t> idx;
        for (const auto& l : v.tight)
            idx.push_back(*system.find_inequality(l));
        std::sort(idx.begin(), idx.end());
        tight.push_back(std::move(idx));
    }
    const auto eq = normals(system.equalities());

    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < vertices.size(); ++a)
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(tight[a].begin(), tight[a].end(), tight[b].begin(), tight[b].end(),
                                  std::back_inserter(common));
            auto rows = eq;
            for (auto i : common)
                rows.push_back(system.inequalities()[i].functional.coefficients);
            if (matrix_rank(rows) + 1 != dim)
                continue;
            bool third = false;
            for (std::size_t k = 0; k < vertices.size() && !third; ++k)
                if (k != a && k != b)
                    third = std::includes(tight[k].begin(), tight[k].end(), common.begin(), common.end());
            if (!third)
                out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::string> facet_labels(const HalfSpaceSystem& system, const std::vector<VertexCertificate>& vertices)
{
    const int target = static_cast<int>(free_dimension(system)) - 1;
    std::vector<std::string> out;
    for (const auto& c : system.inequalities()) {
        std::vector<RationalPoint> on;
        for (const auto& v : vertices)
            if (std::find(v.tight.begin(), v.tight.end(), c.label) != v.tight.end())
                on.push_back(v.point);
        if (affine_dimension(on) == target)
            out.push_back(c.label);
    }
    return out;
}

std::set<std::vector<std::string>> incidence_signature(const std::vector<VertexCertificate>& vertices,
                                                       const std::set<std::string>& keep)
{
    std::set<std::vector<std::string>> out;
    for (const auto& v : vertices) {
        std::vector<std::string> labels;
        for (const auto& l : v.tight)
            if (keep.count(l))
                labels.push_back(l);
        std::sort(labels.begin(), labels.end());
        out.insert(std::move(labels));
    }
    return out;
}

std::vector<RationalPoint> sample_order_cone(const Poset& p, std::size_t count, std::uint64_t seed)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return p.down_set(a).size() < p.down_set(b).size(); });

    std::mt19937_64 gen(seed);
    std::vector<RationalPoint> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<long long> value(n, 0);
        for (auto i : order) {
            long long base = 0;
            for (auto j : p.lower_covers(i).members())
                base = std::max(base, value[j]);
            // Steps of zero keep ties, and with them the equality cases, in play.
            value[i] = base + static_cast<long long>(gen() % 6);
        }
        Rational mean(std::accumulate(value.begin(), value.end(), 0LL), static_cast<long long>(n));
        RationalPoint pt;
        for (auto v : value)
            pt.coords.push_back(Rational(v) - mean);
        out.push_back(std::move(pt));
    }
    return out;
}

Rational diameter(const RationalPoint& point, ElementSubset s)
{
    auto m = s.members();
    if (m.empty())
        return 0;
    Rational lo = point[m[0]];
    Rational hi = lo;
    for (auto i : m) {
        lo = std::min(lo, point[i]);
        hi = std::max(hi, point[i]);
    }
    return hi - lo;
}

} // namespace passoc
