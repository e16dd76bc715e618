#include "support.hpp"

#include "passoc/errors.hpp"
#include "passoc/oracle.hpp"
#include "passoc/realization.hpp"

#include <doctest.h>

using namespace passoc;
using testing::bowtie;
using testing::chain;

TEST_SUITE("oracle")
{
    TEST_CASE("vertex counts")
    {
        CHECK(brute_force_vertices(build_associahedron(chain(4))).size() == 5);
        auto point = brute_force_vertices(build_associahedron(chain(2)));
        REQUIRE(point.size() == 1);
        CHECK(point[0].point.coords == std::vector<Rational>{-8, 8});
        CHECK(point[0].basis.empty());
    }

    TEST_CASE("certificates")
    {
        auto system = build_associahedron(chain(4));
        for (const auto& c : brute_force_vertices(system)) {
            CHECK(system.contains(c.point));
            CHECK(c.tight.size() == 2);
            CHECK(c.basis.size() == 2);
            for (const auto& b : c.basis)
                CHECK(std::find(c.tight.begin(), c.tight.end(), b) != c.tight.end());
        }
    }

    TEST_CASE("a triangle by hand")
    {
        HalfSpaceSystem s({"x", "y"});
        s.add_inequality({{1, 0}, 0}, 0, "x");
        s.add_inequality({{0, 1}, 0}, 0, "y");
        s.add_inequality({{-1, -1}, 0}, -1, "x+y<=1");
        auto v = brute_force_vertices(s);
        REQUIRE(v.size() == 3);
        CHECK(v[0].point.coords == std::vector<Rational>{0, 0});
        CHECK(v[1].point.coords == std::vector<Rational>{0, 1});
        CHECK(v[2].point.coords == std::vector<Rational>{1, 0});
        CHECK(vertex_edges(s, v).size() == 3);
        CHECK(facet_labels(s, v).size() == 3);
    }

    TEST_CASE("redundant and degenerate constraints")
    {
        HalfSpaceSystem s({"x", "y"});
        s.add_inequality({{1, 0}, 0}, 0, "x");
        s.add_inequality({{0, 1}, 0}, 0, "y");
        s.add_inequality({{-1, 0}, 0}, -1, "x<=1");
        s.add_inequality({{0, -1}, 0}, -1, "y<=1");
        s.add_inequality({{-1, -1}, 0}, -2, "x+y<=2");
        s.add_inequality({{-1, -1}, 0}, -5, "x+y<=5");
        auto v = brute_force_vertices(s);
        CHECK(v.size() == 4);
        auto facets = facet_labels(s, v);
        CHECK(facets == std::vector<std::string>{"x", "y", "x<=1", "y<=1"});
        CHECK(vertex_edges(s, v).size() == 4);
    }

    TEST_CASE("unbounded and empty regions")
    {
        HalfSpaceSystem ray({"x", "y"});
        ray.add_inequality({{1, 0}, 0}, 0, "x");
        ray.add_inequality({{0, 1}, 0}, 0, "y");
        CHECK_THROWS_AS(brute_force_vertices(ray), UnboundedError);

        HalfSpaceSystem line({"x", "y"});
        line.add_inequality({{1, 0}, 0}, 0, "x");
        CHECK_THROWS_AS(brute_force_vertices(line), UnboundedError);

        HalfSpaceSystem empty_line({"x", "y"});
        empty_line.add_inequality({{1, 0}, 0}, 1, "x>=1");
        empty_line.add_inequality({{-1, 0}, 0}, 0, "x<=0");
        CHECK(brute_force_vertices(empty_line).empty());

        HalfSpaceSystem clash({"x"});
        clash.add_equality({{1}, 0}, 0, "x=0");
        clash.add_equality({{2}, 0}, 1, "2x=1");
        CHECK(brute_force_vertices(clash).empty());

        // The order cone alone is unbounded.
        auto p = chain(3);
        HalfSpaceSystem cone(p.names());
        cone.add_inequality(alpha(p, p.subset({"1", "2"})), 0, "a");
        cone.add_inequality(alpha(p, p.subset({"2", "3"})), 0, "b");
        CHECK_THROWS_AS(brute_force_vertices(cone), UnboundedError);
    }

    TEST_CASE("feasibility with extra equalities")
    {
        auto s = build_associahedron(chain(4));
        CHECK_FALSE(feasible_with_equalities(s, {"{1,2}", "{2,3}"}));
        CHECK(feasible_with_equalities(s, {"{1,2}"}));
        CHECK(feasible_with_equalities(s, {"{1,2}", "{3,4}"}));
        CHECK_THROWS_AS(feasible_with_equalities(s, {"{9}"}), InvalidInputError);

        auto b = bowtie();
        CHECK_FALSE(feasible_with_equalities(build_associahedron(b), {"{a,b}", "{c,d}"}));
    }

    TEST_CASE("ranks and dimensions")
    {
        CHECK(matrix_rank({{1, 2}, {2, 4}}) == 1);
        CHECK(matrix_rank({}) == 0);
        CHECK(affine_dimension({}) == -1);
        CHECK(affine_dimension({RationalPoint{{1, 1}}}) == 0);
        CHECK(affine_dimension({RationalPoint{{0, 0}}, RationalPoint{{1, 1}}, RationalPoint{{2, 2}}}) == 1);
        CHECK(free_dimension(build_associahedron(chain(5))) == 3);
    }

    TEST_CASE("order cone samples")
    {
        auto c3 = chain(3);
        auto samples = sample_order_cone(c3, 50, 4);
        CHECK(samples.size() == 50);
        for (const auto& s : samples) {
            CHECK(s[0] <= s[1]);
            CHECK(s[1] <= s[2]);
            CHECK(s.sum() == 0);
        }
        CHECK(sample_order_cone(c3, 5, 9) == sample_order_cone(c3, 5, 9));

        RationalPoint constant{{0, 0, 0}};
        CHECK(diameter(constant, c3.all()) == 0);
        CHECK(alpha(c3, c3.all())(constant) == 0);
    }

    TEST_CASE("diameter bounds on the bowtie")
    {
        auto b = bowtie();
        const Rational n2(static_cast<long long>(b.size() * b.size()), 4);
        for (const auto& s : sample_order_cone(b, 100, 17)) {
            for (const auto& t : enumerate_proper_tubes(b)) {
                auto d = diameter(s, t.members());
                auto a = alpha(b, t.members())(s);
                CHECK(d <= a);
                CHECK(a <= n2 * d);
            }
            auto d = diameter(s, b.all());
            auto a = alpha(b, b.all())(s);
            CHECK(d <= a);
            CHECK(a <= n2 * d);
        }
    }
}
