#include "support.hpp"

#include "passoc/errors.hpp"
#include "passoc/io.hpp"
#include "passoc/oracle.hpp"
#include "passoc/realization.hpp"

#include <doctest.h>

#include <set>

using namespace passoc;

TEST_SUITE("io")
{
    TEST_CASE("finite documents")
    {
        auto in = parse_poset_input("elements: [a, b, c]\nrelations: [[a, b], [b, c]]\n");
        REQUIRE(in.finite);
        CHECK_FALSE(in.is_affine());
        CHECK(in.finite->size() == 3);
        CHECK(in.finite->less(0, 2));

        auto block = parse_poset_input("elements:\n  - 1\n  - 2\nrelations:\n  - [1, 2]\n");
        CHECK(block.finite->cover_relations().size() == 1);

        auto bare = parse_poset_input("elements: [x]");
        CHECK(bare.finite->size() == 1);
    }

    TEST_CASE("affine documents")
    {
        auto in = parse_poset_input("order: 3\ngenerators: [[0, 1], [1, 2], [2, 3]]\n");
        REQUIRE(in.is_affine());
        CHECK(in.affine->order() == 3);
        CHECK(in.affine->covers(2, 3));
        auto z = parse_poset_input("order: 1");
        CHECK(z.affine->order() == 1);
    }

    TEST_CASE("malformed documents")
    {
        CHECK_THROWS_AS(parse_poset_input("elements: [a, b"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("- a\n- b\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("elements: [a]\ncolour: red\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("elements: [a, b]\nrelations: [[a, b, a]]\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("relations: [[a, b]]\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("order: two\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("order: 2\nelements: [a]\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("generators: [[0, 1]]\n"), ParseError);
        CHECK_THROWS_AS(parse_poset_input("elements: [a, b]\nrelations: [[a, b], [b, a]]\n"), CycleError);
        CHECK_THROWS_AS(parse_poset_input("order: 2\ngenerators: [[0, 1], [1, 0]]\n"), CycleError);
        CHECK_THROWS_AS(read_poset_file("/nonexistent/file.poset"), InvalidInputError);
    }

    TEST_CASE("data files")
    {
        auto bow = read_poset_file(std::string(PASSOC_TEST_DATA) + "/bowtie.poset");
        CHECK(*bow.finite == testing::bowtie());
        CHECK(read_poset_file(std::string(PASSOC_TEST_DATA) + "/affine_chain4.poset").affine->order() == 4);
    }

    TEST_CASE("poset round trip")
    {
        auto d = testing::diamond();
        auto back = parse_poset_input(write_poset(d));
        CHECK(*back.finite == d);
        auto odd = Poset::build({"a b", "c:d", "\"q\""}, {{"a b", "c:d"}, {"c:d", "\"q\""}});
        CHECK(*parse_poset_input(write_poset(odd)).finite == odd);
    }

    TEST_CASE("ine round trip")
    {
        std::vector<HalfSpaceSystem> systems{build_associahedron(testing::chain(4)),
                                             build_associahedron(testing::bowtie(), AlphaVariant::all_pairs),
                                             epsilon_realization(testing::diamond(), Rational(1, 27)),
                                             build_cyclohedron(AffineTubeCatalog(AffinePoset::chain(3)))};
        for (const auto& s : systems) {
            auto text = write_ine(s);
            CHECK(parse_ine(text) == s);
            CHECK(write_ine(parse_ine(text)) == text);
        }
    }

    TEST_CASE("ine layout")
    {
        auto text = write_ine(build_associahedron(testing::chain(3)));
        CHECK(text.find("linearity 2 1 2\nbegin\n 4 4 rational\n 0 1 1 1\n -729 -1 0 1\n -81 -1 1 0\n") !=
              std::string::npos);
        CHECK_THROWS_AS(parse_ine("H-representation\n"), ParseError);
        CHECK_THROWS_AS(parse_ine("begin\n 1 3 rational\n 0 1\nend\n"), ParseError);
    }

    TEST_CASE("dot output")
    {
        auto dot = hasse_dot(testing::bowtie());
        CHECK(dot.find("\"c\" -> \"b\";") != std::string::npos);
        CHECK(dot.find("\"b\" -> \"c\"") == std::string::npos);
        auto aff = affine_hasse_dot(AffinePoset::chain(2));
        CHECK(aff.find("\"1\" -> \"2\";") != std::string::npos);

        TubeCatalog c(testing::chain(4));
        auto lattice = tubing_lattice_dot(enumerate_proper_tubings(c), [&](const Tubing& t) { return c.format(t); });
        std::size_t arrows = 0;
        for (std::size_t pos = lattice.find("->"); pos != std::string::npos; pos = lattice.find("->", pos + 1))
            ++arrows;
        // empty -> 5 singletons, each pair covers its two singletons
        CHECK(arrows == 5 + 2 * 5);
    }

    TEST_CASE("off export of a 3-polytope")
    {
        auto s = build_associahedron(testing::chain(5));
        auto v = brute_force_vertices(s);
        auto off = write_off(s, v);
        std::istringstream in(off);
        std::string magic;
        std::size_t nv = 0, nf = 0, ne = 0;
        in >> magic >> nv >> nf >> ne;
        CHECK(magic == "OFF");
        CHECK(nv == 14);
        CHECK(nf == 9);
        for (std::size_t i = 0; i < nv; ++i) {
            double x, y, z;
            in >> x >> y >> z;
        }
        std::set<std::pair<std::size_t, std::size_t>> edges;
        std::size_t half_edges = 0;
        for (std::size_t f = 0; f < nf; ++f) {
            std::size_t k;
            in >> k;
            CHECK(k >= 3);
            std::vector<std::size_t> face(k);
            for (auto& i : face)
                in >> i;
            for (std::size_t i = 0; i < k; ++i) {
                // Consistently oriented faces traverse every edge once each way.
                CHECK(edges.insert({face[i], face[(i + 1) % k]}).second);
                ++half_edges;
            }
        }
        CHECK(half_edges == 2 * 21);
        for (const auto& [a, b] : edges)
            CHECK(edges.count({b, a}));

        CHECK_THROWS_AS(write_off(build_associahedron(testing::chain(4)), {}), InvalidInputError);
    }
}
