#include "support.hpp"

#include "passoc/errors.hpp"
#include "passoc/poset_family.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace passoc;

TEST_SUITE("family")
{
    TEST_CASE("counts of connected posets")
    {
        const std::vector<std::size_t> expected{1, 1, 3, 10, 44, 238};
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(connected_posets(n).size() == expected[n - 1]);
        CHECK(connected_posets(2, 5).size() == 58);
        CHECK_THROWS_AS(connected_posets(7), InvalidInputError);
    }

    TEST_CASE("members are connected and pairwise non-isomorphic")
    {
        for (std::size_t n = 1; n <= 5; ++n) {
            auto family = connected_posets(n);
            for (std::size_t i = 0; i < family.size(); ++i) {
                CHECK(is_connected(family[i]));
                for (std::size_t j = 0; j < i; ++j)
                    CHECK_FALSE(isomorphic(family[i], family[j]));
            }
        }
    }

    TEST_CASE("the family is stable between calls")
    {
        auto a = connected_posets(5);
        auto b = connected_posets(5);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == b[i]);
    }

    TEST_CASE("precedence cycles")
    {
        TubeCatalog bow(testing::bowtie());
        auto cycles = precedence_cycles(bow);
        REQUIRE(cycles.size() == 2);
        std::set<std::string> seen;
        for (const auto& c : cycles) {
            Tubing t{c};
            std::sort(t.tubes.begin(), t.tubes.end());
            seen.insert(bow.format(t));
        }
        CHECK(seen == std::set<std::string>{"{{a,b},{c,d}}", "{{a,d},{b,c}}"});

        CHECK(precedence_cycles(TubeCatalog(testing::chain(6))).empty());

        for (const auto& p : connected_posets(4, 5)) {
            TubeCatalog c(p);
            for (const auto& cyc : precedence_cycles(c)) {
                CHECK(cyc.size() >= 2);
                CHECK(cyc.size() <= 4);
                CHECK(std::min_element(cyc.begin(), cyc.end()) == cyc.begin());
                for (std::size_t i = 0; i < cyc.size(); ++i)
                    CHECK(c.precedes(cyc[i], cyc[(i + 1) % cyc.size()]));
                Tubing t{cyc};
                std::sort(t.tubes.begin(), t.tubes.end());
                CHECK_FALSE(c.is_proper_tubing(t));
            }
        }
    }
}
