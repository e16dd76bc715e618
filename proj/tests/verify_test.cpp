#include "support.hpp"

#include "passoc/errors.hpp"
#include "passoc/verify.hpp"

#include <doctest.h>

using namespace passoc;

TEST_SUITE("verify")
{
    TEST_CASE("chain of four")
    {
        auto r = verify_realization(testing::chain(4));
        CHECK(r.passed());
        CHECK(r.f == std::vector<std::int64_t>{5, 5, 1});
        CHECK(r.vertices == 5);
        CHECK(r.find("vertices")->passed);
        CHECK(r.to_text().find("result: PASS") != std::string::npos);
    }

    TEST_CASE("chain of five")
    {
        auto r = verify_realization(testing::chain(5));
        CHECK(r.passed());
        CHECK(r.vertices == 14);
        CHECK(r.edges == 21);
        CHECK(r.facets == 9);
        CHECK(r.vertices - r.edges + r.facets == 2);
    }

    TEST_CASE("affine chain of three is a hexagon")
    {
        auto r = verify_affine_realization(AffinePoset::chain(3));
        CHECK(r.passed());
        CHECK(r.vertices == 6);
        CHECK(r.facets == 6);
    }

    TEST_CASE("bowtie and diamond")
    {
        CHECK(verify_realization(testing::bowtie()).passed());
        CHECK(verify_realization(testing::diamond()).passed());
        VerifyOptions minmax;
        minmax.variant = AlphaVariant::minmax;
        CHECK(verify_realization(testing::bowtie(), minmax).passed());
    }

    TEST_CASE("limits")
    {
        VerifyOptions small;
        small.max_elements = 3;
        CHECK_THROWS_AS(verify_realization(testing::chain(4), small), InvalidInputError);
        CHECK_THROWS_AS(verify_realization(Poset::build({"a", "b"}, {})), NotConnectedError);
        CHECK_THROWS_AS(verify_affine_realization(AffinePoset::chain(5)), InvalidInputError);
    }

    TEST_CASE("failures carry witnesses")
    {
        VerificationReport r;
        r.checks.push_back({"vertices", false, "demo", {"{{1,2}}"}});
        CHECK_FALSE(r.passed());
        auto text = r.to_text();
        CHECK(text.find("[FAIL] vertices: demo\n  witness: {{1,2}}") != std::string::npos);
        CHECK(text.find("result: FAIL") != std::string::npos);
    }
}
