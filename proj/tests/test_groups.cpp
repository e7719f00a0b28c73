#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kanforge/groups.hpp"

using namespace kanforge;

TEST_CASE("constructors validate") {
    CHECK_NOTHROW(validate_group(FinGroup::cyclic(6)));
    CHECK_NOTHROW(validate_group(FinGroup::symmetric3()));
    CHECK_NOTHROW(validate_group(FinGroup::quaternion8()));
    CHECK_NOTHROW(validate_group(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3))));

    FinGroup bad = FinGroup::cyclic(3);
    bad.table[4] = 0;
    CHECK_THROWS_AS(validate_group(bad), InputError);
}

TEST_CASE("basic structure") {
    FinGroup s3 = FinGroup::symmetric3();
    CHECK_FALSE(is_abelian(s3));
    CHECK(is_abelian(FinGroup::cyclic(5)));
    CHECK(s3.mul(s3.inv(4), 4) == s3.identity);
    CHECK(s3.pow(3, 3) == s3.identity);  // 3-cycle has order 3

    CHECK(is_cyclic_of_order(FinGroup::cyclic(4), 4));
    CHECK_FALSE(is_cyclic_of_order(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2)), 4));
    CHECK(is_cyclic_of_order(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3)), 6));
}

TEST_CASE("subgroups and quotients") {
    FinGroup s3 = FinGroup::symmetric3();
    // the 3-cycles generate A3
    auto a3 = generated_subgroup(s3, {3});
    CHECK(a3.size() == 3);
    CHECK(is_normal(s3, a3));
    auto q = quotient_group(s3, a3);
    CHECK(q.group.order == 2);
    // a transposition generates an order-2 subgroup that is not normal
    auto t = generated_subgroup(s3, {1});
    CHECK(t.size() == 2);
    CHECK_FALSE(is_normal(s3, t));
}

TEST_CASE("abelianization invariants") {
    auto s3 = abelianization_invariants(FinGroup::symmetric3());
    CHECK(s3 == std::vector<std::int64_t>{2});
    auto z4 = abelianization_invariants(FinGroup::cyclic(4));
    CHECK(z4 == std::vector<std::int64_t>{4});
    auto q8 = abelianization_invariants(FinGroup::quaternion8());
    CHECK(q8 == std::vector<std::int64_t>{2, 2});
    auto z6 = abelianization_invariants(FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3)));
    CHECK(z6 == std::vector<std::int64_t>{6});
}

TEST_CASE("isomorphism search") {
    CHECK(groups_isomorphic(FinGroup::cyclic(6), FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(3))));
    CHECK_FALSE(groups_isomorphic(FinGroup::cyclic(4), FinGroup::direct_product(FinGroup::cyclic(2), FinGroup::cyclic(2))));
    CHECK_FALSE(groups_isomorphic(FinGroup::symmetric3(), FinGroup::cyclic(6)));
    CHECK(groups_isomorphic(FinGroup::quaternion8(), FinGroup::quaternion8()));
}

TEST_CASE("subquotient") {
    // Z/4 restricted to {0,2} mod {0} = Z/2
    FinGroup z4 = FinGroup::cyclic(4);
    FinGroup sub = subquotient_group(z4, {0, 2}, {0});
    CHECK(sub.order == 2);
    FinGroup triv = subquotient_group(z4, {0, 2}, {0, 2});
    CHECK(triv.order == 1);
}
