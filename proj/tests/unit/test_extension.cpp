#include "doctest.h"

#include "phtype/catalog.hpp"
#include "phtype/extension.hpp"

using namespace phtype;

namespace {

std::pair<int, int> br(const Algebra& a, int x, int y) {
    auto b = a.basis_bracket(x, y);
    REQUIRE(b);
    return *b;
}

const StepKind kSteps[] = {StepKind::BY_8_0, StepKind::BY_0_8, StepKind::BY_4_4};

}  // namespace

TEST_CASE("structure constants of single extensions") {
    auto n90 = extend(base_algebra({1, 0}), StepKind::BY_8_0);
    CHECK(n90->center_sig() == Signature{9, 0});
    // [w1(x)u1, w1(x)u9] = Z2 and [w1(x)u1, w2(x)u1] = -Z1
    CHECK(br(*n90, tensor_index(*n90, 0, 0), tensor_index(*n90, 0, 8)) == std::make_pair(1, 1));
    CHECK(br(*n90, tensor_index(*n90, 0, 0), tensor_index(*n90, 1, 0)) == std::make_pair(0, -1));
    auto n18 = extend(base_algebra({1, 0}), StepKind::BY_0_8);
    CHECK(n18->center_sig() == Signature{1, 8});
    CHECK(br(*n18, tensor_index(*n18, 0, 0), tensor_index(*n18, 1, 0)) == std::make_pair(0, -1));
    CHECK(n90->v_labels()[tensor_index(*n90, 1, 8)] == "(w2,u9)");
}

TEST_CASE("operator E on the n_(8,0) factor") {
    auto a8 = base_algebra({8, 0});
    auto E = operator_E(*a8);
    CHECK(E.image[0] == 0);
    CHECK(E.sign[0] == -1);
    CHECK(E.image[8] == 8);
    CHECK(E.sign[8] == 1);
    CHECK(E.compose(E) == SignedPermutation::identity(16));
    for (int j = 0; j < 16; ++j) {
        CHECK(E.image[j] == j);
        CHECK(E.sign[j] == (j < 8 ? -1 : 1));
    }
    CHECK_THROWS(operator_E(*base_algebra({0, 8})));
}

TEST_CASE("extension chains") {
    auto a = extension_chain(Signature{1, 0}, {StepKind::BY_8_0});
    CHECK(a->dim_v() == 32);
    auto b = extension_chain(Signature{1, 1}, {StepKind::BY_4_4});
    CHECK(b->center_sig() == Signature{5, 5});
    CHECK(b->dim_z() == 10);
    auto c = extension_chain(Signature{1, 0}, {StepKind::BY_0_8, StepKind::BY_8_0});
    CHECK(c->center_sig() == Signature{9, 8});
    CHECK(c->dim_v() == 512);
    CHECK(c->provenance().steps.size() == 2);
}

TEST_CASE("every single extension satisfies the axioms") {
    for (auto id : catalog_ids())
        for (auto st : kSteps) {
            auto a = extend(base_algebra(id), st);
            INFO(id.str() << " + " << to_string(st));
            CHECK(verify_axioms(*a));
            CHECK(a->dim_v() == 16 * base_algebra(id)->dim_v());
            CHECK(a->dim_z() == id.dim() + 8);
            CHECK(sign_sorted(a->module_metric()));
            if (a->pinned_partition()) CHECK(verify_partition(*a, *a->pinned_partition()));
        }
}

TEST_CASE("extensions of definite algebras keep the block form") {
    for (int r : {1, 2, 4, 8}) {
        auto p = base_algebra({r, 0});
        auto a = extend(p, StepKind::BY_8_0);
        for (int i = 0; i < p->dim_v(); ++i)
            for (int j = 0; j < 16; ++j)
                for (int q = 0; q < 16; ++q) {
                    if ((j < 8) != (q < 8)) continue;
                    CHECK_FALSE(a->basis_bracket(tensor_index(*a, i, j), tensor_index(*a, i, q)));
                }
    }
}

TEST_CASE("default chains and construct") {
    auto c = default_chain(9, 0);
    REQUIRE(c);
    CHECK(c->base == Signature{1, 0});
    CHECK(c->steps == std::vector<StepKind>{StepKind::BY_8_0});
    auto d = default_chain(5, 4);
    REQUIRE(d);
    CHECK(d->base == Signature{1, 0});
    CHECK(d->steps == std::vector<StepKind>{StepKind::BY_4_4});
    CHECK(default_chain(4, 4)->steps.empty());
    CHECK(swapped(*default_chain(9, 8)).signature() == Signature{8, 9});
    CHECK_FALSE(default_chain(3, 0));
    try {
        construct(3, 0);
        FAIL("construct(3,0) should throw");
    } catch (const UnsupportedSignature& e) {
        CHECK(std::string(e.what()).find("(4,4)") != std::string::npos);
    }
    CHECK(parse_step("8,0") == StepKind::BY_8_0);
    CHECK(parse_step("4,4") == StepKind::BY_4_4);
    CHECK_THROWS(parse_step("2,2"));
}

TEST_CASE("center restriction") {
    auto a = restricted_minimal(0, 3);
    REQUIRE(a);
    CHECK((*a)->center_sig() == Signature{0, 3});
    CHECK((*a)->dim_v() == 8);
    CHECK(verify_axioms(**a));
    CHECK_FALSE(restricted_minimal(3, 0));
}
