#include "doctest.h"

#include "phtype/catalog.hpp"
#include "phtype/extension.hpp"
#include "phtype/morphism.hpp"

using namespace phtype;

namespace {

LieMorphism scaled(const LieMorphism& f, const Rational& t) {
    return {f.src, f.dst, t * f.A, f.B, t * t * f.C};
}

}  // namespace

TEST_CASE("identity morphisms") {
    for (auto id : catalog_ids()) {
        auto a = base_algebra(id);
        auto f = identity_morphism(a);
        INFO(id.str());
        CHECK(verify_homomorphism(f));
        CHECK(verify_conjugation(f));
        auto c = classify(f);
        CHECK(c.center_action == MapClass::ISOMETRY);
        CHECK(c.integral);
    }
}

TEST_CASE("negating only the center breaks the homomorphism") {
    auto a = base_algebra({1, 1});
    IntegralMap m{SignedPermutation::identity(a->dim_v()), SignedPermutation::identity(2).negated()};
    auto f = make_morphism(a, a, m);
    auto res = verify_homomorphism(f);
    CHECK_FALSE(res);
    CHECK(res.witness.find("w1") != std::string::npos);
}

TEST_CASE("the (1,1) automorphism") {
    auto f = canonical_iso(1, 1);
    REQUIRE(f);
    CHECK(verify_homomorphism(*f));
    CHECK(verify_conjugation(*f));
    CHECK(verify_isom_class(*f));
    auto c = classify(*f);
    CHECK(c.center_action == MapClass::ANTI_ISOMETRY);
    CHECK(c.integral);
}

TEST_CASE("canonical isomorphisms of catalog bases") {
    for (Signature id : {Signature{1, 0}, Signature{0, 1}, Signature{2, 0}, Signature{0, 2}, Signature{4, 0},
                         Signature{0, 4}, Signature{8, 0}, Signature{0, 8}, Signature{1, 1}, Signature{2, 2},
                         Signature{4, 4}}) {
        auto f = canonical_iso(id.pos, id.neg);
        INFO(id.str());
        REQUIRE(f);
        CHECK(f->dst->center_sig() == Signature{id.neg, id.pos});
        CHECK(verify_homomorphism(*f));
        CHECK(verify_conjugation(*f));
        CHECK(verify_isom_class(*f));
        CHECK(classify(*f).integral);
        auto n = normalize_isomorphism(*f);
        CHECK(n.mu == 1);
        CHECK(n.cc_sign == -1);
    }
    for (Signature id : {Signature{3, 2}, Signature{2, 3}, Signature{3, 3}}) CHECK_FALSE(canonical_iso(base_algebra(id)));
}

TEST_CASE("canonical isomorphisms through extensions") {
    for (auto [r, s] : {std::pair{9, 0}, std::pair{1, 8}, std::pair{5, 5}, std::pair{8, 9}, std::pair{12, 4}}) {
        auto f = canonical_iso(r, s);
        INFO(r << "," << s);
        REQUIRE(f);
        CHECK(f->dst->center_sig() == Signature{s, r});
        CHECK(verify_homomorphism(*f));
        CHECK(verify_conjugation(*f));
        CHECK(verify_isom_class(*f));
    }
}

TEST_CASE("the (2,2) map has C C^t = -Id") {
    auto f = canonical_iso(2, 2);
    REQUIRE(f);
    CHECK(normalize_isomorphism(*f).cc_sign == -1);
}

TEST_CASE("normalizing a scaled isomorphism") {
    auto f = canonical_iso(1, 0);
    REQUIRE(f);
    auto g = scaled(*f, 2);
    CHECK(verify_homomorphism(g));
    CHECK_FALSE(classify(g).integral);
    auto n = normalize_isomorphism(g);
    CHECK(n.mu == Rational(1, 2));
    CHECK(n.f.A == f->A);
    CHECK(n.f.C == f->C);

    auto f8 = canonical_iso(8, 0);
    REQUIRE(f8);
    auto n8 = normalize_isomorphism(scaled(*f8, 3));
    CHECK(n8.mu == Rational(1, 3));
    CHECK(classify(n8.f).integral);
}

TEST_CASE("composition") {
    auto f = canonical_iso(4, 0);
    REQUIRE(f);
    auto g = canonical_iso(f->dst);
    REQUIRE(g);
    CHECK(g->dst->center_sig() == Signature{4, 0});
    auto h = compose(*g, *f);
    CHECK(verify_homomorphism(h));
    auto c = classify(h);
    CHECK(c.center_action == MapClass::ISOMETRY);
    CHECK(c.integral);
    auto m = as_integral(h);
    REQUIRE(m);
    CHECK(m->module.is_permutation());

    auto a = canonical_iso(1, 1);
    auto aa = compose(*a, *a);
    CHECK(classify(aa).center_action == MapClass::ISOMETRY);
    CHECK(verify_homomorphism(aa));
}

TEST_CASE("integrality check") {
    auto a = base_algebra({2, 0});
    auto f = identity_morphism(a);
    CHECK(as_integral(f));
    f.A(0, 1) = 1;
    CHECK_FALSE(as_integral(f));
    CHECK_FALSE(classify(f).integral);
    CHECK_FALSE(verify_homomorphism(f));
}

TEST_CASE("center signature obstruction") {
    auto o = center_signature_obstruction(Signature{3, 2}, 8, Signature{2, 3}, 8);
    CHECK(o.kind == ObstructionKind::POSSIBLE);
    o = center_signature_obstruction(Signature{4, 0}, 8, Signature{0, 4}, 8);
    CHECK(o.kind == ObstructionKind::POSSIBLE);
    o = center_signature_obstruction(Signature{3, 0}, 8, Signature{0, 3}, 4);
    CHECK(o.kind == ObstructionKind::DIMENSION);
    CHECK(o.reason.find("dimensions differ") != std::string::npos);
    o = center_signature_obstruction(Signature{2, 1}, 8, Signature{3, 0}, 8);
    CHECK(o.kind == ObstructionKind::SIGNATURE);
    o = center_signature_obstruction(*base_algebra({8, 0}), *base_algebra({1, 0}));
    CHECK(o.kind == ObstructionKind::DIMENSION);
}
