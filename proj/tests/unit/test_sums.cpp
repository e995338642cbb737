#include "doctest.h"

#include "phtype/catalog.hpp"
#include "phtype/sums.hpp"

using namespace phtype;

TEST_CASE("direct sums keep blocks apart") {
    auto s = build_sum(base_algebra({1, 0}), 2, 0);
    CHECK(s->dim_v() == 4);
    CHECK_FALSE(s->basis_bracket(s->find_v_label("w1.1"), s->find_v_label("w2.2")));
    CHECK(s->basis_bracket(s->find_v_label("w1.1"), s->find_v_label("w2.1")));
    CHECK(verify_clifford(*s));
    CHECK(verify_admissible(*s));
    CHECK(verify_htype(*s));
}

TEST_CASE("type-2 blocks negate J") {
    auto base = base_algebra({0, 1});
    auto s = build_sum(base, 1, 1);
    CHECK(verify_axioms(*s));
    auto j = j_operator(*s, 1), jb = j_operator(*base, 1);
    const int L = base->dim_v();
    for (int i = 0; i < L; ++i) {
        CHECK(j.image[i] == jb.image[i]);
        CHECK(j.sign[i] == jb.sign[i]);
        CHECK(j.image[L + i] == L + jb.image[i]);
        CHECK(j.sign[L + i] == -jb.sign[i]);
    }
}

TEST_CASE("a single type-1 block is the base") {
    auto base = base_algebra({2, 3});
    auto s = build_sum(base, 1, 0);
    CHECK(s->structure() == base->structure());
    CHECK(s->module_metric() == base->module_metric());
}

TEST_CASE("nu > 0 needs r - s = 3 mod 4") {
    CHECK_THROWS_AS(build_sum(base_algebra({1, 0}), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_sum(base_algebra({2, 2}), 0, 1), std::invalid_argument);
    CHECK_NOTHROW(build_sum(base_algebra({2, 3}), 0, 2));
    CHECK(has_two_module_types({0, 1}));
    CHECK(has_two_module_types({2, 3}));
    CHECK(has_two_module_types({3, 0}));
    CHECK_FALSE(has_two_module_types({1, 1}));
}

TEST_CASE("volume elements of the two block types differ by a sign") {
    for (Signature id : {Signature{0, 1}, Signature{2, 3}}) {
        auto s = build_sum(base_algebra(id), 1, 1);
        auto w1 = volume_element(*s, 0), w2 = volume_element(*s, 1);
        INFO(id.str());
        CHECK(w2.omega == w1.omega.negated());
        CHECK(w1.omega.compose(w1.omega) == SignedPermutation::identity(w1.omega.size()));
    }
    // for r+s = 5 omega is skew-adjoint, so it cannot be a multiple of the identity
    auto s23 = build_sum(base_algebra({2, 3}), 1, 1);
    CHECK(volume_element(*s23, 0).action == VolumeAction::NEITHER);
    CHECK(std::string(to_string(VolumeAction::MINUS_ID)) == "-Id");
    CHECK_THROWS(volume_element(*s23, 2));
}

TEST_CASE("omega is skew-adjoint when r+s = 5") {
    auto a = base_algebra({2, 3});
    auto w = volume_element(*a, 0).omega;
    ExactMatrix m = w.to_matrix();
    CHECK(metric_adjoint(m, a->module_metric(), a->module_metric()) == Rational(-1) * m);
}

TEST_CASE("swap isomorphisms") {
    auto s = build_sum(base_algebra({2, 3}), 1, 1);
    auto f = swap_isomorphism(s);
    CHECK(verify_homomorphism(f));
    CHECK(f.dst->provenance().mu == 1);
    CHECK(f.C == Rational(-1) * ExactMatrix::identity(5));
    auto ff = compose(swap_isomorphism(f.dst), f);
    CHECK(verify_homomorphism(ff));
    CHECK(ff.C == ExactMatrix::identity(5));
    CHECK(ff.A == ExactMatrix::identity(s->dim_v()));

    auto t = build_sum(base_algebra({0, 1}), 2, 1);
    auto g = swap_isomorphism(t);
    CHECK(verify_homomorphism(g));
    CHECK(g.dst->provenance().mu == 1);
    CHECK(g.dst->provenance().nu == 2);

    auto u = build_sum(base_algebra({2, 3}), 1, 0);
    auto h = swap_isomorphism(u);
    CHECK(verify_homomorphism(h));
    CHECK(h.dst->provenance().nu == 1);

    CHECK_THROWS(swap_isomorphism(build_sum(base_algebra({1, 1}), 2, 0)));
}

TEST_CASE("strong bracket generation of sums") {
    CHECK(sum_sbg(build_sum(base_algebra({2, 0}), 3, 0)).kind == CertificateKind::SBG_YES);
    CHECK(sum_sbg(build_sum(base_algebra({0, 1}), 1, 1)).kind == CertificateKind::SBG_YES);
    auto s = build_sum(base_algebra({2, 3}), 2, 1);
    auto c = sum_sbg(s);
    CHECK(c.kind == CertificateKind::SBG_NO);
    REQUIRE(c.sbg);
    CHECK(verify_sbg_witness(*s, *c.sbg));
    for (int i = base_algebra({2, 3})->dim_v(); i < s->dim_v(); ++i) CHECK(c.sbg->v[i] == 0);
}
