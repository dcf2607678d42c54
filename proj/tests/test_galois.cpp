#include <catch2/catch_amalgamated.hpp>

#include "sscode/galois.hpp"

using namespace sscode;

TEST_CASE("field construction") {
    auto f4 = field_make(2, 2, {1, 1, 1});
    CHECK(f4->q() == 4);
    CHECK(f4->modulus() == std::vector<gf_t>{1, 1, 1});

    auto f2 = field_make(2, 1);
    CHECK(f2->q() == 2);

    CHECK_THROWS_AS(field_make(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(field_make(4, 1), std::invalid_argument);             // not prime
    CHECK_THROWS_AS(field_make(11, 1), std::invalid_argument);            // outside support
    CHECK_THROWS_AS(field_make(2, 2, {1, 1}), std::invalid_argument);     // degree mismatch
    CHECK_THROWS_AS(field_make(7, 5), std::invalid_argument);             // 7^5 > 2401
}

TEST_CASE("default modulus is the smallest-encoding irreducible") {
    CHECK(field_make(2, 2)->modulus() == std::vector<gf_t>{1, 1, 1});
    CHECK(field_make(3, 2)->modulus() == std::vector<gf_t>{1, 0, 1});  // x^2 + 1 over GF(3)
    CHECK(field_make(2, 4)->modulus() == std::vector<gf_t>{1, 1, 0, 0, 1});
}

TEST_CASE("GF(4) arithmetic") {
    auto f4 = field_make(2, 2, {1, 1, 1});
    gf_t w = 2, w2 = 3;  // omega, omega^2
    CHECK(f4->mul(w, w) == w2);
    CHECK(f4->mul(w, w2) == 1);
    CHECK(f4->frobenius(w) == w2);
    CHECK(f4->trace_to_prime(1) == 0);
    CHECK(f4->trace_to_prime(w) == 1);
}

TEST_CASE("GF(5) and GF(9) arithmetic") {
    auto f5 = field_make(5, 1);
    CHECK(f5->inv(3) == 2);
    CHECK(f5->mul(3, 2) == 1);

    auto f9 = field_make(3, 2);
    CHECK(f9->trace_to_prime(1) == 2);
}

TEST_CASE("element encoding round-trips and boxed ops") {
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        auto f = field_make(p, m);
        for (std::uint32_t e = 0; e < f->q(); ++e) CHECK(f->encode(f->decode(static_cast<gf_t>(e))) == e);
    }
    auto f4 = field_make(2, 2);
    GFElement a(f4, 2), b(f4, 3);
    CHECK((a * b).enc == 1);
    CHECK((a + a).enc == 0);
    CHECK_THROWS_AS(GFElement(field_make(2, 1), 0) + a, std::invalid_argument);
    CHECK_THROWS_AS(a.inverse().field->inv(0), std::domain_error);
}

TEST_CASE("field axioms, exhaustive for q <= 25") {
    for (auto [p, m] : {std::pair<unsigned, unsigned>{2, 2}, {2, 3}, {2, 4}, {3, 2}, {5, 2}, {7, 1}}) {
        auto f = field_make(p, m);
        const std::uint32_t q = f->q();
        // trace is additive and GF(p)-linear
        for (std::uint32_t x = 0; x < q; ++x) {
            for (std::uint32_t y = 0; y < q; ++y) {
                CHECK(f->trace_to_prime(f->add(static_cast<gf_t>(x), static_cast<gf_t>(y))) ==
                      f->add(f->trace_to_prime(static_cast<gf_t>(x)), f->trace_to_prime(static_cast<gf_t>(y))));
                CHECK(f->mul(static_cast<gf_t>(x), static_cast<gf_t>(y)) == f->mul(static_cast<gf_t>(y), static_cast<gf_t>(x)));
            }
            CHECK(f->trace_to_prime(f->frobenius(static_cast<gf_t>(x))) == f->trace_to_prime(static_cast<gf_t>(x)));
            if (x != 0) CHECK(f->mul(static_cast<gf_t>(x), f->inv(static_cast<gf_t>(x))) == 1);
        }
        // multiplicative group is cyclic of order q-1
        std::vector<bool> seen(q, false);
        gf_t g = f->generator();
        gf_t x = 1;
        std::uint32_t count = 0;
        do {
            CHECK(!seen[x]);
            seen[x] = true;
            x = f->mul(x, g);
            ++count;
        } while (x != 1);
        CHECK(count == q - 1);
    }
}

TEST_CASE("normal basis pick") {
    auto e2 = normal_basis_pick(field_make(2, 1));
    CHECK(e2->beta() == 2);  // omega in GF(4)
    CHECK(e2->ext()->q() == 4);

    auto e3 = normal_basis_pick(field_make(3, 1));
    CHECK(e3->ext()->q() == 9);
    // beta never lies in the base field image
    CHECK(!e3->embedding().in_image(e3->beta()));
    CHECK(!e2->embedding().in_image(e2->beta()));

    for (unsigned p : {2u, 3u, 5u, 7u}) {
        auto e = normal_basis_pick(field_make(p, 1));
        // beta^(q^2) == beta and {beta, beta^q} independent over GF(q)
        CHECK(e->ext()->frobenius_iter(e->beta(), 2 * e->base()->m()) == e->beta());
        CHECK(e->beta() != e->beta_q());
    }
}

TEST_CASE("subfield embedding is a ring homomorphism") {
    auto f4 = field_make(2, 2);
    auto f16 = field_make(2, 4);
    SubfieldEmbedding emb(f4, f16);
    for (std::uint32_t a = 0; a < 4; ++a) {
        for (std::uint32_t b = 0; b < 4; ++b) {
            CHECK(emb.up(f4->add(static_cast<gf_t>(a), static_cast<gf_t>(b))) ==
                  f16->add(emb.up(static_cast<gf_t>(a)), emb.up(static_cast<gf_t>(b))));
            CHECK(emb.up(f4->mul(static_cast<gf_t>(a), static_cast<gf_t>(b))) ==
                  f16->mul(emb.up(static_cast<gf_t>(a)), emb.up(static_cast<gf_t>(b))));
        }
    }
    CHECK(emb.up(0) == 0);
    CHECK(emb.up(1) == 1);
}
