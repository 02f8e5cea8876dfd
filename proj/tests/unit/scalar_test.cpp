#include "helpers.hpp"

#include "ranklab/errors.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("gaussian rational basics") {
    const Scalar i = Scalar::imaginaryUnit();
    CHECK((Scalar(1) + i) * (Scalar(1) - i) == Scalar(2));
    CHECK(i * i == Scalar(-1));
    CHECK((Scalar(3) + Scalar(2) * i).conj() == Scalar(3) - Scalar(2) * i);
    CHECK(Scalar(0).str() == "0");
    CHECK_THROWS_AS(Scalar(0).inverse(), ArithmeticError);
}

TEST_CASE("sqrt extension") {
    const FieldSpec f5 = FieldSpec::withRadicand(5);
    const Scalar s = Scalar::sqrtRadicand(f5);
    CHECK(s * s == Scalar(5, f5));
    const Scalar x = Scalar(2, f5) + s;
    CHECK(Scalar(1, f5) / x == Scalar(-2, f5) + s);
    const Scalar is = Scalar::imaginaryUnit(f5) * s;
    CHECK(is.conj() == -is);
    CHECK_THROWS_AS(Scalar::sqrtRadicand(FieldSpec{}), UsageError);
    CHECK_THROWS_AS(FieldSpec::withRadicand(4), UsageError);
    CHECK_THROWS_AS(Scalar(1) + Scalar(1, f5), UsageError);
}

TEST_CASE("squarefree decomposition") {
    CHECK(squarefreeDecompose(12) == std::pair<std::uint64_t, std::uint64_t>{2, 3});
    CHECK(squarefreeDecompose(17) == std::pair<std::uint64_t, std::uint64_t>{1, 17});
    CHECK(squarefreeDecompose(25) == std::pair<std::uint64_t, std::uint64_t>{5, 1});
}

TEST_CASE("field operations agree with a floating model") {
    for (std::uint32_t d : {0u, 2u, 5u, 13u, 21u}) {
        const FieldSpec f = FieldSpec::withRadicand(d);
        Rng rng = makeRng(11, {d});
        for (int t = 0; t < 200; ++t) {
            const Scalar x = randomScalar(rng, f), y = randomScalar(rng, f);
            CHECK(near(approx(x + y), approx(x) + approx(y)));
            CHECK(near(approx(x - y), approx(x) - approx(y)));
            CHECK(near(approx(x * y), approx(x) * approx(y)));
            CHECK(near(approx(x.conj()), std::conj(approx(x))));
            CHECK(x.conj().conj() == x);
            CHECK(x + Scalar(0, f) == x);
            if (!y.isZero()) {
                CHECK(near(approx(x / y), approx(x) / approx(y)));
                CHECK((x / y) * y == x);
            }
        }
    }
}

TEST_CASE("canonical text round trips") {
    const FieldSpec f = FieldSpec::withRadicand(13);
    Rng rng = makeRng(3);
    for (int t = 0; t < 100; ++t) {
        const Scalar x = randomScalar(rng, f) / Scalar(long(1 + t % 7), f);
        CHECK(Scalar::parse(x.str(), f) == x);
    }
    CHECK(Scalar::parse("1/2-3*i", FieldSpec{}) == Scalar::complex(Rational(1, 2), Rational(-3)));
}
