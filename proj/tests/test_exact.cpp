#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "voa/scalar.hpp"

using namespace voa;

namespace {

Scalar random_scalar(std::mt19937& rng, int depth = 0) {
    std::uniform_int_distribution<int> pick(0, depth > 3 ? 1 : 4);
    std::uniform_int_distribution<int> small(-6, 6);
    switch (pick(rng)) {
        case 0: return Scalar(Rat(small(rng)));
        case 1: {
            int k = std::uniform_int_distribution<int>(0, 3)(rng);
            return Scalar::s_power(k) * Scalar(Rat(small(rng)));
        }
        case 2: return random_scalar(rng, depth + 1) + random_scalar(rng, depth + 1);
        case 3: return random_scalar(rng, depth + 1) * random_scalar(rng, depth + 1);
        default: {
            Scalar d = random_scalar(rng, depth + 1);
            if (d.is_zero()) d = Scalar(1) + Scalar::s();
            return random_scalar(rng, depth + 1) / d;
        }
    }
}

}  // namespace

TEST_CASE("polynomial product s^2 * s^2 = s^4") {
    Scalar p = Scalar::p();
    CHECK(p * p == Scalar::s_power(4));
}

TEST_CASE("polynomial cancellation (s^2-4)/(s-2) = s+2") {
    Scalar num = Scalar::p() - Scalar(4);
    Scalar den = Scalar::s() - Scalar(2);
    Scalar q = num / den;
    CHECK(q == Scalar::s() + Scalar(2));
}

TEST_CASE("2p(p-2)(4p-3) vanishes at p=2") {
    Scalar p = Scalar::p();
    Scalar a = Scalar(2) * p * (p - Scalar(2)) * (Scalar(4) * p - Scalar(3));
    auto v = a.substitute(Rat(2));
    CHECK(v.rational == 0);
    CHECK(v.root == 0);
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("substitute 2p/(2p-1) at p=2 gives 4/3") {
    Scalar p = Scalar::p();
    Scalar a = (Scalar(2) * p) / (Scalar(2) * p - Scalar(1));
    auto v = a.substitute(Rat(2));
    CHECK(v.rational == Rat(4, 3));
    CHECK(v.root == 0);
}

TEST_CASE("substitute s at square p") {
    auto v = Scalar::s().substitute(Rat(4));
    CHECK(v.rational == 2);
    CHECK(v.root == 0);
    auto w = Scalar::s().substitute(Rat(2));
    CHECK(w.rational == 0);
    CHECK(w.root == 1);
}

TEST_CASE("substitute zero") {
    auto v = Scalar().substitute(Rat(7));
    CHECK(v.rational == 0);
    CHECK(v.root == 0);
}

TEST_CASE("pole detection") {
    Scalar a = Scalar(1) / (Scalar::p() - Scalar(2));
    CHECK_THROWS_AS(a.substitute(Rat(2)), DomainError);
    CHECK_THROWS_AS(Scalar(1) / Scalar(), DomainError);
}

TEST_CASE("canonical form: a - a = 0 on random arithmetic trees") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("field laws on random triples") {
    std::mt19937 rng(987654);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}

TEST_CASE("substitution is multiplicative when pole-free") {
    std::mt19937 rng(13579);
    Rat p0(3);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        Scalar::Specialized va, vb, vab;
        try {
            va = a.substitute(p0);
            vb = b.substitute(p0);
            vab = (a * b).substitute(p0);
        } catch (const DomainError&) {
            continue;
        }
        // (x + y sqrt3)(u + v sqrt3) = xu + 3yv + (xv + yu) sqrt3
        CHECK(vab.rational == va.rational * vb.rational + p0 * va.root * vb.root);
        CHECK(vab.root == va.rational * vb.root + va.root * vb.rational);
    }
}

TEST_CASE("monic denominator rendering round structure") {
    Scalar a = (Scalar::p() + Scalar(1)) / (Scalar(2) * Scalar::s() - Scalar(3));
    CHECK(a.den().leading_coeff() == 1);
    CHECK(a.to_string() == "(1/2*s^2 + 1/2)/(s - 3/2)");
}
