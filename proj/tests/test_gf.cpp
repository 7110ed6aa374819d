#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mmg/gf.hpp"

using mmg::Error;
using mmg::gf::Elem;
using mmg::gf::Field;
using mmg::gf::ShiftSets;

namespace {

const std::vector<std::uint32_t> kOddPrimePowersTo128 = {
    3,  5,  7,  9,  11, 13, 17, 19,  23,  25,  27,  29,  31,  37,  41,  43,  47,  49, 53,
    59, 61, 67, 71, 73, 79, 81, 83,  89,  97,  101, 103, 107, 109, 113, 121, 125, 127};

// Oracle for the modulus of GF(p^n), n in {2, 3}: scan monic polynomials in
// encoding order of the non-leading coefficients; at these degrees
// irreducible is the same as root-free.
std::vector<std::uint32_t> first_rootfree_modulus(std::uint32_t p, std::uint32_t n) {
    REQUIRE((n == 2 || n == 3));
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::vector<std::uint32_t> low(n);
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < n; ++i) {
            low[i] = v % p;
            v /= p;
        }
        bool has_root = false;
        for (std::uint32_t x = 0; x < p && !has_root; ++x) {
            std::uint64_t value = 1;  // leading coefficient
            for (std::uint32_t i = n; i-- > 0;) value = (value * x + low[i]) % p;
            has_root = value == 0;
        }
        if (!has_root) return low;
    }
    FAIL("no root-free monic polynomial found");
    return {};
}

// Brute-force re-check of every shift-set requirement, using only Field::neg
// and plain std::set arithmetic.
void check_shift_sets_brute_force(const Field& F, std::uint32_t t, const ShiftSets& s) {
    const std::uint32_t q = F.q();
    const std::set<Elem> M(s.M.begin(), s.M.end());
    const std::set<Elem> T(s.T.begin(), s.T.end());
    const std::set<Elem> T1(s.T1.begin(), s.T1.end());
    const std::set<Elem> T2(s.T2.begin(), s.T2.end());
    const std::set<Elem> S(s.S.begin(), s.S.end());
    const std::set<Elem> negS(s.negS.begin(), s.negS.end());

    REQUIRE(M.size() == (q - 1) / 2);
    REQUIRE(T.size() == 2 * t);
    REQUIRE(T1.size() == 2 * t);
    REQUIRE(T2.size() == 2 * t);
    REQUIRE(S.size() == (q - 1) / 2 - 2 * t);

    // transversal of the negation pairing
    for (Elem a = 1; a < q; ++a) {
        const bool in_m = M.contains(a);
        const bool neg_in_m = M.contains(F.neg(a));
        REQUIRE(in_m != neg_in_m);
    }
    // u + v never vanishes on M (u = v included)
    for (const Elem u : M)
        for (const Elem v : M) REQUIRE(F.add(u, v) != 0);

    for (const Elem x : T) REQUIRE(M.contains(x));
    for (const Elem x : S) {
        REQUIRE(M.contains(x));
        REQUIRE(!T.contains(x));
        REQUIRE(negS.contains(F.neg(x)));
    }
    REQUIRE(S.size() + T.size() == M.size());
    REQUIRE(negS.size() == S.size());

    // T1, T2 partition T u (-T) into negation-closed halves of size 2t
    std::set<Elem> t_all = T;
    for (const Elem x : T) t_all.insert(F.neg(x));
    REQUIRE(t_all.size() == 4 * t);
    std::set<Elem> t_union;
    for (const Elem x : T1) {
        REQUIRE(t_all.contains(x));
        REQUIRE(!T2.contains(x));
        REQUIRE(T1.contains(F.neg(x)));
        t_union.insert(x);
    }
    for (const Elem x : T2) {
        REQUIRE(t_all.contains(x));
        REQUIRE(T2.contains(F.neg(x)));
        t_union.insert(x);
    }
    REQUIRE(t_union == t_all);
    // S and the shift edges never overlap
    for (const Elem x : S) REQUIRE(!t_union.contains(x));
}

}  // namespace

TEST_CASE("field construction identifies prime powers") {
    const Field F7 = Field::make(7);
    CHECK(F7.p() == 7);
    CHECK(F7.n() == 1);
    CHECK(F7.q() == 7);

    const Field F9 = Field::make(9);
    CHECK(F9.p() == 3);
    CHECK(F9.n() == 2);

    const Field F2 = Field::make(2);
    CHECK(F2.p() == 2);
    CHECK(F2.n() == 1);

    for (const auto bad : {0ULL, 1ULL, 6ULL, 12ULL, 100ULL, 1000ULL}) {
        try {
            Field::make(bad);
            FAIL("expected NotPrimePower for q=" << bad);
        } catch (const Error& e) {
            CHECK(e.code() == "NotPrimePower");
        }
    }
}

TEST_CASE("modulus is the first irreducible in encoding order") {
    // degree 2 and 3: irreducible == no root, checked by an independent scan
    for (const std::uint32_t q : {9u, 25u, 27u, 49u, 121u, 125u, 8u}) {
        const Field F = Field::make(q);
        CHECK(F.modulus() == first_rootfree_modulus(F.p(), F.n()));
    }
    // spot value: GF(9) uses x^2 + 1
    CHECK(Field::make(9).modulus() == std::vector<std::uint32_t>{1, 0});
}

TEST_CASE("field construction is deterministic") {
    for (const std::uint32_t q : {9u, 27u, 81u, 125u}) {
        const Field a = Field::make(q);
        const Field b = Field::make(q);
        CHECK(a.modulus() == b.modulus());
    }
}

TEST_CASE("prime field arithmetic") {
    const Field F = Field::make(7);
    CHECK(F.add(3, 5) == 1);
    CHECK(F.sub(3, 5) == 5);
    CHECK(F.neg(3) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK_THROWS_AS(F.inv(0), Error);
    try {
        F.inv(0);
    } catch (const Error& e) {
        CHECK(e.code() == "DivisionByZero");
    }
}

TEST_CASE("extension field arithmetic") {
    const Field F9 = Field::make(9);
    // x has encoding 3; x * x = -1 = 2 modulo x^2 + 1
    CHECK(F9.mul(3, 3) == 2);
    CHECK(F9.coeffs(5) == std::vector<std::uint32_t>{2, 1});
    CHECK(F9.from_coeffs(std::vector<std::uint32_t>{2, 1}) == 5);
    CHECK_THROWS_AS(F9.from_coeffs(std::vector<std::uint32_t>{3, 0}), Error);
    CHECK_THROWS_AS(F9.from_coeffs(std::vector<std::uint32_t>{1}), Error);
    CHECK_THROWS_AS(F9.add(9, 0), Error);
}

TEST_CASE("encode/decode is a bijection") {
    for (const std::uint32_t q : {2u, 7u, 9u, 27u, 25u}) {
        const Field F = Field::make(q);
        std::set<std::vector<std::uint32_t>> seen;
        for (Elem a = 0; a < q; ++a) {
            const auto c = F.coeffs(a);
            REQUIRE(c.size() == F.n());
            for (const auto digit : c) REQUIRE(digit < F.p());
            REQUIRE(F.from_coeffs(c) == a);
            seen.insert(c);
        }
        REQUIRE(seen.size() == q);
    }
}

TEST_CASE("field axioms hold exhaustively for small q") {
    for (const std::uint32_t q : {2u, 3u, 5u, 7u, 9u, 25u, 27u}) {
        const Field F = Field::make(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, 0) == a);
            CHECK(F.mul(a, 1) == a);
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (Elem c = 0; c < q; ++c) {
                    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
                    REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold on random samples for larger q") {
    std::mt19937 rng(20240517);
    for (const std::uint32_t q : {49u, 81u, 121u, 125u, 127u}) {
        const Field F = Field::make(q);
        for (int trial = 0; trial < 2000; ++trial) {
            const Elem a = rng() % q, b = rng() % q, c = rng() % q;
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            REQUIRE(F.add(a, b) == F.add(b, a));
            REQUIRE(F.mul(a, b) == F.mul(b, a));
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("canonical shift sets match the frozen small cases") {
    const Field F7 = Field::make(7);
    const ShiftSets s70 = mmg::gf::shift_sets(F7, 0);
    CHECK(s70.M == std::vector<Elem>{1, 2, 3});
    CHECK(s70.T.empty());
    CHECK(s70.T1.empty());
    CHECK(s70.T2.empty());
    CHECK(s70.S == std::vector<Elem>{1, 2, 3});
    CHECK(s70.negS == std::vector<Elem>{4, 5, 6});

    const Field F5 = Field::make(5);
    const ShiftSets s51 = mmg::gf::shift_sets(F5, 1);
    CHECK(s51.M == std::vector<Elem>{1, 2});
    CHECK(s51.T == std::vector<Elem>{1, 2});
    CHECK(s51.T1 == std::vector<Elem>{1, 4});
    CHECK(s51.T2 == std::vector<Elem>{2, 3});
    CHECK(s51.S.empty());
    CHECK(s51.negS.empty());

    // GF(9): encodings pair up as 1/2, 3/6, 4/8, 5/7
    const Field F9 = Field::make(9);
    const ShiftSets s91 = mmg::gf::shift_sets(F9, 1);
    CHECK(s91.M == std::vector<Elem>{1, 3, 4, 5});
    CHECK(s91.T == std::vector<Elem>{1, 3});
    CHECK(s91.T1 == std::vector<Elem>{1, 2});
    CHECK(s91.T2 == std::vector<Elem>{3, 6});
    CHECK(s91.S == std::vector<Elem>{4, 5});
    CHECK(s91.negS == std::vector<Elem>{7, 8});
}

TEST_CASE("shift set range errors") {
    const Field F7 = Field::make(7);
    CHECK_NOTHROW(mmg::gf::shift_sets(F7, 1));  // (7-3)/4 = 1 is allowed
    try {
        mmg::gf::shift_sets(F7, 2);
        FAIL("expected TOutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == "TOutOfRange");
    }
    try {
        mmg::gf::shift_sets(Field::make(4), 0);
        FAIL("expected EvenQ");
    } catch (const Error& e) {
        CHECK(e.code() == "EvenQ");
    }
    CHECK(mmg::gf::max_shift_t(5) == 1);
    CHECK(mmg::gf::max_shift_t(9) == 2);
    CHECK(mmg::gf::max_shift_t(13) == 3);
}

TEST_CASE("shift set invariants hold exhaustively up to q = 128") {
    for (const std::uint32_t q : kOddPrimePowersTo128) {
        const Field F = Field::make(q);
        for (std::uint32_t t = 0; t <= mmg::gf::max_shift_t(q); ++t) {
            const ShiftSets s = mmg::gf::shift_sets(F, t);
            check_shift_sets_brute_force(F, t, s);
            CHECK_NOTHROW(mmg::gf::validate_shift_sets(F, s));
        }
    }
}

TEST_CASE("random shift sets are valid") {
    std::mt19937_64 rng(7);
    for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
        const Field F = Field::make(q);
        for (std::uint32_t t = 0; t <= mmg::gf::max_shift_t(q); ++t) {
            for (int draw = 0; draw < 20; ++draw) {
                const ShiftSets s = mmg::gf::random_shift_sets(F, t, rng);
                check_shift_sets_brute_force(F, t, s);
                CHECK_NOTHROW(mmg::gf::validate_shift_sets(F, s));
            }
        }
    }
}

TEST_CASE("validate_shift_sets rejects corrupted sets") {
    const Field F = Field::make(13);
    ShiftSets s = mmg::gf::shift_sets(F, 1);

    ShiftSets broken = s;
    broken.T1.pop_back();
    CHECK_THROWS_AS(mmg::gf::validate_shift_sets(F, broken), Error);

    broken = s;
    std::swap(broken.T1, broken.T2);
    CHECK_NOTHROW(mmg::gf::validate_shift_sets(F, broken));  // swap keeps all invariants

    broken = s;
    broken.S.push_back(broken.T[0]);
    std::sort(broken.S.begin(), broken.S.end());
    CHECK_THROWS_AS(mmg::gf::validate_shift_sets(F, broken), Error);

    broken = s;
    broken.M[0] = F.neg(broken.M[0]);
    std::sort(broken.M.begin(), broken.M.end());
    CHECK_THROWS_AS(mmg::gf::validate_shift_sets(F, broken), Error);
}
