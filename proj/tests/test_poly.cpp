#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bfc/poly.hpp"
#include "bfc/truth_table.hpp"

using namespace bfc;

namespace {

TruthTable tt_from_bits(int n, const std::string& bits) {
    std::vector<std::uint8_t> v;
    for (char c : bits) v.push_back(static_cast<std::uint8_t>(c - '0'));
    return TruthTable(n, std::move(v));
}

TruthTable random_tt(int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> bits(std::size_t{1} << n);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
    return TruthTable(n, std::move(bits));
}

}  // namespace

TEST_CASE("poly from truth table matches hand-computed coefficients") {
    const auto and2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0001"));
    CHECK(and2.terms() == std::map<Mask, std::int64_t>{{0b11, 1}});

    const auto or2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0111"));
    CHECK(or2.terms() == std::map<Mask, std::int64_t>{{0b01, 1}, {0b10, 1}, {0b11, -1}});

    const auto parity2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0110"));
    CHECK(parity2.terms() ==
          std::map<Mask, std::int64_t>{{0b01, 1}, {0b10, 1}, {0b11, -2}});

    const auto zero = MultilinearPoly::from_truth_table(tt_from_bits(2, "0000"));
    CHECK(zero.terms().empty());
}

TEST_CASE("evaluation at Boolean points") {
    const auto or2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0111"));
    CHECK(or2.evaluate(0b11) == 1);
    CHECK(MultilinearPoly(2).evaluate(0b10) == 0);
    const auto parity2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0110"));
    CHECK(parity2.evaluate(0b11) == 0);  // 1 + 1 - 2
}

TEST_CASE("restriction folds and drops terms") {
    const auto or2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0111"));

    PartialAssignment x0_zero;
    x0_zero.bind(0, 0);
    CHECK(or2.restricted(x0_zero).terms() == std::map<Mask, std::int64_t>{{0b10, 1}});

    PartialAssignment x0_one;
    x0_one.bind(0, 1);
    const auto constant = or2.restricted(x0_one);
    CHECK(constant.is_constant());
    CHECK(constant.constant_value() == 1);

    CHECK(or2.restricted(PartialAssignment{}) == or2);
}

TEST_CASE("degree") {
    CHECK(MultilinearPoly::from_truth_table(tt_from_bits(2, "0111")).degree() == 2);
    CHECK(MultilinearPoly(3, {{0, 1}}).degree() == 0);
    CHECK(MultilinearPoly(3).degree() == 0);  // zero polynomial
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::uint8_t> bits(std::size_t{1} << n);
        for (Point x = 0; x < bits.size(); ++x)
            bits[x] = static_cast<std::uint8_t>(popcount(x) % 2);
        CHECK(MultilinearPoly::from_truth_table(TruthTable(n, bits)).degree() == n);
    }
}

TEST_CASE("first maxonomial picks the smallest mask of maximal degree") {
    const auto or2 = MultilinearPoly::from_truth_table(tt_from_bits(2, "0111"));
    CHECK(or2.first_maxonomial() == 0b11);

    const MultilinearPoly tied(3, {{0b011, 1}, {0b110, 1}});
    CHECK(tied.first_maxonomial() == 0b011);

    CHECK_THROWS_AS(MultilinearPoly(3, {{0, 1}}).first_maxonomial(), ConstantPolynomial);
}

TEST_CASE("flip is xor and an involution") {
    CHECK(flip(0b0000, 0b0101) == 0b0101);
    CHECK(flip(0b1011, 0) == 0b1011);
    CHECK(flip(0b1111, 0b1111) == 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Point x = rng() & 0xfffff;
        const Mask b = rng() & 0xfffff;
        CHECK(flip(flip(x, b), b) == x);
    }
}

TEST_CASE("truth table from polynomial") {
    CHECK(MultilinearPoly(2, {{0b11, 1}}).to_truth_table() == tt_from_bits(2, "0001"));
    CHECK_THROWS_AS(MultilinearPoly(2, {{0, 2}}).to_truth_table(), NonBooleanPolynomial);
}

TEST_CASE("round trip over all functions at n = 3") {
    for (std::uint32_t idx = 0; idx < 256; ++idx) {
        const auto tt = TruthTable::from_index(3, idx);
        CHECK(MultilinearPoly::from_truth_table(tt).to_truth_table() == tt);
    }
}

TEST_CASE("round trip on random functions up to n = 10") {
    std::mt19937_64 rng(99);
    for (int n = 4; n <= 10; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            const auto tt = random_tt(n, rng);
            CHECK(MultilinearPoly::from_truth_table(tt).to_truth_table() == tt);
        }
}

TEST_CASE("restriction soundness and degree monotonicity") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto p = MultilinearPoly::from_truth_table(random_tt(n, rng));
        const Mask bound = static_cast<Mask>(rng()) & ((Mask{1} << n) - 1);
        const Point values = static_cast<Point>(rng()) & bound;
        PartialAssignment a;
        for (int i = 0; i < n; ++i)
            if (bound & (Mask{1} << i)) a.bind(i, (values >> i) & 1);
        const auto q = p.restricted(a);
        CHECK(q.degree() <= p.degree());
        // any full point consistent with the assignment agrees
        for (int pts = 0; pts < 8; ++pts) {
            const Point free_bits = static_cast<Point>(rng()) & ~bound;
            const Point x = (free_bits | values) & ((Point{1} << n) - 1);
            CHECK(q.evaluate(x) == p.evaluate(x));
        }
    }
}

TEST_CASE("coefficient bound for table-derived polynomials") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto p = MultilinearPoly::from_truth_table(random_tt(n, rng));
        for (auto [mask, coeff] : p.terms()) {
            CHECK(coeff != 0);
            CHECK(std::abs(coeff) <= std::int64_t{1} << popcount(mask));
        }
    }
}

TEST_CASE("first maxonomial is stable and has maximal degree") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const auto p = MultilinearPoly::from_truth_table(random_tt(n, rng));
        if (p.is_constant()) continue;
        const Mask m = p.first_maxonomial();
        CHECK(popcount(m) == p.degree());
        CHECK(p.coefficient(m) != 0);
        CHECK(p.first_maxonomial() == m);
    }
}

TEST_CASE("partial assignment rejects double binding and bad values") {
    PartialAssignment a;
    a.bind(2, 1);
    CHECK_THROWS_AS(a.bind(2, 0), InvalidParams);
    CHECK_THROWS_AS(a.bind(3, 2), InvalidParams);
}
