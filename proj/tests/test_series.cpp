#include <doctest.h>

#include <initializer_list>
#include <stdexcept>
#include <utility>

#include "divpoly/poly.hpp"
#include "divpoly/series.hpp"

using namespace divpoly;

namespace {

QLaurent from_pairs(std::initializer_list<std::pair<i64, i64>> exp_coeff) {
    QLaurent q;
    for (const auto& [e, c] : exp_coeff) q.add_term(c, e);
    return q;
}

QLaurent centered(i64 n, Family f) {
    const auto p = build_poly(n, f);
    QLaurent out;
    const auto cs = p.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j)
        out.add_term(cs[j], static_cast<i64>(j) - p.center());
    return out;
}

} // namespace

TEST_CASE("QLaurent basics") {
    QLaurent q;
    CHECK(q.is_zero());
    q.add_term(3, 5);
    q.add_term(-3, 5);
    CHECK(q.is_zero()); // cancelled terms are dropped
    q.add_term(2, -1);
    q.add_term(1, 4);
    CHECK(q.coeff(-1) == 2);
    CHECK(q.coeff(4) == 1);
    CHECK(q.coeff(0) == 0);
    CHECK(q.min_exp() == -1);
    CHECK(q.max_exp() == 4);
    CHECK_THROWS_AS(QLaurent{}.min_exp(), std::logic_error);
}

TEST_CASE("QLaurent arithmetic") {
    const auto a = from_pairs({{0, 1}, {1, 1}});  // 1 + q
    const auto b = from_pairs({{0, 1}, {-1, 2}}); // 1 + 2/q
    const auto prod = a * b;
    CHECK(prod == from_pairs({{-1, 2}, {0, 3}, {1, 1}, {2, 0}}));
    CHECK(prod.coeff(1) == 1);

    QLaurent s = a;
    s += b;
    CHECK(s == from_pairs({{-1, 2}, {0, 2}, {1, 1}}));
    s -= b;
    CHECK(s == a);

    CHECK(from_pairs({{-2, 1}, {0, 5}, {2, 1}}).is_palindromic());
    CHECK(from_pairs({{1, 3}, {4, 3}}).is_palindromic());
    CHECK(!from_pairs({{0, 1}, {1, 2}}).is_palindromic());
    CHECK(from_pairs({{0, 1}, {3, 2}}).all_nonnegative());
    CHECK(!from_pairs({{0, 1}, {3, -2}}).all_nonnegative());
}

TEST_CASE("first product coefficients by hand") {
    const auto s = product_series(2);
    CHECK(s.at(0) == QLaurent::monomial(1, 0));
    CHECK(s.at(1) == from_pairs({{1, 1}, {0, -2}, {-1, 1}}));
    CHECK(s.at(2) == from_pairs({{2, 1}, {1, -1}, {-1, -1}, {-2, 1}}));
}

TEST_CASE("sum side uses the built polynomials") {
    const auto s = rhs_series(2);
    CHECK(s.at(0) == QLaurent::monomial(1, 0));
    CHECK(s.at(1) == from_pairs({{1, 1}, {0, -2}, {-1, 1}}));
    CHECK(s.at(2) == from_pairs({{2, 1}, {1, -1}, {-1, -1}, {-2, 1}}));
}

TEST_CASE("truncation consistency") {
    const auto big = product_series(10);
    const auto small = product_series(6);
    CHECK(big.truncated(6) == small);
    CHECK_THROWS_AS(small.truncated(8), std::invalid_argument);
}

TEST_CASE("product equals sum side at a modest order") {
    const int order = 16;
    const auto lhs = product_series(order);
    const auto rhs = rhs_series(order);
    CHECK(series_equal(lhs, rhs));
    CHECK(!first_mismatch(lhs, rhs).has_value());
}

TEST_CASE("first_mismatch reports the earliest difference") {
    auto lhs = product_series(5);
    auto rhs = rhs_series(5);
    rhs.at(3).add_term(7, -2);
    rhs.at(4).add_term(1, 0);
    const auto m = first_mismatch(lhs, rhs);
    REQUIRE(m.has_value());
    CHECK(m->t_power == 3);
    CHECK(m->q_exp == -2);
    CHECK(m->rhs_coeff - m->lhs_coeff == 7);

    const auto short_series = product_series(3);
    CHECK_THROWS_AS((void)first_mismatch(lhs, short_series),
                    std::invalid_argument);
}

TEST_CASE("division by q + 1/q - 2 is exact exactly when it should be") {
    const auto divisor = from_pairs({{1, 1}, {-1, 1}, {0, -2}});

    QLaurent quotient;
    CHECK(divide_by_q_plus_qinv_minus_two(divisor, quotient));
    CHECK(quotient == QLaurent::monomial(1, 0));

    CHECK(divide_by_q_plus_qinv_minus_two(QLaurent{}, quotient));
    CHECK(quotient.is_zero());

    // (q + 1/q - 2) * (q^2 + 5 + q^-2)
    const auto f = divisor * from_pairs({{2, 1}, {0, 5}, {-2, 1}});
    CHECK(divide_by_q_plus_qinv_minus_two(f, quotient));
    CHECK(quotient == from_pairs({{2, 1}, {0, 5}, {-2, 1}}));

    // not divisible: q - 1 vanishes only to first order at q = 1
    CHECK(!divide_by_q_plus_qinv_minus_two(from_pairs({{1, 1}, {0, -1}}), quotient));
    CHECK(!divide_by_q_plus_qinv_minus_two(QLaurent::monomial(3, 0), quotient));
    CHECK(!divide_by_q_plus_qinv_minus_two(from_pairs({{5, 2}, {-3, 1}}), quotient));
}

TEST_CASE("product coefficients divide down to the centered polynomials") {
    const int order = 12;
    const auto lhs = product_series(order);
    for (int n = 1; n <= order; ++n) {
        QLaurent quotient;
        REQUIRE(divide_by_q_plus_qinv_minus_two(lhs.at(n), quotient));
        CHECK(quotient == centered(n, Family::P));
        CHECK(quotient.is_palindromic());
        CHECK(quotient.all_nonnegative());
    }
}

TEST_CASE("exploration series carries the other family's polynomials") {
    const auto s = l_family_sum_series(5);
    CHECK(s.at(0).is_zero());
    for (int n = 1; n <= 5; ++n) CHECK(s.at(n) == centered(n, Family::L));
}
