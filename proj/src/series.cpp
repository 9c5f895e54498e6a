#include "divpoly/series.hpp"

#include <stdexcept>

#include "divpoly/checked.hpp"
#include "divpoly/poly.hpp"

namespace divpoly {

QLaurent QLaurent::monomial(i64 coeff, i64 exp) {
    QLaurent q;
    q.add_term(coeff, exp);
    return q;
}

i64 QLaurent::coeff(i64 exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void QLaurent::add_term(i64 coeff, i64 exp) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

i64 QLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

i64 QLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

QLaurent& QLaurent::operator+=(const QLaurent& other) {
    for (const auto& [exp, c] : other.terms_) add_term(c, exp);
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& other) {
    for (const auto& [exp, c] : other.terms_) add_term(checked_sub(i64{0}, c), exp);
    return *this;
}

QLaurent QLaurent::operator*(const QLaurent& other) const {
    QLaurent out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            out.add_term(checked_mul(c1, c2), checked_add(e1, e2));
    return out;
}

bool QLaurent::is_palindromic() const {
    if (terms_.empty()) return true;
    const i64 lo = min_exp(), hi = max_exp();
    for (const auto& [exp, c] : terms_)
        if (c != coeff(lo + hi - exp)) return false;
    return true;
}

bool QLaurent::all_nonnegative() const {
    for (const auto& [exp, c] : terms_) {
        (void)exp;
        if (c < 0) return false;
    }
    return true;
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    TruncatedSeries out(new_order);
    for (int k = 0; k <= new_order; ++k) out.at(k) = at(k);
    return out;
}

TruncatedSeries truncated_product(const TruncatedSeries& x, const TruncatedSeries& y) {
    if (x.order() != y.order())
        throw std::invalid_argument("series order mismatch in product");
    const int order = x.order();
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (x.at(i).is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (y.at(j).is_zero()) continue;
            out.at(i + j) += x.at(i) * y.at(j);
        }
    }
    return out;
}

namespace {

// (1 - t^m)^2 as a truncated series.
TruncatedSeries numerator_factor(int m, int order) {
    TruncatedSeries s(order);
    s.at(0) = QLaurent::monomial(1, 0);
    if (m <= order) s.at(m) = QLaurent::monomial(-2, 0);
    if (2 * m <= order) s.at(2 * m) = QLaurent::monomial(1, 0);
    return s;
}

// 1 / (1 - q^e t^m) = sum_j q^{e*j} t^{m*j}, truncated.
TruncatedSeries geometric_factor(i64 e, int m, int order) {
    TruncatedSeries s(order);
    for (int j = 0; j * m <= order; ++j)
        s.at(j * m) = QLaurent::monomial(1, e * j);
    return s;
}

} // namespace

TruncatedSeries product_series(int order) {
    TruncatedSeries acc(order);
    acc.at(0) = QLaurent::monomial(1, 0);
    for (int m = 1; m <= order; ++m) {
        acc = truncated_product(acc, numerator_factor(m, order));
        acc = truncated_product(acc, geometric_factor(1, m, order));
        acc = truncated_product(acc, geometric_factor(-1, m, order));
    }
    return acc;
}

namespace {

// P_n(q)/q^{n-1}: coefficient array recentered so array index j maps to
// exponent j - (n-1).
QLaurent centered_poly(i64 n, Family family) {
    const SymmetricLaurentPoly p = build_poly(n, family);
    QLaurent out;
    const auto cs = p.coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j)
        out.add_term(cs[j], static_cast<i64>(j) - p.center());
    return out;
}

} // namespace

TruncatedSeries rhs_series(int order) {
    QLaurent multiplier;
    multiplier.add_term(1, 1);
    multiplier.add_term(1, -1);
    multiplier.add_term(-2, 0);

    TruncatedSeries s(order);
    s.at(0) = QLaurent::monomial(1, 0);
    for (int n = 1; n <= order; ++n)
        s.at(n) = multiplier * centered_poly(n, Family::P);
    return s;
}

std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& lhs,
                                             const TruncatedSeries& rhs) {
    if (lhs.order() != rhs.order())
        throw std::invalid_argument("series order mismatch in comparison");
    for (int k = 0; k <= lhs.order(); ++k) {
        const QLaurent& a = lhs.at(k);
        const QLaurent& b = rhs.at(k);
        if (a == b) continue;
        // Walk the union of exponents in increasing order.
        auto ia = a.terms().begin(), ib = b.terms().begin();
        while (ia != a.terms().end() || ib != b.terms().end()) {
            i64 exp;
            if (ia == a.terms().end()) exp = ib->first;
            else if (ib == b.terms().end()) exp = ia->first;
            else exp = std::min(ia->first, ib->first);
            const i64 ca = a.coeff(exp), cb = b.coeff(exp);
            if (ca != cb) return SeriesMismatch{k, exp, ca, cb};
            if (ia != a.terms().end() && ia->first == exp) ++ia;
            if (ib != b.terms().end() && ib->first == exp) ++ib;
        }
    }
    return std::nullopt;
}

bool series_equal(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    return !first_mismatch(lhs, rhs).has_value();
}

bool divide_by_q_plus_qinv_minus_two(const QLaurent& f, QLaurent& quotient) {
    quotient = QLaurent{};
    if (f.is_zero()) return true;
    // q + q^{-1} - 2 = q^{-1} (q - 1)^2: multiply by q, then divide by
    // (q - 1) twice. Synthetic division by (q - 1) of sum c_i q^{lo+i}
    // gives quotient entries b_i = -(c_0 + ... + c_i); the division is
    // exact iff the last entry comes out zero.
    const i64 lo = f.min_exp() + 1;
    const i64 span = f.max_exp() + 1 - lo;
    std::vector<i64> c(static_cast<std::size_t>(span) + 1, 0);
    for (const auto& [exp, coeff] : f.terms())
        c[static_cast<std::size_t>(exp + 1 - lo)] = coeff;

    for (int pass = 0; pass < 2; ++pass) {
        i64 run = 0;
        for (auto& x : c) {
            run = checked_add(run, x);
            x = checked_sub(i64{0}, run);
        }
        if (c.back() != 0) return false;
        c.pop_back();
        if (c.empty()) break;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        quotient.add_term(c[i], lo + static_cast<i64>(i));
    return true;
}

TruncatedSeries l_family_sum_series(int order) {
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n)
        s.at(n) = centered_poly(n, Family::L);
    return s;
}

} // namespace divpoly
