// Brute-force lattice-point counting for positive definite binary
// quadratic forms. This is the independent ground truth every identity
// is tested against.
#ifndef DIVPOLY_QFORM_HPP
#define DIVPOLY_QFORM_HPP

#include <cstdint>

namespace divpoly {

using i64 = std::int64_t;

struct QuadForm {
    i64 a = 1;
    i64 b = 0;
    i64 c = 1;
};

// 4ac - b^2; positive exactly when the form is positive definite
// (with a > 0).
i64 form_discriminant(const QuadForm& f);

// floor(sqrt(n)) by Newton iteration, no floating point. n >= 0.
i64 integer_sqrt(i64 n);

// Number of integer pairs (x, y) with a x^2 + b x y + c y^2 = n.
// Sweeps y over |y| <= sqrt(4an/(4ac-b^2)) and solves the completed
// square (2ax + by)^2 = 4an - (4ac-b^2) y^2 exactly per y.
i64 representation_count(const QuadForm& f, i64 n);

// Slow cross-check: full rectangle scan over sound x and y bounds,
// evaluating the form at every pair. No perfect-square logic shared
// with the fast path.
i64 representation_count_rect(const QuadForm& f, i64 n);

// Second implementation path: sweep y >= 0 only and double by the
// (x, y) -> (-x, -y) symmetry.
i64 representation_count_halfplane(const QuadForm& f, i64 n);

} // namespace divpoly

#endif
