#pragma once

// Exact integer linear algebra for rational 2-planes in R^4: saturated
// lattice bases, canonical Plücker vectors and heights.

#include <array>
#include <cstddef>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace subapprox {

using BigInt = mpz_class;
using IntVector4 = std::array<BigInt, 4>;

/// An ordered pair of integer row vectors. Operations that need a plane
/// check the rank themselves and throw GeometryError("not a plane").
struct IntMatrix2x4 {
    IntVector4 q1;
    IntVector4 q2;
};

[[nodiscard]] IntMatrix2x4 make_matrix(const std::array<long, 4>& q1, const std::array<long, 4>& q2);

/// Position of the pair (i, j), 1 <= i < j <= 4, in the fixed order
/// (1,2), (1,3), (1,4), (2,3), (2,4), (3,4).
[[nodiscard]] constexpr std::size_t pair_index(int i, int j) {
    // i < j is assumed; rows of the upper triangle laid out consecutively.
    constexpr std::size_t offset[4] = {0, 3, 5, 6};
    return offset[i - 1] + static_cast<std::size_t>(j - i - 1);
}

inline constexpr std::array<std::array<int, 2>, 6> kPairs = {{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// p12*p34 - p13*p24 + p14*p23 for entries in the fixed pair order.
template <class T>
[[nodiscard]] constexpr T pluecker_relation(const std::array<T, 6>& p) {
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

/// The 2x2 minors (p12, ..., p34) of a basis, without normalisation.
[[nodiscard]] std::array<BigInt, 6> minors(const IntMatrix2x4& basis);

/// Canonical integer Plücker vector of a rational plane.
///
/// Invariants: the six entries satisfy the Plücker relation exactly, are not
/// all zero, have gcd 1, and the first nonzero entry is positive. Two bases
/// span the same plane iff their canonical vectors are equal.
class PlueckerVector {
public:
    /// Canonicalises raw coordinates. Throws GeometryError("zero vector") or
    /// GeometryError("not decomposable").
    static PlueckerVector from_raw(std::array<BigInt, 6> raw);

    [[nodiscard]] const BigInt& operator[](std::size_t k) const { return p_[k]; }
    [[nodiscard]] const std::array<BigInt, 6>& entries() const { return p_; }

    /// Signed coordinate p_{i,j} for any i != j in 1..4 (p_{j,i} = -p_{i,j}).
    [[nodiscard]] BigInt at(int i, int j) const;

    [[nodiscard]] BigInt norm_sq() const;
    [[nodiscard]] std::array<double, 6> to_double() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PlueckerVector& a, const PlueckerVector& b) { return a.p_ == b.p_; }
    friend bool operator<(const PlueckerVector& a, const PlueckerVector& b) { return a.p_ < b.p_; }

private:
    explicit PlueckerVector(std::array<BigInt, 6> p) : p_(std::move(p)) {}
    std::array<BigInt, 6> p_;
};

/// A rational 2-plane L together with a basis of L ∩ Z^4, its canonical
/// Plücker vector and H(L)^2 (the squared discriminant of L ∩ Z^4).
class RationalSubspace {
public:
    /// Plane spanned by an arbitrary rank-2 integer pair.
    static RationalSubspace from_spanning(const IntMatrix2x4& spanning);

    [[nodiscard]] const IntMatrix2x4& basis() const { return basis_; }
    [[nodiscard]] const PlueckerVector& pluecker() const { return pluecker_; }
    [[nodiscard]] const BigInt& height_sq() const { return height_sq_; }

    friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
        return a.pluecker_ == b.pluecker_;
    }

private:
    RationalSubspace(IntMatrix2x4 basis, PlueckerVector p, BigInt h)
        : basis_(std::move(basis)), pluecker_(std::move(p)), height_sq_(std::move(h)) {}

    friend RationalSubspace subspace_from_pluecker(const std::array<BigInt, 6>& raw);

    IntMatrix2x4 basis_;
    PlueckerVector pluecker_;
    BigInt height_sq_;
};

/// Basis of L ∩ Z^4 for the plane L spanned by the rows. The result is
/// Lagrange-reduced and oriented so that its minors equal the canonical
/// Plücker vector. Throws GeometryError("not a plane") on rank < 2.
[[nodiscard]] IntMatrix2x4 saturate(const IntMatrix2x4& spanning);

/// Canonical Plücker vector of the plane spanned by the rows.
[[nodiscard]] PlueckerVector pluecker(const IntMatrix2x4& basis);

/// det of the 2x2 Gram matrix of the rows.
[[nodiscard]] BigInt gram_det(const IntMatrix2x4& basis);

/// H(L)^2, computed both as det Gram(basis) and as the squared norm of the
/// canonical Plücker vector; throws std::logic_error if they ever differ.
[[nodiscard]] BigInt height_sq(const RationalSubspace& subspace);

/// The plane with the given Plücker coordinates (any nonzero multiple of
/// the canonical vector). Throws GeometryError("not decomposable") when the
/// relation fails.
[[nodiscard]] RationalSubspace subspace_from_pluecker(const std::array<BigInt, 6>& raw);
[[nodiscard]] RationalSubspace subspace_from_pluecker(const PlueckerVector& p);

/// True iff `point` is an integer combination of the two rows of `basis`.
[[nodiscard]] bool in_integer_span(const IntMatrix2x4& basis, const IntVector4& point);

}  // namespace subapprox
