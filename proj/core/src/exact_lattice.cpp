#include "subapprox/exact_lattice.hpp"

#include <stdexcept>

#include "subapprox/error.hpp"

namespace subapprox {
namespace {

using Mat4 = std::array<IntVector4, 4>;

BigInt dot(const IntVector4& a, const IntVector4& b) {
    BigInt s = 0;
    for (std::size_t k = 0; k < 4; ++k) s += a[k] * b[k];
    return s;
}

// Column operations on the 2x4 working matrix, mirrored as the inverse row
// operations on `v` so that original = work * v holds throughout.
struct ColumnReducer {
    std::array<IntVector4, 2> work;
    Mat4 v;

    void subtract_column(std::size_t target, std::size_t source, const BigInt& k) {
        for (auto& row : work) row[target] -= k * row[source];
        for (std::size_t c = 0; c < 4; ++c) v[source][c] += k * v[target][c];
    }

    void swap_columns(std::size_t a, std::size_t b) {
        for (auto& row : work) std::swap(row[a], row[b]);
        std::swap(v[a], v[b]);
    }

    // Euclid on row `r` between the pivot column and column `c`, leaving
    // work[r][c] == 0.
    void eliminate(std::size_t r, std::size_t pivot, std::size_t c) {
        while (work[r][c] != 0) {
            BigInt k;
            mpz_tdiv_q(k.get_mpz_t(), work[r][pivot].get_mpz_t(), work[r][c].get_mpz_t());
            subtract_column(pivot, c, k);
            swap_columns(pivot, c);
        }
    }
};

// Lagrange-Gauss reduction of a rank-2 integer lattice basis.
void lagrange_reduce(IntVector4& a, IntVector4& b) {
    BigInt na = dot(a, a);
    BigInt nb = dot(b, b);
    if (na > nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    for (;;) {
        // b <- b - round(<a,b>/<a,a>) a
        BigInt num = 2 * dot(a, b) + na;
        BigInt den = 2 * na;
        BigInt k;
        mpz_fdiv_q(k.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (k != 0) {
            for (std::size_t c = 0; c < 4; ++c) b[c] -= k * a[c];
            nb = dot(b, b);
        }
        if (nb >= na) return;
        std::swap(a, b);
        std::swap(na, nb);
    }
}

bool all_zero(const std::array<BigInt, 6>& p) {
    for (const auto& x : p)
        if (x != 0) return false;
    return true;
}

}  // namespace

IntMatrix2x4 make_matrix(const std::array<long, 4>& q1, const std::array<long, 4>& q2) {
    IntMatrix2x4 m;
    for (std::size_t k = 0; k < 4; ++k) {
        m.q1[k] = q1[k];
        m.q2[k] = q2[k];
    }
    return m;
}

std::array<BigInt, 6> minors(const IntMatrix2x4& basis) {
    std::array<BigInt, 6> p;
    for (std::size_t k = 0; k < 6; ++k) {
        const auto i = static_cast<std::size_t>(kPairs[k][0] - 1);
        const auto j = static_cast<std::size_t>(kPairs[k][1] - 1);
        p[k] = basis.q1[i] * basis.q2[j] - basis.q1[j] * basis.q2[i];
    }
    return p;
}

PlueckerVector PlueckerVector::from_raw(std::array<BigInt, 6> raw) {
    if (all_zero(raw)) throw GeometryError("zero vector");
    if (pluecker_relation(raw) != 0) throw GeometryError("not decomposable");

    BigInt g = 0;
    for (const auto& x : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    const bool flip = [&] {
        for (const auto& x : raw)
            if (x != 0) return x < 0;
        return false;
    }();
    if (flip) g = -g;
    for (auto& x : raw) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return PlueckerVector(std::move(raw));
}

BigInt PlueckerVector::at(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > 4 || j > 4) throw std::out_of_range("Plücker index");
    return i < j ? p_[pair_index(i, j)] : BigInt(-p_[pair_index(j, i)]);
}

BigInt PlueckerVector::norm_sq() const {
    BigInt s = 0;
    for (const auto& x : p_) s += x * x;
    return s;
}

std::array<double, 6> PlueckerVector::to_double() const {
    std::array<double, 6> out{};
    for (std::size_t k = 0; k < 6; ++k) out[k] = p_[k].get_d();
    return out;
}

std::string PlueckerVector::to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < 6; ++k) {
        if (k) s += ",";
        s += p_[k].get_str();
    }
    return s + ")";
}

IntMatrix2x4 saturate(const IntMatrix2x4& spanning) {
    ColumnReducer r;
    r.work = {spanning.q1, spanning.q2};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.v[i][j] = (i == j) ? 1 : 0;

    // Bring row 0 to (h, 0, 0, 0), then row 1 to (*, h', 0, 0).
    for (std::size_t c = 1; c < 4; ++c) r.eliminate(0, 0, c);
    if (r.work[0][0] == 0) throw GeometryError("not a plane");
    for (std::size_t c = 2; c < 4; ++c) r.eliminate(1, 1, c);
    if (r.work[1][1] == 0) throw GeometryError("not a plane");

    // original = [H | 0] * v with v unimodular, so the first two rows of v
    // generate every integer point of the plane.
    IntMatrix2x4 out{r.v[0], r.v[1]};
    lagrange_reduce(out.q1, out.q2);

    // Orient so that the minors are the canonical vector itself.
    const auto p = minors(out);
    for (const auto& x : p) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& z : out.q2) z = -z;
        break;
    }
    return out;
}

PlueckerVector pluecker(const IntMatrix2x4& basis) {
    auto p = minors(basis);
    if (all_zero(p)) throw GeometryError("not a plane");
    return PlueckerVector::from_raw(std::move(p));
}

BigInt gram_det(const IntMatrix2x4& basis) {
    const BigInt g11 = dot(basis.q1, basis.q1);
    const BigInt g12 = dot(basis.q1, basis.q2);
    const BigInt g22 = dot(basis.q2, basis.q2);
    return g11 * g22 - g12 * g12;
}

BigInt height_sq(const RationalSubspace& subspace) {
    const BigInt via_gram = gram_det(subspace.basis());
    const BigInt via_pluecker = subspace.pluecker().norm_sq();
    if (via_gram != via_pluecker || via_gram != subspace.height_sq())
        throw std::logic_error("height mismatch between Gram determinant and Plücker norm");
    return via_gram;
}

RationalSubspace RationalSubspace::from_spanning(const IntMatrix2x4& spanning) {
    IntMatrix2x4 basis = saturate(spanning);
    PlueckerVector p = subapprox::pluecker(basis);
    BigInt h = gram_det(basis);
    if (h != p.norm_sq()) throw std::logic_error("Cauchy-Binet identity violated");
    return RationalSubspace(std::move(basis), std::move(p), std::move(h));
}

RationalSubspace subspace_from_pluecker(const std::array<BigInt, 6>& raw) {
    const PlueckerVector target = PlueckerVector::from_raw(raw);

    // For a pivot pair (i, j) with p_ij != 0 the contractions
    // v_k = sum_m p_{k,m} e_m, k in {i, j}, span the plane.
    std::size_t pivot = 0;
    while (target[pivot] == 0) ++pivot;
    const int i = kPairs[pivot][0];
    const int j = kPairs[pivot][1];
    IntMatrix2x4 spanning;
    for (int m = 1; m <= 4; ++m) {
        const auto c = static_cast<std::size_t>(m - 1);
        spanning.q1[c] = (m == i) ? BigInt(0) : target.at(i, m);
        spanning.q2[c] = (m == j) ? BigInt(0) : target.at(j, m);
    }
    RationalSubspace s = RationalSubspace::from_spanning(spanning);
    if (!(s.pluecker() == target)) throw std::logic_error("Plücker round trip failed");
    return s;
}

RationalSubspace subspace_from_pluecker(const PlueckerVector& p) { return subspace_from_pluecker(p.entries()); }

bool in_integer_span(const IntMatrix2x4& basis, const IntVector4& point) {
    const auto p = minors(basis);
    std::size_t k = 0;
    while (k < 6 && p[k] == 0) ++k;
    if (k == 6) throw GeometryError("not a plane");
    const auto i = static_cast<std::size_t>(kPairs[k][0] - 1);
    const auto j = static_cast<std::size_t>(kPairs[k][1] - 1);
    const BigInt& d = p[k];
    const BigInt num_a = point[i] * basis.q2[j] - basis.q2[i] * point[j];
    const BigInt num_b = basis.q1[i] * point[j] - point[i] * basis.q1[j];
    if (!mpz_divisible_p(num_a.get_mpz_t(), d.get_mpz_t()) || !mpz_divisible_p(num_b.get_mpz_t(), d.get_mpz_t()))
        return false;
    const BigInt a = num_a / d;
    const BigInt b = num_b / d;
    for (std::size_t c = 0; c < 4; ++c)
        if (a * basis.q1[c] + b * basis.q2[c] != point[c]) return false;
    return true;
}

}  // namespace subapprox
