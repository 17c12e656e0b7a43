#pragma once

#include <array>
#include <cstdint>

#include "g2c/linalg.hpp"
#include "g2c/scalar.hpp"

namespace g2c {

/// The 7 oriented lines fixing the signs of the basis products:
/// e_i e_j = +e_{i*j} iff (i, j, i*j) is a cyclic rotation of a member.
inline constexpr std::array<std::array<int, 3>, 7> kOrientedLines = {
    {{1, 2, 5}, {5, 6, 7}, {7, 4, 1}, {1, 3, 6}, {6, 4, 2}, {2, 7, 3}, {3, 4, 5}}};

/// +1 or -1 for distinct i, j in 1..7 per the oriented-line convention.
int basis_sign(int i, int j);

/// Complex octonion over the ordered basis (e0 = 1, e1, ..., e7), with
/// e_i^2 = -1 and products read off the oriented Fano lines.
/// The grading degree of e_i is g_i (identity for e0).
class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Scalar, 8> coords) : c_(std::move(coords)) {}

    static Octonion basis(int i);
    static Octonion one() { return basis(0); }

    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const std::array<Scalar, 8>& coords() const { return c_; }

    bool is_zero() const;

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& o) const;  // full Cayley product
    friend Octonion operator*(const Scalar& s, const Octonion& x);

    bool operator==(const Octonion& o) const { return c_ == o.c_; }
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    Octonion conj() const;
    Scalar trace() const;  // t(x) = x + conj(x), as a scalar multiple of 1
    Scalar norm() const;   // n(x) = x conj(x), likewise scalar

private:
    std::array<Scalar, 8> c_{};
};

Octonion commutator(const Octonion& x, const Octonion& y);
Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z);

/// Classical basis names as parsing aliases: "1", "i", "j", "l", "kl",
/// "k", "il", "jl" map onto 1, e1, e2, e3, e4, e5, e6, -e7 (jl carries
/// the sign, matching e7 = -jl).
Octonion octonion_from_name(const std::string& name);

/// 8x8 matrix (acting on octonion coordinates) of the inner derivation
/// D_{x,y}: z -> [[x,y],z] - 3(x,y,z).
Matrix derivation_matrix(const Octonion& x, const Octonion& y);

Octonion apply_matrix(const Matrix& m, const Octonion& z);

/// Leibniz check d(ab) = d(a)b + a d(b) over all 64 basis pairs.
bool is_derivation(const Matrix& d);

/// D_{x,yz} + D_{y,zx} + D_{z,xy} = 0.
bool check_cyclic_identity(const Octonion& x, const Octonion& y, const Octonion& z);

/// Degree of basis vector e_m in Z_2^3 terms: m itself (0 = identity).
inline int octonion_degree(int m) { return m; }

}  // namespace g2c
