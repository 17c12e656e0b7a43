#include "g2c/octonion.hpp"

#include <stdexcept>

#include "g2c/fano.hpp"

namespace g2c {

namespace {

struct MulTable {
    // product of basis elements: e_i e_j = sign[i][j] * e_{idx[i][j]}
    int sign[8][8];
    int idx[8][8];
    MulTable() {
        for (int i = 0; i < 8; ++i) {
            sign[0][i] = sign[i][0] = 1;
            idx[0][i] = idx[i][0] = i;
        }
        for (int i = 1; i <= 7; ++i) {
            sign[i][i] = -1;
            idx[i][i] = 0;
            for (int j = 1; j <= 7; ++j) {
                if (i == j) continue;
                idx[i][j] = star(i, j);
                sign[i][j] = 0;  // filled below
            }
        }
        for (const auto& line : kOrientedLines) {
            for (int r = 0; r < 3; ++r) {
                int a = line[r], b = line[(r + 1) % 3];
                sign[a][b] = 1;
                sign[b][a] = -1;
            }
        }
    }
};

const MulTable& mul_table() {
    static const MulTable t;
    return t;
}

}  // namespace

int basis_sign(int i, int j) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || i == j)
        throw std::invalid_argument("basis_sign: need distinct indices in 1..7");
    return mul_table().sign[i][j];
}

Octonion Octonion::basis(int i) {
    if (i < 0 || i > 7) throw std::out_of_range("Octonion::basis: index out of range");
    Octonion x;
    x.c_[i] = Scalar(1);
    return x;
}

bool Octonion::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Octonion Octonion::operator-() const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
    return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
    const MulTable& t = mul_table();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; j < 8; ++j) {
            if (o.c_[j].is_zero()) continue;
            Scalar term = c_[i] * o.c_[j];
            if (t.sign[i][j] < 0)
                r.c_[t.idx[i][j]] -= term;
            else
                r.c_[t.idx[i][j]] += term;
        }
    }
    return r;
}

Octonion operator*(const Scalar& s, const Octonion& x) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c_[i] = s * x.c_[i];
    return r;
}

Octonion Octonion::conj() const {
    Octonion r;
    r.c_[0] = c_[0];
    for (int i = 1; i < 8; ++i) r.c_[i] = -c_[i];
    return r;
}

Scalar Octonion::trace() const { return c_[0] + c_[0]; }

Scalar Octonion::norm() const {
    Octonion n = (*this) * conj();
    for (int i = 1; i < 8; ++i)
        if (!n.c_[i].is_zero()) throw std::logic_error("Octonion::norm: x conj(x) not scalar");
    return n.c_[0];
}

Octonion octonion_from_name(const std::string& name) {
    if (name == "1") return Octonion::basis(0);
    if (name == "i") return Octonion::basis(1);
    if (name == "j") return Octonion::basis(2);
    if (name == "l") return Octonion::basis(3);
    if (name == "kl") return Octonion::basis(4);
    if (name == "k") return Octonion::basis(5);
    if (name == "il") return Octonion::basis(6);
    if (name == "jl") return -Octonion::basis(7);
    throw std::invalid_argument("octonion_from_name: unknown basis name '" + name + "'");
}

Octonion commutator(const Octonion& x, const Octonion& y) { return x * y - y * x; }

Octonion associator(const Octonion& x, const Octonion& y, const Octonion& z) {
    return (x * y) * z - x * (y * z);
}

Matrix derivation_matrix(const Octonion& x, const Octonion& y) {
    Octonion xy = x * y;
    Octonion comm = xy - y * x;
    Matrix m(8, 8);
    for (int j = 0; j < 8; ++j) {
        Octonion ej = Octonion::basis(j);
        Octonion assoc = xy * ej - x * (y * ej);
        Octonion img = comm * ej - ej * comm - Scalar(3) * assoc;
        for (int i = 0; i < 8; ++i) m.at(i, j) = img[i];
    }
    return m;
}

Octonion apply_matrix(const Matrix& m, const Octonion& z) {
    if (m.rows() != 8 || m.cols() != 8) throw std::invalid_argument("apply_matrix: need 8x8");
    std::array<Scalar, 8> out;
    Vec v = m.apply(Vec(z.coords().begin(), z.coords().end()));
    for (int i = 0; i < 8; ++i) out[i] = v[i];
    return Octonion(out);
}

bool is_derivation(const Matrix& d) {
    if (d.rows() != 8 || d.cols() != 8) return false;
    std::array<Octonion, 8> de;
    for (int i = 0; i < 8; ++i) de[i] = apply_matrix(d, Octonion::basis(i));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            Octonion lhs = apply_matrix(d, Octonion::basis(a) * Octonion::basis(b));
            Octonion rhs = de[a] * Octonion::basis(b) + Octonion::basis(a) * de[b];
            if (lhs != rhs) return false;
        }
    return true;
}

bool check_cyclic_identity(const Octonion& x, const Octonion& y, const Octonion& z) {
    Matrix s = derivation_matrix(x, y * z) + derivation_matrix(y, z * x) + derivation_matrix(z, x * y);
    return s.is_zero();
}

}  // namespace g2c
