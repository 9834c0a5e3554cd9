#include "birmax/cyclo.hpp"

#include <algorithm>
#include <utility>

namespace birmax {

std::string Eisenstein::to_string() const {
    if (b == 0) return std::to_string(a);
    std::string w = b == 1 ? "w" : b == -1 ? "-w" : std::to_string(b) + "w";
    if (a == 0) return w;
    if (w[0] == '-') return std::to_string(a) + " - " + w.substr(1);
    return std::to_string(a) + " + " + w;
}

Eisenstein exact_div(const Eisenstein& x, const Eisenstein& y) {
    if (y.is_zero()) throw ContractError("division by zero in Z[w]");
    Eisenstein p = x * y.conj();
    auto n = y.norm();
    if (p.a % n != 0 || p.b % n != 0) throw ContractError("inexact division in Z[w]");
    return {p.a / n, p.b / n};
}

Poly Poly::lambda_power(int k, Eisenstein c) {
    Poly p;
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Eisenstein{});
    p.coeffs_[k] = c;
    p.trim();
    return p;
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + coeffs_[i];
        if (i < o.coeffs_.size()) r.coeffs_[i] = r.coeffs_[i] + o.coeffs_[i];
    }
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this + neg;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Eisenstein{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
    r.trim();
    return r;
}

Poly Poly::reduce_cyclic(int n) const {
    Poly r;
    r.coeffs_.assign(std::min<std::size_t>(coeffs_.size(), n), Eisenstein{});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i % n] = r.coeffs_[i % n] + coeffs_[i];
    r.trim();
    return r;
}

Mat3 identity3() { return diag3(1, 1, 1); }

Mat3 diag3(const Poly& x, const Poly& y, const Poly& z) {
    Mat3 m{};
    m[0][0] = x;
    m[1][1] = y;
    m[2][2] = z;
    return m;
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

Mat3 scale(const Poly& c, const Mat3& a) {
    Mat3 r = a;
    for (auto& row : r)
        for (auto& e : row) e = c * e;
    return r;
}

Mat3 transpose(const Mat3& a) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

Mat3 reduce_cyclic(const Mat3& a, int n) {
    Mat3 r = a;
    for (auto& row : r)
        for (auto& e : row) e = e.reduce_cyclic(n);
    return r;
}

bool is_constant(const Mat3& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

namespace {

using Row = std::array<Eisenstein, 3>;

void require_constant(const Mat3& a) {
    if (!is_constant(a)) throw ContractError("expected a constant matrix");
}

Eisenstein at(const Mat3& a, int i, int j) { return a[i][j].constant(); }

// Rank over Q(w) by division-free elimination.
int rank_of(std::vector<Row> rows) {
    int rank = 0;
    for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [&](const Row& r) { return !r[col].is_zero(); });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + rank, pivot);
        const Row p = rows[rank];
        for (std::size_t k = rank + 1; k < rows.size(); ++k) {
            Eisenstein f = rows[k][col];
            for (int j = 0; j < 3; ++j) rows[k][j] = p[col] * rows[k][j] - f * p[j];
        }
        ++rank;
    }
    return rank;
}

const Eisenstein kCubeRoots[] = {{1, 0}, {0, 1}, {-1, -1}};

}  // namespace

Eisenstein det(const Mat3& a) {
    require_constant(a);
    auto m = [&](int i, int j) { return at(a, i, j); };
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 inverse(const Mat3& a) {
    Eisenstein d = det(a);
    if (d.norm() != 1) throw ContractError("matrix is not invertible over Z[w]");
    auto m = [&](int i, int j) { return at(a, i % 3, j % 3); };
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // cofactor of (j, i), using cyclic index shifts for the sign
            Eisenstein c = m(j + 1, i + 1) * m(j + 2, i + 2) - m(j + 1, i + 2) * m(j + 2, i + 1);
            r[i][j] = exact_div(c, d);
        }
    return r;
}

std::optional<Eisenstein> scalar_value(const Mat3& a) {
    if (!is_constant(a)) return std::nullopt;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !a[i][j].is_zero()) return std::nullopt;
    Eisenstein c = at(a, 0, 0);
    if (c.is_zero() || at(a, 1, 1) != c || at(a, 2, 2) != c) return std::nullopt;
    return c;
}

bool proj_eq(const Mat3& a, const Mat3& b) {
    if (det(a).is_zero() || det(b).is_zero()) throw ContractError("proj_eq needs invertible matrices");
    int pi = -1, pj = -1;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (a[i][j].is_zero() != b[i][j].is_zero()) return false;
            if (pi < 0 && !b[i][j].is_zero()) pi = i, pj = j;
        }
    // a = c*b  iff  a_ij * b_pq = a_pq * b_ij for a fixed nonzero b_pq
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (at(a, i, j) * at(b, pi, pj) != at(a, pi, pj) * at(b, i, j)) return false;
    return true;
}

std::optional<int> proj_order(const Mat3& a, int max_power) {
    require_constant(a);
    Mat3 p = a;
    for (int n = 1; n <= max_power; ++n) {
        if (scalar_value(p)) return n;
        p = mat_mul(p, a);
    }
    return std::nullopt;
}

bool has_common_eigenvector(const Mat3& a, const Mat3& b) {
    for (const auto* m : {&a, &b}) {
        auto cube = scalar_value(mat_mul(*m, mat_mul(*m, *m)));
        if (!cube || *cube != Eisenstein{1, 0})
            throw ContractError("has_common_eigenvector needs matrices of order dividing 3");
    }
    // Such matrices are diagonalisable with eigenvalues among the cube roots
    // of unity, so it suffices to intersect their eigenspaces.
    for (const auto& za : kCubeRoots)
        for (const auto& zb : kCubeRoots) {
            std::vector<Row> rows;
            for (const auto& [m, z] : {std::pair{&a, za}, std::pair{&b, zb}})
                for (int i = 0; i < 3; ++i) {
                    Row r;
                    for (int j = 0; j < 3; ++j) r[j] = at(*m, i, j) - (i == j ? z : Eisenstein{});
                    rows.push_back(r);
                }
            if (rank_of(rows) < 3) return true;
        }
    return false;
}

bool irreducible_pair(const Mat3& a, const Mat3& b) {
    return !has_common_eigenvector(a, b) && !has_common_eigenvector(transpose(a), transpose(b));
}

bool HeisenbergReport::ok() const {
    if (order_diagonal != 3 || order_permutation != 3 || !commutator_scalar) return false;
    const auto& c = *commutator_scalar;
    bool primitive_cube_root = c == Eisenstein::omega() || c == Eisenstein{-1, -1};
    return primitive_cube_root && irreducible;
}

Mat3 heisenberg_diagonal(bool dualized) {
    Poly w = Eisenstein::omega(), w2 = Eisenstein{-1, -1};
    return dualized ? diag3(1, w2, w) : diag3(1, w, w2);
}

Mat3 heisenberg_permutation() {
    Mat3 p{};
    p[0][1] = 1;
    p[1][2] = 1;
    p[2][0] = 1;
    return p;
}

HeisenbergReport verify_heisenberg(bool dualized) {
    Mat3 d = heisenberg_diagonal(dualized);
    Mat3 p = heisenberg_permutation();
    HeisenbergReport r;
    r.order_diagonal = proj_order(d);
    r.order_permutation = proj_order(p);
    Mat3 comm = mat_mul(mat_mul(p, d), mat_mul(inverse(p), inverse(d)));
    r.commutator_scalar = scalar_value(comm);
    r.irreducible = irreducible_pair(p, d);
    return r;
}

Mat3 omega_phi() { return diag3(1, Poly::lambda_power(1), Poly::lambda_power(2)); }

Mat3 omega_cycle() {
    Mat3 a{};
    a[0][2] = 1;
    a[1][0] = 1;
    a[2][1] = 1;
    return a;
}

bool verify_omega_identity(const Mat3& a, int twist_power) {
    Mat3 phi = omega_phi();
    Mat3 twisted = reduce_cyclic(scale(Poly::lambda_power(twist_power), phi), 3);
    return reduce_cyclic(mat_mul(phi, a), 3) == reduce_cyclic(mat_mul(a, twisted), 3);
}

}  // namespace birmax
