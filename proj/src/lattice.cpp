#include "hz/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace hz {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : r_(rows.size()), c_(rows.size() ? rows.begin()->size() : 0) {
    for (const auto& row : rows) {
        if (row.size() != c_) throw DomainError("ragged matrix literal");
        for (long x : row) e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DomainError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    return IntVec(e_.begin() + i * c_, e_.begin() + (i + 1) * c_);
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (c_ != o.r_) throw DomainError("matrix dimension mismatch");
    IntMatrix m(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < c_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.c_; ++j) m(i, j) += a * o(k, j);
        }
    return m;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (c_ != v.size()) throw DomainError("matrix-vector dimension mismatch");
    IntVec out(r_, Int(0));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

IntMatrix IntMatrix::drop_col(std::size_t j) const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < c_; ++k)
        if (k != j) idx.push_back(k);
    return select_cols(idx);
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    IntMatrix m(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < r_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < c_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < r_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix A = m, U = IntMatrix::identity(R), V = IntMatrix::identity(C);
    auto row_add = [&](std::size_t d, std::size_t s, const Int& k) {
        A.add_row(d, s, k);
        U.add_row(d, s, k);
    };
    auto col_add = [&](std::size_t d, std::size_t s, const Int& k) {
        A.add_col(d, s, k);
        V.add_col(d, s, k);
    };
    for (std::size_t t = 0; t < std::min(R, C); ++t) {
        // pivot on the entry of least absolute value
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (A(i, j) != 0 && (!found || abs(A(i, j)) < abs(A(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        A.swap_rows(t, pi);
        U.swap_rows(t, pi);
        A.swap_cols(t, pj);
        V.swap_cols(t, pj);
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (A(i, t) == 0) continue;
                row_add(i, t, -floor_div(A(i, t), A(t, t)));
                if (A(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (A(t, j) == 0) continue;
                col_add(j, t, -floor_div(A(t, j), A(t, t)));
                if (A(t, j) != 0) dirty = true;
            }
            if (dirty) {
                // move the smallest remainder in row/column t onto the pivot
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < R; ++i)
                    if (A(i, t) != 0 && abs(A(i, t)) < abs(A(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < C; ++j)
                    if (A(t, j) != 0 && abs(A(t, j)) < abs(A(bi, bj))) bi = t, bj = j;
                A.swap_rows(t, bi);
                U.swap_rows(t, bi);
                A.swap_cols(t, bj);
                V.swap_cols(t, bj);
                continue;
            }
            // divisibility of the remaining block by the pivot
            std::size_t bad = R;
            for (std::size_t i = t + 1; i < R && bad == R; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (A(i, j) % A(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == R) break;
            row_add(t, bad, Int(1));
        }
        if (A(t, t) < 0) {
            for (std::size_t j = 0; j < C; ++j) A(t, j) = -A(t, j);
            for (std::size_t j = 0; j < R; ++j) U(t, j) = -U(t, j);
        }
    }
    return {U, A, V};
}

int matrix_rank(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    int r = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.D(i, i) != 0) ++r;
    return r;
}

std::vector<IntVec> hermite_basis(const std::vector<IntVec>& gens, std::size_t dim) {
    std::vector<IntVec> rows = gens;
    for (const auto& r : rows)
        if (r.size() != dim) throw DomainError("vector length mismatch");
    std::size_t p = 0;
    for (std::size_t col = 0; col < dim && p < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = p; i < rows.size(); ++i)
                if (rows[i][col] != 0 && (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])))
                    best = i;
            if (best == rows.size()) break;
            std::swap(rows[p], rows[best]);
            bool more = false;
            for (std::size_t i = p + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Int k = floor_div(rows[i][col], rows[p][col]);
                for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= k * rows[p][j];
                if (rows[i][col] != 0) more = true;
            }
            if (!more) break;
        }
        if (p >= rows.size() || rows[p][col] == 0) continue;
        if (rows[p][col] < 0)
            for (auto& x : rows[p]) x = -x;
        for (std::size_t i = 0; i < p; ++i) {
            Int k = floor_div(rows[i][col], rows[p][col]);
            for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= k * rows[p][j];
        }
        ++p;
    }
    rows.resize(p);
    return rows;
}

bool same_lattice(const std::vector<IntVec>& a, const std::vector<IntVec>& b, std::size_t dim) {
    return hermite_basis(a, dim) == hermite_basis(b, dim);
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    int rk = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.D(i, i) != 0) ++rk;
    std::vector<IntVec> gens;
    for (std::size_t j = rk; j < m.cols(); ++j) gens.push_back(s.V.col(j));
    return hermite_basis(gens, m.cols());
}

AbelianGroupStructure cokernel_invariants(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    AbelianGroupStructure g;
    int rk = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        const Int& d = s.D(i, i);
        if (d == 0) continue;
        ++rk;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = static_cast<int>(m.rows()) - rk;
    return g;
}

void xgcd(const Int& x, const Int& y, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

std::vector<Int> suffix_gcds(const std::vector<Int>& weights) {
    std::vector<Int> lam(weights.size());
    Int g = 0;
    for (std::size_t k = weights.size(); k-- > 0;) {
        g = gcd(g, weights[k]);
        lam[k] = g;
    }
    return lam;
}

IntVec solve_gcd_chain_row(int i, const std::vector<Int>& w, const std::vector<Int>& lam) {
    const int n = static_cast<int>(w.size()) - 1;
    if (n < 1 || i < 1 || i > n) throw DomainError("row index out of range");
    if (lam.size() != w.size()) throw DomainError("gcd chain length mismatch");
    // lambda_{n+1} := w_{n+1}, so the last row fits the general rule
    auto L = [&](int k) -> Int { return k == n + 1 ? w[n] : lam[k - 1]; };
    IntVec row(n + 1, Int(0));
    row[i - 1] = L(i + 1) / L(i);
    // sum_{j>i} b_ij (w_j / lambda_{i+1}) = -w_i / lambda_i, Bezout coefficients left to right
    Int target = -(w[i - 1] / L(i));
    std::vector<Int> coef;
    Int g = 0;
    for (int j = i + 1; j <= n + 1; ++j) {
        Int wj = w[j - 1] / L(i + 1);
        if (coef.empty()) {
            coef.push_back(1);
            g = wj;
            continue;
        }
        Int ng, s, t;
        xgcd(g, wj, ng, s, t);
        for (auto& c : coef) c *= s;
        coef.push_back(t);
        g = ng;
    }
    if (g != 1) throw DomainError("gcd chain is inconsistent with the weights");
    for (int j = i + 1; j <= n + 1; ++j) row[j - 1] = coef[j - i - 1] * target;
    // reduce b_ic into [0, diag_c) using the canonical lower rows
    for (int c = i + 1; c <= n; ++c) {
        IntVec lower = solve_gcd_chain_row(c, w, lam);
        const Int& d = lower[c - 1];
        Int k = floor_div(row[c - 1], d);
        if (k == 0) continue;
        for (int j = 0; j <= n; ++j) row[j] -= k * lower[j];
    }
    return row;
}

}  // namespace hz
