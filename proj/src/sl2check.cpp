#include "afq/sl2check.hpp"

#include <stdexcept>

#include "afq/ratfunc.hpp"

namespace afq {

Matrix mat_zero(int rows, int cols) {
    return Matrix(rows, std::vector<LaurentPoly>(cols));
}

Matrix mat_identity(int n) {
    Matrix m = mat_zero(n, n);
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    const int rows = static_cast<int>(a.size());
    const int inner = static_cast<int>(b.size());
    const int cols = static_cast<int>(b[0].size());
    Matrix r = mat_zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < cols; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

Matrix mat_pow(const Matrix& a, int p) {
    Matrix r = mat_identity(static_cast<int>(a.size()));
    for (int k = 0; k < p; ++k) r = mat_mul(r, a);
    return r;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const int ar = static_cast<int>(a.size()), ac = static_cast<int>(a[0].size());
    const int br = static_cast<int>(b.size()), bc = static_cast<int>(b[0].size());
    Matrix r = mat_zero(ar * br, ac * bc);
    for (int i = 0; i < ar; ++i)
        for (int j = 0; j < ac; ++j) {
            if (a[i][j].is_zero()) continue;
            for (int k = 0; k < br; ++k)
                for (int m = 0; m < bc; ++m) r[i * br + k][j * bc + m] = a[i][j] * b[k][m];
        }
    return r;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

Sl2Module build_sl2(int n) {
    if (n < 0) throw std::domain_error("negative highest weight");
    Sl2Module m;
    m.n = n;
    m.E = mat_zero(n + 1, n + 1);
    m.F = mat_zero(n + 1, n + 1);
    m.K = mat_zero(n + 1, n + 1);
    m.Kinv = mat_zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        m.K[k][k] = LaurentPoly::q_power(n - 2 * k);
        m.Kinv[k][k] = LaurentPoly::q_power(2 * k - n);
        if (k < n) m.F[k + 1][k] = qint(k + 1);
        if (k > 0) m.E[k - 1][k] = qint(n - k + 1);
    }
    return m;
}

Matrix tensor_f_power(const Sl2Module& left, const Sl2Module& right, int p) {
    const Matrix df = mat_add(kronecker(left.F, right.Kinv),
                              kronecker(mat_identity(left.dim()), right.F));
    return mat_pow(df, p);
}

Matrix tensor_e(const Sl2Module& left, const Sl2Module& right) {
    return mat_add(kronecker(left.E, mat_identity(right.dim())), kronecker(left.K, right.E));
}

Matrix tensor_k(const Sl2Module& left, const Sl2Module& right) {
    return kronecker(left.K, right.K);
}

Rdc10Result rdc10_check(int n_lambda, int string_dim) {
    if (n_lambda < 0) throw std::domain_error("negative highest weight");
    if (string_dim < 1) throw std::domain_error("empty string");
    const Sl2Module left = build_sl2(n_lambda);
    const Sl2Module right = build_sl2(string_dim - 1);
    const int dim = left.dim() * right.dim();
    const int p = n_lambda + 1;

    // Column vectors: target = Delta(F)^p (v_0 (x) u_0),
    // b_k = Delta(F)^{p-k} (v_0 (x) F^k u_0).
    auto column = [&](const Matrix& m, int col) {
        std::vector<LaurentPoly> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = m[i][col];
        return v;
    };
    const std::vector<LaurentPoly> target = column(tensor_f_power(left, right, p), 0);

    std::vector<std::vector<LaurentPoly>> basis;  // usable b_k columns
    std::vector<int> which_k;
    for (int k = 1; k <= p; ++k) {
        if (k > right.n) break;  // F^k u_0 = 0
        LaurentPoly scale(1);
        for (int j = 1; j <= k; ++j) scale *= qint(j);  // F^k u_0 = [k]! u_k
        const Matrix power = tensor_f_power(left, right, p - k);
        std::vector<LaurentPoly> b(dim);
        for (int i = 0; i < dim; ++i) b[i] = power[i][k] * scale;
        basis.push_back(std::move(b));
        which_k.push_back(k);
    }

    // Exact elimination of [basis | target] over the rational-function field.
    const int cols = static_cast<int>(basis.size());
    std::vector<std::vector<RatFunc>> m(dim, std::vector<RatFunc>(cols + 1));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = RatFunc(basis[j][i]);
        m[i][cols] = RatFunc(target[i]);
    }
    std::vector<int> pivot_row(cols, -1);
    int row = 0;
    for (int col = 0; col < cols && row < dim; ++col) {
        int p_row = -1;
        for (int i = row; i < dim; ++i)
            if (!m[i][col].is_zero()) { p_row = i; break; }
        if (p_row < 0) continue;
        std::swap(m[row], m[p_row]);
        for (int i = 0; i < dim; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            RatFunc fac = m[i][col] / m[row][col];
            for (int j = col; j <= cols; ++j) m[i][j] = m[i][j] - fac * m[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    Rdc10Result res;
    res.verified = true;
    for (int i = row; i < dim; ++i)
        if (!m[i][cols].is_zero()) res.verified = false;

    std::vector<RatFunc> c(p + 1);  // c[1..p], free variables stay zero
    for (int col = 0; col < cols; ++col)
        if (pivot_row[col] >= 0)
            c[which_k[col]] = m[pivot_row[col]][cols] / m[pivot_row[col]][col];
    for (int k = 1; k <= p; ++k) res.coefficients.push_back(c[k].str());
    return res;
}

}  // namespace afq
