/**
 * @file sl2check.hpp
 * @brief Finite-dimensional U_q(sl2) modules V(n) and the tensor-product
 *        oracle for the coproduct expansion of F-powers.
 *
 * Serves two purposes: an independent model for the i-strings appearing in
 * the natural modules, and an exact check that Delta(F)^{p} images lie in the
 * span predicted by the lowering-operator expansion.
 */
#ifndef AFQ_SL2CHECK_HPP
#define AFQ_SL2CHECK_HPP

#include <string>
#include <vector>

#include "afq/laurent.hpp"

namespace afq {

using Matrix = std::vector<std::vector<LaurentPoly>>;

Matrix mat_zero(int rows, int cols);
Matrix mat_identity(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_pow(const Matrix& a, int p);
Matrix kronecker(const Matrix& a, const Matrix& b);
bool mat_is_zero(const Matrix& a);

/// V(n): basis v_0..v_n, K v_k = q^{n-2k} v_k, F v_k = [k+1] v_{k+1},
/// E v_k = [n-k+1] v_{k-1}.
struct Sl2Module {
    int n = 0;
    Matrix E, F, K, Kinv;

    int dim() const { return n + 1; }
};

Sl2Module build_sl2(int n);

/// Matrix of Delta(F)^p = (F (x) K^{-1} + 1 (x) F)^p on left (x) right.
Matrix tensor_f_power(const Sl2Module& left, const Sl2Module& right, int p);

/// Matrix of Delta(E) = E (x) 1 + K (x) E.
Matrix tensor_e(const Sl2Module& left, const Sl2Module& right);
Matrix tensor_k(const Sl2Module& left, const Sl2Module& right);

struct Rdc10Result {
    std::vector<std::string> coefficients;  // c_1 .. c_{n_lambda+1}
    bool verified = false;
};

/// Solves Delta(F)^{nL+1}(v_0 (x) u_0) = sum_k c_k Delta(F)^{nL+1-k}(v_0 (x) F^k u_0)
/// exactly over the rational-function field, in V(nL) (x) V(string_dim - 1).
Rdc10Result rdc10_check(int n_lambda, int string_dim);

}  // namespace afq

#endif
