#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afq/sl2check.hpp"

using namespace afq;

TEST_CASE("matrix helpers") {
    const Matrix id = mat_identity(3);
    CHECK(mat_mul(id, id) == id);
    CHECK(mat_is_zero(mat_sub(id, id)));
    CHECK(mat_pow(id, 5) == id);
    const Matrix k = kronecker(mat_identity(2), mat_identity(3));
    CHECK(k == mat_identity(6));
}

TEST_CASE("sl2 module relations") {
    for (int n = 0; n <= 4; ++n) {
        const Sl2Module v = build_sl2(n);
        CHECK(mat_mul(v.K, v.Kinv) == mat_identity(v.dim()));
        // K E K^-1 = q^2 E, K F K^-1 = q^-2 F.
        Matrix lhs = mat_mul(mat_mul(v.K, v.E), v.Kinv);
        Matrix rhs = v.E;
        for (auto& row : rhs)
            for (auto& e : row) e *= LaurentPoly::q_power(2);
        CHECK(lhs == rhs);
        // (q - q^-1)[E, F] = K - K^-1.
        Matrix comm = mat_sub(mat_mul(v.E, v.F), mat_mul(v.F, v.E));
        const LaurentPoly den = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
        for (auto& row : comm)
            for (auto& e : row) e *= den;
        CHECK(comm == mat_sub(v.K, v.Kinv));
        // Nilpotency degree n+1.
        CHECK(mat_is_zero(mat_pow(v.E, n + 1)));
        CHECK(mat_is_zero(mat_pow(v.F, n + 1)));
        if (n > 0) CHECK_FALSE(mat_is_zero(mat_pow(v.F, n)));
    }
}

TEST_CASE("coproduct respects the commutation relation") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            const Sl2Module va = build_sl2(a), vb = build_sl2(b);
            const Matrix de = tensor_e(va, vb);
            const Matrix df = tensor_f_power(va, vb, 1);
            Matrix comm = mat_sub(mat_mul(de, df), mat_mul(df, de));
            const LaurentPoly den = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
            for (auto& row : comm)
                for (auto& e : row) e *= den;
            CHECK(comm == mat_sub(tensor_k(va, vb), kronecker(va.Kinv, vb.Kinv)));
        }
}

TEST_CASE("lowering expansion solves exactly") {
    for (int nl = 0; nl <= 6; ++nl)
        for (int sd = 2; sd <= 3; ++sd) {
            const Rdc10Result r = rdc10_check(nl, sd);
            CHECK(r.verified);
            CHECK(r.coefficients.size() == static_cast<std::size_t>(nl + 1));
        }
    CHECK(rdc10_check(0, 2).coefficients == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(rdc10_check(-1, 2), std::domain_error);
    CHECK_THROWS_AS(rdc10_check(2, 0), std::domain_error);
}
