#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gshds {

/// Dense exact integer matrix; identities here are exact equalities, so
/// nothing fancier than vectors of vectors is warranted.
using IntMat = std::vector<std::vector<long long>>;

inline IntMat int_mat(size_t rows, size_t cols, long long fill = 0) {
    return IntMat(rows, std::vector<long long>(cols, fill));
}

inline IntMat identity_mat(size_t n, long long scale = 1) {
    IntMat I = int_mat(n, n);
    for (size_t i = 0; i < n; ++i) I[i][i] = scale;
    return I;
}

inline IntMat ones_mat(size_t n) { return int_mat(n, n, 1); }

inline IntMat mat_mul(const IntMat& A, const IntMat& B) {
    if (A.empty() || B.empty()) return {};
    if (A[0].size() != B.size()) throw std::invalid_argument("mat_mul shape");
    IntMat C = int_mat(A.size(), B[0].size());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t k = 0; k < B.size(); ++k) {
            long long a = A[i][k];
            if (a == 0) continue;
            for (size_t j = 0; j < B[0].size(); ++j) C[i][j] += a * B[k][j];
        }
    return C;
}

inline std::vector<long long> mat_vec(const IntMat& A,
                                      const std::vector<long long>& x) {
    std::vector<long long> y(A.size(), 0);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
    return y;
}

inline IntMat mat_scale(IntMat A, long long c) {
    for (auto& row : A)
        for (auto& x : row) x *= c;
    return A;
}

inline IntMat mat_sub(IntMat A, const IntMat& B) {
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) A[i][j] -= B[i][j];
    return A;
}

inline IntMat mat_transpose(const IntMat& A) {
    if (A.empty()) return {};
    IntMat T = int_mat(A[0].size(), A.size());
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

/// Kronecker product A (x) B.
inline IntMat mat_kron(const IntMat& A, const IntMat& B) {
    if (A.empty() || B.empty()) return {};
    size_t ar = A.size(), ac = A[0].size(), br = B.size(), bc = B[0].size();
    IntMat C = int_mat(ar * br, ac * bc);
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j) {
            if (A[i][j] == 0) continue;
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l)
                    C[i * br + k][j * bc + l] = A[i][j] * B[k][l];
        }
    return C;
}

}  // namespace gshds
