#pragma once
#include "lcw/rat.hpp"

namespace lcw {

RVec rvec(int n);
RMat rmat(int rows, int cols);
RMat identity(int n);

Rat dot(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec scale(const Rat& k, const RVec& a);
bool is_zero(const RVec& a);
bool is_zero(const RMat& m);

RMat mat_add(const RMat& a, const RMat& b);
RMat mat_sub(const RMat& a, const RMat& b);
RMat mat_scale(const Rat& k, const RMat& m);
RMat mat_mul(const RMat& a, const RMat& b);
RVec mat_vec(const RMat& m, const RVec& v);
RMat transpose(const RMat& m);
bool is_symmetric(const RMat& m);
bool is_skew(const RMat& m);

// (u ^ v)_jk = u_j v_k - u_k v_j
RMat skew_outer(const RVec& u, const RVec& v);

Rat det(RMat m);
int rank(RMat m);
// Basis of the null space of m (rows are kernel vectors).
RMat kernel(const RMat& m);
// Throws std::invalid_argument when singular.
RMat inverse(const RMat& m);

}  // namespace lcw
