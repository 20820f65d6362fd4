#ifndef LWCQ_BASIS_CHANGE_HPP
#define LWCQ_BASIS_CHANGE_HPP

#include <vector>

#include "lwcq/lincomb.hpp"
#include "lwcq/lwc.hpp"

namespace lwcq {

/// c_{α,β} = Π_p C(i_p, j_p) over the forced block alignment of β
/// against α; 0 when β does not refine α.  c_{α,α} = 1.
BigInt coeff_c(const Lwc& alpha, const Lwc& beta);

/// F_α = Σ_{β≼α} c_{α,β} M_β.
LinComb<Lwc> f_to_m(const Lwc& alpha);

/// M_α = Σ_{β≼α} (−1)^{ℓ(β)−ℓ(α)} c_{α,β} F_β.
LinComb<Lwc> m_to_f(const Lwc& alpha);

enum class BasisDirection { FtoM, MtoF };

struct TransitionMatrix {
    std::vector<Lwc> keys;        // slice order: a linear extension of ≼, finer first
    std::vector<BigInt> entries;  // row-major, keys.size() squared
};

/// Transition matrix on the slice of all LWCs of size n with at most
/// zero_budget zeros.  Unitriangular; the two directions are mutual
/// inverses on the slice.
TransitionMatrix transition_matrix(int n, int zero_budget, BasisDirection dir);

}  // namespace lwcq

#endif
