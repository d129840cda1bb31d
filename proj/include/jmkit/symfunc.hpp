#pragma once

#include "jmkit/expansion.hpp"
#include "jmkit/partition.hpp"

namespace jmkit {

// Centralizer order: product over part sizes j of m_j! * j^m_j.
long long z_of(const Partition& mu);

// Multiplication by the power sum p_j in the Schur basis: each s_lambda
// spreads over the rimhook additions of length j with sign (-1)^height.
SchurExpansion mult_p(const SchurExpansion& f, int j);

// The skewing operator D(p_j) = j * d/dp_j, adjoint to mult_p: each
// s_lambda spreads over the rimhook removals of length j with sign
// (-1)^height. The result degree clamps at zero when nothing survives.
SchurExpansion skew_dp(const SchurExpansion& f, int j);

// Sum over j >= 1 of p_j D(p_{j+1}) applied to s_lambda. Requires weight >= 1.
SchurExpansion lhs_eq3(const Partition& lambda);

// Sum over corner cells x of c(x) * s_{lambda - x}. Requires weight >= 1.
SchurExpansion rhs_eq3(const Partition& lambda);

// Sum over j >= 1 of p_j D(p_{j+2}) applied to s_lambda. Requires weight >= 2.
SchurExpansion lhs_eq6(const Partition& lambda);

// Sum over removable pairs of pair_content * s_{lambda - (x,y)}. Requires
// weight >= 2.
SchurExpansion rhs_eq6(const Partition& lambda);

// Sum over j >= 1 of p_{j+1} D(p_j) applied to s_lambda.
SchurExpansion lhs_t3(const Partition& lambda);

// Sum over addable cells x of c(x) * s_{lambda + x}.
SchurExpansion rhs_t3(const Partition& lambda);

}  // namespace jmkit
