#pragma once

#include <vector>

#include "jmkit/expansion.hpp"
#include "jmkit/partition.hpp"
#include "jmkit/rational.hpp"

namespace jmkit {

// Polynomial specialization at a finite point. Schur values go through the
// Jacobi-Trudi determinant with complete homogeneous values built by the
// generating-function recurrence; power sums are evaluated directly. This
// path shares no code with the rimhook machinery it is used to validate.

// s_lambda(point); zero when lambda has more parts than variables.
Rational eval_schur(const Partition& lambda, const std::vector<Rational>& point);

// p_lambda(point) = product over parts j of sum_i point[i]^j.
Rational eval_power(const Partition& lambda, const std::vector<Rational>& point);

Rational evaluate(const SchurExpansion& f, const std::vector<Rational>& point);
Rational evaluate(const PowerExpansion& f, const std::vector<Rational>& point);

}  // namespace jmkit
