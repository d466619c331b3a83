#pragma once

#include "arithmat/arith_matroid.hpp"
#include "arithmat/polynomial.hpp"

#include <variant>

namespace arithmat {

inline constexpr std::size_t kDefaultSubsetSumCap = 20;

/// Sum over all sublists A of m(A) (x-1)^(rk X - rk A) (y-1)^(|A| - rk A).
/// Accepts any multiplicity table, valid or not. Throws CapExceeded.
BiPoly arithmetic_tutte_subsetsum(const ArithmeticMatroid& m, std::size_t cap = kDefaultSubsetSumCap);

/// The same corank-nullity sum with every multiplicity taken to be 1.
BiPoly classical_tutte(const ArithmeticMatroid& m, std::size_t cap = kDefaultSubsetSumCap);

/// Deletion-contraction: proper elements split as M1 + M2, free ones as
/// (x-1) M1 + M2, torsion ones as M1 + (y-1) M2; the greatest index of the
/// preferred class is removed first. Only meaningful on valid arithmetic matroids.
BiPoly arithmetic_tutte_delcon(const ArithmeticMatroid& m);

enum class Specialization { BasesCount, Components, Poincare, Characteristic, IndepCount };

const char* to_string(Specialization which);

using SpecializationValue = std::variant<UniPoly, Integer>;

/// BasesCount = M(1,1); Components = M(1,0); Poincare = q^n M((2q+1)/q, 0);
/// Characteristic = (-1)^n M(1-q, 0); IndepCount = M(1+q, 1).
/// Poincare throws PreconditionError when deg_x M(x,0) > n.
SpecializationValue specialize(const BiPoly& p, Specialization which, unsigned n);

struct SequenceProperties {
  bool unimodal = true;
  bool log_concave = true;
};

/// Unimodality and log-concavity of the absolute values of the coefficients,
/// read from the lowest nonzero coefficient up.
SequenceProperties sequence_tests(const UniPoly& p);

}  // namespace arithmat
