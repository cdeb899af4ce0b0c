#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/verdict.hpp"

namespace tilings {

struct ValuationSplit {
  unsigned v2 = 0;
  Count odd_part;  // carries the sign of the input
};

// x = 2^v2 * odd_part. Throws std::domain_error for x = 0.
ValuationSplit v2_split(const Count& x);

// Least nonnegative residues mod 2^k, 1 <= k <= 63.
std::vector<std::uint64_t> residues(std::span<const Count> seq, unsigned k);

// 2^k | M(n + 2^k) - M(n) for every in-range n (seq indexed from 0).
Verdict check_conjecture1(std::span<const Count> seq, unsigned k);

// M(n) + M(n') = 0 mod 2^k whenever n + n' = -3 mod 2^k, over in-range pairs.
Verdict check_conjecture2(std::span<const Count> seq, unsigned k);

// v2(L(n)) = n-1 for even n, (n-1)/2 for odd n, for n >= 1.
Verdict check_conjecture3(std::span<const Count> seq);

// L0(m) = L(2m) / 2^(2m-1) and L1(m) = L(2m-1) / 2^(m-1) for m = 1, 2, ...
// as far as `seq` (indexed from 0) reaches. Throws std::domain_error naming
// m when a division is not exact.
std::pair<std::vector<Count>, std::vector<Count>> derive_L0_L1(std::span<const Count> seq);

// seq mod 2^k is periodic with period p over the available terms.
// `first_index` only labels witnesses.
Verdict check_period(std::span<const Count> seq, unsigned k, unsigned p, int first_index = 0);

enum class AffineForm {
  two_n_plus_one,    // 2n + 1
  alternating_step,  // n + 1 + (1 + (-1)^(n+1)) / 2
};

Count affine_value(AffineForm form, int n);

// Every term equals the form mod 8; seq[i] is the term for n = first_index + i.
Verdict check_affine_mod8(std::span<const Count> seq, AffineForm form, int first_index = 0);

// f with x = 2^n f^2 if such an integer exists. Throws std::domain_error for x <= 0.
std::optional<Count> check_square_factorization(const Count& x, unsigned n);

// Exact integer square root by Newton iteration on integers.
Count isqrt(const Count& x);

}  // namespace tilings
