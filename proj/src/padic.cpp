#include "tilings/padic.hpp"

#include <stdexcept>
#include <string>

namespace tilings {
namespace {

Count pow2(unsigned k) {
  Count r = 1;
  r <<= k;
  return r;
}

// Least nonnegative residue of x mod 2^k.
Count mod_pow2(const Count& x, unsigned k) {
  Count r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

Verdict make(std::string check, nlohmann::json params, std::size_t size) {
  Verdict v;
  v.check = std::move(check);
  v.parameters = std::move(params);
  v.range_first = 0;
  v.range_last = static_cast<int>(size) - 1;
  v.status = Status::holds_on_range;
  return v;
}

}  // namespace

ValuationSplit v2_split(const Count& x) {
  if (x == 0) throw std::domain_error("2-adic valuation of 0 is undefined");
  ValuationSplit s;
  s.v2 = static_cast<unsigned>(mpz_scan1(x.get_mpz_t(), 0));
  // scan1 on a negative value works on two's complement, which has the same
  // lowest set bit as |x|.
  mpz_tdiv_q_2exp(s.odd_part.get_mpz_t(), x.get_mpz_t(), s.v2);
  return s;
}

std::vector<std::uint64_t> residues(std::span<const Count> seq, unsigned k) {
  if (k < 1 || k > 63) throw std::invalid_argument("residues: k must be in 1..63");
  std::vector<std::uint64_t> out;
  out.reserve(seq.size());
  for (const Count& x : seq) out.push_back(mod_pow2(x, k).get_ui());
  return out;
}

Verdict check_conjecture1(std::span<const Count> seq, unsigned k) {
  if (k < 1) throw std::invalid_argument("conjecture 1 needs k >= 1");
  Verdict v = make("conj1", {{"k", k}}, seq.size());
  const std::size_t period = std::size_t{1} << k;
  if (seq.size() < period + 1) {
    v.status = Status::insufficient_data;
    return v;
  }
  for (std::size_t n = 0; n + period < seq.size(); ++n) {
    const Count a = mod_pow2(seq[n], k);
    const Count b = mod_pow2(seq[n + period], k);
    if (a != b) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"n", n},
                                 {"n_shifted", n + period},
                                 {"residue_n", to_decimal(a)},
                                 {"residue_shifted", to_decimal(b)}};
      return v;
    }
  }
  return v;
}

Verdict check_conjecture2(std::span<const Count> seq, unsigned k) {
  if (k < 1) throw std::invalid_argument("conjecture 2 needs k >= 1");
  Verdict v = make("conj2", {{"k", k}}, seq.size());
  const std::size_t modulus = std::size_t{1} << k;
  // -3 mod 2^k, as a least nonnegative residue.
  const std::size_t target = (modulus - 3 % modulus) % modulus;
  std::size_t pairs = 0;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    for (std::size_t m = n; m < seq.size(); ++m) {
      if ((n + m) % modulus != target) continue;
      ++pairs;
      const Count sum = mod_pow2(seq[n] + seq[m], k);
      if (sum != 0) {
        v.status = Status::fails;
        v.witness = nlohmann::json{{"n", n}, {"n_prime", m}, {"sum_residue", to_decimal(sum)}};
        return v;
      }
    }
  }
  if (pairs == 0) v.status = Status::insufficient_data;
  v.data = {{"pairs_checked", pairs}};
  return v;
}

Verdict check_conjecture3(std::span<const Count> seq) {
  Verdict v = make("conj3", nlohmann::json::object(), seq.size());
  if (seq.size() < 2) {
    v.status = Status::insufficient_data;
    return v;
  }
  v.range_first = 1;
  nlohmann::json valuations = nlohmann::json::array();
  for (std::size_t n = 1; n < seq.size(); ++n) {
    const unsigned expected = n % 2 == 0 ? static_cast<unsigned>(n - 1) : static_cast<unsigned>((n - 1) / 2);
    if (seq[n] == 0) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"n", n}, {"value", "0"}, {"expected_v2", expected}};
      return v;
    }
    const unsigned actual = v2_split(seq[n]).v2;
    valuations.push_back(actual);
    if (actual != expected) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"n", n}, {"v2", actual}, {"expected_v2", expected}};
      return v;
    }
  }
  v.data = {{"v2", valuations}};
  return v;
}

std::pair<std::vector<Count>, std::vector<Count>> derive_L0_L1(std::span<const Count> seq) {
  std::vector<Count> l0, l1;
  const auto exact_div = [](const Count& x, unsigned shift, std::size_t m, const char* which) {
    if (x == 0 || mpz_scan1(x.get_mpz_t(), 0) < shift) {
      throw std::domain_error(std::string(which) + "(" + std::to_string(m) + ") is not an integer: 2^" +
                              std::to_string(shift) + " does not divide " + to_decimal(x));
    }
    Count q;
    mpz_tdiv_q_2exp(q.get_mpz_t(), x.get_mpz_t(), shift);
    return q;
  };
  for (std::size_t m = 1; 2 * m - 1 < seq.size(); ++m) {
    l1.push_back(exact_div(seq[2 * m - 1], static_cast<unsigned>(m - 1), m, "L1"));
    if (2 * m < seq.size()) l0.push_back(exact_div(seq[2 * m], static_cast<unsigned>(2 * m - 1), m, "L0"));
  }
  return {std::move(l0), std::move(l1)};
}

Verdict check_period(std::span<const Count> seq, unsigned k, unsigned p, int first_index) {
  if (p < 1) throw std::invalid_argument("period must be >= 1");
  Verdict v = make("period", {{"k", k}, {"p", p}}, seq.size());
  v.range_first = first_index;
  v.range_last = first_index + static_cast<int>(seq.size()) - 1;
  if (seq.size() <= p) {
    v.status = Status::insufficient_data;
    return v;
  }
  for (std::size_t i = 0; i + p < seq.size(); ++i) {
    const Count a = mod_pow2(seq[i], k);
    const Count b = mod_pow2(seq[i + p], k);
    if (a != b) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"index", first_index + static_cast<int>(i)},
                                 {"index_shifted", first_index + static_cast<int>(i + p)},
                                 {"residue", to_decimal(a)},
                                 {"residue_shifted", to_decimal(b)}};
      return v;
    }
  }
  return v;
}

Count affine_value(AffineForm form, int n) {
  switch (form) {
    case AffineForm::two_n_plus_one:
      return Count(2 * n + 1);
    case AffineForm::alternating_step: {
      const int sign = (n + 1) % 2 == 0 ? 1 : -1;  // (-1)^(n+1)
      return Count(n + 1 + (1 + sign) / 2);
    }
  }
  throw std::logic_error("unreachable affine form");
}

Verdict check_affine_mod8(std::span<const Count> seq, AffineForm form, int first_index) {
  Verdict v = make("affine-mod8",
                   {{"form", form == AffineForm::two_n_plus_one ? "2n+1" : "n+1+(1+(-1)^(n+1))/2"}},
                   seq.size());
  v.range_first = first_index;
  v.range_last = first_index + static_cast<int>(seq.size()) - 1;
  if (seq.empty()) {
    v.status = Status::insufficient_data;
    return v;
  }
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int n = first_index + static_cast<int>(i);
    const Count lhs = mod_pow2(seq[i], 3);
    const Count rhs = mod_pow2(affine_value(form, n), 3);
    if (lhs != rhs) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"n", n}, {"term_mod8", to_decimal(lhs)}, {"form_mod8", to_decimal(rhs)}};
      return v;
    }
  }
  return v;
}

Count isqrt(const Count& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative number");
  if (x < 2) return x;
  // Start above the root, then Newton steps decrease monotonically to it.
  Count guess = pow2(static_cast<unsigned>((mpz_sizeinbase(x.get_mpz_t(), 2) + 1) / 2));
  while (true) {
    Count next = (guess + x / guess) / 2;
    if (next >= guess) return guess;
    guess = std::move(next);
  }
}

std::optional<Count> check_square_factorization(const Count& x, unsigned n) {
  if (x <= 0) throw std::domain_error("square factorization needs a positive count");
  if (mpz_scan1(x.get_mpz_t(), 0) < n) return std::nullopt;
  Count rest;
  mpz_tdiv_q_2exp(rest.get_mpz_t(), x.get_mpz_t(), n);
  Count f = isqrt(rest);
  if (f * f != rest) return std::nullopt;
  return f;
}

}  // namespace tilings
