#include <doctest.h>

#include <random>

#include "tilings/padic.hpp"

using namespace tilings;

namespace {

std::vector<Count> counts(std::initializer_list<const char*> values) {
  std::vector<Count> out;
  for (const char* v : values) out.emplace_back(v);
  return out;
}

const std::vector<Count> kM = counts({"1", "3", "19", "293", "10917", "996599", "222222039", "121552500713",
                                      "162860556763865"});
const std::vector<Count> kL = counts({"1", "1", "2", "6", "40", "364", "7904", "226152", "15835008",
                                      "1439900880", "324189571584"});

}  // namespace

TEST_CASE("v2 split") {
  CHECK(v2_split(Count(1)).v2 == 0);
  CHECK(v2_split(Count(40)).v2 == 3);
  CHECK(v2_split(Count(40)).odd_part == 5);
  CHECK(v2_split(Count(-12)).odd_part == -3);
  CHECK_THROWS_AS(v2_split(Count(0)), std::domain_error);
}

TEST_CASE("v2 split round trips on random values") {
  std::mt19937_64 rng(5);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(17);
  for (int i = 0; i < 10000; ++i) {
    Count x = gmp_rng.get_z_bits(1 + static_cast<unsigned long>(rng() % 200));
    if (x == 0) continue;
    if (rng() & 1) x = -x;
    const ValuationSplit s = v2_split(x);
    CHECK((s.odd_part % 2) != 0);
    CHECK((s.odd_part << s.v2) == x);
  }
}

TEST_CASE("residues") {
  CHECK(residues(kM, 2) == std::vector<std::uint64_t>{1, 3, 3, 1, 1, 3, 3, 1, 1});
  CHECK(residues(std::vector<Count>{Count(-1), Count(-8)}, 3) == std::vector<std::uint64_t>{7, 0});
}

TEST_CASE("conjecture 1") {
  for (unsigned k = 1; k <= 3; ++k) CHECK(check_conjecture1(kM, k).holds());
  CHECK(check_conjecture1(kM, 4).status == Status::insufficient_data);
  const Verdict bad = check_conjecture1(counts({"1", "3", "2"}), 1);
  CHECK(bad.status == Status::fails);
  REQUIRE(bad.witness);
  CHECK((*bad.witness)["n"] == 0);
}

TEST_CASE("conjecture 1 at k gives period 2^k mod 2^(k-1)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 2 + rng() % 3;
    const unsigned period = 1u << k;
    std::vector<Count> base;
    for (unsigned i = 0; i < period; ++i) base.emplace_back(static_cast<unsigned long>(rng() % 1000));
    std::vector<Count> seq;
    for (unsigned i = 0; i < 3 * period; ++i) {
      seq.push_back(base[i % period] + (Count(static_cast<unsigned long>(rng() % 50)) << k));
    }
    REQUIRE(check_conjecture1(seq, k).holds());
    CHECK(check_period(seq, k - 1, period).holds());
  }
  // Divisibility weakens but the shift halves too, so k does not imply k-1.
  const std::vector<Count> counter = counts({"0", "0", "1", "1", "0", "0", "1", "1"});
  CHECK(check_conjecture1(counter, 2).holds());
  CHECK(check_conjecture1(counter, 1).status == Status::fails);
}

TEST_CASE("conjecture 2") {
  for (unsigned k = 1; k <= 3; ++k) CHECK(check_conjecture2(kM, k).holds());
  CHECK(check_conjecture2(counts({"1", "1"}), 1).holds());
  CHECK(check_conjecture2(counts({"1"}), 3).status == Status::insufficient_data);
  CHECK(check_conjecture2(counts({"1", "2", "3", "4", "5", "6"}), 2).status == Status::fails);
}

TEST_CASE("conjecture 3") {
  CHECK(check_conjecture3(kL).holds());
  CHECK(check_conjecture3(kL).range_first == 1);
  std::vector<Count> broken = kL;
  broken[4] = 48;
  CHECK(check_conjecture3(broken).status == Status::fails);
  broken[4] = 0;
  CHECK(check_conjecture3(broken).status == Status::fails);
}

TEST_CASE("L0 and L1") {
  const auto [l0, l1] = derive_L0_L1(kL);
  CHECK(l0 == counts({"1", "5", "247", "123711", "633182757"}));
  CHECK(l1 == counts({"1", "3", "91", "28269", "89993805"}));
  std::vector<Count> broken = kL;
  broken[6] = 7905;
  CHECK_THROWS_WITH_AS(derive_L0_L1(broken), doctest::Contains("3"), std::domain_error);
}

TEST_CASE("periodicity") {
  const std::vector<Count> seq = counts({"1", "3", "5", "7", "9", "11"});
  CHECK(check_period(seq, 1, 1).holds());
  CHECK(check_period(seq, 2, 2).holds());
  CHECK(check_period(seq, 3, 2).status == Status::fails);
  CHECK(check_period(seq, 3, 4).holds());
  CHECK(check_period(counts({"1", "1", "3", "3", "1", "1", "3"}), 2, 4).holds());
  CHECK(check_period(counts({"1", "3", "3", "1", "1", "3", "3", "1"}), 2, 4).holds());
  const Verdict skew_square = check_period(counts({"1", "0", "0", "0", "0", "0", "2", "2", "0", "0", "0", "0"}), 2, 8);
  CHECK(skew_square.status == Status::fails);
  CHECK(check_period(std::vector<Count>{}, 2, 4).status == Status::insufficient_data);
}

TEST_CASE("period p implies every multiple of p") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned k = 1 + rng() % 5, p = 1 + rng() % 4, q = 1 + rng() % 3;
    std::vector<Count> base;
    for (unsigned i = 0; i < p; ++i) base.emplace_back(static_cast<unsigned long>(rng() % 97));
    std::vector<Count> seq;
    for (unsigned i = 0; i < 20; ++i) seq.push_back(base[i % p] + (Count(static_cast<unsigned long>(rng() % 9)) << k));
    REQUIRE(check_period(seq, k, p).holds());
    CHECK(check_period(seq, k, p * q).holds());
  }
}

TEST_CASE("affine forms mod 8") {
  CHECK(affine_value(AffineForm::two_n_plus_one, 3) == 7);
  CHECK(affine_value(AffineForm::alternating_step, 0) == 1);
  CHECK(affine_value(AffineForm::alternating_step, 1) == 3);
  CHECK(affine_value(AffineForm::alternating_step, 2) == 3);
  CHECK(affine_value(AffineForm::alternating_step, 7) == 9);
  CHECK(check_affine_mod8(kM, AffineForm::alternating_step).holds());
  CHECK(check_affine_mod8(counts({"3", "13"}), AffineForm::two_n_plus_one, 1).holds());
  const Verdict zero = check_affine_mod8(counts({"0", "0"}), AffineForm::two_n_plus_one);
  CHECK(zero.status == Status::fails);
  CHECK((*zero.witness)["n"] == 0);
  CHECK(check_affine_mod8(counts({"3", "6"}), AffineForm::two_n_plus_one, 1).status == Status::fails);
}

TEST_CASE("integer square roots and square factorization") {
  CHECK(isqrt(Count(0)) == 0);
  CHECK(isqrt(Count(15)) == 3);
  CHECK(isqrt(Count(16)) == 4);
  const Count big = Count("123456789012345678901234567890");
  CHECK(isqrt(big * big) == big);
  CHECK(isqrt(big * big - 1) == big - 1);
  CHECK(check_square_factorization(Count(2), 1) == Count(1));
  CHECK(check_square_factorization(Count(36), 2) == Count(3));
  CHECK(check_square_factorization(Count(6728), 3) == Count(29));
  CHECK(check_square_factorization(Count(12988816), 4) == Count(901));
  CHECK_FALSE(check_square_factorization(Count(40), 1));
  CHECK_FALSE(check_square_factorization(Count(3), 1));
  CHECK_THROWS_AS(check_square_factorization(Count(0), 1), std::domain_error);
}
