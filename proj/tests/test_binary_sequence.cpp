#include <doctest.h>

#include <random>

#include "ilseq/binary_sequence.hpp"

using ilseq::BinarySequence;

namespace {

BinarySequence seq(const char* text) { return BinarySequence::from_string(text); }

BinarySequence random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return BinarySequence(bits);
}

}  // namespace

TEST_CASE("shift_left") {
  CHECK(ilseq::shift_left(seq("0001011"), 0).to_string() == "0001011");
  CHECK(ilseq::shift_left(seq("0001011"), 2).to_string() == "0101100");
  CHECK(ilseq::shift_left(seq("0001011"), 7).to_string() == "0001011");
  CHECK(ilseq::shift_left(seq("0001011"), -1).to_string() == "1000101");
}

TEST_CASE("complement and balance") {
  CHECK(ilseq::complement(seq("000")).to_string() == "111");
  CHECK(ilseq::complement(seq("0001011")).to_string() == "1110100");
  CHECK(ilseq::balance(ilseq::complement(seq("0001011"))) == 1);
  CHECK(ilseq::balance(BinarySequence::zeros(3)) == -3);
  CHECK(ilseq::balance(seq("0001011")) == -1);
  CHECK(ilseq::balance(seq("1001011")) == 1);
}

TEST_CASE("support") {
  CHECK(ilseq::support(seq("0001011")) == std::vector<std::size_t>{3, 5, 6});
  CHECK(ilseq::support(seq("000")).empty());
  CHECK(ilseq::support(seq("111")) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("add_constant") {
  CHECK(ilseq::add_constant(seq("011"), 1).to_string() == "100");
  CHECK(ilseq::add_constant(seq("011"), 0).to_string() == "011");
  CHECK_THROWS_AS(ilseq::add_constant(seq("011"), 2), ilseq::InvalidInput);
}

TEST_CASE("parsing rejects bad input") {
  CHECK_THROWS_AS(seq(""), ilseq::InvalidInput);
  CHECK_THROWS_AS(seq("01a"), ilseq::InvalidInput);
  CHECK_THROWS_AS(BinarySequence::zeros(0), ilseq::InvalidInput);
}

TEST_CASE("word boundaries") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {63u, 64u, 65u, 127u, 128u, 129u, 200u}) {
    const auto s = random_sequence(rng, n);
    CHECK(BinarySequence::from_string(s.to_string()) == s);
    CHECK(ilseq::shift_left(ilseq::shift_left(s, 70), -70) == s);
    CHECK(ilseq::complement(ilseq::complement(s)) == s);
    CHECK(ilseq::complement(s).weight() == n - s.weight());
  }
}

TEST_CASE("shift group law") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const auto s = random_sequence(rng, n);
    const auto a = static_cast<std::int64_t>(rng() % 400) - 200;
    const auto b = static_cast<std::int64_t>(rng() % 400) - 200;
    CHECK(ilseq::shift_left(ilseq::shift_left(s, a), b) == ilseq::shift_left(s, a + b));
    CHECK(ilseq::add_constant(ilseq::add_constant(s, 1), 1) == s);
    CHECK(ilseq::balance(ilseq::complement(s)) == -ilseq::balance(s));
  }
}
