#include "fitraffic/analytics.hpp"
#include "fitraffic/harness.hpp"
#include "fitraffic/preimage.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef FITRAFFIC_GOLDEN_DIR
#error "FITRAFFIC_GOLDEN_DIR must point at tests/golden"
#endif

using namespace fitraffic;

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible("000000000", 2));
  CHECK_FALSE(is_admissible("001001001", 2));
  CHECK(is_admissible("000100100", 2));
  // Capital touching zero fails: "001" with m = 2 walks 1, 2, 0.
  CHECK_FALSE(is_admissible("001", 2));
  CHECK(is_admissible("0001", 2));
  CHECK_FALSE(is_admissible("1", 1));
  CHECK_THROWS_AS(is_admissible("", 1), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible("0102", 1), std::invalid_argument);
  CHECK_THROWS_AS(is_admissible("0", 0), std::invalid_argument);
}

TEST_CASE("capital walk and prefix-density forms agree on every string") {
  for (int m = 1; m <= 4; ++m) {
    for (std::size_t len = 1; len <= 12; ++len) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        const std::string s = oracle::bits_of(code, len);
        CHECK(is_admissible(s, m) == is_admissible_by_density(s, m));
      }
    }
  }
}

TEST_CASE("path_count examples") {
  CHECK(path_count(4, 0, 1) == 1);
  CHECK(path_count(2, 1, 1) == 1);
  CHECK(path_count(4, 2, 1) == 5);
  CHECK(path_count(2, 1, 2) == 0);  // n0 <= m n1
  CHECK(path_count(0, 3, 1) == 0);
  CHECK_THROWS_AS(path_count(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(path_count(-1, 2, 1), std::invalid_argument);
  // Large arguments stay exact: ballot numbers for m = 1 are
  // (n0 - n1)/(n0 + n1) C(n0 + n1, n1).
  CHECK(path_count(101, 100, 1) == oracle::pascal(201, 100) / 201);
}

TEST_CASE("path_count equals exhaustive counts for n0 + n1 <= 14") {
  for (int m = 1; m <= 3; ++m) {
    for (std::size_t len = 1; len <= 14; ++len) {
      std::map<long, long> counted;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        const std::string s = oracle::bits_of(code, len);
        if (is_admissible(s, m)) {
          ++counted[static_cast<long>(std::count(s.begin(), s.end(), '1'))];
        }
      }
      for (long n1 = 0; n1 <= static_cast<long>(len); ++n1) {
        CHECK(path_count(static_cast<long>(len) - n1, n1, m) == counted[n1]);
      }
    }
  }
}

TEST_CASE("path count integrality") {
  for (int m = 1; m <= 4; ++m) {
    for (long n0 = 0; n0 <= 40; ++n0) {
      for (long n1 = 0; n0 + n1 >= 1 && n1 <= 40; ++n1) {
        if (n0 > m * n1) {
          const BigInt scaled = BigInt(n0 - m * n1) * oracle::pascal(static_cast<unsigned>(n0 + n1), static_cast<unsigned>(n1));
          CHECK(scaled % (n0 + n1) == 0);
        }
      }
    }
  }
}

TEST_CASE("enumerate_preimages") {
  CHECK(enumerate_preimages(1, 0) == std::vector<std::string>{"00"});
  CHECK(enumerate_preimages(1, 1) == std::vector<std::string>{"0000", "0001", "0010"});
  CHECK(enumerate_preimages(1, 2).size() == 10);
  CHECK(path_count(6, 0, 1) + path_count(5, 1, 1) + path_count(4, 2, 1) == 10);
  CHECK_THROWS_AS(enumerate_preimages(1, 16), std::length_error);
  CHECK(count_preimages(1, 16) > 0);  // counting has no length limit

  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; (n + 1) * (m + 1) <= 20; ++n) {
      const auto list = enumerate_preimages(m, n);
      CHECK(BigInt(list.size()) == count_preimages(m, n));
      CHECK(std::is_sorted(list.begin(), list.end()));
    }
  }
}

TEST_CASE("golden preimage lists") {
  for (const char* name : {"preimages_m1_n2.txt", "preimages_m1_n3.txt", "preimages_m2_n2.txt", "preimages_m3_n1.txt"}) {
    std::ifstream in(std::string(FITRAFFIC_GOLDEN_DIR) + "/" + name);
    REQUIRE(in.good());
    const PreimageList golden = read_preimage_list(in);
    CHECK(enumerate_preimages(golden.max_speed, golden.steps) == golden.strings);

    std::ostringstream written;
    write_preimage_list(written, golden.max_speed, golden.steps);
    std::istringstream back(written.str());
    const PreimageList reread = read_preimage_list(back);
    CHECK(reread.strings == golden.strings);
  }
  std::istringstream bad("m=1 n=1\n0000\n");
  CHECK_THROWS(read_preimage_list(bad));
}

TEST_CASE("preimage_prob_sum") {
  CHECK(preimage_prob_sum(1, 1, make_rational(1, 2)) == make_rational(3, 16));
  CHECK(preimage_prob_sum(2, 0, make_rational(3, 10)) == make_rational(343, 1000));
  CHECK(preimage_prob_sum(1, 1, make_rational(0)) == 1);
  for (int m = 1; m <= 2; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& rho : {make_rational(1, 10), make_rational(1, 3), make_rational(1, 2), make_rational(9, 10)}) {
        CHECK(preimage_prob_sum(m, n, rho) == exact_block_prob(m, n, rho));
      }
    }
  }
}

TEST_CASE("windowed_evolve") {
  CHECK(windowed_evolve("101110100", 2, 2) == "100");
  CHECK(windowed_evolve("000100100", 2, 2) == "000");
  CHECK(windowed_evolve("101110100", 2, 1) == "110100");
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const std::size_t p = preimage_length(m, n);
      CHECK(windowed_evolve(std::string(p, '0'), m, n) == std::string(static_cast<std::size_t>(m) + 1, '0'));
    }
  }
  CHECK_THROWS_AS(windowed_evolve("0000", 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(windowed_evolve("00x00", 1, 1), std::invalid_argument);
}

TEST_CASE("windowed_evolve matches embedding in a ring with any surroundings") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const std::size_t len = preimage_length(m, n) + 2;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); code += 7) {
        const std::string s = oracle::bits_of(code, len);
        const std::string got = windowed_evolve(s, m, n);
        CHECK(got == oracle::embedded_image(s, m, n, '0'));
        CHECK(got == oracle::embedded_image(s, m, n, '1'));
      }
    }
  }
}

TEST_CASE("brute_force_is_preimage") {
  CHECK(brute_force_is_preimage("0010", 1, 1));
  CHECK_FALSE(brute_force_is_preimage("0100", 1, 1));
  CHECK(brute_force_is_preimage("0000", 1, 1));
  CHECK(brute_force_is_preimage("000100100", 2, 2));
  CHECK_THROWS_AS(brute_force_is_preimage("000", 1, 1), std::invalid_argument);
}

TEST_CASE("admissibility is exactly the preimage property") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 0; (n + 1) * (m + 1) <= 16; ++n) {
      const std::size_t p = preimage_length(m, n);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
        const std::string s = oracle::bits_of(code, p);
        REQUIRE(is_admissible(s, m) == brute_force_is_preimage(s, m, n));
      }
    }
  }
}

TEST_CASE("one windowed step keeps admissible strings admissible") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; (n + 1) * (m + 1) <= 16; ++n) {
      for (const std::string& s : enumerate_preimages(m, n)) {
        const std::string next = windowed_evolve(s, m, 1);
        CHECK(next.size() == s.size() - static_cast<std::size_t>(m) - 1);
        CHECK(is_admissible(next, m));
      }
    }
  }
}

TEST_CASE("verify_proposition2 reports") {
  auto same = [](const PreimageReport& r, std::uint64_t total, std::uint64_t pre) {
    return r.total == total && r.preimages == pre && r.mismatches == 0;
  };
  CHECK(same(verify_proposition2(1, 1), 16, 3));
  CHECK(same(verify_proposition2(1, 2), 64, 10));
  CHECK(same(verify_proposition2(2, 0), 8, 1));
  CHECK_THROWS_AS(verify_proposition2(1, 12), std::length_error);
}
