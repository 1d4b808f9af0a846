#include "setpartition.hpp"
#include "tableau.hpp"
#include "words.hpp"

#include <doctest.h>

#include <set>

using namespace qchrom;

TEST_CASE("partition enumeration is reverse-lexicographic and complete") {
  std::vector<Partition> p4 = partitions(4);
  CHECK(p4.size() == 5);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(partitions(7).size() == 15);
  std::set<Partition> uniq(p4.begin(), p4.end());
  CHECK(uniq.size() == p4.size());
}

TEST_CASE("partition helpers") {
  Partition lam({3, 2, 2});
  CHECK(lam.size() == 7);
  CHECK(lam.conjugate() == Partition({3, 3, 1}));
  CHECK(lam.conjugate().conjugate() == lam);
  CHECK(lam.multiplicity(2) == 2);
  CHECK(lam.z() == BigInt(3) * 2 * 2 * 2); // 3^1*1! * 2^2*2!
  CHECK(Partition({2, 2}).dominates(Partition({2, 1, 1})));
  CHECK(!Partition({2, 1, 1}).dominates(Partition({2, 2})));
  CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
}

TEST_CASE("set partitions: counts and RG order") {
  CHECK(set_partitions(3, 2).size() == 3);
  CHECK(set_partitions(6).size() == 203);
  // Stirling numbers for n <= 8
  long long stirling[9][9] = {};
  stirling[0][0] = 1;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      stirling[n][k] = stirling[n - 1][k - 1] + k * stirling[n - 1][k];
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(static_cast<long long>(set_partitions(n, k).size()) == stirling[n][k]);
  // RG-lex order and part structure
  std::vector<SetPartition> s32 = set_partitions(3, 2);
  CHECK(s32[0].rg_string() == "112");
  CHECK(s32[1].rg_string() == "121");
  CHECK(s32[2].rg_string() == "122");
  CHECK(s32[1].to_string() == "13|2");
  CHECK_THROWS_AS(SetPartition({1, 3, 2}), std::domain_error);
}

TEST_CASE("syt enumeration and statistics") {
  CHECK(syt(Partition({2, 1})).size() == 2);
  // sum of f_lambda^2 = n!
  for (int n = 1; n <= 7; ++n) {
    BigInt total = 0;
    for (const Partition& lam : partitions(n)) {
      BigInt f = static_cast<long>(syt(lam).size());
      total += f * f;
    }
    CHECK(total == factorial(n));
  }
  // single row: no descents
  Tableau row(Partition({4}), {{1, 2, 3, 4}});
  CHECK(tableau_descents(row) == 0);
  CHECK(tableau_maj(row) == 0);
  // single column of size 2: d = maj = 1
  Tableau col(Partition({1, 1}), {{1}, {2}});
  CHECK(tableau_descents(col) == 1);
  CHECK(tableau_maj(col) == 1);
  CHECK_THROWS_AS(tableau_maj(Tableau(Partition({2}), {{1, 1}})), std::domain_error);
}

TEST_CASE("charge of small tableaux") {
  CHECK(charge(Tableau(Partition({2}), {{1, 2}})) == 1);
  CHECK(charge(Tableau(Partition({1, 1}), {{1}, {2}})) == 0);
  // SYT(2,1): reading words 312 and 213 carry charge 2 and 1
  BigInt total = 0;
  for (const Tableau& t : syt(Partition({2, 1}))) total += charge(t);
  CHECK(total == 3);
}

TEST_CASE("kostka numbers") {
  for (const Partition& lam : partitions(5)) CHECK(kostka(lam, lam) == 1);
  CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(kostka(Partition({3}), Partition({2, 1})) == 1);
  CHECK(kostka(Partition({2, 2}), Partition({2, 1, 1})) == 1);
  CHECK_THROWS_AS(kostka(Partition({2}), Partition({1})), std::domain_error);
  // unitriangularity: K nonzero only when lam dominates mu
  for (const Partition& lam : partitions(6))
    for (const Partition& mu : partitions(6))
      if (kostka(lam, mu) != 0) CHECK(lam.dominates(mu));
}

TEST_CASE("Murnaghan-Nakayama characters") {
  for (const Partition& mu : partitions(5)) {
    CHECK(mn_character(Partition({5}), mu) == 1);
    int sign = (5 - mu.length()) % 2 ? -1 : 1;
    CHECK(mn_character(Partition({1, 1, 1, 1, 1}), mu) == sign);
  }
  CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
}

TEST_CASE("character orthogonality up to n=6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Partition> parts = partitions(n);
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        // sum over classes: chi^a(mu) chi^b(mu) / z_mu
        BigInt num = 0, den = 1;
        for (const Partition& mu : parts) {
          BigInt z = mu.z();
          BigInt term = mn_character(a, mu) * mn_character(b, mu);
          num = num * z + term * den;
          den *= z;
        }
        if (a == b)
          CHECK(num == den);
        else
          CHECK(num == 0);
      }
  }
}

TEST_CASE("perm iteration is restartable") {
  PermRange r(3);
  int count = 0;
  for (auto it = r.begin(); it != r.end(); ++it) ++count;
  for (auto it = r.begin(); it != r.end(); ++it) ++count;
  CHECK(count == 12);
  std::vector<std::vector<int>> all;
  for_each_perm(3, [&](const std::vector<int>& p) { all.push_back(p); });
  CHECK(all.size() == 6);
  CHECK(all.front() == std::vector<int>{1, 2, 3});
  CHECK(inverse_perm({3, 1, 2}) == std::vector<int>{2, 3, 1});
}

TEST_CASE("words of a given weight") {
  CHECK(words_of_weight(Partition({2, 1})).size() == 3);
  CHECK(word_content({3, 1, 3, 2, 1}) == Partition({2, 2, 1}));
}
