#include "ddyck/recurrences.hpp"

#include <gtest/gtest.h>

#include <future>

#include "ddyck/enumerate.hpp"
#include "ddyck/generating_functions.hpp"

namespace {

using namespace ddyck;

TEST(CatalanNarayana, Classics) {
  EXPECT_EQ(catalan(0), 1);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(catalan(10), 16796);
  EXPECT_EQ(narayana(4, 2), 6);
  EXPECT_EQ(narayana(0, 0), 1);
  EXPECT_EQ(narayana(0, 1), 0);
  EXPECT_EQ(narayana(3, 5), 0);
  EXPECT_THROW(catalan(-1), IndexOutOfRange);
  EXPECT_THROW(narayana(-2, 0), IndexOutOfRange);
}

TEST(CatalanNarayana, RowSumsAreCatalan) {
  for (long long n = 1; n <= 10; ++n) {
    Int sum = 0;
    for (long long k = 1; k <= n; ++k) sum += narayana(n, k);
    EXPECT_EQ(sum, catalan(n)) << n;
  }
}

TEST(RNonneg, SeedsAndRecursion) {
  std::vector<Int> d0;
  for (long long n = 1; n <= 5; ++n) d0.push_back(r_nonneg(0, n));
  EXPECT_EQ(d0, (std::vector<Int>{1, 2, 5, 13, 34}));
  EXPECT_EQ(r_nonneg(2, 2), 2);  // C(2,2) + 1
  EXPECT_EQ(r_nonneg(1, 6), r_nonneg_closed_sum(1, 6));
}

TEST(RNonneg, ClosedSumAgreesWithRecursion) {
  for (int d = 1; d <= 3; ++d)
    for (long long n = 1; n <= 12; ++n)
      EXPECT_EQ(r_nonneg(d, n), r_nonneg_closed_sum(d, n)) << d << ' ' << n;
}

TEST(RNonneg, OracleAgreement) {
  for (int d = 0; d <= 2; ++d)
    for (std::size_t n = 1; n <= 8; ++n)
      EXPECT_EQ(r_nonneg(d, static_cast<long long>(n)),
                count_filtered(n, PathFilter::d_dyck(DParam::restricted(d))))
          << d << ' ' << n;
}

TEST(PNonneg, FormulaAndMarginals) {
  EXPECT_EQ(p_nonneg(0, 3, 2), 3);
  for (int d = 0; d <= 3; ++d)
    for (long long n = 1; n <= 8; ++n) EXPECT_EQ(p_nonneg(d, n, 1), 1) << d << ' ' << n;
  for (int d = 0; d <= 2; ++d)
    for (long long n = 1; n <= 10; ++n) {
      Int sum = 0;
      for (long long k = 1; k <= n; ++k) sum += p_nonneg(d, n, k);
      EXPECT_EQ(sum, r_nonneg(d, n)) << d << ' ' << n;
    }
}

TEST(PNonneg, OracleAgreement) {
  for (int d = 0; d <= 2; ++d)
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t k = 1; k <= n; ++k) {
        PathFilter f = PathFilter::d_dyck(DParam::restricted(d));
        f.peak_count = k;
        EXPECT_EQ(p_nonneg(d, static_cast<long long>(n), static_cast<long long>(k)),
                  count_filtered(n, f))
            << d << ' ' << n << ' ' << k;
      }
}

TEST(QSeq, SeedsAndRecursion) {
  EXPECT_EQ(q_seq(1), 0);
  EXPECT_EQ(q_seq(2), 1);
  EXPECT_EQ(q_seq(3), 3);
  EXPECT_EQ(q_seq(4), 8);  // one recursion step; equals b(4) - 1
}

TEST(QSeq, OracleAgreement) {
  for (long long n = 1; n <= 10; ++n)
    EXPECT_EQ(q_seq(n), count_Q(static_cast<std::size_t>(n))) << n;
}

TEST(RMinus1, PaperFixtures) {
  EXPECT_EQ(r_minus1(6, RMinus1Method::p_recurrence), 123);
  EXPECT_EQ(r_minus1(4, RMinus1Method::double_sum), 14);
  EXPECT_EQ(r_minus1(9, RMinus1Method::convolution), 3603);
}

TEST(RMinus1, ThreeWayEqualityAndOracle) {
  for (long long n = 0; n <= 12; ++n) {
    Int conv = r_minus1(n, RMinus1Method::convolution);
    EXPECT_EQ(conv, r_minus1(n, RMinus1Method::p_recurrence)) << n;
    EXPECT_EQ(conv, r_minus1(n, RMinus1Method::double_sum)) << n;
    if (n >= 1) {
      EXPECT_EQ(conv, count_filtered(static_cast<std::size_t>(n),
                                     PathFilter::d_dyck(DParam::restricted(-1))))
          << n;
    }
  }
}

TEST(RMinus1, MethodsAgreeDeepIntoTheSequence) {
  for (long long n : {20, 35, 50})
    EXPECT_EQ(r_minus1(n, RMinus1Method::convolution),
              r_minus1(n, RMinus1Method::p_recurrence))
        << n;
}

TEST(CatalanPrefix, SeriesEngineForDeepD) {
  for (int d = -1; d >= -4; --d) {
    std::size_t N = static_cast<std::size_t>(-d) + 3;
    Series l = eval_marker_at_one(solve_Le_system(-d, N).L);
    for (std::size_t n = 1; n <= N; ++n)
      EXPECT_EQ(l[n], Rat(catalan(static_cast<long long>(n)))) << d << ' ' << n;
  }
}

TEST(BClosed, PrintedValuesBothFormulas) {
  std::vector<Int> expect{1, 1, 2, 4, 9, 22, 57, 154, 429};
  for (long long n = 0; n <= 8; ++n) {
    EXPECT_EQ(b_closed(n, BClosedFormula::inclusion_exclusion), expect[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(b_closed(n, BClosedFormula::narayana_sum), expect[static_cast<std::size_t>(n)]) << n;
  }
  EXPECT_EQ(b_closed(5, BClosedFormula::inclusion_exclusion), 22);
  EXPECT_EQ(b_closed(7, BClosedFormula::narayana_sum), 154);
}

TEST(BClosed, MatchesSeriesAndRelationToQ) {
  Series b = series_b(12);
  for (long long n = 0; n <= 12; ++n) {
    Int ie = b_closed(n, BClosedFormula::inclusion_exclusion);
    EXPECT_EQ(Rat(ie), b[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(ie, b_closed(n, BClosedFormula::narayana_sum)) << n;
    if (n >= 1) {
      EXPECT_EQ(ie, q_seq(n) + 1) << n;
    }
  }
}

TEST(ASeq, SeedsAndOracle) {
  EXPECT_EQ(A_seq(1), 0);
  EXPECT_EQ(A_seq(2), 2);
  EXPECT_EQ(A_seq(3), 13);
  EXPECT_EQ(A_seq(4), 58);
  // recursion takes over at n = 5; the exhaustive totals pin it
  for (long long n = 5; n <= 8; ++n)
    EXPECT_EQ(A_seq(n), total_area(static_cast<std::size_t>(n), PathFilter::Q())) << n;
}

TEST(ASeq, MatchesAreaSystemDerivative) {
  Series m = derivative_marker_at_one(solve_area_system(9).B);
  for (long long n = 1; n <= 9; ++n)
    EXPECT_EQ(Rat(A_seq(n)), m[static_cast<std::size_t>(n)]) << n;
}

TEST(ASeqSmall, KnownPrefix) {
  std::vector<Int> got;
  for (long long n = 1; n <= 8; ++n) got.push_back(A_seq(n));
  EXPECT_EQ(got, (std::vector<Int>{0, 2, 13, 58, 219, 772, 2649, 9002}));
}

TEST(ALittleSeq, SeedsFixtureAndOracle) {
  EXPECT_EQ(a_seq(2), 6);
  EXPECT_EQ(a_seq(5), 547);
  std::vector<Int> got;
  for (long long n = 1; n <= 8; ++n) got.push_back(a_seq(n));
  EXPECT_EQ(got, (std::vector<Int>{1, 6, 29, 130, 547, 2198, 8551, 32508}));
  for (long long n = 4; n <= 8; ++n)
    EXPECT_EQ(a_seq(n),
              total_area(static_cast<std::size_t>(n), PathFilter::d_dyck(DParam::restricted(-1))))
        << n;
}

TEST(ALittleSeq, MatchesVSeriesBeyondOracle) {
  Series v = series_V(12);
  for (long long n = 1; n <= 12; ++n)
    EXPECT_EQ(Rat(a_seq(n)), v[static_cast<std::size_t>(n)]) << n;
}

TEST(PRecurrence, ExactDivisionDeep) {
  // the leading coefficient (6+n) divides exactly all the way out
  Int r400 = r_p_recurrence(400);
  EXPECT_EQ(r400.str().size(), 209u);
  EXPECT_EQ(r_p_recurrence(12), 113219);
}

TEST(SequenceTableT, MemoizedDeterminism) {
  SequenceTable fib("fib", 0, [](long long n, const SequenceTable& self) -> Int {
    return n <= 1 ? Int(n) : self.at(n - 1) + self.at(n - 2);
  });
  EXPECT_EQ(fib.at(10), 55);
  EXPECT_EQ(fib.at(3), 2);  // earlier values unchanged by extension
  EXPECT_THROW(fib.at(-1), IndexOutOfRange);
  EXPECT_EQ(fib.name(), "fib");
}

TEST(MinusOneTablesT, BTableIsQPlusOne) {
  MinusOneTables tables;
  EXPECT_EQ(tables.b(0), 1);
  for (long long n = 1; n <= 12; ++n) {
    EXPECT_EQ(tables.b(n), tables.q(n) + 1) << n;
    EXPECT_EQ(tables.b(n), b_closed(n, BClosedFormula::narayana_sum)) << n;
  }
}

TEST(SequenceTableT, ConcurrentExtension) {
  MinusOneTables tables;
  auto run = [&tables](long long n) { return tables.a(n).str(); };
  auto f1 = std::async(std::launch::async, run, 40);
  auto f2 = std::async(std::launch::async, run, 35);
  auto f3 = std::async(std::launch::async, run, 40);
  std::string expect = MinusOneTables().a(40).str();
  EXPECT_EQ(f1.get(), expect);
  EXPECT_EQ(f3.get(), expect);
  EXPECT_EQ(f2.get(), MinusOneTables().a(35).str());
}

}  // namespace
