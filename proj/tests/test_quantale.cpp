#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>

#include "oracles.hpp"
#include "vtop/vtop.hpp"

using namespace vtop;

namespace {

template <class Fn>
Error error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error raised";
  return Error(ErrorKind::ParseError, "none");
}

// Symmetric group on three letters, elements in lexicographic order of their
// images, multiplication (p q)(i) = p(q(i)).
std::vector<std::size_t> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> mult;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};
      mult.push_back(static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
    }
  return mult;
}

}  // namespace

TEST(ValidateQuantale, LawsReportedWithWitness) {
  const auto two = lattices::chain(2);
  EXPECT_EQ(error_of([&] { validate_quantale(two, std::vector<Elem>{0, 0, 0}, 1); }).kind(), ErrorKind::OutOfRange);
  EXPECT_EQ(error_of([&] { validate_quantale(two, std::vector<Elem>{0, 0, 0, 1}, 2); }).kind(), ErrorKind::OutOfRange);
  // Unit top but top (x) top = bottom.
  auto e = error_of([&] { validate_quantale(two, std::vector<Elem>{0, 0, 0, 0}, 1); });
  EXPECT_EQ(e.kind(), ErrorKind::UnitLawFails);
  EXPECT_EQ(e.witness(), (std::vector<std::size_t>{1}));
  // Unit bottom on the 2-chain: bottom cannot absorb and be neutral at once.
  e = error_of([&] { validate_quantale(two, std::vector<Elem>{0, 1, 1, 1}, 0); });
  EXPECT_EQ(e.kind(), ErrorKind::BottomNotAbsorbing);
  // 3-chain, unit top, a (x) a = top breaks monotonicity: (a v top) (x) a = a, but a (x) a v top (x) a = top.
  const auto c3 = lattices::chain(3);
  e = error_of([&] { validate_quantale(c3, std::vector<Elem>{0, 0, 0, 0, 2, 1, 0, 1, 2}, 2); });
  EXPECT_EQ(e.kind(), ErrorKind::JoinNotPreserved);
}

TEST(ValidateQuantale, PerturbedTablesAgreeWithOracle) {
  const auto b2 = lattices::boolean(2);
  const auto ts = oracle::all_quantales(b2);
  EXPECT_EQ(ts.size(), 9u);
  // Every valid table with one cell changed: accepted exactly when the oracle accepts.
  const auto J = oracle::join_table(b2);
  for (const auto& [t, k] : ts)
    for (std::size_t i = 0; i < t.size(); ++i)
      for (Elem v = 0; v < 4; ++v) {
        auto t2 = t;
        t2[i] = v;
        const bool ok = oracle::quantale_laws(b2, J, t2, k);
        try {
          validate_quantale(b2, t2, k);
          ASSERT_TRUE(ok);
        } catch (const Error&) {
          ASSERT_FALSE(ok);
        }
      }
}

TEST(Residual, AdjunctionAndOracle) {
  for (const auto& [name, qp] : quantales::catalog()) {
    SCOPED_TRACE(name);
    const auto& q = *qp;
    for (Elem v = 0; v < q.size(); ++v)
      for (Elem w = 0; w < q.size(); ++w) {
        ASSERT_EQ(q.residual(v, w), oracle::residual(q, v, w));
        for (Elem u = 0; u < q.size(); ++u)
          ASSERT_EQ(q.leq(q.tensor(u, v), w), q.leq(u, q.residual(v, w)));
      }
  }
}

TEST(Builders, LawvereChainIsTruncatedAddition) {
  const auto q = quantales::lawvere_chain(2);
  using quantales::lawvere_index;
  using quantales::lawvere_value;
  ASSERT_EQ(q->size(), 4u);
  EXPECT_EQ(q->unit(), lawvere_index(2, 0));
  EXPECT_EQ(q->unit(), q->top());
  EXPECT_EQ(q->bottom(), lawvere_index(2, quantales::kInfinity));
  EXPECT_EQ(q->name(q->bottom()), "inf");
  EXPECT_EQ(q->tensor(lawvere_index(2, 1), lawvere_index(2, 1)), lawvere_index(2, 2));
  EXPECT_EQ(q->tensor(lawvere_index(2, 1), lawvere_index(2, 2)), q->bottom());
  // Reversed order: 2 <= 1 <= 0.
  EXPECT_TRUE(q->leq(lawvere_index(2, 2), lawvere_index(2, 1)));
  // [v, w] = max(w - v, 0) in numeric terms.
  EXPECT_EQ(q->residual(lawvere_index(2, 1), lawvere_index(2, 2)), lawvere_index(2, 1));
  EXPECT_EQ(q->residual(lawvere_index(2, 2), lawvere_index(2, 1)), lawvere_index(2, 0));
  for (Elem w = 0; w < q->size(); ++w) EXPECT_EQ(q->residual(q->unit(), w), w);
  for (Elem a = 1; a < q->size(); ++a)
    for (Elem b = 1; b < q->size(); ++b) {
      const auto s = lawvere_value(2, a) + lawvere_value(2, b);
      EXPECT_EQ(q->tensor(a, b), s > 2 ? q->bottom() : lawvere_index(2, s));
    }
}

TEST(Builders, LukasiewiczAndChainFrame) {
  const auto l = quantales::lukasiewicz_chain(2);
  EXPECT_EQ(l->tensor(1, 1), 0);
  EXPECT_EQ(l->tensor(1, 2), 1);
  EXPECT_EQ(l->name(1), "1/2");
  const auto f = quantales::chain_frame(4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) EXPECT_EQ(f->tensor(a, b), std::min(a, b));
}

TEST(Builders, FreeQuantaleOnIdempotent) {
  const auto q = quantales::free_on_idempotent();
  ASSERT_EQ(q->size(), 4u);
  // Bitmasks over {e, a}.
  EXPECT_EQ(q->unit(), 1);
  EXPECT_NE(q->unit(), q->top());
  EXPECT_EQ(q->tensor(2, 2), 2);
  EXPECT_EQ(q->tensor(3, 3), 3);
  EXPECT_EQ(q->name(3), "{e,a}");
  ASSERT_TRUE(q->monoid().has_value());
  const auto c = classify(*q);
  EXPECT_FALSE(c.integral);
  EXPECT_TRUE(c.commutative);
  EXPECT_TRUE(c.lattice_spatial);
}

TEST(Builders, MonoidTableErrors) {
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(0, {}); }).kind(), ErrorKind::InvalidMonoidTable);
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(2, {0, 1, 1}); }).kind(), ErrorKind::InvalidMonoidTable);
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(2, {0, 2, 1, 1}); }).kind(), ErrorKind::InvalidMonoidTable);
  // Left-zero semigroup on two elements has no neutral element.
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(2, {0, 0, 1, 1}); }).kind(), ErrorKind::InvalidMonoidTable);
  // Not associative: a b = b, b a = a, a a = b with e neutral.
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(3, {0, 1, 2, 1, 2, 2, 2, 1, 1}); }).kind(),
            ErrorKind::InvalidMonoidTable);
  EXPECT_EQ(error_of([] { quantales::free_on_monoid(7, std::vector<std::size_t>(49, 0)); }).kind(),
            ErrorKind::SizeLimitExceeded);
}

TEST(Classify, NonCommutativeFreeQuantaleOnS3) {
  const auto mult = s3_table();
  const auto q = quantales::free_on_monoid(6, mult);
  ASSERT_EQ(q->size(), 64u);
  const auto c = classify(*q);
  EXPECT_FALSE(c.commutative);
  EXPECT_FALSE(c.integral);
  EXPECT_TRUE(c.lattice_spatial);
  // Singletons multiply as in the group.
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b)
      EXPECT_EQ(q->tensor(static_cast<Elem>(1u << a), static_cast<Elem>(1u << b)),
                static_cast<Elem>(1u << mult[a * 6 + b]));
}

TEST(Classify, Catalog) {
  std::map<std::string, std::array<bool, 3>> expected = {
      {"trivial", {true, true, true}},      {"two", {true, true, true}},
      {"lawvere2", {true, true, true}},     {"free_e_a", {false, true, true}},
      {"boolean2x2", {true, true, true}},   {"chain3", {true, true, true}},
      {"lukasiewicz2", {true, true, true}}, {"lawvere1", {true, true, true}}};
  for (const auto& [name, q] : quantales::catalog()) {
    SCOPED_TRACE(name);
    const auto c = classify(*q);
    ASSERT_TRUE(expected.count(name));
    EXPECT_EQ(c.integral, expected[name][0]);
    EXPECT_EQ(c.commutative, expected[name][1]);
    EXPECT_EQ(c.lattice_spatial, expected[name][2]);
  }
}

TEST(Enumerate, MatchesBruteForceOnSmallLattices) {
  struct Case {
    std::string name;
    FiniteLattice lattice;
    std::size_t count, commutative, integral;
  };
  // Counts frozen from the brute-force oracle.
  const std::vector<Case> cases = {
      {"chain1", lattices::chain(1), 1, 1, 1},
      {"chain2", lattices::chain(2), 1, 1, 1},
      {"chain3", lattices::chain(3), 3, 3, 2},
      {"chain4", lattices::chain(4), 15, 11, 8},
      {"boolean2", lattices::boolean(2), 9, 9, 1},
      {"M3", lattices::m3(), 39, 39, 0},
      {"N5", lattices::n5(), 26, 22, 0},
      {"diamond+top", lattices::ordinal_sum(lattices::boolean(2), lattices::chain(1)), 20, 16, 4},
  };
  for (const auto& cs : cases) {
    SCOPED_TRACE(cs.name);
    const auto found = enumerate_quantales(cs.lattice, 1000);
    const auto brute = oracle::all_quantales(cs.lattice);
    ASSERT_EQ(found.size(), brute.size());
    EXPECT_EQ(found.size(), cs.count);
    std::size_t comm = 0, integral = 0;
    for (const auto& q : found) {
      const auto c = classify(q);
      comm += c.commutative;
      integral += c.integral;
      const bool in_brute = std::any_of(brute.begin(), brute.end(), [&](const auto& b) {
        return b.first == q.tensor_table() && b.second == q.unit();
      });
      EXPECT_TRUE(in_brute);
    }
    EXPECT_EQ(comm, cs.commutative);
    EXPECT_EQ(integral, cs.integral);
  }
}

TEST(Enumerate, TwoChainHasOneQuantale) {
  const auto qs = enumerate_quantales(lattices::chain(2), 10);
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0].tensor_table(), quantales::two()->tensor_table());
  EXPECT_EQ(qs[0].unit(), quantales::two()->unit());
}

TEST(Enumerate, OrderIsDeterministicAndTruncates) {
  const auto all = enumerate_quantales(lattices::m3(), 1000);
  const auto again = enumerate_quantales(lattices::m3(), 1000);
  EXPECT_EQ(all, again);
  const auto first = enumerate_quantales(lattices::m3(), 5);
  ASSERT_EQ(first.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(first[i], all[i]);
}

TEST(Enumerate, SizeCap) {
  Caps caps;
  caps.enumerate_elements = 4;
  EXPECT_EQ(error_of([&] { enumerate_quantales(lattices::m3(), 10, caps); }).kind(), ErrorKind::SizeLimitExceeded);
}
