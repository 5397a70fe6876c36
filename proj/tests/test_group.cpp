#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "centra/builtins.hpp"
#include "centra/group_spec.hpp"
#include "oracle.hpp"

using namespace centra;

namespace {

std::vector<Permutation> perms(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> out;
  for (const char* c : cycles) out.push_back(parse_cycle_notation(c, degree));
  return out;
}

std::size_t count_of_order(const Group& g, std::size_t k) {
  std::size_t n = 0;
  for (ElemId x = 0; x < g.order(); ++x) n += oracle::element_order(g, x) == k ? 1 : 0;
  return n;
}

}  // namespace

TEST(CycleNotation, ThreeCycle) {
  const auto p = parse_cycle_notation("(1,2,3)", 4);
  EXPECT_EQ(p.images(), (std::vector<std::uint32_t>{1, 2, 0, 3}));
  EXPECT_EQ(p.to_cycle_string(), "(1,2,3)");
}

TEST(CycleNotation, Identity) {
  const auto p = parse_cycle_notation("()", 4);
  EXPECT_TRUE(p.is_identity());
  EXPECT_EQ(p.degree(), 4u);
}

TEST(CycleNotation, DoubleTransposition) {
  const auto p = parse_cycle_notation("(1,2)(3,4)", 4);
  EXPECT_EQ(p.images(), (std::vector<std::uint32_t>{1, 0, 3, 2}));
  EXPECT_TRUE((p * p).is_identity());
}

TEST(CycleNotation, Errors) {
  for (const char* bad : {"(1,2", "1,2)", "(1,,2)", "(1 2)", "(a)", "(1,2)x", "", "(0,1)"})
    EXPECT_THROW(parse_cycle_notation(bad, 4), ParseError) << bad;
  EXPECT_THROW(parse_cycle_notation("(1,5)", 4), ParseError);
  EXPECT_THROW(parse_cycle_notation("(1,2)(2,3)", 4), ParseError);
  EXPECT_THROW(parse_cycle_notation("(1,2,1)", 4), ParseError);
}

TEST(CycleNotation, RoundTripRandom) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint32_t> img(9);
    for (std::uint32_t i = 0; i < 9; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p(img);
    EXPECT_EQ(parse_cycle_notation(p.to_cycle_string(), 9), p);
  }
}

TEST(Permutation, RightActionProduct) {
  const auto a = parse_cycle_notation("(1,2)", 3);
  const auto b = parse_cycle_notation("(2,3)", 3);
  // 1 -a-> 2 -b-> 3
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((a * b).to_cycle_string(), "(1,3,2)");
}

TEST(Generators, SymmetricFour) {
  const auto gens = perms(4, {"(1,2)", "(1,2,3,4)"});
  const Group g = group_from_generators(4, gens);
  EXPECT_EQ(g.order(), oracle::permutation_closure(gens, 4).size());
  EXPECT_EQ(g.order(), 24u);
  EXPECT_EQ(g.label(0), "()");
}

TEST(Generators, TrivialGroup) {
  const Group g = group_from_generators(1, std::vector<Permutation>{});
  EXPECT_EQ(g.order(), 1u);
}

TEST(Generators, DihedralEightAsSquareSymmetries) {
  const auto gens = perms(4, {"(1,2,3,4)", "(1,3)"});
  const Group g = group_from_generators(4, gens);
  EXPECT_EQ(g.order(), oracle::permutation_closure(gens, 4).size());
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(center(g).size(), 2u);
}

TEST(Generators, BreadthFirstNumberingIsDeterministic) {
  const auto gens = perms(4, {"(1,2)", "(1,2,3,4)"});
  const Group a = group_from_generators(4, gens);
  const Group b = group_from_generators(4, gens);
  EXPECT_EQ(a.labels(), b.labels());
  EXPECT_TRUE(std::equal(a.table().begin(), a.table().end(), b.table().begin()));
  // generators are discovered right after the identity, in the given order
  EXPECT_EQ(a.label(1), "(1,2)");
  EXPECT_EQ(a.label(2), "(1,2,3,4)");
}

TEST(Generators, DegreeMismatchAndBound) {
  std::vector<Permutation> gens{parse_cycle_notation("(1,2)", 4), parse_cycle_notation("(1,2,3)", 5)};
  EXPECT_THROW(group_from_generators(4, gens), PreconditionError);
  EXPECT_THROW(group_from_generators(4, perms(4, {"(1,2)", "(1,2,3,4)"}), 23), OrderBoundError);
  EXPECT_NO_THROW(group_from_generators(4, perms(4, {"(1,2)", "(1,2,3,4)"}), 24));
}

TEST(CayleyTable, CyclicTwo) {
  const Group g = parse_cayley_table("2\n0 1\n1 0\n");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.mul(1, 1), 0u);
  EXPECT_TRUE(g.is_abelian());
}

TEST(CayleyTable, QuaternionFile) {
  const Group g = load_table_file(std::string(CENTRA_DATA_DIR) + "/q8.tbl");
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(count_of_order(g, 4), 6u);
  const Group q = quaternion_group();
  EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), q.table().begin()));
  EXPECT_EQ(g.labels(), q.labels());
}

TEST(CayleyTable, NonAssociativeLatinSquareRejected) {
  const std::vector<ElemId> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  ASSERT_FALSE(oracle::associative(5, loop));
  try {
    Group(5, loop);
    FAIL() << "accepted a non-associative table";
  } catch (const GroupLawError& e) {
    EXPECT_EQ(e.law(), "associativity");
  }
}

TEST(CayleyTable, FirstFailingLawIsNamed) {
  auto law_of = [](const std::string& text) -> std::string {
    try {
      parse_cayley_table(text);
    } catch (const GroupLawError& e) {
      return e.law();
    }
    return "accepted";
  };
  EXPECT_EQ(law_of("2\n1 0\n0 1\n"), "identity");
  EXPECT_EQ(law_of("3\n0 1 2\n1 1 0\n2 0 1\n"), "latin");
  EXPECT_EQ(law_of("2\n0 5\n1 0\n"), "range");
  EXPECT_EQ(law_of("2\n0 1\n1 0\nlabel 0 x\nlabel 1 x\n"), "labels");
  EXPECT_THROW(parse_cayley_table("2\n0 1\n1\n"), ParseError);
  EXPECT_THROW(parse_cayley_table("x\n"), ParseError);
  EXPECT_THROW(parse_cayley_table("2\n0 1\n1 0\nlabel 9 x\n"), ParseError);
}

TEST(CayleyTable, InverseLawNamed) {
  // latin square with identity 0 where 2·3 = 0 but 3·2 != 0
  const std::vector<ElemId> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1, 3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
  std::string detail;
  const auto law = first_failing_law(5, loop, &detail);
  ASSERT_TRUE(law.has_value());
  EXPECT_EQ(*law, "inverse");
  EXPECT_FALSE(detail.empty());
}

TEST(CayleyTable, WriteReadRoundTrip) {
  const Group d8 = dihedral_group(8);
  std::stringstream s;
  write_cayley_table(s, d8);
  const Group back = read_cayley_table(s);
  EXPECT_EQ(back.labels(), d8.labels());
  EXPECT_TRUE(std::equal(back.table().begin(), back.table().end(), d8.table().begin()));
}

TEST(CayleyTable, LargeOrderUsesSampledAssociativity) {
  // order 729 > 512: accepted via the sampled path, still rejects a corrupted table
  const Group h = direct_product(heisenberg_group(3), heisenberg_group(3));
  EXPECT_EQ(h.order(), 729u);
  EXPECT_FALSE(first_failing_law(h.order(), h.table()).has_value());
}

TEST(DirectProduct, KleinFour) {
  const Group v = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_EQ(v.order(), 4u);
  for (ElemId x = 1; x < 4; ++x) EXPECT_EQ(oracle::element_order(v, x), 2u);
}

TEST(DirectProduct, IdsAndOrder) {
  const Group d8 = dihedral_group(8);
  const Group p = direct_product(d8, d8);
  EXPECT_EQ(p.order(), 64u);
  const ElemId a = d8.at("a"), b = d8.at("b");
  EXPECT_EQ(p.label(a * 8 + b), "(a,b)");
  EXPECT_EQ(p.mul(a * 8 + b, b * 8 + a), d8.mul(a, b) * 8 + d8.mul(b, a));
  EXPECT_THROW(direct_product(d8, d8, 63), OrderBoundError);
}

TEST(DirectProduct, TrivialFactorIsACopy) {
  const Group d8 = dihedral_group(8);
  const Group p = direct_product(d8, cyclic_group(1));
  ASSERT_EQ(p.order(), d8.order());
  EXPECT_TRUE(std::equal(p.table().begin(), p.table().end(), d8.table().begin()));
}

TEST(DirectProduct, CenterOfProductIsProductOfCenters) {
  const std::vector<Group> fleet{dihedral_group(8), quaternion_group(), symmetric_group(3), cyclic_group(4)};
  for (const auto& g : fleet)
    for (const auto& h : fleet) {
      if (g.order() * h.order() > 64) continue;
      const Group p = direct_product(g, h);
      EXPECT_EQ(p.order(), g.order() * h.order());
      const auto zg = center(g), zh = center(h);
      ElemSet expect(p.order());
      zg.for_each([&](ElemId x) { zh.for_each([&](ElemId y) { expect.insert(static_cast<ElemId>(x * h.order() + y)); }); });
      EXPECT_EQ(center(p), expect);
    }
}

TEST(Builtins, DihedralEight) {
  const Group d8 = builtin_group("dihedral", {8});
  EXPECT_EQ(d8.order(), 8u);
  EXPECT_EQ(oracle::centralizer(d8, oracle::all(d8)).size(), 2u);
  EXPECT_EQ(d8.labels(), (std::vector<std::string>{"1", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"}));
  // bab = a^-1
  EXPECT_EQ(d8.mul(d8.mul(d8.at("b"), d8.at("a")), d8.at("b")), d8.at("a^3"));
}

TEST(Builtins, HeisenbergThree) {
  const Group h = builtin_group("heisenberg", {3});
  EXPECT_EQ(h.order(), 27u);
  EXPECT_EQ(oracle::centralizer(h, oracle::all(h)).size(), 3u);
  for (ElemId x = 1; x < h.order(); ++x) EXPECT_EQ(oracle::element_order(h, x), 3u);
}

TEST(Builtins, QuaternionHasOneInvolution) {
  const Group q = builtin_group("quaternion8", {});
  EXPECT_EQ(count_of_order(q, 2), 1u);
  EXPECT_EQ(q.label(1), "-1");
}

TEST(Builtins, InvalidParameters) {
  EXPECT_THROW(builtin_group("heisenberg", {4}), PreconditionError);
  EXPECT_THROW(builtin_group("dihedral", {7}), PreconditionError);
  EXPECT_THROW(builtin_group("cyclic", {0}), PreconditionError);
  EXPECT_THROW(builtin_group("symmetric", {}), PreconditionError);
  EXPECT_THROW(builtin_group("nonsense", {2}), PreconditionError);
  EXPECT_THROW(load_builtin("dihedral:x"), ParseError);
  EXPECT_EQ(load_builtin("symmetric:3").order(), 6u);
  EXPECT_EQ(load_builtin("cyclic:1").order(), 1u);
}

TEST(SubgroupGeneratedBy, Examples) {
  const Group s4 = symmetric_group(4);
  const ElemId r = s4.at("(1,2,3)");
  EXPECT_EQ(subgroup_generated_by(s4, ElemSet(24, {r})).size(), 3u);
  EXPECT_EQ(subgroup_generated_by(s4, s4.empty_set()), ElemSet(24, {0}));
  ElemSet u = oracle::to_elem_set(s4, oracle::centralizer(s4, {r}));
  u |= oracle::to_elem_set(s4, oracle::centralizer(s4, {s4.at("(1,2)(3,4)"), s4.at("(1,3)(2,4)")}));
  const ElemSet a4 = subgroup_generated_by(s4, u);
  EXPECT_EQ(a4.size(), 12u);
  EXPECT_TRUE(is_subgroup(s4, a4));
}

TEST(SubgroupGeneratedBy, ClosureOperatorExhaustiveSmall) {
  for (const Group& g : {dihedral_group(8), quaternion_group(), symmetric_group(3), cyclic_group(6)}) {
    const std::size_t n = g.order();
    std::vector<ElemSet> gen(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < gen.size(); ++m) {
      const auto s = oracle::to_elem_set(g, oracle::subset_of_mask(m));
      gen[m] = subgroup_generated_by(g, s);
      ASSERT_EQ(oracle::to_set(gen[m]), oracle::generated(g, oracle::subset_of_mask(m)));
      ASSERT_TRUE(s.is_subset_of(gen[m]));
      ASSERT_EQ(subgroup_generated_by(g, gen[m]), gen[m]);
    }
    for (std::uint64_t a = 0; a < gen.size(); ++a)
      for (std::uint64_t b = a;; b = (b + 1) | a) {  // supersets of a
        ASSERT_TRUE(gen[a].is_subset_of(gen[b]));
        if (b == gen.size() - 1) break;
      }
  }
}

TEST(SubgroupGeneratedBy, RandomSubsetsLarger) {
  const Group g = direct_product(dihedral_group(8), dihedral_group(8));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    oracle::Set s;
    for (int k = std::uniform_int_distribution<int>(0, 3)(rng); k > 0; --k)
      s.insert(std::uniform_int_distribution<ElemId>(0, 63)(rng));
    EXPECT_EQ(oracle::to_set(subgroup_generated_by(g, oracle::to_elem_set(g, s))), oracle::generated(g, s));
  }
}

TEST(Center, Examples) {
  const Group d8 = dihedral_group(8);
  EXPECT_EQ(center(d8), d8.set_of({"1", "a^2"}));
  const Group c6 = cyclic_group(6);
  EXPECT_EQ(center(c6), c6.all());
  const Group s4 = symmetric_group(4);
  EXPECT_EQ(center(s4).size(), 1u);
}

TEST(GeneratorFile, ReadsHeaderAndCycles) {
  const Group g = load_generator_file(std::string(CENTRA_DATA_DIR) + "/s4.gens");
  EXPECT_EQ(g.order(), 24u);
  std::istringstream bad("perm x\n(1,2)\n");
  EXPECT_THROW(read_generators(bad), ParseError);
  std::istringstream noheader("(1,2)\n");
  EXPECT_THROW(read_generators(noheader), ParseError);
  EXPECT_THROW(load_generator_file("/nonexistent/file.gens"), IoError);
}
