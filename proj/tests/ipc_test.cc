#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "atm/ipc.h"
#include "oracles.h"
#include "theorems.h"

namespace atm {
namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Prop, ParsePrint) {
  VarNames names;
  Prop f = parse_prop("p & q -> q | ~p", names);
  EXPECT_EQ(names.size(), 2u);
  EXPECT_EQ(to_string(f, names), "p & q -> q | (p -> bot)");
  EXPECT_EQ(parse_prop(to_string(f, names), names), f);
  EXPECT_EQ(f.var_bound(), 2u);
  EXPECT_EQ(Prop::Bot().var_bound(), 0u);
}

TEST(Hilbert, Schemas) {
  EXPECT_EQ(axiom_arity(HilbertAxiom::A2), 3u);
  EXPECT_EQ(axiom_arity(HilbertAxiom::A9), 1u);
  EXPECT_EQ(parse_hilbert_axiom("A7"), HilbertAxiom::A7);
  EXPECT_FALSE(parse_hilbert_axiom("A10"));
  VarNames names;
  EXPECT_EQ(axiom_schema(HilbertAxiom::A8),
            parse_prop("(p -> q) -> (r -> q) -> p | r -> q", names));
  Prop a3 = instantiate(axiom_schema(HilbertAxiom::A3),
                        std::vector<Prop>{Prop::Bot(), Prop::Var(4)});
  EXPECT_EQ(a3, Prop::Impl(Prop::Conj(Prop::Bot(), Prop::Var(4)), Prop::Bot()));
}

TEST(CheckIpc, BundledProofs) {
  int seen = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(ATM_CORPUS_DIR "/ipc")) {
    IpcProof proof = parse_ipc_proof(slurp(entry.path()));
    auto lines = check_ipc(proof);
    ASSERT_TRUE(proof.claim);
    EXPECT_EQ(lines.back(), *proof.claim);
    EXPECT_TRUE(testing::intuitionistically_valid(*proof.claim))
        << entry.path();
    EXPECT_EQ(parse_ipc_proof(to_text(proof)).lines.size(), proof.lines.size());
    ++seen;
  }
  EXPECT_GE(seen, 6);
}

TEST(CheckIpc, Errors) {
  EXPECT_THROW(check_ipc(parse_ipc_proof(
                   "# claim: p -> p\n1. ax A1 s=p t=p\n")),
               IpcError);
  try {
    check_ipc(parse_ipc_proof(
        "# vars: p q\n1. ax A3 s=p t=q\n2. ax A4 s=p t=q\n3. mp 1 2\n"));
    FAIL();
  } catch (const IpcError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(check_ipc(parse_ipc_proof("1. mp 2 3\n")), IpcError);
  EXPECT_THROW(parse_ipc_proof("1. ax A1 s=p\n"), Error);
  EXPECT_THROW(parse_ipc_proof("1. rule 1\n"), Error);
}

TEST(Derivation, SuiteChecksAndIsValid) {
  auto suite = testing::ipc_theorem_suite();
  EXPECT_GE(suite.size(), 20u);
  for (const IpcProof& proof : suite) {
    ASSERT_TRUE(proof.claim) << proof.name;
    EXPECT_NO_THROW(check_ipc(proof)) << proof.name;
    EXPECT_TRUE(testing::intuitionistically_valid(*proof.claim)) << proof.name;
    EXPECT_TRUE(proof.premises.empty());
    IpcProof again = parse_ipc_proof(to_text(proof));
    EXPECT_EQ(again.claim, proof.claim) << proof.name;
  }
}

TEST(Derivation, DischargeKeepsPremises) {
  Derivation d;
  Prop p = Prop::Var(0), q = Prop::Var(1);
  auto pq = d.premise(Prop::Impl(p, q));
  auto h = d.assume(p);
  auto body = d.mp(h, pq);
  EXPECT_TRUE(d.depends_on_hypothesis(body));
  auto done = d.discharge(h, body);
  EXPECT_FALSE(d.depends_on_hypothesis(done));
  IpcProof proof = d.linearize(done);
  EXPECT_EQ(proof.premises.size(), 1u);
  EXPECT_EQ(check_ipc(proof).back(), Prop::Impl(p, q));
  EXPECT_THROW(d.linearize(body), Error);
}

}  // namespace
}  // namespace atm
