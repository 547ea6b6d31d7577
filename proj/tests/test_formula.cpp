#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tilint/formula.hpp"
#include "tilint/parser.hpp"

using namespace tilint;

TEST_CASE("parsing the base cases") {
  CHECK(parse_formula("bot") == Formula::bottom());
  CHECK(parse_formula("~P(x)") == Formula::implies(Formula::atom("P", {"x"}), Formula::bottom()));
  CHECK(parse_formula("forall x. exists y. lhd(x,y)") ==
        Formula::forall("x", Formula::exists("y", Formula::atom("lhd", {"x", "y"}))));
}

TEST_CASE("sugar is expanded while parsing") {
  CHECK(parse_formula("p <-> q") ==
        Formula::conj(Formula::implies(Formula::atom("p"), Formula::atom("q")),
                      Formula::implies(Formula::atom("q"), Formula::atom("p"))));
  CHECK(parse_formula("~~p") == Formula::neg(Formula::neg(Formula::atom("p"))));
}

TEST_CASE("precedence and associativity") {
  // ~ binds tightest, then &, |, ->; -> associates to the right.
  CHECK(parse_formula("a & b | c -> d -> e") ==
        Formula::implies(Formula::disj(Formula::conj(Formula::atom("a"), Formula::atom("b")),
                                       Formula::atom("c")),
                         Formula::implies(Formula::atom("d"), Formula::atom("e"))));
  CHECK(parse_formula("~a & b") == Formula::conj(Formula::neg(Formula::atom("a")), Formula::atom("b")));
  CHECK(parse_formula("a & b & c") ==
        Formula::conj(Formula::conj(Formula::atom("a"), Formula::atom("b")), Formula::atom("c")));
}

TEST_CASE("primed names are single identifiers") {
  const Formula f = parse_formula("Q'(x) & S''(y)");
  const Signature sig = signature_of(f);
  CHECK(sig.letters.count("Q'") == 1);
  CHECK(sig.letters.count("S''") == 1);
}

TEST_CASE("quantified variables scope as written") {
  const Formula f = parse_formula("forall x. (P(x) -> exists x. Q(x))");
  CHECK(f.body().rhs().kind() == Conn::Exists);
  CHECK(free_variables(f).empty());
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("forall . P(x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(P(x) & Q(x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("P(x) Q(x)"), ParseError);
  try {
    parse_formula("P(x) &\n& Q(x)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("arity mismatches are rejected") {
  CHECK_THROWS_AS(parse_formula("P(x) & P(x,y)"), ParseError);
  CHECK_THROWS_AS(parse_formula("p & p(x)"), ParseError);
}

TEST_CASE("keywords cannot serve as variables") {
  CHECK_THROWS_AS(parse_formula("forall bot. P(bot)"), ParseError);
  CHECK_THROWS_AS(parse_formula("P(forall)"), ParseError);
}

TEST_CASE("garbage input raises parse errors, never anything else") {
  std::mt19937 rng(777);
  const std::string alphabet = "PQxy'()~&|<->. fobartl_0";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  int parsed = 0;
  for (int round = 0; round < 3000; ++round) {
    std::string text;
    for (int n = len(rng); n > 0; --n) text += alphabet[pick(rng)];
    try {
      const Formula f = parse_formula(text);
      ++parsed;
      REQUIRE(parse_formula(print_formula(f)) == f);
    } catch (const ParseError&) {
      // expected for most random strings
    }
  }
  CHECK(parsed > 0);  // the alphabet does admit valid formulas
}

TEST_CASE("printing the base cases") {
  CHECK(print_formula(Formula::bottom()) == "bot");
  CHECK(print_formula(Formula::implies(Formula::atom("P", {"x"}), Formula::bottom())) == "(P(x) -> bot)");
  CHECK(print_formula(Formula::forall("x", Formula::atom("Q", {"x"}))) == "forall x. Q(x)");
}

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> atoms = {
      {"p", {}}, {"P", {"x"}}, {"P", {"y"}}, {"R", {"x", "y"}}, {"R", {"y", "x"}}, {"Q'", {"z"}}};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  switch (pick(rng)) {
    case 0:
      return Formula::bottom();
    case 1: {
      std::uniform_int_distribution<std::size_t> a(0, atoms.size() - 1);
      const auto& [letter, args] = atoms[a(rng)];
      return Formula::atom(letter, args);
    }
    case 2:
      return Formula::conj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return Formula::disj(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4:
      return Formula::implies(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5:
      return Formula::forall(rng() % 2 ? "x" : "y", random_formula(rng, depth - 1));
    case 6:
      return Formula::exists(rng() % 2 ? "x" : "y", random_formula(rng, depth - 1));
    default:
      return Formula::neg(random_formula(rng, depth - 1));
  }
}

int count_bottoms(const Formula& f) {
  switch (f.kind()) {
    case Conn::Bottom:
      return 1;
    case Conn::Atom:
      return 0;
    case Conn::Forall:
    case Conn::Exists:
      return count_bottoms(f.body());
    default:
      return count_bottoms(f.lhs()) + count_bottoms(f.rhs());
  }
}

// Same connective tree except at replaced bottoms.
bool same_skeleton_modulo_bottom(const Formula& a, const Formula& b) {
  if (a.kind() == Conn::Bottom) return b == Formula::forall("x", Formula::atom("Q'", {"x"}));
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Conn::Atom:
      return a == b;
    case Conn::Forall:
    case Conn::Exists:
      return a.var() == b.var() && same_skeleton_modulo_bottom(a.body(), b.body());
    default:
      return same_skeleton_modulo_bottom(a.lhs(), b.lhs()) &&
             same_skeleton_modulo_bottom(a.rhs(), b.rhs());
  }
}

}  // namespace

TEST_CASE("parse of print is the identity on syntax trees") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 500; ++round) {
    const Formula f = random_formula(rng, 6);
    CAPTURE(print_formula(f));
    REQUIRE(parse_formula(print_formula(f)) == f);
  }
}

TEST_CASE("signature extraction") {
  CHECK(signature_of(Formula::bottom()).letters.empty());
  CHECK(signature_of(Formula::bottom()).variables.empty());

  const Signature serial = signature_of(parse_formula("forall x. exists y. lhd(x,y)"));
  CHECK(serial.letters == std::map<std::string, std::size_t>{{"lhd", 2}});
  CHECK(serial.variables == std::vector<std::string>{"x", "y"});
  CHECK(serial.two_variable());

  CHECK_FALSE(signature_of(parse_formula("forall x. forall y. forall z. R(x,z)")).two_variable());
}

TEST_CASE("positive transform replaces every bottom") {
  CHECK(to_positive(Formula::bottom()) == parse_formula("forall x. Q'(x)"));
  const Formula untouched = Formula::atom("P", {"y"});
  CHECK(to_positive(untouched) == untouched);
  CHECK(to_positive(parse_formula("~P(y)")) == parse_formula("(P(y) -> forall x. Q'(x))"));
}

TEST_CASE("positive transform properties") {
  std::mt19937 rng(7);
  for (int round = 0; round < 300; ++round) {
    const Formula f = random_formula(rng, 6);
    const Formula pos = to_positive(f);
    CAPTURE(print_formula(f));
    REQUIRE_FALSE(contains_bottom(pos));
    REQUIRE(same_skeleton_modulo_bottom(f, pos));
    // New letters are limited to Q' introduced by the substitution.
    const Signature before = signature_of(f);
    for (const auto& [name, arity] : signature_of(pos).letters) {
      if (name == "Q'" && arity == 1 && !before.letters.count("Q'")) continue;
      REQUIRE(before.letters.count(name) == 1);
    }
    if (count_bottoms(f) > 0) REQUIRE_FALSE(f == pos);
  }
}
