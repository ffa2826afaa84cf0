#include <doctest.h>

#include <string>

#include "leibniz/corpus.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/io.hpp"

using namespace leibniz;

namespace {

// Minimal valid document; nilpotent 2-dim algebra with [e1,e1] = e2.
const char* kSmall = R"({
  "brackets": [
    {
      "left": 1,
      "result": [
        [
          2,
          "1"
        ]
      ],
      "right": 1
    }
  ],
  "dim": 2,
  "name": "small"
}
)";

std::string replaced(std::string text, const std::string& from, const std::string& to) {
  return text.replace(text.find(from), from.size(), to);
}

}  // namespace

TEST_CASE("parse and canonical render round trip") {
  const AlgebraDoc doc = parse_algebra(kSmall, "small");
  CHECK(doc.algebra.dim() == 2);
  CHECK(doc.algebra.name() == "small");
  CHECK(doc.algebra.bracket_basis(0, 0) == basis_vec(2, 1));
  CHECK_FALSE(doc.solvable_radical.has_value());
  CHECK(render_algebra(doc) == kSmall);
}

TEST_CASE("every corpus document renders canonically") {
  for (const auto& ent : corpus_manifest()) {
    const std::string text = render_algebra(ent.doc);
    const AlgebraDoc back = parse_algebra(text, ent.filename);
    CHECK(render_algebra(back) == text);
    CHECK(back.algebra.dim() == ent.doc.algebra.dim());
    CHECK(back.algebra.name() == ent.doc.algebra.name());
    CHECK(back.solvable_radical == ent.doc.solvable_radical);
    CHECK(back.nilradical == ent.doc.nilradical);
    CHECK(back.is_lie == ent.doc.is_lie);
  }
}

TEST_CASE("meta annotations round trip") {
  const auto manifest = corpus_manifest();
  bool saw_radical = false, saw_lie = false;
  for (const auto& ent : manifest) {
    if (ent.doc.solvable_radical) saw_radical = true;
    if (ent.doc.is_lie.value_or(false)) saw_lie = true;
  }
  CHECK(saw_radical);
  CHECK(saw_lie);
}

TEST_CASE("rejects malformed documents") {
  // not JSON at all
  CHECK_THROWS_AS(parse_algebra("nonsense", "t"), ParseError);
  // wrong root type
  CHECK_THROWS_AS(parse_algebra("[]", "t"), ParseError);
  // missing required keys
  CHECK_THROWS_AS(parse_algebra(R"({"dim": 2, "name": "x"})", "t"), ParseError);
  // unknown top-level key
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"dim\"", "\"extra\": 1, \"dim\""), "t"),
                  ParseError);
  // zero dim
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"dim\": 2", "\"dim\": 0"), "t"), ParseError);
}

TEST_CASE("rejects bad bracket entries") {
  // index out of range
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"left\": 1", "\"left\": 3"), "t"), ParseError);
  // zero index (indices are 1-based)
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"left\": 1", "\"left\": 0"), "t"), ParseError);
  // malformed rational
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"1\"", "\"1.5\""), "t"), ParseError);
  // zero coefficient is not canonical
  CHECK_THROWS_AS(parse_algebra(replaced(kSmall, "\"1\"", "\"0\""), "t"), ParseError);
  // duplicate (left, right) key
  const std::string dup = replaced(
      std::string(kSmall), "{\n      \"left\": 1,",
      "{\n      \"left\": 1,\n      \"result\": [[2, \"1\"]],\n      \"right\": 1\n    },\n    "
      "{\n      \"left\": 1,");
  CHECK_THROWS_AS(parse_algebra(dup, "t"), ParseError);
}

TEST_CASE("identity is validated unless the file opts out") {
  const std::string bad = replaced(std::string(kSmall), "[\n          2,", "[\n          1,");
  CHECK_THROWS_AS(parse_algebra(bad, "t"), IdentityViolation);
  const std::string unchecked =
      replaced(bad, "\"name\": \"small\"", "\"name\": \"small\",\n  \"unchecked\": true");
  const AlgebraDoc doc = parse_algebra(unchecked, "t");
  CHECK(doc.algebra.unchecked());
}

TEST_CASE("the seeded invalid fixture stays invalid but loadable") {
  const AlgebraDoc doc = corpus_bad_table();
  CHECK(doc.algebra.unchecked());
  const std::string text = render_algebra(doc);
  CHECK(parse_algebra(text, "bad").algebra.unchecked());
}

TEST_CASE("matrix files round trip") {
  Matrix m(2, 3);
  m.at(0, 0) = Rat(1, 2);
  m.at(1, 2) = Rat(-7);
  const std::string text = render_matrix(m);
  CHECK(parse_matrix(text, "m") == m);
  CHECK(render_matrix(parse_matrix(text, "m")) == text);
  CHECK_THROWS_AS(parse_matrix("{}", "m"), ParseError);
  CHECK_THROWS_AS(parse_matrix(R"({"cols": 2, "entries": [["1"]], "rows": 1})", "m"), ParseError);
}

TEST_CASE("missing files give a parse error naming the path") {
  try {
    load_algebra("/nonexistent/algebra.json");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/algebra.json") != std::string::npos);
  }
}
