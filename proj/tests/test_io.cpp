// Serialization: JSON round trips, CLI shorthand parsers, and the report
// builders whose output must be byte-stable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"

#include "csg/error.hpp"
#include "csg/io.hpp"
#include "csg/order.hpp"
#include "csg/semigroup.hpp"
#include "csg/tree.hpp"

using namespace csg;

namespace {

std::optional<Errc> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Ctx k2() { return deglex_context(2); }

CSemigroup s4(const Ctx& ctx) {
  return CSemigroup::from_gaps(ctx, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 2}});
}

// Temp file helper: writes content, exposes the path; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    char name[] = "/tmp/csg_io_test_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cone JSON round trip") {
  Cone full = Cone::full(2);
  std::string text = cone_to_json(full);
  CHECK(text == R"({"dim":2,"rays":[[1,0],[0,1]]})");
  CHECK(cone_from_json_text(text) == full);

  Cone simp = Cone::make(2, {{2, 1}, {1, 2}});
  CHECK(cone_from_json_text(cone_to_json(simp)) == simp);
  // Round trip is byte-stable.
  CHECK(cone_to_json(cone_from_json_text(cone_to_json(simp))) == cone_to_json(simp));

  CHECK(code_of([] { cone_from_json_text("{nope"); }) == Errc::parse_error);
  CHECK(code_of([] { cone_from_json_text(R"({"rays":[[1,0]]})"); }) == Errc::parse_error);
  CHECK(code_of([] { cone_from_json_text(R"({"dim":2,"rays":[[1,0],["x",1]]})"); }) ==
        Errc::parse_error);
  // Structurally valid JSON with invalid geometry surfaces the cone error.
  CHECK(code_of([] { cone_from_json_text(R"({"dim":2,"rays":[[1,1],[2,2]]})"); }) ==
        Errc::parallel_rays);
}

TEST_CASE("context JSON round trip") {
  Cone cone = Cone::full(2);
  Ctx alt = make_context(cone, WeightOrder::make(cone, {{2, 1}, {1, 0}}));
  std::string text = context_to_json(*alt);
  Ctx back = context_from_json_text(text);
  CHECK(back->cone == alt->cone);
  CHECK(back->order.weights() == alt->order.weights());
  CHECK(context_to_json(*back) == text);
  CHECK(code_of([] { context_from_json_text(R"({"cone":{"dim":2,"rays":[[1,0],[0,1]]}})"); }) ==
        Errc::parse_error);
}

TEST_CASE("semigroup JSON round trip validates the gap set") {
  Ctx ctx = k2();
  std::string text = semigroup_to_json(s4(ctx));
  CSemigroup back = semigroup_from_json_text(text);
  CHECK(back == s4(ctx));
  CHECK(semigroup_to_json(back) == text);
  // The full semigroup round trips with an empty gap array.
  CHECK(semigroup_from_json_text(semigroup_to_json(CSemigroup::full(ctx))).is_full());
  // Gap sets are validated on load: {(2,2)} alone is not closed.
  std::string bad = R"({"cone":{"dim":2,"rays":[[1,0],[0,1]]},)"
                    R"("order":{"weights":[[1,1],[1,0]]},"gaps":[[2,2]]})";
  CHECK(code_of([&] { semigroup_from_json_text(bad); }) == Errc::not_closed);
}

TEST_CASE("semigroup file loading") {
  Ctx ctx = k2();
  TempFile f(semigroup_to_json(s4(ctx)));
  CHECK(load_semigroup_file(f.path) == s4(ctx));
  CHECK(code_of([] { load_semigroup_file("/nonexistent/path.json"); }) == Errc::parse_error);
}

TEST_CASE("cone spec shorthand") {
  CHECK(parse_cone_spec("full:2") == Cone::full(2));
  CHECK(parse_cone_spec("full:3") == Cone::full(3));
  CHECK(code_of([] { parse_cone_spec("full:x"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_cone_spec("full:2x"); }) == Errc::parse_error);
  CHECK(code_of([] { parse_cone_spec("/nonexistent/cone.json"); }) == Errc::parse_error);
  // A cone file path is accepted.
  TempFile f(cone_to_json(Cone::make(2, {{2, 1}, {1, 2}})));
  CHECK(parse_cone_spec(f.path) == Cone::make(2, {{2, 1}, {1, 2}}));
}

TEST_CASE("weight row and point shorthands") {
  CHECK(parse_weight_rows("1,1;1,0") ==
        std::vector<std::vector<long long>>{{1, 1}, {1, 0}});
  CHECK(parse_weight_rows("2,1;1,0") ==
        std::vector<std::vector<long long>>{{2, 1}, {1, 0}});
  CHECK(code_of([] { parse_weight_rows(""); }) == Errc::parse_error);
  CHECK(code_of([] { parse_weight_rows("1,a;1,0"); }) == Errc::parse_error);

  CHECK(parse_point("3,4") == Point{3, 4});
  CHECK(parse_point("0,0") == Point{0, 0});
  CHECK(parse_point("-1,2") == Point{-1, 2});
  CHECK(code_of([] { parse_point(""); }) == Errc::parse_error);
  CHECK(code_of([] { parse_point("1,x"); }) == Errc::parse_error);
}

TEST_CASE("invariant report JSON") {
  Ctx ctx = k2();
  std::string text = invariants_to_json(s4(ctx), invariants(s4(ctx), /*with e*/ true));
  CHECK(text ==
        R"({"conductor":[3,1],"embedding_dim":10,"frobenius":[2,2],"frobenius_number":12,)"
        R"("genus":5,"multiplicity":[2,0],"ray_multiplicities":[[2,0],[0,3]],)"
        R"("small_count":8})");
  // The full semigroup has no Frobenius element: all-(-1) sentinel.
  CSemigroup full = CSemigroup::full(ctx);
  std::string ftext = invariants_to_json(full, invariants(full));
  CHECK(ftext.find(R"("frobenius":[-1,-1])") != std::string::npos);
  CHECK(ftext.find(R"("genus":0)") != std::string::npos);
  CHECK(ftext.find(R"("small_count":0)") != std::string::npos);
}

TEST_CASE("Wilf report JSON") {
  CHECK(wilf_to_json("generalized", 40, 18, true) ==
        R"({"holds":true,"kind":"generalized","lhs":40,"rhs":18})");
  CHECK(wilf_to_json("extended", 1, 2, false) ==
        R"({"holds":false,"kind":"extended","lhs":1,"rhs":2})");
}

TEST_CASE("CSV counts with RFC quoting") {
  std::vector<std::pair<std::string, long long>> rows = {
      {"plain", 3}, {"f=(2,2) g=5", 4}, {"say \"hi\"", 1}};
  CHECK(csv_counts(rows) ==
        "key,count\n"
        "plain,3\n"
        "\"f=(2,2) g=5\",4\n"
        "\"say \"\"hi\"\"\",1\n");
  CHECK(csv_counts({}) == "key,count\n");
}

TEST_CASE("tree rendering to dot") {
  Ctx ctx = k2();
  SemigroupTree t(ordinary_from_frobenius(ctx, Point{1, 1}),
                  SemigroupTree::EdgeKind::gap_added);
  int n1 = t.add_node(0, Point{2, 0});
  t.add_node(n1, Point{2, 1});
  CHECK(tree_to_dot(t) ==
        "digraph semigroup_tree {\n"
        "  node [shape=box];\n"
        "  n0 [label=\"{(0,1),(1,0),(0,2),(1,1)}\"];\n"
        "  n1 [label=\"-(2,0)\"];\n"
        "  n0 -> n1;\n"
        "  n2 [label=\"-(2,1)\"];\n"
        "  n1 -> n2;\n"
        "}\n");
  // A gap-removing tree labels edges with the element joined.
  SemigroupTree r(ordinary_from_frobenius(ctx, Point{0, 1}),
                  SemigroupTree::EdgeKind::gap_removed);
  r.add_node(0, Point{0, 1});
  CHECK(tree_to_dot(r).find("+(0,1)") != std::string::npos);
}
