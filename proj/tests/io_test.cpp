#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "domcode/io.hpp"
#include "domcode/verify.hpp"
#include "support/generators.hpp"

using namespace domcode;

TEST(GraphFile, RoundTrip) {
  gen::Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const Graph g = gen::random_connected_between(rng, 1, 12);
    std::stringstream s;
    write_graph(s, g);
    const Graph back = read_graph(s);
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.name(), g.name());
  }
}

TEST(GraphFile, CommentsAndBlankLines) {
  std::istringstream in("# a path\n\ngraph P3 3\n0 1  # first\n\n1 2\n");
  const Graph g = read_graph(in);
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.name(), "P3");
  EXPECT_EQ(g.label(0), (Label{1}));
}

TEST(GraphFile, Errors) {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(read_graph(in), ParseError) << text;
  };
  bad("");
  bad("grph g 3\n");
  bad("graph g -1\n");
  bad("graph g 3\n0 3\n");
  bad("graph g 3\n0 0\n");
  bad("graph g 3\n0 1\n1 0\n");
  bad("graph g 3\n0 1 2\n");
  bad("graph g 3\nzero one\n");
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), InvalidParameter);
}

TEST(CodeFile, IdsAndTuples) {
  std::istringstream in("code cart(K(2), K(3))\n0\n(2,3)\n# comment\n( 1 , 2 )\n");
  const CodeFile f = read_code(in);
  EXPECT_EQ(f.graph_name, "cart(K(2), K(3))");
  EXPECT_EQ(f.ids, (std::vector<std::size_t>{0}));
  EXPECT_EQ(f.tuples, (std::vector<Label>{{2, 3}, {1, 2}}));
  const Graph g = parse_graph_spec("cart(K(2),K(3))");
  const Code c = to_code(g, f);
  EXPECT_EQ(c.labels(g), (std::vector<Label>{{1, 1}, {1, 2}, {2, 3}}));
}

TEST(CodeFile, NegativeCoordinates) {
  const Graph g = king_window(2);
  std::istringstream in("code king(2)\n(-1,0)\n(2,-2)\n");
  const Code c = to_code(g, read_code(in));
  EXPECT_TRUE(c.contains(g.at({-1, 0})));
  EXPECT_TRUE(c.contains(g.at({2, -2})));
}

TEST(CodeFile, GraphNameMustMatch) {
  std::istringstream in("code direct(K(3),K(3))\n(1,1)\n");
  const CodeFile f = read_code(in);
  EXPECT_THROW(to_code(parse_graph_spec("cart(K(3),K(3))"), f), InvalidParameter);
  EXPECT_NO_THROW(to_code(parse_graph_spec("direct(K(3), K(3))"), f));
}

TEST(CodeFile, Errors) {
  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    EXPECT_THROW(read_code(in), ParseError) << text;
  };
  bad("");
  bad("cdoe g\n");
  bad("code g\n(1,x)\n");
  bad("code g\n()\n");
  const Graph g = complete_graph(3);
  std::istringstream out_of_range("code K(3)\n3\n");
  EXPECT_THROW(to_code(g, read_code(out_of_range)), InvalidParameter);
  std::istringstream unknown_label("code K(3)\n(4)\n");
  EXPECT_THROW(to_code(g, read_code(unknown_label)), InvalidParameter);
  EXPECT_THROW(read_code_file("/nonexistent/c.code"), InvalidParameter);
}

TEST(CodeFile, WriteThenRead) {
  const Graph g = parse_graph_spec("direct(K(4),K(5))");
  const Code c = Code::from_labels(g, {{1, 1}, {4, 5}, {2, 3}});
  std::stringstream s;
  write_code(s, g, c);
  EXPECT_EQ(to_code(g, read_code(s)), c);
}

TEST(GraphSpec, Constructors) {
  EXPECT_EQ(parse_graph_spec("K(4)"), complete_graph(4));
  EXPECT_EQ(parse_graph_spec(" cart( K(2) , K(3) ) "), cartesian_product(complete_graph(2), complete_graph(3)));
  EXPECT_EQ(parse_graph_spec("direct(K(3),K(3))"), direct_product(complete_graph(3), complete_graph(3)));
  EXPECT_EQ(parse_graph_spec("comp(cart(K(3),K(4)))"), direct_product(complete_graph(3), complete_graph(4)));
  EXPECT_EQ(parse_graph_spec("cube(3)"), hamming_cube(3));
  EXPECT_EQ(parse_graph_spec("king(2)"), king_window(2));
  EXPECT_EQ(parse_graph_spec("tri(3)"), triangular_window(3));
  EXPECT_EQ(parse_graph_spec("cart(cart(K(2),K(2)),K(2))"), hamming_cube(2));
}

TEST(GraphSpec, NamesAreSpecs) {
  for (const char* s : {"K(4)", "cart(K(2),K(3))", "comp(direct(K(2),K(4)))", "cube(2)", "king(1)", "tri(2)"})
    EXPECT_EQ(parse_graph_spec(s).name(), s);
}

TEST(GraphSpec, FileConstructor) {
  const auto path = std::filesystem::temp_directory_path() / "domcode_spec_test.graph";
  {
    std::ofstream out(path);
    out << "graph P4 4\n0 1\n1 2\n2 3\n";
  }
  const Graph g = parse_graph_spec("file(" + path.string() + ")");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.name(), "P4");
  EXPECT_EQ(parse_graph_spec("comp(file(" + path.string() + "))").edge_count(), 3u);
  std::filesystem::remove(path);
}

TEST(GraphSpec, Errors) {
  for (const char* s : {"", "K", "K(", "K()", "K(3", "K(3))", "Q(3)", "cart(K(2))", "cart(K(2),)", "K(-1)",
                        "K(9999999)", "cube(1)", "K(0)"})
    EXPECT_THROW(parse_graph_spec(s), InvalidParameter) << s;
}

TEST(Fixtures, EveryShippedCodeVerifiesItsClass) {
  const std::filesystem::path dir = DOMCODE_FIXTURE_DIR;
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".code") continue;
    const std::string stem = entry.path().stem().string();
    const CodeClass cls = parse_code_class(stem.substr(stem.rfind('_') + 1));
    const CodeFile f = read_code_file(entry.path().string());
    const Graph g = parse_graph_spec(f.graph_name);
    const Verdict v = verify(g, to_code(g, f), cls);
    EXPECT_TRUE(v.ok) << entry.path() << ": " << v.detail;
    ++checked;
  }
  EXPECT_GE(checked, 10);
}
