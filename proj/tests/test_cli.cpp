#include <sstream>

#include "dl/cli.hpp"
#include "dl/eval.hpp"
#include "dl/parse.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dl;
using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command_line(args, out, err);
  return {code, out.str(), err.str()};
}

// Rebuilds the printed form from result_terms.
std::string text_from_terms(const json& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    if (t.empty()) {
      out += "1";
      continue;
    }
    std::string mono;
    for (const auto& f : t) {
      const std::string name = f[0];
      const int e = f[1];
      if (!mono.empty()) mono += ' ';
      const bool compound = name.find(' ') != std::string::npos;
      if (e > 1 && compound) {
        mono += "(" + name + ")^" + std::to_string(e);
      } else {
        mono += name + (e > 1 ? "^" + std::to_string(e) : "");
      }
    }
    out += mono;
  }
  return out;
}

}  // namespace

TEST_CASE("parser shapes") {
  Expr e = parse("Q^4 Q^1 x");
  REQUIRE(e.kind == Expr::Kind::Apply);
  CHECK(e.word == upper_word({4, 1}));
  CHECK(e.args[0].kind == Expr::Kind::Gen);

  e = parse("Q^8 b_1 + b_1^2 * Q^4 b_1");
  REQUIRE(e.kind == Expr::Kind::Sum);
  CHECK(e.args[0].kind == Expr::Kind::Apply);
  REQUIRE(e.args[1].kind == Expr::Kind::Product);
  CHECK(e.args[1].args[0].kind == Expr::Kind::Power);
  CHECK(e.args[1].args[1].kind == Expr::Kind::Apply);

  e = parse("[x, Q_1 y]");
  REQUIRE(e.kind == Expr::Kind::Bracket);
  CHECK(e.args[1].word == OpWord{lower(1)});

  e = parse("Q_1^2 Q_2 x");
  CHECK(e.word == lower_word({1, 1, 2}));
  // Operators bind to the following factor only.
  e = parse("Q^2 x y");
  REQUIRE(e.kind == Expr::Kind::Product);
  CHECK(e.args[0].kind == Expr::Kind::Apply);
  e = parse("P_2 Q^4 Q^1");
  CHECK(e.kind == Expr::Kind::Word);
  CHECK(e.word == OpWord{steenrod(2), upper(4), upper(1)});
  CHECK(parse("\xCE\xBE\xCC\x84_2").name == "xibar_2");
  CHECK(parse("\xCE\xBE_1").name == "xi_1");
  CHECK(parse("Sq_1 -3").kind == Expr::Kind::CupOne);
  CHECK(is_operator_expr(parse("Q^4 Q^1 + Q^3 Q^2")));
  CHECK_FALSE(is_operator_expr(parse("Q^4 x")));
}

TEST_CASE("syntax errors carry positions") {
  for (const char* bad : {"Q^4 (x", "x +", "[x, y", "x ^ y", "Sq_2 x", "x $ y", "", "Q_1^0 x"}) {
    try {
      parse(bad);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SyntaxError);
      CHECK(std::string(e.what()).find("at position") != std::string::npos);
    }
  }
  try {
    parse("x + )");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("command examples") {
  auto r = cli({"normalize", "Q^4 Q^1"});
  CHECK(r.code == 0);
  CHECK(r.out == "Q^3 Q^2\n");

  r = cli({"act", "--model", "MU", "Q^6 b_2", "--cap", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == "b_5 + b_1 b_4 + b_2 b_3 + b_1 b_2^2\n");

  r = cli({"act", "--model", "MU", "--cap", "12", "Q^8 b_1 + b_1^2 * Q^4 b_1"});
  CHECK(r.out == "b_5 + b_1 b_4 + b_2 b_3 + b_1 b_2^2\n");

  r = cli({"closure", "--sub", "k(2)", "--ops", "Q_1", "--maxdeg", "31"});
  CHECK(r.code == 1);
  CHECK(r.out.find("Q_1 xibar_2 = xibar_3") != std::string::npos);

  r = cli({"closure", "--sub", "kZ(1)", "--ops", "Q_1"});
  CHECK(r.code == 0);
  r = cli({"closure", "--sub", "BP", "--maxdeg", "24"});
  CHECK(r.code == 0);

  CHECK(cli({"verify", "cupone"}).code == 0);
  r = cli({"verify", "obstructions"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k(n)") != std::string::npos);
  CHECK(r.out.find("Q_2 iterates") != std::string::npos);
  CHECK(r.out.find("b_1^2 Q^4 b_1") != std::string::npos);
  CHECK(cli({"verify", "adem", "--maxidx", "8"}).code == 0);
}

TEST_CASE("evaluation in each context") {
  CHECK(cli({"act", "--model", "A", "Q^2 xi_1"}).out == "xi_2 + xi_1^3\n");
  CHECK(cli({"act", "--model", "A", "Q_1 xibar_2"}).out == cli({"act", "--model", "A", "xibar_3"}).out);
  CHECK(cli({"act", "--model", "MO", "Q^2 a_1"}).out == "a_3 + a_1 a_2 + a_1^3\n");
  CHECK(cli({"normalize", "--gens", "x:1", "P_1 Q^2 x"}).out == "x^2\n");
  CHECK(cli({"act", "--gens", "x:1", "Q^4 Q^2 x"}).out == "Q^4 Q^2 x\n");
  // Excess equal to the degree gives a square.
  CHECK(cli({"act", "--gens", "x:1", "Q^3 Q^2 x"}).out == "(Q^2 x)^2\n");
  CHECK(cli({"act", "--gens", "x:1", "Q^4 Q^1 x"}).out == "(Q^2 x)^2\n");
  CHECK(cli({"act", "--gens", "x:1", "Q_0 x"}).out == "x^2\n");
  CHECK(cli({"act", "--gens", "x:1", "[x, x]"}).out == "0\n");
  CHECK(cli({"act", "--gens", "x:1,y:1", "--flavor", "En", "--n", "2", "[x,y] * x"}).out == "x [x,y]\n");
  CHECK(cli({"act", "--gens", "x:1,y:1", "--flavor", "En", "--n", "3", "Q_2 Q_1 y"}).out == "0\n");
  CHECK(cli({"act", "--gens", "x:1", "--flavor", "En", "--n", "2", "Q^2 x"}).out == "Q_1 x\n");
  CHECK(cli({"act", "--gens", "x:1", "--flavor", "En", "--n", "2", "Q^3 x"}).code == 2);
  CHECK(cli({"normalize", "Sq_1 2"}).out == "eta\n");
  CHECK(cli({"normalize", "Sq_1 5"}).out == "0\n");
  CHECK(cli({"normalize", "Q_2 Q_1"}).out == "0\n");
  CHECK(cli({"normalize", "1"}).out == "1\n");
  CHECK(cli({"suspend", "Q_3 Q_1 + Q_0", "--times", "1"}).out == "Q_2 Q_0\n");
  CHECK(cli({"suspend", "Q_3 Q_1", "--times", "2"}).out == "0\n");
  CHECK(cli({"poincare", "--model", "A", "--maxdeg", "8"}).out == "1 1 1 2 2 2 3 4 4\n");
  CHECK(cli({"poincare", "--gens", "x:1", "--flavor", "En", "--n", "2", "--maxdeg", "8"}).out == "1 1 1 2 2 2 3 4 4\n");
  CHECK(cli({"poincare", "--gens", "x:1", "--maxdeg", "4"}).out == "1 1 1 2 3\n");
  const auto table = cli({"pow-table", "--m", "3", "--n", "2"});
  CHECK(table.out.find("for E_2: 2") != std::string::npos);
  CHECK(table.out.find("Q_1  degree 7  suspensions: Q_0, 0") != std::string::npos);
  CHECK(cli({"obstruction"}).code == 0);
  const auto basis = cli({"free-basis", "--gens", "x:0", "--maxdeg", "3"});
  CHECK(basis.code == 0);
  CHECK(basis.out.find("basis: not listed") != std::string::npos);
}

TEST_CASE("usage errors and exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"act", "Q^2 x"}).code == 2);
  auto r = cli({"act", "--model", "MU", "Q^2 c_1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownGenerator") != std::string::npos);
  r = cli({"act", "--gens", "x:1", "Q^2 (x"});
  CHECK(r.code == 2);
  CHECK(r.err.find("SyntaxError") != std::string::npos);
  CHECK(cli({"act", "--gens", "x", "x"}).code == 2);
  CHECK(cli({"act", "--gens", "x:1,x:2", "x"}).code == 2);
  CHECK(cli({"act", "--gens", "x:1", "--flavor", "En", "x"}).code == 2);
  CHECK(cli({"act", "--gens", "x:1", "--flavor", "Eoo", "x"}).code == 2);
  CHECK(cli({"act", "--model", "A", "--cap", "10", "Q^20 xi_1"}).code == 2);
  CHECK(cli({"verify", "nonsense"}).code == 2);
  CHECK(cli({"closure"}).code == 2);
  CHECK(cli({"normalize", "Q_1 Q^2"}).code == 2);
  CHECK(cli({"act", "--model", "A", "P_1 xi_1"}).code == 2);
  CHECK(cli({"normalize", "--help"}).code == 0);
}

TEST_CASE("printed forms parse back to themselves") {
  const std::vector<std::vector<std::string>> cases{
      {"act", "--model", "MU", "--cap", "12", "Q^8 b_1"},
      {"act", "--model", "A", "Q^5 xi_1 + Q^3 xi_2"},
      {"act", "--gens", "x:1", "--cap", "20", "Q^4 (x^3) + (Q^2 x)^2 Q^5 x"},
      {"act", "--gens", "x:1,y:1,z:2", "--flavor", "En", "--n", "3", "Q_2 [x,y] + [[x,y],z] * Q_1 z + Q_0 (x + y)"},
      {"act", "--gens", "x:1", "--flavor", "En", "--n", "3", "Q_1 Q_2 x + Q_2 Q_1 x"},
      {"normalize", "Q^9 Q^3 Q^1 + Q^10 Q^4"},
      {"normalize", "Q_3 Q_1 Q_0"},
      {"normalize", "P_3 Q^6 Q^2"},
  };
  for (const auto& args : cases) {
    const auto first = cli(args);
    REQUIRE(first.code == 0);
    std::vector<std::string> again = args;
    again.back() = first.out.substr(0, first.out.size() - 1);
    INFO(again.back());
    CHECK(cli(again).out == first.out);
  }
}

TEST_CASE("JSON mirrors the text report") {
  const std::vector<std::vector<std::string>> cases{
      {"act", "--model", "MU", "--cap", "12", "Q^6 b_2"},
      {"act", "--gens", "x:1", "--cap", "20", "(Q^2 x)^2 + x Q^3 x + 1"},
      {"act", "--gens", "x:1,y:1", "--flavor", "En", "--n", "2", "[x,y] + Q_1 x"},
      {"normalize", "--gens", "x:1", "Sq_1 3"},
      {"closure", "--sub", "k(3)", "--ops", "Q_1"},
  };
  for (const auto& args : cases) {
    const auto text = cli(args);
    auto with_json = args;
    with_json.push_back("--json");
    const auto doc = json::parse(cli(with_json).out);
    INFO(args.back());
    CHECK(doc["command"] == args.front());
    CHECK(doc.contains("inputs"));
    CHECK(doc["suite_results"].is_null());
    const std::string printed = doc["text"];
    CHECK(printed + "\n" == text.out);
    if (args.front() != "closure") {
      CHECK(text_from_terms(doc["result_terms"]) + "\n" == text.out);
    } else {
      CHECK(text_from_terms(doc["result_terms"]) == "xibar_4");
      CHECK(doc["status"] == "violation");
    }
  }
  const auto normalized = json::parse(cli({"normalize", "Q^4 Q^1", "--json"}).out);
  CHECK(normalized["result_terms"] == json::parse(R"([[["Q^3",1],["Q^2",1]]])"));
  const auto suite = json::parse(cli({"verify", "cupone", "--json"}).out);
  CHECK(suite["status"] == "ok");
  CHECK(suite["suite_results"].size() == 2);
  CHECK(suite["suite_results"][0]["ok"] == true);
  const auto err = json::parse(cli({"act", "--model", "MU", "Q^2 c_1", "--json"}).out);
  CHECK(err["status"] == "error");
}

TEST_CASE("runs are deterministic") {
  for (int k = 0; k < 3; ++k) {
    CHECK(cli({"act", "--gens", "x:1,y:1,z:2", "--flavor", "En", "--n", "3", "[[x,y],z] + [[y,z],x]"}).out ==
          cli({"act", "--gens", "x:1,y:1,z:2", "--flavor", "En", "--n", "3", "[[x,y],z] + [[y,z],x]"}).out);
    CHECK(cli({"verify", "bracket", "--json"}).out == cli({"verify", "bracket", "--json"}).out);
  }
}
