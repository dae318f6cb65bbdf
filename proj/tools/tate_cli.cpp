// Command-line surface for the exact Tate-module series algebra.
//
// Literal grammars, window conventions, and output formats are documented in
// the README; every value printed here re-parses to an equal value.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tate/acceptance.hpp"
#include "tate/fock.hpp"
#include "tate/givental.hpp"
#include "tate/half_spin.hpp"
#include "tate/literal.hpp"
#include "tate/nil_group.hpp"

using nlohmann::json;
using namespace tate;

namespace {

struct Globals {
  bool jsonOut = false;
  std::string window;
  int epsOrder = 3;
  long levelCap = 6;
  int degreeBound = 12;

  Window win() const { return parseWindowSpec(window); }
  Ring nilRing() const { return ringNil(epsOrder); }
};

void emit(const Globals& g, const json& payload, const std::string& text) {
  if (g.jsonOut) {
    json out = payload;
    out["ok"] = true;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

Fgl parseFglKind(const std::string& kind, const Globals& g) {
  if (kind == "additive") return Fgl::additive(ringQ(), g.degreeBound);
  if (kind.rfind("mult:", 0) == 0)
    return Fgl::multiplicative(ringQ(), Scalar(ringQ(), parseRat(kind.substr(5))),
                               g.degreeBound);
  if (kind.rfind("custom:", 0) == 0) {
    const std::string path = kind.substr(7);
    std::ifstream in(path);
    require(in.good(), Err::ParseError, "cannot open grid file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    FglGridSpec spec = parseFglGrid(buf.str());
    Poly2 grid;
    for (const auto& [i, j, c] : spec.terms) {
      auto it = grid.try_emplace({i, j}, ringQ()).first;
      it->second += Scalar(ringQ(), c);
    }
    return Fgl::custom(ringQ(), std::move(grid), spec.degree != 0 ? spec.degree : g.degreeBound);
  }
  fail(Err::ParseError, "unknown law '" + kind + "' (use additive | mult:BETA | custom:FILE)");
}

std::string gramText(const std::vector<std::vector<Scalar>>& m) {
  std::string out;
  for (const auto& row : m) {
    std::string line;
    for (const auto& s : row) {
      if (!line.empty()) line += ", ";
      line += printScalar(s);
    }
    out += line + "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

json gramJson(const std::vector<std::vector<Scalar>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& s : row) r.push_back(printScalar(s));
    rows.push_back(std::move(r));
  }
  return rows;
}

int runAll(int argc, char** argv) {
  Globals g;
  const char* envWin = std::getenv("TH_DEFAULT_WINDOW");
  g.window = envWin && envWin[0] != '\0' ? envWin : "-8,8";

  CLI::App app{"exact Laurent/Puiseux series algebra for circle-equivariant Tate modules"};
  app.require_subcommand(1);
  app.add_flag("--json", g.jsonOut, "emit JSON instead of text");
  app.add_option("--window", g.window, "default exponent window LO,HI (half-integers allowed)");
  app.add_option("--eps-order", g.epsOrder, "nilpotent truncation order")->check(CLI::Range(1, 8));
  app.add_option("--level-cap", g.levelCap, "Fock level cap");
  app.add_option("--degree-bound", g.degreeBound, "formal group law degree bound")
      ->check(CLI::Range(2, 24));
  app.fallthrough();

  // residue
  std::string residueArg;
  auto* cmdResidue = app.add_subcommand("residue", "coefficient of x^(-1) of a series");
  cmdResidue->add_option("series", residueArg, "series literal")->required();
  cmdResidue->callback([&] {
    Ring ring{.pi = true, .t = false, .eps = g.epsOrder};
    Scalar r = residue(parseSeries(residueArg, ring));
    emit(g, {{"command", "residue"}, {"result", printScalar(r)}}, printScalar(r));
  });

  // boundary
  std::string boundaryArg, boundaryFgl = "additive";
  int kmax = 0;
  auto* cmdBoundary =
      app.add_subcommand("boundary", "residues b_k = res(e^k f dlog) of the boundary map");
  cmdBoundary->add_option("series", boundaryArg, "series literal over Q")->required();
  cmdBoundary->add_option("--fgl", boundaryFgl, "additive | mult:BETA | custom:FILE");
  cmdBoundary->add_option("--kmax", kmax, "largest k");
  cmdBoundary->callback([&] {
    TateModule t = makeTate(parseFglKind(boundaryFgl, g), g.win());
    auto b = boundaryCoefficients(t, parseSeries(boundaryArg, ringQ()), kmax);
    std::string text;
    json arr = json::array();
    for (const auto& s : b) {
      text += printScalar(s) + "\n";
      arr.push_back(printScalar(s));
    }
    if (!text.empty()) text.pop_back();
    emit(g, {{"command", "boundary"}, {"result", arr}}, text);
  });

  // gram
  std::string gramForm = "symplectic", gramFgl = "additive", jrange = "-4,3";
  auto* cmdGram = app.add_subcommand("gram", "Gram matrix of the residue forms on e^j");
  cmdGram->add_option("--form", gramForm, "pairing | symplectic");
  cmdGram->add_option("--fgl", gramFgl, "additive | mult:BETA | custom:FILE");
  cmdGram->add_option("--jrange", jrange, "exponent range LO,HI");
  cmdGram->callback([&] {
    require(gramForm == "pairing" || gramForm == "symplectic", Err::ParseError,
            "unknown form '" + gramForm + "'");
    TateModule t = makeTate(parseFglKind(gramFgl, g), g.win());
    Window jr = parseWindowSpec(jrange);
    require(jr.lo % 2 == 0 && jr.hi % 2 == 0, Err::ParseError, "jrange takes integers");
    auto m = gramMatrix(t, gramForm == "pairing" ? FormKind::Pairing : FormKind::Symplectic,
                        jr.lo / 2, jr.hi / 2);
    emit(g, {{"command", "gram"}, {"result", gramJson(m)}}, gramText(m));
  });

  // nilgroup
  auto* cmdNil = app.add_subcommand("nilgroup", "the composition group of nil-Laurent series");
  cmdNil->require_subcommand(1);
  std::string nilA, nilB;
  auto* nilComposeCmd = cmdNil->add_subcommand("compose", "g1 o g2");
  nilComposeCmd->add_option("g1", nilA)->required();
  nilComposeCmd->add_option("g2", nilB)->required();
  nilComposeCmd->callback([&] {
    Ring r = g.nilRing();
    Series out =
        nilCompose(nilValidate(parseSeries(nilA, r)), nilValidate(parseSeries(nilB, r))).series;
    emit(g, {{"command", "nilgroup compose"}, {"result", printSeries(out)}}, printSeries(out));
  });
  auto* nilInvertCmd = cmdNil->add_subcommand("invert", "compositional inverse");
  nilInvertCmd->add_option("g", nilA)->required();
  nilInvertCmd->callback([&] {
    Series out = nilInverse(nilValidate(parseSeries(nilA, g.nilRing()))).series;
    emit(g, {{"command", "nilgroup invert"}, {"result", printSeries(out)}}, printSeries(out));
  });
  auto* nilActCmd = cmdNil->add_subcommand("act", "substitution action f o g");
  nilActCmd->add_option("g", nilA)->required();
  nilActCmd->add_option("f", nilB)->required();
  nilActCmd->callback([&] {
    Ring r = g.nilRing();
    Series out = nilAct(nilValidate(parseSeries(nilA, r)), parseSeries(nilB, r));
    emit(g, {{"command", "nilgroup act"}, {"result", printSeries(out)}}, printSeries(out));
  });
  auto* nilSqrtCmd = cmdNil->add_subcommand("sqrt", "odd square root in y = sqrt(x)");
  nilSqrtCmd->add_option("g", nilA)->required();
  nilSqrtCmd->callback([&] {
    Series out = toOddHalf(nilValidate(parseSeries(nilA, g.nilRing()))).series;
    emit(g, {{"command", "nilgroup sqrt"}, {"result", printSeries(out)}}, printSeries(out));
  });

  // embed
  std::string embedArg;
  bool rescaled = false;
  auto* cmdEmbed =
      app.add_subcommand("embed", "divided-power embedding e^k -> gamma_{-k-1/2}(x)");
  cmdEmbed->add_option("series", embedArg, "series literal over Q")->required();
  cmdEmbed->add_flag("--rescaled", rescaled, "multiply each generator by pi^(1/2)");
  cmdEmbed->callback([&] {
    Series f = parseSeries(embedArg, ringQ());
    Series out = rescaled ? embedRescaled(f) : embed(f);
    emit(g, {{"command", "embed"}, {"result", printSeries(out)}}, printSeries(out));
  });

  // pair
  std::string pairU, pairV;
  auto* cmdPair = app.add_subcommand("pair", "the form {u,v} = res_x u dv on sqrt(x)-series");
  cmdPair->add_option("u", pairU)->required();
  cmdPair->add_option("v", pairV)->required();
  cmdPair->callback([&] {
    Ring ring = ringQPi();
    Scalar out = xsymplectic(parseSeries(pairU, ring), parseSeries(pairV, ring));
    emit(g, {{"command", "pair"}, {"result", printScalar(out)}}, printScalar(out));
  });

  // fock
  auto* cmdFock = app.add_subcommand("fock", "Fock space operators and symmetric functions");
  cmdFock->require_subcommand(1);
  int mmax = 3, kIdx = 0;
  std::string eigsArg, partitionArg, varsArg;
  auto* fockTable = cmdFock->add_subcommand(
      "bracket-table", "Virasoro bracket defects on the vacuum and the central constant");
  fockTable->add_option("--mmax", mmax, "largest m for the pairs (m, -m)");
  fockTable->callback([&] {
    const int cap2 = int(2 * g.levelCap + 4 * mmax + 8);
    std::string text;
    json rows = json::array();
    for (int m = 1; m <= mmax; ++m) {
      FockVector d = bracketDefect(m, -m, FockVector::vacuum(), fockZeroPoint(), cap2);
      Rat q(0);
      if (!d.isZero()) {
        require(d.terms().size() == 1 && d.terms().begin()->first.empty(), Err::DomainError,
                "defect on the vacuum is not scalar");
        q = d.terms().begin()->second;
      }
      const long poly = long(m) * m * m - m;
      std::string c = poly == 0 ? "-" : (q * Rat(12) / Rat(poly)).str();
      text += "m=" + std::to_string(m) + " n=" + std::to_string(-m) + " defect=" + q.str() +
              " c=" + c + "\n";
      rows.push_back({{"m", m}, {"n", -m}, {"defect", q.str()}, {"c", c}});
    }
    if (!text.empty()) text.pop_back();
    emit(g, {{"command", "fock bracket-table"}, {"result", rows}}, text);
  });
  auto* fockTrace = cmdFock->add_subcommand("kwtrace", "-(2k-1)!! Trace Lambda^{-2k-1}");
  fockTrace->add_option("--k", kIdx)->required();
  fockTrace->add_option("--eigenvalues", eigsArg, "comma list of positive rationals")->required();
  fockTrace->callback([&] {
    Rat out = kwTrace(kIdx, parseRatList(eigsArg));
    emit(g, {{"command", "fock kwtrace"}, {"result", out.str()}}, out.str());
  });
  auto* fockSchur = cmdFock->add_subcommand("schurq", "Schur Q function of a strict partition");
  fockSchur->add_option("--partition", partitionArg, "comma list, e.g. 3,2,1")->required();
  fockSchur->add_option("--variables", varsArg, "comma list of rationals")->required();
  fockSchur->callback([&] {
    Rat out = schurQ(parseIntList(partitionArg), parseRatList(varsArg));
    emit(g, {{"command", "fock schurq"}, {"result", out.str()}}, out.str());
  });

  // givental
  std::string hArg, eArg, rangeArg = "-3..2", applyArg;
  auto* cmdGiv = app.add_subcommand("givental", "twisted involution report for Hodge data");
  cmdGiv->add_option("--H", hArg, "diagonal grading, comma list")->required();
  cmdGiv->add_option("--E", eArg, "first-Chern matrix, rows split by ';'")->required();
  cmdGiv->add_option("--range", rangeArg, "exponent range LO..HI");
  cmdGiv->add_option("--apply", applyArg, "optional ';'-separated series to twist");
  cmdGiv->callback([&] {
    HodgeSpace space = makeSpace(parseIntList(hArg), parseRatMatrix(eArg));
    auto [jlo, jhi] = parseRange(rangeArg);
    PolarizationReport r = polarizationReport(space, jlo, jhi);
    json payload = {{"command", "givental"},
                    {"gram", gramJson(r.gram)},
                    {"antisymmetric", r.antisymmetric},
                    {"fullRank", r.fullRank},
                    {"nonnegIsotropic", r.nonnegIsotropic},
                    {"negIsotropic", r.negIsotropic}};
    std::string text = gramText(r.gram);
    text += "\nantisymmetric=" + std::string(r.antisymmetric ? "yes" : "no");
    text += " fullRank=" + std::string(r.fullRank ? "yes" : "no");
    text += " nonnegIsotropic=" + std::string(r.nonnegIsotropic ? "yes" : "no");
    text += " negIsotropic=" + std::string(r.negIsotropic ? "yes" : "no");
    if (!applyArg.empty()) {
      VecSeries f;
      std::size_t start = 0;
      while (start <= applyArg.size()) {
        std::size_t end = applyArg.find(';', start);
        f.push_back(parseSeries(
            applyArg.substr(start, end == std::string::npos ? end : end - start), ringT()));
        if (end == std::string::npos) break;
        start = end + 1;
      }
      VecSeries tw = twistedInvolution(space, f);
      json applied = json::array();
      text += "\n";
      for (const Series& s : tw) {
        applied.push_back(printSeries(s));
        text += printSeries(s) + "\n";
      }
      text.pop_back();
      payload["applied"] = applied;
    }
    emit(g, payload, text);
  });

  // selftest
  auto* cmdSelf = app.add_subcommand("selftest", "run the full acceptance suite");
  int selfExit = 0;
  cmdSelf->callback([&] {
    auto results = runAcceptance();
    if (g.jsonOut) {
      json arr = json::array();
      bool all = true;
      for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all = all && r.pass;
      }
      std::cout << json{{"ok", all}, {"criteria", arr}}.dump() << "\n";
      selfExit = all ? 0 : 1;
    } else {
      selfExit = printAcceptanceReport(std::cout, results);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return selfExit;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return runAll(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
