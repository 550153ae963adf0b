// pp: command-line surface over the exact Wronskian-mutation library.
// Subcommands: evolve, compare, tetra, bethe, positivity, charts, and
// words {enumerate, transition, tetra}. Output is JSON on stdout with a
// top-level "schema": "pp/1" field; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 mathematical failure, 2 usage error.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wron/generalv.hpp"
#include "wron/json_io.hpp"
#include "wron/mutations.hpp"
#include "wron/sampling.hpp"

using namespace wron;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;

struct Cfg {
  std::string subcommand;
  int rank = 2;
  std::string word;
  std::string from;
  std::string to;
  std::vector<std::string> params;
  uint64_t seed = 0;
  double tol = 1e-9;
  int trials = 20;
  int max_iter = 200;
  std::string format = "json";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Rational> parse_params(const std::vector<std::string>& strs) {
  std::vector<Rational> out;
  for (const std::string& chunk : strs) {
    std::stringstream ss(chunk);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) {
        try {
          out.push_back(rational_from_string(item));
        } catch (const std::exception&) {
          throw UsageError("invalid rational parameter: " + item);
        }
      }
  }
  return out;
}

Word parse_word_checked(const std::string& s, int rank) {
  try {
    return parse_word(s, rank);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void emit(Json j, const Cfg& cfg) {
  j["schema"] = "pp/1";
  if (cfg.format == "table") {
    for (auto& [key, val] : j.items())
      std::cout << key << "\t" << (val.is_string() ? val.get<std::string>() : val.dump())
                << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int cmd_evolve(const Cfg& cfg) {
  Word w = parse_word_checked(cfg.word, cfg.rank);
  auto params = parse_params(cfg.params);
  if (params.size() != w.length())
    throw UsageError("params length must match word length");
  BetheTuple y = evolve(w, params);
  Json j;
  j["word"] = to_json(w);
  j["params"] = to_json(params);
  j["tuple"] = to_json(y);
  j["triangular"] = to_json(triangular_coords(y));
  Json degs = Json::array();
  for (const Poly& p : y.entries) degs.push_back(p.degree());
  j["degrees"] = degs;
  emit(j, cfg);
  return kExitOk;
}

int cmd_compare(const Cfg& cfg) {
  RationalSampler s(cfg.seed);
  std::vector<Word> words;
  if (!cfg.word.empty())
    words.push_back(parse_word_checked(cfg.word, cfg.rank));
  else
    words = reduced_words_of_longest(cfg.rank);
  int checks = 0;
  Json failures = Json::array();
  for (const Word& w : words)
    for (int t = 0; t < cfg.trials; ++t) {
      auto a = s.signed_vec(w.length());
      ++checks;
      if (!comparison_check(w, a)) {
        Json f;
        f["word"] = to_json(w);
        f["params"] = to_json(a);
        failures.push_back(f);
      }
    }
  Json j;
  j["words"] = static_cast<int>(words.size());
  j["trials_per_word"] = cfg.trials;
  j["checks"] = checks;
  j["failures"] = failures;
  j["pass"] = failures.empty();
  emit(j, cfg);
  return failures.empty() ? kExitOk : kExitMathFail;
}

int cmd_tetra(const Cfg& cfg) {
  Json j;
  if (!cfg.params.empty()) {
    auto p = parse_params(cfg.params);
    if (p.size() != 6) throw UsageError("tetra needs exactly 6 params");
    try {
      ParamPoint lhs = tetra_R2(1, tetra_R2(3, tetra_R1(3, tetra_R1(1, p))));
      ParamPoint rhs = tetra_R2(4, tetra_R2(2, tetra_R1(2, tetra_R1(4, p))));
      j["lhs"] = to_json(lhs);
      j["rhs"] = to_json(rhs);
      j["pass"] = (lhs == rhs);
    } catch (const PoleError& e) {
      j["error"] = std::string("pole: ") + e.what();
      j["pass"] = false;
    }
    emit(j, cfg);
    return j["pass"].get<bool>() ? kExitOk : kExitMathFail;
  }
  RationalSampler s(cfg.seed);
  int done = 0, redraws = 0, failures = 0;
  while (done < cfg.trials) {
    ParamPoint a = s.positive_vec(6);
    try {
      bool ok = tetrahedron_check(a) && octagon_commutativity_check(a);
      if (!ok) ++failures;
      ++done;
    } catch (const PoleError&) {
      ++redraws;
      if (redraws > 100 * cfg.trials) throw std::runtime_error("too many pole redraws");
    }
  }
  // Hexagon-level chart consistency around the octagon.
  PermutohedronS4 perm = permutohedron_S4();
  int hex_failures = 0;
  for (const auto& h : perm.hexagons) {
    ParamPoint a = s.positive_vec(6);
    if (!(chart(h.from_word, a) == chart(h.to_word, braid_move_R(a, h.braid_position))))
      ++hex_failures;
  }
  j["trials"] = cfg.trials;
  j["redraws"] = redraws;
  j["failures"] = failures;
  j["hexagons"] = static_cast<int>(perm.hexagons.size());
  j["hexagon_failures"] = hex_failures;
  j["pass"] = (failures == 0 && hex_failures == 0);
  emit(j, cfg);
  return (failures == 0 && hex_failures == 0) ? kExitOk : kExitMathFail;
}

int cmd_bethe(const Cfg& cfg) {
  Word w = parse_word_checked(cfg.word, cfg.rank);
  auto params = parse_params(cfg.params);
  if (params.size() != w.length())
    throw UsageError("params length must match word length");
  PolyTuple y;
  y.entries = evolve(w, params).entries;
  RootOptions ropt;
  ropt.max_iter = cfg.max_iter;
  BetheReport rep = bethe_verify(y, trivial_singular_data(cfg.rank), cfg.tol, ropt);
  Json j = to_json(rep);
  j["word"] = to_json(w);
  j["params"] = to_json(params);
  j["tol"] = cfg.tol;
  emit(j, cfg);
  return rep.status == "ok" ? kExitOk : kExitMathFail;
}

int cmd_positivity(const Cfg& cfg) {
  Word w = cfg.word.empty() ? standard_longest_word(cfg.rank)
                            : parse_word_checked(cfg.word, cfg.rank);
  auto params = parse_params(cfg.params);
  if (params.size() != w.length())
    throw UsageError("params length must match word length");
  BetheTuple y = evolve(w, params);
  Json j;
  j["word"] = to_json(w);
  j["params"] = to_json(params);
  j["tuple"] = to_json(y);
  j["all_coeffs_positive"] = all_positive_coeffs(y);
  j["inequalities"] = positivity_inequalities(y);
  j["positive"] = positivity_check(y, cfg.seed);
  TriangularCoords a = triangular_coords(y);
  j["triangular"] = to_json(a);
  if (cfg.rank == 3) {
    // Witness values for the strict rank-3 inequalities.
    Rational alpha1 = a.rows[0][0], alpha2 = a.rows[0][1];
    Rational beta2 = a.rows[1][0], beta3 = a.rows[1][1];
    j["witness"] = Json{{"beta3", to_json(beta3)},
                        {"alpha1*beta2-alpha2", to_json(alpha1 * beta2 - alpha2)}};
  }
  emit(j, cfg);
  return kExitOk;
}

int transition_report(const Cfg& cfg) {
  Word h = parse_word_checked(cfg.from, cfg.rank);
  Word hp = parse_word_checked(cfg.to, cfg.rank);
  auto a = parse_params(cfg.params);
  if (a.size() != h.length())
    throw UsageError("params length must match word length");
  Json j;
  j["from"] = to_json(h);
  j["to"] = to_json(hp);
  j["params"] = to_json(a);
  try {
    ParamPoint ap = transition_map(h, hp, a);
    j["image"] = to_json(ap);
    j["chart_equal"] = (chart(h, a) == chart(hp, ap));
    emit(j, cfg);
    return j["chart_equal"].get<bool>() ? kExitOk : kExitMathFail;
  } catch (const PoleError& e) {
    j["error"] = std::string("pole: ") + e.what();
    emit(j, cfg);
    return kExitMathFail;
  } catch (const NoPathError& e) {
    throw UsageError(e.what());
  }
}

int cmd_words_enumerate(const Cfg& cfg) {
  auto words = reduced_words_of_longest(cfg.rank);
  Json j;
  Json arr = Json::array();
  for (const Word& w : words) {
    Json e;
    e["letters"] = to_json(w).at("letters");
    e["display"] = display_word(w);
    arr.push_back(e);
  }
  j["rank"] = cfg.rank;
  j["count"] = static_cast<int>(words.size());
  j["words"] = arr;
  if (cfg.rank == 3) {
    PermutohedronS4 p = permutohedron_S4();
    Json classes = Json::array();
    for (const auto& cls : p.classes) {
      Json c = Json::array();
      for (const Word& w : cls) c.push_back(display_word(w));
      classes.push_back(c);
    }
    j["commutation_classes"] = classes;
    j["octagon_order"] = p.octagon_order;
  }
  emit(j, cfg);
  return kExitOk;
}

int cmd_words_tetra(const Cfg& cfg) {
  auto p = parse_params(cfg.params);
  if (p.size() != 6) throw UsageError("words tetra needs exactly 6 params");
  Json j;
  j["params"] = to_json(p);
  try {
    ParamPoint lhs = tetra_R2(1, tetra_R2(3, tetra_R1(3, tetra_R1(1, p))));
    ParamPoint rhs = tetra_R2(4, tetra_R2(2, tetra_R1(2, tetra_R1(4, p))));
    j["lhs"] = to_json(lhs);
    j["rhs"] = to_json(rhs);
    j["pass"] = (lhs == rhs);
  } catch (const PoleError& e) {
    j["error"] = std::string("pole: ") + e.what();
    j["pass"] = false;
  }
  emit(j, cfg);
  return j["pass"].get<bool>() ? kExitOk : kExitMathFail;
}

int dispatch(const Cfg& cfg) {
  if (cfg.subcommand == "evolve") return cmd_evolve(cfg);
  if (cfg.subcommand == "compare") return cmd_compare(cfg);
  if (cfg.subcommand == "tetra") return cmd_tetra(cfg);
  if (cfg.subcommand == "bethe") return cmd_bethe(cfg);
  if (cfg.subcommand == "positivity") return cmd_positivity(cfg);
  if (cfg.subcommand == "charts" || cfg.subcommand == "words transition")
    return transition_report(cfg);
  if (cfg.subcommand == "words enumerate") return cmd_words_enumerate(cfg);
  if (cfg.subcommand == "words tetra") return cmd_words_tetra(cfg);
  throw UsageError("unknown subcommand: " + cfg.subcommand);
}

Cfg config_from_json(const Json& j) {
  Cfg cfg;
  cfg.subcommand = j.at("subcommand").get<std::string>();
  if (j.contains("rank")) cfg.rank = j.at("rank").get<int>();
  if (j.contains("word")) cfg.word = j.at("word").get<std::string>();
  if (j.contains("from")) cfg.from = j.at("from").get<std::string>();
  if (j.contains("to")) cfg.to = j.at("to").get<std::string>();
  if (j.contains("params")) {
    const Json& p = j.at("params");
    if (p.is_string())
      cfg.params = {p.get<std::string>()};
    else
      for (const Json& v : p) cfg.params.push_back(v.get<std::string>());
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
  if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("max_iter")) cfg.max_iter = j.at("max_iter").get<int>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  return cfg;
}

void add_common(CLI::App* sub, Cfg& cfg) {
  sub->add_option("--rank", cfg.rank, "rank r (tuples have r entries)");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--tol", cfg.tol, "numerical tolerance");
  sub->add_option("--trials", cfg.trials, "number of random trials");
  sub->add_option("--max-iter", cfg.max_iter, "root finder iteration cap");
  sub->add_option("--format", cfg.format, "output format: json | table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Wronskian mutation calculus"};
  app.require_subcommand(0, 1);
  Cfg cfg;
  std::string config_src;
  app.add_option("--config", config_src, "read a JSON run config ('-' for stdin)");

  auto* evolve_cmd = app.add_subcommand("evolve", "mutate (1,...,1) along a word");
  evolve_cmd->add_option("--word", cfg.word, "word, display form");
  evolve_cmd->add_option("--params", cfg.params, "comma-separated rationals");
  add_common(evolve_cmd, cfg);

  auto* compare_cmd =
      app.add_subcommand("compare", "matrix action vs evolution at random points");
  compare_cmd->add_option("--word", cfg.word, "word, display form (default: all reduced)");
  add_common(compare_cmd, cfg);

  auto* tetra_cmd = app.add_subcommand("tetra", "tetrahedron equation checks");
  tetra_cmd->add_option("--params", cfg.params, "6 comma-separated rationals");
  add_common(tetra_cmd, cfg);

  auto* bethe_cmd = app.add_subcommand("bethe", "verify Bethe equations at the roots");
  bethe_cmd->add_option("--word", cfg.word, "word, display form");
  bethe_cmd->add_option("--params", cfg.params, "comma-separated rationals");
  add_common(bethe_cmd, cfg);

  auto* pos_cmd = app.add_subcommand("positivity", "total positivity audit of a tuple");
  pos_cmd->add_option("--word", cfg.word, "word (default: standard longest word)");
  pos_cmd->add_option("--params", cfg.params, "comma-separated rationals");
  add_common(pos_cmd, cfg);

  auto* charts_cmd = app.add_subcommand("charts", "parameter transition between charts");
  charts_cmd->add_option("--from", cfg.from, "source word");
  charts_cmd->add_option("--to", cfg.to, "target word");
  charts_cmd->add_option("--params", cfg.params, "comma-separated rationals");
  add_common(charts_cmd, cfg);

  auto* words_cmd = app.add_subcommand("words", "reduced word utilities");
  auto* we = words_cmd->add_subcommand("enumerate", "reduced words of the longest element");
  add_common(we, cfg);
  auto* wt = words_cmd->add_subcommand("transition", "parameter transition between words");
  wt->add_option("--from", cfg.from, "source word");
  wt->add_option("--to", cfg.to, "target word");
  wt->add_option("--params", cfg.params, "comma-separated rationals");
  add_common(wt, cfg);
  auto* wx = words_cmd->add_subcommand("tetra", "tetrahedron check at one point");
  wx->add_option("--params", cfg.params, "6 comma-separated rationals");
  add_common(wx, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!config_src.empty()) {
      Json j;
      if (config_src == "-") {
        j = Json::parse(std::cin);
      } else {
        throw UsageError("--config only supports '-' (stdin)");
      }
      return dispatch(config_from_json(j));
    }
    if (evolve_cmd->parsed()) cfg.subcommand = "evolve";
    else if (compare_cmd->parsed()) cfg.subcommand = "compare";
    else if (tetra_cmd->parsed()) cfg.subcommand = "tetra";
    else if (bethe_cmd->parsed()) cfg.subcommand = "bethe";
    else if (pos_cmd->parsed()) cfg.subcommand = "positivity";
    else if (charts_cmd->parsed()) cfg.subcommand = "charts";
    else if (words_cmd->parsed()) {
      if (we->parsed()) cfg.subcommand = "words enumerate";
      else if (wt->parsed()) cfg.subcommand = "words transition";
      else if (wx->parsed()) cfg.subcommand = "words tetra";
      else throw UsageError("words: choose enumerate, transition, or tetra");
    } else {
      throw UsageError("no subcommand given (see --help)");
    }
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFail;
  }
}
