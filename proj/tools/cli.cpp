#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "yh/checks.hpp"
#include "yh/error.hpp"
#include "yh/trace.hpp"

namespace yh::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  int n = 0;
  std::optional<int> d;
  std::optional<std::int64_t> p;
  std::optional<int> r;
  std::optional<int> depth;
  std::string format = "pretty";
  std::uint64_t seed = 1;
  bool square = false;
  int samples = 100;
  std::optional<std::string> word;
  std::optional<std::string> file;
};

// A single algebra Y_{d,n} (d given directly or as p^r), or a tower of depth R.
struct Target {
  bool tower = false;
  int d = 1;
  std::optional<std::int64_t> p;
  std::optional<int> r;
  int depth = 0;
};

Target resolve(const RunConfig& cfg) {
  if (cfg.n < 1) throw ParameterError("--n must be >= 1");
  if (cfg.d && cfg.p) throw ParameterError("give either --d or --p, not both");
  Target t;
  if (cfg.d) {
    if (cfg.r || cfg.depth) throw ParameterError("--r/--R need --p, not --d");
    if (*cfg.d < 1) throw ParameterError("--d must be >= 1");
    t.d = *cfg.d;
    // Report d = p^r when it is a prime power.
    for (std::int64_t q = 2; q <= t.d; ++q) {
      if (t.d % q != 0) continue;
      try {
        t.r = level_of(t.d, q);
        t.p = q;
      } catch (const MismatchError&) {
      }
      break;
    }
    return t;
  }
  if (!cfg.p) throw ParameterError("one of --d or --p is required");
  if (!is_prime(*cfg.p)) throw ParameterError("--p must be prime");
  if (cfg.r && cfg.depth) throw ParameterError("give either --r (one level) or --R (tower depth), not both");
  if (!cfg.r && !cfg.depth) throw ParameterError("--p needs --r or --R");
  t.p = *cfg.p;
  if (cfg.r) {
    if (*cfg.r < 1) throw ParameterError("--r must be >= 1");
    t.r = *cfg.r;
    const auto d = checked_pow(*cfg.p, *cfg.r);
    if (d > (1 << 20)) throw ParameterError("p^r too large");
    t.d = static_cast<int>(d);
    return t;
  }
  if (*cfg.depth < 1) throw ParameterError("--R must be >= 1");
  if (checked_pow(*cfg.p, *cfg.depth) > (1 << 20)) throw ParameterError("p^R too large");
  t.tower = true;
  t.depth = *cfg.depth;
  return t;
}

json optional_json(const auto& v) { return v ? json(*v) : json(nullptr); }

struct Input {
  std::string text;
  std::size_t line = 0;  // 0 for the positional argument
};

std::vector<Input> read_words(const RunConfig& cfg, std::istream& in) {
  if (cfg.word) return {{*cfg.word, 0}};
  std::ifstream file;
  std::istream* src = &in;
  if (cfg.file) {
    file.open(*cfg.file);
    if (!file) throw ParameterError("cannot open --file " + *cfg.file);
    src = &file;
  }
  std::vector<Input> words;
  std::string line;
  std::size_t number = 0;
  while (std::getline(*src, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    words.push_back({line, number});
  }
  return words;
}

int evaluate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const Target t = resolve(cfg);
  const bool json_out = cfg.format == "json";
  const bool want_trace = cfg.command == "trace";
  const char* field = want_trace ? "trace" : "element";
  for (const auto& input : read_words(cfg, in)) {
    FramedBraidWord word(cfg.n);
    try {
      word = FramedBraidWord::parse(cfg.n, input.text);
    } catch (const ParseError& e) {
      if (input.line) throw ParseError("line " + std::to_string(input.line) + ": " + e.message(), e.column());
      throw;
    }
    json levels = json::array();
    std::vector<std::string> lines;
    if (t.tower) {
      const TowerElement tower = tower_from_word(word, *t.p, t.depth);
      std::vector<std::string> rendered;
      if (want_trace) {
        const PadicTraceValue tau = padic_trace(tower);
        for (const auto& level : tau.levels()) rendered.push_back(level.str());
      } else {
        for (const auto& level : tower.levels()) rendered.push_back(level.str());
      }
      for (int r = 1; r <= t.depth; ++r) {
        const auto d = checked_pow(*t.p, r);
        levels.push_back({{"r", r}, {"d", d}, {field, rendered[r - 1]}});
        lines.push_back("r=" + std::to_string(r) + " d=" + std::to_string(d) + ": " + rendered[r - 1]);
      }
    } else {
      const YElement x = y_eval_word(word, YParams::make(t.d, cfg.n));
      const std::string rendered = want_trace ? markov_trace(x).str() : x.str();
      levels.push_back({{"r", optional_json(t.r)}, {"d", t.d}, {field, rendered}});
      lines.push_back(rendered);
    }
    if (json_out) {
      json doc = {{"schema", 1}, {"command", cfg.command}, {"p", optional_json(t.p)},
                  {"n", cfg.n},  {"word", input.text},     {"levels", levels}};
      out << doc.dump() << "\n";
    } else {
      for (const auto& l : lines) out << l << "\n";
    }
  }
  return kOk;
}

int check(const RunConfig& cfg, std::ostream& out) {
  const Target t = resolve(cfg);
  std::vector<RelationCheck> checks;
  auto append = [&checks](const std::string& prefix, std::vector<RelationCheck> more) {
    for (auto& c : more) checks.push_back({prefix + c.name, c.passed});
  };
  if (t.tower) {
    for (int r = 1; r <= t.depth; ++r) {
      const YParams params = YParams::make(static_cast<int>(checked_pow(*t.p, r)), cfg.n);
      const std::string prefix = "[d=" + std::to_string(params.d) + "] ";
      append(prefix, relation_suite(params));
      append(prefix, trace_property_suite(params, cfg.seed + r, cfg.samples));
    }
    for (int i = 1; i < cfg.n; ++i) {
      const auto g = tower_g(*t.p, t.depth, cfg.n, i);
      const auto e = tower_e(*t.p, t.depth, cfg.n, i);
      const auto one = tower_one(*t.p, t.depth, cfg.n);
      const auto um1 = tower_scalar(*t.p, t.depth, cfg.n, LaurentU::u() - LaurentU(1));
      const bool ok = tower_mul(g, g) == tower_add(one, tower_mul(um1, tower_mul(e, tower_sub(one, g))));
      checks.push_back({"[tower] g" + std::to_string(i) + "^2 = 1 + (u-1) e (1 - g)", ok});
      const PadicTraceValue tau = padic_trace(tower_mul(e, g));
      bool is_z = true;
      for (int r = 1; r <= t.depth; ++r) {
        if (!(tau.level(r) == TracePoly::z(static_cast<int>(checked_pow(*t.p, r))))) is_z = false;
      }
      checks.push_back({"[tower] tau(e g" + std::to_string(i) + ") = z", is_z});
    }
    if (cfg.square) append("", commuting_square_suite(*t.p, t.depth, cfg.n, cfg.seed, cfg.samples));
  } else {
    if (cfg.square) throw ParameterError("--square needs --p and --R");
    const YParams params = YParams::make(t.d, cfg.n);
    append("", relation_suite(params));
    append("", trace_property_suite(params, cfg.seed, cfg.samples));
  }

  const bool ok = all_passed(checks);
  if (cfg.format == "json") {
    json items = json::array();
    for (const auto& c : checks) items.push_back({{"name", c.name}, {"passed", c.passed}});
    out << json{{"schema", 1}, {"command", "check"}, {"checks", items}, {"passed", ok}}.dump() << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& c : checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
      passed += c.passed;
    }
    out << passed << "/" << checks.size() << " checks passed\n";
  }
  return ok ? kOk : kCheckFailed;
}

void add_common_options(CLI::App& sub, RunConfig& cfg, bool takes_word) {
  sub.add_option("--n", cfg.n, "Number of strands")->required();
  sub.add_option("--d", cfg.d, "Framing modulus: work in Y_{d,n}(u)");
  sub.add_option("--p", cfg.p, "Prime for d = p^r or for a p-adic tower");
  sub.add_option("--r", cfg.r, "Single level: work in Y_{p^r,n}(u)");
  sub.add_option("--R", cfg.depth, "Tower depth: levels r = 1..R");
  sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"pretty", "json"}));
  sub.add_option("--seed", cfg.seed, "Seed for randomized property checks");
  if (takes_word) {
    sub.add_option("word", cfg.word, "Framed braid word, e.g. \"f1^3 s1 s2^-1\"");
    sub.add_option("--file", cfg.file, "Read one word per line from a file");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Yokonuma-Hecke algebra and Markov trace calculator", "yhcalc"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* trace = app.add_subcommand("trace", "Markov trace of a framed braid word");
  auto* eval = app.add_subcommand("eval", "Normal form of a framed braid word in Y_{d,n}(u)");
  auto* chk = app.add_subcommand("check", "Run the relation and trace property suites");
  add_common_options(*trace, cfg, true);
  add_common_options(*eval, cfg, true);
  add_common_options(*chk, cfg, false);
  chk->add_flag("--square", cfg.square, "Also check delta(tau_r(x)) = tau_s(phi(x)) across tower levels");
  chk->add_option("--samples", cfg.samples, "Random samples per property")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  }

  try {
    if (trace->parsed()) {
      cfg.command = "trace";
      return evaluate(cfg, in, out);
    }
    if (eval->parsed()) {
      cfg.command = "eval";
      return evaluate(cfg, in, out);
    }
    cfg.command = "check";
    return check(cfg, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParameterError;
  }
}

}  // namespace yh::cli
