#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "altknot/analysis.hpp"
#include "altknot/augmentation.hpp"
#include "altknot/generator.hpp"
#include "altknot/reduction.hpp"
#include "altknot/render.hpp"
#include "altknot/report.hpp"
#include "altknot/selfcheck.hpp"
#include "altknot/volume.hpp"

using namespace altknot;

namespace {

struct RunConfig {
  std::uint64_t seed = 1;
  std::string output_format = "json";
  int parallelism = 1;
};

int exit_code(ErrorClass c) {
  switch (c) {
    case ErrorClass::Input: return 2;
    case ErrorClass::Precondition: return 1;
    case ErrorClass::Invariant: return 3;
  }
  return 3;
}

void print(const RunConfig& cfg, const Json& j) {
  if (cfg.output_format == "text") {
    std::string t = to_text(j);
    std::cout << t << (t.empty() || t.back() == '\n' ? "" : "\n");
  } else
    std::cout << j.dump() << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw input_error("IOError", "cannot write " + path);
}

struct Outcome {
  Json json;
  int code = 0;
};

// Runs `body` on every diagram of a corpus file and prints one line per
// diagram in file order.
int batch(const RunConfig& cfg, const std::string& path,
          const std::function<Json(const CorpusEntry&, std::size_t)>& body) {
  std::vector<CorpusEntry> entries = split_corpus(read_file(path));
  if (entries.empty()) throw input_error("SyntaxError", path + " contains no diagram");
  std::vector<Outcome> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      Json head = Json::object();
      if (!entries[i].name.empty()) head["name"] = entries[i].name;
      try {
        Json j = body(entries[i], i);
        head.update(j);
        out[i].json = std::move(head);
      } catch (const Error& e) {
        Json err = error_json(e);
        err["line"] = entries[i].line;
        head.update(err);
        out[i] = Outcome{std::move(head), exit_code(e.error_class())};
      }
    }
  };
  const int n = std::clamp<int>(cfg.parallelism, 1, static_cast<int>(entries.size()));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = 0;
  for (const auto& o : out) {
    print(cfg, o.json);
    if (o.code) std::cerr << o.json.dump() << "\n";
    code = std::max(code, o.code);
  }
  return code;
}

std::string indexed_path(const std::string& path, std::size_t index, std::size_t count) {
  if (count == 1) return path;
  auto dot = path.find_last_of('.');
  auto slash = path.find_last_of('/');
  std::string suffix = "-" + std::to_string(index + 1);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  if (const char* s = std::getenv("ALTKNOT_SEED")) {
    try {
      cfg.seed = std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << error_json(input_error("BadSeed", "ALTKNOT_SEED is not an integer")).dump() << "\n";
      return 2;
    }
  }

  CLI::App app{"Alternating augmentations of knot and link diagrams"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.output_format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", cfg.parallelism, "Worker threads for corpus files")->check(CLI::PositiveNumber);

  std::string file, out_path, emit_pd, emit_svg;
  auto* analyze = app.add_subcommand("analyze", "Edge labels, twist regions and primality");
  analyze->add_option("FILE", file)->required();
  auto* reduce = app.add_subcommand("reduce", "Remove nugatory crossings and R2 bigons");
  reduce->add_option("FILE", file)->required();
  auto* augment_cmd = app.add_subcommand("augment", "Build the alternating augmentation");
  augment_cmd->add_option("FILE", file)->required();
  augment_cmd->add_option("--emit-pd", emit_pd, "Write the augmented PD code");
  augment_cmd->add_option("--emit-svg", emit_svg, "Write an SVG drawing of the augmented diagram");

  int twist = 0;
  std::optional<int> claim;
  auto* bounds = app.add_subcommand("bounds", "Volume bounds from a twist number");
  bounds->add_option("--twist", twist)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--claim-min-twist", claim, "Claimed lower bound on the twist number of the knot")
      ->check(CLI::PositiveNumber);

  std::optional<std::uint64_t> gen_seed;
  int letters = 0, flips = 0;
  auto* gen = app.add_subcommand("gen", "Random non-alternating diagram");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--letters", letters)->required()->check(CLI::PositiveNumber);
  gen->add_option("--flips", flips)->check(CLI::NonNegativeNumber);

  int cases = 500;
  auto* selfcheck = app.add_subcommand("selfcheck", "Run the property suite");
  selfcheck->add_option("--cases", cases)->check(CLI::NonNegativeNumber);

  auto* render = app.add_subcommand("render", "Draw a diagram as SVG");
  render->add_option("FILE", file)->required();
  render->add_option("OUT", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      return batch(cfg, file, [](const CorpusEntry& e, std::size_t) { return analysis_json(parse_pd(e.pd)); });
    }
    if (reduce->parsed()) {
      return batch(cfg, file, [](const CorpusEntry& e, std::size_t) { return reduction_json(preprocess(parse_pd(e.pd))); });
    }
    if (augment_cmd->parsed()) {
      std::size_t count = split_corpus(read_file(file)).size();
      std::vector<std::string> pds(count);
      int code = batch(cfg, file, [&](const CorpusEntry& e, std::size_t i) {
        AugmentationResult res = augment(parse_pd(e.pd));
        Json j = augmentation_json(res);
        j["volume"] = volume_json(volume_report(res));
        if (!emit_svg.empty()) write_file(indexed_path(emit_svg, i, count), render_svg(res.g));
        std::string header = e.name.empty() ? "" : "# name: " + e.name + "\n";
        pds[i] = header + serialize_pd(res.g) + "\n";
        return j;
      });
      if (!emit_pd.empty()) {
        std::string text;
        for (const auto& p : pds)
          if (!p.empty()) text += (text.empty() ? "" : "\n") + p;
        write_file(emit_pd, text);
      }
      return code;
    }
    if (bounds->parsed()) {
      print(cfg, bounds_json(twist, claim));
      return 0;
    }
    if (gen->parsed()) {
      std::uint64_t seed = gen_seed.value_or(cfg.seed);
      GeneratedDiagram g = generate_random_diagram(seed, letters, flips);
      Json j;
      j["seed"] = seed;
      j["letters"] = letters;
      j["flips"] = flips;
      j["strands"] = g.strands;
      j["word"] = g.word;
      j["flipped"] = g.flipped;
      j["attempts"] = g.attempts;
      j["crossings"] = g.diagram.num_crossings();
      j["pd"] = serialize_pd(g.diagram);
      print(cfg, j);
      return 0;
    }
    if (selfcheck->parsed()) {
      bool ok = true;
      Json all = Json::array();
      for (const auto& r : run_selfcheck(cfg.seed, cases)) {
        ok = ok && r.passed;
        if (cfg.output_format == "text")
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " " << r.detail << "\n";
        else
          std::cout << Json{{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}}.dump() << "\n";
      }
      return ok ? 0 : 3;
    }
    if (render->parsed()) {
      std::vector<CorpusEntry> entries = split_corpus(read_file(file));
      if (entries.empty()) throw input_error("SyntaxError", file + " contains no diagram");
      for (std::size_t i = 0; i < entries.size(); ++i)
        write_file(indexed_path(out_path, i, entries.size()), render_svg(parse_pd(entries[i].pd)));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return exit_code(e.error_class());
  }
  return 0;
}
