#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace cutdiag::cli;
  CLI::App app{"cutdiag: invariants, moves and concordance certificates for 1-dimensional cut-diagrams"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto fmt = [&] { return format == "machine" ? Format::machine : Format::text; };
  Streams io{std::cout, std::cerr};
  int code = 0;

  std::string path, other;
  int maxlen = 4;
  bool reduced = false;

  auto* parse = app.add_subcommand("parse", "Print a .cut or .gauss file in canonical .cut form");
  parse->add_option("file", path)->required();
  add_format(parse);
  parse->callback([&] { code = cmd_parse(path, fmt(), io); });

  auto* inv = app.add_subcommand("invariants", "Milnor table of a diagram");
  inv->add_option("file", path)->required();
  inv->add_option("--maxlen", maxlen, "Longest sequence")->capture_default_str();
  inv->add_flag("--reduced", reduced, "Non-repeating sequences only");
  add_format(inv);
  inv->callback([&] { code = cmd_invariants(path, maxlen, reduced, fmt(), io); });

  auto* cmp = app.add_subcommand("compare", "Compare the Milnor tables of two diagrams");
  cmp->add_option("a", path)->required();
  cmp->add_option("b", other)->required();
  cmp->add_option("--maxlen", maxlen)->capture_default_str();
  cmp->add_flag("--reduced", reduced);
  add_format(cmp);
  cmp->callback([&] { code = cmd_compare(path, other, maxlen, reduced, fmt(), io); });

  auto* mv = app.add_subcommand("moves", "List applicable moves");
  mv->add_option("file", path)->required();
  add_format(mv);
  mv->callback([&] { code = cmd_moves(path, fmt(), io); });

  FuzzOptions fo;
  auto* fz = app.add_subcommand("fuzz", "Random move walks must keep the Milnor table");
  fz->add_option("file", path)->required();
  fz->add_option("--steps", fo.steps)->capture_default_str();
  fz->add_option("--seed", fo.seed)->capture_default_str();
  fz->add_option("--trials", fo.trials)->capture_default_str();
  fz->add_option("--maxlen", fo.maxlen)->capture_default_str();
  fz->add_flag("--sv", fo.sv, "Walk with SV moves and compare reduced tables");
  add_format(fz);
  fz->callback([&] { code = cmd_fuzz(path, fo, fmt(), io); });

  auto* sl = app.add_subcommand("slice", "Certificate of one vertex death per cut-point");
  sl->add_option("file", path)->required();
  sl->callback([&] { code = cmd_slice(path, io); });

  std::vector<std::string> moves;
  auto* tr = app.add_subcommand("trace", "Certificate tracing a move sequence");
  tr->add_option("file", path)->required();
  tr->add_option("moves", moves, "Moves, e.g. R2+@1:0:+:2.0");
  tr->add_flag("--reduced", reduced, "Reduced certificate (SV moves allowed)");
  tr->callback([&] { code = cmd_trace(path, moves, reduced, io); });

  std::string mode;
  auto* vf = app.add_subcommand("verify", "Verify a .cmov certificate");
  vf->add_option("file", path)->required();
  vf->add_option("--mode", mode, "Override the certificate mode")->check(CLI::IsMember({"strict", "reduced"}));
  add_format(vf);
  vf->callback([&] {
    code = cmd_verify(path, mode.empty() ? std::nullopt : std::optional<std::string>(mode), fmt(), io);
  });

  std::string dir = "corpus";
  auto* demo = app.add_subcommand("demo", "Write the example corpus and certificates");
  demo->add_option("dir", dir)->capture_default_str();
  demo->callback([&] { code = cmd_demo(dir, io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : parse_error;
  }
  return code;
}
