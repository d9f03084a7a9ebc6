#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cutdiag/concordance.hpp"
#include "cutdiag/magnus.hpp"
#include "cutdiag/moves.hpp"
#include "cutdiag/parse_io.hpp"
#include "cutdiag/peripheral.hpp"

namespace cutdiag::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json diagram_json(const CutDiagram& d) {
  json comps = json::array();
  for (int i = 1; i <= d.num_components(); ++i) {
    json cps = json::array();
    for (const auto& cp : d.cutpoints(i)) cps.push_back({{"sign", cp.sign}, {"label", to_string(cp.label)}});
    comps.push_back({{"kind", std::string(to_string(d.kind(i)))}, {"cutpoints", cps}});
  }
  return {{"name", d.name()}, {"components", comps}};
}

json table_json(const MilnorTable& t) {
  json entries = json::array();
  for (const auto& [seq, e] : t.entries())
    entries.push_back({{"sequence", seq}, {"value", integer_json(e.value)}, {"modulus", integer_json(e.modulus)}});
  return {{"maxlen", t.maxlen()}, {"reduced", t.reduced()}, {"entries", entries}};
}

MilnorTable table_for(const CutDiagram& d, int maxlen, bool reduced) {
  return reduced ? reduced_milnor_table(d, maxlen) : milnor_table(d, maxlen);
}

void check_maxlen(int maxlen) {
  if (maxlen < 2) throw Error("--maxlen must be at least 2");
}

// Runs body, turning input errors into exit code 2.
template <class F>
int guarded(Streams io, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return parse_error;
  }
}

const char* const kGauss[][2] = {
    {"hopf", "diagram hopf\ncircle O1+ U2+\ncircle O2+ U1+\n"},
    {"trefoil", "diagram trefoil\ncircle O1+U2+O3+U1+O2+U3+\n"},
    {"whitehead", "diagram whitehead\ncircle O1- U3+ O4+ U2-\ncircle O5+ U1- O2- U5+ O3+ U4+\n"},
    {"borromean", "diagram borromean\ncircle O1+ U2- O4- U5+\ncircle U1+ O3+ U4- O6-\ncircle O2- U3+ O5+ U6-\n"},
};

const char* const kWhiteheadToUnlink[] = {"SV-@2:1", "R1+@2:1:+:before", "R3@2:1:first:1.0",
                                          "R2-@1:0", "SV-@2:2", "R2-@2:0"};

}  // namespace

CutDiagram load_diagram(const std::string& path) {
  const std::string text = slurp(path);
  const fs::path p(path);
  CutDiagram d = p.extension() == ".gauss" ? parse_gauss_text(text) : parse_cut(text);
  if (d.name().empty()) d.set_name(p.stem().string());
  return d;
}

int cmd_parse(const std::string& path, Format fmt, Streams io) {
  return guarded(io, [&] {
    const CutDiagram d = load_diagram(path);
    if (fmt == Format::machine) io.out << diagram_json(d).dump(2) << '\n';
    else io.out << write_cut(d);
    return ok;
  });
}

int cmd_invariants(const std::string& path, int maxlen, bool reduced, Format fmt, Streams io) {
  return guarded(io, [&] {
    check_maxlen(maxlen);
    const CutDiagram d = load_diagram(path);
    const MilnorTable t = table_for(d, maxlen, reduced);
    if (fmt == Format::machine) {
      json j = table_json(t);
      j["diagram"] = d.name();
      io.out << j.dump(2) << '\n';
    } else {
      io.out << t.to_text();
    }
    return ok;
  });
}

int cmd_compare(const std::string& a, const std::string& b, int maxlen, bool reduced, Format fmt, Streams io) {
  return guarded(io, [&] {
    check_maxlen(maxlen);
    const CutDiagram da = load_diagram(a), db = load_diagram(b);
    const Verdict v = same_invariants(da, db, maxlen, reduced);
    if (fmt == Format::machine) {
      json j = {{"verdict", v.distinguished ? "DIFFER" : "EQUAL"}, {"maxlen", maxlen}, {"reduced", reduced}};
      if (v.distinguished) j["witness"] = v.witness;
      io.out << j.dump(2) << '\n';
    } else if (v.distinguished) {
      io.out << "DIFFER at " << to_string(v.witness) << '\n';
    } else {
      io.out << "EQUAL up to length " << maxlen << '\n';
    }
    return v.distinguished ? differ : ok;
  });
}

int cmd_moves(const std::string& path, Format fmt, Streams io) {
  return guarded(io, [&] {
    const CutDiagram d = load_diagram(path);
    const auto moves = enumerate_moves(d);
    if (fmt == Format::machine) {
      json j = json::array();
      for (const auto& m : moves) j.push_back(format_move(m));
      io.out << json{{"moves", j}}.dump(2) << '\n';
    } else {
      for (const auto& m : moves) io.out << format_move(m) << '\n';
    }
    return ok;
  });
}

int cmd_fuzz(const std::string& path, const FuzzOptions& opt, Format fmt, Streams io) {
  return guarded(io, [&] {
    check_maxlen(opt.maxlen);
    if (opt.steps < 0 || opt.trials < 1) throw Error("--steps must be >= 0 and --trials >= 1");
    const CutDiagram d = load_diagram(path);
    const MilnorTable base = table_for(d, opt.maxlen, opt.sv);
    const MoveSet set = opt.sv ? MoveSet::self_virtual : MoveSet::topological;
    for (int t = 0; t < opt.trials; ++t) {
      const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
      const Walk w = random_walk_trace(d, opt.steps, seed, set);
      CutDiagram cur = d;
      for (std::size_t s = 0; s < w.moves.size(); ++s) {
        cur = apply_move(cur, w.moves[s]);
        const auto diff = first_difference(base, table_for(cur, opt.maxlen, opt.sv));
        if (!diff) continue;
        std::vector<std::string> seq;
        for (std::size_t u = 0; u <= s; ++u) seq.push_back(format_move(w.moves[u]));
        if (fmt == Format::machine) {
          io.out << json{{"result", "FAIL"}, {"seed", seed}, {"witness", *diff}, {"moves", seq}}.dump(2) << '\n';
        } else {
          io.out << "FAIL seed " << seed << ": table differs at " << to_string(*diff) << " after";
          for (const auto& m : seq) io.out << ' ' << m;
          io.out << '\n';
        }
        return failed;
      }
    }
    if (fmt == Format::machine) {
      io.out << json{{"result", "PASS"}, {"trials", opt.trials}, {"steps", opt.steps}, {"maxlen", opt.maxlen}}.dump(2)
             << '\n';
    } else {
      io.out << "PASS " << opt.trials << " walk(s) of " << opt.steps << " moves, "
             << (opt.sv ? "reduced " : "") << "tables to length " << opt.maxlen << " unchanged\n";
    }
    return ok;
  });
}

int cmd_slice(const std::string& path, Streams io) {
  return guarded(io, [&] {
    io.out << write_certificate(build_slice(load_diagram(path)));
    return ok;
  });
}

int cmd_trace(const std::string& path, const std::vector<std::string>& moves, bool reduced, Streams io) {
  return guarded(io, [&] {
    const CutDiagram d = load_diagram(path);
    std::vector<MoveInstance> ms;
    for (const auto& m : moves) ms.push_back(parse_move(m));
    io.out << write_certificate(reduced ? build_sv_trace(d, ms) : build_trace(d, ms));
    return ok;
  });
}

int cmd_verify(const std::string& path, std::optional<std::string> mode, Format fmt, Streams io) {
  return guarded(io, [&] {
    const fs::path dir = fs::path(path).parent_path();
    auto resolve = [&](const std::string& name) {
      for (const char* ext : {".cut", ".gauss"}) {
        const fs::path p = dir / (name + ext);
        if (fs::exists(p)) return load_diagram(p.string());
      }
      throw Error("diagram '" + name + "' not found next to " + path);
    };
    Certificate c = parse_certificate(slurp(path), resolve);
    if (mode) {
      if (*mode == "strict") c.mode = CertificateMode::strict;
      else if (*mode == "reduced") c.mode = CertificateMode::reduced;
      else throw Error("unknown mode '" + *mode + "'");
    }
    const VerifyReport r = verify(c);
    if (fmt == Format::machine) {
      json j = {{"accepted", r.accepted}, {"mode", std::string(to_string(c.mode))}};
      if (!r.accepted) {
        j["tag"] = r.tag;
        j["event"] = r.event_index;
        j["message"] = r.message;
      }
      io.out << j.dump(2) << '\n';
    } else if (r.accepted) {
      io.out << "ACCEPTED (" << to_string(c.mode) << ", " << c.events.size() << " events)\n";
    } else {
      io.out << "REJECTED " << r.tag;
      if (r.event_index >= 0) io.out << " at event " << r.event_index;
      io.out << ": " << r.message << '\n';
    }
    return r.accepted ? ok : rejected;
  });
}

int cmd_demo(const std::string& dir, Streams io) {
  return guarded(io, [&] {
    fs::create_directories(dir);
    auto write = [&](const std::string& file, const std::string& text) {
      std::ofstream out(fs::path(dir) / file, std::ios::binary);
      if (!out) throw Error("cannot write " + file);
      out << text;
      io.out << "wrote " << (fs::path(dir) / file).string() << '\n';
    };
    std::map<std::string, CutDiagram> diagrams;
    for (const auto& [name, gauss] : kGauss) {
      write(std::string(name) + ".gauss", gauss);
      diagrams[name] = parse_gauss_text(gauss);
      write(std::string(name) + ".cut", write_cut(diagrams[name]));
    }
    const CutDiagram unknot(Skeleton{{ComponentKind::circle}}, {{}}, "unknot");
    const CutDiagram unlink2(Skeleton{{ComponentKind::circle, ComponentKind::circle}}, {{}, {}}, "unlink2");
    write("unknot.cut", write_cut(unknot));
    write("unlink2.cut", write_cut(unlink2));

    Certificate trefoil = build_slice(diagrams["trefoil"]);
    trefoil.to_name = "unknot";
    write("trefoil-slice.cmov", write_certificate(trefoil));

    Certificate hopf = build_slice(diagrams["hopf"]);
    hopf.to_name = "unlink2";
    write("hopf-slice.cmov", write_certificate(hopf));

    std::vector<MoveInstance> ms;
    for (const char* m : kWhiteheadToUnlink) ms.push_back(parse_move(m));
    Certificate wh = build_sv_trace(diagrams["whitehead"], ms);
    wh.to_name = "unlink2";
    write("whitehead-reduced.cmov", write_certificate(wh));
    return ok;
  });
}

}  // namespace cutdiag::cli
