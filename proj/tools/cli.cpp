#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cubering/errors.hpp"
#include "cubering/pipeline.hpp"
#include "json.hpp"

namespace cubering::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Command { kBetti, kCupTable, kCycles, kVerify };

struct Settings {
  std::string input;
  PipelineOptions pipeline;
  bool json = false;
  bool timing = false;
};

std::string point_text(const Point3& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

/// Short names v1.., a1.., b1.. by dimension, in generator order.
std::map<CellId, std::string> generator_names(const AnalysisReport& r) {
  std::map<CellId, std::string> names;
  int counter[kMaxDim + 1] = {0, 0, 0, 0};
  const char prefix[kMaxDim + 1] = {'v', 'a', 'b', 'c'};
  for (const auto& g : r.generators) {
    names[g.id] = prefix[g.dim] + std::to_string(++counter[g.dim]);
  }
  return names;
}

std::string counts_text(const std::array<std::size_t, kMaxDim + 1>& c) {
  std::size_t total = 0;
  for (auto n : c) total += n;
  std::ostringstream os;
  os << total << " [" << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << ']';
  return os.str();
}

json counts_json(const std::array<std::size_t, kMaxDim + 1>& c) {
  std::size_t total = 0;
  for (auto n : c) total += n;
  return {{"total", total}, {"by_dim", c}};
}

void write_text(std::ostream& out, Command cmd, const Settings& s, const AnalysisReport& r) {
  const auto names = generator_names(r);
  out << "picture   " << r.dims[0] << 'x' << r.dims[1] << 'x' << r.dims[2] << ", " << r.voxels << " voxels"
      << (s.pipeline.complement ? " (complement, padding " + std::to_string(s.pipeline.padding) + ")" : "") << '\n';
  out << "cells     Q " << counts_text(r.q_counts) << ", dQ " << counts_text(r.dq_counts) << ", K "
      << counts_text(r.k_counts) << '\n';
  out << "betti     " << r.betti << '\n';

  if (cmd == Command::kCupTable) {
    out << "generators\n";
    for (const auto& g : r.generators) {
      out << "  " << std::left << std::setw(4) << names.at(g.id) << std::right << " dim " << g.dim << "  " << g.cube
          << "  cycle of " << g.cycle_size << " cells\n";
    }
    out << "cup products on 2-generators";
    for (CellId b : r.cup.h2) out << ' ' << names.at(b);
    out << '\n';
    for (std::size_t row = 0; row < r.cup.rows.size(); ++row) {
      const auto [i, j] = r.cup.rows[row];
      out << "  " << names.at(r.cup.h1[i]) << " x " << names.at(r.cup.h1[j]) << " :";
      for (auto bit : r.cup.entries[row]) out << ' ' << int(bit);
      out << '\n';
    }
    out << "rank      " << r.cup.rank << '\n';
    out << "cup products on cavities";
    for (const auto& c : r.cavities) out << ' ' << point_text(c.seed);
    out << '\n';
    for (std::size_t row = 0; row < r.cup.rows.size(); ++row) {
      const auto [i, j] = r.cup.rows[row];
      out << "  " << names.at(r.cup.h1[i]) << " x " << names.at(r.cup.h1[j]) << " :";
      for (auto bit : r.cavity_entries[row]) out << ' ' << int(bit);
      out << '\n';
    }
    out << "cavity rank " << r.cavity_rank << '\n';
    for (auto [i, j] : r.cup.asymmetric_pairs) {
      out << "note      " << names.at(r.cup.h1[i]) << " x " << names.at(r.cup.h1[j])
          << " differs from the reversed product\n";
    }
  }

  if (cmd == Command::kCycles) {
    for (const auto& c : r.cycles) {
      out << "generator " << names.at(c.generator) << " dim " << c.dim << " voxels " << c.voxels.size()
          << (c.fallback_used ? " fallback" : "") << '\n';
      out << "  ";
      for (std::size_t i = 0; i < c.voxels.size(); ++i) out << (i ? " " : "") << c.voxels[i];
      out << '\n';
    }
  }

  if (!r.verdicts.empty()) {
    for (const auto& v : r.verdicts) {
      out << (v.passed ? "pass  " : "FAIL  ") << std::left << std::setw(7) << v.stage << std::right << v.check;
      if (!v.detail.empty()) out << "  (" << v.detail << ')';
      out << '\n';
    }
  }
  if (r.g_recomputed) out << "note      g recomputed on K\n";
  if (s.timing) {
    for (const auto& t : r.timing) {
      out << "time      " << std::left << std::setw(16) << t.stage << std::right << std::fixed << std::setprecision(3)
          << t.milliseconds << " ms\n";
    }
  }
}

json report_json(Command cmd, const Settings& s, const AnalysisReport& r) {
  const auto names = generator_names(r);
  json j;
  j["picture"] = {{"dims", r.dims},
                  {"voxels", r.voxels},
                  {"complement", s.pipeline.complement},
                  {"padding", s.pipeline.padding}};
  j["cells"] = {{"Q", counts_json(r.q_counts)}, {"dQ", counts_json(r.dq_counts)}, {"K", counts_json(r.k_counts)}};
  j["betti"] = {r.betti[0], r.betti[1], r.betti[2]};

  if (cmd == Command::kCupTable || cmd == Command::kCycles) {
    json gens = json::array();
    for (const auto& g : r.generators) {
      gens.push_back({{"name", names.at(g.id)},
                      {"id", g.id.value},
                      {"dim", g.dim},
                      {"cell", to_string(g.cube)},
                      {"cycle_size", g.cycle_size}});
    }
    j["generators"] = gens;
  }

  if (cmd == Command::kCupTable) {
    json h2 = json::array();
    for (CellId b : r.cup.h2) h2.push_back(names.at(b));
    json rows = json::array();
    json cavity_rows = json::array();
    for (std::size_t row = 0; row < r.cup.rows.size(); ++row) {
      const auto [i, k] = r.cup.rows[row];
      const json pair = {names.at(r.cup.h1[i]), names.at(r.cup.h1[k])};
      rows.push_back({{"pair", pair}, {"bits", r.cup.entries[row]}});
      cavity_rows.push_back({{"pair", pair}, {"bits", r.cavity_entries[row]}});
    }
    json asym = json::array();
    for (auto [i, k] : r.cup.asymmetric_pairs) asym.push_back({names.at(r.cup.h1[i]), names.at(r.cup.h1[k])});
    j["cup"] = {{"columns", h2}, {"rows", rows}, {"rank", r.cup.rank}, {"asymmetric_pairs", asym}};
    json seeds = json::array();
    for (const auto& c : r.cavities) seeds.push_back({c.seed.x, c.seed.y, c.seed.z});
    j["cavities"] = {{"seeds", seeds}, {"rows", cavity_rows}, {"rank", r.cavity_rank}};
  }

  if (cmd == Command::kCycles) {
    json cycles = json::array();
    for (const auto& c : r.cycles) {
      json vox = json::array();
      for (const auto& p : c.voxels) vox.push_back({p.x, p.y, p.z});
      cycles.push_back({{"generator", names.at(c.generator)},
                        {"id", c.generator.value},
                        {"dim", c.dim},
                        {"voxels", vox},
                        {"loops", c.loops.size()},
                        {"fallback", c.fallback_used}});
    }
    j["cycles"] = cycles;
  }

  if (!r.verdicts.empty()) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
      verdicts.push_back({{"stage", v.stage}, {"check", v.check}, {"passed", v.passed}, {"detail", v.detail}});
    }
    j["verdicts"] = verdicts;
    j["verified"] = r.verified();
  }
  j["g_recomputed"] = r.g_recomputed;
  if (s.timing) {
    json t = json::object();
    for (const auto& st : r.timing) t[st.stage] = st.milliseconds;
    j["timing_ms"] = t;
  }
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_common(CLI::App& sub, Settings& s) {
  sub.add_option("input", s.input, "picture file (dense grid or coordinate list)")->required();
  sub.add_flag("--complement", s.pipeline.complement, "analyze the complement of the picture");
  sub.add_option("--padding", s.pipeline.padding, "margin around the foreground for --complement")
      ->check(CLI::NonNegativeNumber);
  sub.add_flag("--json", s.json, "print a JSON report");
  sub.add_flag("--oracle", s.pipeline.oracle, "cross-check against the rank oracle and K_Q");
  sub.add_flag("--timing", s.timing, "print stage timings");
  sub.add_flag("--corrupt-phi", s.pipeline.corrupt_phi)->group("");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology and cup products of 3D binary pictures"};
  app.require_subcommand(1);
  Settings s;
  Command cmd = Command::kBetti;
  const std::pair<const char*, Command> commands[] = {
      {"betti", Command::kBetti},
      {"cup-table", Command::kCupTable},
      {"cycles", Command::kCycles},
      {"verify", Command::kVerify},
  };
  const char* help[] = {
      "Betti numbers and cell counts",
      "cup products of 1-classes with rank",
      "voxel cycles of every generator",
      "check every model identity and the oracles",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < 4; ++i) {
    auto* sub = app.add_subcommand(commands[i].first, help[i]);
    add_common(*sub, s);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (subs[i]->parsed()) cmd = commands[i].second;
  }
  if (cmd == Command::kVerify) {
    s.pipeline.verify = true;
    s.pipeline.oracle = true;
  }
  if (cmd == Command::kCycles) s.pipeline.cycles = true;

  AnalysisReport report;
  try {
    const Picture3D picture = parse_picture(read_file(s.input));
    report = analyze(picture, s.pipeline);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailed;
  } catch (const IntegrityError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (s.json) {
    out << report_json(cmd, s, report).dump(2) << '\n';
  } else {
    write_text(out, cmd, s, report);
  }
  if (const Verdict* bad = report.first_failure()) {
    err << "verification failed: " << bad->stage << ": " << bad->check;
    if (!bad->detail.empty()) err << " (" << bad->detail << ')';
    err << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace cubering::cli
