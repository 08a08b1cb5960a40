#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "aspnf/error.hpp"
#include "aspnf/generators.hpp"
#include "aspnf/kernel.hpp"
#include "aspnf/normalize.hpp"
#include "aspnf/report.hpp"
#include "aspnf/semantics.hpp"
#include "aspnf/text_io.hpp"

namespace aspnf::cli {

namespace {

class InputError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// Precedence: --max-atoms, then ASPNF_MAX_ATOMS, then the library default.
EnumerationOptions enumeration_options(const std::optional<std::size_t>& max_atoms,
                                       bool exhaustive = false) {
  EnumerationOptions opts;
  if (max_atoms) {
    opts.max_atoms = *max_atoms;
  } else if (const char* env = std::getenv("ASPNF_MAX_ATOMS"); env && *env) {
    opts.max_atoms = parse_count(env, "ASPNF_MAX_ATOMS");
  }
  if (exhaustive) opts.strategy = EnumerationStrategy::exhaustive;
  return opts;
}

std::vector<AtomSet> read_answer_sets(std::istream& in) {
  const ParseOptions reserved{.allow_reserved = true};
  std::vector<AtomSet> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with("%")) continue;
    out.push_back(parse_atom_list(line, reserved));
  }
  return out;
}

struct ProgramArgs {
  std::string file;
  bool allow_reserved = false;
};

void add_program_args(CLI::App* cmd, ProgramArgs& a) {
  cmd->add_option("file", a.file, "program file, or - for stdin")->required();
  cmd->add_flag("--allow-reserved", a.allow_reserved, "accept __-prefixed atoms");
}

Program load(const ProgramArgs& a, std::istream& in) {
  return parse_program(read_text(a.file, in), ParseOptions{.allow_reserved = a.allow_reserved});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Answer-set semantics and kernel normal forms for ground programs", "aspnf"};
  app.require_subcommand(1);
  Streams io{in, out, err};
  int status = kOk;

  // parse
  ProgramArgs parse_args;
  bool dot = false;
  auto* parse_cmd = app.add_subcommand("parse", "echo the normalized program");
  add_program_args(parse_cmd, parse_args);
  parse_cmd->add_flag("--dot", dot, "emit the dependency graph in DOT");
  parse_cmd->callback([&] {
    const Program p = load(parse_args, io.in);
    io.out << (dot ? export_dot(p) : render_program(p));
  });

  // solve
  ProgramArgs solve_args;
  std::optional<std::size_t> max_atoms;
  bool json = false;
  bool exhaustive = false;
  auto* solve_cmd = app.add_subcommand("solve", "enumerate answer sets");
  add_program_args(solve_cmd, solve_args);
  solve_cmd->add_option("--max-atoms", max_atoms, "refuse programs with more atoms");
  solve_cmd->add_flag("--json", json, "print a JSON array");
  solve_cmd->add_flag("--exhaustive", exhaustive, "test every subset of the undefined atoms");
  solve_cmd->callback([&] {
    const auto sets = enumerate_answer_sets(load(solve_args, io.in), enumeration_options(max_atoms, exhaustive));
    if (json) {
      io.out << answer_sets_to_json(sets) << "\n";
    } else {
      for (const auto& s : sets) io.out << render_atoms(s) << "\n";
    }
    if (sets.empty()) {
      io.err << "no answer sets\n";
      status = kNegative;
    }
  });

  // wfs
  ProgramArgs wfs_args;
  auto* wfs_cmd = app.add_subcommand("wfs", "print the well-founded partition");
  add_program_args(wfs_cmd, wfs_args);
  wfs_cmd->callback([&] {
    const auto w = well_founded(load(wfs_args, io.in));
    io.out << "true: " << render_atoms(w.true_atoms) << "\n"
           << "false: " << render_atoms(w.false_atoms) << "\n"
           << "undefined: " << render_atoms(w.undefined_atoms) << "\n";
  });

  // kernel-check
  ProgramArgs kcheck_args;
  auto* kcheck_cmd = app.add_subcommand("kernel-check", "check kernel normal form");
  add_program_args(kcheck_cmd, kcheck_args);
  kcheck_cmd->callback([&] {
    const auto report = check_kernel(load(kcheck_args, io.in));
    io.out << "kernel: " << (report.is_kernel ? "yes" : "no") << "\n";
    for (const auto& v : report.violations) {
      io.out << "  " << to_string(v.condition) << ": " << describe(v.witness) << "\n";
    }
    if (!report.is_kernel) status = kNegative;
  });

  // 3kernel-check
  ProgramArgs tcheck_args;
  auto* tcheck_cmd = app.add_subcommand("3kernel-check", "check 3-kernel normal form");
  add_program_args(tcheck_cmd, tcheck_args);
  tcheck_cmd->callback([&] {
    const auto report = check_3kernel(load(tcheck_args, io.in));
    io.out << "3-kernel: " << (report.is_3kernel ? "yes" : "no") << "\n";
    for (const auto& v : report.violations) {
      io.out << "  condition " << v.condition << " (" << describe_3kernel_condition(v.condition)
             << "): " << describe(v.witness) << "\n";
    }
    if (!report.is_3kernel) status = kNegative;
  });

  // cycles
  ProgramArgs cycles_args;
  bool cycles_dot = false;
  auto* cycles_cmd = app.add_subcommand("cycles", "report cycles, handles and bridges as JSON");
  add_program_args(cycles_cmd, cycles_args);
  cycles_cmd->add_flag("--dot", cycles_dot, "emit DOT with one cluster per cycle");
  cycles_cmd->callback([&] {
    const CycleAnalysis analysis(load(cycles_args, io.in));
    io.out << (cycles_dot ? cycles_to_dot(analysis) : cycles_to_json(analysis) + "\n");
  });

  // kernelize
  ProgramArgs kernelize_args;
  std::optional<std::size_t> kernelize_max;
  auto* kernelize_cmd = app.add_subcommand("kernelize", "rebuild the program in kernel form");
  add_program_args(kernelize_cmd, kernelize_args);
  kernelize_cmd->add_option("--max-atoms", kernelize_max, "refuse programs with more atoms");
  kernelize_cmd->callback([&] {
    const auto k = kernelize(load(kernelize_args, io.in), enumeration_options(kernelize_max));
    io.out << "% universe: " << render_atoms(k.universe) << "\n" << render_program(k.program);
  });

  // antichain2kernel
  std::string ac_file;
  auto* ac_cmd = app.add_subcommand("antichain2kernel", "kernel program for an anti-chain file");
  ac_cmd->add_option("file", ac_file, "anti-chain file, or - for stdin")->required();
  ac_cmd->callback([&] {
    io.out << render_program(antichain_to_kernel(parse_antichain(read_text(ac_file, io.in))));
  });

  // 3kernelize
  ProgramArgs tk_args;
  std::string trace_file;
  bool literal_long_rules = false;
  auto* tk_cmd = app.add_subcommand("3kernelize", "normalize a kernel program to 3-kernel form");
  add_program_args(tk_cmd, tk_args);
  tk_cmd->add_option("--trace", trace_file, "write the transformation trace as JSON");
  tk_cmd->add_flag("--literal-long-rules", literal_long_rules,
                   "replace long rules by the bare cycle, without guards");
  tk_cmd->callback([&] {
    NormalizeOptions opts;
    opts.long_rules.guard_unforced_heads = !literal_long_rules;
    const auto result = three_kernelize(load(tk_args, io.in), opts);
    io.out << render_program(result.program);
    if (!trace_file.empty()) write_text(trace_file, trace_to_json(result.trace));
    const auto report = check_3kernel(result.program);
    for (const auto& v : report.violations) {
      io.err << "residual violation of condition " << v.condition << ": " << describe(v.witness)
             << "\n";
    }
  });

  // reconstruct
  std::string rec_trace;
  auto* rec_cmd = app.add_subcommand("reconstruct", "map answer sets on stdin back through a trace");
  rec_cmd->add_option("trace", rec_trace, "trace JSON written by 3kernelize")->required();
  rec_cmd->callback([&] {
    const auto trace = trace_from_json(read_text(rec_trace, io.in));
    for (const auto& s : read_answer_sets(io.in)) io.out << render_atoms(reconstruct(s, trace)) << "\n";
  });

  // encode-3col
  std::string enc_graph;
  auto* enc_cmd = app.add_subcommand("encode-3col", "3-colorability program for a graph");
  enc_cmd->add_option("graph", enc_graph, "graph file")->required();
  enc_cmd->callback([&] { io.out << render_program(encode_3col(parse_graph(read_text(enc_graph, io.in)))); });

  // decode-3col
  std::string dec_graph;
  auto* dec_cmd = app.add_subcommand("decode-3col", "read colorings from answer sets on stdin");
  dec_cmd->add_option("graph", dec_graph, "graph file")->required();
  dec_cmd->callback([&] {
    const auto g = parse_graph(read_text(dec_graph, io.in));
    for (const auto& s : read_answer_sets(io.in)) {
      std::string sep;
      for (const auto& [node, color] : decode_3col(s, g)) {
        io.out << sep << node << "=" << to_string(color);
        sep = " ";
      }
      io.out << "\n";
    }
  });

  // equiv
  ProgramArgs eq_a;
  std::string eq_b;
  std::optional<std::string> over;
  std::optional<std::size_t> eq_max;
  auto* eq_cmd = app.add_subcommand("equiv", "equivalence modulo projection");
  add_program_args(eq_cmd, eq_a);
  eq_cmd->add_option("other", eq_b, "second program file")->required();
  eq_cmd->add_option("--over", over, "projection atoms (default: atoms common to both)");
  eq_cmd->add_option("--max-atoms", eq_max, "refuse programs with more atoms");
  eq_cmd->callback([&] {
    const ParseOptions popts{.allow_reserved = eq_a.allow_reserved};
    const Program p1 = load(eq_a, io.in);
    const Program p2 = parse_program(read_text(eq_b, io.in), popts);
    AtomSet h;
    if (over) {
      h = parse_atom_list(*over, popts);
    } else {
      const auto a1 = p1.atoms();
      for (const auto& a : p2.atoms()) {
        if (a1.contains(a)) h.insert(a);
      }
    }
    const auto opts = enumeration_options(eq_max);
    const auto s1 = project(enumerate_answer_sets(p1, opts), h);
    const auto s2 = project(enumerate_answer_sets(p2, opts), h);
    if (s1 == s2) {
      io.out << "equivalent over {" << render_atoms(h) << "}\n";
      return;
    }
    io.out << "not equivalent over {" << render_atoms(h) << "}\n";
    for (const auto& s : s1) {
      if (std::find(s2.begin(), s2.end(), s) == s2.end()) io.out << "  only first: {" << render_atoms(s) << "}\n";
    }
    for (const auto& s : s2) {
      if (std::find(s1.begin(), s1.end(), s) == s1.end()) io.out << "  only second: {" << render_atoms(s) << "}\n";
    }
    status = kNegative;
  });

  // gen-kernel
  std::size_t gen_atoms = 0;
  std::size_t gen_rules = 0;
  std::size_t gen_body = 2;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen-kernel", "random kernel program");
  gen_cmd->add_option("--atoms", gen_atoms, "number of atoms")->required();
  gen_cmd->add_option("--rules", gen_rules, "number of rules")->required();
  gen_cmd->add_option("--seed", gen_seed, "random seed")->required();
  gen_cmd->add_option("--max-body", gen_body, "longest body")->capture_default_str();
  gen_cmd->callback([&] {
    io.out << render_program(random_kernel_program(gen_atoms, gen_rules, gen_body, gen_seed));
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}

}  // namespace aspnf::cli
