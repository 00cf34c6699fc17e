// operad-forge: command-line driver for .opd scripts.
//
// Exit codes: 0 success, 1 law or constraint violation, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "opforge/action.hpp"
#include "opforge/dsl.hpp"
#include "opforge/fuzz.hpp"
#include "opforge/render.hpp"

using namespace opforge;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dsl::Script load(const std::string& path) {
  try {
    return dsl::parse(read_file(path));
  } catch (const dsl::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

// Evaluates one expression over the script's bindings.
dsl::Value evaluate(const std::string& path, const std::string& expression) {
  const std::string text = read_file(path);
  try {
    const auto script = dsl::parse(text + "\nlet __result = " + expression + ";\n");
    return script.bindings.back().value;
  } catch (const dsl::ParseError& e) {
    throw UsageError(e.message());
  }
}

const dsl::Binding& binding(const dsl::Script& s, const std::string& name) {
  const auto* b = s.find(name);
  if (!b) {
    throw UsageError("no binding named '" + name + "'");
  }
  return *b;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw UsageError("cannot write " + out_path);
  }
  out << text;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i > 0 ? ", " : "") + names[i];
  }
  return out;
}

int run_check(const std::string& file, const std::string& name) {
  const auto script = load(file);
  int status = kOk;
  for (const auto& b : script.bindings) {
    if (!name.empty() && b.name != name) {
      continue;
    }
    const auto* d = b.value.get<InfectionDiagram>();
    if (!d) {
      std::cout << b.name << ": ok (" << dsl::type_name(b.value) << ")\n";
      continue;
    }
    if (const auto bad = check_constraint(*d)) {
      const std::string earlier = bad->earlier == 0 ? "core" : "muffler " + std::to_string(bad->earlier);
      std::cout << b.name << ": violation between " << earlier << " and muffler " << bad->later << ": "
                << bad->reason << "\n";
      status = kViolation;
    } else {
      std::cout << b.name << ": ok (diagram)\n";
    }
  }
  if (!name.empty()) {
    binding(script, name);
  }
  return status;
}

int run_swap_check(const std::string& file, const std::string& diagram, std::size_t i, std::size_t k,
                   const std::vector<std::string>& links) {
  const auto script = load(file);
  const auto* d = binding(script, diagram).value.get<InfectionDiagram>();
  if (!d) {
    throw UsageError("'" + diagram + "' is not a diagram");
  }
  if (i < 1 || k < 1 || i > d->arity() || k > d->arity() || i == k) {
    throw UsageError("muffler indices must be distinct and in 1.." + std::to_string(d->arity()));
  }
  std::vector<LinkWord> words;
  for (const auto& n : links) {
    const auto* w = binding(script, n).value.get<LinkWord>();
    if (!w) {
      throw UsageError("'" + n + "' is not a link");
    }
    words.push_back(*w);
  }
  const bool same = verify_comm_swap(*d, i, k, words);
  std::cout << "before: " << to_string(act(*d, words)) << "\n"
            << "after:  " << to_string(act(swap_times(*d, i, k), words)) << "\n"
            << "commutes: " << (same ? "yes" : "no") << "\n";
  return same ? kOk : kViolation;
}

int run_decompose(const std::string& file, const std::string& link) {
  const auto script = load(file);
  const auto* w = binding(script, link).value.get<LinkWord>();
  if (!w) {
    throw UsageError("'" + link + "' is not a link");
  }
  const Alphabet* alphabet = script.alphabet();
  if (!alphabet) {
    throw UsageError("decompose needs an alphabet binding for linking numbers");
  }
  if (w->color() != 2 || !in_S2_0(*w, *alphabet)) {
    std::cout << link << ": not in S2^0\n";
    return kViolation;
  }
  const auto d = decompose_S2(*w, *alphabet);
  dsl::ValueList factors;
  for (const auto& f : d.factors) {
    factors.push_back(dsl::Value{f});
  }
  std::cout << "let stacking = " << to_string(d.stacking) << ";\n"
            << "let factors = " << dsl::to_string(dsl::Value{factors}) << ";\n";
  return kOk;
}

int run_render(const std::string& file, std::string name, bool ascii, const std::string& out) {
  const auto script = load(file);
  if (name.empty()) {
    for (const auto& b : script.bindings) {
      const auto& v = b.value;
      if (v.get<InfectionDiagram>() || v.get<CubesElement>() || v.get<OverlapElement>()) {
        name = b.name;
      }
    }
    if (name.empty()) {
      throw UsageError("nothing to render");
    }
  }
  const auto& v = binding(script, name).value;
  std::string text;
  if (const auto* d = v.get<InfectionDiagram>()) {
    text = ascii ? render_ascii(*d) : render_svg(*d);
  } else if (const auto* c = v.get<CubesElement>()) {
    text = ascii ? render_ascii(*c) : render_svg(*c);
  } else if (const auto* o = v.get<OverlapElement>()) {
    text = ascii ? render_ascii(*o) : render_svg(*o);
  } else {
    throw UsageError("cannot render a " + dsl::type_name(v));
  }
  emit(text, out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic infection operad toolkit", "operad-forge"};
  app.require_subcommand(1);

  std::string file;
  std::string name;
  std::string out;
  std::vector<std::string> rest;

  auto* check = app.add_subcommand("check", "Validate every binding; diagrams must satisfy the continuity constraint");
  check->add_option("file", file, "Script (.opd)")->required();
  check->add_option("--name", name, "Only this binding");

  auto* compose_cmd = app.add_subcommand("compose", "Compose an element with a list of inputs");
  std::string outer;
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("outer", outer)->required();
  compose_cmd->add_option("inputs", rest);
  compose_cmd->add_option("-o", out, "Output file");

  auto* act_cmd = app.add_subcommand("act", "Act with a diagram on links");
  act_cmd->add_option("file", file)->required();
  act_cmd->add_option("diagram", outer)->required();
  act_cmd->add_option("links", rest);
  act_cmd->add_option("-o", out, "Output file");

  auto* swap = app.add_subcommand("swap-check", "Exchange two mufflers' times and compare the action");
  std::size_t i = 0;
  std::size_t k = 0;
  swap->add_option("file", file)->required();
  swap->add_option("diagram", outer)->required();
  swap->add_option("i", i)->required();
  swap->add_option("k", k)->required();
  swap->add_option("links", rest);

  auto* normalize = app.add_subcommand("normalize", "Print the script with every binding evaluated");
  normalize->add_option("file", file)->required();
  normalize->add_option("-o", out, "Output file");

  auto* decompose = app.add_subcommand("decompose", "Split an S2^0 link over the stacking suboperad");
  decompose->add_option("file", file)->required();
  decompose->add_option("link", outer)->required();

  auto* render = app.add_subcommand("render", "Draw a diagram, cubes or overlap element");
  bool ascii = false;
  render->add_option("file", file)->required();
  render->add_option("--name", name, "Binding to draw (default: the last drawable one)");
  render->add_flag("--ascii", ascii, "Plain text instead of SVG");
  render->add_option("-o", out, "Output file");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Check operad laws on seeded random instances");
  std::uint64_t seed = 1;
  std::size_t ops = 1000;
  std::string laws = "assoc,symm,ident,dagger,action";
  fuzz_cmd->add_option("--seed", seed, "Generator seed");
  fuzz_cmd->add_option("--ops", ops, "Number of instances");
  fuzz_cmd->add_option("--laws", laws, "Comma-separated subset of assoc,symm,ident,dagger,action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      return run_check(file, name);
    }
    if (*compose_cmd) {
      emit(dsl::to_string(evaluate(file, "compose(" + outer + ", [" + join(rest) + "])")) + "\n", out);
      return kOk;
    }
    if (*act_cmd) {
      emit(dsl::to_string(evaluate(file, "act(" + outer + ", [" + join(rest) + "])")) + "\n", out);
      return kOk;
    }
    if (*swap) {
      return run_swap_check(file, outer, i, k, rest);
    }
    if (*normalize) {
      emit(dsl::print(dsl::normalize(load(file))), out);
      return kOk;
    }
    if (*decompose) {
      return run_decompose(file, outer);
    }
    if (*render) {
      return run_render(file, name, ascii, out);
    }
    const auto report = fuzz(seed, ops, parse_laws(laws));
    std::cout << report.text();
    return report.passed() ? kOk : kViolation;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GraftConflict& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const OperadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
