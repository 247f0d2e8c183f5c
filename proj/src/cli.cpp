#include "bigmap/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bigmap/endspace.hpp"
#include "bigmap/json_io.hpp"
#include "bigmap/repro.hpp"
#include "bigmap/shark.hpp"
#include "bigmap/word_search.hpp"

namespace bigmap::cli {

namespace {

using io::json;

// A document argument is inline JSON when it starts with '{' or '[', else a path.
json load_document(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return io::parse_text(arg, "<inline>");
  }
  return io::read_file(arg);
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw io::FormatError(what + ": \"" + item + "\" is not an integer");
    }
    out.push_back(v);
  }
  return out;
}

std::string render(const EndPerm& p) {
  std::ostringstream s;
  if (!p.window_empty()) {
    std::vector<std::string> top{"i"}, bottom{"image"};
    for (std::int64_t i = p.lo(); i <= p.hi(); ++i) {
      top.push_back(std::to_string(i));
      bottom.push_back(std::to_string(p(i)));
    }
    std::vector<std::size_t> width(top.size());
    for (std::size_t c = 0; c < top.size(); ++c) width[c] = std::max(top[c].size(), bottom[c].size());
    for (const auto* row : {&top, &bottom}) {
      for (std::size_t c = 0; c < row->size(); ++c) {
        s << (c ? " " : "") << std::setw(static_cast<int>(width[c])) << (*row)[c];
      }
      s << "\n";
    }
  }
  const auto t = p.offset();
  s << "i ↦ i" << (t < 0 ? "-" : "+") << (t < 0 ? -t : t) << " elsewhere\n";
  return s.str();
}

std::string render(const GenWord& w) {
  std::ostringstream s;
  s << "cost " << w.cost() << ":";
  if (w.letters().empty()) s << " (empty word)";
  s << "\n";
  for (const auto& l : w.letters()) {
    if (const auto* nu = std::get_if<NuLetter>(&l)) {
      s << "nu\n" << render(nu->perm);
    } else {
      s << (std::get<ShiftLetter>(l).sign > 0 ? "h\n" : "h^-1\n");
    }
  }
  return s.str();
}

std::string render_set(const std::set<std::string>& xs) {
  std::string out = "{";
  for (const auto& x : xs) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

std::string render(const ends::Witness& w) {
  std::string s = ends::to_string(w.mode) + " mode";
  if (w.mode == ends::Mode::Class) s += " (class " + w.class_id + ")";
  return s + ": X = " + render_set(w.partition.x) + ", Y = " + render_set(w.partition.y);
}

struct Context {
  std::ostream& out;
  bool json_mode = false;

  void emit(const json& j, const std::string& human) const {
    if (json_mode) {
      out << j.dump(2) << "\n";
    } else {
      out << human;
      if (!human.empty() && human.back() != '\n') out << "\n";
    }
  }
};

ends::EndClassTable table_arg(const std::string& table, const std::string& builtin) {
  if (!builtin.empty()) return ends::compile_builtin(builtin);
  auto t = io::table_from_json(load_document(table));
  ends::require_valid(t);
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on big mapping class groups"};
  app.name("bigmap");
  app.require_subcommand(1);
  app.allow_extras(false);

  Context ctx{out};
  app.add_flag("--json", ctx.json_mode, "Emit JSON instead of text");

  std::function<int()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  };

  // ---- qinf ----
  auto* qinf = group("qinf", "Eventually-zero binary sequences");
  std::string a_text, b_text;
  {
    auto* dist = leaf(qinf, "dist", "l1 distance of two sequences");
    dist->add_option("--a", a_text, "Comma separated 1-positions")->required();
    dist->add_option("--b", b_text, "Comma separated 1-positions")->required();
    dist->callback([&] {
      action = [&] {
        const auto a = parse_binary_seq(a_text);
        const auto b = parse_binary_seq(b_text);
        const auto d = l1_distance(a, b);
        ctx.emit(json{{"distance", d}}, std::to_string(d));
        return kOk;
      };
    });
  }
  std::string point_text, primes_text;
  {
    auto* embed = leaf(qinf, "embed", "Embed a point of Z^n");
    embed->add_option("--point", point_text, "Comma separated coordinates")->required();
    embed->add_option("--primes", primes_text, "Comma separated odd primes, default 3,5,7,...");
    embed->callback([&] {
      action = [&] {
        const auto point = parse_int_list(point_text, "--point");
        const auto primes = primes_text.empty() ? first_odd_primes(point.size())
                                                : parse_int_list(primes_text, "--primes");
        const auto seq = zn_embed(primes, point);
        ctx.emit(io::to_json(seq), to_string(seq));
        return kOk;
      };
    });
  }

  // ---- shark ----
  auto* shark = group("shark", "The shark-tank model");
  std::string perm_doc;
  WordSearchOptions search;
  {
    auto* phi_cmd = leaf(shark, "phi", "The element Phi(a)");
    phi_cmd->add_option("--a", a_text, "Comma separated 1-positions")->required();
    phi_cmd->callback([&] {
      action = [&] {
        const auto p = phi(parse_binary_seq(a_text));
        ctx.emit(io::to_json(p), render(p));
        return kOk;
      };
    });

    auto* norm = leaf(shark, "norm", "Crossing norm of an element");
    norm->add_option("--perm", perm_doc, "EndPerm JSON file or inline document")->required();
    norm->callback([&] {
      action = [&] {
        const auto p = io::end_perm_from_json(load_document(perm_doc));
        const auto c = crossings(p);
        ctx.emit(json{{"crossing_norm", c.a_to_b + c.b_to_a},
                      {"a_to_b", c.a_to_b},
                      {"b_to_a", c.b_to_a}},
                 std::to_string(c.a_to_b + c.b_to_a) + " (A to B " + std::to_string(c.a_to_b) +
                     ", B to A " + std::to_string(c.b_to_a) + ")");
        return kOk;
      };
    });

    auto* dist = leaf(shark, "dist", "Distance between Phi(a) and Phi(b)");
    dist->add_option("--a", a_text, "Comma separated 1-positions")->required();
    dist->add_option("--b", b_text, "Comma separated 1-positions")->required();
    dist->callback([&] {
      action = [&] {
        const auto a = parse_binary_seq(a_text);
        const auto b = parse_binary_seq(b_text);
        const auto element = compose(inverse(phi(b)), phi(a));
        const auto norm_value = crossing_norm(element);
        const auto word = witness_factorization(element);
        const auto l1 = l1_distance(a, b);
        std::ostringstream s;
        s << "crossing norm " << norm_value << "\n"
          << "l1 distance " << l1 << "\n"
          << "witness cost " << word.cost() << " (bound " << l1 + 3 << ")";
        ctx.emit(json{{"crossing_norm", norm_value},
                      {"l1_distance", l1},
                      {"witness_cost", word.cost()},
                      {"witness", io::to_json(word)}},
                 s.str());
        return kOk;
      };
    });

    auto* witness = leaf(shark, "witness", "Word in the generators for an element");
    witness->add_option("--perm", perm_doc, "EndPerm JSON file or inline document");
    witness->add_option("--a", a_text, "Use Phi(b)^-1 Phi(a)");
    witness->add_option("--b", b_text, "Use Phi(b)^-1 Phi(a)");
    witness->callback([&] {
      action = [&] {
        EndPerm element;
        if (!perm_doc.empty()) {
          element = io::end_perm_from_json(load_document(perm_doc));
        } else {
          element = compose(inverse(phi(parse_binary_seq(b_text))), phi(parse_binary_seq(a_text)));
        }
        const auto word = witness_factorization(element);
        ctx.emit(io::to_json(word), render(word));
        return kOk;
      };
    });

    auto* wordlen = leaf(shark, "wordlen", "Breadth-first word length over a restricted alphabet");
    wordlen->add_option("--perm", perm_doc, "EndPerm JSON file or inline document")->required();
    wordlen->add_option("--support-bound", search.support_bound, "Nu letters live in [-W, W]")
        ->check(CLI::Range(1, 6));
    wordlen->add_option("--depth", search.depth_bound, "Longest word tried");
    wordlen->callback([&] {
      action = [&] {
        const auto p = io::end_perm_from_json(load_document(perm_doc));
        const auto len = word_length_oracle(p, search);
        const auto lower = crossing_norm(p);
        if (!len) {
          ctx.emit(json{{"decided", false}, {"lower_bound", lower}, {"depth", search.depth_bound}},
                   "undecided: no word of length <= " + std::to_string(search.depth_bound) +
                       " (crossing norm " + std::to_string(lower) + ")");
          return kUndecided;
        }
        ctx.emit(json{{"decided", true}, {"length", *len}, {"lower_bound", lower}},
                 std::to_string(*len));
        return kOk;
      };
    });
  }

  // ---- hom ----
  auto* hom = group("hom", "Homology norm on graded GF(2) automorphisms");
  std::string aut_doc, hull_text;
  SplitSpec split;
  std::int64_t shift_n = 1;
  std::size_t block_dim = 2;
  {
    auto* norm = leaf(hom, "norm", "Homology norm of an automorphism");
    norm->add_option("--aut", aut_doc, "GradedAut JSON file or inline document")->required();
    norm->add_option("--extra-minus", split.extra_minus, "Fixed coordinates on the minus side");
    norm->add_option("--extra-plus", split.extra_plus, "Fixed coordinates on the plus side");
    norm->add_option("--hull", hull_text, "Block hull lo,hi (default: the smallest valid)");
    norm->callback([&] {
      action = [&] {
        const auto g = io::graded_aut_from_json(load_document(aut_doc));
        BlockRange hull = minimal_hull(g);
        if (!hull_text.empty()) {
          const auto v = parse_int_list(hull_text, "--hull");
          if (v.size() != 2) throw io::FormatError("--hull: expected lo,hi");
          hull = BlockRange{v[0], v[1]};
        }
        const auto value = homology_norm(g, split, hull);
        ctx.emit(json{{"homology_norm", value}}, std::to_string(value));
        return kOk;
      };
    });

    auto* shiftnorm = leaf(hom, "shiftnorm", "Homology norm of the n-th block shift");
    shiftnorm->add_option("--n", shift_n, "Shift amount")->required();
    shiftnorm->add_option("--block-dim", block_dim, "Dimension of each block")
        ->check(CLI::Range(1, 64));
    shiftnorm->callback([&] {
      action = [&] {
        const auto value = homology_norm(graded_shift(shift_n, block_dim));
        ctx.emit(json{{"homology_norm", value}}, std::to_string(value));
        return kOk;
      };
    });
  }

  // ---- ends ----
  auto* ends_cmd = group("ends", "End-space tables and essential shifts");
  std::string table_doc, builtin_name, shift_doc;
  auto table_options = [&](CLI::App* sub) {
    auto* t = sub->add_option("--table", table_doc, "EndClassTable JSON file or inline document");
    auto* b = sub->add_option("--builtin", builtin_name, "Name of a curated table");
    t->excludes(b);
    b->excludes(t);
  };
  auto need_table = [&] {
    if (table_doc.empty() && builtin_name.empty()) {
      throw io::FormatError("one of --table or --builtin is required");
    }
  };
  {
    auto* validate = leaf(ends_cmd, "validate", "Check a table against its invariants");
    validate->add_option("--table", table_doc, "EndClassTable JSON file or inline document")
        ->required();
    validate->callback([&] {
      action = [&] {
        const auto t = io::table_from_json(load_document(table_doc));
        const auto report = ends::validate_table(t);
        std::string human = report.ok() ? "valid" : "invalid";
        for (const auto& v : report.violations) human += "\n" + v.rule + ": " + v.detail;
        ctx.emit(io::to_json(report), human);
        return report.ok() ? kOk : kInvalid;
      };
    });

    auto* essential = leaf(ends_cmd, "essential", "Does the surface carry an essential shift");
    table_options(essential);
    essential->callback([&] {
      action = [&] {
        need_table();
        const auto v = ends::has_essential_shift(table_arg(table_doc, builtin_name));
        std::string human = v.two_sided ? "essential shift exists" : "no essential shift";
        if (v.witness) human += "\n" + render(*v.witness);
        if (v.cantor_edge_decisive) human += "\nnote: relies on the shared Cantor class rule";
        ctx.emit(io::to_json(v), human);
        return kOk;
      };
    });

    auto* classify = leaf(ends_cmd, "classify", "Is a given shift essential");
    table_options(classify);
    classify->add_option("--shift", shift_doc, "ShiftDescriptor JSON file or inline document")
        ->required();
    classify->callback([&] {
      action = [&] {
        need_table();
        const auto t = table_arg(table_doc, builtin_name);
        const auto s = io::descriptor_from_json(load_document(shift_doc));
        const auto v = ends::classify_shift(t, s);
        std::string human = v.essential ? "essential" : "not essential";
        for (const auto& r : v.reasons) human += "\n" + render(r);
        if (v.cantor_edge_decisive) human += "\nnote: relies on the shared Cantor class rule";
        ctx.emit(io::to_json(v), human);
        return kOk;
      };
    });

    auto* builtin = leaf(ends_cmd, "builtin", "Print a curated table, or list them");
    builtin->add_option("--name", builtin_name, "Table name; omit to list");
    builtin->callback([&] {
      action = [&] {
        if (builtin_name.empty()) {
          std::string human;
          for (const auto& n : ends::builtin_names()) human += n + "\n";
          ctx.emit(json(ends::builtin_names()), human);
          return kOk;
        }
        const auto t = ends::compile_builtin(builtin_name);
        ctx.emit(io::to_json(t), io::to_json(t).dump(2));
        return kOk;
      };
    });
  }

  // ---- repro ----
  auto* repro_cmd = group("repro", "Reproduction checks");
  std::uint64_t seed = repro::seed_from_env();
  bool serial = false;
  {
    auto* all = leaf(repro_cmd, "all", "Run every check and print a pass/fail table");
    all->add_option("--seed", seed, "Random seed");
    all->add_flag("--serial", serial, "Run the checks one after another");
    all->callback([&] {
      action = [&] {
        const auto results = repro::run_all(seed, !serial);
        bool ok = true;
        json rows = json::array();
        std::ostringstream s;
        s << "seed " << seed << "\n";
        for (const auto& r : results) {
          ok = ok && r.passed;
          rows.push_back(json{{"id", r.id},
                              {"name", r.name},
                              {"passed", r.passed},
                              {"seconds", r.seconds},
                              {"budget_seconds", r.budget_seconds},
                              {"detail", r.detail}});
          s << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << std::left << std::setw(52)
            << r.name << std::right << std::fixed << std::setprecision(3) << std::setw(8)
            << r.seconds << " s  " << r.detail << "\n";
        }
        ctx.emit(json{{"seed", seed}, {"all_passed", ok}, {"checks", rows}}, s.str());
        return ok ? kOk : kInvalid;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  if (!action) {
    err << "error: no command given\n";
    return kInvalid;
  }
  try {
    return action();
  } catch (const io::FormatError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInvalid;
}

}  // namespace bigmap::cli
