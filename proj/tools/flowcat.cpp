#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "flowcat/harness.hpp"
#include "flowcat/io.hpp"
#include "flowcat/migration.hpp"

using namespace flowcat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

void write_file(const std::string& dir, const std::string& file,
                const std::string& body) {
  std::string path = dir.empty() ? file : dir + "/" + file;
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write " + path);
  out << body;
  std::cout << "wrote " << path << "\n";
}

Workspace load_all(const std::vector<std::string>& paths) {
  Workspace ws;
  for (const auto& p : paths) ws.load_file(p);
  return ws;
}

int print_report(const ExactnessReport& rep, bool structured) {
  bool failed = false;
  if (structured) {
    json records = json::array();
    for (const auto& v : rep.verdicts) {
      records.push_back({{"square", rep.square_id},
                         {"sample", v.sample},
                         {"direction", std::string(1, v.direction)},
                         {"iso", v.iso},
                         {"witness", v.witness}});
      if (!v.iso) failed = true;
    }
    json out = {{"square", rep.square_id},
                {"refused", rep.refused},
                {"refusal", rep.refusal},
                {"records", records},
                {"notices", rep.notices}};
    std::cout << out.dump(2) << "\n";
  } else {
    if (rep.refused) {
      std::cout << rep.square_id << ": refused (" << rep.refusal << ")\n";
    } else {
      for (const auto& v : rep.verdicts) {
        std::cout << rep.square_id << " sample " << v.sample << " "
                  << v.direction << ": " << (v.iso ? "iso" : "NOT iso");
        if (!v.iso) std::cout << " (" << v.witness << ")";
        std::cout << "\n";
        if (!v.iso) failed = true;
      }
      for (const auto& n : rep.notices) std::cout << "note: " << n << "\n";
    }
  }
  if (rep.refused) return kExitInput;
  return failed ? kExitVerification : kExitOk;
}

int print_checks(const std::vector<CheckResult>& results, bool structured) {
  bool failed = false;
  for (const auto& r : results) {
    if (structured) {
      json rec = {{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}};
      std::cout << rec.dump() << "\n";
    } else {
      std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": "
                << r.detail << "\n";
    }
    if (!r.pass) failed = true;
  }
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category flow constructions and base-change verification"};
  app.require_subcommand(1);

  std::vector<std::string> load_paths;
  std::string out_dir = ".";
  std::string result_name = "result";
  uint64_t seed = 7;
  int samples = 20;
  int squares = 20;
  int max_objects = 3;
  int max_edges = 4;
  std::string direction = "both";
  bool structured = false;

  auto* validate_cmd = app.add_subcommand("validate", "parse and law-check files");
  std::vector<std::string> validate_paths;
  validate_cmd->add_option("files", validate_paths)->required();

  auto* construct_cmd = app.add_subcommand("construct", "build a flow construction");
  std::string kind;
  std::vector<std::string> construct_args;
  construct_cmd->add_option("kind", kind)->required()->check(CLI::IsMember(
      {"flow-product", "flow-sum", "fiber", "flow-to", "flow-from",
       "fibre-product", "compose-spans"}));
  construct_cmd->add_option("args", construct_args);
  construct_cmd->add_option("--load", load_paths);
  construct_cmd->add_option("--out", out_dir);
  construct_cmd->add_option("--name", result_name);

  auto* kan_cmd = app.add_subcommand("kan", "left or right Kan extension");
  std::string kan_direction, kan_functor, kan_setfun;
  kan_cmd->add_option("direction", kan_direction)
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  kan_cmd->add_option("functor", kan_functor)->required();
  kan_cmd->add_option("setfunctor", kan_setfun)->required();
  kan_cmd->add_option("--load", load_paths);
  kan_cmd->add_option("--out", out_dir);
  kan_cmd->add_option("--name", result_name);

  auto* check_cmd = app.add_subcommand("check", "run verifications");
  std::string what;
  std::vector<std::string> check_args;
  check_cmd->add_option("what", what)->required()->check(CLI::IsMember(
      {"base-change", "pasting", "opfib", "cofinal", "exact-suite", "adjunction"}));
  check_cmd->add_option("args", check_args);
  check_cmd->add_option("--load", load_paths);
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--samples", samples);
  check_cmd->add_option("--squares", squares);
  check_cmd->add_option("--direction", direction)
      ->check(CLI::IsMember({"left", "right", "both"}));
  check_cmd->add_flag("--format-structured,--format", structured,
                      "machine-readable records");

  auto* random_cmd = app.add_subcommand("random", "emit seeded random entities");
  std::string random_kind;
  random_cmd->add_option("kind", random_kind)
      ->required()
      ->check(CLI::IsMember({"category", "functor", "setfunctor", "cospan", "span"}));
  random_cmd->add_option("--seed", seed);
  random_cmd->add_option("--max-objects", max_objects)->check(CLI::PositiveNumber);
  random_cmd->add_option("--max-edges", max_edges)->check(CLI::NonNegativeNumber);
  random_cmd->add_option("--out", out_dir);
  random_cmd->add_option("--name", result_name);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) {
      Workspace ws;
      bool invalid = false;
      for (const auto& p : validate_paths) {
        try {
          ws.load_file(p);
          std::cout << p << ": ok\n";
        } catch (const ParseError& e) {
          std::cerr << e.what() << "\n";
          return kExitInput;
        } catch (const StructuralError& e) {
          std::cout << p << ": INVALID\n" << e.what() << "\n";
          invalid = true;
        }
      }
      return invalid ? kExitVerification : kExitOk;
    }

    if (*construct_cmd) {
      Workspace ws = load_all(load_paths);
      auto need = [&](size_t n) {
        if (construct_args.size() != n)
          throw StructuralError(kind + " expects " + std::to_string(n) +
                                " argument(s)");
      };
      auto cat_display_name = [&](const CatPtr& p, const FinCategory& fresh) {
        if (same_category(*p, fresh)) return result_name;
        for (const auto& [nm, ptr] : ws.categories)
          if (ptr.get() == p.get() || same_category(*ptr, *p)) return nm;
        throw StructuralError("category not in workspace");
      };
      auto emit_cat_and = [&](const FinCategory& c,
                              const std::vector<std::pair<std::string, CatFunctor>>&
                                  fns) {
        std::cout << result_name << ": " << c.num_objects() << " objects, "
                  << c.num_morphisms() << " morphisms\n";
        FinCategory named = c;
        named.name = result_name;
        write_file(out_dir, result_name + ".fincat", emit_fincat(named));
        for (const auto& [fname, fn] : fns)
          write_file(out_dir, fname + ".catfun",
                     emit_catfun(fn, fname, cat_display_name(fn.src, c),
                                 cat_display_name(fn.tgt, c)));
      };

      if (kind == "flow-product" || kind == "fibre-product") {
        need(2);
        const CatFunctor& f = ws.functor(construct_args[0]);
        const CatFunctor& g = ws.functor(construct_args[1]);
        if (kind == "flow-product") {
          FlowProduct fp = flow_product(f, g);
          emit_cat_and(*fp.cat, {{result_name + "_proj_b", fp.proj_b},
                                 {result_name + "_proj_c", fp.proj_c}});
        } else {
          FibreProduct fb = fibre_product(f, g);
          emit_cat_and(*fb.cat,
                       {{result_name + "_proj_b",
                         compose_functors(fb.ambient.proj_b, fb.inclusion)},
                        {result_name + "_proj_c",
                         compose_functors(fb.ambient.proj_c, fb.inclusion)}});
        }
      } else if (kind == "flow-sum") {
        need(2);
        FlowSum fs =
            flow_sum(ws.functor(construct_args[0]), ws.functor(construct_args[1]));
        emit_cat_and(*fs.cat, {{result_name + "_incl_b", fs.incl_b},
                               {result_name + "_incl_c", fs.incl_c}});
      } else if (kind == "fiber" || kind == "flow-to" || kind == "flow-from") {
        need(2);
        const CatFunctor& f = ws.functor(construct_args[0]);
        int d = f.tgt->require_object(construct_args[1]);
        if (kind == "fiber") {
          Fiber fib = fiber(f, d);
          emit_cat_and(*fib.cat, {{result_name + "_incl", fib.include_in_source}});
        } else {
          FlowTo ft = kind == "flow-to" ? flow_to(f, d) : flow_from(f, d);
          emit_cat_and(*ft.cat, {{result_name + "_proj", ft.proj}});
        }
      } else {  // compose-spans
        need(4);
        Span sp1{ws.functor(construct_args[0]), ws.functor(construct_args[1])};
        Span sp2{ws.functor(construct_args[2]), ws.functor(construct_args[3])};
        SpanComposition comp = span_compose(sp1, sp2);
        emit_cat_and(*comp.middle.cat,
                     {{result_name + "_left", comp.span.left_leg},
                      {result_name + "_right", comp.span.right_leg}});
      }
      return kExitOk;
    }

    if (*kan_cmd) {
      Workspace ws = load_all(load_paths);
      const CatFunctor& f = ws.functor(kan_functor);
      const SetFunctor& F = ws.setfunctor(kan_setfun);
      SetFunctor out = kan_direction == "left" ? left_kan(f, F).result
                                               : right_kan(f, F).result;
      std::string tgt_name;
      for (const auto& [nm, ptr] : ws.categories)
        if (ptr.get() == f.tgt.get()) tgt_name = nm;
      write_file(out_dir, result_name + ".setfun",
                 emit_setfun(out, result_name, tgt_name));
      return kExitOk;
    }

    if (*check_cmd) {
      Direction dir = direction == "left"    ? Direction::Left
                      : direction == "right" ? Direction::Right
                                             : Direction::Both;
      if (what == "exact-suite") {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.squares = squares;
        cfg.samples = samples;
        cfg.corpus_paths = load_paths;
        return print_checks(run_acceptance_suite(cfg), structured);
      }
      if (what == "adjunction")
        return print_checks({check_adjunction_oracle(seed, samples)}, structured);
      Workspace ws = load_all(load_paths);
      if (what == "opfib") {
        if (check_args.size() != 1)
          throw StructuralError("opfib expects one functor name");
        OpfibrationWitness w = is_opfibration(ws.functor(check_args[0]));
        std::cout << (w.ok ? "true" : "false") << "\n";
        if (!w.ok)
          std::cout << "no cocartesian lift at object "
                    << w.fail_object << " morphism " << w.fail_morphism << "\n";
        return w.ok ? kExitOk : kExitVerification;
      }
      if (what == "cofinal") {
        if (check_args.size() != 1)
          throw StructuralError("cofinal expects one functor name");
        const CatFunctor& f = ws.functor(check_args[0]);
        CofinalityWitness w = is_cofinal(f);
        std::cout << (w.ok ? "true" : "false") << "\n";
        if (!w.ok)
          for (size_t d = 0; d < w.component_counts.size(); ++d)
            if (w.component_counts[d] != 1)
              std::cout << "coslice at " << f.tgt->objects[d] << " has "
                        << w.component_counts[d] << " zigzag components\n";
        return w.ok ? kExitOk : kExitVerification;
      }
      if (what == "pasting") {
        if (check_args.size() != 3)
          throw StructuralError("pasting expects left square, right square, sample");
        bool good = check_pasting_lemma(ws.square(check_args[0]),
                                        ws.square(check_args[1]),
                                        ws.setfunctor(check_args[2]));
        std::cout << (good ? "true" : "false") << "\n";
        return good ? kExitOk : kExitVerification;
      }
      // base-change: square name then sample setfunctor names
      if (check_args.empty())
        throw StructuralError("base-change expects a square name");
      std::vector<SetFunctor> pool;
      for (size_t i = 1; i < check_args.size(); ++i)
        pool.push_back(ws.setfunctor(check_args[i]));
      ExactnessReport rep =
          verify_square(ws.square(check_args[0]), check_args[0], pool, dir);
      return print_report(rep, structured);
    }

    if (*random_cmd) {
      Rng rng(seed);
      if (random_kind == "category") {
        FreeCat fc = random_free_category(rng, max_objects, max_edges);
        FinCategory named = *fc.cat;
        named.name = result_name;
        write_file(out_dir, result_name + ".fincat", emit_fincat(named));
      } else if (random_kind == "functor" || random_kind == "setfunctor") {
        FreeCat a = random_free_category(rng, max_objects, max_edges);
        FinCategory named = *a.cat;
        named.name = result_name + "_src";
        write_file(out_dir, named.name + ".fincat", emit_fincat(named));
        if (random_kind == "functor") {
          FreeCat b = random_free_category(rng, max_objects, max_edges);
          FinCategory namedb = *b.cat;
          namedb.name = result_name + "_tgt";
          write_file(out_dir, namedb.name + ".fincat", emit_fincat(namedb));
          write_file(out_dir, result_name + ".catfun",
                     emit_catfun(random_functor(rng, a, b.cat), result_name,
                                 named.name, namedb.name));
        } else {
          write_file(out_dir, result_name + ".setfun",
                     emit_setfun(random_setfunctor(rng, a), result_name,
                                 named.name));
        }
      } else {  // cospan or span
        bool cospan = random_kind == "cospan";
        auto emit_named = [&](const FreeCat& fc, const std::string& suffix) {
          FinCategory named = *fc.cat;
          named.name = result_name + "_" + suffix;
          write_file(out_dir, named.name + ".fincat", emit_fincat(named));
          return named.name;
        };
        if (cospan) {
          RandomCospan cs = random_cospan(rng, max_objects, max_edges);
          std::string bn = emit_named(cs.b, "b");
          std::string cn = emit_named(cs.c, "c");
          std::string dn = emit_named(cs.d, "d");
          write_file(out_dir, result_name + "_f.catfun",
                     emit_catfun(cs.f, result_name + "_f", bn, dn));
          write_file(out_dir, result_name + "_g.catfun",
                     emit_catfun(cs.g, result_name + "_g", cn, dn));
        } else {
          RandomSpan rs = random_span(rng, max_objects, max_edges);
          std::string an = emit_named(rs.a, "a");
          std::string bn = emit_named(rs.b, "b");
          std::string cn = emit_named(rs.c, "c");
          write_file(out_dir, result_name + "_s.catfun",
                     emit_catfun(rs.s, result_name + "_s", an, bn));
          write_file(out_dir, result_name + "_t.catfun",
                     emit_catfun(rs.t, result_name + "_t", an, cn));
        }
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitInput;
  } catch (const StructuralError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
