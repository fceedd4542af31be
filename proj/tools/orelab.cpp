/*
   Copyright 2026 The Orelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line calculator and suite runner for skew polynomial arithmetic.
//
//   orelab eval --ring "Poly(Z,y)" --sigma id --delta d_dy "x*y - y*x"
//   orelab suite all --json report.json
//   orelab finiteness direct --ring "M2(Z/2)"
//   orelab demo ex116
//   orelab map --ring "Poly(Z,y)" --matrix "[[1, y]]" kernel --degree 1
//
// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "orelab/eval.hpp"
#include "orelab/finiteness.hpp"
#include "orelab/module_map.hpp"
#include "orelab/ring_factory.hpp"
#include "orelab/suites.hpp"

namespace {

std::uint64_t env_budget() {
  const char* raw = std::getenv("ORELAB_BUDGET");
  if (!raw) return 1000000;
  return std::strtoull(raw, nullptr, 10);
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw orelab::Error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

// Splits "[[e, e], [e, e]]" into entry strings; entries are parsed with the
// expression grammar afterwards.
std::vector<std::vector<std::string>> split_matrix_literal(
    const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  int depth = 0;
  std::vector<std::string> row;
  std::string entry;
  bool in_rows = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[' || c == '(' || c == '{') ++depth;
    if (c == ']' || c == ')' || c == '}') --depth;
    if (c == '[' && depth == 1) {
      in_rows = true;
      continue;
    }
    if (c == '[' && depth == 2) {
      row.clear();
      entry.clear();
      continue;
    }
    if (c == ']' && depth == 1) {
      row.push_back(entry);
      rows.push_back(row);
      entry.clear();
      continue;
    }
    if (c == ']' && depth == 0) break;
    if (c == ',' && depth == 2) {
      row.push_back(entry);
      entry.clear();
      continue;
    }
    if (c == ',' && depth == 1) continue;
    if (in_rows && depth >= 2) entry.push_back(c);
  }
  if (rows.empty()) throw orelab::ParseError("empty matrix literal", 0);
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw orelab::ParseError("ragged matrix literal", 0);
  return rows;
}

int run_eval(const std::string& ring, const std::string& sigma,
             const std::string& delta, unsigned prec, std::uint64_t seed,
             const std::string& expr_text, const std::string& json_path) {
  orelab::EvalContext ctx =
      orelab::make_context(ring, sigma, delta, prec, seed);
  orelab::AstPtr ast = orelab::parse_expression(expr_text);
  orelab::Value v = orelab::eval_expression(ast, ctx);
  std::cout << orelab::value_show(v) << '\n';
  if (!json_path.empty()) write_json(json_path, orelab::value_to_json(v));
  return 0;
}

int run_suites(const std::string& name, const orelab::SuiteParams& params,
               const std::string& json_path) {
  bool all_pass = true;
  nlohmann::json out;
  if (name == "all") {
    nlohmann::json suites = nlohmann::json::array();
    for (const auto& s : orelab::suite_names()) {
      orelab::Report r = orelab::run_suite(s, params);
      all_pass = all_pass && r.passed();
      std::cout << r.pretty();
      suites.push_back(r.to_json());
    }
    out = nlohmann::json{{"suites", suites},
                         {"overall", all_pass ? "pass" : "fail"}};
  } else {
    orelab::Report r = orelab::run_suite(name, params);
    all_pass = r.passed();
    std::cout << r.pretty();
    out = r.to_json();
  }
  if (!json_path.empty()) write_json(json_path, out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew polynomial / skew power series calculator"};
  app.require_subcommand(1);

  // ---- eval ----
  std::string ev_ring, ev_sigma, ev_delta, ev_expr, ev_json;
  unsigned ev_prec = 8;
  std::uint64_t ev_seed = 0;
  auto* ev = app.add_subcommand("eval", "evaluate an expression");
  ev->add_option("--ring", ev_ring, "ring descriptor")->required();
  ev->add_option("--sigma", ev_sigma, "twist endomorphism name");
  ev->add_option("--delta", ev_delta, "sigma-derivation name");
  ev->add_option("--prec", ev_prec, "precision for theta/series");
  ev->add_option("--seed", ev_seed, "seed for seeded morphisms");
  ev->add_option("--json", ev_json, "write the value as JSON to this path");
  ev->add_option("expr", ev_expr, "expression")->required();

  // ---- suite ----
  std::string su_name, su_base, su_json;
  orelab::SuiteParams su_params;
  unsigned su_window = 0, su_prec = 0, su_count = 0;
  std::uint64_t su_seed = 0;
  bool su_seed_set = false;
  auto* su = app.add_subcommand("suite", "run a verification suite");
  su->add_option("name", su_name, "suite name or 'all'")->required();
  auto* su_w = su->add_option("--window", su_window, "comparison window");
  auto* su_p = su->add_option("--prec", su_prec, "series precision");
  auto* su_c = su->add_option("--count", su_count, "sample count");
  su->add_option("--seed", su_seed, "sampler seed")
      ->each([&](const std::string&) { su_seed_set = true; });
  su->add_option("--base", su_base, "base ring descriptor override");
  su->add_option("--json", su_json, "write the report JSON to this path");

  // ---- finiteness ----
  std::string fin_ring;
  unsigned fin_upto = 2;
  std::uint64_t fin_budget = env_budget();
  auto* fin = app.add_subcommand("finiteness", "finiteness scans");
  auto* fin_direct = fin->add_subcommand("direct", "direct finiteness scan");
  fin_direct->add_option("--ring", fin_ring, "ring descriptor")->required();
  fin_direct->add_option("--budget", fin_budget, "pair budget");
  auto* fin_stable = fin->add_subcommand("stable", "stable finiteness scan");
  fin_stable->add_option("--ring", fin_ring, "ring descriptor")->required();
  fin_stable->add_option("--upto", fin_upto, "matrix sizes 1..n")->required();
  fin_stable->add_option("--budget", fin_budget, "pair budget");
  fin->require_subcommand(1);

  // ---- demo ----
  std::string demo_ring = "Z/4", demo_sigma = "id";
  unsigned demo_prec = 8;
  auto* demo = app.add_subcommand("demo", "worked demonstrations");
  auto* demo_ex116 =
      demo->add_subcommand("ex116", "one-sided inverse in an Ore extension");
  auto* demo_thm04 =
      demo->add_subcommand("thm04", "inverse transport in truncated series");
  demo_thm04->add_option("--ring", demo_ring, "base ring descriptor");
  demo_thm04->add_option("--sigma", demo_sigma, "twist name");
  demo_thm04->add_option("--prec", demo_prec, "precision");
  demo->require_subcommand(1);

  // ---- map ----
  std::string map_ring, map_sigma, map_delta, map_side = "right", map_matrix;
  std::string map_action, map_kind;
  unsigned map_degree = 0, map_n = 1, map_m = 1;
  std::uint64_t map_budget = env_budget(), map_seed = 0;
  auto* mp = app.add_subcommand("map", "module-map oracles");
  mp->add_option("--ring", map_ring, "ring descriptor")->required();
  mp->add_option("--sigma", map_sigma, "twist name (Ore entries)");
  mp->add_option("--delta", map_delta, "derivation name (Ore entries)");
  mp->add_option("--side", map_side, "left|right")
      ->check(CLI::IsMember({"left", "right"}));
  mp->add_option("--matrix", map_matrix, "matrix literal [[...],[...]]");
  mp->add_option("--budget", map_budget, "evaluation budget");
  mp->add_option("--seed", map_seed, "seed for randomized search");
  auto* mp_check = mp->add_subcommand("check", "decide inj|surj by brute force");
  mp_check->add_option("what", map_action, "inj|surj")
      ->required()
      ->check(CLI::IsMember({"inj", "surj"}));
  auto* mp_search = mp->add_subcommand("search", "search for mono|epi n -> m");
  mp_search->add_option("what", map_kind, "mono|epi")
      ->required()
      ->check(CLI::IsMember({"mono", "epi"}));
  mp_search->add_option("n", map_n, "source power")->required();
  mp_search->add_option("m", map_m, "target power")->required();
  auto* mp_kernel =
      mp->add_subcommand("kernel", "bounded-degree kernel over Poly(Z,y)");
  mp_kernel->add_option("--degree", map_degree, "degree bound")->required();
  mp->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ev)
      return run_eval(ev_ring, ev_sigma, ev_delta, ev_prec, ev_seed, ev_expr,
                      ev_json);

    if (*su) {
      if (*su_w) su_params.window = su_window;
      if (*su_p) su_params.precision = su_prec;
      if (*su_c) su_params.count = su_count;
      if (su_seed_set) su_params.seed = su_seed;
      if (!su_base.empty()) su_params.base = su_base;
      su_params.budget = env_budget();
      return run_suites(su_name, su_params, su_json);
    }

    if (*fin) {
      orelab::RingPtr ring = orelab::make_ring(fin_ring);
      orelab::FinitenessReport rep =
          *fin_direct ? orelab::directly_finite_brute(ring, fin_budget)
                      : orelab::stably_finite_upto(ring, fin_upto, fin_budget);
      std::cout << rep.pretty() << '\n';
      return rep.verdict == orelab::Verdict::Holds ? 0 : 1;
    }

    if (*demo) {
      orelab::Report rep;
      if (*demo_ex116) {
        rep = orelab::ex116_demo();
      } else {
        orelab::RingPtr base = orelab::make_ring(demo_ring);
        orelab::EndoMap sigma = orelab::builtin_endo(demo_sigma, base);
        bool df = true;
        if (base->caps().enumerable)
          df = orelab::directly_finite_brute(base, env_budget()).holds();
        rep = orelab::skew_poly_finiteness_demo(base, sigma, demo_prec, df);
      }
      std::cout << rep.pretty();
      return rep.passed() ? 0 : 1;
    }

    if (*mp) {
      orelab::EvalContext ctx = orelab::make_context(
          map_ring, map_sigma, map_delta, 8, map_seed);
      orelab::RingPtr map_ring_handle =
          ctx.ore ? orelab::ore_extension_ring(ctx.ore) : ctx.ring;
      orelab::Side side =
          map_side == "left" ? orelab::Side::Left : orelab::Side::Right;

      if (*mp_search) {
        orelab::SearchResult res =
            map_kind == "mono"
                ? orelab::search_mono(map_ring_handle, map_n, map_m, side,
                                      map_budget, map_seed)
                : orelab::search_epi(map_ring_handle, map_n, map_m, side,
                                     map_budget, map_seed);
        switch (res.outcome) {
          case orelab::SearchOutcome::Found: {
            std::cout << "found after " << res.candidates_examined
                      << " candidates; matrix:\n";
            const orelab::ModuleMap& f = *res.witness;
            for (unsigned i = 0; i < f.rows(); ++i) {
              for (unsigned j = 0; j < f.cols(); ++j)
                std::cout << (j ? ", " : "[")
                          << map_ring_handle->show(f.at(i, j));
              std::cout << "]\n";
            }
            return 0;
          }
          case orelab::SearchOutcome::NoneDefinitive:
            std::cout << "none (definitive; " << res.candidates_examined
                      << " candidates examined)\n";
            return 0;
          case orelab::SearchOutcome::NoneWithinBudget:
            std::cout << "none found within budget ("
                      << res.candidates_examined << " random candidates)\n";
            return 0;
        }
      }

      // check and kernel need the matrix literal
      if (map_matrix.empty())
        throw orelab::Error("--matrix is required for check/kernel");
      auto rows = split_matrix_literal(map_matrix);
      std::vector<orelab::Elem> entries;
      for (const auto& row : rows)
        for (const auto& cell : row) {
          orelab::Value v =
              orelab::eval_expression(orelab::parse_expression(cell), ctx);
          if (ctx.ore) {
            if (v.kind == orelab::Value::Kind::Ring)
              entries.push_back(orelab::ore_elem(
                  map_ring_handle,
                  orelab::OrePoly::constant(ctx.ore, v.elem)));
            else if (v.kind == orelab::Value::Kind::Ore)
              entries.push_back(orelab::ore_elem(map_ring_handle, v.poly));
            else
              throw orelab::Error("matrix entries must be ring values");
          } else {
            if (v.kind != orelab::Value::Kind::Ring)
              throw orelab::Error("matrix entries must be ring values");
            entries.push_back(v.elem);
          }
        }
      orelab::ModuleMap f(map_ring_handle,
                          static_cast<unsigned>(rows.size()),
                          static_cast<unsigned>(rows.front().size()),
                          std::move(entries), side);

      if (*mp_check) {
        if (map_action == "inj") {
          orelab::InjectivityResult r = orelab::brute_injective(f, map_budget);
          std::cout << (r.injective ? "injective" : "not injective") << " ("
                    << r.evaluations << " evaluations)\n";
          if (r.collision) {
            std::cout << "collision: ";
            for (const auto& e : r.collision->first)
              std::cout << map_ring_handle->show(e) << " ";
            std::cout << "vs ";
            for (const auto& e : r.collision->second)
              std::cout << map_ring_handle->show(e) << " ";
            std::cout << '\n';
          }
        } else {
          orelab::SurjectivityResult r =
              orelab::brute_surjective(f, map_budget);
          std::cout << (r.surjective ? "surjective" : "not surjective")
                    << " (" << r.evaluations << " evaluations)\n";
          if (r.unreached) {
            std::cout << "unreached target: ";
            for (const auto& e : *r.unreached)
              std::cout << map_ring_handle->show(e) << " ";
            std::cout << '\n';
          }
        }
        return 0;
      }

      if (*mp_kernel) {
        auto basis = orelab::bounded_degree_kernel(f, map_degree);
        std::cout << "kernel basis (" << basis.size() << " vectors):\n";
        for (const auto& vec : basis) {
          std::cout << "  (";
          for (std::size_t i = 0; i < vec.size(); ++i)
            std::cout << (i ? ", " : "")
                      << map_ring_handle->show(vec[i]);
          std::cout << ")\n";
        }
        return 0;
      }
    }
  } catch (const orelab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const orelab::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
