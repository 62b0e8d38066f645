#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hassett/admissible.hpp"
#include "hassett/io.hpp"
#include "hassett/kapranov.hpp"
#include "hassett/moduli.hpp"
#include "hassett/weights.hpp"

namespace hassett::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kInputError = 2 };

namespace detail {

inline std::string read_source(const std::string& spec, std::istream& in) {
  if (spec == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return spec;
  std::ifstream file(spec);
  if (!file) throw Error(ErrorCode::syntax, "cannot open '" + spec + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline bool is_scalar_list(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

inline std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

inline std::string inline_list(const json& j) {
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k) s += (k ? "," : "") + scalar_text(j[k]);
  return s + "}";
}

// Text output is a rendering of the JSON payload, so both formats carry the
// same information.
inline void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto render_value = [&](const json& v) {
    if (v.is_primitive()) {
      out << ' ' << scalar_text(v) << '\n';
    } else if (v.is_array() && is_scalar_list(v)) {
      out << ' ' << inline_list(v) << '\n';
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_array() && is_scalar_list(e); })) {
      std::string line;
      for (const auto& e : v) line += (line.empty() ? "" : " ") + inline_list(e);
      out << ' ' << (line.empty() ? "(none)" : line) << '\n';
    } else {
      out << '\n';
      render_text(v, out, indent + 2);
    }
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      out << pad << key << ':';
      render_value(value);
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      out << pad << "-";
      if (e.is_object()) {
        out << '\n';
        render_text(e, out, indent + 2);
      } else {
        render_value(e);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

inline IndexSet pair_set(int i, int j) { return i < j ? IndexSet{i, j} : IndexSet{j, i}; }

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of weighted pointed stable curve moduli spaces", "hassett"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::string input, target, subset_text, perm_text;
  std::vector<int> drop, keep, subset, align;
  int n = 0, r = 0, s = 0, i = 0, j = 0, min_size = 3;
  bool list = false;

  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", input, "Weight data: file, inline JSON, or - for stdin")->required(); };
  auto add_to = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--to", target, "Second weight data document");
    if (required) opt->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate weight data");
  add_in(validate);
  auto* coincide = app.add_subcommand("coincide", "Can the markings in a subset coincide");
  add_in(coincide);
  coincide->add_option("--subset,--keep", subset, "Indices, comma separated")->delimiter(',')->required();
  auto* sig = app.add_subcommand("signature", "Subsets of size >= min-size with weight sum <= 1");
  add_in(sig);
  sig->add_option("--min-size", min_size, "Smallest subset size")->capture_default_str();
  auto* adm = app.add_subcommand("admissible", "Admissible transpositions");
  add_in(adm);
  auto* adm_i = adm->add_option("--i", i, "First marking");
  adm->add_option("--j", j, "Second marking")->needs(adm_i);
  adm_i->needs("--j");
  auto* group = app.add_subcommand("group", "Group generated by admissible transpositions");
  add_in(group);
  group->add_option("--perm", perm_text, "Membership test for a permutation in cycle notation");
  auto* oracle = app.add_subcommand("oracle", "Exhaustive signature-preserving permutations (n <= 8)");
  add_in(oracle);
  auto* forget = app.add_subcommand("forgetful", "Existence of a forgetful morphism");
  add_in(forget);
  auto* forget_drop = forget->add_option("--drop", drop, "Markings to forget")->delimiter(',');
  auto* forget_keep = forget->add_option("--keep", keep, "Markings to keep")->delimiter(',');
  forget_drop->excludes(forget_keep);
  auto* reduce = app.add_subcommand("reduce", "Existence of a reduction morphism to --to");
  add_in(reduce);
  add_to(reduce, true);
  auto* contracted = app.add_subcommand("contracted", "Rational tails contracted by the reduction to --to");
  add_in(contracted);
  add_to(contracted, true);
  auto* equiv = app.add_subcommand("equivalent", "Compare size-3 signatures of two weight data");
  add_in(equiv);
  add_to(equiv, false);
  equiv->add_option("--align", align, "Image of each index of --in in --to (default identity)")->delimiter(',');
  auto* eq_i = equiv->add_option("--i", i, "Compare the reductions forgetting i and j");
  equiv->add_option("--j", j)->needs(eq_i);
  auto* boundary = app.add_subcommand("boundary", "Boundary divisors");
  add_in(boundary);
  auto* aut = app.add_subcommand("aut", "Automorphisms of the coarse space (g >= 1)");
  add_in(aut);
  auto* aut_stack = app.add_subcommand("aut-stack", "Automorphisms of the stack (g >= 1)");
  add_in(aut_stack);
  auto* kap = app.add_subcommand("kapranov", "Kapranov blow-up tower");
  kap->add_option("--n", n, "Number of markings")->required();
  auto* kap_r = kap->add_option("--r", r, "Step");
  kap->add_option("--s", s, "Sub-step")->needs(kap_r);
  kap->add_flag("--list", list, "List the whole schedule (default when --r is absent)");
  auto* lm = app.add_subcommand("losev-manin", "Detect the Losev-Manin weight data");
  add_in(lm);
  auto* crem = app.add_subcommand("cremona", "Feasible degrees of the induced linear system");
  crem->add_option("--n", n, "Number of markings")->required();
  crem->add_option("--r", r, "Tower step: 1, or any value >= 2")->required();

  auto emit_error = [&](std::string_view code, const std::string& detail) {
    if (format == "json")
      out << json{{"error", code}, {"detail", detail}}.dump() << '\n';
    else
      err << "error [" << code << "]: " << detail << '\n';
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    emit_error("usage", e.what());
    return kInputError;
  }

  auto load = [&](const std::string& spec) { return parse_weight_data(detail::read_source(spec, in)); };

  try {
    json result;
    if (*validate) {
      result = to_json(load(input));
    } else if (*coincide) {
      auto a = load(input);
      result = {{"subset", normalize_index_set(a.size(), subset)}, {"result", can_coincide(a, subset)}};
    } else if (*sig) {
      result = to_json(signature(load(input), min_size));
    } else if (*adm) {
      auto a = load(input);
      if (adm_i->count() > 0) {
        result = {{"i", i}, {"j", j}, {"result", is_admissible(a, i, j)}};
      } else {
        auto g = admissible_group(a);
        json pairs = json::array();
        for (auto [x, y] : g.generators) pairs.push_back(json::array({x, y}));
        result = {{"admissible", std::move(pairs)}, {"partition", to_json(admissibility_partition(a))}};
      }
    } else if (*group) {
      auto a = load(input);
      auto g = admissible_group(a);
      result = to_json(g);
      if (!perm_text.empty()) {
        auto p = Permutation::parse_cycles(a.size(), perm_text);
        result["member"] = {{"perm", p.cycle_string()}, {"result", membership(g, p)}};
      }
    } else if (*oracle) {
      auto a = load(input);
      auto set = signature_preserving_group(a);
      auto g = admissible_group(a);
      result = to_json(set);
      result["admissible_order"] = g.order.str();
      result["strictly_larger"] = set.order() != g.order;
    } else if (*forget) {
      auto a = load(input);
      if (forget_drop->count() == 0 && forget_keep->count() == 0)
        throw Error(ErrorCode::invalid_argument, "pass --drop or --keep");
      IndexSet kept = forget_keep->count() > 0 ? normalize_index_set(a.size(), keep) : complement(a.size(), drop);
      if (kept.empty()) throw Error(ErrorCode::invalid_argument, "cannot forget every marking");
      auto tgt = forgetful_target(a, kept);
      result = {{"exists", true}, {"keep", kept}, {"target", to_json(tgt)}};
    } else if (*reduce) {
      auto a = load(input);
      auto b = load(target);
      if (!reduction_exists(a, b))
        throw Error(ErrorCode::reduction_not_defined, "some weight of --to exceeds the corresponding weight of --in");
      result = {{"exists", true}};
    } else if (*contracted) {
      auto a = load(input);
      auto b = load(target);
      result = {{"contracted", to_json(contracted_divisors(a, b))}};
    } else if (*equiv) {
      auto a = load(input);
      if (eq_i->count() > 0) {
        auto lhs = reduced_weights(a, i);
        auto rhs = reduced_weights(a, j);
        auto al = canonical_alignment(a.size(), i, j);
        result = {{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}, {"align", al},
                  {"result", weight_data_equivalent(lhs, rhs, al)}};
      } else {
        if (target.empty()) throw Error(ErrorCode::invalid_argument, "pass --to or --i/--j");
        auto b = load(target);
        auto al = align.empty() ? identity_alignment(a.size()) : align;
        result = {{"align", al}, {"result", weight_data_equivalent(a, b, al)}};
      }
    } else if (*boundary) {
      json list_json = json::array();
      for (const auto& d : boundary_divisors(load(input))) list_json.push_back(to_json(d));
      result = {{"divisors", std::move(list_json)}};
    } else if (*aut) {
      result = to_json(aut_descriptor_coarse(load(input)));
    } else if (*aut_stack) {
      result = to_json(aut_descriptor_stack(load(input)));
    } else if (*kap) {
      auto entry_json = [&](const TowerEntry& e) {
        auto j_entry = to_json(e);
        j_entry["aut"] = to_json(kapranov_aut(n, e.step.r, e.step.s));
        return j_entry;
      };
      auto tower = kapranov_tower(n);
      if (kap_r->count() > 0 && !list) {
        TowerStep{n, r, s}.validate();
        auto it = std::find_if(tower.begin(), tower.end(), [&](const TowerEntry& e) { return e.step == TowerStep{n, r, s}; });
        result = entry_json(*it);
      } else {
        json steps = json::array();
        for (const auto& e : tower) steps.push_back(entry_json(e));
        result = {{"n", n}, {"steps", std::move(steps)}, {"final_rank", tower.back().rank}};
      }
    } else if (*lm) {
      auto m = detect_losev_manin(load(input));
      result = {{"losev_manin", m ? json(*m) : json(nullptr)}};
    } else if (*crem) {
      if (r < 1) throw Error(ErrorCode::invalid_argument, "--r must be positive");
      result = to_json(feasible_cremona_degrees(n, r == 1 ? CremonaClass::first_step : CremonaClass::later_steps));
    }

    if (format == "json")
      out << result.dump() << '\n';
    else
      detail::render_text(result, out, 0);
    return kOk;
  } catch (const Error& e) {
    emit_error(error_code_name(e.code()), e.what());
    return is_input_error(e.code()) ? kInputError : kDomainError;
  } catch (const json::exception& e) {
    emit_error("syntax", e.what());
    return kInputError;
  }
}

}  // namespace hassett::cli
