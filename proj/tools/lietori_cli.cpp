// Command-line front end: build model files, compute invariants, verify the
// graded-algebra axioms on truncations, reproduce the invariant tables over
// the full parameter grid, decide isomorphism, and list the exceptional rows.
//
// Exit codes: 0 success, 1 semantic failure (axiom or table mismatch),
// 2 usage / parse / construction errors.  stdout carries JSON only; all
// human-readable messages go to stderr.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lietori/classify.hpp"
#include "lietori/grid.hpp"
#include "lietori/invariants.hpp"
#include "lietori/json_io.hpp"
#include "lietori/lietorus.hpp"

namespace {

using namespace lietori;

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

// --quantum M:e (repeatable)
QuantumParam parse_quantum(const std::string& s) {
  auto pos = s.find(':');
  QuantumParam f;
  try {
    if (pos == std::string::npos) {
      f.M = std::stol(s);
      f.e = 1;
    } else {
      f.M = std::stol(s.substr(0, pos));
      f.e = std::stol(s.substr(pos + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad quantum factor '" + s + "' (expected M or M:e)");
  }
  return f;
}

// --delta "v1;v2;..." where each vi is a comma-separated integer vector
std::vector<Degree> parse_delta(const std::string& s) {
  std::vector<Degree> out;
  std::stringstream vecs(s);
  std::string vec;
  while (std::getline(vecs, vec, ';')) {
    Degree d;
    std::stringstream entries(vec);
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      try {
        d.push_back(std::stol(entry));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad delta entry '" + entry + "' in '" + s + "'");
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("LIETORI_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

const char* verdict_token(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "ISOMORPHIC";
    case IsoVerdict::NotIsomorphic: return "NOT_ISOMORPHIC";
    case IsoVerdict::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

Json row_to_json(const ExceptionalRow& row) {
  Json j;
  j["id"] = row.id;
  j["type"] = row.root_type;
  j["min_nullity"] = row.min_nullity;
  j["crk"] = row.crk;
  j["rkv"] = row.rkv;
  Json torsion = Json::array();
  for (const auto& t : row.quotient_torsion) torsion.push_back(t.get_si());
  j["quotient_torsion"] = torsion;
  j["index"] = row.index_string;
  j["reference"] = row.reference_string;
  return j;
}

int run_tables(const std::string& families) {
  auto grid = acceptance_grid();
  if (!families.empty()) {
    std::vector<ConstructionParams> kept;
    for (auto& P : grid)
      if (families.find(family_token(P.family)) != std::string::npos) kept.push_back(std::move(P));
    grid = std::move(kept);
  }

  struct Row {
    Json params, computed, closed;
    bool match = false;
  };
  std::vector<Row> rows(grid.size());
  std::atomic<size_t> next{0};
  const int nthreads = worker_count();
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
        const auto& P = grid[i];
        InvariantTuple closed = closed_form_tuple(P);
        InvariantTuple computed = invariant_tuple(construct(P));
        rows[i] = {params_to_json(P), tuple_to_json(computed), tuple_to_json(closed),
                   computed == closed};
      }
    });
  for (auto& t : pool) t.join();

  Json out;
  Json results = Json::array();
  bool all = true;
  for (const auto& row : rows) {
    all = all && row.match;
    results.push_back(Json{{"params", row.params},
                           {"computed", row.computed},
                           {"closed_form", row.closed},
                           {"match", row.match}});
  }
  out["results"] = results;
  out["all_match"] = all;
  std::cout << out.dump(2) << "\n";
  if (!all) {
    std::cerr << "table reproduction mismatch\n";
    return kExitSemantic;
  }
  std::cerr << "all " << rows.size() << " grid entries match\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of graded matrix Lie algebras over twisted tori"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a model and write it to a file");
  std::string family_str, delta_str, out_path;
  int r = 1, k = 0, p = 0, q = 0, m = 0;
  std::vector<std::string> quantum_strs;
  build->add_option("--family", family_str, "sl, su, sp, or o")->required();
  build->add_option("--r", r, "rank of the root-grading")->required();
  build->add_option("--quantum", quantum_strs, "quantum factor M:e (repeatable; sl only)");
  build->add_option("--k", k, "number of standard quantum pairs");
  build->add_option("--p", p, "reversal-type coordinates (0, 1, or 2)");
  build->add_option("--q", q, "plain Laurent coordinates");
  build->add_option("--m", m, "hermitian block size (su only)");
  build->add_option("--delta", delta_str, "shift degrees \"v1;v2;...\" (su only)");
  build->add_option("--out", out_path, "output model file")->required();

  // invariants
  auto* invariants = app.add_subcommand("invariants", "print the invariant tuple of a model");
  std::string inv_path;
  invariants->add_option("path", inv_path, "model file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check the grading axioms on a truncation");
  std::string ver_path;
  long box = 2;
  verify->add_option("path", ver_path, "model file")->required();
  verify->add_option("--box", box, "truncation box radius (default 2)");

  // tables
  auto* tables = app.add_subcommand("tables", "reproduce the invariant tables over the grid");
  std::string families;
  tables->add_option("--families", families, "restrict to a comma-separated family subset");

  // decide-iso
  auto* decide = app.add_subcommand("decide-iso", "decide isomorphism of two models");
  std::string path_a, path_b;
  decide->add_option("a", path_a, "first model file")->required();
  decide->add_option("b", path_b, "second model file")->required();

  // exceptional
  auto* exceptional = app.add_subcommand("exceptional", "list exceptional rows");
  int exc_id = 0;
  std::string exc_type;
  long exc_crk = 0;
  exceptional->add_option("--id", exc_id, "row id (1-27)");
  exceptional->add_option("--type", exc_type, "root-grading type, e.g. BC1");
  exceptional->add_option("--crk", exc_crk, "centroid rank");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::stringstream msg;
    int code = app.exit(e, msg, msg);
    std::cerr << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      ConstructionParams P;
      P.family = family_from_token(family_str);
      P.r = r;
      for (const auto& s : quantum_strs) P.quantum.push_back(parse_quantum(s));
      P.k = k;
      P.p = p;
      P.q = q;
      P.m = m;
      if (!delta_str.empty()) P.delta = parse_delta(delta_str);
      construct(P);  // validate before writing
      write_model_file(out_path, P);
      std::cerr << "wrote " << out_path << "\n";
      return kExitOk;
    }

    if (invariants->parsed()) {
      auto M = construct(read_model_file(inv_path));
      std::cout << tuple_to_json(invariant_tuple(M)).dump(2) << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      auto M = construct(read_model_file(ver_path));
      auto rep = verify_axioms(M, box);
      std::cout << verify_report_to_json(rep).dump(2) << "\n";
      if (!rep.all_pass) {
        std::cerr << "axiom verification failed\n";
        return kExitSemantic;
      }
      return kExitOk;
    }

    if (tables->parsed()) return run_tables(families);

    if (decide->parsed()) {
      auto A = read_model_file(path_a);
      auto B = read_model_file(path_b);
      IsoDecision d = decide_isomorphic(A, B);
      Json j;
      j["verdict"] = verdict_token(d.verdict);
      j["reason"] = d.reason;
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (exceptional->parsed()) {
      ExceptionalFilter f;
      if (exc_id) f.id = exc_id;
      if (!exc_type.empty()) f.root_type = exc_type;
      if (exc_crk) f.crk = exc_crk;
      Json rows = Json::array();
      for (const auto& row : exceptional_lookup(f)) rows.push_back(row_to_json(row));
      std::cout << rows.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
