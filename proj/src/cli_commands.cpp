#include "m3/cli_commands.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "m3/json_io.hpp"
#include "m3/oracle.hpp"

namespace m3 {
namespace {

int effective_jobs(const CliOptions& opts) {
  if (opts.jobs > 0) return opts.jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// run tasks possibly in parallel, results emitted in input order
template <typename T>
std::vector<T> run_ordered(int jobs, std::vector<std::function<T()>> tasks) {
  std::vector<T> out(tasks.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  int nthreads = std::min<size_t>(jobs, tasks.size());
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        out[i] = tasks[i]();
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

MemoCache* shared_cache() {
  static MemoCache cache;
  cache.shared = true;
  static bool loaded = [] {
    if (const char* dir = std::getenv("M3_CACHE_DIR")) {
      load_cache_file(std::string(dir) + "/conway-cache.jsonl", cache);
    }
    return true;
  }();
  (void)loaded;
  return &cache;
}

void persist_cache() {
  if (const char* dir = std::getenv("M3_CACHE_DIR")) {
    save_cache_file(std::string(dir) + "/conway-cache.jsonl", *shared_cache());
  }
}

struct Row {
  std::vector<std::pair<std::string, std::string>> cells;
};

void emit_rows(const std::vector<Row>& rows, const CliOptions& opts, std::ostream& out) {
  if (rows.empty()) return;
  if (opts.format == "json") {
    Json arr = Json::array();
    for (const Row& r : rows) {
      Json o = Json::object();
      for (auto& [k, v] : r.cells) o[k] = v;
      arr.push_back(o);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  if (opts.format == "csv") {
    for (size_t i = 0; i < rows[0].cells.size(); ++i)
      out << rows[0].cells[i].first << (i + 1 < rows[0].cells.size() ? "," : "\n");
    for (const Row& r : rows) {
      for (size_t i = 0; i < r.cells.size(); ++i) {
        std::string v = r.cells[i].second;
        bool quote = v.find(',') != std::string::npos;
        out << (quote ? "\"" + v + "\"" : v) << (i + 1 < r.cells.size() ? "," : "\n");
      }
    }
    return;
  }
  // text table
  std::vector<size_t> width(rows[0].cells.size(), 0);
  for (size_t i = 0; i < rows[0].cells.size(); ++i) width[i] = rows[0].cells[i].first.size();
  for (const Row& r : rows)
    for (size_t i = 0; i < r.cells.size(); ++i) width[i] = std::max(width[i], r.cells[i].second.size());
  for (size_t i = 0; i < rows[0].cells.size(); ++i)
    out << std::left << std::setw(static_cast<int>(width[i]) + 2) << rows[0].cells[i].first;
  out << "\n";
  for (const Row& r : rows) {
    for (size_t i = 0; i < r.cells.size(); ++i)
      out << std::left << std::setw(static_cast<int>(width[i]) + 2) << r.cells[i].second;
    out << "\n";
  }
}

std::string lk_triple(const LinkingMatrix& lk) {
  return "(" + std::to_string(lk.at(2, 3)) + "," + std::to_string(lk.at(3, 1)) + "," +
         std::to_string(lk.at(1, 2)) + ")";
}

}  // namespace

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err) {
  LinkDiagram d;
  try {
    int sources = !args.family.empty() + !args.braid_json.empty() + !args.diagram_json.empty();
    if (sources != 1) {
      err << "compute: exactly one of --family/--braid/--diagram is required\n";
      return kExitParse;
    }
    if (!args.family.empty()) {
      d = make_family(FamilySpec{args.family, args.params});
    } else if (!args.braid_json.empty()) {
      d = link_from_json_text(args.braid_json);
    } else {
      d = link_from_json_text(args.diagram_json);
    }
    validate(d);
  } catch (const Error& e) {
    err << "compute: " << e.what() << "\n";
    return e.code == Err::Parse || e.code == Err::BadBraid ? kExitParse : kExitPrecondition;
  }

  const int m = d.component_count;
  std::vector<std::string> wanted = args.invariants;
  if (wanted.empty()) {
    if (m == 3)
      wanted = {"lk", "c1", "betas", "gamma", "m_tilde", "p1", "r", "m_av", "m"};
    else if (m == 2)
      wanted = {"lk", "conway", "beta"};
    else
      wanted = {"conway"};
  }

  MemoCache cache;
  Json result = Json::object();
  std::vector<std::pair<std::string, std::string>> cells;
  try {
    InvariantReport rep;
    bool have_rep = false;
    auto need_rep = [&]() -> InvariantReport& {
      if (!have_rep) {
        rep = invariant_report(d, &cache);
        have_rep = true;
      }
      return rep;
    };
    for (const std::string& inv : wanted) {
      if (inv == "lk") {
        LinkingMatrix lk = linking_matrix(d);
        Json o = Json::object();
        for (int i = 1; i <= m; ++i)
          for (int j = i + 1; j <= m; ++j)
            o["(" + std::to_string(i) + "," + std::to_string(j) + ")"] = lk.at(i, j);
        result["lk"] = o;
        cells.emplace_back("lk", m == 3 ? lk_triple(lk) : o.dump());
      } else if (inv == "conway") {
        IntPolynomial p = conway(d, &cache);
        result["conway"] = polynomial_to_json(p);
        cells.emplace_back("conway", p.str());
      } else if (inv == "c0" || inv == "c1") {
        C01 c = conway_c01(d, &cache);
        const BigInt& v = inv == "c0" ? c.c0 : c.c1;
        result[inv] = v.str();
        cells.emplace_back(inv, v.str());
      } else if (inv == "beta") {
        BigInt b = beta(d, &cache);
        result["beta"] = b.str();
        cells.emplace_back("beta", b.str());
      } else if (inv == "betas") {
        auto& r = need_rep();
        result["betas"] = Json::array({r.betas[0].str(), r.betas[1].str(), r.betas[2].str()});
        cells.emplace_back("betas", "(" + r.betas[0].str() + "," + r.betas[1].str() + "," +
                                        r.betas[2].str() + ")");
      } else if (inv == "gamma") {
        BigInt g = gamma_invariant(d, &cache);
        result["gamma"] = static_cast<long long>(g);
        cells.emplace_back("gamma", g.str());
      } else if (inv == "m_tilde") {
        Rational v = m_tilde(d, &cache);
        result["m_tilde"] = rational_to_json(v);
        cells.emplace_back("m_tilde", v.str());
      } else if (inv == "p1") {
        Rational v = p1_poly(linking_matrix(d));
        result["p1"] = rational_to_json(v);
        cells.emplace_back("p1", v.str());
      } else if (inv == "r") {
        Rational v = r_poly(linking_matrix(d));
        result["r"] = rational_to_json(v);
        cells.emplace_back("r", v.str());
      } else if (inv == "m_av") {
        Rational v = m_av(d, &cache);
        result["m_av"] = rational_to_json(v);
        cells.emplace_back("m_av", v.str());
      } else if (inv == "m") {
        Rational v = m_invariant(d, &cache);
        result["m"] = rational_to_json(v);
        cells.emplace_back("m", v.str());
      } else if (inv == "report") {
        auto& r = need_rep();
        result = report_to_json(r, d);
        cells.emplace_back("report", "(json only)");
      } else {
        err << "compute: unknown invariant \"" << inv << "\"\n";
        return kExitParse;
      }
    }
  } catch (const Error& e) {
    err << "compute: " << e.what() << "\n";
    return kExitPrecondition;
  }

  if (args.opts.format == "json") {
    out << result.dump(2) << "\n";
  } else {
    Row row{cells};
    emit_rows({row}, args.opts, out);
  }
  persist_cache();
  return 0;
}

namespace {

struct PaperRow {
  std::string name;
  int figure;
  // chain values as printed for the right-handed representative
  Rational m_tilde, p1, r, m_av, m;
  bool mirror_printed;  // printed values belong to the mirror of the generated link
  std::string flags;
};

}  // namespace

int cmd_paper_table(const CliOptions& opts, std::ostream& out, std::ostream& err) {
  // printed chains; see the acceptance notes for the flagged entries
  std::vector<PaperRow> want = {
      {"fig6 hopf_fibers(+,+,+)", 6, Rational(-1), Rational(3, 4), Rational(0), Rational(-1, 4),
       Rational(-1, 4), false, ""},
      {"fig7 rev1 hopf3(-1)", 7, Rational(0), Rational(1, 4), Rational(0), Rational(1, 4),
       Rational(1, 4), false, ""},
      {"fig8 cable(2,1,1)", 8, Rational(-24), Rational(16), Rational(4), Rational(-8), Rational(-4),
       false, "printed gamma/betas are framing-dependent"},
      {"fig9 cable(4,1,1) of hopf3(-1)", 9, Rational(-800), Rational(416), Rational(320),
       Rational(-384), Rational(64), true,
       "printed chain belongs to the mirror; M itself matches"},
      {"fig10 cable(2,1,1) of op(3)", 10, Rational(-4), Rational(-4), Rational(4), Rational(-8),
       Rational(-4), false, "printed gamma/betas are framing-dependent"},
      {"hopf3(2)", 11, Rational(-104), Rational(72), Rational(48), Rational(-32), Rational(16),
       false, "printed gamma=31 is c1 of the link; tower-consistent gamma differs"},
  };

  std::vector<std::function<Row()>> tasks;
  for (const PaperRow& pr : want) {
    tasks.push_back([pr]() {
      MemoCache cache;
      LinkDiagram d = paper_figure(pr.figure);
      InvariantReport rep = invariant_report(d, &cache);
      Rational mt = pr.mirror_printed ? -rep.m_tilde : rep.m_tilde;
      Rational p1v = pr.mirror_printed ? -rep.p1 : rep.p1;
      Rational rv = pr.mirror_printed ? -rep.r : rep.r;
      Rational mav = pr.mirror_printed ? -rep.m_av : rep.m_av;
      bool chain_ok = mt == pr.m_tilde && p1v == pr.p1 && rv == pr.r && mav == pr.m_av &&
                      rep.m == pr.m;
      std::string status = chain_ok ? "match" : "MISMATCH";
      if (!pr.flags.empty()) status += chain_ok ? " (" + pr.flags + ")" : "";
      Row row;
      row.cells = {{"row", pr.name},
                   {"lk(23,31,12)", lk_triple(rep.lk)},
                   {"gamma", rep.gamma.str()},
                   {"betas", "(" + rep.betas[0].str() + "," + rep.betas[1].str() + "," +
                                 rep.betas[2].str() + ")"},
                   {"m_tilde", rep.m_tilde.str()},
                   {"p1", rep.p1.str()},
                   {"r", rep.r.str()},
                   {"m_av", rep.m_av.str()},
                   {"m", rep.m.str()},
                   {"status", status}};
      return row;
    });
  }
  std::vector<Row> rows;
  try {
    rows = run_ordered(effective_jobs(opts), std::move(tasks));
  } catch (const Error& e) {
    err << "paper-table: " << e.what() << "\n";
    return kExitPrecondition;
  }
  emit_rows(rows, opts, out);
  return 0;
}

int cmd_sweep_asymptotic(const std::string& family, const std::vector<long long>& params,
                         const std::vector<std::vector<int>>& lambdas, const CliOptions& opts,
                         std::ostream& out, std::ostream& err) {
  LinkDiagram base;
  try {
    base = make_family(FamilySpec{family, params});
  } catch (const Error& e) {
    err << "sweep-asymptotic: " << e.what() << "\n";
    return kExitParse;
  }
  if (base.component_count != 3) {
    err << "sweep-asymptotic: base link must have 3 components\n";
    return kExitPrecondition;
  }
  MemoCache base_cache;
  Rational mbase = m_invariant(base, &base_cache);

  std::vector<std::function<Row()>> tasks;
  for (const auto& lam : lambdas) {
    tasks.push_back([lam, base, mbase]() {
      MemoCache cache;
      LinkDiagram c = cable(base, lam, true);
      Rational got = m_invariant(c, &cache);
      BigInt prod = BigInt(lam[0]) * lam[1] * lam[2];
      Rational want = Rational(prod * prod * prod * prod) * mbase;
      Rational ratio = want.num == 0 ? Rational(0) : got / want;
      Row row;
      row.cells = {{"lambda",
                    "(" + std::to_string(lam[0]) + "," + std::to_string(lam[1]) + "," +
                        std::to_string(lam[2]) + ")"},
                   {"m_cabled", got.str()},
                   {"scaled_base", want.str()},
                   {"ratio", ratio.str()},
                   {"law", got == want ? "pass" : "fail"}};
      return row;
    });
  }
  std::vector<Row> rows;
  try {
    rows = run_ordered(effective_jobs(opts), std::move(tasks));
  } catch (const Error& e) {
    err << "sweep-asymptotic: " << e.what() << "\n";
    return kExitPrecondition;
  }
  emit_rows(rows, opts, out);
  return 0;
}

int cmd_oracle_check(int max_crossings, int seeds, const CliOptions& opts, std::ostream& out,
                     std::ostream& err) {
  bool any_fail = false;
  std::vector<Row> rows;

  auto corpus = oracle_corpus(max_crossings);
  std::vector<std::function<Row()>> tasks;
  for (auto& [name, d] : corpus) {
    LinkDiagram dd = d;
    std::string nm = name;
    std::uint64_t base_seed = opts.seed;
    int nseeds = seeds;
    tasks.push_back([dd, nm, base_seed, nseeds]() {
      MemoCache cache;
      IntPolynomial engine = conway(dd, &cache);
      bool ok = true;
      IntPolynomial ref = conway_bruteforce(dd, OracleConfig{1000, false, 0});
      ok = engine == ref;
      for (int s = 0; ok && s < nseeds; ++s) {
        IntPolynomial r2 = conway_bruteforce(dd, OracleConfig{1000, true, base_seed + s});
        ok = engine == r2;
      }
      Row row;
      row.cells = {{"item", "engine_vs_bruteforce " + nm},
                   {"status", ok ? "pass" : "fail"},
                   {"detail", engine.str()}};
      return row;
    });
  }
  rows = run_ordered(effective_jobs(opts), std::move(tasks));
  for (auto& r : rows)
    if (r.cells[1].second == "fail") any_fail = true;

  for (const IdentityResult& ir : closed_form_suite()) {
    Row row;
    std::string st = ir.status == IdentityStatus::pass           ? "pass"
                     : ir.status == IdentityStatus::sign_flagged ? "sign_flagged"
                                                                 : "fail";
    if (ir.status == IdentityStatus::fail) any_fail = true;
    row.cells = {{"item", ir.identity}, {"status", st}, {"detail", ir.detail}};
    rows.push_back(row);
  }

  if (opts.format == "json") {
    // one JSON object per line
    for (const Row& r : rows) {
      Json o = Json::object();
      for (auto& [k, v] : r.cells) o[k] = v;
      out << o.dump() << "\n";
    }
  } else {
    emit_rows(rows, opts, out);
  }
  if (any_fail) {
    err << "oracle-check: failures present\n";
    return kExitOracleFail;
  }
  return 0;
}

}  // namespace m3
