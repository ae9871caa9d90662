// qhorn: exact Gromov-Witten numbers of Grassmannians, polyrigidity of the
// associated moduli data, and the eigenvalue inequality system for products
// of special-unitary matrices.

#include "qhorn/cache.hpp"
#include "qhorn/gw.hpp"
#include "qhorn/lp.hpp"
#include "qhorn/moduli.hpp"
#include "qhorn/polytope.hpp"
#include "qhorn/version.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using namespace qhorn;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitBadCycles = 2;
constexpr int kExitDimension = 3;
constexpr int kExitNotOne = 4;
constexpr int kExitLpInfeasible = 5;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<SchubertIndex> parse_cycles(const std::vector<std::string>& raw, int n) {
  std::vector<SchubertIndex> out;
  for (const auto& s : raw) {
    // Accept the braceless form "1,4" as well; shells eat unquoted braces.
    std::string t = (!s.empty() && s.front() == '{') ? s : "{" + s + "}";
    try {
      out.push_back(SchubertIndex::parse(t, n));
    } catch (const std::invalid_argument& e) {
      throw BadInput("malformed cycle '" + s + "': " + e.what());
    }
  }
  if (out.empty()) throw BadInput("malformed cycles: none given");
  return out;
}

// "1,0;0,0" -> one rational vector per ';'-separated point.
std::vector<std::vector<Rat>> parse_weight_rows(const std::string& s) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream points(s);
  std::string pt;
  while (std::getline(points, pt, ';')) {
    std::vector<Rat> row;
    std::istringstream entries(pt);
    std::string tok;
    while (std::getline(entries, tok, ',')) {
      try {
        row.push_back(parse_rat(tok));
      } catch (const std::invalid_argument& e) {
        throw BadInput(std::string("malformed rational: ") + e.what());
      }
    }
    if (row.empty()) throw BadInput("malformed weights: empty point");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw BadInput("malformed weights: none given");
  return rows;
}

json rat_list(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json cycles_list(const std::vector<SchubertIndex>& v) {
  json a = json::array();
  for (const auto& I : v) a.push_back(I.str());
  return a;
}

json problem_json(const GwProblem& P) {
  json j;
  j["problem"] = P.str();
  j["n"] = P.n;
  j["r"] = P.r;
  j["d"] = P.d;
  j["D"] = P.D;
  j["cycles"] = cycles_list(P.indices);
  return j;
}

json report_json(const ModuliReport& rep) {
  json j;
  j["expected_dim"] = rep.expected_dim;
  j["verdict"] = verdict_name(rep.verdict);
  j["polyrigid"] = rep.polyrigid;
  json ev = json::array();
  for (const auto& t : rep.evidence) {
    json e;
    e["p"] = t.p;
    e["q"] = t.q;
    e["K"] = cycles_list(t.K);
    ev.push_back(std::move(e));
  }
  j["evidence"] = std::move(ev);
  j["normalized"] = rep.normalized.str();
  return j;
}

json system_json(const IneqSystem& sys, bool classified, bool lp) {
  json j;
  j["n"] = sys.n;
  j["s"] = sys.s;
  json recs = json::array();
  for (const auto& rec : sys.records) {
    json r;
    r["r"] = rec.r;
    r["d"] = rec.d;
    r["indices"] = cycles_list(rec.indices);
    r["gw"] = rec.gw.str();
    if (classified) r["polyrigid"] = rec.polyrigid;
    if (lp && rec.lp_irredundant) r["lp_irredundant"] = *rec.lp_irredundant;
    recs.push_back(std::move(r));
  }
  j["records"] = std::move(recs);
  return j;
}

// CSV of the inequality matrix: one row per record, n*s coefficient columns
// plus the bound d.
std::string system_csv(const IneqSystem& sys) {
  std::ostringstream os;
  for (int l = 0; l < sys.s; ++l)
    for (int t = 1; t <= sys.n; ++t) os << "a" << l + 1 << "_" << t << ",";
  os << "d\n";
  for (const auto& rec : sys.records) {
    for (int l = 0; l < sys.s; ++l) {
      std::vector<int> coeff(sys.n, 0);
      for (int t : rec.indices[l].elements) coeff[t - 1] = 1;
      for (int t = 0; t < sys.n; ++t) os << coeff[t] << ",";
    }
    os << rec.d << "\n";
  }
  return os.str();
}

struct Common {
  std::string format = "text";
  std::string cache_path;
  int jobs = std::max(1u, std::thread::hardware_concurrency());

  void attach(CLI::App* app) {
    app->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app->add_option("--cache", cache_path, "coefficient cache file (JSON)");
    app->add_option("--jobs", jobs, "worker threads for enumeration commands");
  }

  std::string effective_cache() const {
    if (!cache_path.empty()) return cache_path;
    if (const char* env = std::getenv("HQ_CACHE")) return env;
    return {};
  }

  void load_cache() const {
    auto path = effective_cache();
    if (path.empty()) return;
    auto st = global_cache().load(path);
    if (!st.loaded && st.note != "absent") std::cerr << "cache: " << st.note << "\n";
  }

  void save_cache() const {
    auto path = effective_cache();
    if (!path.empty()) global_cache().save(path);
  }

  void emit(const json& j, const std::string& text_form) const {
    if (format == "json") {
      json out = j;
      out["version"] = kVersion;
      std::cout << out.dump(1) << "\n";
    } else {
      std::cout << text_form << "# qhorn " << kVersion << "\n";
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum Schubert calculus and eigenvalue inequalities "
               "for products of SU(n) matrices"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;

  int n = 0, r = 0, d = 0, D = 0, N = 1, M = 0, W_dim = 0, s = 0;
  bool require_one = false, do_classify = false, do_lp = false, collapse = false;
  bool polyrigid_only = false, verify = false;
  std::vector<std::string> cycles_raw;
  std::string point_str, weights_str, classes_str, dims_str, path_str;
  int shift_times = 1;

  auto add_problem_opts = [&](CLI::App* sub) {
    sub->add_option("--n", n, "ambient rank")->required();
    sub->add_option("--r", r, "subbundle rank")->required();
    sub->add_option("--d", d, "subbundle degree parameter");
    sub->add_option("--D", D, "ambient degree parameter");
    sub->add_option("--cycles", cycles_raw, "Schubert cycles, e.g. {1,4} {2,3}")
        ->required()
        ->expected(-1);
    common.attach(sub);
  };

  auto* c_gw = app.add_subcommand("gw", "generalized Gromov-Witten number");
  add_problem_opts(c_gw);

  auto* c_dual = app.add_subcommand("dual", "Grassmann dual problem and value");
  add_problem_opts(c_dual);

  auto* c_scale = app.add_subcommand("scale", "scale the whole situation by N");
  add_problem_opts(c_scale);
  c_scale->add_option("--N", N, "scale factor")->required();

  auto* c_fofn = app.add_subcommand("fofn", "the saturation function f(1..M)");
  add_problem_opts(c_fofn);
  c_fofn->add_option("--M", M, "largest N to evaluate (default r+1)");

  auto* c_delta = app.add_subcommand("delta", "delta(I) on the simplex");
  c_delta->add_option("--n", n, "ambient rank")->required();
  c_delta->add_option("--cycles", cycles_raw, "one or more cycles")
      ->required()
      ->expected(-1);
  common.attach(c_delta);

  auto* c_shift = app.add_subcommand("shift", "apply S to a simplex point");
  c_shift->add_option("--point", point_str, "comma-separated rationals")->required();
  c_shift->add_option("--times", shift_times, "how many times to apply S");
  common.attach(c_shift);

  auto* c_weights = app.add_subcommand("weights", "Witten weights of the cycles");
  c_weights->add_option("--n", n, "ambient rank")->required();
  c_weights->add_option("--cycles", cycles_raw)->required()->expected(-1);
  common.attach(c_weights);

  auto* c_dims = app.add_subcommand("dims", "jump sets, flag dims, moduli dimension");
  c_dims->add_option("--n", n, "ambient rank")->required();
  c_dims->add_option("--cycles", cycles_raw)->required()->expected(-1);
  common.attach(c_dims);

  auto* c_poly = app.add_subcommand("polyrigid", "run both polyrigidity deciders");
  add_problem_opts(c_poly);
  c_poly->add_option("--M", M, "f(N) bound (default r+1, classical 1)");
  c_poly->add_flag("--require-one", require_one, "exit 4 unless the GW number is 1");

  auto* c_semi = app.add_subcommand("semistable", "semistability of a weight system");
  c_semi->add_option("--n", n, "ambient rank")->required();
  c_semi->add_option("--D", D, "ambient degree parameter");
  c_semi->add_option("--weights", weights_str, "per-point weights, e.g. \"1,0;0,0;0,0\"")
      ->required();
  common.attach(c_semi);

  auto* c_ineq = app.add_subcommand("inequalities", "enumerate the inequality system");
  c_ineq->add_option("--n", n, "ambient rank")->required();
  c_ineq->add_option("--s", s, "number of points")->required();
  c_ineq->add_flag("--classify", do_classify, "set the polyrigid flag");
  c_ineq->add_flag("--lp", do_lp, "run the LP irredundancy test");
  c_ineq->add_flag("--collapse-orbits", collapse, "deduplicate up to point permutation");
  c_ineq->add_option("--M", M, "polyrigidity bound (default per record)");
  common.attach(c_ineq);

  auto* c_member = app.add_subcommand("member", "membership of a class tuple");
  c_member->add_option("--n", n, "ambient rank")->required();
  c_member->add_option("--s", s, "number of points")->required();
  c_member
      ->add_option("--classes", classes_str, "per-point classes, e.g. \"1/2,-1/2;0,0;0,0\"")
      ->required();
  c_member->add_flag("--polyrigid-only", polyrigid_only,
                     "test against the polyrigid subset only");
  common.attach(c_member);

  auto* c_witness = app.add_subcommand("witness", "witness weights for a record");
  add_problem_opts(c_witness);
  c_witness->add_flag("--verify", verify, "re-check the witness with check_semistable");

  auto* c_nori = app.add_subcommand("nori", "Nori's intersection-1 construction");
  c_nori->add_option("--dims", dims_str, "subspace dimensions, e.g. 2,2,1")->required();
  c_nori->add_option("--W", W_dim, "ambient dimension")->required();
  common.attach(c_nori);

  auto* c_cache = app.add_subcommand("cache", "load/save round trip of the cache");
  c_cache->add_option("--path", path_str, "cache file (default --cache/HQ_CACHE)");
  common.attach(c_cache);

  CLI11_PARSE(app, argc, argv);

  try {
    common.load_cache();
    auto& cache = global_cache();

    if (*c_gw) {
      auto P = GwProblem(n, r, d, D, parse_cycles(cycles_raw, n));
      std::string note;
      Int v = generalized_gw(P, cache, &note);
      json j = problem_json(P);
      j["value"] = v.str();
      if (!note.empty()) j["note"] = note;
      std::ostringstream text;
      text << P.str() << " = " << v << "\n";
      if (!note.empty()) text << "note: " << note << "\n";
      common.emit(j, text.str());
    } else if (*c_dual) {
      auto P = GwProblem(n, r, d, D, parse_cycles(cycles_raw, n));
      GwProblem Q = gw_dual(P);
      Int v = generalized_gw(Q, cache);
      json j;
      j["problem"] = P.str();
      j["dual"] = problem_json(Q);
      j["value"] = v.str();
      std::ostringstream text;
      text << P.str() << " ~ " << Q.str() << " = " << v << "\n";
      common.emit(j, text.str());
    } else if (*c_scale) {
      auto P = GwProblem(n, r, d, D, parse_cycles(cycles_raw, n));
      GwProblem Q = scale_situation(P, N);
      json j;
      j["problem"] = P.str();
      j["scaled"] = problem_json(Q);
      common.emit(j,
                  P.str() + " scaled by " + std::to_string(N) + " -> " + Q.str() + "\n");
    } else if (*c_fofn) {
      auto P = GwProblem(n, r, d, D, parse_cycles(cycles_raw, n));
      int bound = M > 0 ? M : P.r + 1;
      json vals = json::array();
      std::ostringstream text;
      text << P.str() << "\n";
      for (int k = 1; k <= bound; ++k) {
        Int v = f_of_n(P, k, cache);
        json e;
        e["N"] = k;
        e["value"] = v.str();
        e["scaled_problem"] = f_of_n_problem(P, k).str();
        vals.push_back(std::move(e));
        text << "f(" << k << ") = " << v << "\n";
      }
      json j = problem_json(P);
      j["f"] = std::move(vals);
      common.emit(j, text.str());
    } else if (*c_delta) {
      auto cycles = parse_cycles(cycles_raw, n);
      json arr = json::array();
      std::ostringstream text;
      for (const auto& I : cycles) {
        SimplexPoint p = delta(I);
        json e;
        e["cycle"] = I.str();
        e["delta"] = rat_list(p.coords);
        arr.push_back(std::move(e));
        text << "delta(" << I.str() << ") = " << p.str() << "\n";
      }
      json j;
      j["n"] = n;
      j["deltas"] = std::move(arr);
      common.emit(j, text.str());
    } else if (*c_shift) {
      auto rows = parse_weight_rows(point_str);
      SimplexPoint p(rows[0]);
      if (!valid_simplex_point(p)) throw BadInput("point outside the simplex");
      SimplexPoint q = shift_s_pow(p, shift_times);
      json j;
      j["point"] = rat_list(p.coords);
      j["times"] = shift_times;
      j["shifted"] = rat_list(q.coords);
      common.emit(j, "S^" + std::to_string(shift_times) + " " + p.str() + " = " + q.str() +
                         "\n");
    } else if (*c_weights) {
      auto cycles = parse_cycles(cycles_raw, n);
      auto alpha = witten_weights(cycles);
      json arr = json::array();
      std::ostringstream text;
      for (size_t l = 0; l < cycles.size(); ++l) {
        json e;
        e["cycle"] = cycles[l].str();
        e["alpha"] = rat_list(alpha[l]);
        arr.push_back(std::move(e));
        text << cycles[l].str() << " -> " << SimplexPoint(alpha[l]).str() << "\n";
      }
      json j;
      j["n"] = n;
      j["weights"] = std::move(arr);
      common.emit(j, text.str());
    } else if (*c_dims) {
      auto cycles = parse_cycles(cycles_raw, n);
      auto alpha = witten_weights(cycles);
      json arr = json::array();
      std::ostringstream text;
      int rk = cycles[0].r();
      int total = 0;
      bool normalised = true;
      for (size_t l = 0; l < cycles.size(); ++l) {
        normalised &= is_normalised(cycles[l]);
        auto sig = jump_set(alpha[l]);
        int fd = flag_dim(sig, rk);
        total += fd;
        json e;
        e["cycle"] = cycles[l].str();
        e["jumps"] = sig.jumps;
        e["flag_dim"] = fd;
        arr.push_back(std::move(e));
        text << cycles[l].str() << ": jumps " << sig.str() << ", flag dim " << fd << "\n";
      }
      json j;
      j["n"] = n;
      j["flags"] = std::move(arr);
      if (normalised) {
        int md = total - rk * rk + 1;
        j["moduli_dim"] = md;
        text << "moduli dim (if a stable point exists) = " << md << "\n";
      } else {
        j["moduli_dim"] = nullptr;
        j["note"] = "some cycle is not normalised; twist first";
        text << "moduli dim undefined: some cycle is not normalised\n";
      }
      common.emit(j, text.str());
    } else if (*c_poly) {
      auto P = GwProblem(n, r, d, D, parse_cycles(cycles_raw, n));
      Int v = generalized_gw(P, cache);
      if (require_one && v != 1) {
        std::cerr << "generalized_gw = " << v << " != 1 for " << P.str() << "\n";
        common.save_cache();
        return kExitNotOne;
      }
      ModuliReport rep = moduli_report(P, cache);
      bool direct = (v == 1) && is_polyrigid(P, M, cache);
      json j = problem_json(P);
      j["value"] = v.str();
      j["f_bound"] = M > 0 ? M : ((P.d == 0 && P.D == 0) ? 1 : P.r + 1);
      j["is_polyrigid"] = direct;
      j["report"] = report_json(rep);
      j["deciders_agree"] = (direct == rep.polyrigid);
      std::ostringstream text;
      text << P.str() << " = " << v << "\n"
           << "f(N) decider: " << (direct ? "polyrigid" : "not polyrigid") << "\n"
           << "recursive decider: " << (rep.polyrigid ? "polyrigid" : "not polyrigid")
           << " (" << verdict_name(rep.verdict) << ", expected dim " << rep.expected_dim
           << ")\n";
      for (const auto& t : rep.evidence) {
        text << "  tight: p=" << t.p << " q=" << t.q << " K=";
        for (const auto& K : t.K) text << K.str();
        text << "\n";
      }
      if (direct != rep.polyrigid)
        text << "DECIDERS DISAGREE - this is a reportable finding\n";
      common.emit(j, text.str());
    } else if (*c_semi) {
      auto rows = parse_weight_rows(weights_str);
      WeightSystem Wsys(n, D, rows);
      auto rep = check_semistable(Wsys, cache, common.jobs);
      json j;
      j["n"] = n;
      j["D"] = D;
      j["semistable"] = rep.semistable;
      json viol = json::array(), tight = json::array();
      for (const auto& p : rep.violated) viol.push_back(p.str());
      for (const auto& p : rep.tight) tight.push_back(p.str());
      j["violated"] = std::move(viol);
      j["tight"] = std::move(tight);
      std::ostringstream text;
      text << (rep.semistable ? "semistable" : "NOT semistable") << "\n";
      for (const auto& p : rep.violated) text << "violated: " << p.str() << "\n";
      for (const auto& p : rep.tight) text << "tight: " << p.str() << "\n";
      common.emit(j, text.str());
    } else if (*c_ineq) {
      auto sys = enumerate_inequalities(n, s, cache, common.jobs);
      if (collapse) sys = collapse_orbits(sys);
      if (do_classify) classify_records(sys, M, cache, common.jobs);
      if (do_lp) {
        classify_lp(sys, common.jobs);
        if (do_classify) {
          for (size_t k = 0; k < sys.records.size(); ++k) {
            if (sys.records[k].polyrigid != *sys.records[k].lp_irredundant)
              std::cerr << "FINDING: polyrigid/lp disagreement at record " << k << ": "
                        << sys.records[k].str(sys.n) << "\n";
          }
        }
      }
      if (common.format == "csv") {
        std::cout << system_csv(sys);
      } else {
        json j = system_json(sys, do_classify, do_lp);
        std::ostringstream text;
        text << "n=" << n << " s=" << s << ": " << sys.records.size() << " records\n";
        for (const auto& rec : sys.records) {
          text << "  " << rec.str(sys.n);
          if (do_classify) text << (rec.polyrigid ? "  polyrigid" : "  not-polyrigid");
          if (do_lp && rec.lp_irredundant)
            text << (*rec.lp_irredundant ? "  irredundant" : "  redundant");
          text << "\n";
        }
        common.emit(j, text.str());
      }
    } else if (*c_member) {
      auto rows = parse_weight_rows(classes_str);
      std::vector<ConjugacyClass> A;
      for (auto& row : rows) {
        ConjugacyClass cls(row);
        if (!valid_simplex_point(cls)) throw BadInput("class outside the simplex");
        A.push_back(std::move(cls));
      }
      auto sys = enumerate_inequalities(n, s, cache, common.jobs);
      if (polyrigid_only) classify_records(sys, M, cache, common.jobs);
      auto rep = polyrigid_only ? membership_polyrigid(A, sys) : membership(A, sys);
      json j;
      j["n"] = n;
      j["s"] = s;
      j["member"] = rep.member;
      json viol = json::array(), tight = json::array();
      for (size_t k : rep.violated) viol.push_back(sys.records[k].str(sys.n));
      for (size_t k : rep.tight) tight.push_back(sys.records[k].str(sys.n));
      j["violated"] = std::move(viol);
      j["tight"] = std::move(tight);
      std::ostringstream text;
      text << (rep.member ? "member" : "NOT a member") << "\n";
      for (size_t k : rep.violated)
        text << "violated: " << sys.records[k].str(sys.n) << "\n";
      for (size_t k : rep.tight) text << "tight: " << sys.records[k].str(sys.n) << "\n";
      common.emit(j, text.str());
    } else if (*c_witness) {
      if (D != 0) throw BadInput("witness: records live at D = 0");
      GwProblem rec(n, r, d, 0, parse_cycles(cycles_raw, n));
      if (generalized_gw(rec, cache) != 1) {
        std::cerr << "witness: record must have generalized_gw = 1\n";
        common.save_cache();
        return kExitNotOne;
      }
      json j = problem_json(rec);
      std::ostringstream text;
      auto cw = witness_constructive(rec, cache);
      WeightSystem Wsys;
      if (cw) {
        Wsys = cw->weights;
        j["path"] = "constructive";
        j["c"] = to_string(cw->c);
        j["dual_factor_rank"] = cw->dual_factor_rank;
        j["built_on"] = cw->built_on.str();
        text << "constructive witness (c = " << cw->c << ", dual factor rank "
             << cw->dual_factor_rank << ", built on " << cw->built_on.str() << ")\n";
      } else {
        auto sys = enumerate_inequalities(n, rec.s(), cache, common.jobs);
        size_t k = SIZE_MAX;
        for (size_t i = 0; i < sys.records.size(); ++i)
          if (sys.records[i].problem(n) == rec) k = i;
        if (k == SIZE_MAX) throw BadInput("record not found in its system");
        auto pt = lp_witness(k, sys);
        if (!pt) {
          std::cerr << "witness: LP reports the record redundant\n";
          common.save_cache();
          return kExitLpInfeasible;
        }
        std::vector<std::vector<Rat>> theta;
        for (const auto& cls : *pt) theta.push_back(cls.coords);
        Wsys = WeightSystem(n, 0, theta);
        j["path"] = "lp";
        text << "LP witness point (violates exactly the target)\n";
      }
      json wt = json::array();
      for (const auto& row : Wsys.theta) wt.push_back(rat_list(row));
      j["weights"] = std::move(wt);
      text << Wsys.str() << "\n";
      if (verify) {
        auto vrep = check_semistable(Wsys, cache, common.jobs);
        bool tight = false, violated = false;
        for (const auto& p : vrep.tight)
          if (p.r == rec.r && p.d == rec.d && p.indices == rec.indices) tight = true;
        for (const auto& p : vrep.violated)
          if (p.r == rec.r && p.d == rec.d && p.indices == rec.indices) violated = true;
        j["verified"] = {{"semistable", vrep.semistable},
                         {"target_tight", tight},
                         {"target_violated", violated},
                         {"violated_count", vrep.violated.size()}};
        text << "verify: " << (vrep.semistable ? "semistable" : "not semistable")
             << ", target " << (tight ? "tight" : (violated ? "violated" : "slack"))
             << ", violations " << vrep.violated.size() << "\n";
      }
      common.emit(j, text.str());
    } else if (*c_nori) {
      std::vector<int> ds;
      std::istringstream is(dims_str);
      std::string tok;
      while (std::getline(is, tok, ',')) {
        try {
          ds.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw BadInput("malformed dims '" + dims_str + "'");
        }
      }
      auto rec = nori_instance(ds, W_dim, cache);
      json j;
      j["W"] = W_dim;
      j["record"] = {{"r", rec.r},
                     {"d", rec.d},
                     {"indices", cycles_list(rec.indices)},
                     {"gw", rec.gw.str()}};
      common.emit(j, rec.str(W_dim) + "  gw = " + rec.gw.str() + "\n");
    } else if (*c_cache) {
      std::string path = !path_str.empty() ? path_str : common.effective_cache();
      if (path.empty()) throw BadInput("cache: no path (use --path or HQ_CACHE)");
      auto st = global_cache().load(path);
      size_t before = global_cache().value_count();
      global_cache().save(path);
      CoefficientCache reread;
      auto st2 = reread.load(path);
      bool ok = st2.loaded && reread.value_count() == before;
      json j;
      j["path"] = path;
      j["load"] = st.note;
      j["values"] = before;
      j["roundtrip_ok"] = ok;
      std::ostringstream text;
      text << "cache " << path << " (" << st.note << "): " << before
           << " values, roundtrip " << (ok ? "ok" : "FAILED") << "\n";
      common.emit(j, text.str());
    }

    common.save_cache();
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadCycles;
  } catch (const dimension_error& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadCycles;
  } catch (const std::logic_error& e) {
    std::cerr << "lp error: " << e.what() << "\n";
    return kExitLpInfeasible;
  }
  return 0;
}
