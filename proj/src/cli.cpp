#include "fuscat/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fuscat/center_obstruction.hpp"
#include "fuscat/codegree_obstruction.hpp"
#include "fuscat/errors.hpp"
#include "fuscat/families.hpp"
#include "fuscat/fusion_ring.hpp"
#include "fuscat/numtheory.hpp"
#include "fuscat/report.hpp"
#include "fuscat/roots_of_unity.hpp"

namespace fuscat {

namespace {

struct Ctx {
    std::string format = "text";
    int workers = 0;  // 0 = hardware concurrency
    bool timing = false;
    std::ostream* out = nullptr;

    int resolved_workers() const {
        if (workers > 0) return workers;
        unsigned hc = std::thread::hardware_concurrency();
        return hc == 0 ? 1 : static_cast<int>(hc);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* verdict_name(Feasibility f) {
    switch (f) {
        case Feasibility::Feasible: return "feasible";
        case Feasibility::FeasibleKnown: return "feasible (known categorification)";
        case Feasibility::Infeasible: return "infeasible";
    }
    return "?";
}

const char* cand_verdict_name(CandidateVerdict v) {
    switch (v) {
        case CandidateVerdict::SurvivorK1: return "survivor-K1";
        case CandidateVerdict::SurvivorK2: return "survivor-K2";
        case CandidateVerdict::Rejected: return "rejected";
        case CandidateVerdict::Falsification: return "FALSIFICATION";
    }
    return "?";
}

json verdict_json(const ParamVerdict& v) {
    json j;
    j["param"] = v.param;
    j["verdict"] = verdict_name(v.verdict);
    j["case"] = v.case_label;
    j["reason"] = v.reason;
    j["assumptions"] = v.assumptions;
    j["exact_values"] = v.exact;
    return j;
}

void emit_json(const Ctx& ctx, const json& j) { *ctx.out << j.dump(2) << "\n"; }

int unsupported_csv(const Ctx& ctx, std::ostream& err) {
    (void)ctx;
    err << "csv output is only available for classify, obstruct and orbits\n";
    return kExitUsage;
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const Ctx& ctx, const std::string& path, std::ostream& err) {
    std::string bytes = slurp(path);
    FusionRing ring = ring_from_json_text(bytes);
    VerificationReport rep = verify_based_ring(ring);
    json j;
    j["command"] = "verify";
    j["file"] = path;
    j["digest"] = fnv1a_hex(bytes);
    j["pass"] = rep.pass;
    json ax = json::array();
    for (const AxiomCheck& a : rep.mandatory)
        ax.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    j["axioms"] = ax;
    json ex = json::array();
    for (const AxiomCheck& a : rep.extended)
        ex.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    j["extended"] = ex;
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        return unsupported_csv(ctx, err);
    } else {
        *ctx.out << "ring: " << path << " (digest " << j["digest"].get<std::string>() << ")\n";
        for (const AxiomCheck& a : rep.mandatory)
            *ctx.out << "axiom " << a.name << ": " << (a.pass ? "PASS" : "FAIL " + a.detail) << "\n";
        for (const AxiomCheck& a : rep.extended)
            *ctx.out << "extended " << a.name << ": " << (a.pass ? "PASS" : "FAIL " + a.detail)
                     << "\n";
        *ctx.out << "overall: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? kExitOk : kExitBadRing;
}

// ---- codegrees -------------------------------------------------------

int cmd_codegrees(const Ctx& ctx, const std::string& path, std::ostream& err) {
    std::string bytes = slurp(path);
    FusionRing ring = ring_from_json_text(bytes);
    VerificationReport vrep = verify_based_ring(ring);
    if (!vrep.pass) {
        err << "ring fails based-ring verification; run `fuscat verify` for details\n";
        return kExitBadRing;
    }
    CodegreeSet cs = formal_codegrees(ring);
    GateVerdict gates = ostrik_gates(cs);
    json j;
    j["command"] = "codegrees";
    j["file"] = path;
    j["digest"] = fnv1a_hex(bytes);
    json vals = json::array();
    for (const QuadVal& f : cs.values) vals.push_back(quad_to_json(f));
    j["codegrees"] = vals;
    j["char_poly"] = cs.source_poly.str();
    j["eq10_sum_recip_one"] = gates.recip_sum_one;
    j["eq9_recip_sq_bound"] = gates.recip_sq_bound;
    j["eq9_lhs"] = quad_to_json(gates.recip_sq_sum);
    j["eq9_rhs"] = quad_to_json(gates.recip_sq_limit);
    j["positive"] = gates.all_positive;
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        return unsupported_csv(ctx, err);
    } else {
        *ctx.out << "ring: " << path << " (digest " << j["digest"].get<std::string>() << ")\n";
        *ctx.out << "char poly of A: " << cs.source_poly.str() << "\n";
        *ctx.out << "codegrees:";
        for (size_t i = 0; i < cs.values.size(); ++i)
            *ctx.out << (i ? ", " : " ") << cs.values[i].str();
        *ctx.out << "\n";
        *ctx.out << "Eq.(10) sum(1/f) = 1: " << (gates.recip_sum_one ? "PASS" : "FAIL") << "\n";
        *ctx.out << "Eq.(9) sum(1/f^2) <= (1/2)(1+1/f1): "
                 << (gates.recip_sq_bound ? "PASS" : "FAIL") << " [lhs "
                 << gates.recip_sq_sum.str() << ", rhs " << gates.recip_sq_limit.str() << "]\n";
    }
    return kExitOk;
}

// ---- family ----------------------------------------------------------

int cmd_family_emit(const Ctx& ctx, FamilyTag fam, long long param, const std::string& emit,
                    std::ostream& err) {
    FusionRing ring = (fam == FamilyTag::K1) ? build_K1(param) : build_K2(param);
    KParams kp = (fam == FamilyTag::K1) ? k1_params(param) : k2_params(param);
    VerificationReport rep = verify_based_ring(ring);
    std::string text = ring_to_json_text(ring);
    if (!emit.empty()) {
        std::ofstream out(emit, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write file: " + emit);
        out << text;
    }
    json j;
    j["command"] = "family";
    j["family"] = (fam == FamilyTag::K1) ? "k1" : "k2";
    j["param"] = param;
    j["K"] = kp.str();
    j["axioms_pass"] = rep.pass;
    if (!emit.empty()) j["emitted"] = emit;
    if (ctx.format == "json") emit_json(ctx, j);
    else if (ctx.format == "csv") return unsupported_csv(ctx, err);
    else {
        *ctx.out << ((fam == FamilyTag::K1) ? "K1(" : "K2(") << param << ") = " << kp.str() << "\n";
        *ctx.out << "based-ring axioms: " << (rep.pass ? "PASS" : "FAIL") << "\n";
        if (!emit.empty()) *ctx.out << "written: " << emit << "\n";
    }
    return rep.pass ? kExitOk : kExitBadRing;
}

int cmd_family_r(const Ctx& ctx, long long x, long long y, long long g, long long d,
                 std::ostream& err) {
    RParams r{x, y, g, d};
    json j;
    j["command"] = "family";
    j["family"] = "r";
    j["r"] = r.str();
    try {
        KParams kp = r_to_k(r);
        bool eq = (d * x * y == g * (2 * x * x - y * y) + x * x + 1);
        j["K"] = kp.str();
        j["quadruple_equation"] = eq;
        if (!eq) {
            if (ctx.format == "json") emit_json(ctx, j);
            else *ctx.out << r.str() << ": quadruple equation violated\n";
            return kExitBadRing;
        }
        if (ctx.format == "json") emit_json(ctx, j);
        else if (ctx.format == "csv") return unsupported_csv(ctx, err);
        else *ctx.out << r.str() << " = " << kp.str() << "\n";
        return kExitOk;
    } catch (const ConstraintViolation& e) {
        j["violation"] = e.what();
        if (ctx.format == "json") emit_json(ctx, j);
        else *ctx.out << r.str() << ": " << e.what() << "\n";
        return kExitBadRing;
    }
}

// ---- classify --------------------------------------------------------

int cmd_classify(const Ctx& ctx, const RBox& box, std::ostream& err) {
    (void)err;
    ClassifyReport rep = classify_rank4(box, ctx.resolved_workers());
    json j;
    j["command"] = "classify";
    j["box"] = {{"xmax", box.xmax}, {"ymax", box.ymax}, {"gmax", box.gmax}, {"dmax", box.dmax}};
    j["candidates"] = rep.entries.size();
    j["gamma12_unreachable"] = rep.gamma12_unreachable;
    j["matches_theorem"] = rep.matches_theorem;
    json entries = json::array();
    for (const ClassifyEntry& e : rep.entries) {
        json ej;
        ej["r"] = e.r.str();
        ej["K"] = e.k.str();
        ej["gamma"] = e.gamma.get_str();
        ej["verdict"] = cand_verdict_name(e.verdict);
        ej["reason"] = e.reason;
        json cg = json::array();
        for (const QuadVal& f : e.codegrees) cg.push_back(quad_to_json(f));
        ej["codegrees"] = cg;
        entries.push_back(std::move(ej));
    }
    j["entries"] = entries;
    json survivors = json::array();
    for (const ClassifyEntry& e : rep.survivors)
        survivors.push_back({{"r", e.r.str()}, {"form", e.reason}});
    j["survivors"] = survivors;
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        *ctx.out << "x,y,g,d,gamma,verdict,reason\n";
        for (const ClassifyEntry& e : rep.entries)
            *ctx.out << e.r.x << "," << e.r.y << "," << e.r.g << "," << e.r.d << ","
                     << e.gamma.get_str() << "," << cand_verdict_name(e.verdict) << ",\""
                     << e.reason << "\"\n";
    } else {
        *ctx.out << "box: |x| <= " << box.xmax << ", |y| <= " << box.ymax << ", |g| <= " << box.gmax
                 << ", |d| <= " << box.dmax << "\n";
        *ctx.out << "candidates: " << rep.entries.size() << "\n";
        for (const ClassifyEntry& e : rep.entries)
            *ctx.out << e.r.str() << " gamma=" << e.gamma.get_str() << " "
                     << cand_verdict_name(e.verdict) << ": " << e.reason << "\n";
        *ctx.out << "survivors: " << rep.survivors.size() << "\n";
        *ctx.out << "gamma = 12 unreachable in box: " << (rep.gamma12_unreachable ? "yes" : "NO")
                 << "\n";
        *ctx.out << "matches classification: " << (rep.matches_theorem ? "yes" : "NO") << "\n";
    }
    return rep.matches_theorem ? kExitOk : kExitMismatch;
}

// ---- obstruct --------------------------------------------------------

int cmd_obstruct(const Ctx& ctx, char family, long long maxp, std::ostream& err) {
    (void)err;
    ScanReport rep = scan_family(family, maxp, ctx.resolved_workers());
    std::vector<long long> expected;
    for (long long v : (family == '1') ? std::vector<long long>{0, 2, 3, 6}
                                       : std::vector<long long>{0, 1, 2})
        if (v <= maxp) expected.push_back(v);
    bool matches = (rep.survivors == expected);
    json j;
    j["command"] = "obstruct";
    j["family"] = (family == '1') ? "k1" : "k2";
    j["max_param"] = maxp;
    json results = json::array();
    for (const ParamVerdict& v : rep.verdicts) results.push_back(verdict_json(v));
    j["results"] = results;
    j["survivors"] = rep.survivors;
    j["expected_survivors"] = expected;
    j["matches_expected"] = matches;
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        *ctx.out << "param,verdict,case\n";
        for (const ParamVerdict& v : rep.verdicts)
            *ctx.out << v.param << "," << verdict_name(v.verdict) << ",\"" << v.case_label
                     << "\"\n";
    } else {
        for (const ParamVerdict& v : rep.verdicts) {
            *ctx.out << ((family == '1') ? "e=" : "c=") << v.param << ": "
                     << verdict_name(v.verdict) << " [" << v.case_label << "]";
            if (!v.reason.empty()) *ctx.out << " " << v.reason;
            *ctx.out << "\n";
        }
        *ctx.out << "survivors:";
        for (long long v : rep.survivors) *ctx.out << " " << v;
        *ctx.out << "\nmatches expected survivor set: " << (matches ? "yes" : "NO") << "\n";
    }
    return matches ? kExitOk : kExitMismatch;
}

// ---- minroots --------------------------------------------------------

int cmd_minroots(const Ctx& ctx, long long a, long long b, long long cc, bool paired, long long a2,
                 long long b2, long max_order, int max_count, std::ostream& err) {
    (void)err;
    Int icc = make_int(cc);
    auto [c_sf, scale] = squarefree_part(icc == 0 ? Int(1) : icc);
    if (cc == 0) { c_sf = 0; scale = 1; }
    QuadVal target(Rat(make_int(a)), Rat(make_int(b)), icc);
    json j;
    j["command"] = "minroots";
    j["target"] = quad_to_json(target);
    j["max_order"] = max_order;
    j["max_count"] = max_count;
    if (!paired) {
        if (cc == 2) j["bound_sqrt2"] = bound_sqrt2(make_int(a), make_int(b));
        if (c_sf > 1) j["bound_general"] = bound_sqrt_general(make_int(a), Int(make_int(b) * scale), c_sf);
    } else {
        QuadVal target2(Rat(make_int(a2)), Rat(make_int(b2)), icc);
        j["target2"] = quad_to_json(target2);
        // paired bound applies to sum = -a - b sqrt(c), squares = -a - d sqrt(c)
        if (c_sf % 2 == 1 && c_sf % 3 == 0 && a <= 0 && b <= 0 && b2 <= 0 && a2 == a) {
            j["bound_paired"] =
                bound_paired(make_int(-a), Int(make_int(-b) * scale), c_sf, Int(make_int(-b2) * scale));
        }
    }
    MinRootsResult res =
        paired ? minroots_paired_bruteforce(target, QuadVal(Rat(make_int(a2)), Rat(make_int(b2)), icc),
                                            max_order, max_count, ctx.resolved_workers())
               : minroots_bruteforce(target, max_order, max_count, ctx.resolved_workers());
    j["exceeded_budget"] = res.exceeded;
    if (!res.exceeded) {
        j["minimum"] = res.minimum;
        json w = json::array();
        for (auto [ord, exp] : res.witness) w.push_back({{"order", ord}, {"exponent", exp}});
        j["witness"] = w;
    }
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        return unsupported_csv(ctx, err);
    } else {
        *ctx.out << "target: " << target.str();
        if (paired) *ctx.out << ", squares: " << QuadVal(Rat(make_int(a2)), Rat(make_int(b2)), icc).str();
        *ctx.out << " (orders dividing " << max_order << ", at most " << max_count << " roots)\n";
        if (j.contains("bound_sqrt2")) *ctx.out << "bound |a|+2|b|: " << j["bound_sqrt2"] << "\n";
        if (j.contains("bound_general"))
            *ctx.out << "bound |b|phi(2c): " << j["bound_general"] << "\n";
        if (j.contains("bound_paired")) *ctx.out << "bound P(a,b,c,d): " << j["bound_paired"] << "\n";
        if (res.exceeded) {
            *ctx.out << "minimum: exceeds budget (no representation within limits)\n";
        } else {
            *ctx.out << "minimum: " << res.minimum << "\nwitness:";
            for (auto [ord, exp] : res.witness)
                *ctx.out << " zeta_" << ord << "^" << exp;
            *ctx.out << "\n";
        }
    }
    return res.exceeded ? kExitBudget : kExitOk;
}

// ---- orbits ----------------------------------------------------------

int cmd_orbits(const Ctx& ctx, long long c, long Y, std::ostream& err) {
    (void)err;
    OrbitReport rep = orbit_sums(make_int(c), Y);
    json j;
    j["command"] = "orbits";
    j["c"] = c;
    j["Y"] = Y;
    j["epsilon"] = rep.epsilon;
    j["n"] = rep.n;
    j["L"] = rep.L;
    json orbits = json::array();
    for (const GaloisOrbit& o : rep.orbits) {
        json oj;
        oj["rep"] = o.exponents.front();
        oj["size"] = o.exponents.size();
        oj["exponents"] = o.exponents;
        oj["sum"] = quad_to_json(o.sum);
        oj["sum_sq"] = quad_to_json(o.sum_sq);
        orbits.push_back(std::move(oj));
    }
    j["orbits"] = orbits;
    if (ctx.format == "json") {
        emit_json(ctx, j);
    } else if (ctx.format == "csv") {
        *ctx.out << "rep,size,sum,sum_sq\n";
        for (const GaloisOrbit& o : rep.orbits)
            *ctx.out << o.exponents.front() << "," << o.exponents.size() << "," << o.sum.str()
                     << "," << o.sum_sq.str() << "\n";
    } else {
        *ctx.out << "c = " << c << ", Y = " << Y << ", epsilon = " << rep.epsilon
                 << ", n = " << rep.n << ", L = " << rep.L << "\n";
        for (const GaloisOrbit& o : rep.orbits) {
            *ctx.out << "orbit of zeta_" << Y << "^" << o.exponents.front() << " (size "
                     << o.exponents.size() << "): sum = " << o.sum.str()
                     << ", sum of squares = " << o.sum_sq.str() << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx ctx;
    ctx.out = &out;

    CLI::App app{"exact based-ring obstruction toolkit"};
    app.fallthrough(true);
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--workers", ctx.workers, "worker threads (0 = auto)");
    app.add_flag("--timing", ctx.timing, "append wall-clock timing to reports");

    std::string verify_file, codegrees_file;
    CLI::App* verify = app.add_subcommand("verify", "check the based-ring axioms of a ring file");
    verify->add_option("file", verify_file, "ring JSON file")->required();

    CLI::App* codegrees =
        app.add_subcommand("codegrees", "formal codegrees and pseudo-unitarity gates");
    codegrees->add_option("file", codegrees_file, "ring JSON file")->required();

    CLI::App* family = app.add_subcommand("family", "construct family rings");
    family->require_subcommand(1);
    long long fam_e = 0, fam_c = 0;
    std::string emit1, emit2;
    CLI::App* fam_k1 = family->add_subcommand("k1", "the ring K1(e)");
    fam_k1->add_option("--e", fam_e, "parameter e")->required();
    fam_k1->add_option("--emit", emit1, "write ring JSON here");
    CLI::App* fam_k2 = family->add_subcommand("k2", "the ring K2(c)");
    fam_k2->add_option("--c", fam_c, "parameter c")->required();
    fam_k2->add_option("--emit", emit2, "write ring JSON here");
    long long rx = 0, ry = 0, rg = 0, rd = 0;
    CLI::App* fam_r = family->add_subcommand("r", "resolve a quadruple R(x,y,g,d)");
    fam_r->add_option("--x", rx)->required();
    fam_r->add_option("--y", ry)->required();
    fam_r->add_option("--g", rg)->required();
    fam_r->add_option("--d", rd)->required();

    RBox box;
    CLI::App* classify = app.add_subcommand("classify", "enumerate and classify quadruples");
    classify->add_option("--xmax", box.xmax)->capture_default_str();
    classify->add_option("--ymax", box.ymax)->capture_default_str();
    classify->add_option("--gmax", box.gmax)->capture_default_str();
    classify->add_option("--dmax", box.dmax)->capture_default_str();

    CLI::App* obstruct = app.add_subcommand("obstruct", "center-based feasibility scans");
    obstruct->require_subcommand(1);
    long long max_e = 60, max_c = 40;
    CLI::App* ob_k1 = obstruct->add_subcommand("k1", "scan K1(e)");
    ob_k1->add_option("--max-e", max_e)->capture_default_str();
    CLI::App* ob_k2 = obstruct->add_subcommand("k2", "scan K2(c)");
    ob_k2->add_option("--max-c", max_c)->capture_default_str();

    long long mr_a = 0, mr_b = 0, mr_c = 0, mr_a2 = 0, mr_b2 = 0;
    long mr_order = 48;
    int mr_count = 8;
    bool mr_paired = false;
    CLI::App* minroots = app.add_subcommand("minroots", "brute-force root-of-unity minimum");
    minroots->add_option("--a", mr_a)->required();
    minroots->add_option("--b", mr_b)->required();
    minroots->add_option("--c", mr_c)->required();
    minroots->add_flag("--paired", mr_paired, "also pin the sum of squares");
    minroots->add_option("--a2", mr_a2);
    minroots->add_option("--b2", mr_b2);
    minroots->add_option("--max-order", mr_order)->capture_default_str();
    minroots->add_option("--max-count", mr_count)->capture_default_str();

    long long orb_c = 0;
    long orb_order = 0;
    CLI::App* orbits = app.add_subcommand("orbits", "Galois orbit sums over Q(sqrt c)");
    orbits->add_option("--c", orb_c)->required();
    orbits->add_option("--order", orb_order, "Y, the primitive order")->required();

    std::vector<std::string> argv = args;
    std::vector<const char*> cargv;
    cargv.push_back("fuscat");
    for (const std::string& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = kExitOk;
    try {
        if (*verify) rc = cmd_verify(ctx, verify_file, err);
        else if (*codegrees) rc = cmd_codegrees(ctx, codegrees_file, err);
        else if (*fam_k1) rc = cmd_family_emit(ctx, FamilyTag::K1, fam_e, emit1, err);
        else if (*fam_k2) rc = cmd_family_emit(ctx, FamilyTag::K2, fam_c, emit2, err);
        else if (*fam_r) rc = cmd_family_r(ctx, rx, ry, rg, rd, err);
        else if (*classify) rc = cmd_classify(ctx, box, err);
        else if (*ob_k1) rc = cmd_obstruct(ctx, '1', max_e, err);
        else if (*ob_k2) rc = cmd_obstruct(ctx, '2', max_c, err);
        else if (*minroots)
            rc = cmd_minroots(ctx, mr_a, mr_b, mr_c, mr_paired, mr_a2, mr_b2, mr_order, mr_count,
                              err);
        else if (*orbits) rc = cmd_orbits(ctx, orb_c, orb_order, err);
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadRing;
    } catch (const ConstraintViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadRing;
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadRing;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadRing;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (ctx.timing) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        out << "timing: " << ms << " ms\n";
    }
    return rc;
}

}  // namespace fuscat
