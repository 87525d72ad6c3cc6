// Command-line surface for the staircase library: exact sequences, weight
// expansions, approximations, capacities, gradings, partitions, areas, index
// formulas, Cremona reduction, and the verification suites.

#include "staircase/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using json = nlohmann::ordered_json;
using namespace staircase;

namespace {

json report_json(const VerificationReport& r) {
    return json{{"check", r.id},
                {"params", r.params},
                {"status", r.pass ? "pass" : "fail"},
                {"witness", r.witness},
                {"millis", r.millis}};
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "check,params,status,witness,millis\n";
        for (const auto& r : reports)
            std::cout << r.id << "," << r.params << "," << (r.pass ? "pass" : "fail") << ","
                      << csv_quote(r.witness) << "," << r.millis << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  [" << r.params << "]  "
                      << r.millis << " ms";
            if (!r.witness.empty()) std::cout << "  -- " << r.witness;
            std::cout << "\n";
        }
    }
}

json orbit_json(const OrbitSet& o) {
    return json{{"m1", to_string(o.m1)}, {"m2", to_string(o.m2)},
                {"action", to_string(o.action())}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact staircase calculator"};
    app.require_subcommand(1);
    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "Fibonacci-derived sequences and identities");
    int seq_n = 8;
    std::string seq_identity;
    seq_cmd->add_option("--n", seq_n, "largest index");
    seq_cmd->add_option("--identity", seq_identity,
                        "check one identity (fib1_h, fibq, nine_ell, ...) at every index");

    // weights
    auto* w_cmd = app.add_subcommand("weights", "integer weight expansion of p/q");
    std::string w_target;
    w_cmd->add_option("target", w_target, "rational p/q")->required();

    // approx
    auto* ap_cmd = app.add_subcommand("approx", "convergents and best approximations from below");
    std::string ap_target;
    std::string ap_maxden = "100";
    ap_cmd->add_option("target", ap_target, "perturbed rational p/q±eps")->required();
    ap_cmd->add_option("--max-den", ap_maxden, "denominator bound");

    // caps
    auto* caps_cmd = app.add_subcommand("caps", "sorted values la + mb through index k");
    std::string caps_a = "1", caps_b;
    long caps_k = 20;
    caps_cmd->add_option("--a", caps_a, "short axis (rational)");
    caps_cmd->add_option("--b", caps_b, "long axis (perturbed rational)")->required();
    caps_cmd->add_option("--k", caps_k, "largest index");

    // grade
    auto* gr_cmd = app.add_subcommand("grade", "grading of an orbit set on dE(a,b)");
    std::string gr_a = "1", gr_b, gr_m1 = "0", gr_m2 = "0";
    bool gr_oracle = false;
    gr_cmd->add_option("--a", gr_a, "short axis (rational)");
    gr_cmd->add_option("--b", gr_b, "long axis (perturbed rational)")->required();
    gr_cmd->add_option("--m1", gr_m1, "multiplicity on the short orbit");
    gr_cmd->add_option("--m2", gr_m2, "multiplicity on the long orbit");
    gr_cmd->add_flag("--oracle", gr_oracle, "also run the lattice-count oracle");

    // partition
    auto* p_cmd = app.add_subcommand("partition", "end partitions from lattice paths");
    std::string p_theta, p_m;
    bool p_neg = false;
    p_cmd->add_option("theta", p_theta, "monodromy angle (perturbed rational)")->required();
    p_cmd->add_option("--m", p_m, "total multiplicity")->required();
    p_cmd->add_flag("--neg", p_neg, "negative-end partition");

    // area
    auto* ar_cmd = app.add_subcommand("area", "area A(theta,t) and kappa(theta,t)");
    std::string ar_theta, ar_t;
    ar_cmd->add_option("theta", ar_theta, "monodromy angle (perturbed rational)")->required();
    ar_cmd->add_option("--t", ar_t, "multiplicity")->required();

    // index
    auto* ix_cmd = app.add_subcommand("index", "ECH and Fredholm indices of curve data");
    std::string ix_level = "E", ix_x, ix_d = "0", ix_z, ix_b1, ix_b2;
    int ix_k = 1;
    ix_cmd->add_option("--level", ix_level, "E (blowup) or X (complement)")
        ->check(CLI::IsMember({"E", "X"}));
    ix_cmd->add_option("--x", ix_x, "long axis (perturbed rational)")->required();
    ix_cmd->add_option("--d", ix_d, "degree (level X)");
    ix_cmd->add_option("--z", ix_z, "constraint vector, comma separated (level E)");
    ix_cmd->add_option("--b1", ix_b1, "end multiplicities on the short orbit, comma separated");
    ix_cmd->add_option("--b2", ix_b2, "end multiplicities on the long orbit, comma separated");
    ix_cmd->add_option("--k", ix_k, "component count (level X)");

    // cremona
    auto* cr_cmd = app.add_subcommand("cremona", "greedy Cremona reduction with move log");
    std::string cr_class;
    bool cr_merge = false;
    cr_cmd->add_option("class", cr_class, "blowup class d;m1,m2,...")->required();
    cr_cmd->add_flag("--merge-two-ones", cr_merge, "replace two unit multiplicities by a 2");

    // verify
    auto* v_cmd = app.add_subcommand("verify", "named verification suites");
    std::string v_id;
    bool v_all = false;
    int v_lo = -1, v_hi = -1;
    v_cmd->add_option("id", v_id, "check id (see --list)");
    v_cmd->add_flag("--all", v_all, "run every suite at default ranges");
    bool v_list = false;
    v_cmd->add_flag("--list", v_list, "list check ids");
    v_cmd->add_option("--n-lo", v_lo, "range start override");
    v_cmd->add_option("--n-hi", v_hi, "range end override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parse_int_list = [](const std::string& s) {
        std::vector<Int> out;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string::npos) comma = s.size();
            out.push_back(Int(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return out;
    };

    try {
        if (seq_cmd->parsed()) {
            if (!seq_identity.empty()) {
                auto id = identity_from_name(seq_identity);
                if (!id) {
                    std::cerr << "unknown identity: " << seq_identity << "\n";
                    return 2;
                }
                bool all_pass = true;
                json arr = json::array();
                for (int n = 1; n <= seq_n; ++n) {
                    IdentityResult r = check_identity(*id, n);
                    all_pass = all_pass && r.pass;
                    arr.push_back(json{{"n", n},
                                       {"status", r.pass ? "pass" : "fail"},
                                       {"lhs", to_string(r.lhs)},
                                       {"rhs", to_string(r.rhs)}});
                }
                std::cout << arr.dump(2) << "\n";
                return all_pass ? 0 : 1;
            }
            GhostSequences s(seq_n);
            json arr = json::array();
            for (int n = 0; n <= seq_n; ++n)
                arr.push_back(json{{"n", n},
                                   {"Q", to_string(s.Q(n))},
                                   {"P", to_string(s.P(n))},
                                   {"ell", to_string(s.ell(n))},
                                   {"t", to_string(s.t(n))},
                                   {"b", to_string(s.b(n))},
                                   {"mu", to_string(s.mu(n))}});
            std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (w_cmd->parsed()) {
            WeightSequence ws = weight_sequence(parse_rat(w_target));
            json blocks = json::array();
            for (auto& b : ws.blocks)
                blocks.push_back(json{{"value", to_string(b.first)}, {"run", to_string(b.second)}});
            json entries = json::array();
            for (const Int& x : ws.W) entries.push_back(to_string(x));
            std::cout << json{{"target", to_string(ws.target)},
                              {"length", ws.W.size()},
                              {"blocks", blocks},
                              {"W", entries}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (ap_cmd->parsed()) {
            Perturbed x = parse_perturbed(ap_target);
            Int maxden(ap_maxden);
            json conv = json::array();
            for (const Convergent& c : convergents(x, maxden))
                conv.push_back(json{{"value", to_string(c.value)}, {"even", c.even}});
            json best = json::array();
            if (x.eps != 0)
                for (const Rat& r : best_approx_below(x, maxden)) best.push_back(to_string(r));
            std::cout << json{{"target", to_string(x)},
                              {"convergents", conv},
                              {"best_below", best}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (caps_cmd->parsed()) {
            auto entries = cap_sequence(parse_rat(caps_a), parse_perturbed(caps_b), caps_k);
            json arr = json::array();
            for (long k = 0; k < static_cast<long>(entries.size()); ++k)
                arr.push_back(json{{"k", k},
                                   {"value", to_string(entries[k].value)},
                                   {"l", to_string(entries[k].l)},
                                   {"m", to_string(entries[k].m)}});
            std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (gr_cmd->parsed()) {
            OrbitSet s{Int(gr_m1), Int(gr_m2), parse_rat(gr_a), parse_perturbed(gr_b)};
            json out{{"gr", to_string(orbit_grading(s))}, {"action", to_string(s.action())}};
            if (gr_oracle) out["gr_lattice"] = to_string(orbit_grading_lattice(s));
            std::cout << out.dump(2) << "\n";
            if (gr_oracle && out["gr"] != out["gr_lattice"]) return 1;
            return 0;
        }
        if (p_cmd->parsed()) {
            Perturbed theta = parse_perturbed(p_theta);
            Int m(p_m);
            EndPartition ep = p_neg ? partition_neg(theta, m) : partition_pos(theta, m);
            json parts = json::array();
            for (const Int& a : ep.parts) parts.push_back(to_string(a));
            std::cout << json{{"theta", to_string(theta)}, {"m", to_string(m)},
                              {"sign", p_neg ? "neg" : "pos"}, {"parts", parts}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (ar_cmd->parsed()) {
            Perturbed theta = parse_perturbed(ar_theta);
            Int t(ar_t);
            std::cout << json{{"theta", to_string(theta)},
                              {"t", to_string(t)},
                              {"twice_area", to_string(twice_area_A(theta, t))},
                              {"kappa", to_string(kappa(theta, t))}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (ix_cmd->parsed()) {
            CurveData c;
            c.x = parse_perturbed(ix_x);
            c.k = ix_k;
            c.d = Int(ix_d);
            if (!ix_z.empty()) c.z = parse_int_list(ix_z);
            if (!ix_b1.empty()) c.ends_b1 = parse_int_list(ix_b1);
            if (!ix_b2.empty()) c.ends_b2 = parse_int_list(ix_b2);
            json out;
            if (ix_level == "X") {
                c.level = Level::cobordism_X;
                out["fredholm"] = to_string(fredholm_index_X(c));
                Int n1 = 0, n2 = 0;
                for (const Int& a : c.ends_b1) n1 += a;
                for (const Int& b : c.ends_b2) n2 += b;
                OrbitSet s{n1, n2, 1, c.x};
                out["ech"] = to_string(ech_index_X(c.d, s));
            } else {
                c.level = Level::blowup_E;
                Int n1 = 0, n2 = 0;
                for (const Int& a : c.ends_b1) n1 += a;
                for (const Int& b : c.ends_b2) n2 += b;
                OrbitSet s{n1, n2, 1, c.x};
                out["fredholm"] = to_string(fredholm_index_E(c));
                out["ech"] = to_string(ech_index_E(c, s));
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (cr_cmd->parsed()) {
            BlowupClass v = parse_blowup(cr_class);
            if (cr_merge) {
                int removed = 0;
                for (auto it = v.m.begin(); it != v.m.end() && removed < 2;)
                    if (*it == 1) {
                        it = v.m.erase(it);
                        ++removed;
                    } else {
                        ++it;
                    }
                if (removed != 2) {
                    std::cerr << "--merge-two-ones needs two unit multiplicities\n";
                    return 2;
                }
                v.m.push_back(2);
            }
            Int c1 = v.c1(), self = v.self_intersection();
            CremonaLog log = cremona_reduce(v);
            bool invariant = true;
            json steps = json::array();
            for (const CremonaStep& st : log.steps) {
                invariant = invariant && st.after.c1() == c1 &&
                            st.after.self_intersection() == self;
                steps.push_back(json{{"before", to_string(st.before)},
                                     {"after", to_string(st.after)}});
            }
            std::cout << json{{"input", to_string(v)},
                              {"c1", to_string(c1)},
                              {"self_intersection", to_string(self)},
                              {"moves", steps},
                              {"reduced", to_string(log.reduced)},
                              {"terminated", log.terminated},
                              {"invariants_preserved", invariant}}
                             .dump(2)
                      << "\n";
            return invariant && log.terminated ? 0 : 1;
        }
        if (v_cmd->parsed()) {
            if (v_list) {
                for (const std::string& id : check_ids()) std::cout << id << "\n";
                return 0;
            }
            if (!v_all && v_id.empty()) {
                std::cerr << "verify: give a check id or --all\n";
                return 2;
            }
            std::vector<VerificationReport> reports =
                run_checks(v_all ? "all" : v_id, v_lo, v_hi);
            emit_reports(reports, format);
            for (const auto& r : reports)
                if (!r.pass) return 1;
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
