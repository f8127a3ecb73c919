#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nanoword/fuzz.hpp"
#include "nanoword/genus.hpp"
#include "nanoword/render.hpp"
#include "nanoword/word_io.hpp"

using namespace nanoword;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EtaleWord load_word(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_word(buf.str());
    } catch (const ParseError& e) {
        throw InputError(path + ":" + std::to_string(e.line) + ": " + e.what());
    }
}

std::map<std::string, Rational> parse_assignments(const std::string& text,
                                                  const std::string& what) {
    std::map<std::string, Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("bad " + what + " assignment '" + item + "' (want name=value)");
        try {
            out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
        } catch (const std::exception& e) {
            throw InputError("bad " + what + " value in '" + item + "': " + e.what());
        }
    }
    return out;
}

BaseFamily family_from(const std::string& s) {
    if (s == "K") return BaseFamily::K;
    if (s == "L") return BaseFamily::L;
    if (s == "KF") return BaseFamily::KF;
    throw InputError("unknown family '" + s + "' (want K, L or KF)");
}

ClassFlavor flavor_from(const std::string& s) {
    if (s == "plain") return ClassFlavor::plain;
    if (s == "marked") return ClassFlavor::marked;
    if (s == "front") return ClassFlavor::front;
    throw InputError("unknown flavor '" + s + "'");
}

std::uint64_t effective_seed(std::uint64_t seed) {
    if (const char* env = std::getenv("NANOWORD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InputError("bad NANOWORD_SEED value");
        }
    }
    return seed;
}

// A fully specialized value prints as a bare rational; symbolic values
// print as the expression JSON (json format) or the compact string (tsv).
std::string render_value(const ParamExpr& e, const std::string& format) {
    if (e.is_constant() && e.constant().terms().size() <= 1) {
        bool plain = e.constant().is_zero() ||
                     e.constant().terms().begin()->first == RingElem::Monomial{0, 0};
        if (plain) return e.constant().constant_value().str();
    }
    return format == "json" ? expr_to_json(e).dump() : e.str();
}

std::vector<std::string> accepted_params(const std::string& preset_name) {
    if (preset_name == "J+" || preset_name == "J-" || preset_name == "St") return {};
    if (preset_name == "J+3") return degree3_params(Degree3Kind::j_plus_3);
    if (preset_name == "St3") return degree3_params(Degree3Kind::st_3);
    return preset(preset_name).params;
}

ParamExpr compute_value(const std::string& preset_name, const EtaleWord& w,
                        const std::map<std::string, Rational>& params,
                        const std::map<std::string, Rational>& ring_vals) {
    std::vector<std::string> accepted = accepted_params(preset_name);
    for (const auto& [name, v] : params) {
        if (std::find(accepted.begin(), accepted.end(), name) == accepted.end())
            throw InputError("parameter '" + name + "' is not accepted by " + preset_name);
        (void)v;
    }
    ParamExpr value;
    if (preset_name == "J+" || preset_name == "J-" || preset_name == "St") {
        ArnoldTriple t = arnold(w);
        value = ParamExpr(preset_name == "J+" ? t.j_plus
                          : preset_name == "J-" ? t.j_minus
                                                : t.st);
    } else if (preset_name == "J+3" || preset_name == "St3") {
        Degree3Kind kind = preset_name == "J+3" ? Degree3Kind::j_plus_3 : Degree3Kind::st_3;
        value = arnold_degree3(w, kind);
    } else {
        value = evaluate(preset(preset_name), w);
    }
    if (!ring_vals.empty()) {
        auto ap = ring_vals.find("a+");
        auto am = ring_vals.find("a-");
        if (ap == ring_vals.end() || am == ring_vals.end())
            throw InputError("--ring needs both a+ and a-");
        value = specialize_ring(value, ap->second, am->second);
    }
    if (!params.empty()) {
        std::map<std::string, ParamExpr> subs;
        for (const auto& [name, v] : params) subs.emplace(name, ParamExpr(v));
        value = expr_substitute(value, subs);
    }
    return value;
}

int run(int argc, char** argv) {
    CLI::App app{"nanoword: curve and front invariants from Gauss-code words"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string params_text, ring_text;
    std::uint64_t seed = 1;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--params", params_text, "comma list, e.g. s=-1/2,t=1");
    app.add_option("--ring", ring_text, "ring values, e.g. a+=-1,a-=-1");
    app.add_option("--seed", seed, "overridden by NANOWORD_SEED");

    // compute
    auto* compute = app.add_subcommand("compute", "evaluate an invariant preset on words");
    std::vector<std::string> compute_files;
    std::string preset_name;
    compute->add_option("files", compute_files)->required()->expected(-1);
    compute->add_option("--preset", preset_name)->required();

    // arnold
    auto* arnold_cmd = app.add_subcommand("arnold", "basic invariant triple (J+, J-, St)");
    std::vector<std::string> arnold_files;
    arnold_cmd->add_option("files", arnold_files)->required()->expected(-1);

    // genus
    auto* genus_cmd = app.add_subcommand("genus", "minimal carrier-surface genus");
    std::string genus_file;
    bool genus_json = false;
    genus_cmd->add_option("file", genus_file)->required();
    genus_cmd->add_flag("--json", genus_json);

    // base
    auto* base_cmd = app.add_subcommand("base", "emit a base curve word");
    std::string base_family;
    long long base_index = 0;
    int base_cusps = 0;
    base_cmd->add_option("--family", base_family)->required();
    base_cmd->add_option("--index", base_index)->required();
    base_cmd->add_option("--cusps", base_cusps);

    // expand-class
    auto* expand = app.add_subcommand("expand-class", "signed cyclic-class expansion");
    std::string expand_pattern, expand_flavor = "plain";
    expand->add_option("pattern", expand_pattern)->required();
    expand->add_option("--flavor", expand_flavor);

    // moves list / apply
    auto* moves_cmd = app.add_subcommand("moves", "enumerate or apply elementary moves");
    auto* moves_list = moves_cmd->add_subcommand("list", "list applicable sites");
    std::string moves_file, moves_kind, moves_dir = "+";
    moves_list->add_option("file", moves_file)->required();
    moves_list->add_option("--kind", moves_kind);
    moves_list->add_option("--dir", moves_dir)->check(CLI::IsMember({"+", "-"}));
    auto* moves_apply = moves_cmd->add_subcommand("apply", "apply one site");
    std::string apply_file, apply_kind, apply_dir = "+";
    int apply_site = 0;
    moves_apply->add_option("file", apply_file)->required();
    moves_apply->add_option("--kind", apply_kind)->required();
    moves_apply->add_option("--dir", apply_dir)->check(CLI::IsMember({"+", "-"}));
    moves_apply->add_option("--site", apply_site)->required();

    // fuzz
    auto* fuzz_cmd = app.add_subcommand("fuzz", "certify invariance laws along random walks");
    std::string fuzz_family = "K", fuzz_check = "deltas";
    long long fuzz_index = 1;
    int fuzz_cusps = 0, fuzz_steps = 200, fuzz_trials = 100;
    fuzz_cmd->add_option("--family", fuzz_family);
    fuzz_cmd->add_option("--index", fuzz_index);
    fuzz_cmd->add_option("--cusps", fuzz_cusps);
    fuzz_cmd->add_option("--steps", fuzz_steps);
    fuzz_cmd->add_option("--trials", fuzz_trials);
    fuzz_cmd->add_option("--check", fuzz_check)
        ->check(CLI::IsMember({"deltas", "symmetry", "basepoint"}));

    // table
    auto* table_cmd = app.add_subcommand("table", "base-curve invariant table");
    std::string table_family = "K";
    long long table_min = 0, table_max = 4;
    int table_cusps = 0;
    table_cmd->add_option("--family", table_family);
    table_cmd->add_option("--min", table_min);
    table_cmd->add_option("--max", table_max);
    table_cmd->add_option("--cusps", table_cusps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    auto params = parse_assignments(params_text, "parameter");
    auto ring_vals = parse_assignments(ring_text, "ring");
    seed = effective_seed(seed);

    if (*compute) {
        for (const std::string& path : compute_files) {
            EtaleWord w = load_word(path);
            ParamExpr value = compute_value(preset_name, w, params, ring_vals);
            if (format == "tsv")
                std::cout << path << "\t" << preset_name << "\t" << render_value(value, format)
                          << "\n";
            else
                std::cout << render_value(value, format) << "\n";
        }
        return kExitOk;
    }

    if (*arnold_cmd) {
        for (const std::string& path : arnold_files) {
            ArnoldTriple t = arnold(load_word(path));
            if (format == "tsv")
                std::cout << path << "\t" << t.j_plus.str() << "\t" << t.j_minus.str() << "\t"
                          << t.st.str() << "\n";
            else
                std::cout << nlohmann::json{{"J+", t.j_plus.str()},
                                            {"J-", t.j_minus.str()},
                                            {"St", t.st.str()}}
                                 .dump()
                          << "\n";
        }
        return kExitOk;
    }

    if (*genus_cmd) {
        GenusResult g = genus_detail(load_word(genus_file));
        if (genus_json)
            std::cout << nlohmann::json{{"genus", g.genus},
                                        {"planar", g.genus == 0},
                                        {"faces", g.faces}}
                             .dump()
                      << "\n";
        else
            std::cout << g.genus << "\n";
        return kExitOk;
    }

    if (*base_cmd) {
        std::cout << serialize_word(base_curve(family_from(base_family), base_index, base_cusps));
        return kExitOk;
    }

    if (*expand) {
        CyclicClass c = cyclic_class(parse_pattern(expand_pattern), flavor_from(expand_flavor));
        if (c.is_zero()) {
            std::cout << "0\n";
            return kExitOk;
        }
        std::string out;
        for (const auto& [coeff, pat] : c.terms) {
            if (!out.empty()) out += ' ';
            out += coeff > 0 ? '+' : '-';
            out += pattern_str(pat);
        }
        std::cout << out << "\n";
        return kExitOk;
    }

    if (*moves_list) {
        EtaleWord w = load_word(moves_file);
        std::vector<MoveKind> kinds;
        if (!moves_kind.empty()) {
            auto k = move_kind_from_name(moves_kind);
            if (!k) throw InputError("unknown move kind '" + moves_kind + "'");
            kinds.push_back(*k);
        } else {
            for (MoveKind k : {MoveKind::II_plus, MoveKind::II_minus, MoveKind::III,
                               MoveKind::SII_plus, MoveKind::SII_minus, MoveKind::DII_plus,
                               MoveKind::DII_minus, MoveKind::PI_plus, MoveKind::PI_minus,
                               MoveKind::LAMBDA})
                kinds.push_back(k);
        }
        MoveDir dir = moves_dir == "+" ? MoveDir::positive : MoveDir::negative;
        for (MoveKind k : kinds) {
            auto sites = enumerate_sites(w, k, dir);
            for (size_t i = 0; i < sites.size(); ++i)
                std::cout << move_kind_name(k) << " " << i << ": " << sites[i].describe()
                          << "\n";
        }
        return kExitOk;
    }

    if (*moves_apply) {
        EtaleWord w = load_word(apply_file);
        auto k = move_kind_from_name(apply_kind);
        if (!k) throw InputError("unknown move kind '" + apply_kind + "'");
        MoveDir dir = apply_dir == "+" ? MoveDir::positive : MoveDir::negative;
        auto sites = enumerate_sites(w, *k, dir);
        if (apply_site < 0 || apply_site >= static_cast<int>(sites.size()))
            throw InputError("site index out of range (found " +
                             std::to_string(sites.size()) + " sites)");
        std::cout << serialize_word(apply_move(w, sites[apply_site]));
        return kExitOk;
    }

    if (*fuzz_cmd) {
        BaseFamily family = family_from(fuzz_family);
        FuzzReport report;
        if (fuzz_check == "deltas")
            report = check_delta_laws(family, fuzz_index, fuzz_cusps, fuzz_trials, fuzz_steps,
                                      seed);
        else if (fuzz_check == "symmetry")
            report = check_symmetries(fuzz_trials, fuzz_steps, seed);
        else
            report = check_basepoint_invariance(family, fuzz_index, fuzz_cusps, fuzz_trials,
                                                fuzz_steps, seed);
        std::cout << "check=" << fuzz_check << " seed=" << seed << " checks=" << report.checks
                  << " result=" << (report.ok ? "ok" : "FAIL") << "\n";
        if (!report.ok) {
            std::cout << report.failure << "\n";
            return kExitViolation;
        }
        return kExitOk;
    }

    if (*table_cmd) {
        BaseFamily family = family_from(table_family);
        std::cout << "curve\ti\tmu\tn\tJ+\tJ-\tSt\tdegree3\n";
        for (long long i = table_min; i <= table_max; ++i) {
            if (family != BaseFamily::L && i < 0) continue;
            EtaleWord w = base_curve(family, i, family == BaseFamily::KF ? table_cusps : 0);
            CountSummary cs = counts(w);
            ArnoldTriple t = arnold(w);
            std::string label = table_family + std::to_string(i);
            if (family == BaseFamily::KF) label += "," + std::to_string(table_cusps);
            const char* deg3 = family == BaseFamily::K    ? "CI3"
                               : family == BaseFamily::L  ? "LI3"
                                                          : "FI3";
            std::cout << label << "\t" << cs.i << "\t" << cs.mu << "\t" << cs.n << "\t"
                      << t.j_plus.str() << "\t" << t.j_minus.str() << "\t" << t.st.str() << "\t"
                      << evaluate(preset(deg3), w).str() << "\n";
        }
        return kExitOk;
    }

    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
