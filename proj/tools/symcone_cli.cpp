// symcone: command-line front end.
// exit 0: verified / PSD / certified; 1: refuted (witness printed); 2: domain,
// hypothesis or usage error.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcone/boundary.hpp"
#include "symcone/certify.hpp"
#include "symcone/families.hpp"
#include "symcone/identities.hpp"
#include "symcone/psd.hpp"
#include "symcone/report.hpp"

using namespace symcone;
namespace rep = symcone::report;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kError = 2 };

struct Common {
    std::string format = "human";
    std::uint64_t seed = 20260101;
    std::string config;
    std::map<std::string, std::string> raw_params;  // --t, --u, ... and --param k=v
    std::vector<std::string> param_list;
};

// key=value lines; '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> out;
    if (path.empty()) return out;
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r\"");
            auto e = s.find_last_not_of(" \t\r\"");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw DomainError("config line without '=': " + line);
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::string s = text;
    for (char& ch : s)
        if (ch == '(' || ch == ')' || ch == '[' || ch == ']') ch = ' ';
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
        if (b == std::string::npos) throw DomainError("empty entry in list: " + text);
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    return out;
}

ParamMap collect_params(const Common& c) {
    ParamMap p;
    for (const auto& [k, v] : c.raw_params) p[k] = parse_rational(v);
    for (const auto& kv : c.param_list) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw DomainError("--param expects key=value, got " + kv);
        p[kv.substr(0, eq)] = parse_rational(kv.substr(eq + 1));
    }
    return p;
}

unsigned worker_count() {
    const char* env = std::getenv("SYMCONE_WORKERS");
    if (!env || !*env) return 1;
    try {
        long n = std::stol(env);
        return n <= 0 ? 0u : static_cast<unsigned>(n);
    } catch (...) {
        throw DomainError("SYMCONE_WORKERS must be an integer");
    }
}

void emit(const Common& c, const rep::Json& j, const std::string& human_text) {
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << human_text;
}

void need_format(const Common& c, bool csv_ok) {
    if (c.format == "csv" && !csv_ok) throw DomainError("--format csv is not available for this command");
}

FamilyId family_from(const std::string& text, const ParamMap& extra) {
    FamilyId id = parse_family(text);
    for (const auto& [k, v] : extra) id.params.emplace(k, v);
    return id;
}

// ---- verbs ------------------------------------------------------------------------

int verify_identity(const Common& c, const std::string& id, bool list, bool all, std::size_t samples) {
    need_format(c, true);
    if (list) {
        rep::Json j = rep::Json::array();
        std::string text;
        for (const auto& info : identity_catalog()) {
            j.push_back({{"id", info.id}, {"kind", info.kind}, {"params", info.params}, {"statement", info.statement}});
            std::string ps;
            for (const auto& p : info.params) ps += (ps.empty() ? "" : ",") + p;
            text += info.id + "  [" + ps + "]  " + info.statement + "\n";
        }
        if (c.format == "csv") {
            std::cout << "id,kind,params\n";
            for (const auto& info : identity_catalog()) {
                std::string ps;
                for (const auto& p : info.params) ps += (ps.empty() ? "" : ";") + p;
                std::cout << info.id << ',' << info.kind << ',' << ps << "\n";
            }
        } else {
            emit(c, j, text);
        }
        return kOk;
    }
    ParamMap params = collect_params(c);
    std::vector<std::string> ids;
    if (all) ids = identity_ids();
    else if (!id.empty()) ids = {id};
    else throw DomainError("verify-identity needs --id, --all or --list");

    // explicit point: every parameter of the identity given
    if (!all) {
        const auto& info = identity_info(id);
        bool explicit_point = !info.params.empty();
        for (const auto& k : info.params) explicit_point = explicit_point && params.count(k);
        if (explicit_point || info.params.empty()) {
            IdentitySample s = check_identity(id, params);
            if (c.format == "csv") {
                std::cout << "id,holds,detail\n" << id << ',' << (s.holds ? "true" : "false") << ",\"" << s.detail << "\"\n";
            } else {
                emit(c, rep::identity_sample(id, s), rep::human(id, s));
            }
            return s.holds ? kOk : kRefuted;
        }
        if (!params.empty()) throw DomainError("give all of the identity's parameters, or none for a random sweep");
    }
    auto reports = sweep_identities(ids, samples, c.seed, worker_count());
    bool ok = true;
    rep::Json j = rep::Json::array();
    std::string text;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        j.push_back(rep::identity_report(r));
        text += rep::human(r);
    }
    if (c.format == "csv") {
        std::cout << "id,samples,passed,rejected,ok\n";
        for (const auto& r : reports)
            std::cout << r.id << ',' << r.samples << ',' << r.passed << ',' << r.rejected << ','
                      << (r.ok() ? "true" : "false") << "\n";
    } else {
        emit(c, j, text);
    }
    return ok ? kOk : kRefuted;
}

int psd_check_verb(const Common& c, const std::string& family, const std::string& point) {
    need_format(c, false);
    if (family.empty()) throw DomainError("psd-check needs --family");
    FamilyId id = family_from(family, collect_params(c));
    HomogeneousForm f = build(id);
    if (!point.empty()) {
        auto z = parse_list(point);
        if (static_cast<int>(z.size()) != f.nvars())
            throw DomainError("point needs " + std::to_string(f.nvars()) + " coordinates");
        Rational value = f.evaluate(z);
        rep::Json j = {{"family", id.to_string()}, {"point", rep::vector(z)}, {"value", rep::rational(value)},
                       {"negative", value < 0}};
        emit(c, j,
             id.to_string() + " at " + to_string(z) + " = " + to_string(value) +
                 (value < 0 ? "  (negative: not PSD)\n" : "\n"));
        return value < 0 ? kRefuted : kOk;
    }
    PsdVerdict v;
    if (id.name == "g_tu") v = psd_gtu(id.param("t"), id.param("u"));
    else if (id.name == "f_uw") v = psd_fuw(id.param("u"), id.param("v"), id.param("w"));
    else v = psd_check(f);
    rep::Json j = rep::psd(v);
    j["family"] = id.to_string();
    emit(c, j, id.to_string() + "\n" + rep::human(v));
    return v.psd() ? kOk : kRefuted;
}

void list_specs(const Common& c, const std::vector<std::string>& kinds) {
    rep::Json j = rep::Json::array();
    std::string text;
    for (const auto& s : spec_catalog()) {
        if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end()) continue;
        j.push_back({{"id", s.id}, {"kind", s.kind}, {"params", s.params}, {"description", s.description}});
        std::string ps;
        for (const auto& p : s.params) ps += (ps.empty() ? "" : ",") + p;
        text += s.id + "  [" + ps + "]  " + s.description + "\n";
    }
    emit(c, j, text);
}

int certify_verb(const Common& c, const std::string& spec, bool list, bool with_matrix) {
    need_format(c, false);
    if (list) {
        list_specs(c, {"extremal", "full-cone"});
        return kOk;
    }
    if (spec.empty()) throw DomainError("certify-extremal needs --spec (see --list)");
    ParamMap p = collect_params(c);
    const auto& info = spec_info(spec);
    ExtremalityCertificate cert;
    if (info.kind == "extremal") cert = certify_catalog(spec, p);
    else if (info.kind == "full-cone") cert = certify_extremal_full_cone(spec, p);
    else throw DomainError(spec + " is an SOS obstruction; use sos-obstruction");
    emit(c, rep::certificate(cert, with_matrix), rep::human(cert));
    return cert.certified() ? kOk : kRefuted;
}

int sos_verb(const Common& c, const std::string& spec, bool list, bool with_matrix) {
    need_format(c, false);
    if (list) {
        list_specs(c, {"sos"});
        return kOk;
    }
    if (spec.empty()) throw DomainError("sos-obstruction needs --spec (see --list)");
    SosObstruction s = sos_catalog(spec, collect_params(c));
    emit(c, rep::sos(s, with_matrix), rep::human(s));
    return s.conclusion == SosConclusion::NOT_SOS ? kOk : kRefuted;
}

int discriminant_verb(const Common& c, const std::string& which, const std::string& coords, const std::string& family) {
    need_format(c, true);
    std::vector<Rational> p;
    std::string label;
    if (!coords.empty()) {
        p = parse_list(coords);
        label = to_string(p);
    } else if (!family.empty()) {
        FamilyId id = family_from(family, collect_params(c));
        auto bc = family_coords(id);
        if (!bc || bc->space != Space::H35s) throw DomainError(id.name + " is not a symmetric quintic family");
        p = bc->coords;
        label = id.to_string();
    } else {
        throw DomainError("discriminant needs --coords or --family");
    }
    if (p.size() != 5) throw DomainError("expected 5 coordinates (p0..p4)");
    std::vector<DiscId> ids;
    if (which.empty() || which == "all") ids = all_disc_ids();
    else ids = {parse_disc_id(which)};
    rep::Json j;
    j["input"] = label;
    j["coords"] = rep::vector(p);
    rep::Json vals = rep::Json::object();
    std::string text = label + "\n", csv_head = "input", csv_row = "\"" + label + "\"";
    for (DiscId d : ids) {
        std::string value;
        try {
            value = to_string(eval_discriminant(d, p));
        } catch (const DomainError&) {
            if (ids.size() == 1) throw;
            value = "undefined";
        }
        vals[to_string(d)] = value;
        text += "  disc" + to_string(d) + " = " + value + "\n";
        csv_head += ",disc" + to_string(d);
        csv_row += "," + value;
    }
    j["disc"] = vals;
    if (c.format == "csv") std::cout << csv_head << "\n" << csv_row << "\n";
    else emit(c, j, text);
    return kOk;
}

int cross_section_verb(const Common& c, const std::string& t_text, int samples) {
    need_format(c, true);
    if (t_text.empty()) throw DomainError("cross-section needs --t");
    Rational t = parse_rational(t_text);
    if (t < 0) throw DomainError("cross-section needs t >= 0");
    if (samples < 1) throw DomainError("--samples must be positive");
    CrossSection cs = cross_section(t, samples);
    bool ok = true;
    for (const auto& a : cs.arcs)
        for (const auto& s : a.samples) ok = ok && s.on_section && s.psd;
    for (const auto& v : cs.vertices) ok = ok && v.on_section && v.psd;
    if (c.format == "csv") std::cout << atlas_csv(rep::cross_section_rows(cs));
    else emit(c, rep::cross_section(cs), rep::human(cs));
    return ok ? kOk : kRefuted;
}

int atlas_verb(const Common& c, const std::map<std::string, std::string>& cfg, const std::string& t_values,
               int u_samples) {
    need_format(c, true);
    AtlasGrid grid = AtlasGrid::standard();
    if (auto it = cfg.find("atlas.t_values"); it != cfg.end()) grid.t_values = parse_list(it->second);
    if (auto it = cfg.find("atlas.u_samples"); it != cfg.end()) grid.u_samples = std::stoi(it->second);
    if (!t_values.empty()) grid.t_values = parse_list(t_values);
    if (u_samples > 0) grid.u_samples = u_samples;
    auto rows = extremal_atlas(grid);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.some_disc_vanishes() && r.psd == PsdResult::PSD;
    if (c.format == "csv") std::cout << atlas_csv(rows);
    else if (c.format == "json") std::cout << rep::atlas(rows).dump(2) << "\n";
    else {
        std::ostringstream out;
        for (const auto& r : rows) {
            out << r.family << (r.t ? " t=" + to_string(*r.t) : "") << (r.u ? " u=" + to_string(*r.u) : "") << "  "
                << to_string(r.coords) << "  psd=" << to_string(r.psd) << "  extremal="
                << (r.extremal_certified ? (*r.extremal_certified ? "certified" : "not certified") : "n/a");
            out << "  vanishing:";
            static const char* names[] = {"P1", "P2", "P3", "C0", "Cb"};
            for (std::size_t i = 0; i < r.disc.size(); ++i)
                if (r.disc[i] && *r.disc[i] == 0) out << " " << names[i];
            out << "\n";
        }
        out << rows.size() << " rows\n";
        std::cout << out.str();
    }
    return ok ? kOk : kRefuted;
}

// p^F transcription checksum and the printed constants at (-1/2, -1/3, 1, 9/10)
int selftest_verb(const Common& c, std::size_t samples) {
    need_format(c, false);
    rep::Json j;
    std::string text;
    bool ok = true;
    auto R = [](long n, long d = 1) { return make_rational(n, d); };
    std::vector<Rational> z = {R(-1, 2), R(-1, 3), R(1)};
    Rational w = R(9, 10);
    struct Const {
        std::string name;
        Rational got, want;
    };
    std::vector<Const> consts = {
        {"p0F", pF(z, w)[0], R(2838188587, 147622500)},
        {"delta1", delta(1, z, w), R(722, 135)},
        {"delta2", delta(2, z, w), R(1279, 225)},
        {"delta4", delta(4, z, w), R(255823, 24300)},
        {"xi", xi(z, w), R(461719, 911250)},
    };
    rep::Json cj = rep::Json::array();
    for (const auto& k : consts) {
        bool m = k.got == k.want;
        ok = ok && m;
        cj.push_back({{"name", k.name}, {"value", rep::rational(k.got)}, {"printed", rep::rational(k.want)}, {"matched", m}});
        text += (m ? "ok   " : "FAIL ") + k.name + " = " + to_string(k.got) + "\n";
    }
    j["constants"] = cj;
    IdentityReport r = sweep_identity("prop3.5-vanishing", samples, c.seed);
    ok = ok && r.ok();
    j["pF_checksum"] = rep::identity_report(r);
    text += rep::human(r);
    PsdVerdict v = psd_fuw(R(-1, 2), R(-1, 3), R(9, 10));
    ok = ok && v.psd();
    j["f_psd"] = to_string(v.result);
    text += std::string(v.psd() ? "ok   " : "FAIL ") + "f_uw(-1/2,-1/3,9/10) is " + to_string(v.result) + "\n";
    j["ok"] = ok;
    emit(c, j, text);
    return ok ? kOk : kRefuted;
}

void on_fpe(int) {
    const char msg[] = "error: division by zero in exact arithmetic (parameter outside the domain)\n";
    std::fwrite(msg, 1, sizeof msg - 1, stderr);
    std::_Exit(kError);
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGFPE, on_fpe);
    CLI::App app{"Exact symmetric-form cone toolkit: PSD checks, extremality and SOS certificates, identities"};
    app.require_subcommand(1);
    Common common;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "human, json or csv")
            ->check(CLI::IsMember({"human", "json", "csv"}));
        sub->add_option("--seed", common.seed, "seed for random parameter sweeps");
        sub->add_option("--config", common.config, "key=value file overriding sample counts and grids");
        for (const char* k : {"t", "u", "v", "w", "p", "q", "a", "b", "c", "x", "m", "k", "p0", "p1", "p2", "p3", "p4"}) {
            std::string key = k;
            sub->add_option_function<std::string>(
                "--" + key, [&common, key](const std::string& v) { common.raw_params[key] = v; },
                "parameter " + key + " (int or int/int)");
        }
        sub->add_option("--param", common.param_list, "extra parameter key=value")->take_all();
    };

    auto* vi = app.add_subcommand("verify-identity", "check a cataloged identity at a point or over random points");
    std::string vi_id;
    bool vi_list = false, vi_all = false;
    std::size_t vi_samples = 50;
    vi->add_option("--id", vi_id, "identity id");
    vi->add_flag("--list", vi_list, "list the catalog");
    vi->add_flag("--all", vi_all, "sweep the whole catalog");
    vi->add_option("--samples", vi_samples, "random points per identity");
    add_common(vi);

    auto* pc = app.add_subcommand("psd-check", "decide PSD for a family member, or evaluate it at a point");
    std::string pc_family, pc_point;
    pc->add_option("--family", pc_family, "name or name(k=v,...)");
    pc->add_option("--point", pc_point, "comma separated rational point");
    add_common(pc);

    auto* ce = app.add_subcommand("certify-extremal", "rank/kernel certificate for a characterisation system");
    std::string ce_spec;
    bool ce_list = false, ce_matrix = false;
    ce->add_option("--spec", ce_spec, "catalog id");
    ce->add_flag("--list", ce_list, "list systems");
    ce->add_flag("--matrix", ce_matrix, "include the matrix in JSON");
    add_common(ce);

    auto* so = app.add_subcommand("sos-obstruction", "zero-set obstruction to a sum of squares");
    std::string so_spec;
    bool so_list = false, so_matrix = false;
    so->add_option("--spec", so_spec, "catalog id");
    so->add_flag("--list", so_list, "list systems");
    so->add_flag("--matrix", so_matrix, "include the matrix in JSON");
    add_common(so);

    auto* di = app.add_subcommand("discriminant", "boundary discriminants of a symmetric quintic");
    std::string di_id, di_coords, di_family;
    di->add_option("--id", di_id, "P1, P2, P3, C0, Cb or all");
    di->add_option("--coords", di_coords, "p0,p1,p2,p3,p4");
    di->add_option("--family", di_family, "quintic family member");
    add_common(di);

    auto* cs = app.add_subcommand("cross-section", "extremal arcs and vertices of the section through (t,1,1)");
    std::string cs_t;
    int cs_samples = 0;
    cs->add_option("--samples", cs_samples, "samples per arc");
    add_common(cs);

    auto* at = app.add_subcommand("extremal-atlas", "grid of extremal family members with discriminants");
    std::string at_t;
    int at_u = 0;
    at->add_option("--t-values", at_t, "comma separated t grid");
    at->add_option("--u-samples", at_u, "u samples per arc");
    add_common(at);

    auto* st = app.add_subcommand("selftest", "p^F checksum and the printed constants");
    std::size_t st_samples = 0;
    st->add_option("--samples", st_samples, "random points for the checksum");
    add_common(st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        auto cfg = read_config(common.config);
        auto cfg_size = [&](const std::string& key, std::size_t fallback) -> std::size_t {
            auto it = cfg.find(key);
            return it == cfg.end() ? fallback : static_cast<std::size_t>(std::stoul(it->second));
        };
        if (auto it = cfg.find("seed"); it != cfg.end() && !app.get_subcommands().front()->count("--seed"))
            common.seed = std::stoull(it->second);

        if (vi->parsed()) {
            if (!vi->count("--samples")) vi_samples = cfg_size("identity.samples", vi_samples);
            return verify_identity(common, vi_id, vi_list, vi_all, vi_samples);
        }
        if (pc->parsed()) return psd_check_verb(common, pc_family, pc_point);
        if (ce->parsed()) return certify_verb(common, ce_spec, ce_list, ce_matrix);
        if (so->parsed()) return sos_verb(common, so_spec, so_list, so_matrix);
        if (di->parsed()) return discriminant_verb(common, di_id, di_coords, di_family);
        if (cs->parsed()) {
            auto it = common.raw_params.find("t");
            if (it != common.raw_params.end()) cs_t = it->second;
            int n = cs_samples > 0 ? cs_samples : static_cast<int>(cfg_size("section.samples", 5));
            return cross_section_verb(common, cs_t, n);
        }
        if (at->parsed()) return atlas_verb(common, cfg, at_t, at_u);
        if (st->parsed()) return selftest_verb(common, st_samples > 0 ? st_samples : cfg_size("selftest.samples", 50));
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const MembershipError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: malformed number: " << e.what() << "\n";
        return kError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: number out of range: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
