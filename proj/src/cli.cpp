#include "pf/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>

#include "pf/finitegl.hpp"
#include "pf/json_io.hpp"

namespace pf {

namespace {

json to_json_scalar_impl(const PadicScalar& s) {
    json j;
    j["p"] = s.p();
    j["prec"] = s.precision();
    if (s.is_zero_like()) {
        j["zero"] = true;
        if (!s.is_exact_zero()) j["cap"] = s.valuation_bound();
    } else {
        j["val"] = s.valuation();
        j["unit"] = std::to_string(s.unit());
    }
    return j;
}

} // namespace

json to_json(const PadicScalar& s) { return to_json_scalar_impl(s); }

PadicScalar scalar_from_json(const json& j) {
    std::int64_t p = j.at("p").get<std::int64_t>();
    int prec = j.value("prec", kDefaultPrecision);
    if (j.value("zero", false)) {
        if (j.contains("cap")) return PadicScalar::zero_to(p, j["cap"].get<std::int64_t>(), prec);
        return PadicScalar::exact_zero(p, prec);
    }
    std::int64_t unit = std::stoll(j.at("unit").get<std::string>());
    return PadicScalar::from_unit(p, j.at("val").get<std::int64_t>(), unit, prec);
}

json to_json(const PadicMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

PadicMatrix matrix_from_json(const json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    if (!rows || !cols) throw Error("matrix_from_json: empty");
    PadicScalar first = scalar_from_json(j[0][0]);
    PadicMatrix m(first.p(), rows, cols, first.precision());
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
    return m;
}

json to_json(const SquareClass& c) { return c.str(); }

json to_json(const DiagonalForm& f) {
    json j;
    j["q"] = f.k.q;
    json entries = json::array();
    for (const auto& e : f.entries)
        entries.push_back({{"val", e.val},
                           {"unit", e.unit == UnitClass::square ? "1" : "u"}});
    j["entries"] = entries;
    return j;
}

DiagonalForm form_from_json(const json& j) {
    DiagonalForm f{ResidueField(j.at("q").get<std::int64_t>()), {}};
    for (const auto& e : j.at("entries")) {
        std::string u = e.at("unit").get<std::string>();
        if (u != "1" && u != "u") throw Error("form_from_json: unit must be 1 or u");
        f.entries.push_back({e.at("val").get<std::int64_t>(),
                             u == "1" ? UnitClass::square : UnitClass::nonsquare});
    }
    return f;
}

json to_json(const FormInvariants& inv) {
    return {{"dim", inv.dim}, {"disc", inv.disc.str()}, {"hasse", inv.hasse}};
}

json to_json(const JordanType& jt) {
    json j = json::array();
    for (const auto& b : jt.blocks)
        j.push_back({{"a", b.a},
                     {"m", b.m},
                     {"eps", b.eps == UnitClass::square ? "1" : "eps0"}});
    return j;
}

JordanType jordan_from_json(const json& j) {
    JordanType jt;
    for (const auto& b : j) {
        std::string eps = b.at("eps").get<std::string>();
        jt.blocks.push_back({b.at("a").get<std::int64_t>(), b.at("m").get<int>(),
                             eps == "1" ? UnitClass::square : UnitClass::nonsquare});
    }
    return jt;
}

json to_json(const NormSubgroup& g) {
    json members = json::array();
    for (const auto& c : g.members) members.push_back(c.str());
    return {{"members", members}, {"order", g.order()}};
}

NormSubgroup normsubgroup_from_json(const json& j) {
    NormSubgroup g;
    for (const auto& s : j.at("members"))
        g.members.insert(SquareClass::parse(s.get<std::string>()));
    return g;
}

json to_json(const InvolutionOrbit& orb) {
    json members = json::array();
    for (const auto& mc : orb.memberMatrixClasses) members.push_back(to_json(mc));
    return {{"m", orb.m},
            {"splitType", to_string(orb.splitType)},
            {"memberMatrixClasses", members}};
}

json to_json(const DistinctionReport& rep) {
    json classes = json::array();
    for (const auto& v : rep.perClass)
        classes.push_back({{"splitType", to_string(v.cls.splitType)},
                           {"orbit", to_json(v.cls.orbit)},
                           {"distinguished", v.distinguished},
                           {"dim", v.dim},
                           {"matrixClassCount", v.matrixClassCount},
                           {"doubleCosets", v.doubleCosets}});
    return {{"case", to_string(rep.caseLabel)},
            {"centralSign", rep.centralSign},
            {"perClass", classes},
            {"totalDim", rep.totalDim}};
}

json to_json(const LemmaReport& rep) {
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back({{"lemma", c.lemma},
                         {"p", c.p},
                         {"e", c.e},
                         {"f", c.f},
                         {"m", c.m},
                         {"pass", c.pass},
                         {"detail", c.detail}});
    return {{"cases", cases}, {"allPass", rep.all_pass()}, {"failures", rep.failures()}};
}

json to_json(const EpsilonDescriptor& d) {
    json scalars = json::array();
    for (const auto& c : d.blockScalars) scalars.push_back(c.str());
    return {{"d", d.d},
            {"m", d.m},
            {"blockScalars", scalars},
            {"descriptor", d.str()},
            {"sideCondition", d.sideCondition},
            {"lastUnitFree", d.lastUnitFree}};
}

namespace {

std::string cell_of(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// flat text rendering: scalar fields as "key: value" lines, the first
// array-of-objects as an aligned column table
std::string render_table(const json& j) {
    std::ostringstream out;
    const json* tablePart = nullptr;
    std::string tableKey;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_array() && !it.value().empty() && it.value()[0].is_object()) {
            if (!tablePart || it.value().size() > tablePart->size()) {
                tablePart = &it.value();
                tableKey = it.key();
            }
            continue;
        }
        out << it.key() << ": " << cell_of(it.value()) << "\n";
    }
    if (tablePart) {
        std::vector<std::string> cols;
        for (auto it = (*tablePart)[0].begin(); it != (*tablePart)[0].end(); ++it)
            if (!it.value().is_structured()) cols.push_back(it.key());
        std::vector<std::size_t> width(cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : *tablePart) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::string cell = r.contains(cols[c]) ? cell_of(r[cols[c]]) : "";
                width[c] = std::max(width[c], cell.size());
                row.push_back(cell);
            }
            rows.push_back(row);
        }
        out << tableKey << ":\n";
        auto pad = [](const std::string& s, std::size_t w) {
            return s + std::string(w - s.size() + 2, ' ');
        };
        out << "  ";
        for (std::size_t c = 0; c < cols.size(); ++c) out << pad(cols[c], width[c]);
        out << "\n";
        for (const auto& row : rows) {
            out << "  ";
            for (std::size_t c = 0; c < cols.size(); ++c) out << pad(row[c], width[c]);
            out << "\n";
        }
    }
    return out.str();
}

int env_precision() {
    if (const char* env = std::getenv("FORMS_PRECISION")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return kDefaultPrecision;
}

SquareClass parse_disc(const std::string& s, const ResidueField& k) {
    if (s == "-1") return SquareClass::minus_one(k);  // sugar resolved via q mod 4
    return SquareClass::parse(s);
}

void validate_rep_params(std::int64_t q, int d, int m, int e, int f) {
    ResidueField k(q);
    if (e < 1 || f < 1 || d < 1 || m < 1) throw UsageError("parameters must be positive");
    if (e % k.p == 0) throw UsageError("not tame: p divides e");
    int t = e * f;
    if (d % t != 0) throw UsageError("[T:F] = e*f must divide d");
    std::int64_t wild = d / t;
    while (wild % k.p == 0) wild /= k.p;
    if (wild != 1) throw UsageError("d/(e*f) must be a power of p");
}

json distinction_json(std::int64_t q, int d, int m, int e, int f, int sign) {
    ResidueField k(q);
    ReprInvariants rep(m * d, d, m, TameExtension(e, f, k), sign);
    DistinctionReport out = distinguishedClasses(rep);
    json j = to_json(out);
    j["tauSplitOrbitCount"] = tauSplitOrbitCount(rep);
    json reps = json::array();
    for (const auto& v : out.perClass) {
        if (!v.distinguished) continue;
        json r;
        r["splitType"] = to_string(v.cls.splitType);
        json descs = json::array();
        for (const auto& dsc : epsilonZeroRepresentatives(rep, v.cls))
            descs.push_back(to_json(dsc));
        r["representatives"] = descs;
        reps.push_back(r);
    }
    j["epsilonRepresentatives"] = reps;
    return j;
}

json finite_check_json(std::int64_t q, bool& all_ok) {
    Gl2 G(q);
    const Gf& F = G.field();
    Mat2 gram1{1, 0, 0, 1};
    Mat2 gram2{1, 0, 0, F.nonsquare()};
    std::int64_t L = q * q - 1;
    json rows = json::array();
    all_ok = true;
    std::set<std::int64_t> seen;
    for (std::int64_t k = 1; k < L; ++k) {
        if ((k * q) % L == k) continue;  // singular
        std::int64_t orbitKey = std::min(k, (k * q) % L);
        if (!seen.insert(orbitKey).second) continue;
        FiniteCuspidal rho = cuspidalCharacter(G, k);
        for (const Mat2& gram : {gram1, gram2}) {
            FiniteOrthogonalGroup H = orthogonalGroup(G, gram);
            auto [triv, det] = canonicalQuadraticCharacters(G, H);
            int ci = 0;
            for (const auto& chi : {triv, det}) {
                int dim = homDimension(G, rho, H, chi);
                bool criterion = (rho.central_sign() == chiAtMinusOne(G, H, chi));
                bool ok = (dim == (criterion ? 1 : 0));
                if (dim != 0) ok = ok && tauSplitTorusWitness(G, H).has_value();
                all_ok = all_ok && ok;
                rows.push_back({{"thetaOrbit", orbitKey},
                                {"gram", H.is_split() ? "split" : "nonsplit"},
                                {"chi", ci == 0 ? "1" : "det"},
                                {"dim", dim},
                                {"criterion", criterion},
                                {"ok", ok}});
                ++ci;
            }
        }
    }
    return {{"q", q}, {"table", rows}, {"allPass", all_ok}};
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact invariants of symmetric forms over p-adic fields and the "
                 "orthogonal-distinction decision procedure"};
    app.require_subcommand(1);
    app.fallthrough();  // --out / --format may follow the subcommand

    std::string out_file, format = "json";
    app.add_option("--out", out_file, "write JSON output to FILE");
    app.add_option("--format", format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));

    std::int64_t q = 3, p = 3;
    int e = 1, f = 1, m = 1, d = 1, hasse = 1, sign = 1;
    std::string a_str, b_str, disc_str, entries_str, grid = "small";
    bool emit_matrices = false;

    auto* c_hil = app.add_subcommand("hilbert", "Hilbert symbol of two square classes");
    c_hil->add_option("--q", q)->required();
    c_hil->add_option("--a", a_str)->required();
    c_hil->add_option("--b", b_str)->required();

    auto* c_cls = app.add_subcommand("classify", "conjugacy class of the orthogonal group O(eps)");
    c_cls->add_option("--q", q)->required();
    c_cls->add_option("--m", m)->required();
    c_cls->add_option("--disc", disc_str)->required();
    c_cls->add_option("--hasse", hasse)->required();

    auto* c_can = app.add_subcommand("canonical", "GL(o)-canonical form of a diagonal form");
    c_can->add_option("--q", q)->required();
    c_can->add_option("--entries", entries_str,
                      "comma list val:unit with unit 1|u, e.g. 1:u,0:1")->required();

    auto* c_nrm = app.add_subcommand("norm-group", "norm square-class image of a tame extension");
    c_nrm->add_option("--q", q)->required();
    c_nrm->add_option("--e", e)->required();
    c_nrm->add_option("--f", f)->required();

    auto* c_emb = app.add_subcommand("embed", "J-symmetric embedding of a tame tower");
    c_emb->add_option("--p", p)->required();
    c_emb->add_option("--e", e)->required();
    c_emb->add_option("--f", f)->required();
    c_emb->add_flag("--emit-matrices", emit_matrices);

    auto* c_dis = app.add_subcommand("distinguish", "distinction report for one representation");
    c_dis->add_option("--q", q)->required();
    c_dis->add_option("--d", d)->required();
    c_dis->add_option("--m", m)->required();
    c_dis->add_option("--e", e)->required();
    c_dis->add_option("--f", f)->required();
    c_dis->add_option("--central-sign", sign)->required();

    auto* c_swp = app.add_subcommand("sweep", "distinction atlas over the default grid");
    c_swp->add_option("--grid", grid);

    auto* c_lem = app.add_subcommand("verify-lemmas", "Hasse-lemma verification harness");
    c_lem->add_option("--grid", grid);

    auto* c_fin = app.add_subcommand("finite-check", "finite GL2 distinction criterion");
    c_fin->add_option("--q", q)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& ex) {
        return {1, std::string("usage error: ") + ex.what()};
    }

    int prec = env_precision();
    json out;
    int code = 0;
    try {
        if (c_hil->parsed()) {
            ResidueField k(q);
            out = {{"value", hilbert(SquareClass::parse(a_str), SquareClass::parse(b_str), k)}};
        } else if (c_cls->parsed()) {
            ResidueField k(q);
            if (hasse != 1 && hasse != -1) throw UsageError("hasse must be +1 or -1");
            SquareClass dsc = parse_disc(disc_str, k);
            auto repf = representative(m, dsc, hasse, k);
            if (!repf) return {1, "NotRealizable: no form with these invariants"};
            OrthogonalClass oc = classify(*repf);
            out = {{"splitType", to_string(oc.splitType)}, {"orbit", to_json(oc.orbit)}};
        } else if (c_can->parsed()) {
            DiagonalForm frm{ResidueField(q), {}};
            std::size_t pos = 0;
            while (pos < entries_str.size()) {
                std::size_t comma = entries_str.find(',', pos);
                std::string tok = entries_str.substr(pos, comma == std::string::npos
                                                              ? std::string::npos
                                                              : comma - pos);
                std::size_t colon = tok.find(':');
                if (colon == std::string::npos) throw UsageError("entries: expected val:unit");
                std::string unit = tok.substr(colon + 1);
                if (unit != "1" && unit != "u") throw UsageError("entries: unit must be 1 or u");
                frm.entries.push_back({std::stoll(tok.substr(0, colon)),
                                       unit == "1" ? UnitClass::square : UnitClass::nonsquare});
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (frm.entries.empty()) throw UsageError("entries: empty");
            out = {{"jordanType", to_json(canonicalForm(frm))},
                   {"invariants", to_json(invariants(frm))}};
        } else if (c_nrm->parsed()) {
            ResidueField k(q);
            out = to_json(normSquareClassImage(TameExtension(e, f, k)));
        } else if (c_emb->parsed()) {
            TameTower tower(e, f, p, prec);
            SymmetricEmbedding emb(tower);
            out = {{"p", p}, {"e", e}, {"f", f}, {"d", tower.d()},
                   {"chosenClass", emb.chosen_class().str()}};
            PadicMatrix Mz = emb.image(tower.zeta());
            PadicMatrix Mw = emb.image(tower.uniformizer());
            std::int64_t cap = prec / 2;
            out["persymmetric"] = emb.is_persymmetric(Mz, cap) && emb.is_persymmetric(Mw, cap);
            if (emit_matrices) {
                out["zeta"] = to_json(Mz);
                out["uniformizer"] = to_json(Mw);
            }
        } else if (c_dis->parsed()) {
            if (sign != 1 && sign != -1) throw UsageError("central-sign must be +1 or -1");
            validate_rep_params(q, d, m, e, f);
            out = distinction_json(q, d, m, e, f, sign);
        } else if (c_swp->parsed()) {
            json atlas = json::array();
            for (std::int64_t qq : {3, 5, 9}) {
                ResidueField k(qq);
                for (int dd = 1; dd <= 8; ++dd)
                    for (int mm = 1; mm <= 4; ++mm)
                        for (int ee = 1; ee <= dd; ++ee) {
                            if (ee % k.p == 0) continue;
                            for (int ff = 1; ee * ff <= dd; ++ff) {
                                int t = ee * ff;
                                if (dd % t != 0) continue;
                                std::int64_t wild = dd / t;
                                while (wild % k.p == 0) wild /= k.p;
                                if (wild != 1) continue;
                                for (int ss : {1, -1}) {
                                    json row = distinction_json(qq, dd, mm, ee, ff, ss);
                                    row["q"] = qq; row["d"] = dd; row["m"] = mm;
                                    row["e"] = ee; row["f"] = ff;
                                    atlas.push_back(row);
                                }
                            }
                        }
            }
            out = {{"grid", "default"}, {"rows", atlas}};
        } else if (c_lem->parsed()) {
            LemmaGrid g;
            if (grid == "small") { g.max_ef = 4; g.max_m = 3; }
            else if (grid == "full") { g.max_ef = 6; g.max_m = 4; }
            else throw UsageError("grid must be small or full");
            g.precision = prec;
            LemmaReport rep = verifyHasseLemmas(g);
            out = to_json(rep);
            if (!rep.all_pass()) code = 2;
        } else if (c_fin->parsed()) {
            if (q > 9) throw UsageError("finite-check: q <= 9 supported");
            bool ok = true;
            out = finite_check_json(q, ok);
            if (!ok) code = 2;
        }
    } catch (const UsageError& ex) {
        return {1, std::string("usage error: ") + ex.what()};
    } catch (const Error& ex) {
        return {1, std::string("error: ") + ex.what()};
    }

    std::string text = (format == "table") ? render_table(out) : out.dump(2);
    if (!out_file.empty()) {
        std::ofstream of(out_file);
        of << out.dump(2) << "\n";  // files always get JSON
    }
    return {code, text};
}

} // namespace pf
