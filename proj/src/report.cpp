#include "bredon/report.hpp"

#include <sstream>

#include "bredon/parallel.hpp"

namespace bredon {

using nlohmann::json;

Theorem parse_theorem(const std::string& name)
{
    if (name == "decomposition")
        return Theorem::Decomposition;
    if (name == "bredon")
        return Theorem::Bredon;
    if (name == "lemma34")
        return Theorem::CellIdentities;
    if (name == "acyclic")
        return Theorem::Acyclic;
    throw InputError("UnknownTheorem", "unknown theorem '" + name + "'");
}

std::string to_string(Theorem t)
{
    switch (t) {
    case Theorem::Decomposition:
        return "decomposition";
    case Theorem::Bredon:
        return "bredon";
    case Theorem::CellIdentities:
        return "lemma34";
    case Theorem::Acyclic:
        return "acyclic";
    }
    return "unknown";
}

namespace {

json int_json(const Int& v)
{
    if (v <= Int(INT64_MAX) && v >= Int(INT64_MIN))
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

std::string pad(const std::string& s, std::size_t w)
{
    return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

std::size_t label_width(const DimensionReport& r)
{
    std::size_t w = 4;
    for (const auto& e : r.entries)
        w = std::max(w, e.label.size() + 2);
    return w;
}

// One line per entry: label, then "n=k: group" for each nonzero degree.
void table_text(std::ostringstream& os, const DimensionReport& r, const std::string& what)
{
    const auto w = label_width(r);
    for (const auto& e : r.entries) {
        os << "  " << pad(e.label, w);
        if (e.nonzero.empty())
            os << "all zero";
        bool first = true;
        for (const auto& d : e.nonzero) {
            os << (first ? "" : "; ") << "n=" << d.n << " " << what << " = " << d.group.to_string();
            first = false;
        }
        os << "\n";
    }
}

const ClassEntry* witness_entry(const DimensionReport& r)
{
    if (!r.dimension)
        return nullptr;
    for (const auto& e : r.entries)
        if (e.max_degree() == r.dimension)
            return &e;
    return nullptr;
}

json witness_json(const DimensionReport& r)
{
    const auto* e = witness_entry(r);
    if (!e)
        return nullptr;
    for (const auto& d : e->nonzero)
        if (d.n == *r.dimension)
            return {{"label", e->label}, {"n", d.n}, {"group", group_json(d.group)}};
    return nullptr;
}

std::string dimension_text(const DimensionReport& r)
{
    return r.dimension ? std::to_string(*r.dimension) : "none";
}

void witness_text(std::ostringstream& os, const DimensionReport& r, const std::string& what)
{
    const auto* e = witness_entry(r);
    if (!e)
        return;
    for (const auto& d : e->nonzero)
        if (d.n == *r.dimension)
            os << "witness: " << e->label << " n=" << d.n << " " << what << " = " << d.group.to_string() << "\n";
}

json groups_json(const std::vector<CohomologyGroup>& gs)
{
    json out = json::array();
    for (const auto& g : gs)
        out.push_back(group_json(g));
    return out;
}

std::string groups_text(const std::vector<CohomologyGroup>& gs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < gs.size(); ++i)
        out += (i ? ", " : "") + gs[i].to_string();
    return out + "]";
}

json comparison_json(const std::vector<DegreeComparison>& cs)
{
    json out = json::array();
    for (const auto& c : cs)
        out.push_back({{"n", c.n}, {"left", group_json(c.left)}, {"right", group_json(c.right)}, {"match", c.match}});
    return out;
}

void comparison_text(std::ostringstream& os, const std::vector<DegreeComparison>& cs)
{
    for (const auto& c : cs)
        os << "    H^" << c.n << ": " << c.left.to_string() << " | " << c.right.to_string()
           << (c.match ? "" : "   MISMATCH") << "\n";
}

const char* pass(bool b)
{
    return b ? "pass" : "FAIL";
}

Development build_development(const InputDocument& doc, const RunOptions& opts)
{
    if (doc.mode != InputMode::FiniteDevelopment)
        throw InputError("WrongMode", "this command needs a finite_development input, got " + to_string(doc.mode));
    auto scog = to_complex(doc);
    DevelopOptions dopt;
    dopt.cap = opts.size_cap;
    return develop(scog, dopt);
}

}  // namespace

json group_json(const CohomologyGroup& g)
{
    json t = json::array();
    for (const auto& x : g.torsion)
        t.push_back(int_json(x));
    return {{"betti", g.betti}, {"torsion", t}, {"text", g.to_string()}};
}

json dimension_json(const DimensionReport& r)
{
    json table = json::array();
    for (const auto& e : r.entries) {
        json nz = json::array();
        for (const auto& d : e.nonzero)
            nz.push_back({{"n", d.n}, {"group", group_json(d.group)}});
        table.push_back({{"label", e.label}, {"members", e.members}, {"nonzero", nz}});
    }
    json out = {{"table", table}, {"witness", witness_json(r)}};
    out["dimension"] = r.dimension ? json(*r.dimension) : json(nullptr);
    return out;
}

json error_json(const std::string& kind, const std::string& message)
{
    return {{"error", {{"kind", kind}, {"message", message}}}};
}

Report run_cd(const InputDocument& doc, const RunOptions& opts)
{
    Report rep;
    DimensionReport dim;
    std::string formula;
    std::string what;
    if (doc.mode == InputMode::Coxeter || doc.mode == InputMode::GraphProduct) {
        dim = cd_building_formula(to_coxeter(doc), opts.jobs);
        formula = "max n : reduced H^{n-1}(K_{>J}) != 0";
        what = "reduced H^{n-1}(K_{>J})";
    } else {
        auto scog = to_complex(doc);
        if (scog.mode == CogMode::FiniteEmbedded)
            scog.group.enumerate(opts.size_cap);
        dim = cd_from_omega(scog.q, omega_partition(scog), opts.jobs);
        formula = "max n : H^n(K_Omega, K_{>Omega}) != 0";
        what = "H^n(K_Omega, K_{>Omega})";
    }
    rep.data = dimension_json(dim);
    rep.data["schema_version"] = 1;
    rep.data["command"] = "cd";
    rep.data["mode"] = to_string(doc.mode);
    rep.data["formula"] = formula;

    std::ostringstream os;
    os << "cd = " << dimension_text(dim) << "\n";
    os << "mode: " << to_string(doc.mode) << "\n";
    os << "formula: " << formula << "\n";
    witness_text(os, dim, what);
    os << "table:\n";
    table_text(os, dim, what);
    rep.text = os.str();
    return rep;
}

Report run_vcd(const InputDocument& doc, const RunOptions& opts)
{
    if (doc.mode != InputMode::Coxeter && doc.mode != InputMode::GraphProduct)
        throw InputError("WrongMode", "vcd needs a coxeter or graph_product input, got " + to_string(doc.mode));
    const auto m = to_coxeter(doc);
    const auto link = vcd_link_formula(m, opts.jobs);
    const auto building = cd_building_formula(m, opts.jobs);
    const auto cmp = compare_routes(m, opts.jobs);
    const bool agree = link.dimension == building.dimension && cmp.all_match();

    Report rep;
    rep.exit_code = agree ? exit_code::ok : exit_code::route_disagreement;
    rep.data["schema_version"] = 1;
    rep.data["command"] = "vcd";
    rep.data["mode"] = to_string(doc.mode);
    rep.data["dimension"] = link.dimension ? json(*link.dimension) : json(nullptr);
    rep.data["link_formula"] = dimension_json(link);
    rep.data["building_formula"] = dimension_json(building);
    rep.data["routes_agree"] = agree;
    rep.data["subdivision_match"] = cmp.subdivision_match;
    json rows = json::array();
    for (const auto& r : cmp.rows)
        rows.push_back({{"label", r.label},
                        {"building", groups_json(r.building)},
                        {"link", groups_json(r.link)},
                        {"match", r.match}});
    rep.data["comparison"] = rows;

    std::ostringstream os;
    os << "vcd = " << dimension_text(link) << "\n";
    os << "mode: " << to_string(doc.mode) << "\n";
    os << "link formula: " << dimension_text(link) << "\n";
    os << "building formula: " << dimension_text(building) << "\n";
    os << "routes agree: " << (agree ? "yes" : "NO") << "\n";
    os << "barycentric subdivision check: " << pass(cmp.subdivision_match) << "\n";
    os << "link route (reduced H^{n-1}(Lk(sigma_J, L))):\n";
    table_text(os, link, "reduced H^{n-1}");
    os << "building route (reduced H^{n-1}(K_{>J})):\n";
    table_text(os, building, "reduced H^{n-1}");
    os << "per-J reduced cohomology from degree -1, building | link:\n";
    for (const auto& r : cmp.rows)
        os << "  " << r.label << ": " << groups_text(r.building) << " | " << groups_text(r.link)
           << (r.match ? "" : "   MISMATCH") << "\n";
    rep.text = os.str();
    return rep;
}

Report run_verify(const InputDocument& doc, Theorem theorem, const RunOptions& opts)
{
    const auto dev = build_development(doc, opts);
    const auto m = dev.q().size();
    Report rep;
    rep.data["schema_version"] = 1;
    rep.data["command"] = "verify";
    rep.data["theorem"] = to_string(theorem);
    std::ostringstream os;
    os << "verify " << to_string(theorem) << "\n";
    bool all_ok = true;
    json rows = json::array();
    json failures = json::array();

    switch (theorem) {
    case Theorem::Decomposition: {
        std::vector<DecompositionReport> out(m);
        parallel_for(m, opts.jobs, [&](std::size_t j) { out[j] = verify_decomposition(dev, static_cast<std::uint32_t>(j)); });
        for (const auto& r : out) {
            all_ok = all_ok && r.ok();
            rows.push_back({{"label", r.label},
                            {"l_size", r.l_size},
                            {"degrees", comparison_json(r.degrees)},
                            {"cohomology_match", r.cohomology_match},
                            {"sing_rows_zero", r.sing_rows_zero},
                            {"basis_bijection", r.basis_bijection},
                            {"chain_map", r.chain_map},
                            {"well_defined", r.well_defined},
                            {"pass", r.ok()}});
            os << "  J=" << r.label << ": " << pass(r.ok()) << " (|L(J)| = " << r.l_size
               << ", bijection " << pass(r.basis_bijection) << ", chain map " << pass(r.chain_map)
               << ", sing rows " << pass(r.sing_rows_zero) << ", well defined " << pass(r.well_defined) << ")\n";
            os << "    fixed pair | direct sum over L(J)\n";
            comparison_text(os, r.degrees);
            for (const auto& c : r.degrees)
                if (!c.match)
                    failures.push_back({{"J", r.label}, {"n", c.n}});
            if (!(r.basis_bijection && r.chain_map && r.sing_rows_zero && r.well_defined))
                failures.push_back({{"J", r.label}, {"n", nullptr}});
        }
        break;
    }
    case Theorem::Bredon: {
        std::vector<BredonReport> out(m);
        parallel_for(m, opts.jobs, [&](std::size_t j) { out[j] = verify_bredon(dev, static_cast<std::uint32_t>(j)); });
        for (const auto& r : out) {
            all_ok = all_ok && r.ok();
            rows.push_back({{"label", r.label},
                            {"degrees", comparison_json(r.degrees)},
                            {"basis_counts_match", r.basis_counts_match},
                            {"pass", r.ok()}});
            os << "  J=" << r.label << ": " << pass(r.ok()) << " (basis counts " << pass(r.basis_counts_match)
               << ")\n";
            os << "    Bredon complex | fixed pair\n";
            comparison_text(os, r.degrees);
            for (const auto& c : r.degrees)
                if (!c.match)
                    failures.push_back({{"J", r.label}, {"n", c.n}});
            if (!r.basis_counts_match)
                failures.push_back({{"J", r.label}, {"n", nullptr}});
        }
        break;
    }
    case Theorem::CellIdentities: {
        std::vector<CellIdentityReport> out(m);
        parallel_for(m, opts.jobs, [&](std::size_t j) { out[j] = verify_cell_identities(dev, static_cast<std::uint32_t>(j)); });
        for (const auto& r : out) {
            all_ok = all_ok && r.ok();
            json members = json::array();
            os << "  J=" << r.label << ": " << pass(r.ok()) << " (" << r.rows.size() << " elements of L(J))\n";
            for (const auto& row : r.rows) {
                const auto g = dev.group().element(row.g).to_string();
                members.push_back({{"g", g}, {"union", row.union_ok}, {"intersection", row.intersection_ok}});
                if (!row.union_ok || !row.intersection_ok) {
                    os << "    g=" << g << ": union " << pass(row.union_ok) << ", intersection "
                       << pass(row.intersection_ok) << "\n";
                    failures.push_back({{"J", r.label}, {"g", g}});
                }
            }
            rows.push_back({{"label", r.label}, {"members", members}, {"pass", r.ok()}});
        }
        break;
    }
    case Theorem::Acyclic: {
        const auto r = check_acyclicity(dev);
        all_ok = r.ok();
        for (const auto& row : r.rows) {
            json nz = json::array();
            for (const auto& d : row.nonzero)
                nz.push_back({{"n", d.n}, {"group", group_json(d.group)}});
            rows.push_back({{"label", row.label},
                            {"subgroup_order", row.subgroup_order},
                            {"fixed_vertices", row.fixed_vertices},
                            {"nonzero", nz},
                            {"pass", row.nonzero.empty()}});
            os << "  H=" << row.label << " (order " << row.subgroup_order << ", " << row.fixed_vertices
               << " fixed vertices): " << pass(row.nonzero.empty());
            for (const auto& d : row.nonzero)
                os << "; reduced H^" << d.n << " = " << d.group.to_string();
            os << "\n";
            if (!row.nonzero.empty())
                failures.push_back({{"H", row.label}});
        }
        os << "  (acyclicity is necessary, not sufficient, for contractibility)\n";
        break;
    }
    }
    rep.data["results"] = rows;
    rep.data["failures"] = failures;
    rep.data["pass"] = all_ok;
    os << "result: " << (all_ok ? "pass" : "FAIL") << "\n";
    rep.text = os.str();
    rep.exit_code = all_ok ? exit_code::ok : exit_code::verify_mismatch;
    return rep;
}

Report run_develop(const InputDocument& doc, bool dump, const RunOptions& opts)
{
    const auto dev = build_development(doc, opts);
    const auto& x = dev.complex();
    const auto components = x.empty() ? 0 : reduced_cohomology(x, 0).betti + 1;

    Report rep;
    rep.data["schema_version"] = 1;
    rep.data["command"] = "develop";
    rep.data["group_order"] = dev.group().order();
    rep.data["f_vector"] = x.f_vector();
    rep.data["vertices"] = x.num_vertices();
    rep.data["edges"] = x.num_faces(1);
    rep.data["simplices"] = x.total_faces();
    rep.data["dimension"] = x.dimension();
    rep.data["connected_components"] = components;
    json orbits = json::array();
    std::ostringstream os;
    os << "development: " << x.num_vertices() << " vertices, " << x.num_faces(1) << " edges, " << x.total_faces()
       << " simplices\n";
    os << "group order: " << dev.group().order() << "\n";
    os << "f-vector:";
    for (auto f : x.f_vector())
        os << " " << f;
    os << "\n";
    os << "connected components: " << components << "\n";
    os << "vertex orbits (one per element of Q):\n";
    for (std::uint32_t j = 0; j < dev.q().size(); ++j) {
        json gens = json::array();
        std::string gtext;
        for (auto e : dev.local(j).elements)
            if (e != dev.group().identity()) {
                gens.push_back(dev.group().element(e).to_string());
            }
        orbits.push_back({{"label", dev.q().id(j)},
                          {"cosets", dev.num_cosets(j)},
                          {"stabilizer_order", dev.local(j).size()},
                          {"stabilizer_elements", gens}});
        os << "  " << dev.q().id(j) << ": " << dev.num_cosets(j) << " vertices, stabilizer order "
           << dev.local(j).size() << "\n";
    }
    rep.data["orbits"] = orbits;
    if (dump) {
        rep.data["vertex_ids"] = x.vertex_order();
        json faces = json::array();
        os << "faces:\n";
        for (int n = 0; n <= x.dimension(); ++n) {
            json level = json::array();
            for (const auto& s : x.faces(n)) {
                level.push_back(s);
                os << "  " << x.render(s) << "\n";
            }
            faces.push_back(level);
        }
        rep.data["faces"] = faces;
    }
    rep.text = os.str();
    return rep;
}

}  // namespace bredon
