// arrcensus: command-line front end for the arrcensus library.
//
// Every command prints a run report (JSON by default). Exit status is 0 on
// success, 1 on a domain error (JSON error object on stderr), 2 on bad usage.

#include "arrcensus/affine_geometry.hpp"
#include "arrcensus/chambers.hpp"
#include "arrcensus/charpoly.hpp"
#include "arrcensus/concurrency.hpp"
#include "arrcensus/discriminantal.hpp"
#include "arrcensus/errors.hpp"
#include "arrcensus/io.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

using namespace arrcensus;

namespace {

constexpr const char* kVersion = "0.1.0";

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    template <typename F>
    auto timed(const std::string& phase, F&& body) {
        const auto start = std::chrono::steady_clock::now();
        if constexpr (std::is_void_v<decltype(body())>) {
            body();
            record(phase, start);
        } else {
            auto value = body();
            record(phase, start);
            return value;
        }
    }

    void input(const std::string& name, std::string_view bytes) { inputs_[name] = fnv1a_hex(bytes); }
    void seed(std::uint64_t s) { seed_ = s; }

    Json finish(Json result) const {
        Json out;
        out["command"] = command_;
        out["inputs"] = inputs_;
        out["timings_ms"] = timings_;
        out["result"] = std::move(result);
        out["version"] = kVersion;
        out["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
        return out;
    }

private:
    void record(const std::string& phase, std::chrono::steady_clock::time_point start) {
        const auto elapsed = std::chrono::steady_clock::now() - start;
        timings_[phase] = std::chrono::duration<double, std::milli>(elapsed).count();
    }

    std::string command_;
    Json inputs_ = Json::object();
    Json timings_ = Json::object();
    std::optional<std::uint64_t> seed_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json load_json(Report& report, const std::string& name, const std::string& path) {
    const std::string text = read_file(path);
    report.input(name, text);
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

NormalSystem load_ns(Report& report, const std::string& path) {
    return normal_system_from_json(load_json(report, "ns", path));
}

RationalVector parse_b(Report& report, const std::string& name, const std::string& text) {
    report.input(name, text);
    return parse_rational_list(text);
}

Json sets_to_json(const std::vector<LineSet>& sets) {
    Json out = Json::array();
    for (LineSet s : sets) out.push_back(line_set_to_json(s));
    return out;
}

// "123,145" (single-digit labels) or "1.2.13,4.5.6".
std::vector<LineSet> parse_members(const std::string& text) {
    std::vector<LineSet> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        LineSet s;
        if (token.find('.') != std::string::npos) {
            std::stringstream parts(token);
            std::string part;
            while (std::getline(parts, part, '.')) {
                if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
                    throw ParseError("bad subset \"" + token + "\"");
                }
                const int e = std::stoi(part);
                if (e < 1 || e > 32) throw ParseError("line index out of range in \"" + token + "\"");
                s = s.with(e);
            }
        } else {
            for (char c : token) {
                if (c < '1' || c > '9') throw ParseError("bad subset \"" + token + "\"");
                s = s.with(c - '0');
            }
        }
        out.push_back(s);
    }
    return out;
}

// "3..6" or "6".
std::pair<int, int> parse_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw ParseError("bad range \"" + text + "\"");
    }
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_primitive(); })) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ';';
            out += scalar_text(e);
        }
        return out;
    }
    return v.dump();
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void print_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
    out << '\n';
}

void emit(const Json& report, const std::string& format) {
    const Json& result = report["result"];
    if (format == "json") {
        std::cout << report.dump(2) << '\n';
        return;
    }
    if (format == "text") {
        for (const auto& [key, value] : result.items()) std::cout << key << ": " << scalar_text(value) << '\n';
        return;
    }
    // csv: a "rows" table prints as is, anything else as a single record.
    if (result.contains("rows") && result["rows"].is_array() && !result["rows"].empty() &&
        result["rows"][0].is_object()) {
        std::vector<std::string> header;
        for (const auto& [key, value] : result["rows"][0].items()) header.push_back(key);
        print_csv_row(std::cout, header);
        for (const auto& row : result["rows"]) {
            std::vector<std::string> cells;
            for (const auto& key : header) cells.push_back(row.contains(key) ? scalar_text(row[key]) : "");
            print_csv_row(std::cout, cells);
        }
        return;
    }
    std::vector<std::string> header;
    std::vector<std::string> cells;
    for (const auto& [key, value] : result.items()) {
        header.push_back(key);
        cells.push_back(scalar_text(value));
    }
    print_csv_row(std::cout, header);
    print_csv_row(std::cout, cells);
}

class VerificationFailed : public Error {
public:
    explicit VerificationFailed(const std::string& message) : Error("VerificationFailed", message) {}
};

struct Options {
    std::string format = "json";
    unsigned threads = 1;
    std::string ns;
    std::string out;
    std::string b;
    std::string b1;
    std::string b2;
    std::string catalog;
    std::string method = "poset";
    std::string mode = "concurrency-free";
    std::string members;
    std::string collection;
    std::string n_range;
    int n = 0;
    int m = 0;
    int bound = 10;
    std::uint64_t seed = 0;
    std::uint64_t max_subsets = std::uint64_t{1} << 22;
    std::size_t max_chambers = 10000;
    std::size_t max_flats = std::size_t{1} << 20;
    std::size_t max_families = std::size_t{1} << 22;
    std::size_t pairs = 500;
};

CharPolynomial charpoly_by(const std::string& method, const NormalSystem& ns, const Options& o) {
    if (method == "whitney") return whitney_charpoly(build_discriminantal(ns), {o.max_subsets, o.threads});
    if (method == "poset") return poset_charpoly(build_discriminantal(ns), {o.max_flats});
    return combinatorial_charpoly(ns.n(), ns.m(), {o.max_flats});
}

Json cmd_gen(Report& r, const Options& o) {
    r.seed(o.seed);
    const auto gen = r.timed("generate", [&] { return random_normal_system(o.n, o.m, o.seed, o.bound); });
    const Json ns = normal_system_to_json(gen.system);
    if (!o.out.empty()) write_json_file(o.out, ns);
    return {{"ns", ns}, {"rejections", gen.rejections}};
}

Json cmd_disc(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto da = r.timed("build", [&] { return build_discriminantal(ns); });
    Json out = discriminantal_to_json(da);
    out["common_intersection_dim"] = common_intersection_dim(da);
    return out;
}

Json cmd_charpoly(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto p = r.timed(o.method, [&] { return charpoly_by(o.method, ns, o); });
    Json out = charpoly_to_json(p);
    out["method"] = o.method;
    return out;
}

Json cmd_count(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto p = r.timed(o.method, [&] { return charpoly_by(o.method, ns, o); });
    return {{"polynomial", p.to_string()},
            {"regions", integer_to_json(zaslavsky_regions(p))},
            {"classes", integer_to_json(iso_class_count(p))},
            {"method", o.method}};
}

Json cmd_chambers(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto da = build_discriminantal(ns);
    const auto catalog = r.timed("enumerate", [&] { return enumerate_chambers(da, {o.max_chambers, o.threads}); });
    Json out = {{"chambers", catalog.size()}, {"classes", catalog.class_count()}};
    if (o.out.empty()) {
        out["catalog"] = catalog_to_json(catalog);
    } else {
        write_json_file(o.out, catalog_to_json(catalog));
        out["out"] = o.out;
    }
    return out;
}

Json cmd_classify(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto da = build_discriminantal(ns);
    const RationalVector b = parse_b(r, "b", o.b);
    const ChamberCatalog catalog = o.catalog.empty()
                                       ? r.timed("enumerate", [&] { return enumerate_chambers(da, {o.max_chambers, o.threads}); })
                                       : catalog_from_json(load_json(r, "catalog", o.catalog));
    const auto verdict = classify_b(da, catalog, b);
    if (const auto* wall = std::get_if<OnWall>(&verdict)) {
        return {{"on_wall", true}, {"signs", wall->signs}, {"vanishing", sets_to_json(wall->vanishing)}};
    }
    const auto& c = std::get<Classified>(verdict);
    return {{"on_wall", false}, {"signs", c.signs}, {"class", c.class_id}};
}

Json cmd_check_cf(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto v = r.timed("check", [&] { return is_concurrency_free(ns, {o.max_families}); });
    Json out = {{"free", v.free}, {"families_checked", v.families_checked}};
    if (v.witness) {
        out["witness"] = collection_to_json(*v.witness)["members"];
        out["witness_closure"] = collection_to_json(*v.witness_closure)["members"];
        out["combinatorial_rank"] = v.combinatorial_rank;
        out["matrix_rank"] = v.matrix_rank;
    }
    return out;
}

Json cmd_closure(Report& r, const Options& o) {
    SubsetCollection d = [&] {
        if (!o.collection.empty()) return collection_from_json(load_json(r, "collection", o.collection));
        r.input("members", o.members);
        if (o.m < 1 || o.n <= o.m || o.n > 32) throw ShapeError("need 1 <= m < n <= 32");
        return SubsetCollection::of(o.n, o.m, parse_members(o.members));
    }();
    const auto trace = r.timed("closure", [&] { return concurrency_closure_traced(d); });
    Json orders = Json::array();
    for (const auto& c : concurrency_orders(trace.closure)) {
        orders.push_back({{"lines", line_set_to_json(c.indices)}, {"order", c.order}});
    }
    Json out = {{"input_closed", trace.adding_passes == 0},
                {"closure", collection_to_json(trace.closure)["members"]},
                {"passes", trace.passes},
                {"adding_passes", trace.adding_passes},
                {"orders", orders},
                {"base", collection_to_json(base_collection(trace.closure))["members"]},
                {"combinatorial_rank", combinatorial_rank(trace.closure)}};
    if (!o.ns.empty()) {
        const auto ns = load_ns(r, o.ns);
        out["matrix_rank"] = subset_rank(build_discriminantal(ns), trace.closure);
    }
    return out;
}

Json census_json(const RegionCensus& c) {
    return {{"total", c.total}, {"bounded", c.bounded}, {"unbounded", c.unbounded}};
}

Json cmd_regions(Report& r, const Options& o) {
    const auto arr = arrangement_from_b(load_ns(r, o.ns), parse_b(r, "b", o.b));
    const auto regions = r.timed("regions", [&] { return affine_regions(arr); });
    RegionCensus census;
    Json list = Json::array();
    for (const auto& region : regions) {
        std::string signs;
        for (Sign s : region.signs) signs += sign_char(s);
        list.push_back({{"signs", signs},
                        {"bounded", region.bounded},
                        {"facets", region.facets},
                        {"witness", vector_to_json(region.witness)}});
        ++census.total;
        if (region.bounded) ++census.bounded;
    }
    census.unbounded = census.total - census.bounded;
    const auto expected = generic_region_formulas(arr.n(), arr.m());
    return {{"census", census_json(census)},
            {"formulas", census_json(expected)},
            {"matches_formulas", census == expected},
            {"regions", list}};
}

Json cmd_signature(Report& r, const Options& o) {
    const auto arr = arrangement_from_b(load_ns(r, o.ns), parse_b(r, "b", o.b));
    const auto triangles = r.timed("signature", [&] { return simplex_signature(arr); });
    const auto ranks = angle_ranks(arr.system);
    std::vector<LineSet> by_angle;
    for (LineSet t : triangles) by_angle.push_back(relabel(t, ranks));
    std::sort(by_angle.begin(), by_angle.end());
    Json out = {{"triangles", sets_to_json(triangles)}, {"triangles_by_angle", sets_to_json(by_angle)},
                {"angle_ranks", ranks}};
    if (arr.n() == 4) {
        const auto sp = special_point(arr);
        out["special_point"] = line_set_to_json(sp.lines);
        out["special_point_by_angle"] = line_set_to_json(sp.by_angle);
    }
    return out;
}

Json cmd_iso(Report& r, const Options& o) {
    const auto ns = load_ns(r, o.ns);
    const auto a1 = arrangement_from_b(ns, parse_b(r, "b1", o.b1));
    const auto a2 = arrangement_from_b(ns, parse_b(r, "b2", o.b2));
    return {{"isomorphic", r.timed("compare", [&] { return are_isomorphic_trivial(a1, a2); })}};
}

Json cmd_catalog_verify(Report& r, const Options& o) {
    r.seed(o.seed);
    const auto ns = load_ns(r, o.ns);
    const auto da = build_discriminantal(ns);
    const auto catalog = r.timed("enumerate", [&] { return enumerate_chambers(da, {o.max_chambers, o.threads}); });
    const auto chi = r.timed("charpoly", [&] { return poset_charpoly(da, {o.max_flats}); });

    Json rows = Json::array();
    bool all = true;
    auto check = [&](const std::string& name, bool pass, const std::string& detail) {
        rows.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
        all = all && pass;
    };

    check("zaslavsky", Integer(catalog.size()) == zaslavsky_regions(chi),
          std::to_string(catalog.size()) + " chambers, " + zaslavsky_regions(chi).str() + " predicted");
    check("classes", Integer(catalog.class_count()) == iso_class_count(chi),
          std::to_string(catalog.class_count()) + " classes");

    std::size_t bad_witness = 0;
    for (const auto& c : catalog.chambers()) {
        if (sign_vector_at(da, c.witness) != c.signs) ++bad_witness;
    }
    check("witnesses", bad_witness == 0, std::to_string(bad_witness) + " witnesses off their chamber");

    // Subscript-preserving isomorphism agrees with class ids.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t total = catalog.size();
    if (total * total <= o.pairs) {
        for (std::size_t i = 0; i < total; ++i)
            for (std::size_t j = 0; j < total; ++j) pairs.emplace_back(i, j);
    } else {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, total - 1);
        for (std::size_t k = 0; k < o.pairs; ++k) {
            const std::size_t i = pick(rng);
            // Every other pair shares a class so both outcomes are exercised.
            const std::size_t j = (k % 2 == 0) ? catalog.antipode(i) : pick(rng);
            pairs.emplace_back(i, j);
        }
    }
    std::size_t mismatches = 0;
    r.timed("isomorphism", [&] {
        for (const auto& [i, j] : pairs) {
            const bool iso = are_isomorphic_trivial(arrangement_from_b(ns, catalog[i].witness),
                                                    arrangement_from_b(ns, catalog[j].witness));
            if (iso != (catalog[i].class_id == catalog[j].class_id)) ++mismatches;
        }
    });
    check("isomorphism", mismatches == 0,
          std::to_string(pairs.size()) + " pairs, " + std::to_string(mismatches) + " mismatches");

    std::size_t edges = 0;
    std::size_t swap_failures = 0;
    r.timed("swap", [&] {
        for (const auto& e : adjacency(da, catalog)) {
            ++edges;
            if (!swap_check(ns, da, catalog, e.a, e.b).holds) ++swap_failures;
        }
    });
    check("swap", swap_failures == 0,
          std::to_string(edges) + " edges, " + std::to_string(swap_failures) + " failures");

    if (!all) {
        std::cout << r.finish({{"pass", false}, {"rows", rows}}).dump(2) << '\n';
        throw VerificationFailed("catalog verification failed");
    }
    return {{"pass", true}, {"rows", rows}};
}

Json cmd_census(Report& r, const Options& o) {
    const auto [lo, hi] = parse_range(o.n_range);
    Json rows = Json::array();
    auto add_row = [&](int n, int m, const CharPolynomial& p) {
        rows.push_back({{"n", n},
                        {"m", m},
                        {"coefficients", charpoly_to_json(p)["coefficients"]},
                        {"cones", integer_to_json(zaslavsky_regions(p))},
                        {"classes", integer_to_json(iso_class_count(p))}});
    };
    if (o.mode == "ns-file") {
        const auto ns = load_ns(r, o.ns);
        add_row(ns.n(), ns.m(), r.timed("poset", [&] { return poset_charpoly(build_discriminantal(ns), {o.max_flats}); }));
    } else {
        const int m = o.m > 0 ? o.m : 2;
        if (lo <= m || hi < lo || hi > 32) throw ShapeError("need m < n_lo <= n_hi");
        for (int n = lo; n <= hi; ++n) {
            add_row(n, m, r.timed("n=" + std::to_string(n), [&] { return combinatorial_charpoly(n, m, {o.max_flats}); }));
        }
    }
    return {{"mode", o.mode}, {"rows", rows}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discriminantal arrangements of normal systems: counts, chambers and classes"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", o.threads, "Worker threads")->envname("ARRCENSUS_THREADS")->check(CLI::Range(1u, 256u));
    app.set_version_flag("--version", kVersion);

    auto ns_opt = [&](CLI::App* sub) { sub->add_option("--ns", o.ns, "Normal system JSON")->required(); };

    auto* gen = app.add_subcommand("gen", "Generate a random integer normal system");
    gen->add_option("--n", o.n)->required();
    gen->add_option("--m", o.m)->required();
    gen->add_option("--seed", o.seed);
    gen->add_option("--bound", o.bound, "Entries drawn from [-bound, bound]");
    gen->add_option("--out", o.out, "Write the system here");

    auto* disc = app.add_subcommand("disc", "Discriminantal normals");
    ns_opt(disc);

    auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial");
    ns_opt(charpoly);
    charpoly->add_option("--method", o.method)->check(CLI::IsMember({"whitney", "poset", "combinatorial"}));
    charpoly->add_option("--max-subsets", o.max_subsets);
    charpoly->add_option("--max-flats", o.max_flats);

    auto* count = app.add_subcommand("count", "Cone and class counts");
    ns_opt(count);
    count->add_option("--method", o.method)->check(CLI::IsMember({"whitney", "poset", "combinatorial"}));
    count->add_option("--max-subsets", o.max_subsets);
    count->add_option("--max-flats", o.max_flats);

    auto* chambers = app.add_subcommand("chambers", "Enumerate chambers with witnesses");
    ns_opt(chambers);
    chambers->add_option("--out", o.out, "Write the catalog here");
    chambers->add_option("--max-chambers", o.max_chambers);

    auto* classify = app.add_subcommand("classify", "Chamber and class of a constant vector b");
    ns_opt(classify);
    classify->add_option("--b", o.b, "Comma separated rationals")->required();
    classify->add_option("--catalog", o.catalog, "Catalog JSON (enumerated when absent)");
    classify->add_option("--max-chambers", o.max_chambers);

    auto* check_cf = app.add_subcommand("check-cf", "Concurrency freeness");
    ns_opt(check_cf);
    check_cf->add_option("--max-families", o.max_families);

    auto* closure = app.add_subcommand("closure", "Concurrency closure of a collection");
    closure->add_option("--n", o.n);
    closure->add_option("--m", o.m);
    closure->add_option("--members", o.members, "e.g. 123,145,245 or 1.2.13,4.5.6");
    closure->add_option("--collection", o.collection, "Collection JSON");
    closure->add_option("--ns", o.ns, "Also report the matrix rank for this system");

    auto* regions = app.add_subcommand("regions", "Region census of the arrangement for b");
    ns_opt(regions);
    regions->add_option("--b", o.b)->required();

    auto* signature = app.add_subcommand("signature", "Triangle set (and special point for n=4)");
    ns_opt(signature);
    signature->add_option("--b", o.b)->required();

    auto* iso = app.add_subcommand("iso", "Subscript-preserving isomorphism of two arrangements");
    ns_opt(iso);
    iso->add_option("--b1", o.b1)->required();
    iso->add_option("--b2", o.b2)->required();

    auto* verify = app.add_subcommand("catalog-verify", "Cross-check a catalog against every oracle");
    ns_opt(verify);
    verify->add_option("--pairs", o.pairs, "Witness pairs to compare (all pairs when they fit)");
    verify->add_option("--seed", o.seed);
    verify->add_option("--max-chambers", o.max_chambers);

    auto* census = app.add_subcommand("census", "Counts for a range of n");
    census->add_option("--n", o.n_range, "n or lo..hi")->required();
    census->add_option("--m", o.m, "Ambient dimension (default 2)");
    census->add_option("--mode", o.mode)->check(CLI::IsMember({"concurrency-free", "ns-file"}));
    census->add_option("--ns", o.ns);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::vector<std::pair<CLI::App*, Json (*)(Report&, const Options&)>> commands{
        {gen, cmd_gen},           {disc, cmd_disc},         {charpoly, cmd_charpoly},
        {count, cmd_count},       {chambers, cmd_chambers}, {classify, cmd_classify},
        {check_cf, cmd_check_cf}, {closure, cmd_closure},   {regions, cmd_regions},
        {signature, cmd_signature}, {iso, cmd_iso},         {verify, cmd_catalog_verify},
        {census, cmd_census},
    };
    for (const auto& [sub, run] : commands) {
        if (!sub->parsed()) continue;
        if (sub == closure && o.collection.empty() && o.members.empty()) {
            std::cerr << "closure needs --members with --n/--m, or --collection\n";
            return 2;
        }
        if (sub == census && o.mode == "ns-file" && o.ns.empty()) {
            std::cerr << "census --mode ns-file needs --ns\n";
            return 2;
        }
        Report report(sub->get_name());
        try {
            emit(report.finish(run(report, o)), o.format);
        } catch (const Error& e) {
            std::cerr << Json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
            return 1;
        }
        return 0;
    }
    return 2;
}
